//! Band factorizations for shifted lattice operators.
//!
//! Interior nodes in row-major order give `-Δ_h + diag(q) - λ` a half
//! bandwidth of `(N-1)^{n-1}`.  Real shifts below the spectrum keep the
//! matrix positive definite and use Cholesky; complex shifts use
//! symmetric LDLᵀ without pivoting, which is the standard factorization
//! for complex-shifted lattice Laplacians.  Both track a pivot-ratio
//! condition proxy so callers can reject near-singular shifts.

use num_complex::Complex64;

use crate::error::{Error, Result};

fn column_len(n: usize, half_bw: usize, j: usize) -> usize {
    (n - 1 - j).min(half_bw)
}

/// Cholesky factorization LLᵀ of a symmetric positive definite band matrix.
///
/// Storage is lower-band column major: entry `A[j + r, j]` lives at
/// `data[j * (half_bw + 1) + r]`.
pub struct BandedCholesky {
    n: usize,
    half_bw: usize,
    data: Vec<f64>,
    /// max pivot / min pivot of the factor diagonal (squared scale).
    pub cond_proxy: f64,
}

impl BandedCholesky {
    /// Factor in place. `data` must hold the lower band as described above.
    pub fn factor(n: usize, half_bw: usize, mut data: Vec<f64>) -> Result<Self> {
        let w = half_bw + 1;
        assert_eq!(data.len(), n * w);
        let mut dmin = f64::INFINITY;
        let mut dmax = 0.0f64;
        for j in 0..n {
            let len = column_len(n, half_bw, j);
            let djj = data[j * w];
            if !(djj > 0.0) || !djj.is_finite() {
                return Err(Error::SolveFailure(format!(
                    "non-positive pivot {djj:.3e} at column {j}; matrix not positive definite"
                )));
            }
            dmin = dmin.min(djj);
            dmax = dmax.max(djj);
            let ljj = djj.sqrt();
            data[j * w] = ljj;
            for t in 1..=len {
                data[j * w + t] /= ljj;
            }
            for ti in 1..=len {
                let i = j + ti;
                let split = i * w;
                let (left, right) = data.split_at_mut(split);
                let src = &left[j * w + ti..j * w + len + 1];
                let lij = src[0];
                if lij == 0.0 {
                    continue;
                }
                let dst = &mut right[..len - ti + 1];
                for t in 0..dst.len() {
                    dst[t] -= lij * src[t];
                }
            }
        }
        Ok(BandedCholesky { n, half_bw, data, cond_proxy: dmax / dmin })
    }

    pub fn solve_in_place(&self, x: &mut [f64]) {
        assert_eq!(x.len(), self.n);
        let w = self.half_bw + 1;
        // L y = x
        for j in 0..self.n {
            let len = column_len(self.n, self.half_bw, j);
            let xj = x[j] / self.data[j * w];
            x[j] = xj;
            for t in 1..=len {
                x[j + t] -= self.data[j * w + t] * xj;
            }
        }
        // Lᵀ x = y
        for j in (0..self.n).rev() {
            let len = column_len(self.n, self.half_bw, j);
            let mut acc = x[j];
            for t in 1..=len {
                acc -= self.data[j * w + t] * x[j + t];
            }
            x[j] = acc / self.data[j * w];
        }
    }

    /// Solve with a complex right-hand side by splitting real and imaginary parts.
    pub fn solve_complex_in_place(&self, x: &mut [Complex64]) {
        let mut re: Vec<f64> = x.iter().map(|z| z.re).collect();
        let mut im: Vec<f64> = x.iter().map(|z| z.im).collect();
        self.solve_in_place(&mut re);
        self.solve_in_place(&mut im);
        for (xi, (r, i)) in x.iter_mut().zip(re.into_iter().zip(im)) {
            *xi = Complex64::new(r, i);
        }
    }
}

/// LDLᵀ factorization (unit lower band L, diagonal D) of a complex
/// symmetric band matrix, without pivoting.
pub struct BandedLdlt {
    n: usize,
    half_bw: usize,
    data: Vec<Complex64>,
    pub cond_proxy: f64,
}

impl BandedLdlt {
    pub fn factor(n: usize, half_bw: usize, mut data: Vec<Complex64>) -> Result<Self> {
        let w = half_bw + 1;
        assert_eq!(data.len(), n * w);
        let mut scratch = vec![Complex64::ZERO; w];
        let mut dmin = f64::INFINITY;
        let mut dmax = 0.0f64;
        for j in 0..n {
            let len = column_len(n, half_bw, j);
            let d = data[j * w];
            let dn = d.norm();
            if dn == 0.0 || !dn.is_finite() {
                return Err(Error::SolveFailure(format!(
                    "zero pivot at column {j}; shifted matrix is singular"
                )));
            }
            dmin = dmin.min(dn);
            dmax = dmax.max(dn);
            scratch[..=len].copy_from_slice(&data[j * w..j * w + len + 1]);
            for t in 1..=len {
                data[j * w + t] /= d;
            }
            for ti in 1..=len {
                let vi = scratch[ti];
                if vi == Complex64::ZERO {
                    continue;
                }
                let i = j + ti;
                let split = i * w;
                let (left, right) = data.split_at_mut(split);
                let src = &left[j * w + ti..j * w + len + 1];
                let dst = &mut right[..len - ti + 1];
                for t in 0..dst.len() {
                    dst[t] -= src[t] * vi;
                }
            }
        }
        Ok(BandedLdlt { n, half_bw, data, cond_proxy: dmax / dmin })
    }

    pub fn solve_in_place(&self, x: &mut [Complex64]) {
        assert_eq!(x.len(), self.n);
        let w = self.half_bw + 1;
        for j in 0..self.n {
            let len = column_len(self.n, self.half_bw, j);
            let xj = x[j];
            if xj != Complex64::ZERO {
                for t in 1..=len {
                    x[j + t] -= self.data[j * w + t] * xj;
                }
            }
        }
        for j in 0..self.n {
            x[j] /= self.data[j * w];
        }
        for j in (0..self.n).rev() {
            let len = column_len(self.n, self.half_bw, j);
            let mut acc = x[j];
            for t in 1..=len {
                acc -= self.data[j * w + t] * x[j + t];
            }
            x[j] = acc;
        }
    }
}
