//! Sparse symmetric matrices in CSR form.

use num_complex::Complex64;
use rayon::prelude::*;

/// Square sparse matrix, compressed sparse rows, full (not triangular) storage.
#[derive(Debug, Clone)]
pub struct CsrMatrix {
    pub n: usize,
    pub row_ptr: Vec<usize>,
    pub col_idx: Vec<u32>,
    pub values: Vec<f64>,
}

impl CsrMatrix {
    /// Assemble from per-row (column, value) lists; columns must be sorted.
    pub fn from_rows(rows: Vec<Vec<(u32, f64)>>) -> Self {
        let n = rows.len();
        let mut row_ptr = Vec::with_capacity(n + 1);
        let mut col_idx = Vec::new();
        let mut values = Vec::new();
        row_ptr.push(0);
        for row in rows {
            debug_assert!(row.windows(2).all(|w| w[0].0 < w[1].0));
            for (c, v) in row {
                col_idx.push(c);
                values.push(v);
            }
            row_ptr.push(col_idx.len());
        }
        CsrMatrix { n, row_ptr, col_idx, values }
    }

    pub fn nnz(&self) -> usize {
        self.values.len()
    }

    fn row(&self, i: usize) -> (&[u32], &[f64]) {
        let lo = self.row_ptr[i];
        let hi = self.row_ptr[i + 1];
        (&self.col_idx[lo..hi], &self.values[lo..hi])
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        let (cols, vals) = self.row(i);
        match cols.binary_search(&(j as u32)) {
            Ok(k) => vals[k],
            Err(_) => 0.0,
        }
    }

    /// y = A x.  Parallel over rows; each row sum is sequential, so the
    /// result does not depend on the thread count.
    pub fn matvec(&self, x: &[f64], y: &mut [f64]) {
        assert_eq!(x.len(), self.n);
        assert_eq!(y.len(), self.n);
        y.par_iter_mut().enumerate().for_each(|(i, yi)| {
            let (cols, vals) = self.row(i);
            let mut acc = 0.0;
            for (c, v) in cols.iter().zip(vals) {
                acc += v * x[*c as usize];
            }
            *yi = acc;
        });
    }

    pub fn matvec_complex(&self, x: &[Complex64], y: &mut [Complex64]) {
        assert_eq!(x.len(), self.n);
        assert_eq!(y.len(), self.n);
        y.par_iter_mut().enumerate().for_each(|(i, yi)| {
            let (cols, vals) = self.row(i);
            let mut acc = Complex64::ZERO;
            for (c, v) in cols.iter().zip(vals) {
                acc += x[*c as usize] * *v;
            }
            *yi = acc;
        });
    }

    /// Exact structural symmetry check (entries compared bitwise).
    pub fn is_symmetric(&self) -> bool {
        for i in 0..self.n {
            let (cols, vals) = self.row(i);
            for (c, v) in cols.iter().zip(vals) {
                if self.get(*c as usize, i) != *v {
                    return false;
                }
            }
        }
        true
    }

    /// Row-wise Gershgorin lower bound on the spectrum.
    pub fn gershgorin_min(&self) -> f64 {
        let mut lo = f64::INFINITY;
        for i in 0..self.n {
            let (cols, vals) = self.row(i);
            let mut diag = 0.0;
            let mut off = 0.0;
            for (c, v) in cols.iter().zip(vals) {
                if *c as usize == i {
                    diag = *v;
                } else {
                    off += v.abs();
                }
            }
            lo = lo.min(diag - off);
        }
        lo
    }

    pub fn to_dense(&self) -> nalgebra::DMatrix<f64> {
        let mut m = nalgebra::DMatrix::zeros(self.n, self.n);
        for i in 0..self.n {
            let (cols, vals) = self.row(i);
            for (c, v) in cols.iter().zip(vals) {
                m[(i, *c as usize)] = *v;
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tridiag(n: usize) -> CsrMatrix {
        let rows = (0..n)
            .map(|i| {
                let mut r = Vec::new();
                if i > 0 {
                    r.push((i as u32 - 1, -1.0));
                }
                r.push((i as u32, 2.0));
                if i + 1 < n {
                    r.push((i as u32 + 1, -1.0));
                }
                r
            })
            .collect();
        CsrMatrix::from_rows(rows)
    }

    #[test]
    fn matvec_matches_dense() {
        let a = tridiag(7);
        let d = a.to_dense();
        let x: Vec<f64> = (0..7).map(|i| (i as f64).sin() + 0.5).collect();
        let mut y = vec![0.0; 7];
        a.matvec(&x, &mut y);
        let xd = nalgebra::DVector::from_vec(x);
        let yd = &d * xd;
        for i in 0..7 {
            assert!((y[i] - yd[i]).abs() < 1e-14);
        }
    }

    #[test]
    fn gershgorin_bounds_tridiag() {
        let a = tridiag(9);
        assert!(a.gershgorin_min() <= 2.0 - 2.0 * (std::f64::consts::PI / 10.0).sin().powi(2) * 4.0 + 4.0);
        assert_eq!(a.gershgorin_min(), 0.0);
        assert!(a.is_symmetric());
    }
}
