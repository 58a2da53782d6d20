//! Largest singular value of a dense complex matrix by power iteration
//! on MᴴM, with a deterministic seeded start.

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// σ_max of the operator given by `apply` (y = M x) and `apply_adjoint`
/// (y = Mᴴ x), both `rows x cols`.
pub fn largest_singular_value(
    rows: usize,
    cols: usize,
    apply: impl Fn(&[Complex64], &mut [Complex64]),
    apply_adjoint: impl Fn(&[Complex64], &mut [Complex64]),
) -> f64 {
    if rows == 0 || cols == 0 {
        return 0.0;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x00b1_7e5e_eded_0001);
    let mut x: Vec<Complex64> =
        (0..cols).map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect();
    let nrm = norm(&x);
    if nrm == 0.0 {
        return 0.0;
    }
    scale(&mut x, 1.0 / nrm);
    let mut y = vec![Complex64::ZERO; rows];
    let mut z = vec![Complex64::ZERO; cols];
    let mut sigma_prev = 0.0f64;
    for it in 0..600 {
        apply(&x, &mut y);
        let sigma = norm(&y);
        if sigma == 0.0 {
            return 0.0;
        }
        apply_adjoint(&y, &mut z);
        let znrm = norm(&z);
        if znrm == 0.0 {
            return sigma;
        }
        x.copy_from_slice(&z);
        scale(&mut x, 1.0 / znrm);
        if it > 4 && (sigma - sigma_prev).abs() <= 1e-12 * sigma.max(1e-300) {
            return sigma;
        }
        sigma_prev = sigma;
    }
    sigma_prev
}

fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

fn scale(v: &mut [Complex64], a: f64) {
    for z in v.iter_mut() {
        *z *= a;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_known_singular_values() {
        // M = diag(3, 1, 0.5) embedded in a 3x3 complex matrix with a phase.
        let phase = Complex64::from_polar(1.0, 0.7);
        let m = [
            [Complex64::new(3.0, 0.0) * phase, Complex64::ZERO, Complex64::ZERO],
            [Complex64::ZERO, Complex64::new(0.0, 1.0), Complex64::ZERO],
            [Complex64::ZERO, Complex64::ZERO, Complex64::new(0.5, 0.0)],
        ];
        let apply = |x: &[Complex64], y: &mut [Complex64]| {
            for r in 0..3 {
                y[r] = (0..3).map(|c| m[r][c] * x[c]).sum();
            }
        };
        let adj = |x: &[Complex64], y: &mut [Complex64]| {
            for c in 0..3 {
                y[c] = (0..3).map(|r| m[r][c].conj() * x[r]).sum();
            }
        };
        let s = largest_singular_value(3, 3, apply, adj);
        assert!((s - 3.0).abs() < 1e-10);
    }
}
