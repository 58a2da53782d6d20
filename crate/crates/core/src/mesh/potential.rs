//! Potential descriptors and their sampled realizations.

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use super::grid::Grid;
use crate::error::{Error, Result};

/// Closed set of potential profiles used by the experiments.
///
/// `Singular` models an L^{n/2} potential `|x-x₀|^{-α}`; on a finite grid
/// its values are capped at `(h/2)^{-α}` so the cap scales with refinement
/// and the discrete L^{n/2} norm stays convergent.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum PotentialDescriptor {
    Zero,
    /// c · Π_j sin(π x_j)
    SineBump { amplitude: f64 },
    /// a · exp(-|x-c|² / (2 w²))
    Gaussian {
        center: Vec<f64>,
        width: f64,
        #[serde(default = "default_amplitude")]
        amplitude: f64,
    },
    /// |x-x₀|^{-α}, capped; an explicit cap below the default is allowed.
    Singular {
        center: Vec<f64>,
        alpha: f64,
        #[serde(default)]
        cap: Option<f64>,
    },
}

fn default_amplitude() -> f64 {
    1.0
}

/// Real potential sampled at the interior nodes.
#[derive(Debug, Clone, PartialEq)]
pub struct PotentialField {
    pub grid: Grid,
    pub values: Vec<f64>,
    pub descriptor: PotentialDescriptor,
    /// Discrete ‖q‖_{L^{n/2}} = (Σ hⁿ |q|^{n/2})^{2/n}.
    pub norm_l_half: f64,
}

fn check_center(center: &[f64], n: usize) -> Result<[f64; 3]> {
    if center.len() != n {
        return Err(Error::BadDescriptor(format!(
            "center has {} components, grid dimension is {n}",
            center.len()
        )));
    }
    let mut c = [0.0; 3];
    for (i, &x) in center.iter().enumerate() {
        if !(x > 0.0 && x < 1.0) {
            return Err(Error::BadDescriptor(format!(
                "center component {x} outside the open box (0,1)"
            )));
        }
        c[i] = x;
    }
    Ok(c)
}

pub fn sample_potential(desc: &PotentialDescriptor, grid: &Grid) -> Result<PotentialField> {
    let n = grid.n_dims();
    let values: Vec<f64> = match desc {
        PotentialDescriptor::Zero => vec![0.0; grid.interior_count()],
        PotentialDescriptor::SineBump { amplitude } => {
            if !amplitude.is_finite() {
                return Err(Error::BadDescriptor("non-finite amplitude".into()));
            }
            (0..grid.interior_count())
                .map(|i| {
                    let x = grid.interior_coord(i);
                    amplitude * (0..n).map(|a| (PI * x[a]).sin()).product::<f64>()
                })
                .collect()
        }
        PotentialDescriptor::Gaussian { center, width, amplitude } => {
            if !(*width > 0.0) || !amplitude.is_finite() {
                return Err(Error::BadDescriptor(format!("bad gaussian width {width}")));
            }
            let c = check_center(center, n)?;
            (0..grid.interior_count())
                .map(|i| {
                    let x = grid.interior_coord(i);
                    let r2: f64 = (0..n).map(|a| (x[a] - c[a]).powi(2)).sum();
                    amplitude * (-r2 / (2.0 * width * width)).exp()
                })
                .collect()
        }
        PotentialDescriptor::Singular { center, alpha, cap } => {
            if !(*alpha > 0.0 && *alpha < 2.0) {
                return Err(Error::BadDescriptor(format!(
                    "singular exponent alpha = {alpha} outside (0,2)"
                )));
            }
            let c = check_center(center, n)?;
            let default_cap = (grid.h() / 2.0).powf(-alpha);
            let cap_eff = cap.unwrap_or(default_cap).min(default_cap);
            if !(cap_eff > 0.0) {
                return Err(Error::BadDescriptor(format!("bad singular cap {cap_eff}")));
            }
            (0..grid.interior_count())
                .map(|i| {
                    let x = grid.interior_coord(i);
                    let r: f64 =
                        (0..n).map(|a| (x[a] - c[a]).powi(2)).sum::<f64>().sqrt();
                    if r == 0.0 {
                        cap_eff
                    } else {
                        r.powf(-alpha).min(cap_eff)
                    }
                })
                .collect()
        }
    };
    debug_assert!(values.iter().all(|v| v.is_finite()));
    let half = n as f64 / 2.0;
    let norm_l_half = values
        .iter()
        .map(|v| grid.cell_volume() * v.abs().powf(half))
        .sum::<f64>()
        .powf(2.0 / n as f64);
    Ok(PotentialField { grid: *grid, values, descriptor: desc.clone(), norm_l_half })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_potential_is_zero() {
        let g = Grid::new(3, 8).unwrap();
        let q = sample_potential(&PotentialDescriptor::Zero, &g).unwrap();
        assert!(q.values.iter().all(|&v| v == 0.0));
        assert_eq!(q.norm_l_half, 0.0);
    }

    #[test]
    fn sine_bump_center_value() {
        // N even makes (1/2,1/2,1/2) a lattice node, where the bump is exactly c.
        let g = Grid::new(3, 16).unwrap();
        let q = sample_potential(&PotentialDescriptor::SineBump { amplitude: 5.0 }, &g).unwrap();
        let center = g.interior_index([8, 8, 8]);
        assert!((q.values[center] - 5.0).abs() < 1e-12);
        assert!(q.values.iter().all(|&v| v >= 0.0 && v <= 5.0 + 1e-12));
    }

    #[test]
    fn singular_cap_formula() {
        let g = Grid::new(3, 16).unwrap();
        let desc = PotentialDescriptor::Singular {
            center: vec![0.5, 0.5, 0.5],
            alpha: 1.0,
            cap: None,
        };
        let q = sample_potential(&desc, &g).unwrap();
        let center = g.interior_index([8, 8, 8]);
        // (h/2)^{-1} = 32 at the singular node itself
        assert_eq!(q.values[center], 32.0);
        let max = q.values.iter().cloned().fold(0.0, f64::max);
        assert_eq!(max, 32.0);
        assert!(q.norm_l_half.is_finite() && q.norm_l_half > 0.0);
    }

    #[test]
    fn bad_descriptors_are_rejected() {
        let g = Grid::new(3, 8).unwrap();
        let bad_alpha = PotentialDescriptor::Singular {
            center: vec![0.5, 0.5, 0.5],
            alpha: 2.5,
            cap: None,
        };
        assert!(matches!(sample_potential(&bad_alpha, &g), Err(Error::BadDescriptor(_))));
        let outside = PotentialDescriptor::Singular {
            center: vec![1.5, 0.5, 0.5],
            alpha: 1.0,
            cap: None,
        };
        assert!(matches!(sample_potential(&outside, &g), Err(Error::BadDescriptor(_))));
        let wrong_dim = PotentialDescriptor::Gaussian {
            center: vec![0.5, 0.5],
            width: 0.1,
            amplitude: 1.0,
        };
        assert!(matches!(sample_potential(&wrong_dim, &g), Err(Error::BadDescriptor(_))));
    }

    #[test]
    fn l_half_norm_matches_hand_sum() {
        let g = Grid::new(2, 4).unwrap();
        let q = sample_potential(&PotentialDescriptor::SineBump { amplitude: 2.0 }, &g).unwrap();
        let hand: f64 = q
            .values
            .iter()
            .map(|v| g.cell_volume() * v.abs().powf(1.0))
            .sum::<f64>()
            .powf(1.0);
        assert!((q.norm_l_half - hand).abs() < 1e-14);
    }
}
