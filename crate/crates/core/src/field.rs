//! Value types for interior and boundary data.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::mesh::Grid;

/// Complex field on the interior lattice nodes of a grid.
#[derive(Debug, Clone, PartialEq)]
pub struct InteriorField {
    pub grid: Grid,
    pub values: Vec<Complex64>,
}

impl InteriorField {
    pub fn zeros(grid: Grid) -> Self {
        InteriorField { grid, values: vec![Complex64::ZERO; grid.interior_count()] }
    }

    pub fn from_real(grid: Grid, vals: &[f64]) -> Self {
        assert_eq!(vals.len(), grid.interior_count());
        InteriorField { grid, values: vals.iter().map(|&v| Complex64::new(v, 0.0)).collect() }
    }

    pub fn from_values(grid: Grid, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != grid.interior_count() {
            return Err(Error::ShapeMismatch(format!(
                "interior field needs {} values, got {}",
                grid.interior_count(),
                values.len()
            )));
        }
        Ok(InteriorField { grid, values })
    }

    /// Sample a function of the node coordinates.
    pub fn from_fn(grid: Grid, f: impl Fn([f64; 3]) -> Complex64) -> Self {
        let values = (0..grid.interior_count()).map(|i| f(grid.interior_coord(i))).collect();
        InteriorField { grid, values }
    }

    /// h^n-weighted bilinear pairing Σ hⁿ a_i b_i (no conjugation).
    pub fn pairing(&self, other: &InteriorField) -> Complex64 {
        debug_assert_eq!(self.grid, other.grid);
        let w = self.grid.cell_volume();
        let mut acc = Complex64::ZERO;
        for (a, b) in self.values.iter().zip(&other.values) {
            acc += a * b;
        }
        acc * w
    }

    /// h^n-weighted coefficient Σ hⁿ φ_i u_i against a real vector.
    pub fn coeff_against_real(&self, phi: &[f64]) -> Complex64 {
        debug_assert_eq!(phi.len(), self.values.len());
        let w = self.grid.cell_volume();
        let mut acc = Complex64::ZERO;
        for (p, u) in phi.iter().zip(&self.values) {
            acc += u * *p;
        }
        acc * w
    }

    pub fn norm_l2(&self) -> f64 {
        let w = self.grid.cell_volume();
        (self.values.iter().map(|z| z.norm_sqr()).sum::<f64>() * w).sqrt()
    }
}

/// Complex data on the face-interior boundary degrees of freedom.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryFunction {
    pub grid: Grid,
    pub values: Vec<Complex64>,
}

impl BoundaryFunction {
    pub fn zeros(grid: Grid) -> Self {
        BoundaryFunction { grid, values: vec![Complex64::ZERO; grid.boundary_count()] }
    }

    pub fn from_values(grid: Grid, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != grid.boundary_count() {
            return Err(Error::ShapeMismatch(format!(
                "boundary function needs {} values, got {}",
                grid.boundary_count(),
                values.len()
            )));
        }
        Ok(BoundaryFunction { grid, values })
    }

    pub fn from_fn(grid: Grid, f: impl Fn([f64; 3]) -> Complex64) -> Self {
        let values = (0..grid.boundary_count()).map(|b| f(grid.boundary_coord(b))).collect();
        BoundaryFunction { grid, values }
    }

    /// Indicator of a single boundary degree of freedom.
    pub fn indicator(grid: Grid, b: usize) -> Self {
        let mut f = Self::zeros(grid);
        f.values[b] = Complex64::ONE;
        f
    }

    /// h^{n-1}-weighted bilinear boundary pairing Σ h^{n-1} a_b b_b.
    pub fn pairing(&self, other: &BoundaryFunction) -> Complex64 {
        debug_assert_eq!(self.grid, other.grid);
        let w = self.grid.face_cell_area();
        let mut acc = Complex64::ZERO;
        for (a, b) in self.values.iter().zip(&other.values) {
            acc += a * b;
        }
        acc * w
    }

    pub fn norm_l2(&self) -> f64 {
        let w = self.grid.face_cell_area();
        (self.values.iter().map(|z| z.norm_sqr()).sum::<f64>() * w).sqrt()
    }
}
