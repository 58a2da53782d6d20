//! Uniform-grid discretization of the unit box.
//!
//! The lattice has `N+1` points per axis with mesh width `h = 1/N`.
//! Interior nodes carry the unknowns; face-interior boundary points are the
//! boundary degrees of freedom.  Edge and corner lattice points carry
//! Dirichlet data but no degree of freedom — the outward normal is not
//! defined there, and no interior stencil ever reaches them.

mod grid;
mod operator;
mod potential;

pub use grid::{build_grid, Grid, Neighbor};
pub use operator::{
    assemble_hamiltonian, full_lattice_values, lift_boundary, DiscreteOperator,
};
pub use potential::{sample_potential, PotentialDescriptor, PotentialField};
