//! Index bookkeeping for the box lattice.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Uniform lattice on the unit box `(0,1)^n`, `n ∈ {2,3}`.
///
/// Interior nodes are indexed row-major over multi-indices in
/// `{1,…,N-1}^n`.  Boundary degrees of freedom are the face-interior
/// lattice points, indexed face-major (face = 2·axis + side, side 0 at
/// coordinate 0, side 1 at coordinate 1) and row-major inside each face
/// over the remaining axes in ascending order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Grid {
    n_dims: usize,
    points: usize,
}

/// What an interior node sees one lattice step away.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Neighbor {
    Interior(usize),
    Boundary(usize),
}

pub fn build_grid(n_dims: usize, points_per_axis: usize) -> Result<Grid> {
    Grid::new(n_dims, points_per_axis)
}

impl Grid {
    pub fn new(n_dims: usize, points_per_axis: usize) -> Result<Self> {
        if n_dims != 2 && n_dims != 3 {
            return Err(Error::UnsupportedDim(n_dims));
        }
        if points_per_axis < 4 {
            return Err(Error::GridTooSmall(points_per_axis));
        }
        Ok(Grid { n_dims, points: points_per_axis })
    }

    pub fn n_dims(&self) -> usize {
        self.n_dims
    }

    /// Points per axis N; the lattice spans indices 0..=N.
    pub fn points(&self) -> usize {
        self.points
    }

    pub fn h(&self) -> f64 {
        1.0 / self.points as f64
    }

    /// Interior nodes per axis, M = N - 1.
    pub fn side(&self) -> usize {
        self.points - 1
    }

    pub fn interior_count(&self) -> usize {
        self.side().pow(self.n_dims as u32)
    }

    pub fn boundary_count(&self) -> usize {
        2 * self.n_dims * self.face_size()
    }

    /// Boundary DOFs per face, M^{n-1}.
    pub fn face_size(&self) -> usize {
        self.side().pow(self.n_dims as u32 - 1)
    }

    pub fn cell_volume(&self) -> f64 {
        self.h().powi(self.n_dims as i32)
    }

    pub fn face_cell_area(&self) -> f64 {
        self.h().powi(self.n_dims as i32 - 1)
    }

    /// Interior multi-index (entries in 1..=M; unused axes 0) of a node.
    pub fn interior_multi(&self, idx: usize) -> [usize; 3] {
        debug_assert!(idx < self.interior_count());
        let m = self.side();
        let mut out = [0usize; 3];
        let mut rem = idx;
        for axis in (0..self.n_dims).rev() {
            out[axis] = rem % m + 1;
            rem /= m;
        }
        out
    }

    pub fn interior_index(&self, multi: [usize; 3]) -> usize {
        let m = self.side();
        let mut idx = 0;
        for axis in 0..self.n_dims {
            debug_assert!((1..=m).contains(&multi[axis]));
            idx = idx * m + (multi[axis] - 1);
        }
        idx
    }

    pub fn interior_coord(&self, idx: usize) -> [f64; 3] {
        let multi = self.interior_multi(idx);
        let h = self.h();
        let mut c = [0.0; 3];
        for axis in 0..self.n_dims {
            c[axis] = multi[axis] as f64 * h;
        }
        c
    }

    /// Step from an interior node along `axis` in direction `dir` (±1).
    ///
    /// Neighbors of interior nodes are interior nodes or face DOFs, never
    /// edge/corner lattice points.
    pub fn neighbor(&self, idx: usize, axis: usize, dir: isize) -> Neighbor {
        let mut multi = self.interior_multi(idx);
        let m = self.side();
        let next = multi[axis] as isize + dir;
        if next >= 1 && next as usize <= m {
            multi[axis] = next as usize;
            Neighbor::Interior(self.interior_index(multi))
        } else {
            let side = usize::from(next > 0);
            Neighbor::Boundary(self.boundary_index_at(2 * axis + side, multi))
        }
    }

    /// Face (= 2·axis + side) and in-face position of a boundary DOF.
    pub fn boundary_face(&self, b: usize) -> (usize, usize) {
        debug_assert!(b < self.boundary_count());
        (b / self.face_size(), b % self.face_size())
    }

    /// Axis and side (0 → coordinate 0, 1 → coordinate 1) of the DOF's face.
    pub fn boundary_axis_side(&self, b: usize) -> (usize, usize) {
        let (face, _) = self.boundary_face(b);
        (face / 2, face % 2)
    }

    /// Boundary index of the face point whose tangential coordinates are
    /// taken from `multi` (the `axis` component of `multi` is ignored).
    fn boundary_index_at(&self, face: usize, multi: [usize; 3]) -> usize {
        let m = self.side();
        let axis = face / 2;
        let mut pos = 0;
        for a in 0..self.n_dims {
            if a != axis {
                debug_assert!((1..=m).contains(&multi[a]));
                pos = pos * m + (multi[a] - 1);
            }
        }
        face * self.face_size() + pos
    }

    /// Full lattice multi-index of a boundary DOF (normal coordinate 0 or N).
    pub fn boundary_multi(&self, b: usize) -> [usize; 3] {
        let (face, pos) = self.boundary_face(b);
        let axis = face / 2;
        let side = face % 2;
        let m = self.side();
        let mut out = [0usize; 3];
        let mut rem = pos;
        for a in (0..self.n_dims).rev() {
            if a != axis {
                out[a] = rem % m + 1;
                rem /= m;
            }
        }
        out[axis] = if side == 0 { 0 } else { self.points };
        out
    }

    pub fn boundary_coord(&self, b: usize) -> [f64; 3] {
        let multi = self.boundary_multi(b);
        let h = self.h();
        let mut c = [0.0; 3];
        for axis in 0..self.n_dims {
            c[axis] = multi[axis] as f64 * h;
        }
        c
    }

    /// First and second interior node along the inward normal of DOF `b`.
    pub fn inward_neighbors(&self, b: usize) -> (usize, usize) {
        let (axis, side) = self.boundary_axis_side(b);
        let mut multi = self.boundary_multi(b);
        let (d1, d2) = if side == 0 { (1, 2) } else { (self.points - 1, self.points - 2) };
        multi[axis] = d1;
        let p1 = self.interior_index(multi);
        multi[axis] = d2;
        let p2 = self.interior_index(multi);
        (p1, p2)
    }

    /// In-face lattice neighbors of a boundary DOF (up to 2(n-1); `None`
    /// where the tangential step would leave the face interior).
    pub fn face_neighbors(&self, b: usize) -> [[Option<usize>; 2]; 2] {
        let (axis, _) = self.boundary_axis_side(b);
        let multi = self.boundary_multi(b);
        let m = self.side();
        let face = self.boundary_face(b).0;
        let mut out = [[None; 2]; 2];
        let mut t = 0;
        for a in 0..self.n_dims {
            if a == axis {
                continue;
            }
            for (di, dir) in [-1isize, 1].iter().enumerate() {
                let next = multi[a] as isize + dir;
                if next >= 1 && next as usize <= m {
                    let mut nm = multi;
                    nm[a] = next as usize;
                    out[t][di] = Some(self.boundary_index_at(face, nm));
                }
            }
            t += 1;
        }
        out
    }

    /// Number of tangential axes of a face (n - 1).
    pub fn tangential_axes(&self) -> usize {
        self.n_dims - 1
    }

    pub fn same_grid(&self, other: &Grid) -> Result<()> {
        if self != other {
            return Err(Error::GridMismatch(format!(
                "expected n={} N={}, got n={} N={}",
                self.n_dims, self.points, other.n_dims, other.points
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn counts_match_examples() {
        let g = Grid::new(3, 16).unwrap();
        assert_eq!(g.interior_count(), 3375);
        assert_eq!(g.boundary_count(), 1350);
        assert_eq!(g.h(), 0.0625);

        let g = Grid::new(2, 4).unwrap();
        assert_eq!(g.interior_count(), 9);
        assert_eq!(g.boundary_count(), 12);
        assert_eq!(g.h(), 0.25);
    }

    #[test]
    fn rejects_degenerate_grids() {
        assert!(matches!(Grid::new(3, 2), Err(Error::GridTooSmall(2))));
        assert!(matches!(Grid::new(4, 8), Err(Error::UnsupportedDim(4))));
        assert!(matches!(Grid::new(1, 8), Err(Error::UnsupportedDim(1))));
    }

    #[test]
    fn inward_normal_line_has_two_nodes() {
        for (n, npts) in [(2usize, 4usize), (3, 4), (3, 6)] {
            let g = Grid::new(n, npts).unwrap();
            for b in 0..g.boundary_count() {
                let (p1, p2) = g.inward_neighbors(b);
                assert!(p1 < g.interior_count());
                assert!(p2 < g.interior_count());
                assert_ne!(p1, p2);
                // p1 is lattice-adjacent to b
                let bm = g.boundary_multi(b);
                let pm = g.interior_multi(p1);
                let dist: usize = (0..n).map(|a| bm[a].abs_diff(pm[a])).sum();
                assert_eq!(dist, 1);
            }
        }
    }

    #[test]
    fn neighbors_of_interior_are_interior_or_face() {
        let g = Grid::new(3, 5).unwrap();
        for idx in 0..g.interior_count() {
            for axis in 0..3 {
                for dir in [-1isize, 1] {
                    match g.neighbor(idx, axis, dir) {
                        Neighbor::Interior(j) => assert!(j < g.interior_count()),
                        Neighbor::Boundary(b) => {
                            assert!(b < g.boundary_count());
                            let (p1, _) = g.inward_neighbors(b);
                            assert_eq!(p1, idx);
                        }
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn interior_index_roundtrip(n in 2usize..=3, npts in 4usize..=9, seed in 0usize..10_000) {
            let g = Grid::new(n, npts).unwrap();
            let idx = seed % g.interior_count();
            prop_assert_eq!(g.interior_index(g.interior_multi(idx)), idx);
        }

        #[test]
        fn boundary_index_roundtrip(n in 2usize..=3, npts in 4usize..=9, seed in 0usize..10_000) {
            let g = Grid::new(n, npts).unwrap();
            let b = seed % g.boundary_count();
            let multi = g.boundary_multi(b);
            let (axis, _) = g.boundary_axis_side(b);
            let face = g.boundary_face(b).0;
            prop_assert_eq!(g.boundary_index_at(face, multi), b);
            // exactly one coordinate sits on the boundary
            let mut on_bdry = 0;
            for a in 0..n {
                if multi[a] == 0 || multi[a] == npts { on_bdry += 1; }
            }
            prop_assert_eq!(on_bdry, 1);
            prop_assert!(multi[axis] == 0 || multi[axis] == npts);
        }
    }
}
