//! Dense symmetric eigendecomposition, sorted ascending.

use nalgebra::DMatrix;

/// Full eigendecomposition of a symmetric matrix; eigenvalues ascending,
/// eigenvectors as matching columns.
pub fn symmetric_eigen_sorted(mat: DMatrix<f64>) -> (Vec<f64>, DMatrix<f64>) {
    let n = mat.nrows();
    let eig = mat.symmetric_eigen();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let values: Vec<f64> = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let mut vectors = DMatrix::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        vectors.set_column(dst, &eig.eigenvectors.column(src));
    }
    (values, vectors)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_diagonal() {
        let m = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![3.0, -1.0, 2.0]));
        let (vals, vecs) = symmetric_eigen_sorted(m);
        assert_eq!(vals, vec![-1.0, 2.0, 3.0]);
        // each column is a signed unit basis vector
        for c in 0..3 {
            let col = vecs.column(c);
            let nrm: f64 = col.iter().map(|x| x * x).sum();
            assert!((nrm - 1.0).abs() < 1e-14);
        }
    }
}
