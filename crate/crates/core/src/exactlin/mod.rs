//! Exact linear algebra over a field: dense matrices, canonical subspaces
//! and linear solvers.

mod matrix;
mod subspace;

pub use matrix::{rref, rref_with_pivots, Matrix};
pub use subspace::Subspace;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Nullspace `{x : a x = 0}` as a subspace of `S^{a.cols}`.
pub fn nullspace<S: Scalar>(a: &Matrix<S>) -> Subspace<S> {
    let (r, pivots) = rref_with_pivots(a);
    nullspace_from_rref(&r, &pivots, a.cols())
}

fn nullspace_from_rref<S: Scalar>(r: &Matrix<S>, pivots: &[usize], cols: usize) -> Subspace<S> {
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    let basis: Vec<Vec<S>> = (0..cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![S::zero(); cols];
            v[free] = S::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(row, free).clone();
            }
            v
        })
        .collect();
    Subspace::span(&basis, cols).expect("basis vectors have the right length")
}

/// Solves `a x = rhs`.
///
/// Returns a particular solution (free variables set to zero) when the
/// system is consistent, together with the full nullspace of `a`.
pub fn solve<S: Scalar>(a: &Matrix<S>, rhs: &[S]) -> Result<(Option<Vec<S>>, Subspace<S>)> {
    if rhs.len() != a.rows() {
        return Err(Error::DimensionMismatch {
            expected: a.rows(),
            found: rhs.len(),
        });
    }
    let n = a.cols();
    let mut aug = Matrix::zeros(a.rows(), n + 1);
    for (i, r) in rhs.iter().enumerate() {
        for j in 0..n {
            aug.set(i, j, a.get(i, j).clone());
        }
        aug.set(i, n, r.clone());
    }
    let (r, pivots) = rref_with_pivots(&aug);
    let null = nullspace(a);
    if pivots.last() == Some(&n) {
        return Ok((None, null));
    }
    let mut x = vec![S::zero(); n];
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = r.get(row, n).clone();
    }
    Ok((Some(x), null))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(k: i64) -> Rational {
        Rational::from_integer(k.into())
    }

    fn m(rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&k| q(k)).collect())
                .collect(),
            cols,
        )
        .unwrap()
    }

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&k| q(k)).collect()
    }

    #[test]
    fn rref_examples() {
        let (r, rank) = rref(&Matrix::<Rational>::identity(2));
        assert_eq!(rank, 2);
        assert_eq!(r, Matrix::identity(2));

        let (r, rank) = rref(&Matrix::<Rational>::zeros(3, 3));
        assert_eq!(rank, 0);
        assert_eq!(r.rows(), 0);

        let (r, rank) = rref(&m(&[&[2, 4], &[1, 2]]));
        assert_eq!(rank, 1);
        assert_eq!(r, m(&[&[1, 2]]));
    }

    #[test]
    fn span_examples() {
        let empty: Vec<Vec<Rational>> = vec![];
        assert!(Subspace::span(&empty, 3).unwrap().is_zero());
        assert!(Subspace::span(&[v(&[1, 0]), v(&[1, 1])], 2)
            .unwrap()
            .is_full());
        let s = Subspace::span(&[v(&[2, 4]), v(&[1, 2])], 2).unwrap();
        assert_eq!(s.basis(), &[v(&[1, 2])]);
        assert!(Subspace::span(&[v(&[1, 2, 3])], 2).is_err());
    }

    #[test]
    fn sum_and_intersection_examples() {
        let e = |i| Subspace::<Rational>::coordinate([i], 3).unwrap();
        let full2 = Subspace::coordinate([0, 1], 3).unwrap();
        assert_eq!(full2.sum(&Subspace::zero(3)).unwrap(), full2);
        assert_eq!(e(0).sum(&e(1)).unwrap(), full2);
        let a = Subspace::span(&[v(&[1, 1, 0])], 3).unwrap();
        let b = Subspace::span(&[v(&[1, -1, 0])], 3).unwrap();
        assert_eq!(a.sum(&b).unwrap(), full2);

        assert_eq!(full2.intersect(&full2).unwrap(), full2);
        assert!(e(0).intersect(&e(1)).unwrap().is_zero());
        let c = Subspace::coordinate([1, 2], 3).unwrap();
        assert_eq!(full2.intersect(&c).unwrap(), e(1));
        assert!(e(0).sum(&Subspace::zero(2)).is_err());
    }

    #[test]
    fn containment_examples() {
        let full = Subspace::<Rational>::full(2);
        assert!(full.contains(&v(&[7, -3])).unwrap());
        let zero = Subspace::<Rational>::zero(2);
        assert!(zero.contains(&v(&[0, 0])).unwrap());
        assert!(!zero.contains(&v(&[0, 1])).unwrap());
        let s = Subspace::span(&[v(&[1, 2])], 2).unwrap();
        assert!(s.contains(&v(&[3, 6])).unwrap());
        assert!(!s.contains(&v(&[1, 0])).unwrap());
        assert!(s.contains(&v(&[1])).is_err());
    }

    #[test]
    fn solve_examples() {
        let (x, null) = solve(&Matrix::identity(2), &v(&[3, -4])).unwrap();
        assert_eq!(x, Some(v(&[3, -4])));
        assert!(null.is_zero());

        let (x, null) = solve(&Matrix::<Rational>::zeros(2, 2), &v(&[0, 0])).unwrap();
        assert_eq!(x, Some(v(&[0, 0])));
        assert!(null.is_full());

        let (x, null) = solve(&m(&[&[1, 1]]), &v(&[2])).unwrap();
        assert_eq!(x, Some(v(&[2, 0])));
        assert_eq!(null.basis(), &[v(&[1, -1])]);

        let (x, _) = solve(&m(&[&[1, 1], &[1, 1]]), &v(&[1, 2])).unwrap();
        assert_eq!(x, None);
    }

    #[test]
    fn determinant_and_inverse() {
        let a = m(&[&[2, 1], &[1, 1]]);
        assert_eq!(a.determinant().unwrap(), q(1));
        let inv = a.inverse().unwrap().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), Matrix::identity(2));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).inverse().unwrap(), None);
        assert_eq!(m(&[&[0, 1], &[1, 0]]).determinant().unwrap(), q(-1));
    }
}
