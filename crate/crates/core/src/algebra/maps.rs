use num_rational::BigRational;

use super::checks::{CheckReport, Witness};
use super::{tuples, NAryAlgebra};
use crate::error::{Error, Result};
use crate::exactlin::{nullspace, Matrix, Subspace};
use crate::scalar::{axpy, Scalar};

/// A square matrix acting on an algebra's coordinate space; column `j` is the image of `e_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearMap<S = BigRational> {
    matrix: Matrix<S>,
}

impl<S: Scalar> LinearMap<S> {
    pub fn new(matrix: Matrix<S>) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::DimensionMismatch {
                expected: matrix.rows(),
                found: matrix.cols(),
            });
        }
        Ok(LinearMap { matrix })
    }

    pub fn identity(dim: usize) -> Self {
        LinearMap {
            matrix: Matrix::identity(dim),
        }
    }

    pub fn zero(dim: usize) -> Self {
        LinearMap {
            matrix: Matrix::zeros(dim, dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix<S> {
        &self.matrix
    }

    pub fn apply(&self, v: &[S]) -> Result<Vec<S>> {
        self.matrix.mul_vec(v)
    }

    pub fn determinant(&self) -> S {
        self.matrix.determinant().expect("square by construction")
    }

    pub fn is_invertible(&self) -> bool {
        !self.determinant().is_zero()
    }

    /// Row-major flattening, the coordinate system of [`derivation_space`].
    pub fn flatten(&self) -> Vec<S> {
        self.matrix.entries().to_vec()
    }

    pub fn commutator(&self, other: &Self) -> Result<Self> {
        Ok(LinearMap {
            matrix: self.matrix.commutator(&other.matrix)?,
        })
    }
}

/// Reshapes a row-major flattened `d × d` matrix.
pub fn flat_to_map<S: Scalar>(flat: &[S], dim: usize) -> Result<LinearMap<S>> {
    if flat.len() != dim * dim {
        return Err(Error::DimensionMismatch {
            expected: dim * dim,
            found: flat.len(),
        });
    }
    let rows = flat.chunks(dim.max(1)).map(<[S]>::to_vec).collect();
    LinearMap::new(Matrix::from_rows(rows, dim)?)
}

/// `R[x](z) = [z, x_2, …, x_n]` for the `n - 1` vectors in `x`.
pub fn right_mult<S: Scalar, V: AsRef<[S]>>(alg: &NAryAlgebra<S>, x: &[V]) -> Result<LinearMap<S>> {
    if x.len() + 1 != alg.arity() {
        return Err(Error::ArityMismatch {
            expected: alg.arity() - 1,
            found: x.len(),
        });
    }
    let d = alg.dim();
    let mut columns = Vec::with_capacity(d);
    for j in 0..d {
        let e = alg.unit(j);
        let mut args: Vec<&[S]> = Vec::with_capacity(alg.arity());
        args.push(&e);
        args.extend(x.iter().map(AsRef::as_ref));
        columns.push(alg.bracket(&args)?);
    }
    LinearMap::new(Matrix::from_columns(&columns, d)?)
}

/// Checks `m([e_{i_1}, …, e_{i_n}]) = Σ_k [e_{i_1}, …, m(e_{i_k}), …, e_{i_n}]` on all basis tuples.
pub fn is_derivation<S: Scalar>(alg: &NAryAlgebra<S>, m: &LinearMap<S>) -> Result<CheckReport<S>> {
    let d = alg.dim();
    if m.dim() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: m.dim(),
        });
    }
    let images: Vec<Vec<S>> = (0..d).map(|j| m.matrix().column(j)).collect();
    for t in tuples(d, alg.arity()) {
        let lhs = m.apply(&alg.basis_bracket(&t))?;
        let mut rhs = vec![S::zero(); d];
        for k in 0..t.len() {
            let term = alg.bracket_with_slot(&t, k, &images[t[k]]);
            axpy(&mut rhs, &S::one(), &term);
        }
        if lhs != rhs {
            return Ok(CheckReport::fail(Witness {
                tuples: vec![t],
                lhs,
                rhs,
                note: "derivation rule".into(),
            }));
        }
    }
    Ok(CheckReport::pass())
}

/// All derivations, as a subspace of row-major flattened `d × d` matrices.
///
/// Every basis tuple contributes `d` linear equations in the `d²` unknown
/// entries; the equations are folded into an RREF row space as they are
/// produced and the nullspace is read off at the end.
pub fn derivation_space<S: Scalar>(alg: &NAryAlgebra<S>) -> Subspace<S> {
    let d = alg.dim();
    let n = alg.arity();
    let unknowns = d * d;
    let mut equations = Subspace::zero(unknowns);
    if d == 0 {
        return Subspace::zero(0);
    }
    for t in tuples(d, n) {
        let ct = alg.basis_bracket(&t);
        // substituted[k][a] = [.., e_a at slot k, ..]
        let substituted: Vec<Vec<Vec<S>>> = (0..n)
            .map(|k| {
                (0..d)
                    .map(|a| {
                        let mut s = t.clone();
                        s[k] = a;
                        alg.basis_bracket(&s)
                    })
                    .collect()
            })
            .collect();
        for i in 0..d {
            let mut row = vec![S::zero(); unknowns];
            for (j, c) in ct.iter().enumerate() {
                row[i * d + j] += c;
            }
            for (k, subs) in substituted.iter().enumerate() {
                for (a, v) in subs.iter().enumerate() {
                    row[a * d + t[k]] -= &v[i];
                }
            }
            if row.iter().any(|x| !x.is_zero()) {
                equations.insert(&row).expect("row has d² entries");
            }
            if equations.is_full() {
                return Subspace::zero(unknowns);
            }
        }
    }
    nullspace(&equations.basis_matrix())
}

/// Checks `m([e_{i_1}, …]) = [m e_{i_1}, …]` for `m` mapping `src` coordinates to `dst` coordinates.
pub fn is_homomorphism<S: Scalar>(
    src: &NAryAlgebra<S>,
    dst: &NAryAlgebra<S>,
    m: &Matrix<S>,
) -> Result<CheckReport<S>> {
    if src.arity() != dst.arity() {
        return Err(Error::ArityMismatch {
            expected: src.arity(),
            found: dst.arity(),
        });
    }
    if m.rows() != dst.dim() || m.cols() != src.dim() {
        return Err(Error::DimensionMismatch {
            expected: dst.dim() * src.dim(),
            found: m.rows() * m.cols(),
        });
    }
    let images: Vec<Vec<S>> = (0..src.dim()).map(|j| m.column(j)).collect();
    for t in tuples(src.dim(), src.arity()) {
        let lhs = m.mul_vec(&src.basis_bracket(&t))?;
        let args: Vec<&[S]> = t.iter().map(|&i| images[i].as_slice()).collect();
        let rhs = dst.bracket_unchecked(&args);
        if lhs != rhs {
            return Ok(CheckReport::fail(Witness {
                tuples: vec![t],
                lhs,
                rhs,
                note: "m([x]) != [m x]".into(),
            }));
        }
    }
    Ok(CheckReport::pass())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::check_fundamental_identity;
    use crate::functors::{build_invertible_example, build_l2, build_sl2, u_n};
    use crate::Rational;

    fn q(k: i64) -> Rational {
        Rational::from_int(k)
    }

    #[test]
    fn right_mult_examples() {
        let ab = NAryAlgebra::<Rational>::abelian(3, 2).unwrap();
        let r = right_mult(&ab, &[ab.unit(0), ab.unit(1)]).unwrap();
        assert_eq!(r, LinearMap::zero(2));

        let inv = build_invertible_example(&[q(1), q(-1), q(5)], 3).unwrap();
        let r = right_mult(&inv, &[inv.unit(0), inv.unit(1)]).unwrap();
        let mut diag = Matrix::zeros(3, 3);
        for (i, a) in [1, -1, 5].into_iter().enumerate() {
            diag.set(i, i, q(a));
        }
        assert_eq!(r.matrix(), &diag);
        assert!(r.is_invertible());

        // U_3(sl2), x = (h, e): column of f is [f,[h,e]] = 2[f,e] = -2h.
        let u3 = u_n(&build_sl2::<Rational>(), 3).unwrap();
        let r = right_mult(&u3, &[u3.unit(1), u3.unit(0)]).unwrap();
        assert_eq!(r.matrix().column(2), vec![q(0), q(-2), q(0)]);
    }

    #[test]
    fn derivation_examples() {
        let u3 = u_n(&build_sl2::<Rational>(), 3).unwrap();
        assert!(is_derivation(&u3, &LinearMap::zero(3)).unwrap().holds);
        let id = is_derivation(&u3, &LinearMap::identity(3)).unwrap();
        assert!(!id.holds);
        for x in tuples(3, 2) {
            let r = right_mult(&u3, &[u3.unit(x[0]), u3.unit(x[1])]).unwrap();
            assert!(is_derivation(&u3, &r).unwrap().holds);
        }
    }

    #[test]
    fn derivation_space_examples() {
        let ab = NAryAlgebra::<Rational>::abelian(2, 3).unwrap();
        assert_eq!(derivation_space(&ab).dim(), 9);

        let sl2 = build_sl2::<Rational>();
        let der = derivation_space(&sl2);
        assert_eq!(der.dim(), 3);
        // cross-check: inner derivations span the same space
        let inner: Vec<Vec<Rational>> = (0..3)
            .map(|i| right_mult(&sl2, &[sl2.unit(i)]).unwrap().flatten())
            .collect();
        assert_eq!(Subspace::span(&inner, 9).unwrap(), der);

        let u3 = u_n(&sl2, 3).unwrap();
        let der3 = derivation_space(&u3);
        for x in tuples(3, 2) {
            let r = right_mult(&u3, &[u3.unit(x[0]), u3.unit(x[1])]).unwrap();
            assert!(der3.contains(&r.flatten()).unwrap());
        }
        for b in der3.basis() {
            let m = flat_to_map(b, 3).unwrap();
            assert!(is_derivation(&u3, &m).unwrap().holds);
        }
        assert!(check_fundamental_identity(&u3).holds);
    }

    #[test]
    fn homomorphism_examples() {
        let l2 = build_l2::<Rational>();
        assert!(
            is_homomorphism(&l2, &l2, &Matrix::identity(2))
                .unwrap()
                .holds
        );
        // phi(e) = 0, phi(f) = f
        let mut phi = Matrix::zeros(2, 2);
        phi.set(1, 1, q(1));
        assert!(!is_homomorphism(&l2, &l2, &phi).unwrap().holds);
        let u3 = u_n(&l2, 3).unwrap();
        assert!(u3.is_abelian());
        assert!(is_homomorphism(&u3, &u3, &phi).unwrap().holds);
        assert!(is_homomorphism(&l2, &u3, &phi).is_err());
    }
}
