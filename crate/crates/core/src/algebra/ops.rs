use super::{tuples, NAryAlgebra};
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Subspace};
use crate::scalar::Scalar;

/// Block direct sum; products mixing the two summands vanish.
pub fn direct_sum<S: Scalar>(a: &NAryAlgebra<S>, b: &NAryAlgebra<S>) -> Result<NAryAlgebra<S>> {
    if a.arity() != b.arity() {
        return Err(Error::ArityMismatch {
            expected: a.arity(),
            found: b.arity(),
        });
    }
    let (da, db) = (a.dim(), b.dim());
    let mut labels = a.labels().to_vec();
    labels.extend(b.labels().iter().cloned());
    let mut out = NAryAlgebra::new(format!("({})+({})", a.name(), b.name()), a.arity(), labels)?;
    for (k, v) in a.products() {
        let mut val = v.to_vec();
        val.resize(val.len() + db, S::zero());
        out.set_product(k, val)?;
    }
    for (k, v) in b.products() {
        let key: Vec<usize> = k.iter().map(|i| i + da).collect();
        let mut val = vec![S::zero(); da];
        val.extend(v.iter().cloned());
        out.set_product(&key, val)?;
    }
    out.set_metadata(format!(
        "direct sum of {} (dim {da}) and {} (dim {db})",
        a.name(),
        b.name()
    ));
    Ok(out)
}

/// Same arity, dimension and structure constants; no isomorphism search.
pub fn equal_tensor<S: Scalar>(a: &NAryAlgebra<S>, b: &NAryAlgebra<S>) -> bool {
    a.arity() == b.arity() && a.dim() == b.dim() && a.products.eq(&b.products)
}

/// Re-expresses the structure tensor in the basis given by the columns of `p`.
pub fn change_basis<S: Scalar>(alg: &NAryAlgebra<S>, p: &Matrix<S>) -> Result<NAryAlgebra<S>> {
    let d = alg.dim();
    if p.rows() != d || p.cols() != d {
        return Err(Error::DimensionMismatch {
            expected: d * d,
            found: p.rows() * p.cols(),
        });
    }
    let inv = p
        .inverse()?
        .ok_or_else(|| Error::Precondition("basis change matrix is singular".into()))?;
    let cols: Vec<Vec<S>> = (0..d).map(|j| p.column(j)).collect();
    let labels = alg.labels().iter().map(|l| format!("{l}'")).collect();
    let mut out = NAryAlgebra::new(format!("{}'", alg.name()), alg.arity(), labels)?;
    for t in tuples(d, alg.arity()) {
        let args: Vec<&[S]> = t.iter().map(|&i| cols[i].as_slice()).collect();
        let v = alg.bracket_unchecked(&args);
        if v.iter().all(|x| x.is_zero()) {
            continue;
        }
        out.set_product(&t, inv.mul_vec(&v)?)?;
    }
    out.set_metadata(format!("basis change of {}", alg.name()));
    Ok(out)
}

/// The subalgebra on a set of coordinates, which must be closed under the bracket.
pub fn restrict_to_coordinates<S: Scalar>(
    alg: &NAryAlgebra<S>,
    coords: &[usize],
) -> Result<NAryAlgebra<S>> {
    let span = Subspace::<S>::coordinate(coords.iter().copied(), alg.dim())?;
    let labels = coords.iter().map(|&c| alg.labels()[c].clone()).collect();
    let mut out = NAryAlgebra::new(format!("{}|sub", alg.name()), alg.arity(), labels)?;
    for t in tuples(coords.len(), alg.arity()) {
        let key: Vec<usize> = t.iter().map(|&i| coords[i]).collect();
        let v = alg.basis_bracket(&key);
        if !span.contains(&v)? {
            return Err(Error::Precondition(format!(
                "coordinates {coords:?} are not closed under the bracket"
            )));
        }
        let val = coords.iter().map(|&c| v[c].clone()).collect();
        out.set_product(&t, val)?;
    }
    Ok(out)
}
