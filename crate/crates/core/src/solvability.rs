//! k-derived series, radicals, and simplicity verdicts.

use crate::algebra::{
    check_fundamental_identity, check_skew, derivation_space, flat_to_map, right_mult, tuples,
    CheckReport, NAryAlgebra, Witness,
};
use crate::error::{Error, Result};
use crate::exactlin::{nullspace, Matrix, Subspace};
use crate::functors::u_n;
use crate::ideals::{
    closure_probes, is_ideal, leibniz_kernel_2, leibniz_n_kernel, lift_from_quotient, quotient,
};
use crate::scalar::{is_zero_vec, unit, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub struct DerivedSeries<S> {
    pub k: usize,
    /// `H^(1)_k = H`, then each successive step; ends with the zero subspace
    /// when solvable and with the last strictly smaller term otherwise.
    pub terms: Vec<Subspace<S>>,
    pub solvable: bool,
    /// The `m` with `H^(m)_k = 0` and `H^(m−1)_k ≠ 0`.
    pub index: Option<usize>,
}

fn check_k<S: Scalar>(alg: &NAryAlgebra<S>, k: usize) -> Result<()> {
    if k == 0 || k > alg.arity() {
        return Err(Error::Precondition(format!(
            "k must lie in 1..={}, got {k}",
            alg.arity()
        )));
    }
    Ok(())
}

fn require_arity_2<S: Scalar>(alg: &NAryAlgebra<S>) -> Result<()> {
    if alg.arity() != 2 {
        return Err(Error::ArityMismatch {
            expected: 2,
            found: alg.arity(),
        });
    }
    Ok(())
}

/// Span of brackets with basis vectors of `h` in `k` chosen slots and basis
/// vectors of `L` in the others, over every choice of `k` slots.
pub fn k_derived_step<S: Scalar>(
    alg: &NAryAlgebra<S>,
    h: &Subspace<S>,
    k: usize,
) -> Result<Subspace<S>> {
    check_k(alg, k)?;
    if h.ambient_dim() != alg.dim() {
        return Err(Error::AmbientMismatch {
            left: alg.dim(),
            right: h.ambient_dim(),
        });
    }
    let n = alg.arity();
    let d = alg.dim();
    let mut out = Subspace::zero(d);
    if h.is_zero() {
        return Ok(out);
    }
    let units: Vec<Vec<S>> = (0..d).map(|i| unit(d, i)).collect();
    for mask in 0u32..1 << n {
        if mask.count_ones() as usize != k {
            continue;
        }
        let in_h: Vec<bool> = (0..n).map(|s| mask >> s & 1 == 1).collect();
        let hb = h.dim();
        // one index tuple per slot, into h's basis or L's basis
        for t in tuples(d.max(hb), n) {
            if t.iter()
                .zip(&in_h)
                .any(|(&i, &inh)| i >= if inh { hb } else { d })
            {
                continue;
            }
            let args: Vec<&[S]> = t
                .iter()
                .zip(&in_h)
                .map(|(&i, &inh)| {
                    if inh {
                        h.basis()[i].as_slice()
                    } else {
                        units[i].as_slice()
                    }
                })
                .collect();
            out.insert(&alg.bracket_unchecked(&args))?;
            if out.is_full() {
                return Ok(out);
            }
        }
    }
    Ok(out)
}

/// Iterates [`k_derived_step`] from `h` until the zero subspace or until the
/// dimension stops dropping. `h` is expected to be an ideal.
pub fn derived_series<S: Scalar>(
    alg: &NAryAlgebra<S>,
    h: &Subspace<S>,
    k: usize,
) -> Result<DerivedSeries<S>> {
    check_k(alg, k)?;
    let mut terms = vec![h.clone()];
    loop {
        let last = terms.last().expect("nonempty");
        if last.is_zero() {
            return Ok(DerivedSeries {
                k,
                index: Some(terms.len()),
                terms,
                solvable: true,
            });
        }
        let next = k_derived_step(alg, last, k)?;
        if next.dim() >= last.dim() {
            return Ok(DerivedSeries {
                k,
                terms,
                solvable: false,
                index: None,
            });
        }
        terms.push(next);
    }
}

/// Matrix of the adjoint action `y ↦ [x, y]` for a basis vector `x = e_i`.
fn ad<S: Scalar>(alg: &NAryAlgebra<S>, i: usize) -> Matrix<S> {
    let cols: Vec<Vec<S>> = (0..alg.dim()).map(|j| alg.basis_bracket(&[i, j])).collect();
    Matrix::from_columns(&cols, alg.dim()).expect("square")
}

/// `κ(e_i, e_j) = tr(ad e_i ∘ ad e_j)` of a Lie algebra.
pub fn killing_form<S: Scalar>(alg: &NAryAlgebra<S>) -> Result<Matrix<S>> {
    require_arity_2(alg)?;
    if !check_skew(alg).holds {
        return Err(Error::Precondition(format!(
            "{} is not skew-symmetric",
            alg.name()
        )));
    }
    let d = alg.dim();
    let ads: Vec<Matrix<S>> = (0..d).map(|i| ad(alg, i)).collect();
    let mut k = Matrix::zeros(d, d);
    for i in 0..d {
        for j in i..d {
            let t = ads[i].mul(&ads[j])?.trace();
            k.set(j, i, t.clone());
            k.set(i, j, t);
        }
    }
    Ok(k)
}

fn derived_algebra<S: Scalar>(alg: &NAryAlgebra<S>) -> Result<Subspace<S>> {
    let vals: Vec<Vec<S>> = alg.products().map(|(_, v)| v.to_vec()).collect();
    Subspace::span(&vals, alg.dim())
}

/// The solvable radical of a Lie algebra, `[g,g]^⊥` under the Killing form.
fn lie_radical<S: Scalar>(g: &NAryAlgebra<S>) -> Result<Subspace<S>> {
    let kappa = killing_form(g)?;
    let derived = derived_algebra(g)?;
    let rows: Vec<Vec<S>> = derived
        .basis()
        .iter()
        .map(|y| kappa.mul_vec(y))
        .collect::<Result<_>>()?;
    if rows.is_empty() {
        return Ok(Subspace::full(g.dim()));
    }
    Ok(nullspace(&Matrix::from_rows(rows, g.dim())?))
}

fn require_leibniz<S: Scalar>(alg: &NAryAlgebra<S>) -> Result<()> {
    if let Some(w) = check_fundamental_identity(alg).witness {
        return Err(Error::InvalidAlgebra(format!(
            "{} is not a Leibniz algebra; first violation at {:?}",
            alg.name(),
            w.tuples
        )));
    }
    Ok(())
}

/// The maximal solvable ideal of a Leibniz algebra.
///
/// Pulls back the Lie radical of the liezation `L / Leib(L)` and re-verifies
/// the answer: an ideal, 2-solvable, and with a semisimple liezation of the quotient.
pub fn radical_leibniz<S: Scalar>(alg: &NAryAlgebra<S>) -> Result<Subspace<S>> {
    require_arity_2(alg)?;
    require_leibniz(alg)?;
    let leib = leibniz_kernel_2(alg)?;
    let g = quotient(alg, &leib)?;
    let rad_g = lie_radical(&g)?;
    let mut rad = leib.clone();
    for b in rad_g.basis() {
        rad.insert(&lift_from_quotient(&leib, b))?;
    }

    let fail = |what: &str| Error::Verification(format!("radical of {}: {what}", alg.name()));
    if !is_ideal(alg, &rad)? {
        return Err(fail("result is not an ideal"));
    }
    if !derived_series(alg, &rad, 2)?.solvable {
        return Err(fail("result is not solvable"));
    }
    let top = quotient(alg, &rad)?;
    let top_lie = quotient(&top, &leibniz_kernel_2(&top)?)?;
    if top_lie.dim() > 0 && killing_form(&top_lie)?.determinant()?.is_zero() {
        return Err(fail("quotient liezation has degenerate Killing form"));
    }
    Ok(rad)
}

/// Whether the radical equals the Leibniz kernel.
pub fn is_semisimple_leibniz<S: Scalar>(alg: &NAryAlgebra<S>) -> Result<bool> {
    Ok(radical_leibniz(alg)? == leibniz_kernel_2(alg)?)
}

/// `Rad_k(U_n(L))` for `2 ≤ k ≤ n`, read off as the radical of `L` in the shared
/// coordinates, and checked to be an ideal of `U_n(L)` that is k-solvable there.
pub fn rad_k_of_un<S: Scalar>(alg: &NAryAlgebra<S>, n: usize, k: usize) -> Result<Subspace<S>> {
    require_arity_2(alg)?;
    if k < 2 || k > n {
        return Err(Error::Precondition(format!(
            "k must lie in 2..={n}, got {k}"
        )));
    }
    let rad = radical_leibniz(alg)?;
    let un = u_n(alg, n)?;
    if !is_ideal(&un, &rad)? {
        return Err(Error::Verification(format!(
            "radical of {} is not an ideal of {}",
            alg.name(),
            un.name()
        )));
    }
    if !derived_series(&un, &rad, k)?.solvable {
        return Err(Error::Verification(format!(
            "radical of {} is not {k}-solvable in {}",
            alg.name(),
            un.name()
        )));
    }
    Ok(rad)
}

/// Every operator `v ↦ [b_1, …, v, …, b_n]` with basis vectors `b` around slot `s`,
/// reduced to a basis of their linear span.
pub fn multiplication_operators<S: Scalar>(alg: &NAryAlgebra<S>) -> Vec<Matrix<S>> {
    let d = alg.dim();
    let n = alg.arity();
    let mut span = Subspace::zero(d * d);
    for slot in 0..n {
        for mut frame in tuples(d, n - 1) {
            frame.insert(slot, 0);
            let mut flat = vec![S::zero(); d * d];
            for j in 0..d {
                frame[slot] = j;
                if let Some(c) = alg.basis_product(&frame) {
                    for (i, x) in c.iter().enumerate() {
                        flat[i * d + j] = x.clone();
                    }
                }
            }
            span.insert(&flat).expect("length d*d");
        }
    }
    span.basis()
        .iter()
        .map(|f| flat_to_map(f, d).expect("length d*d").matrix().clone())
        .collect()
}

/// Restricts operators leaving `sub` invariant to coordinates in `sub`'s basis.
fn restrict_operators<S: Scalar>(ops: &[Matrix<S>], sub: &Subspace<S>) -> Result<Vec<Matrix<S>>> {
    let k = sub.dim();
    ops.iter()
        .map(|m| {
            let cols = sub
                .basis()
                .iter()
                .map(|w| {
                    sub.coordinates_of(&m.mul_vec(w)?)?.ok_or_else(|| {
                        Error::Precondition("operator does not preserve the subspace".into())
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            Matrix::from_columns(&cols, k)
        })
        .collect()
}

/// Whether the unital associative algebra generated by `ops` is all of `M_d`.
///
/// If so, the only subspaces invariant under every operator are `0` and the
/// whole space, over any field.
pub fn generates_full_matrix_algebra<S: Scalar>(ops: &[Matrix<S>], d: usize) -> bool {
    if d <= 1 {
        return true;
    }
    let mut span = Subspace::zero(d * d);
    let identity: Matrix<S> = Matrix::identity(d);
    span.insert(identity.entries()).expect("length d*d");
    let mut frontier: Vec<Matrix<S>> = vec![identity];
    while !frontier.is_empty() && !span.is_full() {
        let mut next = Vec::new();
        for x in &frontier {
            for g in ops {
                let p = x.mul(g).expect("square");
                if span.insert(p.entries()).expect("length d*d") {
                    next.push(p);
                }
            }
        }
        frontier = next;
    }
    span.is_full()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SimplicityStatus {
    Simple,
    NotSimple,
    Unknown,
}

impl SimplicityStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            SimplicityStatus::Simple => "simple",
            SimplicityStatus::NotSimple => "not_simple",
            SimplicityStatus::Unknown => "unknown",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SimplicityVerdict<S> {
    pub status: SimplicityStatus,
    /// A proper nonzero ideal that is not allowed by the definition.
    pub witness: Option<Subspace<S>>,
    /// Distinct closures of the probes that are neither zero nor the whole algebra.
    pub nontrivial_ideals: Vec<Subspace<S>>,
    pub probes: usize,
    pub note: String,
}

/// Decides simplicity where it can.
///
/// Probes are the ideal closures of basis vectors and of pairwise basis sums;
/// any disallowed proper closure is returned as a witness. A `Simple` answer is
/// certified by showing that the multiplication operators generate the full
/// matrix algebra, so no invariant subspace can exist; for non-Lie binary
/// algebras the same is shown for `L/Leib(L)` and `Leib(L)` separately.
pub fn simplicity<S: Scalar>(alg: &NAryAlgebra<S>) -> Result<SimplicityVerdict<S>> {
    let d = alg.dim();
    if d == 0 || alg.is_abelian() {
        return Ok(SimplicityVerdict {
            status: SimplicityStatus::NotSimple,
            witness: (d >= 2)
                .then(|| Subspace::span(&[unit::<S>(d, 0)], d))
                .transpose()?,
            nontrivial_ideals: Vec::new(),
            probes: 0,
            note: "abelian".into(),
        });
    }
    let leibniz_case = alg.arity() == 2 && !check_skew(alg).holds;
    let leib = if leibniz_case {
        leibniz_kernel_2(alg)?
    } else {
        Subspace::zero(d)
    };

    let probes = closure_probes(alg)?;
    let probe_count = d * (d + 1) / 2;
    let nontrivial: Vec<Subspace<S>> = probes
        .into_iter()
        .map(|(_, s)| s)
        .filter(|s| !s.is_zero() && !s.is_full())
        .collect();
    let verdict = |status, witness, note: &str| SimplicityVerdict {
        status,
        witness,
        nontrivial_ideals: nontrivial.clone(),
        probes: probe_count,
        note: note.to_string(),
    };
    if let Some(bad) = nontrivial.iter().find(|s| **s != leib) {
        return Ok(verdict(
            SimplicityStatus::NotSimple,
            Some(bad.clone()),
            "probe closure is a disallowed proper ideal",
        ));
    }

    let ops = multiplication_operators(alg);
    let certified = if !leibniz_case {
        generates_full_matrix_algebra(&ops, d)
    } else {
        let g = quotient(alg, &leib)?;
        let bracket_nonzero = leib.basis().iter().any(|w| {
            (0..d).any(|a| !is_zero_vec(&alg.bracket_unchecked(&[w.as_slice(), &unit(d, a)])))
        });
        bracket_nonzero
            && generates_full_matrix_algebra(&multiplication_operators(&g), g.dim())
            && generates_full_matrix_algebra(&restrict_operators(&ops, &leib)?, leib.dim())
    };
    if certified {
        Ok(verdict(
            SimplicityStatus::Simple,
            None,
            "multiplication operators generate the full matrix algebra",
        ))
    } else {
        Ok(verdict(
            SimplicityStatus::Unknown,
            None,
            "no disallowed probe ideal, but no certificate either",
        ))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct InvertibleRReport<S> {
    /// First basis tuple (0-based) whose right multiplication is invertible.
    pub invertible_at: Option<Vec<usize>>,
    pub kernel: Subspace<S>,
    /// False only if an invertible right multiplication exists and the kernel is proper.
    pub holds: bool,
}

/// Searches basis `(n−1)`-tuples for an invertible right multiplication and,
/// if one exists, checks that the Leibniz n-kernel is the whole algebra.
pub fn invertible_r_implies_kernel<S: Scalar>(
    alg: &NAryAlgebra<S>,
) -> Result<InvertibleRReport<S>> {
    let d = alg.dim();
    let mut invertible_at = None;
    for t in tuples(d, alg.arity() - 1) {
        let args: Vec<Vec<S>> = t.iter().map(|&i| unit(d, i)).collect();
        if right_mult(alg, &args)?.is_invertible() {
            invertible_at = Some(t);
            break;
        }
    }
    let kernel = leibniz_n_kernel(alg)?;
    Ok(InvertibleRReport {
        holds: invertible_at.is_none() || kernel.is_full(),
        invertible_at,
        kernel,
    })
}

/// Checks that every basis derivation maps `rad` into itself.
/// A witness names the derivation's index in the basis of the derivation space.
pub fn derivation_preserves_radical<S: Scalar>(
    alg: &NAryAlgebra<S>,
    rad: &Subspace<S>,
) -> Result<CheckReport<S>> {
    if rad.is_zero() || rad.is_full() {
        return Ok(CheckReport::pass());
    }
    let ders = derivation_space(alg);
    for (i, flat) in ders.basis().iter().enumerate() {
        let m = flat_to_map(flat, alg.dim())?;
        for w in rad.basis() {
            let image = m.apply(w)?;
            let rem = rad.reduce(&image)?;
            if !is_zero_vec(&rem) {
                return Ok(CheckReport::fail(Witness {
                    tuples: vec![vec![i]],
                    lhs: image,
                    rhs: rem,
                    note: format!("derivation {} moves a radical vector outside", i + 1),
                }));
            }
        }
    }
    Ok(CheckReport::pass())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functors::{
        build_invertible_example, build_l2, build_lie_semidirect, build_semisimple_leibniz,
        build_sl2, build_solvable_2d, build_vn, BipartiteSpec,
    };
    use crate::Rational;

    fn q(k: i64) -> Rational {
        Rational::from_int(k)
    }

    fn coord(idx: &[usize], d: usize) -> Subspace<Rational> {
        Subspace::coordinate(idx.iter().copied(), d).unwrap()
    }

    fn leibniz_v1() -> (NAryAlgebra<Rational>, Subspace<Rational>) {
        let (a, tag) = build_semisimple_leibniz(&BipartiteSpec::sl2_with_modules(&[1])).unwrap();
        (a, tag.radical_span())
    }

    #[test]
    fn derived_step_examples() {
        let ab = NAryAlgebra::<Rational>::abelian(3, 3).unwrap();
        for k in 1..=3 {
            assert!(k_derived_step(&ab, &Subspace::full(3), k)
                .unwrap()
                .is_zero());
        }
        let u3 = u_n(&build_sl2::<Rational>(), 3).unwrap();
        assert!(k_derived_step(&u3, &Subspace::full(3), 3)
            .unwrap()
            .is_full());
        let (a, v) = leibniz_v1();
        assert!(k_derived_step(&a, &v, 2).unwrap().is_zero());
        assert!(k_derived_step(&a, &v, 3).is_err());
        assert!(k_derived_step(&a, &v, 0).is_err());
    }

    #[test]
    fn derived_series_examples() {
        let l2 = build_l2::<Rational>();
        let zero = derived_series(&l2, &Subspace::zero(2), 2).unwrap();
        assert!(zero.solvable);
        assert_eq!(zero.index, Some(1));
        let s = derived_series(&l2, &Subspace::full(2), 2).unwrap();
        assert_eq!(
            s.terms,
            vec![Subspace::full(2), coord(&[0], 2), Subspace::zero(2)]
        );
        assert_eq!(s.index, Some(3));
        let u3 = u_n(&build_sl2::<Rational>(), 3).unwrap();
        let s = derived_series(&u3, &Subspace::full(3), 2).unwrap();
        assert!(!s.solvable);
        assert_eq!(s.terms.len(), 1);
    }

    #[test]
    fn killing_form_examples() {
        let k = killing_form(&build_sl2::<Rational>()).unwrap();
        assert_eq!(k.get(1, 1), &q(8));
        assert_eq!(k.get(0, 2), &q(4));
        assert_eq!(k.get(0, 0), &q(0));
        assert_eq!(k.determinant().unwrap(), q(-128));
        let ab = NAryAlgebra::<Rational>::abelian(2, 2).unwrap();
        assert!(killing_form(&ab).unwrap().is_zero());
        assert_eq!(
            killing_form(&build_solvable_2d::<Rational>())
                .unwrap()
                .rank(),
            1
        );
        assert!(killing_form(&build_l2::<Rational>()).is_err());
    }

    #[test]
    fn radical_examples() {
        let ab = NAryAlgebra::<Rational>::abelian(2, 3).unwrap();
        assert!(radical_leibniz(&ab).unwrap().is_full());
        assert!(radical_leibniz(&build_sl2::<Rational>()).unwrap().is_zero());
        let (semi, tag) = build_lie_semidirect::<Rational>(&[1]).unwrap();
        assert_eq!(radical_leibniz(&semi).unwrap(), tag.radical_span());
        assert!(radical_leibniz(&build_l2::<Rational>()).unwrap().is_full());
    }

    #[test]
    fn semisimple_examples() {
        assert!(is_semisimple_leibniz(&build_sl2::<Rational>()).unwrap());
        assert!(is_semisimple_leibniz(&leibniz_v1().0).unwrap());
        assert!(!is_semisimple_leibniz(&build_l2::<Rational>()).unwrap());
    }

    #[test]
    fn rad_k_examples() {
        for k in 2..=3 {
            assert!(rad_k_of_un(&build_sl2::<Rational>(), 3, k)
                .unwrap()
                .is_zero());
        }
        let (semi, tag) = build_lie_semidirect::<Rational>(&[1]).unwrap();
        for k in 2..=3 {
            assert_eq!(rad_k_of_un(&semi, 3, k).unwrap(), tag.radical_span());
        }
        assert!(rad_k_of_un(&build_l2::<Rational>(), 3, 2)
            .unwrap()
            .is_full());
        assert!(rad_k_of_un(&semi, 3, 1).is_err());
        assert!(rad_k_of_un(&semi, 3, 4).is_err());
    }

    #[test]
    fn simplicity_examples() {
        let u3 = u_n(&build_sl2::<Rational>(), 3).unwrap();
        assert_eq!(simplicity(&u3).unwrap().status, SimplicityStatus::Simple);
        assert_eq!(
            simplicity(&build_vn::<Rational>(3).unwrap())
                .unwrap()
                .status,
            SimplicityStatus::Simple
        );
        let (semi, tag) = build_lie_semidirect::<Rational>(&[1]).unwrap();
        let v = simplicity(&u_n(&semi, 3).unwrap()).unwrap();
        assert_eq!(v.status, SimplicityStatus::NotSimple);
        assert_eq!(v.witness, Some(tag.radical_span()));
        assert_eq!(v.nontrivial_ideals, vec![tag.radical_span()]);
        let ab = NAryAlgebra::<Rational>::abelian(3, 2).unwrap();
        assert_eq!(simplicity(&ab).unwrap().status, SimplicityStatus::NotSimple);
    }

    #[test]
    fn binary_simplicity_allows_the_kernel() {
        assert_eq!(
            simplicity(&build_sl2::<Rational>()).unwrap().status,
            SimplicityStatus::Simple
        );
        // sl2 acting irreducibly on V(1): the only ideals are 0, V(1) and L
        let (a, _) = leibniz_v1();
        assert_eq!(simplicity(&a).unwrap().status, SimplicityStatus::Simple);
        let (b, _) =
            build_semisimple_leibniz::<Rational>(&BipartiteSpec::sl2_with_modules(&[1, 3]))
                .unwrap();
        assert_eq!(simplicity(&b).unwrap().status, SimplicityStatus::NotSimple);
        assert_eq!(
            simplicity(&build_solvable_2d::<Rational>()).unwrap().status,
            SimplicityStatus::NotSimple
        );
    }

    #[test]
    fn burnside_certificate() {
        let sl2 = build_sl2::<Rational>();
        assert!(generates_full_matrix_algebra(
            &multiplication_operators(&sl2),
            3
        ));
        let heis = crate::functors::build_heisenberg::<Rational>();
        assert!(!generates_full_matrix_algebra(
            &multiplication_operators(&heis),
            3
        ));
    }

    #[test]
    fn invertible_r_examples() {
        let inv = build_invertible_example(&[q(1), q(-1), q(5)], 3).unwrap();
        let r = invertible_r_implies_kernel(&inv).unwrap();
        assert_eq!(r.invertible_at, Some(vec![0, 1]));
        assert!(r.kernel.is_full());
        assert!(r.holds);
        let u3 = u_n(&build_sl2::<Rational>(), 3).unwrap();
        let r = invertible_r_implies_kernel(&u3).unwrap();
        assert_eq!(r.invertible_at, None);
        assert!(r.kernel.is_full());
        let ab = NAryAlgebra::<Rational>::abelian(3, 2).unwrap();
        let r = invertible_r_implies_kernel(&ab).unwrap();
        assert_eq!(r.invertible_at, None);
        assert!(r.kernel.is_zero());
    }

    #[test]
    fn derivations_preserve_radical() {
        let (semi, tag) = build_lie_semidirect::<Rational>(&[1]).unwrap();
        let u3 = u_n(&semi, 3).unwrap();
        assert!(
            derivation_preserves_radical(&u3, &tag.radical_span())
                .unwrap()
                .holds
        );
        assert!(
            derivation_preserves_radical(&u3, &Subspace::zero(5))
                .unwrap()
                .holds
        );
        assert!(
            derivation_preserves_radical(&u3, &Subspace::full(5))
                .unwrap()
                .holds
        );
        // sl2's own span is not preserved by every derivation of U_3(sl2 ⋉ V(1))
        assert!(
            !derivation_preserves_radical(&u3, &tag.g_span())
                .unwrap()
                .holds
        );
    }
}
