//! Ideals of n-ary algebras: slot-wise ideal tests, ideal closure, the
//! equal-pair subspaces `I_ij`, Leibniz kernels, quotients, and the complete
//! ideal lattice of the semisimple builder family.
//!
//! Slots are numbered from 1 (a "1-ideal" absorbs products in the first
//! slot); basis indices are 0-based as everywhere else in the crate.

use crate::algebra::{tuples, CheckReport, NAryAlgebra, Witness};
use crate::error::{Error, Result};
use crate::exactlin::Subspace;
use crate::functors::{build_semisimple_leibniz, BipartiteSpec};
use crate::scalar::{is_zero_vec, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub struct IdealVerdict<S> {
    pub subspace: Subspace<S>,
    /// Entry `s − 1` says whether the subspace is an `s`-ideal.
    pub is_s_ideal: Vec<bool>,
    pub is_ideal: bool,
}

fn check_ambient<S: Scalar>(alg: &NAryAlgebra<S>, v: &Subspace<S>) -> Result<()> {
    if v.ambient_dim() != alg.dim() {
        return Err(Error::AmbientMismatch {
            left: alg.dim(),
            right: v.ambient_dim(),
        });
    }
    Ok(())
}

fn check_slot<S: Scalar>(alg: &NAryAlgebra<S>, s: usize) -> Result<()> {
    if s == 0 || s > alg.arity() {
        return Err(Error::SlotOutOfRange {
            slot: s,
            arity: alg.arity(),
        });
    }
    Ok(())
}

/// Basis tuples of the slots other than `slot` (0-based), with a placeholder at `slot`.
fn frames(dim: usize, arity: usize, slot: usize) -> impl Iterator<Item = Vec<usize>> {
    tuples(dim, arity - 1).map(move |mut t| {
        t.insert(slot, 0);
        t
    })
}

/// Whether `[L, …, L, V, L, …, L] ⊆ V` with `V` in slot `s` (1-based).
/// A failing report names the frame tuple and the offending basis row of `V`.
pub fn is_s_ideal<S: Scalar>(
    alg: &NAryAlgebra<S>,
    v: &Subspace<S>,
    s: usize,
) -> Result<CheckReport<S>> {
    check_ambient(alg, v)?;
    check_slot(alg, s)?;
    let slot = s - 1;
    for (row_index, w) in v.basis().iter().enumerate() {
        for frame in frames(alg.dim(), alg.arity(), slot) {
            let value = alg.bracket_with_slot(&frame, slot, w);
            let rem = v.reduce(&value)?;
            if !is_zero_vec(&rem) {
                return Ok(CheckReport::fail(Witness {
                    tuples: vec![frame],
                    lhs: value,
                    rhs: rem,
                    note: format!(
                        "slot {s} holds basis row {} of the subspace; remainder shown as rhs",
                        row_index + 1
                    ),
                }));
            }
        }
    }
    Ok(CheckReport::pass())
}

pub fn ideal_verdict<S: Scalar>(alg: &NAryAlgebra<S>, v: &Subspace<S>) -> Result<IdealVerdict<S>> {
    let flags = (1..=alg.arity())
        .map(|s| is_s_ideal(alg, v, s).map(|r| r.holds))
        .collect::<Result<Vec<_>>>()?;
    Ok(IdealVerdict {
        subspace: v.clone(),
        is_ideal: flags.iter().all(|&f| f),
        is_s_ideal: flags,
    })
}

pub fn is_ideal<S: Scalar>(alg: &NAryAlgebra<S>, v: &Subspace<S>) -> Result<bool> {
    for s in 1..=alg.arity() {
        if !is_s_ideal(alg, v, s)?.holds {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Least ideal containing `seed`, together with the number of multiplication rounds used.
///
/// Each round multiplies the vectors added in the previous round into every
/// slot against basis vectors elsewhere; the rank grows every round until the
/// fixpoint, so at most `dim` rounds run.
pub fn ideal_closure_rounds<S: Scalar>(
    alg: &NAryAlgebra<S>,
    seed: &Subspace<S>,
) -> Result<(Subspace<S>, usize)> {
    check_ambient(alg, seed)?;
    let mut space = seed.clone();
    let mut frontier: Vec<Vec<S>> = seed.basis().to_vec();
    let mut rounds = 0;
    while !frontier.is_empty() && !space.is_full() {
        rounds += 1;
        let mut added = Vec::new();
        'round: for w in &frontier {
            for slot in 0..alg.arity() {
                for frame in frames(alg.dim(), alg.arity(), slot) {
                    let value = alg.bracket_with_slot(&frame, slot, w);
                    if space.insert(&value)? {
                        added.push(value);
                        if space.is_full() {
                            break 'round;
                        }
                    }
                }
            }
        }
        frontier = added;
    }
    Ok((space, rounds))
}

pub fn ideal_closure<S: Scalar>(alg: &NAryAlgebra<S>, seed: &Subspace<S>) -> Result<Subspace<S>> {
    ideal_closure_rounds(alg, seed).map(|(s, _)| s)
}

/// Polarizing vectors `e_a` and `e_a + e_b` (a < b), given as index lists.
fn polarizers(dim: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..dim)
        .flat_map(move |a| std::iter::once(vec![a]).chain((a + 1..dim).map(move |b| vec![a, b])))
}

/// `I_ij = span{[x_1, …, x_n] : x_i = x_j}` for slots `1 ≤ i < j ≤ n`.
///
/// The quadratic condition is spanned exactly by putting `v ∈ {e_a} ∪ {e_a + e_b}`
/// in both slots, with basis vectors in the remaining ones.
pub fn i_ij<S: Scalar>(alg: &NAryAlgebra<S>, i: usize, j: usize) -> Result<Subspace<S>> {
    check_slot(alg, i)?;
    check_slot(alg, j)?;
    if i >= j {
        return Err(Error::Precondition(format!(
            "need i < j, got i = {i}, j = {j}"
        )));
    }
    let (si, sj) = (i - 1, j - 1);
    let d = alg.dim();
    let n = alg.arity();
    let mut span = Subspace::zero(d);
    for rest in tuples(d, n - 2) {
        let mut frame = rest.clone();
        frame.insert(si, 0);
        frame.insert(sj, 0);
        for p in polarizers(d) {
            let mut value = vec![S::zero(); d];
            for &a in &p {
                for &b in &p {
                    frame[si] = a;
                    frame[sj] = b;
                    if let Some(c) = alg.basis_product(&frame) {
                        for (x, y) in value.iter_mut().zip(c) {
                            *x += y;
                        }
                    }
                }
            }
            span.insert(&value)?;
            if span.is_full() {
                return Ok(span);
            }
        }
    }
    Ok(span)
}

/// How the Leibniz n-kernel was obtained.
#[derive(Clone, Debug, PartialEq)]
pub struct KernelComputation<S> {
    /// `Σ_{i<j} I_ij`.
    pub generators: Subspace<S>,
    pub kernel: Subspace<S>,
    /// Whether the ideal closure added anything beyond the generators.
    pub closure_grew: bool,
}

pub fn leibniz_n_kernel_detail<S: Scalar>(alg: &NAryAlgebra<S>) -> Result<KernelComputation<S>> {
    let n = alg.arity();
    let mut generators = Subspace::zero(alg.dim());
    for i in 1..=n {
        for j in i + 1..=n {
            generators = generators.sum(&i_ij(alg, i, j)?)?;
        }
    }
    let kernel = ideal_closure(alg, &generators)?;
    Ok(KernelComputation {
        closure_grew: kernel != generators,
        generators,
        kernel,
    })
}

/// The ideal generated by all brackets with two equal arguments.
pub fn leibniz_n_kernel<S: Scalar>(alg: &NAryAlgebra<S>) -> Result<Subspace<S>> {
    leibniz_n_kernel_detail(alg).map(|k| k.kernel)
}

/// The span of squares `[x, x]` of a binary algebra.
pub fn leibniz_kernel_2<S: Scalar>(alg: &NAryAlgebra<S>) -> Result<Subspace<S>> {
    if alg.arity() != 2 {
        return Err(Error::ArityMismatch {
            expected: 2,
            found: alg.arity(),
        });
    }
    let d = alg.dim();
    let mut span = Subspace::zero(d);
    for a in 0..d {
        span.insert(&alg.basis_bracket(&[a, a]))?;
        for b in a + 1..d {
            // [e_a + e_b, e_a + e_b] minus the two pure squares
            let mut v = alg.basis_bracket(&[a, b]);
            for (x, y) in v.iter_mut().zip(alg.basis_bracket(&[b, a])) {
                *x += y;
            }
            span.insert(&v)?;
        }
    }
    Ok(span)
}

/// The quotient algebra on the coordinate section spanned by the non-pivot
/// columns of the ideal's RREF basis.
pub fn quotient<S: Scalar>(alg: &NAryAlgebra<S>, ideal: &Subspace<S>) -> Result<NAryAlgebra<S>> {
    check_ambient(alg, ideal)?;
    for s in 1..=alg.arity() {
        let report = is_s_ideal(alg, ideal, s)?;
        if let Some(w) = report.witness {
            return Err(Error::NotAnIdeal(format!(
                "not a {s}-ideal; frame {:?}: {}",
                w.tuples[0], w.note
            )));
        }
    }
    let section = ideal.non_pivots();
    let labels = section.iter().map(|&c| alg.labels()[c].clone()).collect();
    let mut out = NAryAlgebra::new(format!("{}/I", alg.name()), alg.arity(), labels)?;
    for t in tuples(section.len(), alg.arity()) {
        let key: Vec<usize> = t.iter().map(|&i| section[i]).collect();
        let Some(c) = alg.basis_product(&key) else {
            continue;
        };
        let rem = ideal.reduce(c)?;
        out.set_product(&t, section.iter().map(|&c| rem[c].clone()).collect())?;
    }
    out.set_metadata(format!(
        "quotient of {} by an ideal of dim {}",
        alg.name(),
        ideal.dim()
    ));
    Ok(out)
}

/// Lifts quotient coordinates back to the section of `L` they came from.
pub fn lift_from_quotient<S: Scalar>(ideal: &Subspace<S>, x: &[S]) -> Vec<S> {
    let mut v = vec![S::zero(); ideal.ambient_dim()];
    for (&c, xi) in ideal.non_pivots().iter().zip(x) {
        v[c] = xi.clone();
    }
    v
}

/// Ideal test for a ternary algebra of the form `U_3(L)`, phrased in the
/// underlying binary algebra: `[V,[L,L]] ⊆ V` and `[L,[V,L]] ⊆ V`.
pub fn is_ideal_of_u3<S: Scalar>(binary: &NAryAlgebra<S>, v: &Subspace<S>) -> Result<bool> {
    if binary.arity() != 2 {
        return Err(Error::ArityMismatch {
            expected: 2,
            found: binary.arity(),
        });
    }
    check_ambient(binary, v)?;
    let d = binary.dim();
    let derived = {
        let vals: Vec<Vec<S>> = tuples(d, 2).map(|t| binary.basis_bracket(&t)).collect();
        Subspace::span(&vals, d)?
    };
    for w in v.basis() {
        // [V, [L, L]]
        for x in derived.basis() {
            if !v.contains(&binary.bracket_unchecked(&[w.as_slice(), x.as_slice()]))? {
                return Ok(false);
            }
        }
        // [L, [V, L]]
        for b in 0..d {
            let inner = binary.bracket_with_slot(&[0, b], 0, w);
            for a in 0..d {
                if !v.contains(&binary.bracket_with_slot(&[a, 0], 1, &inner))? {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Ideal closures of every basis vector and every pairwise sum of basis vectors,
/// deduplicated, in probe order. Each entry carries the first probe that produced it.
pub fn closure_probes<S: Scalar>(alg: &NAryAlgebra<S>) -> Result<Vec<(Vec<usize>, Subspace<S>)>> {
    let d = alg.dim();
    let mut found: Vec<(Vec<usize>, Subspace<S>)> = Vec::new();
    for p in polarizers(d) {
        let mut v = vec![S::zero(); d];
        for &a in &p {
            v[a] = S::one();
        }
        let c = ideal_closure(alg, &Subspace::span(&[v], d)?)?;
        if !found.iter().any(|(_, s)| *s == c) {
            found.push((p, c));
        }
    }
    Ok(found)
}

/// Every sum of a subset of `generators`, together with the zero subspace;
/// deduplicated and sorted by dimension, then pivots.
pub fn sums_of<S: Scalar>(generators: &[Subspace<S>], ambient: usize) -> Result<Vec<Subspace<S>>> {
    let mut all = vec![Subspace::zero(ambient)];
    for g in generators {
        let mut next = all.clone();
        for s in &all {
            let t = s.sum(g)?;
            if !next.contains(&t) {
                next.push(t);
            }
        }
        all = next;
    }
    sort_subspaces(&mut all);
    Ok(all)
}

pub(crate) fn sort_subspaces<S: Scalar>(v: &mut [Subspace<S>]) {
    v.sort_by(|a, b| {
        (a.dim(), a.pivots())
            .cmp(&(b.dim(), b.pivots()))
            .then_with(|| a.to_string().cmp(&b.to_string()))
    });
}

/// The complete ideal lattice of an indecomposable semisimple Leibniz algebra
/// built from `spec`:
///
/// * abelian ideals `⊕_{k∈A} I_k` for every set `A` of modules;
/// * `(⊕_{i∈B} g_i) ⋉ (⊕_{j∈N(B)} I_j) ⊕ (⊕_{k∈C} I_k)` for nonempty `B`
///   and every `C` disjoint from the neighbourhood `N(B)`.
///
/// Every returned subspace is re-checked slot by slot against the built algebra.
pub fn enumerate_semisimple_ideals<S: Scalar>(spec: &BipartiteSpec) -> Result<Vec<Subspace<S>>> {
    spec.validate()?;
    if !spec.is_connected() {
        return Err(Error::DisconnectedSpec);
    }
    let (alg, tag) = build_semisimple_leibniz::<S>(spec)?;
    let d = alg.dim();
    let m = spec.left.len();
    let k = spec.right.len();
    let modules_sum = |mask: usize| -> Vec<usize> {
        (0..k)
            .filter(|j| mask >> j & 1 == 1)
            .flat_map(|j| tag.module_parts[j].iter().copied())
            .collect()
    };
    let mut out: Vec<Subspace<S>> = Vec::new();
    let mut push = |coords: Vec<usize>| -> Result<()> {
        let s = Subspace::coordinate(coords, d)?;
        if !out.contains(&s) {
            out.push(s);
        }
        Ok(())
    };
    for a in 0..1usize << k {
        push(modules_sum(a))?;
    }
    for b in 1..1usize << m {
        let mut neighbourhood = 0usize;
        let mut coords = Vec::new();
        for i in (0..m).filter(|i| b >> i & 1 == 1) {
            coords.extend(tag.g_parts[i].iter().copied());
            for j in spec.modules_of(i) {
                neighbourhood |= 1 << j;
            }
        }
        let free = ((1usize << k) - 1) & !neighbourhood;
        // every subset C of the free modules
        let mut c = free;
        loop {
            let mut all = coords.clone();
            all.extend(modules_sum(neighbourhood | c));
            push(all)?;
            if c == 0 {
                break;
            }
            c = (c - 1) & free;
        }
    }
    for s in &out {
        if !is_ideal(&alg, s)? {
            return Err(Error::Verification(format!(
                "enumerated subspace {s} is not an ideal of {}",
                alg.name()
            )));
        }
    }
    sort_subspaces(&mut out);
    Ok(out)
}
