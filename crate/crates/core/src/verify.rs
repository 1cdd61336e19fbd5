//! The check suite: `T1` … `T14` evaluated over a [`Catalog`].
//!
//! Every check returns a [`CheckOutcome`]; internal errors become failures
//! carrying the error text, never panics. Check IDs are frozen.

use std::time::{Duration, Instant};

use num_traits::Zero;
use rand::seq::SliceRandom;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{
    check_fundamental_identity, check_skew, direct_sum, equal_tensor, is_homomorphism,
    restrict_to_coordinates, right_mult, NAryAlgebra,
};
use crate::catalog::Catalog;
use crate::exactlin::{Matrix, Subspace};
use crate::functors::{build_sl2, dt_basic, u_n};
use crate::ideals::{
    closure_probes, enumerate_semisimple_ideals, i_ij, is_ideal, is_s_ideal, leibniz_kernel_2,
    leibniz_n_kernel, leibniz_n_kernel_detail, sums_of,
};
use crate::io::{subspace_to_value, witness_to_value};
use crate::random::{random_basis_change, random_vector, rng_from_seed};
use crate::scalar::{is_zero_vec, unit};
use crate::solvability::{
    derivation_preserves_radical, derived_series, invertible_r_implies_kernel, rad_k_of_un,
    radical_leibniz, simplicity, SimplicityStatus,
};
use crate::{Error, Rational, Result};

type Alg = NAryAlgebra<Rational>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Unknown,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Unknown => "unknown",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub id: &'static str,
    pub name: &'static str,
    pub status: Status,
    pub data: Value,
    pub witness: Option<Value>,
    #[serde(skip)]
    pub elapsed: Duration,
}

struct Outcome {
    status: Status,
    data: Value,
    witness: Option<Value>,
}

impl Outcome {
    fn new(ok: bool, data: Value, witness: Option<Value>) -> Self {
        Outcome {
            status: if ok { Status::Pass } else { Status::Fail },
            data,
            witness,
        }
    }
}

type CheckFn = fn(&Catalog) -> Result<Outcome>;

pub const SUITE: [(&str, &str); 14] = [
    ("T1", "identity-validity"),
    ("T2", "kernel-of-semisimple"),
    ("T3", "kernel-structure-n3"),
    ("T4", "three-lie-criterion"),
    ("T5", "invertible-right-multiplication"),
    ("T6", "simplicity"),
    ("T7", "ideal-correspondence"),
    ("T8", "direct-sum-functoriality"),
    ("T9", "levi-analogue"),
    ("T10", "solvability-monotonicity"),
    ("T11", "derivation-invariance"),
    ("T12", "non-fullness"),
    ("T13", "dt-construction"),
    ("T14", "iij-one-ideal"),
];

const CHECKS: [CheckFn; 14] = [
    t1_identity,
    t2_kernel,
    t3_kernel_structure,
    t4_three_lie,
    t5_invertible_r,
    t6_simplicity,
    t7_ideals,
    t8_direct_sum,
    t9_levi,
    t10_monotonicity,
    t11_derivations,
    t12_non_fullness,
    t13_dt,
    t14_iij,
];

/// Whether a check is selected by `filter`: an exact ID (case-insensitive) or a name substring.
pub fn matches_filter(id: &str, name: &str, filter: &str) -> bool {
    id.eq_ignore_ascii_case(filter) || name.contains(&filter.to_ascii_lowercase())
}

/// Runs the selected checks concurrently; results are in ID order.
pub fn run_suite(catalog: &Catalog, filter: Option<&str>) -> Vec<CheckOutcome> {
    let selected: Vec<usize> = (0..SUITE.len())
        .filter(|&i| filter.is_none_or(|f| matches_filter(SUITE[i].0, SUITE[i].1, f)))
        .collect();
    selected
        .par_iter()
        .map(|&i| run_check(catalog, i))
        .collect()
}

fn run_check(catalog: &Catalog, i: usize) -> CheckOutcome {
    let (id, name) = SUITE[i];
    let start = Instant::now();
    let outcome = CHECKS[i](catalog).unwrap_or_else(|e| Outcome {
        status: Status::Fail,
        data: json!({ "error": e.to_string() }),
        witness: None,
    });
    CheckOutcome {
        id,
        name,
        status: outcome.status,
        data: outcome.data,
        witness: outcome.witness,
        elapsed: start.elapsed(),
    }
}

fn get<'a>(c: &'a Catalog, key: &str) -> Result<&'a Alg> {
    c.get(key)
        .ok_or_else(|| Error::Precondition(format!("catalog has no entry {key:?}")))
}

fn t1_identity(c: &Catalog) -> Result<Outcome> {
    let mut data = serde_json::Map::new();
    let mut witness = None;
    for e in c.entries() {
        let r = check_fundamental_identity(&e.algebra);
        if let (None, Some(w)) = (&witness, &r.witness) {
            witness = Some(json!({ "algebra": e.key, "violation": witness_to_value(w) }));
        }
        data.insert(e.key.clone(), json!(r.holds));
    }
    Ok(Outcome::new(
        witness.is_none(),
        Value::Object(data),
        witness,
    ))
}

const SEMISIMPLE: [&str; 4] = ["sl2", "sl2+sl2", "bip-v1", "bip-v1-v3"];

fn t2_kernel(c: &Catalog) -> Result<Outcome> {
    let mut rows = Vec::new();
    let mut witness = None;
    for key in SEMISIMPLE {
        let l = get(c, key)?;
        for n in [3, 4] {
            let kernel = leibniz_n_kernel(&u_n(l, n)?)?;
            let ok = kernel == Subspace::full(l.dim());
            if !ok && witness.is_none() {
                witness = Some(json!({
                    "algebra": key, "n": n,
                    "kernel": subspace_to_value(&kernel, l.labels()),
                }));
            }
            rows.push(
                json!({ "algebra": key, "n": n, "dim": l.dim(), "kernel_dim": kernel.dim() }),
            );
        }
    }
    Ok(Outcome::new(witness.is_none(), json!(rows), witness))
}

fn t3_kernel_structure(c: &Catalog) -> Result<Outcome> {
    let mut rows = Vec::new();
    let mut ok = true;
    for e in c.binary() {
        let u3 = u_n(&e.algebra, 3)?;
        let i12 = i_ij(&u3, 1, 2)?;
        let i13 = i_ij(&u3, 1, 3)?;
        let i23 = i_ij(&u3, 2, 3)?;
        let detail = leibniz_n_kernel_detail(&u3)?;
        let row = json!({
            "algebra": e.key,
            "i23_zero": i23.is_zero(),
            "i13_eq_i12": i13 == i12,
            "i12_ideal": is_ideal(&u3, &i12)?,
            "kernel_eq_i12": detail.kernel == i12,
            "closure_grew": detail.closure_grew,
            "i12_dim": i12.dim(),
        });
        ok &= row["i23_zero"] == true
            && row["i13_eq_i12"] == true
            && row["i12_ideal"] == true
            && row["kernel_eq_i12"] == true
            && !detail.closure_grew;
        rows.push(row);
    }
    Ok(Outcome::new(ok, json!(rows), None))
}

/// `[x,[x,y]] = 0` for `x ∈ {e_a, e_a + e_b}` and basis `y`, the polarized form
/// of the quadratic condition.
pub fn polarized_condition(l: &Alg) -> bool {
    let d = l.dim();
    for a in 0..d {
        for b in a..d {
            let mut x = unit::<Rational>(d, a);
            if b != a {
                x[b] = Rational::from_integer(1.into());
            }
            for y in 0..d {
                let inner = l.bracket_unchecked(&[x.as_slice(), &unit(d, y)]);
                if !is_zero_vec(&l.bracket_unchecked(&[x.as_slice(), &inner])) {
                    return false;
                }
            }
        }
    }
    true
}

fn t4_three_lie(c: &Catalog) -> Result<Outcome> {
    let mut instances: Vec<(String, Alg)> = c
        .binary()
        .map(|e| (e.key.clone(), e.algebra.clone()))
        .collect();
    let pool: Vec<_> = c.binary().collect();
    let mut rng = rng_from_seed(0x7434);
    for i in 0..20 {
        let e = pool.choose(&mut rng).expect("catalog has binary algebras");
        let (_, changed) = random_basis_change(&mut rng, &e.algebra)?;
        instances.push((format!("random{}:{}", i + 1, e.key), changed));
    }
    let mut rows = Vec::new();
    let mut witness = None;
    let (mut seen_true, mut seen_false) = (false, false);
    for (key, l) in &instances {
        let skew = check_skew(&u_n(l, 3)?).holds;
        let polar = polarized_condition(l);
        seen_true |= skew;
        seen_false |= !skew;
        if skew != polar && witness.is_none() {
            witness = Some(json!({ "algebra": key, "skew": skew, "polarized": polar }));
        }
        rows.push(json!({ "algebra": key, "u3_skew": skew, "polarized": polar }));
    }
    let ok = witness.is_none() && seen_true && seen_false;
    Ok(Outcome::new(
        ok,
        json!({ "instances": rows, "both_directions_exercised": seen_true && seen_false }),
        witness,
    ))
}

fn t5_invertible_r(c: &Catalog) -> Result<Outcome> {
    let inv = invertible_r_implies_kernel(get(c, "inv")?)?;
    let inv_ok = inv.invertible_at == Some(vec![0, 1]) && inv.kernel.is_full();

    let u3 = u_n(get(c, "sl2")?, 3)?;
    let basis = invertible_r_implies_kernel(&u3)?;
    let mut rng = rng_from_seed(0x7435);
    let mut singular = 0;
    for _ in 0..100 {
        let x = random_vector(&mut rng, 3, 3);
        let y = random_vector(&mut rng, 3, 3);
        if right_mult(&u3, &[x, y])?.determinant().is_zero() {
            singular += 1;
        }
    }
    let u3_ok = basis.invertible_at.is_none() && basis.kernel.is_full() && singular == 100;
    Ok(Outcome::new(
        inv_ok && u3_ok,
        json!({
            "invertible_example": {
                "invertible_at": inv.invertible_at.map(|t| t.iter().map(|i| i + 1).collect::<Vec<_>>()),
                "kernel_dim": inv.kernel.dim(),
            },
            "u3_sl2": {
                "invertible_basis_tuple": basis.invertible_at.is_some(),
                "kernel_dim": basis.kernel.dim(),
                "singular_random_tuples": singular,
            },
        }),
        None,
    ))
}

fn t6_simplicity(c: &Catalog) -> Result<Outcome> {
    let sl2 = get(c, "sl2")?;
    let mut rows = Vec::new();
    let mut ok = true;
    let mut unknown = false;
    let mut expect_simple = |key: &str, alg: &Alg| -> Result<()> {
        let v = simplicity(alg)?;
        ok &= v.status != SimplicityStatus::NotSimple;
        unknown |= v.status == SimplicityStatus::Unknown;
        rows.push(json!({ "algebra": key, "status": v.status.as_str() }));
        Ok(())
    };
    expect_simple("U3(sl2)", &u_n(sl2, 3)?)?;
    expect_simple("U4(sl2)", &u_n(sl2, 4)?)?;
    expect_simple("v3", get(c, "v3")?)?;

    let l = get(c, "bip-v1")?;
    let leib = leibniz_kernel_2(l)?;
    let v = simplicity(&u_n(l, 3)?)?;
    let unique = v.status == SimplicityStatus::NotSimple
        && v.nontrivial_ideals == [leib.clone()]
        && leib.dim() == 2;
    ok &= unique;
    rows.push(json!({
        "algebra": "U3(bip-v1)",
        "status": v.status.as_str(),
        "nontrivial_ideals": v.nontrivial_ideals.iter().map(|s| s.dim()).collect::<Vec<_>>(),
        "leib_dim": leib.dim(),
    }));
    let status = match (ok, unknown) {
        (false, _) => Status::Fail,
        (true, true) => Status::Unknown,
        (true, false) => Status::Pass,
    };
    Ok(Outcome {
        status,
        data: json!(rows),
        witness: None,
    })
}

fn probe_lattice(alg: &Alg) -> Result<Vec<Subspace<Rational>>> {
    let gens: Vec<_> = closure_probes(alg)?.into_iter().map(|(_, s)| s).collect();
    sums_of(&gens, alg.dim())
}

fn t7_ideals(c: &Catalog) -> Result<Outcome> {
    let expected_counts = [("bip-v1", 3), ("bip-v1-v3", 5), ("bip-2sl2-v11", 5)];
    let mut rows = Vec::new();
    let mut witness = None;
    for (key, count) in expected_counts {
        let entry = c
            .entry(key)
            .ok_or_else(|| Error::Precondition(format!("catalog has no entry {key:?}")))?;
        let spec = entry
            .spec
            .as_ref()
            .ok_or_else(|| Error::Precondition(format!("{key} has no bipartite spec")))?;
        let enumerated = enumerate_semisimple_ideals::<Rational>(spec)?;
        let of_l = probe_lattice(&entry.algebra)?;
        let mut agree = enumerated.len() == count && of_l == enumerated;
        let mut per_n = Vec::new();
        let ns: &[usize] = if entry.algebra.dim() > 9 {
            &[3]
        } else {
            &[3, 4]
        };
        for &n in ns {
            let of_un = probe_lattice(&u_n(&entry.algebra, n)?)?;
            agree &= of_un == enumerated;
            per_n.push(json!({ "n": n, "count": of_un.len() }));
        }
        if !agree && witness.is_none() {
            witness = Some(json!({
                "algebra": key,
                "enumerated_dims": enumerated.iter().map(|s| s.dim()).collect::<Vec<_>>(),
                "probe_dims": of_l.iter().map(|s| s.dim()).collect::<Vec<_>>(),
            }));
        }
        rows.push(json!({
            "algebra": key,
            "enumerated": enumerated.len(),
            "expected": count,
            "ideals_of_l": of_l.len(),
            "ideals_of_un": per_n,
        }));
    }
    Ok(Outcome::new(witness.is_none(), json!(rows), witness))
}

fn t8_direct_sum(c: &Catalog) -> Result<Outcome> {
    let binaries: Vec<_> = c.binary().collect();
    let mut checked = 0;
    let mut witness = None;
    for n in [3, 4] {
        let images = binaries
            .iter()
            .map(|e| u_n(&e.algebra, n))
            .collect::<Result<Vec<_>>>()?;
        for i in 0..binaries.len() {
            for j in i..binaries.len() {
                let lhs = u_n(&direct_sum(&binaries[i].algebra, &binaries[j].algebra)?, n)?;
                let rhs = direct_sum(&images[i], &images[j])?;
                checked += 1;
                if !equal_tensor(&lhs, &rhs) && witness.is_none() {
                    witness = Some(json!({
                        "pair": [binaries[i].key, binaries[j].key],
                        "n": n,
                    }));
                }
            }
        }
    }
    Ok(Outcome::new(
        witness.is_none(),
        json!({ "pairs_checked": checked }),
        witness,
    ))
}

fn t9_levi(c: &Catalog) -> Result<Outcome> {
    let mut rows = Vec::new();
    let mut ok = true;
    let sl2 = build_sl2::<Rational>();
    for key in ["semi-v1", "bip-v1"] {
        let entry = c
            .entry(key)
            .ok_or_else(|| Error::Precondition(format!("catalog has no entry {key:?}")))?;
        let tag = entry
            .levi
            .as_ref()
            .ok_or_else(|| Error::Precondition(format!("{key} has no Levi layout")))?;
        let l = &entry.algebra;
        let rad = radical_leibniz(l)?;
        let g = tag.g_span::<Rational>();
        for n in [3, 4] {
            let un = u_n(l, n)?;
            let mut same = true;
            for k in 2..=n {
                same &= rad_k_of_un(l, n, k)? == rad;
            }
            let un_g = u_n(&sl2, n)?;
            let mut embedded = true;
            for part in &tag.g_parts {
                embedded &= equal_tensor(&restrict_to_coordinates(&un, part)?, &un_g);
            }
            let direct = g.intersect(&rad)?.is_zero() && g.sum(&rad)?.is_full();
            ok &= same && embedded && direct && rad == tag.radical_span();
            rows.push(json!({
                "algebra": key, "n": n,
                "rad_dim": rad.dim(),
                "rad_k_equal_for_all_k": same,
                "levi_factor_is_un_sl2": embedded,
                "levi_plus_rad_direct": direct,
            }));
        }
    }
    Ok(Outcome::new(ok, json!(rows), None))
}

fn t10_monotonicity(c: &Catalog) -> Result<Outcome> {
    let mut algebras: Vec<(String, Alg)> = c
        .entries()
        .iter()
        .map(|e| (e.key.clone(), e.algebra.clone()))
        .collect();
    for key in ["sl2", "l2", "heis3", "r2", "semi-v1", "bip-v1"] {
        algebras.push((format!("U3({key})"), u_n(get(c, key)?, 3)?));
    }
    let mut pairs = 0;
    let mut solvable_somewhere = 0;
    let mut witness = None;
    for (key, alg) in &algebras {
        let mut ideals: Vec<Subspace<Rational>> = closure_probes(alg)?
            .into_iter()
            .map(|(_, s)| s)
            .filter(|s| !s.is_zero())
            .collect();
        if !ideals.iter().any(Subspace::is_full) {
            ideals.push(Subspace::full(alg.dim()));
        }
        for h in &ideals {
            let flags = (1..=alg.arity())
                .map(|k| derived_series(alg, h, k).map(|s| s.solvable))
                .collect::<Result<Vec<_>>>()?;
            pairs += 1;
            if flags.iter().any(|&f| f) {
                solvable_somewhere += 1;
            }
            if let Some(k) = flags.windows(2).position(|w| w[0] && !w[1]) {
                if witness.is_none() {
                    witness = Some(json!({
                        "algebra": key,
                        "ideal": subspace_to_value(h, alg.labels()),
                        "solvable_k": k + 1,
                        "not_solvable_k": k + 2,
                    }));
                }
            }
        }
    }
    Ok(Outcome::new(
        witness.is_none(),
        json!({ "algebra_ideal_pairs": pairs, "solvable_for_some_k": solvable_somewhere }),
        witness,
    ))
}

fn t11_derivations(c: &Catalog) -> Result<Outcome> {
    let mut rows = Vec::new();
    let mut witness = None;
    for (key, n) in [
        ("semi-v1", 3),
        ("semi-v1", 4),
        ("bip-v1", 3),
        ("bip-v1", 4),
        ("bip-v1-v3", 3),
    ] {
        let l = get(c, key)?;
        let un = u_n(l, n)?;
        let rad = rad_k_of_un(l, n, n)?;
        let r = derivation_preserves_radical(&un, &rad)?;
        if let (None, Some(w)) = (&witness, &r.witness) {
            witness = Some(json!({ "algebra": key, "n": n, "violation": witness_to_value(w) }));
        }
        rows.push(json!({ "algebra": key, "n": n, "rad_dim": rad.dim(), "holds": r.holds }));
    }
    Ok(Outcome::new(witness.is_none(), json!(rows), witness))
}

fn t12_non_fullness(c: &Catalog) -> Result<Outcome> {
    let l2 = get(c, "l2")?;
    let zero = Rational::from_integer(0.into());
    let one = Rational::from_integer(1.into());
    let phi = Matrix::from_rows(vec![vec![zero.clone(), zero.clone()], vec![zero, one]], 2)?;
    let on_l2 = is_homomorphism(l2, l2, &phi)?;
    let u3 = u_n(l2, 3)?;
    let on_u3 = is_homomorphism(&u3, &u3, &phi)?;
    let abelian = u3.is_abelian();
    Ok(Outcome::new(
        !on_l2.holds && on_u3.holds && abelian,
        json!({
            "hom_of_l2": on_l2.holds,
            "hom_of_u3": on_u3.holds,
            "u3_abelian": abelian,
        }),
        on_l2.witness.as_ref().map(witness_to_value),
    ))
}

fn t13_dt(c: &Catalog) -> Result<Outcome> {
    let mut rows = Vec::new();
    let mut ok = true;
    for (key, dim) in [("v3", 16), ("inv", 9)] {
        let dt = dt_basic(get(c, key)?)?;
        let r = check_fundamental_identity(&dt);
        ok &= r.holds && dt.dim() == dim && dt.arity() == 2;
        rows.push(json!({ "algebra": key, "dim": dt.dim(), "leibniz": r.holds }));
    }
    Ok(Outcome::new(ok, json!(rows), None))
}

fn t14_iij(c: &Catalog) -> Result<Outcome> {
    let mut pool: Vec<(String, Alg)> = c
        .nary()
        .map(|e| (e.key.clone(), e.algebra.clone()))
        .collect();
    for (key, n) in [("sl2", 3), ("sl2", 4), ("semi-v1", 3), ("bip-v1", 3)] {
        pool.push((format!("U{n}({key})"), u_n(get(c, key)?, n)?));
    }
    let mut rng = rng_from_seed(0x7414);
    let mut subspaces = 0;
    let mut witness = None;
    for i in 0..20 {
        let (key, alg) = pool.choose(&mut rng).expect("nonempty pool");
        let (_, changed) = random_basis_change(&mut rng, alg)?;
        let n = changed.arity();
        for a in 1..=n {
            for b in a + 1..=n {
                let sub = i_ij(&changed, a, b)?;
                let r = is_s_ideal(&changed, &sub, 1)?;
                subspaces += 1;
                if let (None, Some(w)) = (&witness, &r.witness) {
                    witness = Some(json!({
                        "instance": format!("random{}:{key}", i + 1),
                        "i": a, "j": b,
                        "violation": witness_to_value(w),
                    }));
                }
            }
        }
    }
    Ok(Outcome::new(
        witness.is_none(),
        json!({ "instances": 20, "subspaces_checked": subspaces }),
        witness,
    ))
}
