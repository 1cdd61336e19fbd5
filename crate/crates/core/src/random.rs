//! Seeded generation of valid algebras from catalog seeds, and the invariant
//! battery run on them.
//!
//! Raw random tensors almost never satisfy the fundamental identity, so new
//! instances come only from identity-preserving transforms: invertible basis
//! changes and direct sums.

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{
    change_basis, check_fundamental_identity, check_skew, derivation_space, direct_sum,
    equal_tensor, NAryAlgebra,
};
use crate::catalog::Catalog;
use crate::exactlin::Matrix;
use crate::ideals::leibniz_n_kernel;
use crate::solvability::{radical_leibniz, simplicity, SimplicityStatus};
use crate::{Rational, Result};

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_vector<R: Rng>(rng: &mut R, dim: usize, bound: i64) -> Vec<Rational> {
    (0..dim)
        .map(|_| Rational::from_integer(rng.gen_range(-bound..=bound).into()))
        .collect()
}

/// A random integer matrix with entries in `[-bound, bound]`, redrawn until invertible.
pub fn random_invertible<R: Rng>(rng: &mut R, dim: usize, bound: i64) -> Matrix<Rational> {
    loop {
        let rows = (0..dim).map(|_| random_vector(rng, dim, bound)).collect();
        let m = Matrix::from_rows(rows, dim).expect("square");
        if !m.determinant().expect("square").is_zero() {
            return m;
        }
    }
}

pub fn random_basis_change<R: Rng>(
    rng: &mut R,
    alg: &NAryAlgebra<Rational>,
) -> Result<(Matrix<Rational>, NAryAlgebra<Rational>)> {
    let p = random_invertible(rng, alg.dim(), 2);
    let changed = change_basis(alg, &p)?;
    Ok((p, changed))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Invariant {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

fn invariant(name: &str, holds: bool, detail: String) -> Invariant {
    Invariant {
        name: name.into(),
        holds,
        detail,
    }
}

/// Compares basis-independent data of `original` and `changed = P⁻¹·original·P`.
pub fn invariant_battery(
    original: &NAryAlgebra<Rational>,
    changed: &NAryAlgebra<Rational>,
    p: &Matrix<Rational>,
) -> Result<Vec<Invariant>> {
    let mut out = Vec::new();
    let id = check_fundamental_identity(changed);
    out.push(invariant(
        "identity",
        id.holds,
        match &id.witness {
            None => "holds".into(),
            Some(w) => format!("fails at {:?}", w.tuples),
        },
    ));
    let (s0, s1) = (check_skew(original).holds, check_skew(changed).holds);
    out.push(invariant("skew", s0 == s1, format!("{s0} vs {s1}")));

    let (k0, k1) = (
        leibniz_n_kernel(original)?.dim(),
        leibniz_n_kernel(changed)?.dim(),
    );
    out.push(invariant("kernel_dim", k0 == k1, format!("{k0} vs {k1}")));

    if original.arity() == 2 {
        let (r0, r1) = (
            radical_leibniz(original)?.dim(),
            radical_leibniz(changed)?.dim(),
        );
        out.push(invariant("radical_dim", r0 == r1, format!("{r0} vs {r1}")));
    }

    // Probe witnesses depend on the basis, so NotSimple may degrade to Unknown;
    // the Simple certificate does not.
    let (v0, v1) = (simplicity(original)?.status, simplicity(changed)?.status);
    let contradict = matches!(
        (v0, v1),
        (SimplicityStatus::Simple, SimplicityStatus::NotSimple)
            | (SimplicityStatus::NotSimple, SimplicityStatus::Simple)
    );
    out.push(invariant(
        "simplicity",
        !contradict && (v0 == SimplicityStatus::Simple) == (v1 == SimplicityStatus::Simple),
        format!("{} vs {}", v0.as_str(), v1.as_str()),
    ));

    let d = original.dim();
    if d.pow(original.arity() as u32 + 1) <= 1000 {
        let (a, b) = (
            derivation_space(original).dim(),
            derivation_space(changed).dim(),
        );
        out.push(invariant("derivation_dim", a == b, format!("{a} vs {b}")));
    }

    let back = change_basis(changed, &p.inverse()?.expect("p is invertible"))?;
    let same = equal_tensor(&back, original);
    out.push(invariant(
        "inverse_change_restores",
        same,
        if same {
            "equal".into()
        } else {
            "tensors differ".into()
        },
    ));
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct RandomCase {
    pub description: String,
    pub arity: usize,
    pub dim: usize,
    pub invariants: Vec<Invariant>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RandomRun {
    pub seed: u64,
    pub max_dim: usize,
    pub cases: Vec<RandomCase>,
}

impl RandomRun {
    pub fn all_hold(&self) -> bool {
        self.cases
            .iter()
            .all(|c| c.invariants.iter().all(|i| i.holds))
    }
}

/// Runs `ops` random transforms of catalog algebras of dimension at most `max_dim`.
///
/// Each step is a basis change of a catalog algebra, or, on a coin flip, a basis
/// change of the direct sum of two catalog algebras of equal arity when one fits.
pub fn run_random(seed: u64, max_dim: usize, ops: usize) -> Result<RandomRun> {
    let catalog = Catalog::standard()?;
    let pool: Vec<_> = catalog
        .entries()
        .iter()
        .filter(|e| e.algebra.dim() <= max_dim && e.algebra.dim() > 0)
        .collect();
    let mut rng = rng_from_seed(seed);
    let mut cases = Vec::new();
    for _ in 0..ops {
        let Some(first) = pool.choose(&mut rng) else {
            break;
        };
        let partners: Vec<_> = pool
            .iter()
            .filter(|e| {
                e.algebra.arity() == first.algebra.arity()
                    && e.algebra.dim() + first.algebra.dim() <= max_dim
            })
            .collect();
        let (description, base) = if rng.gen_bool(0.5) && !partners.is_empty() {
            let second = partners.choose(&mut rng).expect("nonempty");
            (
                format!("basis change of {} ⊕ {}", first.key, second.key),
                direct_sum(&first.algebra, &second.algebra)?,
            )
        } else {
            (
                format!("basis change of {}", first.key),
                first.algebra.clone(),
            )
        };
        let (p, changed) = random_basis_change(&mut rng, &base)?;
        cases.push(RandomCase {
            description,
            arity: base.arity(),
            dim: base.dim(),
            invariants: invariant_battery(&base, &changed, &p)?,
        });
    }
    Ok(RandomRun {
        seed,
        max_dim,
        cases,
    })
}
