//! Constructions between arities: the right-normed n-ary bracket of a
//! Leibniz algebra, the basic Leibniz algebra on the (n−1)-fold tensor power
//! of an n-ary algebra, and the catalog of concrete instances.

mod bipartite;
mod builders;
mod modules;

pub use bipartite::{
    build_lie_semidirect, build_semisimple_leibniz, BipartiteSpec, LeftNode, LeviTag, RightNode,
    SimpleLieType,
};
pub use builders::{
    build_heisenberg, build_invertible_example, build_l2, build_sl2, build_solvable_2d, build_vn,
};
pub use modules::{build_sl2_module, Sl2Module};

use std::collections::BTreeMap;

use crate::algebra::{check_fundamental_identity, tuples, NAryAlgebra};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

fn require_identity<S: Scalar>(alg: &NAryAlgebra<S>) -> Result<()> {
    let report = check_fundamental_identity(alg);
    if let Some(w) = report.witness {
        return Err(Error::InvalidAlgebra(format!(
            "{} violates the fundamental identity at tuples {:?}",
            alg.name(),
            w.tuples
        )));
    }
    Ok(())
}

/// The Leibniz n-algebra `[x_1, …, x_n] = [x_1, [… [x_{n−1}, x_n] …]]` on a Leibniz algebra.
///
/// Products are built from right to left: the level-`m` table maps each
/// suffix tuple to its right-normed product, and the next level multiplies
/// one more basis vector in from the left. Only nonzero entries are carried.
pub fn u_n<S: Scalar>(alg: &NAryAlgebra<S>, n: usize) -> Result<NAryAlgebra<S>> {
    if alg.arity() != 2 {
        return Err(Error::ArityMismatch {
            expected: 2,
            found: alg.arity(),
        });
    }
    if n < 2 {
        return Err(Error::Precondition(format!("U_n needs n >= 2, got {n}")));
    }
    require_identity(alg)?;
    let d = alg.dim();
    let mut level: BTreeMap<Vec<usize>, Vec<S>> = alg
        .products()
        .map(|(k, v)| (k.to_vec(), v.to_vec()))
        .collect();
    for _ in 2..n {
        let mut next = BTreeMap::new();
        for a in 0..d {
            for (key, v) in &level {
                let w = alg.bracket_with_slot(&[a, 0], 1, v);
                if w.iter().any(|x| !x.is_zero()) {
                    let mut k = Vec::with_capacity(key.len() + 1);
                    k.push(a);
                    k.extend_from_slice(key);
                    next.insert(k, w);
                }
            }
        }
        level = next;
    }
    let mut out = NAryAlgebra::new(format!("U{n}({})", alg.name()), n, alg.labels().to_vec())?;
    for (k, v) in level {
        out.set_product(&k, v)?;
    }
    let provenance = if alg.metadata().is_empty() {
        format!("recipe=u_n; n={n}; source={}", alg.name())
    } else {
        format!(
            "recipe=u_n; n={n}; source={}; source_meta={{{}}}",
            alg.name(),
            alg.metadata()
        )
    };
    out.set_metadata(provenance);
    Ok(out)
}

/// The basic Leibniz algebra of an n-ary algebra on its (n−1)-fold tensor power:
/// `[l_1⊗…⊗l_{n−1}, l'_1⊗…⊗l'_{n−1}] = Σ_i l_1⊗…⊗[l_i, l'_1, …, l'_{n−1}]⊗…⊗l_{n−1}`.
///
/// Basis tensors are ordered lexicographically by their index tuples.
pub fn dt_basic<S: Scalar>(alg: &NAryAlgebra<S>) -> Result<NAryAlgebra<S>> {
    require_identity(alg)?;
    let n = alg.arity();
    let d = alg.dim();
    let k = n - 1;
    let basis: Vec<Vec<usize>> = tuples(d, k).collect();
    let index = |t: &[usize]| t.iter().fold(0usize, |acc, &i| acc * d + i);
    let labels = basis
        .iter()
        .map(|t| {
            t.iter()
                .map(|&i| alg.labels()[i].as_str())
                .collect::<Vec<_>>()
                .join("⊗")
        })
        .collect();
    let mut out = NAryAlgebra::new(format!("D{k}({})", alg.name()), 2, labels)?;
    let dim = basis.len();
    for (li, l) in basis.iter().enumerate() {
        for (ri, r) in basis.iter().enumerate() {
            let mut val = vec![S::zero(); dim];
            let mut key = Vec::with_capacity(n);
            for i in 0..k {
                key.clear();
                key.push(l[i]);
                key.extend_from_slice(r);
                let Some(c) = alg.basis_product(&key) else {
                    continue;
                };
                let mut t = l.clone();
                for (a, x) in c.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    t[i] = a;
                    val[index(&t)] += x;
                }
            }
            out.set_product(&[li, ri], val)?;
        }
    }
    out.set_metadata(format!("recipe=dt_basic; source={}", alg.name()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::equal_tensor;
    use crate::Rational;

    fn q(k: i64) -> Rational {
        Rational::from_int(k)
    }

    #[test]
    fn u_n_of_abelian_is_abelian() {
        let a = NAryAlgebra::<Rational>::abelian(2, 3).unwrap();
        for n in 2..6 {
            assert!(u_n(&a, n).unwrap().is_abelian());
        }
    }

    #[test]
    fn u_2_is_identity() {
        let sl2 = build_sl2::<Rational>();
        assert!(equal_tensor(&u_n(&sl2, 2).unwrap(), &sl2));
    }

    #[test]
    fn u3_l2_is_abelian() {
        let u = u_n(&build_l2::<Rational>(), 3).unwrap();
        assert_eq!(u.dim(), 2);
        assert!(u.is_abelian());
    }

    #[test]
    fn u3_sl2_products() {
        let u = u_n(&build_sl2::<Rational>(), 3).unwrap();
        // [h,h,e] = 4e and [e,f,h] = [e,[f,h]] = [e,2f] = 2h
        assert_eq!(u.basis_bracket(&[1, 1, 0]), vec![q(4), q(0), q(0)]);
        assert_eq!(u.basis_bracket(&[0, 2, 1]), vec![q(0), q(2), q(0)]);
        assert!(check_fundamental_identity(&u).holds);
    }

    #[test]
    fn u_n_rejects_bad_input() {
        let v3 = build_vn::<Rational>(3).unwrap();
        assert!(matches!(u_n(&v3, 3), Err(Error::ArityMismatch { .. })));
        let mut bad = build_sl2::<Rational>();
        bad.set_product(&[1, 0], vec![q(3), q(0), q(0)]).unwrap();
        assert!(matches!(u_n(&bad, 3), Err(Error::InvalidAlgebra(_))));
    }

    #[test]
    fn dt_basic_examples() {
        let ab = NAryAlgebra::<Rational>::abelian(3, 3).unwrap();
        let d = dt_basic(&ab).unwrap();
        assert_eq!((d.arity(), d.dim()), (2, 9));
        assert!(d.is_abelian());

        let v3 = dt_basic(&build_vn::<Rational>(3).unwrap()).unwrap();
        assert_eq!(v3.dim(), 16);
        assert!(check_fundamental_identity(&v3).holds);

        let inv = build_invertible_example(&[q(1), q(-1), q(5)], 3).unwrap();
        let d = dt_basic(&inv).unwrap();
        assert_eq!(d.dim(), 9);
        assert!(check_fundamental_identity(&d).holds);
        // e1⊗e2 has index 0*3+1 = 1; its square is (α1 + α2) e1⊗e2 = 0
        assert!(d.basis_product(&[1, 1]).is_none());
        // e3⊗e1 (index 6) times e1⊗e2: [e3,e1,e2]⊗e1 + e3⊗[e1,e1,e2] = 5 e3⊗e1 + e3⊗e1
        assert_eq!(d.basis_bracket(&[6, 1])[6], q(6));
    }
}
