//! The n-ary algebra representation.
//!
//! A single [`NAryAlgebra`] type covers binary Leibniz algebras (arity 2)
//! and Leibniz n-algebras alike. The structure tensor stores only nonzero
//! basis products; everything else is zero.

mod checks;
mod maps;
mod ops;

pub use checks::{check_fundamental_identity, check_skew, CheckReport, Witness};
pub use maps::{
    derivation_space, flat_to_map, is_derivation, is_homomorphism, right_mult, LinearMap,
};
pub use ops::{change_basis, direct_sum, equal_tensor, restrict_to_coordinates};

use std::collections::BTreeMap;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::scalar::{axpy, unit, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub struct NAryAlgebra<S = BigRational> {
    name: String,
    arity: usize,
    dim: usize,
    labels: Vec<String>,
    products: BTreeMap<Vec<usize>, Vec<S>>,
    metadata: String,
}

impl<S: Scalar> NAryAlgebra<S> {
    /// The abelian algebra; add products with [`NAryAlgebra::set_product`].
    pub fn new(name: impl Into<String>, arity: usize, labels: Vec<String>) -> Result<Self> {
        if arity < 2 {
            return Err(Error::InvalidAlgebra(format!("arity {arity} < 2")));
        }
        Ok(NAryAlgebra {
            name: name.into(),
            arity,
            dim: labels.len(),
            labels,
            products: BTreeMap::new(),
            metadata: String::new(),
        })
    }

    pub fn abelian(arity: usize, dim: usize) -> Result<Self> {
        Self::new(format!("abelian{dim}"), arity, default_labels(dim))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn metadata(&self) -> &str {
        &self.metadata
    }

    pub fn set_metadata(&mut self, metadata: impl Into<String>) {
        self.metadata = metadata.into();
    }

    /// Nonzero basis products, keyed by 0-based index tuples in lexicographic order.
    pub fn products(&self) -> impl Iterator<Item = (&[usize], &[S])> + '_ {
        self.products
            .iter()
            .map(|(k, v)| (k.as_slice(), v.as_slice()))
    }

    pub fn product_count(&self) -> usize {
        self.products.len()
    }

    pub fn is_abelian(&self) -> bool {
        self.products.is_empty()
    }

    fn check_tuple(&self, args: &[usize]) -> Result<()> {
        if args.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: args.len(),
            });
        }
        if let Some(&bad) = args.iter().find(|&&i| i >= self.dim) {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: bad + 1,
            });
        }
        Ok(())
    }

    /// Sets `[e_{args[0]}, …, e_{args[n-1]}] = value`; a zero value removes the entry.
    pub fn set_product(&mut self, args: &[usize], value: Vec<S>) -> Result<()> {
        self.check_tuple(args)?;
        if value.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: value.len(),
            });
        }
        if value.iter().all(|x| x.is_zero()) {
            self.products.remove(args);
        } else {
            self.products.insert(args.to_vec(), value);
        }
        Ok(())
    }

    /// Adds `coef * e_target` to the product of a basis tuple.
    pub fn add_to_product(&mut self, args: &[usize], coef: S, target: usize) -> Result<()> {
        self.check_tuple(args)?;
        if target >= self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: target + 1,
            });
        }
        let mut v = self
            .products
            .get(args)
            .cloned()
            .unwrap_or_else(|| vec![S::zero(); self.dim]);
        v[target] += coef;
        self.set_product(args, v)
    }

    /// Structure constants of a basis tuple, `None` when the product is zero.
    pub fn basis_product(&self, args: &[usize]) -> Option<&[S]> {
        self.products.get(args).map(Vec::as_slice)
    }

    /// Structure constants of a basis tuple as a dense vector.
    pub fn basis_bracket(&self, args: &[usize]) -> Vec<S> {
        self.basis_product(args)
            .map(<[S]>::to_vec)
            .unwrap_or_else(|| vec![S::zero(); self.dim])
    }

    /// Evaluates the bracket on arbitrary coordinate vectors by multilinear expansion.
    pub fn bracket<V: AsRef<[S]>>(&self, args: &[V]) -> Result<Vec<S>> {
        if args.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: args.len(),
            });
        }
        for a in args {
            if a.as_ref().len() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    found: a.as_ref().len(),
                });
            }
        }
        Ok(self.bracket_unchecked(args))
    }

    pub(crate) fn bracket_unchecked<V: AsRef<[S]>>(&self, args: &[V]) -> Vec<S> {
        let mut out = vec![S::zero(); self.dim];
        let supports: Vec<Vec<usize>> = args
            .iter()
            .map(|a| {
                a.as_ref()
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        if supports.iter().any(Vec::is_empty) || self.products.is_empty() {
            return out;
        }
        let combos = supports
            .iter()
            .try_fold(1usize, |acc, s| acc.checked_mul(s.len()))
            .unwrap_or(usize::MAX);

        if combos > self.products.len() {
            // Sparse tensor: walk the stored products instead of the argument supports.
            for (key, val) in &self.products {
                let mut coef = S::one();
                for (a, &i) in args.iter().zip(key) {
                    let x = &a.as_ref()[i];
                    if x.is_zero() {
                        coef = S::zero();
                        break;
                    }
                    coef *= x;
                }
                axpy(&mut out, &coef, val);
            }
            return out;
        }

        let n = self.arity;
        let mut pos = vec![0usize; n];
        let mut key = vec![0usize; n];
        'outer: loop {
            for s in 0..n {
                key[s] = supports[s][pos[s]];
            }
            if let Some(val) = self.products.get(key.as_slice()) {
                let mut coef = S::one();
                for (a, &i) in args.iter().zip(&key) {
                    coef *= &a.as_ref()[i];
                }
                axpy(&mut out, &coef, val);
            }
            let mut s = n;
            loop {
                if s == 0 {
                    break 'outer;
                }
                s -= 1;
                pos[s] += 1;
                if pos[s] < supports[s].len() {
                    break;
                }
                pos[s] = 0;
            }
        }
        out
    }

    /// Bracket with the vector `v` in `slot` and basis vectors `e_{basis[i]}` elsewhere.
    /// `basis` has length `arity` and its entry at `slot` is ignored.
    pub(crate) fn bracket_with_slot(&self, basis: &[usize], slot: usize, v: &[S]) -> Vec<S> {
        let mut out = vec![S::zero(); self.dim];
        let mut key = basis.to_vec();
        for (a, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            key[slot] = a;
            if let Some(val) = self.products.get(key.as_slice()) {
                axpy(&mut out, x, val);
            }
        }
        out
    }

    pub fn unit(&self, i: usize) -> Vec<S> {
        unit(self.dim, i)
    }
}

pub(crate) fn default_labels(dim: usize) -> Vec<String> {
    (1..=dim).map(|i| format!("e{i}")).collect()
}

/// All index tuples of the given length over `0..dim`, in lexicographic order.
pub fn tuples(dim: usize, len: usize) -> Tuples {
    Tuples {
        dim,
        next: if dim == 0 && len > 0 {
            None
        } else {
            Some(vec![0; len])
        },
    }
}

pub struct Tuples {
    dim: usize,
    next: Option<Vec<usize>>,
}

impl Iterator for Tuples {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        let mut s = succ.len();
        loop {
            if s == 0 {
                break;
            }
            s -= 1;
            succ[s] += 1;
            if succ[s] < self.dim {
                self.next = Some(succ);
                break;
            }
            succ[s] = 0;
        }
        Some(cur)
    }
}

/// Decodes a lexicographic tuple index.
pub(crate) fn tuple_at(mut index: usize, dim: usize, len: usize) -> Vec<usize> {
    let mut t = vec![0; len];
    for s in (0..len).rev() {
        t[s] = index % dim;
        index /= dim;
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functors::{build_sl2, u_n};
    use crate::Rational;

    fn q(k: i64) -> Rational {
        Rational::from_integer(k.into())
    }

    #[test]
    fn tuple_enumeration() {
        let all: Vec<_> = tuples(2, 2).collect();
        assert_eq!(all, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(tuples(3, 0).count(), 1);
        assert_eq!(tuples(0, 2).count(), 0);
        for (i, t) in tuples(3, 3).enumerate() {
            assert_eq!(tuple_at(i, 3, 3), t);
        }
    }

    #[test]
    fn abelian_bracket_is_zero() {
        let a = NAryAlgebra::<Rational>::abelian(3, 2).unwrap();
        let v = vec![q(1), q(2)];
        assert_eq!(a.bracket(&[&v, &v, &v]).unwrap(), vec![q(0), q(0)]);
    }

    #[test]
    fn sl2_and_u3_brackets() {
        let sl2 = build_sl2::<Rational>();
        let (e, h) = (sl2.unit(0), sl2.unit(1));
        assert_eq!(sl2.bracket(&[&h, &e]).unwrap(), vec![q(2), q(0), q(0)]);
        let u3 = u_n(&sl2, 3).unwrap();
        assert_eq!(u3.bracket(&[&h, &h, &e]).unwrap(), vec![q(4), q(0), q(0)]);
    }

    #[test]
    fn bracket_rejects_bad_shapes() {
        let sl2 = build_sl2::<Rational>();
        let e = sl2.unit(0);
        assert!(matches!(
            sl2.bracket(&[&e]),
            Err(Error::ArityMismatch { .. })
        ));
        assert!(matches!(
            sl2.bracket(&[&e, &vec![q(1)]]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn zero_products_are_not_stored() {
        let mut a = NAryAlgebra::<Rational>::abelian(2, 2).unwrap();
        a.set_product(&[0, 1], vec![q(1), q(0)]).unwrap();
        a.add_to_product(&[0, 1], q(-1), 0).unwrap();
        assert!(a.is_abelian());
    }
}
