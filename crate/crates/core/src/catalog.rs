//! Named concrete algebras used by the verification suite and the random driver.

use std::collections::BTreeMap;

use crate::algebra::{direct_sum, NAryAlgebra};
use crate::functors::{
    build_heisenberg, build_invertible_example, build_l2, build_lie_semidirect,
    build_semisimple_leibniz, build_sl2, build_solvable_2d, build_vn, BipartiteSpec, LeviTag,
    RightNode,
};
use crate::{Rational, Result};

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub key: String,
    pub algebra: NAryAlgebra<Rational>,
    /// Present for builder outputs.
    pub levi: Option<LeviTag>,
    /// Present for outputs of the semisimple Leibniz builder.
    pub spec: Option<BipartiteSpec>,
}

#[derive(Clone, Debug)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

/// Two copies of sl2 acting on `V(1) ⊗ V(1)`.
pub fn two_sl2_shared_module() -> BipartiteSpec {
    let mut spec = BipartiteSpec::sl2_with_modules(&[]);
    spec.left.push(spec.left[0].clone());
    spec.right.push(RightNode {
        weights: BTreeMap::from([(1, 1), (2, 1)]),
    });
    spec
}

impl Catalog {
    pub fn standard() -> Result<Self> {
        let q = |k: i64| Rational::from_integer(k.into());
        let mut c = Catalog {
            entries: Vec::new(),
        };
        c.push("sl2", build_sl2(), None, None);
        c.push(
            "sl2+sl2",
            direct_sum(&build_sl2(), &build_sl2())?,
            None,
            None,
        );
        c.push("l2", build_l2(), None, None);
        c.push("heis3", build_heisenberg(), None, None);
        c.push("r2", build_solvable_2d(), None, None);
        for (key, weights) in [("bip-v1", &[1u32][..]), ("bip-v1-v3", &[1, 3])] {
            let spec = BipartiteSpec::sl2_with_modules(weights);
            let (alg, tag) = build_semisimple_leibniz(&spec)?;
            c.push(key, alg, Some(tag), Some(spec));
        }
        let spec = two_sl2_shared_module();
        let (alg, tag) = build_semisimple_leibniz(&spec)?;
        c.push("bip-2sl2-v11", alg, Some(tag), Some(spec));
        let (semi, tag) = build_lie_semidirect(&[1])?;
        c.push("semi-v1", semi, Some(tag), None);
        c.push("v3", build_vn(3)?, None, None);
        c.push("v4", build_vn(4)?, None, None);
        c.push(
            "inv",
            build_invertible_example(&[q(1), q(-1), q(5)], 3)?,
            None,
            None,
        );
        Ok(c)
    }

    fn push(
        &mut self,
        key: &str,
        algebra: NAryAlgebra<Rational>,
        levi: Option<LeviTag>,
        spec: Option<BipartiteSpec>,
    ) {
        self.entries.push(CatalogEntry {
            key: key.to_string(),
            algebra,
            levi,
            spec,
        });
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn entry(&self, key: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.key == key)
    }

    pub fn get(&self, key: &str) -> Option<&NAryAlgebra<Rational>> {
        self.entry(key).map(|e| &e.algebra)
    }

    /// Mutable access, for fault injection.
    pub fn get_mut(&mut self, key: &str) -> Option<&mut NAryAlgebra<Rational>> {
        self.entries
            .iter_mut()
            .find(|e| e.key == key)
            .map(|e| &mut e.algebra)
    }

    pub fn binary(&self) -> impl Iterator<Item = &CatalogEntry> + '_ {
        self.entries.iter().filter(|e| e.algebra.arity() == 2)
    }

    pub fn nary(&self) -> impl Iterator<Item = &CatalogEntry> + '_ {
        self.entries.iter().filter(|e| e.algebra.arity() > 2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_catalog_shapes() {
        let c = Catalog::standard().unwrap();
        assert_eq!(c.get("sl2+sl2").unwrap().dim(), 6);
        assert_eq!(c.get("bip-v1-v3").unwrap().dim(), 9);
        assert_eq!(c.get("bip-2sl2-v11").unwrap().dim(), 10);
        assert_eq!(c.get("v4").unwrap().arity(), 4);
        assert!(c.entry("bip-v1").unwrap().spec.is_some());
        assert_eq!(c.nary().count(), 3);
        assert!(c.get("nope").is_none());
    }
}
