use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::builders::build_sl2;
use super::modules::{build_sl2_module, check_sl2_relations, kron};
use crate::algebra::{tuples, NAryAlgebra};
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Subspace};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SimpleLieType {
    #[serde(rename = "sl2")]
    Sl2,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeftNode {
    #[serde(rename = "type")]
    pub kind: SimpleLieType,
}

/// A simple module: the tensor product over adjacent left nodes of the
/// irreducibles with the given highest weights. Keys are 1-based left-node indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RightNode {
    pub weights: BTreeMap<usize, u32>,
}

/// Bipartite description of a semisimple Leibniz algebra: simple Lie
/// summands on the left, simple modules on the right, an edge wherever a
/// module is acted on nontrivially.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BipartiteSpec {
    pub left: Vec<LeftNode>,
    pub right: Vec<RightNode>,
}

/// Coordinate layout of a builder output: the Levi factor's simple summands
/// and the radical's module summands. Together the spans partition `0..dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviTag {
    pub g_parts: Vec<Vec<usize>>,
    pub module_parts: Vec<Vec<usize>>,
}

impl LeviTag {
    pub fn dim(&self) -> usize {
        self.g_parts
            .iter()
            .chain(&self.module_parts)
            .map(Vec::len)
            .sum()
    }

    pub fn g_coords(&self) -> Vec<usize> {
        self.g_parts.iter().flatten().copied().collect()
    }

    pub fn module_coords(&self) -> Vec<usize> {
        self.module_parts.iter().flatten().copied().collect()
    }

    pub fn g_span<S: Scalar>(&self) -> Subspace<S> {
        Subspace::coordinate(self.g_coords(), self.dim()).expect("coords in range")
    }

    pub fn radical_span<S: Scalar>(&self) -> Subspace<S> {
        Subspace::coordinate(self.module_coords(), self.dim()).expect("coords in range")
    }

    fn describe(&self) -> String {
        let range = |c: &[usize]| match (c.first(), c.last()) {
            (Some(a), Some(b)) => format!("{}-{}", a + 1, b + 1),
            _ => "-".into(),
        };
        let mut parts: Vec<String> = self
            .g_parts
            .iter()
            .enumerate()
            .map(|(i, c)| format!("g{}={}", i + 1, range(c)))
            .collect();
        parts.extend(
            self.module_parts
                .iter()
                .enumerate()
                .map(|(k, c)| format!("I{}={}", k + 1, range(c))),
        );
        parts.join("; ")
    }
}

impl BipartiteSpec {
    pub fn sl2_with_modules(weights: &[u32]) -> Self {
        BipartiteSpec {
            left: vec![LeftNode {
                kind: SimpleLieType::Sl2,
            }],
            right: weights
                .iter()
                .map(|&w| RightNode {
                    weights: BTreeMap::from([(1, w)]),
                })
                .collect(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.left.is_empty() {
            return Err(Error::Precondition(
                "bipartite spec has no simple Lie summand".into(),
            ));
        }
        for (k, r) in self.right.iter().enumerate() {
            if r.weights.is_empty() {
                return Err(Error::Precondition(format!(
                    "module {} has no adjacent Lie summand",
                    k + 1
                )));
            }
            for (&i, &w) in &r.weights {
                if i == 0 || i > self.left.len() {
                    return Err(Error::Precondition(format!(
                        "module {} refers to Lie summand {i}, which does not exist",
                        k + 1
                    )));
                }
                if w == 0 {
                    return Err(Error::Precondition(format!(
                        "module {} has weight 0 on summand {i}; weights must be positive",
                        k + 1
                    )));
                }
            }
        }
        Ok(())
    }

    /// 0-based neighbours of a left node.
    pub fn modules_of(&self, left: usize) -> Vec<usize> {
        self.right
            .iter()
            .enumerate()
            .filter(|(_, r)| r.weights.contains_key(&(left + 1)))
            .map(|(k, _)| k)
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        let total = self.left.len() + self.right.len();
        if total == 0 {
            return true;
        }
        let mut seen = vec![false; total];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            let neighbours: Vec<usize> = if v < self.left.len() {
                self.modules_of(v)
                    .into_iter()
                    .map(|k| self.left.len() + k)
                    .collect()
            } else {
                self.right[v - self.left.len()]
                    .weights
                    .keys()
                    .map(|i| i - 1)
                    .collect()
            };
            for u in neighbours {
                if !std::mem::replace(&mut seen[u], true) {
                    stack.push(u);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    fn layout(&self) -> LeviTag {
        let mut next = 0;
        let mut take = |n: usize| {
            let c: Vec<usize> = (next..next + n).collect();
            next += n;
            c
        };
        let g_parts = self.left.iter().map(|_| take(3)).collect();
        let module_parts = self
            .right
            .iter()
            .map(|r| take(r.weights.values().map(|&w| w as usize + 1).product()))
            .collect();
        LeviTag {
            g_parts,
            module_parts,
        }
    }
}

/// Action matrices of each left node on one tensor-product module, in the
/// sl2 order `(e, h, f)`. Non-adjacent nodes act by zero.
fn module_actions<S: Scalar>(
    weights: &BTreeMap<usize, u32>,
    left_count: usize,
) -> Result<Vec<[Matrix<S>; 3]>> {
    let factors: Vec<(usize, _)> = weights
        .iter()
        .map(|(&i, &w)| (i - 1, build_sl2_module::<S>(w)))
        .collect();
    let dim: usize = factors.iter().map(|(_, m)| m.dim()).product();
    let mut out = Vec::with_capacity(left_count);
    for node in 0..left_count {
        let Some(pos) = factors.iter().position(|(i, _)| *i == node) else {
            out.push([
                Matrix::zeros(dim, dim),
                Matrix::zeros(dim, dim),
                Matrix::zeros(dim, dim),
            ]);
            continue;
        };
        let lift = |x: &Matrix<S>| {
            let mut acc = Matrix::identity(1);
            for (p, (_, m)) in factors.iter().enumerate() {
                let factor = if p == pos {
                    x.clone()
                } else {
                    Matrix::identity(m.dim())
                };
                acc = kron(&acc, &factor);
            }
            acc
        };
        let m = &factors[pos].1;
        let [e, h, f] = m.actions().map(lift);
        check_sl2_relations(&e, &h, &f)?;
        out.push([e, h, f]);
    }
    Ok(out)
}

fn module_labels(k: usize, weights: &BTreeMap<usize, u32>) -> Vec<String> {
    let dims: Vec<usize> = weights.values().map(|&w| w as usize + 1).collect();
    let count: usize = dims.iter().product();
    let mut labels = Vec::with_capacity(count);
    let mut idx = vec![0usize; dims.len()];
    for _ in 0..count {
        let parts: Vec<String> = idx.iter().map(ToString::to_string).collect();
        labels.push(format!("v{}_{}", k + 1, parts.join("_")));
        for s in (0..dims.len()).rev() {
            idx[s] += 1;
            if idx[s] < dims[s] {
                break;
            }
            idx[s] = 0;
        }
    }
    labels
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum LeftAction {
    /// `[x, v] = 0`: the Leibniz (non-Lie) case.
    Zero,
    /// `[x, v] = x·v`: the Lie semidirect product.
    Module,
}

fn assemble<S: Scalar>(
    name: String,
    spec: &BipartiteSpec,
    left_action: LeftAction,
    recipe: &str,
) -> Result<(NAryAlgebra<S>, LeviTag)> {
    let tag = spec.layout();
    let mut labels = Vec::with_capacity(tag.dim());
    for i in 0..spec.left.len() {
        let suffix = if spec.left.len() == 1 {
            String::new()
        } else {
            (i + 1).to_string()
        };
        labels.extend(["e", "h", "f"].iter().map(|b| format!("{b}{suffix}")));
    }
    for (k, r) in spec.right.iter().enumerate() {
        labels.extend(module_labels(k, &r.weights));
    }
    let mut alg = NAryAlgebra::new(name, 2, labels)?;

    let sl2 = build_sl2::<S>();
    for g in &tag.g_parts {
        for t in tuples(3, 2) {
            for (c, x) in sl2.basis_bracket(&t).into_iter().enumerate() {
                if !x.is_zero() {
                    alg.add_to_product(&[g[t[0]], g[t[1]]], x, g[c])?;
                }
            }
        }
    }
    for (r, coords) in spec.right.iter().zip(&tag.module_parts) {
        let actions = module_actions::<S>(&r.weights, spec.left.len())?;
        for (g, action) in tag.g_parts.iter().zip(&actions) {
            for (b, rho) in action.iter().enumerate() {
                for (j, &v) in coords.iter().enumerate() {
                    for (i, &w) in coords.iter().enumerate() {
                        let x = rho.get(i, j);
                        if x.is_zero() {
                            continue;
                        }
                        // [v, x] = −x·v is a right action; [x, v] = x·v in the Lie case
                        alg.add_to_product(&[v, g[b]], -x.clone(), w)?;
                        if left_action == LeftAction::Module {
                            alg.add_to_product(&[g[b], v], x.clone(), w)?;
                        }
                    }
                }
            }
        }
    }
    alg.set_metadata(format!("recipe={recipe}; {}", tag.describe()));
    Ok((alg, tag))
}

fn spec_name(spec: &BipartiteSpec) -> String {
    let modules: Vec<String> = spec
        .right
        .iter()
        .map(|r| {
            let w: Vec<String> = r.weights.values().map(ToString::to_string).collect();
            format!("V({})", w.join(","))
        })
        .collect();
    let g = vec!["sl2"; spec.left.len()].join("+");
    if modules.is_empty() {
        g
    } else {
        format!("{g};{}", modules.join(","))
    }
}

/// The semisimple Leibniz algebra `(⊕ g_i) ⋉ (⊕ I_k)` described by the graph:
/// Lie bracket on each `g_i`, `[v, x] = −x·v` for module vectors, and
/// `[x, v] = [v, w] = 0`.
pub fn build_semisimple_leibniz<S: Scalar>(
    spec: &BipartiteSpec,
) -> Result<(NAryAlgebra<S>, LeviTag)> {
    spec.validate()?;
    assemble(
        format!("bipartite({})", spec_name(spec)),
        spec,
        LeftAction::Zero,
        "bipartite",
    )
}

/// The Lie algebra `sl2 ⋉ (V(m_1) ⊕ … )` with `[x, v] = x·v = −[v, x]` and `[v, w] = 0`.
/// Weight 0 is allowed and gives central summands.
pub fn build_lie_semidirect<S: Scalar>(weights: &[u32]) -> Result<(NAryAlgebra<S>, LeviTag)> {
    let spec = BipartiteSpec::sl2_with_modules(weights);
    assemble(
        format!("semidirect({})", spec_name(&spec)),
        &spec,
        LeftAction::Module,
        "lie-semidirect",
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{check_fundamental_identity, check_skew};
    use crate::Rational;

    #[test]
    fn single_module_dimensions() {
        let (a, tag) =
            build_semisimple_leibniz::<Rational>(&BipartiteSpec::sl2_with_modules(&[1])).unwrap();
        assert_eq!(a.dim(), 5);
        assert_eq!(tag.g_parts, vec![vec![0, 1, 2]]);
        assert_eq!(tag.module_parts, vec![vec![3, 4]]);
        assert!(check_fundamental_identity(&a).holds);
        assert!(!check_skew(&a).holds);

        let (b, _) =
            build_semisimple_leibniz::<Rational>(&BipartiteSpec::sl2_with_modules(&[1, 3]))
                .unwrap();
        assert_eq!(b.dim(), 9);
        assert!(check_fundamental_identity(&b).holds);
    }

    #[test]
    fn two_sl2_shared_module() {
        let spec = BipartiteSpec {
            left: vec![
                LeftNode {
                    kind: SimpleLieType::Sl2,
                };
                2
            ],
            right: vec![RightNode {
                weights: BTreeMap::from([(1, 1), (2, 1)]),
            }],
        };
        assert!(spec.is_connected());
        let (a, tag) = build_semisimple_leibniz::<Rational>(&spec).unwrap();
        assert_eq!(a.dim(), 10);
        assert_eq!(tag.module_parts, vec![(6..10).collect::<Vec<_>>()]);
        assert!(check_fundamental_identity(&a).holds);
    }

    #[test]
    fn connectivity_and_validation() {
        let spec = BipartiteSpec {
            left: vec![
                LeftNode {
                    kind: SimpleLieType::Sl2,
                };
                2
            ],
            right: vec![RightNode {
                weights: BTreeMap::from([(1, 1)]),
            }],
        };
        assert!(!spec.is_connected());
        assert!(BipartiteSpec::sl2_with_modules(&[]).is_connected());
        assert!(BipartiteSpec::sl2_with_modules(&[0]).validate().is_err());
        let bad = BipartiteSpec {
            left: vec![],
            right: vec![],
        };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn lie_semidirect_is_lie() {
        for w in [[0u32], [1], [2]] {
            let (a, _) = build_lie_semidirect::<Rational>(&w).unwrap();
            assert!(check_fundamental_identity(&a).holds);
            assert!(check_skew(&a).holds);
        }
    }

    #[test]
    fn spec_json_shape() {
        let spec: BipartiteSpec = serde_json::from_str(
            r#"{"left":[{"type":"sl2"}],"right":[{"weights":{"1":1}},{"weights":{"1":3}}]}"#,
        )
        .unwrap();
        assert_eq!(spec, BipartiteSpec::sl2_with_modules(&[1, 3]));
    }
}
