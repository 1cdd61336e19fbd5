//! JSON file formats for algebras, subspaces, witnesses and bipartite specs.
//!
//! Basis indices are 1-based in every file and rationals are written as
//! `"p/q"` strings, or `"p"` when `q = 1`. Output is canonical: products are
//! sorted by argument tuple and terms by basis index, with zero terms dropped,
//! so parsing and re-serializing a written file reproduces it byte for byte.

use std::collections::BTreeSet;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::{NAryAlgebra, Witness};
use crate::error::{Error, Result};
use crate::exactlin::Subspace;
use crate::functors::BipartiteSpec;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraFile {
    name: String,
    arity: usize,
    dim: usize,
    labels: Vec<String>,
    products: Vec<ProductRecord>,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    metadata: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ProductRecord {
    args: Vec<usize>,
    value: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Term {
    coef: String,
    basis: usize,
}

pub fn parse_scalar<S: Scalar + FromStr>(text: &str) -> Result<S> {
    let bad = || Error::Parse(format!("invalid rational {text:?}"));
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let digits = |s: &str| {
        let s = s.strip_prefix('-').unwrap_or(s);
        !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
    };
    if !digits(num) || !den.is_none_or(digits) {
        return Err(bad());
    }
    if den.is_some_and(|d| d.bytes().all(|b| b == b'0' || b == b'-')) {
        return Err(Error::Parse(format!("zero denominator in {text:?}")));
    }
    text.parse().map_err(|_| bad())
}

fn to_file<S: Scalar>(alg: &NAryAlgebra<S>) -> AlgebraFile {
    AlgebraFile {
        name: alg.name().to_string(),
        arity: alg.arity(),
        dim: alg.dim(),
        labels: alg.labels().to_vec(),
        products: alg
            .products()
            .map(|(args, value)| ProductRecord {
                args: args.iter().map(|i| i + 1).collect(),
                value: value
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, c)| Term {
                        coef: c.to_string(),
                        basis: i + 1,
                    })
                    .collect(),
            })
            .collect(),
        metadata: alg.metadata().to_string(),
    }
}

pub fn algebra_to_json<S: Scalar>(alg: &NAryAlgebra<S>) -> String {
    let mut s = serde_json::to_string_pretty(&to_file(alg)).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn algebra_from_json<S: Scalar + FromStr>(text: &str) -> Result<NAryAlgebra<S>> {
    let file: AlgebraFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    if file.labels.len() != file.dim {
        return Err(Error::Parse(format!(
            "{} labels for dimension {}",
            file.labels.len(),
            file.dim
        )));
    }
    if file.arity < 2 {
        return Err(Error::Parse(format!(
            "arity must be at least 2, got {}",
            file.arity
        )));
    }
    let index = |i: usize, what: &str| -> Result<usize> {
        if i == 0 || i > file.dim {
            Err(Error::Parse(format!(
                "{what} index {i} outside 1..={}",
                file.dim
            )))
        } else {
            Ok(i - 1)
        }
    };
    let mut alg = NAryAlgebra::new(file.name.clone(), file.arity, file.labels.clone())?;
    let mut seen = BTreeSet::new();
    for p in &file.products {
        if p.args.len() != file.arity {
            return Err(Error::Parse(format!(
                "product {:?} has {} arguments, arity is {}",
                p.args,
                p.args.len(),
                file.arity
            )));
        }
        let args = p
            .args
            .iter()
            .map(|&i| index(i, "argument"))
            .collect::<Result<Vec<_>>>()?;
        if !seen.insert(args.clone()) {
            return Err(Error::Parse(format!("product {:?} listed twice", p.args)));
        }
        let mut value = vec![S::zero(); file.dim];
        let mut bases = BTreeSet::new();
        for t in &p.value {
            let b = index(t.basis, "basis")?;
            if !bases.insert(b) {
                return Err(Error::Parse(format!(
                    "product {:?} repeats basis {}",
                    p.args, t.basis
                )));
            }
            value[b] = parse_scalar(&t.coef)?;
        }
        alg.set_product(&args, value)?;
    }
    alg.set_metadata(file.metadata);
    Ok(alg)
}

fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

pub fn read_algebra<S: Scalar + FromStr>(path: impl AsRef<Path>) -> Result<NAryAlgebra<S>> {
    algebra_from_json(&read_text(path.as_ref())?)
}

pub fn write_text(path: impl AsRef<Path>, text: &str) -> Result<()> {
    let path = path.as_ref();
    fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

pub fn write_algebra<S: Scalar>(path: impl AsRef<Path>, alg: &NAryAlgebra<S>) -> Result<()> {
    write_text(path, &algebra_to_json(alg))
}

pub fn vector_to_value<S: Scalar>(v: &[S]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

/// `{labels, dim, rows}` with the RREF basis rows as rational strings.
pub fn subspace_to_value<S: Scalar>(sub: &Subspace<S>, labels: &[String]) -> Value {
    json!({
        "labels": labels,
        "dim": sub.dim(),
        "rows": sub.basis().iter().map(|r| vector_to_value(r)).collect::<Vec<_>>(),
    })
}

pub fn subspace_from_value<S: Scalar + FromStr>(value: &Value) -> Result<Subspace<S>> {
    let bad = |m: &str| Error::Parse(format!("subspace: {m}"));
    let ambient = value["labels"]
        .as_array()
        .ok_or_else(|| bad("missing labels"))?
        .len();
    let rows = value["rows"]
        .as_array()
        .ok_or_else(|| bad("missing rows"))?;
    let rows = rows
        .iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| bad("row is not a list"))?
                .iter()
                .map(|x| parse_scalar(x.as_str().ok_or_else(|| bad("entry is not a string"))?))
                .collect::<Result<Vec<S>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Subspace::span(&rows, ambient)
}

/// Witness with 1-based tuples.
pub fn witness_to_value<S: Scalar>(w: &Witness<S>) -> Value {
    json!({
        "tuples": w.tuples.iter()
            .map(|t| t.iter().map(|i| i + 1).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
        "lhs": vector_to_value(&w.lhs),
        "rhs": vector_to_value(&w.rhs),
        "note": w.note,
    })
}

pub fn spec_from_json(text: &str) -> Result<BipartiteSpec> {
    let spec: BipartiteSpec =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    spec.validate()?;
    Ok(spec)
}

pub fn spec_to_json(spec: &BipartiteSpec) -> String {
    let mut s = serde_json::to_string_pretty(spec).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn read_spec(path: impl AsRef<Path>) -> Result<BipartiteSpec> {
    spec_from_json(&read_text(path.as_ref())?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::equal_tensor;
    use crate::functors::{build_l2, build_sl2, build_vn};
    use crate::Rational;

    #[test]
    fn scalars() {
        assert_eq!(
            parse_scalar::<Rational>("-3/6").unwrap(),
            Rational::new((-1).into(), 2.into())
        );
        assert_eq!(
            parse_scalar::<Rational>("7").unwrap(),
            Rational::from_int(7)
        );
        for bad in ["1/0", "", "1/", "x", "1.5", " 1", "1/-0", "--1"] {
            assert!(parse_scalar::<Rational>(bad).is_err(), "{bad}");
        }
        assert_eq!(Rational::new(2.into(), 4.into()).to_string(), "1/2");
    }

    #[test]
    fn round_trip_is_exact() {
        for alg in [build_sl2::<Rational>(), build_l2(), build_vn(3).unwrap()] {
            let text = algebra_to_json(&alg);
            let back: NAryAlgebra<Rational> = algebra_from_json(&text).unwrap();
            assert!(equal_tensor(&alg, &back));
            assert_eq!(back.metadata(), alg.metadata());
            assert_eq!(algebra_to_json(&back), text);
        }
    }

    #[test]
    fn l2_file_shape() {
        let text = algebra_to_json(&build_l2::<Rational>());
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(
            v["products"],
            json!([{"args": [2, 2], "value": [{"coef": "1", "basis": 1}]}])
        );
    }

    #[test]
    fn parse_errors() {
        let base = |products: &str| {
            format!(r#"{{"name":"x","arity":2,"dim":2,"labels":["a","b"],"products":{products}}}"#)
        };
        let cases = [
            base(r#"[{"args":[1,3],"value":[]}]"#),
            base(r#"[{"args":[1],"value":[]}]"#),
            base(r#"[{"args":[1,2],"value":[{"coef":"1/0","basis":1}]}]"#),
            base(r#"[{"args":[1,2],"value":[{"coef":"1","basis":0}]}]"#),
            base(r#"[{"args":[1,2],"value":[]},{"args":[1,2],"value":[]}]"#),
            base(r#"[{"args":[1,2],"value":[{"coef":"1","basis":1},{"coef":"2","basis":1}]}]"#),
            r#"{"name":"x","arity":2,"dim":2,"labels":["a"],"products":[]}"#.to_string(),
            "not json".to_string(),
        ];
        for c in cases {
            assert!(
                matches!(algebra_from_json::<Rational>(&c), Err(Error::Parse(_))),
                "{c}"
            );
        }
    }

    #[test]
    fn subspace_round_trip() {
        let s = Subspace::<Rational>::span(
            &[vec![
                Rational::from_int(2),
                Rational::from_int(1),
                Rational::from_int(0),
            ]],
            3,
        )
        .unwrap();
        let labels: Vec<String> = ["e", "h", "f"].iter().map(|x| x.to_string()).collect();
        let v = subspace_to_value(&s, &labels);
        assert_eq!(v["rows"], json!([["1", "1/2", "0"]]));
        assert_eq!(subspace_from_value::<Rational>(&v).unwrap(), s);
    }

    #[test]
    fn spec_files() {
        let spec = spec_from_json(
            r#"{"left":[{"type":"sl2"}],"right":[{"weights":{"1":1}},{"weights":{"1":3}}]}"#,
        )
        .unwrap();
        assert_eq!(spec, BipartiteSpec::sl2_with_modules(&[1, 3]));
        assert_eq!(spec_from_json(&spec_to_json(&spec)).unwrap(), spec);
        assert!(spec_from_json(r#"{"left":[{"type":"sl3"}],"right":[]}"#).is_err());
        assert!(
            spec_from_json(r#"{"left":[{"type":"sl2"}],"right":[{"weights":{"2":1}}]}"#).is_err()
        );
    }
}
