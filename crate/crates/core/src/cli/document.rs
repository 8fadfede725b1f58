//! The algebra description file: JSON with named basis vectors.
//!
//! ```json
//! {
//!   "schema_version": 1,
//!   "p": 2,
//!   "basis": ["x", "y"],
//!   "bracket": [{"left": "x", "right": "y", "value": {"y": 1}}],
//!   "pmap": {"x": {"x": 1}}
//! }
//! ```
//!
//! Omitted brackets and p-map entries are zero. Integers are reduced mod p. A bracket
//! written as `[y, x]` is stored as `[x, y]` with the value negated.

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gfp::{FpVector, PrimeField};
use crate::rla::RestrictedLieAlgebra;

pub const SCHEMA_VERSION: u32 = 1;

fn default_version() -> u32 {
    SCHEMA_VERSION
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub left: String,
    pub right: String,
    #[serde(default)]
    pub value: IndexMap<String, i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    #[serde(default = "default_version")]
    pub schema_version: u32,
    pub p: u32,
    pub basis: Vec<String>,
    #[serde(default)]
    pub bracket: Vec<BracketEntry>,
    #[serde(default)]
    pub pmap: IndexMap<String, IndexMap<String, i64>>,
}

impl AlgebraDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    /// The canonical document of an algebra: nonzero brackets in basis-pair order and
    /// nonzero p-map rows only.
    pub fn from_algebra(l: &RestrictedLieAlgebra) -> Self {
        let names = l.names();
        let as_map = |v: &FpVector| -> IndexMap<String, i64> {
            v.nonzero()
                .map(|(i, c)| (names[i].clone(), c as i64))
                .collect()
        };
        AlgebraDocument {
            schema_version: SCHEMA_VERSION,
            p: l.p() as u32,
            basis: names.to_vec(),
            bracket: l
                .upper_brackets()
                .filter(|(_, _, v)| !v.is_zero())
                .map(|(i, j, v)| BracketEntry {
                    left: names[i].clone(),
                    right: names[j].clone(),
                    value: as_map(v),
                })
                .collect(),
            pmap: (0..l.dim())
                .filter(|&i| !l.basis_pth_power(i).is_zero())
                .map(|i| (names[i].clone(), as_map(l.basis_pth_power(i))))
                .collect(),
        }
    }

    /// Builds the tables without checking the axioms.
    pub fn to_unchecked(&self) -> Result<RestrictedLieAlgebra> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(Error::Parse(format!(
                "schema_version: unsupported value {}",
                self.schema_version
            )));
        }
        let field = PrimeField::new(self.p)?;
        let d = self.basis.len();
        let index = |name: &str, place: &str| {
            self.basis
                .iter()
                .position(|b| b == name)
                .ok_or_else(|| Error::Parse(format!("{place}: undeclared basis name `{name}`")))
        };
        let vector = |m: &IndexMap<String, i64>, place: &str| -> Result<FpVector> {
            let mut v = vec![0i64; d];
            for (name, &c) in m {
                v[index(name, place)?] += c;
            }
            Ok(FpVector::from_i64(field, &v))
        };
        let mut brackets = Vec::with_capacity(self.bracket.len());
        for (k, e) in self.bracket.iter().enumerate() {
            let place = format!("bracket[{k}]");
            let (i, j) = (index(&e.left, &place)?, index(&e.right, &place)?);
            let v = vector(&e.value, &place)?;
            match i.cmp(&j) {
                std::cmp::Ordering::Less => brackets.push((i, j, v)),
                std::cmp::Ordering::Greater => brackets.push((j, i, v.scaled(field.neg(1)))),
                std::cmp::Ordering::Equal if v.is_zero() => {}
                std::cmp::Ordering::Equal => {
                    return Err(Error::Parse(format!(
                        "{place}: [{0}, {0}] must be zero",
                        e.left
                    )))
                }
            }
        }
        let mut pmap = vec![FpVector::zero(field, d); d];
        for (name, row) in &self.pmap {
            let place = format!("pmap.{name}");
            pmap[index(name, "pmap")?] = vector(row, &place)?;
        }
        RestrictedLieAlgebra::new(field, self.basis.clone(), brackets, pmap)
    }

    /// Builds and validates.
    pub fn to_algebra(&self) -> Result<RestrictedLieAlgebra> {
        self.to_unchecked()?.checked()
    }
}

/// Parses and validates a document.
pub fn parse(text: &str) -> Result<RestrictedLieAlgebra> {
    AlgebraDocument::from_json(text)?.to_algebra()
}

pub fn emit(l: &RestrictedLieAlgebra) -> String {
    AlgebraDocument::from_algebra(l).to_json()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{make, standard_family, CatalogKind};

    #[test]
    fn parse_examples() {
        let t = parse(r#"{"p":2, "basis":["x"], "bracket":[], "pmap":{"x":{"x":1}}}"#).unwrap();
        assert!(t.same_tables(&make(CatalogKind::Torus(1), 2).unwrap()));
        let err = parse(r#"{"p":2, "basis":["x"], "pmap":{"x":{"q":1}}}"#).unwrap_err();
        assert!(err.to_string().contains("`q`"), "{err}");
        let n = parse(
            r#"{"p":2,"basis":["x","y"],"bracket":[{"left":"x","right":"y","value":{"y":1}}],
                "pmap":{"x":{"x":1}}}"#,
        )
        .unwrap();
        assert!(n.same_tables(&make(CatalogKind::NonAbelian2, 2).unwrap()));
    }

    #[test]
    fn reversed_brackets_and_reduction() {
        let a = parse(
            r#"{"p":3,"basis":["x","y"],"bracket":[{"left":"y","right":"x","value":{"y":-1}}],
                "pmap":{"x":{"x":4}}}"#,
        )
        .unwrap();
        assert!(a.same_tables(&make(CatalogKind::NonAbelian2, 3).unwrap()));
    }

    #[test]
    fn rejections() {
        assert!(matches!(parse("{"), Err(Error::Parse(_))));
        assert!(matches!(
            parse(r#"{"p":4,"basis":[]}"#),
            Err(Error::Field(_))
        ));
        assert!(parse(r#"{"p":11,"basis":[]}"#).unwrap_err().is_cap());
        assert!(matches!(
            parse(r#"{"schema_version":2,"p":2,"basis":[]}"#),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            parse(r#"{"p":2,"basis":["x","x"]}"#),
            Err(Error::Malformed(_))
        ));
        // ad(x^[2]) = ad(y) = 0 but (ad x)^2 sends y to y.
        let e = parse(
            r#"{"p":2,"basis":["x","y"],"bracket":[{"left":"x","right":"y","value":{"y":1}}],
                "pmap":{"x":{"y":1}}}"#,
        )
        .unwrap_err();
        assert!(matches!(e, Error::Validation(_)));
        assert!(e.to_string().contains("ad(x^[p])"), "{e}");
    }

    #[test]
    fn round_trip_catalog() {
        for p in [2, 3, 5, 7] {
            for (kind, l) in standard_family(p, 4).unwrap() {
                let back = parse(&emit(&l)).unwrap();
                assert!(back.same_tables(&l), "{kind}");
                assert_eq!(back.names(), l.names());
            }
        }
    }
}
