//! JSON documents for algebras and extensions.
//!
//! Scalars are exact literals (`"3"`, `"-1/2"`). Saving is canonical: brackets
//! are listed once per unordered pair, sorted by `(left, right)`, with values
//! sorted by index, so loading and saving a canonical document reproduces it
//! byte for byte.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraBuilder, LieSuperalgebra};
use crate::error::{Error, Result};
use crate::extensions::ExtensionSpec;
use crate::hom::HomSpec;
use crate::linalg::SparseVec;
use crate::scalar::Field;
use crate::subspace::GradedSubspace;
use crate::superdim::Parity;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldDoc {
    Named(String),
    Prime { prime: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BasisDoc {
    pub name: String,
    pub parity: u8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketDoc {
    pub left: usize,
    pub right: usize,
    pub value: Vec<(usize, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    pub field: FieldDoc,
    pub basis: Vec<BasisDoc>,
    pub brackets: Vec<BracketDoc>,
}

/// A kernel generator: a basis index or a dense coordinate vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum KernelEntry {
    Index(usize),
    Vector(Vec<String>),
}

/// `projection[j]` holds the coordinates of the image of total basis vector `j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtensionDocument {
    pub total: AlgebraDocument,
    pub kernel: Vec<KernelEntry>,
    pub base: AlgebraDocument,
    pub projection: Vec<Vec<String>>,
}

impl FieldDoc {
    pub fn from_field(field: Field) -> Self {
        match field {
            Field::Rational => FieldDoc::Named("rational".into()),
            Field::Prime(p) => FieldDoc::Prime { prime: p },
        }
    }

    pub fn to_field(&self) -> Result<Field> {
        match self {
            FieldDoc::Named(s) if s == "rational" => Ok(Field::Rational),
            FieldDoc::Named(s) => Err(Error::InvalidField(s.clone())),
            FieldDoc::Prime { prime } => Field::prime(*prime),
        }
    }
}

fn sparse_doc(v: &SparseVec) -> Vec<(usize, String)> {
    v.iter().map(|(i, c)| (i, c.to_string())).collect()
}

fn dense_doc(v: &SparseVec, dim: usize, field: Field) -> Vec<String> {
    v.to_dense(dim, field).iter().map(|c| c.to_string()).collect()
}

fn parse_dense(row: &[String], dim: usize, field: Field) -> Result<SparseVec> {
    if row.len() != dim {
        return Err(Error::Dimension {
            expected: dim,
            got: row.len(),
        });
    }
    let values = row.iter().map(|s| field.parse(s)).collect::<Result<Vec<_>>>()?;
    Ok(SparseVec::from_dense(&values))
}

impl AlgebraDocument {
    pub fn from_algebra(alg: &LieSuperalgebra) -> Self {
        let mut brackets = Vec::new();
        for i in 0..alg.dim() {
            for j in i..alg.dim() {
                let v = alg.structure(i, j);
                if !v.is_zero() {
                    brackets.push(BracketDoc {
                        left: i,
                        right: j,
                        value: sparse_doc(v),
                    });
                }
            }
        }
        AlgebraDocument {
            field: FieldDoc::from_field(alg.field()),
            basis: (0..alg.dim())
                .map(|i| BasisDoc {
                    name: alg.name(i).to_string(),
                    parity: alg.parity(i).bit(),
                })
                .collect(),
            brackets,
        }
    }

    /// Builds the algebra; entries for `(j, i)` are mirrored into `(i, j)`.
    pub fn to_algebra(&self) -> Result<LieSuperalgebra> {
        let field = self.field.to_field()?;
        let mut b = AlgebraBuilder::new(field);
        for e in &self.basis {
            let parity = Parity::from_bit(e.parity)
                .ok_or_else(|| Error::Document(format!("parity of {:?} must be 0 or 1", e.name)))?;
            b.basis(e.name.clone(), parity);
        }
        for br in &self.brackets {
            let value = br
                .value
                .iter()
                .map(|(k, s)| Ok((*k, field.parse(s)?)))
                .collect::<Result<Vec<_>>>()?;
            b.bracket(br.left, br.right, SparseVec::from_pairs(value));
        }
        b.build()
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents serialize");
        s.push('\n');
        s
    }
}

impl ExtensionDocument {
    pub fn from_extension(e: &ExtensionSpec) -> Self {
        let total = &e.total;
        let field = total.field();
        let rows: Vec<&SparseVec> = e.kernel.basis().collect();
        let kernel = if rows.iter().all(|v| v.nnz() == 1) {
            let mut idx: Vec<usize> = rows.iter().map(|v| v.entries()[0].0).collect();
            idx.sort_unstable();
            idx.into_iter().map(KernelEntry::Index).collect()
        } else {
            rows.iter()
                .map(|v| KernelEntry::Vector(dense_doc(v, total.dim(), field)))
                .collect()
        };
        ExtensionDocument {
            total: AlgebraDocument::from_algebra(total),
            kernel,
            base: AlgebraDocument::from_algebra(&e.base),
            projection: e
                .projection
                .images()
                .iter()
                .map(|v| dense_doc(v, e.base.dim(), field))
                .collect(),
        }
    }

    pub fn to_extension(&self) -> Result<ExtensionSpec> {
        let total = Arc::new(self.total.to_algebra()?);
        let base = Arc::new(self.base.to_algebra()?);
        if total.field() != base.field() {
            return Err(Error::FieldMismatch(total.field().to_string(), base.field().to_string()));
        }
        let field = total.field();
        let mut kernel = GradedSubspace::zero(total.grading());
        for entry in &self.kernel {
            let v = match entry {
                KernelEntry::Index(i) if *i < total.dim() => total.unit(*i),
                KernelEntry::Index(i) => {
                    return Err(Error::IndexOutOfRange {
                        index: *i,
                        dim: total.dim(),
                    })
                }
                KernelEntry::Vector(row) => parse_dense(row, total.dim(), field)?,
            };
            kernel.insert(&v)?;
        }
        let images = self
            .projection
            .iter()
            .map(|row| parse_dense(row, base.dim(), field))
            .collect::<Result<Vec<_>>>()?;
        let projection = HomSpec::new(total.clone(), base.clone(), images)?;
        Ok(ExtensionSpec::new(total, kernel, base, projection))
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents serialize");
        s.push('\n');
        s
    }
}

/// Parses an algebra document; the flag is false when the input differs from
/// its canonical form.
pub fn load_algebra(text: &str) -> Result<(LieSuperalgebra, bool)> {
    let doc = AlgebraDocument::parse(text)?;
    let alg = doc.to_algebra()?;
    let canonical = AlgebraDocument::from_algebra(&alg).to_json() == text;
    Ok((alg, canonical))
}

pub fn load_extension(text: &str) -> Result<(ExtensionSpec, bool)> {
    let doc = ExtensionDocument::parse(text)?;
    let e = doc.to_extension()?;
    let canonical = ExtensionDocument::from_extension(&e).to_json() == text;
    Ok((e, canonical))
}

pub fn save_algebra(alg: &LieSuperalgebra) -> String {
    AlgebraDocument::from_algebra(alg).to_json()
}

pub fn save_extension(e: &ExtensionSpec) -> String {
    ExtensionDocument::from_extension(e).to_json()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cover_filiform, heisenberg_odd};

    #[test]
    fn canonical_roundtrip_is_byte_identical() {
        let h = heisenberg_odd(2).unwrap();
        let text = save_algebra(&h);
        let (back, canonical) = load_algebra(&text).unwrap();
        assert!(canonical);
        assert_eq!(back, h);
        assert_eq!(save_algebra(&back), text);
    }

    #[test]
    fn unsorted_brackets_are_canonicalized() {
        let text = r#"{"field":"rational","basis":[{"name":"u","parity":0},{"name":"z","parity":1},{"name":"w","parity":1}],
            "brackets":[{"left":2,"right":0,"value":[[1,"-1"]]}]}"#;
        let (alg, canonical) = load_algebra(text).unwrap();
        assert!(!canonical);
        let h = heisenberg_odd(1).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(alg.structure(i, j), h.structure(i, j));
            }
        }
    }

    #[test]
    fn malformed_inputs() {
        let base = r#"{"field":"rational","basis":[{"name":"a","parity":0},{"name":"b","parity":0}],"brackets":[{"left":0,"right":1,"value":[[0,"SCALAR"]]}]}"#;
        for bad in ["2/4", "1/-2", "0.5", "x"] {
            let t = base.replace("SCALAR", bad);
            assert!(matches!(load_algebra(&t), Err(Error::Scalar { .. })), "{bad}");
        }
        assert!(matches!(load_algebra("{"), Err(Error::Document(_))));
        let t = base.replace("\"rational\"", "{\"prime\":4}");
        assert!(matches!(load_algebra(&t), Err(Error::InvalidField(_))));
        let t = base.replace("SCALAR", "1").replace("[[0,", "[[7,");
        assert!(matches!(load_algebra(&t), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn prime_field_documents() {
        let text = r#"{"field":{"prime":7},"basis":[{"name":"a","parity":0},{"name":"b","parity":0},{"name":"c","parity":0}],"brackets":[{"left":0,"right":1,"value":[[2,"9"]]}]}"#;
        let (alg, canonical) = load_algebra(text).unwrap();
        assert!(!canonical);
        let again = save_algebra(&alg);
        assert!(again.contains("\"2\""));
        assert!(load_algebra(&again).unwrap().1);
    }

    #[test]
    fn extension_roundtrip() {
        let e = cover_filiform(2, 2).unwrap();
        let text = save_extension(&e);
        let (back, canonical) = load_extension(&text).unwrap();
        assert!(canonical);
        assert_eq!(back.kernel, e.kernel);
        assert!(back.verify().is_ok());
    }
}
