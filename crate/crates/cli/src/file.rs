//! JSON file formats for algebras and matrices.
//!
//! Scalars are strings, `"p/q"` or `"p"`. Bracket entries are sparse; an
//! entry whose skew partner is absent implies the partner with opposite sign.

use std::collections::BTreeSet;
use std::path::Path;

use anyhow::{bail, ensure, Context, Result};
use homlts_core::linalg::{format_scalar, is_zero, parse_scalar};
use homlts_core::{BilinearMap, Matrix, Scalar, TrilinearMap};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Lie,
    HomLie,
    HomLts,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub indices: Vec<usize>,
    pub value: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Grading {
    pub even: Vec<usize>,
    pub odd: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub kind: Kind,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default)]
    pub bracket: Vec<BracketEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha2: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grading: Option<Grading>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

/// Decoded contents of an [`AlgebraFile`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Algebra {
    /// A Lie algebra, optionally with an automorphism and a grading.
    Lie {
        bracket: BilinearMap,
        aut: Option<Matrix>,
        grading: Option<Grading>,
    },
    HomLie {
        bracket: BilinearMap,
        alpha: Matrix,
    },
    HomLts {
        bracket: TrilinearMap,
        alpha1: Matrix,
        alpha2: Matrix,
    },
}

impl Algebra {
    pub fn dim(&self) -> usize {
        match self {
            Self::Lie { bracket, .. } | Self::HomLie { bracket, .. } => bracket.dim(),
            Self::HomLts { bracket, .. } => bracket.dim(),
        }
    }
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn scalar(text: &str, field: &str) -> Result<Scalar> {
    parse_scalar(text).with_context(|| format!("field {field}"))
}

fn dense(rows: &[Vec<String>], n_rows: usize, n_cols: usize, field: &str) -> Result<Matrix> {
    ensure!(rows.len() == n_rows, "field {field}: expected {n_rows} rows, found {}", rows.len());
    let mut data = Vec::with_capacity(n_rows * n_cols);
    for (r, row) in rows.iter().enumerate() {
        ensure!(
            row.len() == n_cols,
            "field {field}[{r}]: expected {n_cols} entries, found {}",
            row.len()
        );
        for (c, x) in row.iter().enumerate() {
            data.push(scalar(x, &format!("{field}[{r}][{c}]"))?);
        }
    }
    Ok(Matrix::from_row_major(n_rows, n_cols, data)?)
}

fn encode_matrix(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|r| m.row(r).iter().map(format_scalar).collect())
        .collect()
}

fn encode_vector(v: &[Scalar]) -> Vec<String> {
    v.iter().map(format_scalar).collect()
}

impl MatrixFile {
    pub fn decode(&self) -> Result<Matrix> {
        dense(&self.entries, self.rows, self.cols, "entries")
    }

    pub fn encode(m: &Matrix) -> Self {
        Self {
            rows: m.rows(),
            cols: m.cols(),
            entries: encode_matrix(m),
        }
    }
}

/// Entries checked for arity, range, length and duplicates.
fn decode_entries(file: &AlgebraFile, arity: usize) -> Result<Vec<(Vec<usize>, Vec<Scalar>)>> {
    let n = file.dim;
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(file.bracket.len());
    for (e, entry) in file.bracket.iter().enumerate() {
        let field = format!("bracket[{e}]");
        ensure!(
            entry.indices.len() == arity,
            "{field}.indices: expected {arity} indices, found {}",
            entry.indices.len()
        );
        if let Some(&i) = entry.indices.iter().find(|&&i| i >= n) {
            bail!("{field}.indices: index {i} is out of range for dimension {n}");
        }
        ensure!(
            seen.insert(entry.indices.clone()),
            "{field}.indices: {:?} given twice",
            entry.indices
        );
        ensure!(
            entry.value.len() == n,
            "{field}.value: expected {n} coefficients, found {}",
            entry.value.len()
        );
        let value = entry
            .value
            .iter()
            .enumerate()
            .map(|(k, x)| scalar(x, &format!("{field}.value[{k}]")))
            .collect::<Result<Vec<_>>>()?;
        out.push((entry.indices.clone(), value));
    }
    Ok(out)
}

fn negated(v: &[Scalar]) -> Vec<Scalar> {
    v.iter().map(|x| -x).collect()
}

impl AlgebraFile {
    pub fn decode(&self) -> Result<Algebra> {
        let n = self.dim;
        if let Some(names) = &self.basis {
            ensure!(names.len() == n, "field basis: expected {n} names, found {}", names.len());
        }
        let matrix = |m: &Option<Vec<Vec<String>>>, field: &str| -> Result<Option<Matrix>> {
            m.as_ref().map(|rows| dense(rows, n, n, field)).transpose()
        };
        let alpha = matrix(&self.alpha, "alpha")?;
        let alpha2 = matrix(&self.alpha2, "alpha2")?;
        if self.kind != Kind::HomLts && alpha2.is_some() {
            bail!("field alpha2 is only allowed for kind hom_lts");
        }
        if self.kind != Kind::Lie && self.grading.is_some() {
            bail!("field grading is only allowed for kind lie");
        }
        match self.kind {
            Kind::Lie | Kind::HomLie => {
                let entries = decode_entries(self, 2)?;
                let given: BTreeSet<Vec<usize>> = entries.iter().map(|(i, _)| i.clone()).collect();
                let mut bracket = BilinearMap::zero(n);
                for (idx, v) in &entries {
                    bracket.set(idx[0], idx[1], v);
                    if !given.contains(&vec![idx[1], idx[0]]) && idx[0] != idx[1] {
                        bracket.set(idx[1], idx[0], &negated(v));
                    }
                }
                if self.kind == Kind::Lie {
                    if let Some(g) = &self.grading {
                        if let Some(&i) = g.even.iter().chain(&g.odd).find(|&&i| i >= n) {
                            bail!("field grading: index {i} is out of range for dimension {n}");
                        }
                    }
                    Ok(Algebra::Lie {
                        bracket,
                        aut: alpha,
                        grading: self.grading.clone(),
                    })
                } else {
                    let alpha = alpha.context("field alpha is required for kind hom_lie")?;
                    Ok(Algebra::HomLie { bracket, alpha })
                }
            }
            Kind::HomLts => {
                let entries = decode_entries(self, 3)?;
                let given: BTreeSet<Vec<usize>> = entries.iter().map(|(i, _)| i.clone()).collect();
                let mut bracket = TrilinearMap::zero(n);
                for (idx, v) in &entries {
                    bracket.set(idx[0], idx[1], idx[2], v);
                    let partner = vec![idx[1], idx[0], idx[2]];
                    if !given.contains(&partner) && idx[0] != idx[1] {
                        bracket.set(idx[1], idx[0], idx[2], &negated(v));
                    }
                }
                let alpha1 = alpha.context("field alpha is required for kind hom_lts")?;
                let alpha2 = alpha2.unwrap_or_else(|| alpha1.clone());
                Ok(Algebra::HomLts {
                    bracket,
                    alpha1,
                    alpha2,
                })
            }
        }
    }

    /// Canonical form: only `i < j` entries, nonzero ones, in index order.
    pub fn encode(algebra: &Algebra, basis: Option<Vec<String>>) -> Self {
        let n = algebra.dim();
        let (kind, bracket, alpha, alpha2, grading) = match algebra {
            Algebra::Lie { bracket, aut, grading } => (
                Kind::Lie,
                bilinear_entries(bracket),
                aut.as_ref().map(encode_matrix),
                None,
                grading.clone(),
            ),
            Algebra::HomLie { bracket, alpha } => {
                (Kind::HomLie, bilinear_entries(bracket), Some(encode_matrix(alpha)), None, None)
            }
            Algebra::HomLts {
                bracket,
                alpha1,
                alpha2,
            } => (
                Kind::HomLts,
                trilinear_entries(bracket),
                Some(encode_matrix(alpha1)),
                (alpha1 != alpha2).then(|| encode_matrix(alpha2)),
                None,
            ),
        };
        Self {
            kind,
            dim: n,
            basis,
            bracket,
            alpha,
            alpha2,
            grading,
        }
    }
}

fn bilinear_entries(b: &BilinearMap) -> Vec<BracketEntry> {
    b.upper_entries()
        .filter(|(_, _, v)| !is_zero(v))
        .map(|(i, j, v)| BracketEntry {
            indices: vec![i, j],
            value: encode_vector(v),
        })
        .collect()
}

fn trilinear_entries(t: &TrilinearMap) -> Vec<BracketEntry> {
    t.upper_entries()
        .filter(|(_, _, _, v)| !is_zero(v))
        .map(|(i, j, k, v)| BracketEntry {
            indices: vec![i, j, k],
            value: encode_vector(v),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use homlts_core::corpus;

    fn sl2_file() -> AlgebraFile {
        serde_json::from_str(
            r#"{"kind":"lie","dim":3,"basis":["e","h","f"],
                "bracket":[{"indices":[1,0],"value":["2","0","0"]},
                           {"indices":[1,2],"value":["0","0","-2"]},
                           {"indices":[0,2],"value":["0","1","0"]}]}"#,
        )
        .unwrap()
    }

    #[test]
    fn skew_partners_are_implied() {
        match sl2_file().decode().unwrap() {
            Algebra::Lie { bracket, aut, .. } => {
                assert_eq!(bracket, corpus::sl2());
                assert!(aut.is_none());
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn encode_then_decode_is_identity() {
        let algebra = sl2_file().decode().unwrap();
        let file = AlgebraFile::encode(&algebra, None);
        assert!(file.bracket.iter().all(|e| e.indices[0] < e.indices[1]));
        assert_eq!(file.decode().unwrap(), algebra);
        let text = to_json(&file);
        let back: AlgebraFile = serde_json::from_str(&text).unwrap();
        assert_eq!(to_json(&back), text);
    }

    #[test]
    fn bad_inputs_name_the_field() {
        let mut f = sl2_file();
        f.bracket[0].value[1] = "1/0".into();
        let err = format!("{:#}", f.decode().unwrap_err());
        assert!(err.contains("bracket[0].value[1]"), "{err}");

        let mut f = sl2_file();
        f.bracket[0].indices = vec![3, 0];
        assert!(format!("{:#}", f.decode().unwrap_err()).contains("out of range"));

        let mut f = sl2_file();
        f.kind = Kind::HomLie;
        assert!(format!("{:#}", f.decode().unwrap_err()).contains("alpha"));

        let mut f = sl2_file();
        f.bracket.push(f.bracket[0].clone());
        assert!(format!("{:#}", f.decode().unwrap_err()).contains("twice"));
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let r: Result<AlgebraFile, _> = serde_json::from_str(r#"{"kind":"lie","dim":1,"extra":0}"#);
        assert!(r.is_err());
    }

    #[test]
    fn matrices_round_trip() {
        let m = corpus::sl2_diagonal_twist();
        assert_eq!(MatrixFile::encode(&m).decode().unwrap(), m);
        assert_eq!(MatrixFile::encode(&m).entries[2][2], "1/4");
    }
}
