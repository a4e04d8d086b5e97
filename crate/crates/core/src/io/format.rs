//! JSON algebra files. Rationals are always strings (`"3"`, `"-1/2"`).

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{BracketEntry, CatalogEntry, Ideal, LieAlgebra, Representation};
use crate::error::{Error, Result};
use crate::linalg::rat::{format_rat, parse_rat, zeros};
use crate::linalg::{Matrix, Rat};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketSpec {
    pub left: usize,
    pub right: usize,
    /// Basis index (as a string key) to coefficient.
    pub result: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default)]
    pub brackets: Vec<BracketSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ideal: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma: Option<Vec<String>>,
}

/// `{"k": AlgebraFile, "rep": [matrix per basis element of k]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SemidirectFile {
    pub k: AlgebraFile,
    pub rep: Vec<Vec<Vec<String>>>,
}

/// A parsed and validated algebra file.
#[derive(Clone, Debug)]
pub struct Loaded {
    pub name: String,
    pub algebra: LieAlgebra,
    pub ideal: Option<Ideal>,
    pub sigma: Option<Vec<Rat>>,
}

fn row(v: &[String]) -> Result<Vec<Rat>> {
    v.iter().map(|s| parse_rat(s)).collect()
}

fn strings(v: &[Rat]) -> Vec<String> {
    v.iter().map(format_rat).collect()
}

fn sized(v: Vec<Rat>, dim: usize, what: &str) -> Result<Vec<Rat>> {
    if v.len() != dim {
        return Err(Error::Parse(format!("{what} has {} entries, expected {dim}", v.len())));
    }
    Ok(v)
}

impl AlgebraFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("algebra files serialize")
    }

    pub fn algebra(&self) -> Result<LieAlgebra> {
        let mut entries: Vec<BracketEntry> = Vec::with_capacity(self.brackets.len());
        for b in &self.brackets {
            let mut v = zeros(self.dim);
            for (k, c) in &b.result {
                let k: usize = k.parse().map_err(|_| Error::Parse(format!("bad basis index {k:?} in result")))?;
                if k >= self.dim {
                    return Err(Error::IndexOutOfRange { index: k, dim: self.dim });
                }
                v[k] = parse_rat(c)?;
            }
            entries.push((b.left, b.right, v));
        }
        let alg = LieAlgebra::new(self.dim, &entries)?;
        Ok(match &self.basis {
            Some(labels) if labels.len() == self.dim => alg.with_labels(labels.iter().cloned()),
            Some(labels) => return Err(Error::Parse(format!("{} basis labels for dimension {}", labels.len(), self.dim))),
            None => alg,
        })
    }

    pub fn load(&self) -> Result<Loaded> {
        let algebra = self.algebra()?;
        let ideal = match &self.ideal {
            Some(rows) => {
                let rows = rows.iter().map(|r| sized(row(r)?, self.dim, "ideal row")).collect::<Result<Vec<_>>>()?;
                Some(Ideal::from_vectors(&algebra, &rows)?)
            }
            None => None,
        };
        let sigma = self.sigma.as_deref().map(|s| sized(row(s)?, self.dim, "sigma")).transpose()?;
        Ok(Loaded { name: self.name.clone(), algebra, ideal, sigma })
    }

    pub fn from_algebra(name: &str, alg: &LieAlgebra, ideal: Option<&Ideal>, sigma: Option<&[Rat]>) -> Self {
        let brackets = alg
            .nonzero_brackets()
            .map(|(i, j, v)| BracketSpec {
                left: i,
                right: j,
                result: v
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| **c != Rat::default())
                    .map(|(k, c)| (k.to_string(), format_rat(c)))
                    .collect(),
            })
            .collect();
        AlgebraFile {
            name: name.to_string(),
            dim: alg.dim(),
            basis: Some(alg.labels().to_vec()),
            brackets,
            ideal: ideal.map(|n| n.space().basis_vectors().map(strings).collect()),
            sigma: sigma.map(strings),
        }
    }

    /// The catalog entry with its designated ideal.
    pub fn from_catalog(entry: &CatalogEntry) -> Self {
        Self::from_algebra(&entry.name, &entry.algebra, entry.designated_ideal(), entry.sigma.as_deref())
    }
}

impl SemidirectFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("semidirect files serialize")
    }

    /// Parses `k` and checks the homomorphism property of `rep`.
    pub fn load(&self) -> Result<(LieAlgebra, Representation)> {
        let k = self.k.algebra()?;
        let action = self
            .rep
            .iter()
            .map(|m| {
                let rows = m.iter().map(|r| row(r)).collect::<Result<Vec<_>>>()?;
                Matrix::from_rows(rows.len(), rows)
            })
            .collect::<Result<Vec<_>>>()?;
        let rep = Representation::new(&k, action)?;
        Ok((k, rep))
    }

    pub fn from_parts(name: &str, k: &LieAlgebra, rep: &Representation) -> Self {
        SemidirectFile {
            k: AlgebraFile::from_algebra(name, k, None, None),
            rep: rep.action().iter().map(|m| m.row_vecs().iter().map(|r| strings(r)).collect()).collect(),
        }
    }
}

/// Whether a JSON document is in the semidirect format.
pub fn is_semidirect(text: &str) -> bool {
    serde_json::from_str::<serde_json::Value>(text).is_ok_and(|v| v.get("k").is_some() && v.get("rep").is_some())
}
