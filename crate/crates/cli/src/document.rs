//! JSON algebra documents.

use bihom_core::algebra::{Algebra, BiHomAlgebra, Element, LinearEndo};
use bihom_core::catalog::CatalogEntry;
use bihom_core::scalar::{parse_scalar, Ring, ScalarValue};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error("{path}: {message}")]
    Schema { path: String, message: String },
}

fn schema(path: impl Into<String>, message: impl ToString) -> DocumentError {
    DocumentError::Schema {
        path: path.into(),
        message: message.to_string(),
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scalars {
    #[serde(default)]
    pub variables: Vec<String>,
    #[serde(default)]
    pub constraints: Vec<String>,
    #[serde(default)]
    pub inequations: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Term {
    pub basis: String,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductEntry {
    pub left: String,
    pub right: String,
    pub result: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    pub name: String,
    pub dimension: usize,
    pub basis: Vec<String>,
    #[serde(default)]
    pub scalars: Scalars,
    #[serde(default)]
    pub product: Vec<ProductEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<Vec<Vec<String>>>,
}

/// A validated document.
#[derive(Clone, Debug)]
pub struct Loaded {
    pub name: String,
    pub algebra: Algebra,
    pub maps: Option<(LinearEndo, LinearEndo)>,
    pub constraints: Vec<ScalarValue>,
    pub inequations: Vec<ScalarValue>,
}

impl Loaded {
    /// The algebra with its maps, identity maps when none are given.
    pub fn bihom(&self) -> Result<BiHomAlgebra, DocumentError> {
        match &self.maps {
            Some((a, b)) => BiHomAlgebra::new(self.algebra.clone(), a.clone(), b.clone()).map_err(|e| schema("alpha", e)),
            None => Ok(BiHomAlgebra::with_identity_maps(self.algebra.clone())),
        }
    }
}

pub fn parse_document(bytes: &[u8]) -> Result<AlgebraDocument, DocumentError> {
    let de = &mut serde_json::Deserializer::from_slice(bytes);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        if inner.is_syntax() || inner.is_eof() {
            DocumentError::Json(inner.to_string())
        } else {
            schema(if path == "." { "document".into() } else { path }, inner)
        }
    })
}

/// Canonical JSON text, terminated by a newline.
pub fn emit_document(doc: &AlgebraDocument) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

impl AlgebraDocument {
    pub fn load(&self) -> Result<Loaded, DocumentError> {
        if self.basis.len() != self.dimension {
            return Err(schema(
                "basis",
                format!("{} labels for dimension {}", self.basis.len(), self.dimension),
            ));
        }
        let ring = Ring::new(self.scalars.variables.iter().map(String::as_str)).map_err(|e| schema("scalars.variables", e))?;
        let coeff = |path: String, text: &str| parse_scalar(text, &ring).map_err(|e| schema(path, e));
        let list = |field: &str, items: &[String]| -> Result<Vec<ScalarValue>, DocumentError> {
            items
                .iter()
                .enumerate()
                .map(|(k, t)| coeff(format!("scalars.{field}[{k}]"), t))
                .collect()
        };
        let constraints = list("constraints", &self.scalars.constraints)?;
        let inequations = list("inequations", &self.scalars.inequations)?;
        let mut algebra = Algebra::new(self.basis.clone(), ring.clone()).map_err(|e| schema("basis", e))?;
        let n = self.dimension;
        let index = |path: String, label: &str| {
            algebra
                .basis_index(label)
                .ok_or_else(|| schema(path, format!("unknown basis label `{label}`")))
        };
        let mut seen = std::collections::HashSet::new();
        let mut products = Vec::with_capacity(self.product.len());
        for (k, p) in self.product.iter().enumerate() {
            let i = index(format!("product[{k}].left"), &p.left)?;
            let j = index(format!("product[{k}].right"), &p.right)?;
            if !seen.insert((i, j)) {
                return Err(schema(format!("product[{k}]"), format!("duplicate entry for ({}, {})", p.left, p.right)));
            }
            let mut value = Element::zero(n);
            for (t, term) in p.result.iter().enumerate() {
                let m = index(format!("product[{k}].result[{t}].basis"), &term.basis)?;
                let c = coeff(format!("product[{k}].result[{t}].coeff"), &term.coeff)?;
                value = &value + &Element::basis(n, m).scale(&c);
            }
            products.push((i, j, value));
        }
        for (i, j, value) in products {
            algebra.set_product(i, j, &value).map_err(|e| schema("product", e))?;
        }
        let matrix = |field: &str, rows: &[Vec<String>]| -> Result<LinearEndo, DocumentError> {
            if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                return Err(schema(field, format!("expected a {n}x{n} matrix")));
            }
            let rows = rows
                .iter()
                .enumerate()
                .map(|(i, r)| {
                    r.iter()
                        .enumerate()
                        .map(|(j, t)| coeff(format!("{field}[{i}][{j}]"), t))
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()?;
            LinearEndo::from_rows(rows).map_err(|e| schema(field, e))
        };
        let maps = match (&self.alpha, &self.beta) {
            (None, None) => None,
            (Some(a), Some(b)) => Some((matrix("alpha", a)?, matrix("beta", b)?)),
            (Some(a), None) => Some((matrix("alpha", a)?, LinearEndo::identity(n))),
            (None, Some(b)) => Some((LinearEndo::identity(n), matrix("beta", b)?)),
        };
        Ok(Loaded {
            name: self.name.clone(),
            algebra,
            maps,
            constraints,
            inequations,
        })
    }

    /// Canonical document: nonzero products in row-major order, terms by
    /// basis index.
    pub fn from_parts(
        name: &str,
        algebra: &Algebra,
        maps: Option<(&LinearEndo, &LinearEndo)>,
        constraints: &[ScalarValue],
        inequations: &[ScalarValue],
    ) -> AlgebraDocument {
        let basis = algebra.basis().to_vec();
        let n = algebra.dim();
        let mut product = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let terms = algebra.product_terms(i, j);
                if terms.is_empty() {
                    continue;
                }
                let mut result: Vec<(usize, &ScalarValue)> = terms.iter().map(|(m, c)| (*m, c)).collect();
                result.sort_by_key(|(m, _)| *m);
                product.push(ProductEntry {
                    left: basis[i].clone(),
                    right: basis[j].clone(),
                    result: result
                        .into_iter()
                        .map(|(m, c)| Term {
                            basis: basis[m].clone(),
                            coeff: c.to_string(),
                        })
                        .collect(),
                });
            }
        }
        let matrix = |m: &LinearEndo| -> Vec<Vec<String>> {
            (0..n).map(|i| (0..n).map(|j| m.entry(i, j).to_string()).collect()).collect()
        };
        AlgebraDocument {
            name: name.to_string(),
            dimension: n,
            basis,
            scalars: Scalars {
                variables: algebra.ring().vars().to_vec(),
                constraints: constraints.iter().map(|c| c.to_string()).collect(),
                inequations: inequations.iter().map(|c| c.to_string()).collect(),
            },
            product,
            alpha: maps.map(|(a, _)| matrix(a)),
            beta: maps.map(|(_, b)| matrix(b)),
        }
    }

    pub fn from_bihom(name: &str, b: &BiHomAlgebra, constraints: &[ScalarValue], inequations: &[ScalarValue]) -> AlgebraDocument {
        AlgebraDocument::from_parts(name, b.algebra(), Some((b.alpha(), b.beta())), constraints, inequations)
    }

    pub fn from_entry(entry: &CatalogEntry) -> AlgebraDocument {
        let maps = entry.maps.as_ref().map(|(a, b)| (a, b));
        AlgebraDocument::from_parts(&entry.key, &entry.algebra, maps, &entry.constraints, &entry.inequations)
    }
}
