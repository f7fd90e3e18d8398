use crate::scalar::{Ring, ScalarValue};

use super::{AlgebraError, Element, Result};

/// Finite-dimensional algebra given by structure constants on a labelled
/// basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Algebra {
    basis: Vec<String>,
    ring: Ring,
    /// Entry `i * n + j` holds the nonzero terms of `e_i * e_j`.
    table: Vec<Vec<(usize, ScalarValue)>>,
}

impl Algebra {
    /// Algebra with all products zero.
    pub fn new(basis: Vec<String>, ring: Ring) -> Result<Algebra> {
        if basis.is_empty() {
            return Err(AlgebraError::InvalidBasis("basis is empty".into()));
        }
        for (i, label) in basis.iter().enumerate() {
            if label.is_empty() {
                return Err(AlgebraError::InvalidBasis("empty basis label".into()));
            }
            if basis[..i].contains(label) {
                return Err(AlgebraError::InvalidBasis(format!("duplicate basis label `{label}`")));
            }
        }
        let n = basis.len();
        Ok(Algebra {
            basis,
            ring,
            table: vec![Vec::new(); n * n],
        })
    }

    /// Builds the table by evaluating `product(i, j)` for every basis pair.
    pub fn from_fn(
        basis: Vec<String>,
        ring: Ring,
        mut product: impl FnMut(usize, usize) -> Result<Element>,
    ) -> Result<Algebra> {
        let mut a = Algebra::new(basis, ring)?;
        let n = a.dim();
        for i in 0..n {
            for j in 0..n {
                let p = product(i, j)?;
                a.set_product(i, j, &p)?;
            }
        }
        Ok(a)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn basis_index(&self, label: &str) -> Option<usize> {
        self.basis.iter().position(|b| b == label)
    }

    pub fn basis_element(&self, i: usize) -> Element {
        Element::basis(self.dim(), i)
    }

    pub fn zero(&self) -> Element {
        Element::zero(self.dim())
    }

    /// Overwrites the product `e_i * e_j`.
    pub fn set_product(&mut self, i: usize, j: usize, value: &Element) -> Result<()> {
        self.check_dim(value)?;
        let mut terms = Vec::new();
        for (k, c) in value.support() {
            self.ring.join(c.ring())?;
            terms.push((k, c.with_ring(&self.ring)?));
        }
        let n = self.dim();
        self.table[i * n + j] = terms;
        Ok(())
    }

    /// Nonzero terms `(k, c)` of `e_i * e_j = sum c e_k`.
    pub fn product_terms(&self, i: usize, j: usize) -> &[(usize, ScalarValue)] {
        &self.table[i * self.dim() + j]
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> ScalarValue {
        self.product_terms(i, j)
            .iter()
            .find(|(idx, _)| *idx == k)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(ScalarValue::zero)
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Element {
        Element::from_terms(self.dim(), self.product_terms(i, j).iter().cloned())
    }

    /// Bilinear product of two elements.
    pub fn mul(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check_dim(x)?;
        self.check_dim(y)?;
        let n = self.dim();
        let mut out = Element::zero(n);
        for (i, xi) in x.support() {
            for (j, yj) in y.support() {
                let terms = &self.table[i * n + j];
                if terms.is_empty() {
                    continue;
                }
                let c = xi.checked_mul(yj)?;
                for (k, s) in terms {
                    let slot = out.coord_mut(*k);
                    *slot = slot.checked_add(&c.checked_mul(s)?)?;
                }
            }
        }
        Ok(out)
    }

    /// True when every structure constant is rational.
    pub fn is_rational(&self) -> bool {
        self.table
            .iter()
            .flatten()
            .all(|(_, c)| c.is_constant())
    }

    /// Same algebra with coefficients re-tagged in an extension ring.
    pub fn with_ring(&self, ring: &Ring) -> Result<Algebra> {
        let table = self
            .table
            .iter()
            .map(|terms| {
                terms
                    .iter()
                    .map(|(k, c)| Ok((*k, c.with_ring(ring)?)))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        Ok(Algebra {
            basis: self.basis.clone(),
            ring: ring.clone(),
            table,
        })
    }

    pub(crate) fn check_dim(&self, x: &Element) -> Result<()> {
        if x.dim() != self.dim() {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.dim(),
                found: x.dim(),
            });
        }
        Ok(())
    }
}
