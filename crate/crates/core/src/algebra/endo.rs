use crate::scalar::{Ring, ScalarValue};

use super::{AlgebraError, Element, Result};

/// Linear map of a finite-dimensional space, stored as a dense matrix whose
/// column `j` is the image of `e_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearEndo {
    n: usize,
    entries: Vec<ScalarValue>,
}

impl LinearEndo {
    pub fn identity(n: usize) -> LinearEndo {
        let mut m = LinearEndo::zero(n);
        for i in 0..n {
            m.entries[i * n + i] = ScalarValue::one();
        }
        m
    }

    pub fn zero(n: usize) -> LinearEndo {
        LinearEndo {
            n,
            entries: vec![ScalarValue::zero(); n * n],
        }
    }

    /// `rows[i][j]` is the coefficient of `e_i` in the image of `e_j`.
    pub fn from_rows(rows: Vec<Vec<ScalarValue>>) -> Result<LinearEndo> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(AlgebraError::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(LinearEndo { n, entries })
    }

    /// Builds the map from the images of the basis vectors.
    pub fn from_columns(columns: &[Element]) -> Result<LinearEndo> {
        let n = columns.len();
        let mut m = LinearEndo::zero(n);
        for (j, col) in columns.iter().enumerate() {
            if col.dim() != n {
                return Err(AlgebraError::DimensionMismatch {
                    expected: n,
                    found: col.dim(),
                });
            }
            for (i, c) in col.coords().iter().enumerate() {
                m.entries[i * n + j] = c.clone();
            }
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &ScalarValue {
        &self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<ScalarValue>> {
        self.entries.chunks(self.n.max(1)).map(<[_]>::to_vec).collect()
    }

    /// Image of `e_j`.
    pub fn column(&self, j: usize) -> Element {
        Element::from_coords((0..self.n).map(|i| self.entry(i, j).clone()).collect())
    }

    pub fn is_identity(&self) -> bool {
        *self == LinearEndo::identity(self.n)
    }

    pub fn apply(&self, x: &Element) -> Result<Element> {
        if x.dim() != self.n {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.n,
                found: x.dim(),
            });
        }
        let mut out = Element::zero(self.n);
        for (j, xj) in x.support() {
            for i in 0..self.n {
                let a = self.entry(i, j);
                if !a.is_zero() {
                    let slot = out.coord_mut(i);
                    *slot = slot.checked_add(&a.checked_mul(xj)?)?;
                }
            }
        }
        Ok(out)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearEndo) -> Result<LinearEndo> {
        if other.n != self.n {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let n = self.n;
        let mut out = LinearEndo::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.entry(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.entry(k, j);
                    if !b.is_zero() {
                        let slot = &mut out.entries[i * n + j];
                        *slot = slot.checked_add(&a.checked_mul(b)?)?;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, exp: u32) -> Result<LinearEndo> {
        let mut acc = LinearEndo::identity(self.n);
        for _ in 0..exp {
            acc = acc.compose(self)?;
        }
        Ok(acc)
    }

    pub fn add(&self, other: &LinearEndo) -> Result<LinearEndo> {
        if other.n != self.n {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.checked_add(b))
            .collect::<std::result::Result<_, _>>()?;
        Ok(LinearEndo { n: self.n, entries })
    }

    /// Determinant by fraction-free elimination.
    pub fn determinant(&self) -> Result<ScalarValue> {
        let n = self.n;
        if n == 0 {
            return Ok(ScalarValue::one());
        }
        let mut m: Vec<Vec<ScalarValue>> = self.rows();
        let mut prev = ScalarValue::one();
        let mut negate = false;
        for k in 0..n {
            let Some(p) = (k..n).find(|&r| !m[r][k].is_zero()) else {
                return Ok(ScalarValue::zero());
            };
            if p != k {
                m.swap(p, k);
                negate = !negate;
            }
            for i in k + 1..n {
                let factor = m[i][k].clone();
                for j in k + 1..n {
                    let v = m[k][k]
                        .checked_mul(&m[i][j])?
                        .checked_sub(&factor.checked_mul(&m[k][j])?)?;
                    m[i][j] = v.checked_div(&prev)?;
                }
                m[i][k] = ScalarValue::zero();
            }
            prev = m[k][k].clone();
        }
        Ok(if negate { prev.neg() } else { prev })
    }

    /// Inverse by fraction-free Gauss-Jordan elimination. `name` labels the
    /// map in the error.
    pub fn inverse(&self, name: &str) -> Result<LinearEndo> {
        let n = self.n;
        let singular = || AlgebraError::NotInvertible { map: name.to_string() };
        let mut m: Vec<Vec<ScalarValue>> = self
            .rows()
            .into_iter()
            .enumerate()
            .map(|(i, mut row)| {
                row.extend((0..n).map(|j| {
                    if i == j {
                        ScalarValue::one()
                    } else {
                        ScalarValue::zero()
                    }
                }));
                row
            })
            .collect();
        let mut prev = ScalarValue::one();
        for k in 0..n {
            let p = (k..n).find(|&r| !m[r][k].is_zero()).ok_or_else(singular)?;
            m.swap(p, k);
            let pivot_row = m[k].clone();
            let pivot = pivot_row[k].clone();
            for (i, row) in m.iter_mut().enumerate() {
                if i == k {
                    continue;
                }
                let factor = row[k].clone();
                for j in 0..2 * n {
                    if j == k {
                        continue;
                    }
                    let v = pivot
                        .checked_mul(&row[j])?
                        .checked_sub(&factor.checked_mul(&pivot_row[j])?)?;
                    row[j] = v.checked_div(&prev)?;
                }
                row[k] = ScalarValue::zero();
            }
            prev = pivot;
        }
        let mut inv = LinearEndo::zero(n);
        for i in 0..n {
            let d = m[i][i].inv()?;
            for j in 0..n {
                inv.entries[i * n + j] = m[i][n + j].checked_mul(&d)?;
            }
        }
        Ok(inv)
    }

    pub fn with_ring(&self, ring: &Ring) -> Result<LinearEndo> {
        let entries = self
            .entries
            .iter()
            .map(|c| c.with_ring(ring))
            .collect::<std::result::Result<_, _>>()?;
        Ok(LinearEndo { n: self.n, entries })
    }

    /// True when every entry is rational.
    pub fn is_rational(&self) -> bool {
        self.entries.iter().all(ScalarValue::is_constant)
    }

    pub fn entries(&self) -> &[ScalarValue] {
        &self.entries
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::parse_scalar;

    fn m(rows: &[&[&str]], ring: &Ring) -> LinearEndo {
        LinearEndo::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|s| parse_scalar(s, ring).unwrap()).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn inverse_of_symbolic_triangular() {
        let ring = Ring::new(["a", "b"]).unwrap();
        let l = m(&[&["1", "a", "0"], &["0", "b", "1"], &["a", "0", "2"]], &ring);
        let inv = l.inverse("L").unwrap();
        assert!(l.compose(&inv).unwrap().is_identity());
        assert!(inv.compose(&l).unwrap().is_identity());
        assert_eq!(l.determinant().unwrap(), parse_scalar("2*b+a^2", &ring).unwrap());
    }

    #[test]
    fn pivoting_and_singular() {
        let r = Ring::empty();
        let swap = m(&[&["0", "1"], &["1", "0"]], &r);
        assert_eq!(swap.inverse("s").unwrap(), swap);
        assert_eq!(swap.determinant().unwrap(), ScalarValue::from_int(-1));
        let sing = m(&[&["1", "2"], &["2", "4"]], &r);
        assert!(matches!(sing.inverse("beta"), Err(AlgebraError::NotInvertible { map }) if map == "beta"));
        assert!(sing.determinant().unwrap().is_zero());
    }

    #[test]
    fn column_convention() {
        let r = Ring::empty();
        let l = m(&[&["0", "0"], &["1", "0"]], &r);
        assert_eq!(l.apply(&Element::basis(2, 0)).unwrap(), Element::basis(2, 1));
        assert!(l.apply(&Element::basis(2, 1)).unwrap().is_zero());
    }
}
