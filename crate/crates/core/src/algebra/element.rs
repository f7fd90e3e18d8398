use std::fmt;

use crate::scalar::{Rational, Ring, ScalarValue};

/// Vector of coordinates over an algebra's basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Element {
    coords: Vec<ScalarValue>,
}

impl Element {
    pub fn zero(dim: usize) -> Element {
        Element {
            coords: vec![ScalarValue::zero(); dim],
        }
    }

    /// The `index`-th basis vector of a `dim`-dimensional space.
    pub fn basis(dim: usize, index: usize) -> Element {
        let mut e = Element::zero(dim);
        e.coords[index] = ScalarValue::one();
        e
    }

    pub fn from_coords(coords: Vec<ScalarValue>) -> Element {
        Element { coords }
    }

    /// Sparse constructor from `(basis index, coefficient)` pairs.
    pub fn from_terms(dim: usize, terms: impl IntoIterator<Item = (usize, ScalarValue)>) -> Element {
        let mut e = Element::zero(dim);
        for (k, c) in terms {
            e.coords[k] = &e.coords[k] + &c;
        }
        e
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[ScalarValue] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &ScalarValue {
        &self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(ScalarValue::is_zero)
    }

    /// Nonzero coordinates with their indices.
    pub fn support(&self) -> impl Iterator<Item = (usize, &ScalarValue)> {
        self.coords.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn scale(&self, c: &ScalarValue) -> Element {
        Element {
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }

    pub fn scale_rational(&self, c: &Rational) -> Element {
        Element {
            coords: self.coords.iter().map(|x| x.scale(c)).collect(),
        }
    }

    pub(crate) fn coord_mut(&mut self, i: usize) -> &mut ScalarValue {
        &mut self.coords[i]
    }

    /// True when every coordinate is a rational number.
    pub fn is_constant(&self) -> bool {
        self.coords.iter().all(ScalarValue::is_constant)
    }

    pub fn with_ring(&self, ring: &Ring) -> crate::scalar::Result<Element> {
        let coords = self
            .coords
            .iter()
            .map(|c| c.with_ring(ring))
            .collect::<Result<_, _>>()?;
        Ok(Element { coords })
    }

    /// Maps every coordinate through `f`.
    pub fn try_map<E>(&self, f: impl Fn(&ScalarValue) -> Result<ScalarValue, E>) -> Result<Element, E> {
        Ok(Element {
            coords: self.coords.iter().map(f).collect::<Result<_, _>>()?,
        })
    }

    /// Renders with the given basis labels, e.g. `delta^2*v - 2*e6`.
    pub fn display<'a>(&'a self, labels: &'a [String]) -> ElementDisplay<'a> {
        ElementDisplay {
            element: self,
            labels,
        }
    }
}

impl std::ops::Add<&Element> for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        assert_eq!(self.dim(), rhs.dim(), "element dimension mismatch");
        Element {
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect(),
        }
    }
}

impl std::ops::Sub<&Element> for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        assert_eq!(self.dim(), rhs.dim(), "element dimension mismatch");
        Element {
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect(),
        }
    }
}

impl std::ops::Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element {
            coords: self.coords.iter().map(ScalarValue::neg).collect(),
        }
    }
}

pub struct ElementDisplay<'a> {
    element: &'a Element,
    labels: &'a [String],
}

impl fmt::Display for ElementDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.element.support() {
            let label = &self.labels[i];
            let (negative, magnitude) = split_sign(c);
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            if magnitude.is_one() {
                f.write_str(label)?;
            } else if magnitude.is_compound() {
                write!(f, "({magnitude})*{label}")?;
            } else {
                write!(f, "{magnitude}*{label}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Splits off a leading minus sign when the numerator is a single negative
/// term.
fn split_sign(c: &ScalarValue) -> (bool, ScalarValue) {
    match c.numerator().terms() {
        [(_, k)] if k < &Rational::from_integer(0.into()) => (true, c.neg()),
        _ => (false, c.clone()),
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coords.iter().map(|c| c.to_string())).finish()
    }
}
