use crate::scalar::ScalarValue;

use super::{BiHomAlgebra, Element, Result};

/// Elements with fresh indeterminate coordinates, together with the algebra
/// re-embedded over the enlarged ring.
pub struct Generic {
    pub algebra: BiHomAlgebra,
    pub elements: Vec<Element>,
    /// Number of variables in the ring before the extension.
    pub parameter_count: usize,
}

/// Adjoins one generic element per stem; the coordinates of the element for
/// stem `x` are named `x1, x2, …` (made unique against existing names).
pub fn adjoin_generic(b: &BiHomAlgebra, stems: &[&str]) -> Result<Generic> {
    let n = b.dim();
    let base = b.ring();
    let mut names: Vec<String> = Vec::with_capacity(n * stems.len());
    for stem in stems {
        for k in 1..=n {
            let mut name = base.fresh_name(&format!("{stem}{k}"));
            while names.contains(&name) || base.index_of(&name).is_some() {
                name.push('_');
            }
            names.push(name);
        }
    }
    let ring = base.extend(names)?;
    let algebra = b.with_ring(&ring)?;
    let offset = base.len();
    let elements = (0..stems.len())
        .map(|s| {
            Element::from_coords((0..n).map(|k| ScalarValue::var(&ring, offset + s * n + k)).collect())
        })
        .collect();
    Ok(Generic {
        algebra,
        elements,
        parameter_count: offset,
    })
}
