//! Built-in example algebras.
//!
//! Parameterized entries carry their parameters as ring variables; concrete
//! entries are rational instantiations of them.

use thiserror::Error;

use crate::algebra::{Algebra, AlgebraError, Element, LinearEndo};
use crate::scalar::{parse_scalar, Rational, Ring, ScalarError, ScalarValue};

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("unknown catalog key `{0}`")]
    UnknownKey(String),
    #[error("no value given for parameter `{0}`")]
    MissingParameter(String),
    #[error("`{0}` is not a parameter of this entry")]
    UnknownParameter(String),
    #[error("constraint {0} = 0 is violated")]
    ConstraintViolated(String),
    #[error("inequation {0} != 0 is violated")]
    InequationViolated(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// A catalog algebra, optionally with structure maps.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub key: String,
    pub algebra: Algebra,
    /// `(alpha, beta)`; `None` means both are the identity.
    pub maps: Option<(LinearEndo, LinearEndo)>,
    pub parameters: Ring,
    /// Polynomials required to vanish.
    pub constraints: Vec<ScalarValue>,
    /// Polynomials required to be nonzero.
    pub inequations: Vec<ScalarValue>,
    pub provenance: String,
}

impl CatalogEntry {
    /// `(alpha, beta)`, with identity maps filled in.
    pub fn maps_or_identity(&self) -> (LinearEndo, LinearEndo) {
        self.maps.clone().unwrap_or_else(|| {
            let id = LinearEndo::identity(self.algebra.dim());
            (id.clone(), id)
        })
    }
}

const KEYS: &[(&str, &str)] = &[
    ("albert5", "five-dimensional right alternative algebra that is not left alternative, with maps alpha(gamma, delta, epsilon) and beta(b)"),
    ("albert5_c1", "albert5 at (gamma, delta, epsilon, b) = (1, 2, 0, 1)"),
    ("octonions", "the octonions, basis e0..e7"),
    ("octaut_alpha", "the octonions with the basic-triple automorphism alpha and beta = id"),
    ("sagle4", "four-dimensional non-Lie Malcev algebra with bracket morphisms alpha(d1, d2) and beta(d2..d5)"),
    ("sagle4_ones", "sagle4 with d1 = ... = d5 = 1"),
    ("sagle5", "five-dimensional non-Lie Malcev algebra with a constrained morphism alpha(a, b, c) and beta = id"),
    ("sagle5_c1", "sagle5 with a = e1, b = e4, c = e5 (alpha = id)"),
    ("sagle5_c2", "sagle5 with a = (2,0,3,1,0), b = (1,0,-1,1,0), c = (0,4,1,0,3)"),
];

/// Keys with one-line descriptions, in listing order.
pub fn keys() -> &'static [(&'static str, &'static str)] {
    KEYS
}

pub fn get_entry(key: &str) -> Result<CatalogEntry, CatalogError> {
    let entry = match key {
        "albert5" => albert5(),
        "albert5_c1" => instantiate(&albert5(), &int_values(&[("gamma", 1), ("delta", 2), ("epsilon", 0), ("b", 1)]))?,
        "octonions" => octonions(),
        "octaut_alpha" => octaut_alpha(),
        "sagle4" => sagle4(),
        "sagle4_ones" => instantiate(&sagle4(), &int_values(&[("d1", 1), ("d2", 1), ("d3", 1), ("d4", 1), ("d5", 1)]))?,
        "sagle5" => sagle5(),
        "sagle5_c1" => instantiate(&sagle5(), &sagle5_values([1, 0, 0, 0, 0], [0, 0, 0, 1, 0], [0, 0, 0, 0, 1]))?,
        "sagle5_c2" => instantiate(&sagle5(), &sagle5_values([2, 0, 3, 1, 0], [1, 0, -1, 1, 0], [0, 4, 1, 0, 3]))?,
        _ => return Err(CatalogError::UnknownKey(key.to_string())),
    };
    Ok(CatalogEntry {
        key: key.to_string(),
        ..entry
    })
}

/// Integer parameter assignment.
pub fn int_values(pairs: &[(&str, i64)]) -> Vec<(String, Rational)> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), Rational::from_integer((*v).into())))
        .collect()
}

fn sagle5_values(a: [i64; 5], b: [i64; 5], c: [i64; 5]) -> Vec<(String, Rational)> {
    let mut out = Vec::new();
    for (stem, vals) in [("a", a), ("b", b), ("c", c)] {
        for (k, v) in vals.iter().enumerate() {
            out.push((format!("{stem}{}", k + 1), Rational::from_integer((*v).into())));
        }
    }
    out
}

/// Substitutes rational values for every parameter after checking the
/// constraints and inequations.
pub fn instantiate(entry: &CatalogEntry, values: &[(String, Rational)]) -> Result<CatalogEntry, CatalogError> {
    let params = &entry.parameters;
    let mut assignment: Vec<(usize, Rational)> = Vec::new();
    for (name, v) in values {
        let idx = params
            .index_of(name)
            .ok_or_else(|| CatalogError::UnknownParameter(name.clone()))?;
        assignment.push((idx, v.clone()));
    }
    for (i, name) in params.vars().iter().enumerate() {
        if !assignment.iter().any(|(j, _)| *j == i) {
            return Err(CatalogError::MissingParameter(name.clone()));
        }
    }
    let empty = Ring::empty();
    let subst = |c: &ScalarValue| -> Result<ScalarValue, CatalogError> {
        Ok(c.substitute(&assignment)?.with_ring(&empty)?)
    };
    for c in &entry.constraints {
        if !subst(c)?.is_zero() {
            return Err(CatalogError::ConstraintViolated(c.to_string()));
        }
    }
    for c in &entry.inequations {
        if subst(c)?.is_zero() {
            return Err(CatalogError::InequationViolated(c.to_string()));
        }
    }
    let n = entry.algebra.dim();
    let algebra = Algebra::from_fn(entry.algebra.basis().to_vec(), empty.clone(), |i, j| {
        entry
            .algebra
            .basis_product(i, j)
            .try_map(|c| subst(c).map_err(|e| AlgebraError::InvalidBasis(e.to_string())))
    })?;
    let map = |m: &LinearEndo| -> Result<LinearEndo, CatalogError> {
        let cols = (0..n).map(|j| m.column(j).try_map(subst)).collect::<Result<Vec<_>, _>>()?;
        Ok(LinearEndo::from_columns(&cols)?)
    };
    let maps = match &entry.maps {
        Some((a, b)) => Some((map(a)?, map(b)?)),
        None => None,
    };
    Ok(CatalogEntry {
        key: entry.key.clone(),
        algebra,
        maps,
        parameters: empty,
        constraints: Vec::new(),
        inequations: Vec::new(),
        provenance: entry.provenance.clone(),
    })
}

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

fn parse(text: &str, ring: &Ring) -> ScalarValue {
    parse_scalar(text, ring).expect("catalog coefficient parses")
}

/// Element from `(basis index, coefficient text)` pairs.
fn elem(n: usize, ring: &Ring, terms: &[(usize, &str)]) -> Element {
    Element::from_terms(n, terms.iter().map(|&(k, c)| (k, parse(c, ring))))
}

fn describe(key: &str) -> String {
    KEYS.iter()
        .find(|(k, _)| *k == key)
        .map(|(_, d)| d.to_string())
        .unwrap_or_default()
}

fn albert5() -> CatalogEntry {
    let ring = Ring::new(["gamma", "delta", "epsilon", "b"]).expect("valid names");
    let n = 5;
    let (e, u, v, w, z) = (0, 1, 2, 3, 4);
    let mut a = Algebra::new(labels(&["e", "u", "v", "w", "z"]), ring.clone()).expect("valid basis");
    let mut set = |i, j, terms: &[(usize, &str)]| a.set_product(i, j, &elem(n, &ring, terms)).expect("in range");
    set(e, e, &[(e, "1")]);
    set(e, u, &[(v, "1")]);
    set(u, e, &[(u, "1")]);
    set(e, w, &[(w, "1"), (z, "-1")]);
    set(e, z, &[(z, "1")]);
    set(z, e, &[(z, "1")]);
    let alpha = LinearEndo::from_columns(&[
        elem(n, &ring, &[(e, "1"), (u, "epsilon"), (v, "epsilon")]),
        elem(n, &ring, &[(u, "delta")]),
        elem(n, &ring, &[(v, "delta")]),
        elem(n, &ring, &[(w, "gamma")]),
        elem(n, &ring, &[(z, "gamma")]),
    ])
    .expect("square");
    let beta = LinearEndo::from_columns(&[
        elem(n, &ring, &[(e, "1")]),
        elem(n, &ring, &[(u, "1")]),
        elem(n, &ring, &[(v, "1")]),
        elem(n, &ring, &[(w, "b")]),
        elem(n, &ring, &[(z, "b")]),
    ])
    .expect("square");
    CatalogEntry {
        key: "albert5".into(),
        algebra: a,
        maps: Some((alpha, beta)),
        inequations: vec![parse("delta", &ring), parse("delta-1", &ring)],
        parameters: ring,
        constraints: Vec::new(),
        provenance: describe("albert5"),
    }
}

/// Octonion table: row `i` lists `(sign, index)` of `e_i e_j` for each `j`.
const OCTONION_TABLE: [[(i8, usize); 8]; 8] = [
    [(1, 0), (1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7)],
    [(1, 1), (-1, 0), (1, 4), (1, 7), (-1, 2), (1, 6), (-1, 5), (-1, 3)],
    [(1, 2), (-1, 4), (-1, 0), (1, 5), (1, 1), (-1, 3), (1, 7), (-1, 6)],
    [(1, 3), (-1, 7), (-1, 5), (-1, 0), (1, 6), (1, 2), (-1, 4), (1, 1)],
    [(1, 4), (1, 2), (-1, 1), (-1, 6), (-1, 0), (1, 7), (1, 3), (-1, 5)],
    [(1, 5), (-1, 6), (1, 3), (-1, 2), (-1, 7), (-1, 0), (1, 1), (1, 4)],
    [(1, 6), (1, 5), (-1, 7), (1, 4), (-1, 3), (-1, 1), (-1, 0), (1, 2)],
    [(1, 7), (1, 3), (1, 6), (-1, 1), (1, 5), (-1, 4), (-1, 2), (-1, 0)],
];

/// Images of the basic-triple automorphism: `e_j ↦ e_{OCTAUT[j]}`.
const OCTAUT: [usize; 8] = [0, 5, 6, 7, 1, 2, 3, 4];

fn octonion_algebra() -> Algebra {
    let basis = (0..8).map(|i| format!("e{i}")).collect();
    Algebra::from_fn(basis, Ring::empty(), |i, j| {
        let (s, k) = OCTONION_TABLE[i][j];
        Ok(Element::from_terms(8, [(k, ScalarValue::from_int(s as i64))]))
    })
    .expect("valid table")
}

fn octonions() -> CatalogEntry {
    CatalogEntry {
        key: "octonions".into(),
        algebra: octonion_algebra(),
        maps: None,
        parameters: Ring::empty(),
        constraints: Vec::new(),
        inequations: Vec::new(),
        provenance: describe("octonions"),
    }
}

/// The basic-triple automorphism of the octonions.
pub fn octonion_automorphism() -> LinearEndo {
    let cols: Vec<Element> = OCTAUT.iter().map(|&k| Element::basis(8, k)).collect();
    LinearEndo::from_columns(&cols).expect("square")
}

fn octaut_alpha() -> CatalogEntry {
    CatalogEntry {
        key: "octaut_alpha".into(),
        maps: Some((octonion_automorphism(), LinearEndo::identity(8))),
        provenance: describe("octaut_alpha"),
        ..octonions()
    }
}

fn sagle4() -> CatalogEntry {
    let ring = Ring::new(["d1", "d2", "d3", "d4", "d5"]).expect("valid names");
    let n = 4;
    let mut a = Algebra::new(labels(&["e1", "e2", "e3", "e4"]), ring.clone()).expect("valid basis");
    let brackets: [(usize, usize, &[(usize, &str)]); 4] = [
        (0, 1, &[(1, "-1")]),
        (0, 2, &[(2, "-1")]),
        (0, 3, &[(3, "1")]),
        (1, 2, &[(3, "2")]),
    ];
    for (i, j, terms) in brackets {
        let x = elem(n, &ring, terms);
        a.set_product(i, j, &x).expect("in range");
        a.set_product(j, i, &-&x).expect("in range");
    }
    let alpha = LinearEndo::from_columns(&[
        elem(n, &ring, &[(0, "1"), (2, "d1*d2"), (3, "d1*d2^2")]),
        elem(n, &ring, &[(1, "1"), (2, "d1"), (3, "d1*d2")]),
        elem(n, &ring, &[(2, "1")]),
        elem(n, &ring, &[(3, "1")]),
    ])
    .expect("square");
    let beta = LinearEndo::from_columns(&[
        elem(n, &ring, &[(0, "-1"), (1, "d2"), (2, "d3"), (3, "d4")]),
        elem(n, &ring, &[(3, "d5")]),
        Element::zero(n),
        Element::zero(n),
    ])
    .expect("square");
    CatalogEntry {
        key: "sagle4".into(),
        algebra: a,
        maps: Some((alpha, beta)),
        parameters: ring,
        constraints: Vec::new(),
        inequations: Vec::new(),
        provenance: describe("sagle4"),
    }
}

fn sagle5() -> CatalogEntry {
    let names: Vec<String> = ["a", "b", "c"]
        .iter()
        .flat_map(|s| (1..=5).map(move |k| format!("{s}{k}")))
        .collect();
    let ring = Ring::new(names).expect("valid names");
    let n = 5;
    let mut a = Algebra::new(labels(&["e1", "e2", "e3", "e4", "e5"]), ring.clone()).expect("valid basis");
    for (i, j, k) in [(0, 3, 1), (1, 4, 2)] {
        a.set_product(i, j, &Element::basis(n, k)).expect("in range");
        a.set_product(j, i, &-&Element::basis(n, k)).expect("in range");
    }
    let full = |stem: &str| -> Element {
        let terms: Vec<(usize, String)> = (0..5).map(|k| (k, format!("{stem}{}", k + 1))).collect();
        Element::from_terms(n, terms.iter().map(|(k, c)| (*k, parse(c, &ring))))
    };
    let alpha = LinearEndo::from_columns(&[
        full("a"),
        elem(n, &ring, &[(1, "a1*b4-a4*b1"), (2, "a2*b5-a5*b2")]),
        elem(n, &ring, &[(2, "(a1*b4-a4*b1)*c5")]),
        full("b"),
        full("c"),
    ])
    .expect("square");
    let constraints = [
        "a5*(a4*b1-a1*b4)",
        "b5*(a4*b1-a1*b4)",
        "a1*c4-a4*c1",
        "a2*c5-a5*c2",
        "b1*c4-b4*c1",
        "b2*c5-b5*c2",
    ]
    .iter()
    .map(|c| parse(c, &ring))
    .collect();
    CatalogEntry {
        key: "sagle5".into(),
        algebra: a,
        maps: Some((alpha, LinearEndo::identity(n))),
        parameters: ring,
        constraints,
        inequations: Vec::new(),
        provenance: describe("sagle5"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spot_products() {
        let o = get_entry("octonions").unwrap().algebra;
        assert_eq!(o.basis_product(3, 5), Element::basis(8, 2));
        assert_eq!(o.basis_product(1, 2), Element::basis(8, 4));
        let a = get_entry("albert5").unwrap().algebra;
        assert_eq!(
            a.basis_product(0, 3),
            Element::from_coords(vec![0.into(), 0.into(), 0.into(), 1.into(), (-1).into()])
        );
        let s = get_entry("sagle4").unwrap().algebra;
        assert_eq!(s.basis_product(1, 2), Element::basis(4, 3).scale(&2.into()));
    }

    #[test]
    fn all_keys_load() {
        for (k, _) in keys() {
            let e = get_entry(k).unwrap();
            assert_eq!(&e.key, k);
        }
        assert!(matches!(get_entry("nope"), Err(CatalogError::UnknownKey(_))));
    }

    #[test]
    fn instantiation_checks_conditions() {
        let albert = get_entry("albert5").unwrap();
        let bad = instantiate(&albert, &int_values(&[("gamma", 1), ("delta", 1), ("epsilon", 0), ("b", 1)]));
        assert!(matches!(bad, Err(CatalogError::InequationViolated(_))));
        let missing = instantiate(&albert, &int_values(&[("gamma", 1)]));
        assert!(matches!(missing, Err(CatalogError::MissingParameter(_))));
        let sagle5 = get_entry("sagle5").unwrap();
        let vals = sagle5_values([1, 0, 0, 0, 1], [0, 0, 0, 1, 0], [0, 0, 0, 0, 1]);
        assert!(matches!(instantiate(&sagle5, &vals), Err(CatalogError::ConstraintViolated(_))));
    }
}
