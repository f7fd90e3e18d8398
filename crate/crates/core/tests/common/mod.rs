#![allow(dead_code)]

use bihom_core::algebra::{Algebra, BiHomAlgebra, Element, LinearEndo};
use bihom_core::catalog::{get_entry, octonion_automorphism};
use bihom_core::algebra::{twist, Preconditions};
use bihom_core::scalar::{Rational, Ring, ScalarValue};
use proptest::prelude::*;

/// Octonion multiplication table as printed, row `e_i`, column `e_j`.
pub const OCTONION_ROWS: [&str; 8] = [
    "e0 e1 e2 e3 e4 e5 e6 e7",
    "e1 -e0 e4 e7 -e2 e6 -e5 -e3",
    "e2 -e4 -e0 e5 e1 -e3 e7 -e6",
    "e3 -e7 -e5 -e0 e6 e2 -e4 e1",
    "e4 e2 -e1 -e6 -e0 e7 e3 -e5",
    "e5 -e6 e3 -e2 -e7 -e0 e1 e4",
    "e6 e5 -e7 e4 -e3 -e1 -e0 e2",
    "e7 e3 e6 -e1 e5 -e4 -e2 -e0",
];

/// Twisted table `μ(α x, y)` for the basic-triple automorphism, as printed.
pub const TWISTED_ROWS: [&str; 8] = [
    "e0 e1 e2 e3 e4 e5 e6 e7",
    "e5 -e6 e3 -e2 -e7 -e0 e1 e4",
    "e6 e5 -e7 e4 -e3 -e1 -e0 e2",
    "e7 e3 e6 -e1 e5 -e4 -e2 -e0",
    "e1 -e0 e4 e7 -e2 e6 -e5 -e3",
    "e2 -e4 -e0 e5 e1 -e3 e7 -e6",
    "e3 -e7 -e5 -e0 e6 e2 -e4 e1",
    "e4 e2 -e1 -e6 -e0 e7 e3 -e5",
];

/// `(sign, index)` cells of a printed table.
pub fn table_cells(rows: &[&str; 8]) -> Vec<Vec<(i64, usize)>> {
    rows.iter()
        .map(|r| {
            r.split_whitespace()
                .map(|cell| {
                    let (sign, rest) = match cell.strip_prefix('-') {
                        Some(rest) => (-1, rest),
                        None => (1, cell),
                    };
                    (sign, rest.trim_start_matches('e').parse().unwrap())
                })
                .collect()
        })
        .collect()
}

pub fn signed_basis(n: usize, (sign, idx): (i64, usize)) -> Element {
    Element::basis(n, idx).scale_rational(&Rational::from_integer(sign.into()))
}

/// Product computed straight from the printed octonion table.
pub fn oracle_octonion_mul(x: &[i64; 8], y: &[i64; 8]) -> [i64; 8] {
    let cells = table_cells(&OCTONION_ROWS);
    let mut out = [0i64; 8];
    for i in 0..8 {
        for j in 0..8 {
            let (s, k) = cells[i][j];
            out[k] += s * x[i] * y[j];
        }
    }
    out
}

pub fn as_ints(x: &Element) -> Vec<i64> {
    x.coords()
        .iter()
        .map(|c| {
            let r = c.as_rational().expect("rational");
            assert!(r.is_integer());
            r.to_integer().try_into().unwrap()
        })
        .collect()
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn octonions() -> Algebra {
    get_entry("octonions").unwrap().algebra
}

/// `O_{α,id}` with the basic-triple automorphism.
pub fn octonion_twist() -> BiHomAlgebra {
    twist(&octonions(), &octonion_automorphism(), &LinearEndo::identity(8), Preconditions::Verify).unwrap()
}

pub fn albert_twist() -> BiHomAlgebra {
    let e = get_entry("albert5").unwrap();
    let (a, b) = e.maps_or_identity();
    twist(&e.algebra, &a, &b, Preconditions::Verify).unwrap()
}

pub fn dual_numbers() -> Algebra {
    let mut a = Algebra::new(vec!["1".into(), "t".into()], Ring::empty()).unwrap();
    a.set_product(0, 0, &Element::basis(2, 0)).unwrap();
    a.set_product(0, 1, &Element::basis(2, 1)).unwrap();
    a.set_product(1, 0, &Element::basis(2, 1)).unwrap();
    a
}

pub fn diag(entries: &[Rational]) -> LinearEndo {
    let n = entries.len();
    LinearEndo::from_rows(
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { ScalarValue::from_rational(entries[i].clone()) } else { ScalarValue::zero() })
                    .collect()
            })
            .collect(),
    )
    .unwrap()
}

pub fn xy_ring() -> Ring {
    Ring::new(["x", "y"]).unwrap()
}

/// Sparse polynomial in `x, y` with small integer coefficients.
pub fn poly_terms() -> impl Strategy<Value = Vec<(i64, u32, u32)>> {
    prop::collection::vec((-4i64..=4, 0u32..3, 0u32..3), 0..4)
}

pub fn build_poly(ring: &Ring, terms: &[(i64, u32, u32)]) -> ScalarValue {
    let x = ScalarValue::var(ring, 0);
    let y = ScalarValue::var(ring, 1);
    let mut acc = ScalarValue::zero().with_ring(ring).unwrap();
    for (c, a, b) in terms {
        let t = &(&ScalarValue::from_int(*c) * &x.pow(*a)) * &y.pow(*b);
        acc = &acc + &t;
    }
    acc
}

/// Rational functions `p/q` in `x, y`, with `q` nonzero and of degree at
/// most one in each variable.
pub fn scalar() -> impl Strategy<Value = (Vec<(i64, u32, u32)>, Vec<(i64, u32, u32)>)> {
    let den = prop::collection::vec((-3i64..=3, 0u32..2, 0u32..2), 1..3)
        .prop_filter("nonzero denominator", |t| !build_poly(&xy_ring(), t).is_zero());
    (poly_terms(), den)
}

pub fn build_scalar(ring: &Ring, (num, den): &(Vec<(i64, u32, u32)>, Vec<(i64, u32, u32)>)) -> ScalarValue {
    build_poly(ring, num).checked_div(&build_poly(ring, den)).unwrap()
}

/// Plain rational evaluation of a term list at `(x, y)`.
pub fn eval_terms(terms: &[(i64, u32, u32)], x: &Rational, y: &Rational) -> Rational {
    let mut acc = Rational::from_integer(0.into());
    for (c, a, b) in terms {
        acc += Rational::from_integer((*c).into()) * num_traits::pow(x.clone(), *a as usize) * num_traits::pow(y.clone(), *b as usize);
    }
    acc
}
