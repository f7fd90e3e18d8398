mod common;

use bihom_core::algebra::{twist, Algebra, LinearEndo, Preconditions};
use bihom_core::catalog::*;
use bihom_core::scalar::{Rational, Ring};
use common::q;
use proptest::prelude::*;

/// Integer vectors and brackets, independent of the library.
type V = Vec<i64>;

fn bracket(table: &[(usize, usize, usize, i64)], n: usize, x: &V, y: &V) -> V {
    let mut out = vec![0; n];
    for &(i, j, k, c) in table {
        out[k] += c * (x[i] * y[j] - x[j] * y[i]);
    }
    out
}

fn apply(cols: &[V], x: &V) -> V {
    let n = x.len();
    let mut out = vec![0; n];
    for (j, col) in cols.iter().enumerate() {
        for i in 0..n {
            out[i] += col[i] * x[j];
        }
    }
    out
}

fn unit(n: usize, k: usize) -> V {
    let mut v = vec![0; n];
    v[k] = 1;
    v
}

/// `[e_i, e_j] = c e_k` for `i < j`.
const SAGLE4: [(usize, usize, usize, i64); 4] = [(0, 1, 1, -1), (0, 2, 2, -1), (0, 3, 3, 1), (1, 2, 3, 2)];
const SAGLE5: [(usize, usize, usize, i64); 2] = [(0, 3, 1, 1), (1, 4, 2, 1)];

fn sagle4_maps(d: [i64; 5]) -> (Vec<V>, Vec<V>) {
    let [d1, d2, d3, d4, d5] = d;
    let alpha = vec![vec![1, 0, d1 * d2, d1 * d2 * d2], vec![0, 1, d1, d1 * d2], unit(4, 2), unit(4, 3)];
    let beta = vec![vec![-1, d2, d3, d4], vec![0, 0, 0, d5], vec![0; 4], vec![0; 4]];
    (alpha, beta)
}

fn sagle5_alpha(a: &V, b: &V, c: &V) -> Vec<V> {
    let det = a[0] * b[3] - a[3] * b[0];
    vec![
        a.clone(),
        vec![0, det, a[1] * b[4] - a[4] * b[1], 0, 0],
        vec![0, 0, det * c[4], 0, 0],
        b.clone(),
        c.clone(),
    ]
}

/// The printed parameter constraints.
fn sagle5_constraints_hold(a: &V, b: &V, c: &V) -> bool {
    let m = a[3] * b[0] - a[0] * b[3];
    a[4] * m == 0
        && b[4] * m == 0
        && a[0] * c[3] == a[3] * c[0]
        && a[1] * c[4] == a[4] * c[1]
        && b[0] * c[3] == b[3] * c[0]
        && b[1] * c[4] == b[4] * c[1]
}

fn is_bracket_morphism(table: &[(usize, usize, usize, i64)], cols: &[V]) -> bool {
    let n = cols.len();
    (0..n).all(|i| {
        (0..n).all(|j| {
            let (x, y) = (unit(n, i), unit(n, j));
            apply(cols, &bracket(table, n, &x, &y)) == bracket(table, n, &apply(cols, &x), &apply(cols, &y))
        })
    })
}

fn ints(pairs: &[(String, i64)]) -> Vec<(String, Rational)> {
    pairs.iter().map(|(k, v)| (k.clone(), q(*v, 1))).collect()
}

fn sagle5_assignment(a: &V, b: &V, c: &V) -> Vec<(String, Rational)> {
    let mut out = Vec::new();
    for (stem, vals) in [("a", a), ("b", b), ("c", c)] {
        for (k, v) in vals.iter().enumerate() {
            out.push((format!("{stem}{}", k + 1), *v));
        }
    }
    ints(&out)
}

/// Library twisted table evaluated at an integer point.
fn table_at(t: &Algebra, ring: &Ring, point: &[i64]) -> Vec<Vec<V>> {
    let subs: Vec<(usize, Rational)> = point.iter().enumerate().map(|(k, v)| (k, q(*v, 1))).collect();
    let n = t.dim();
    assert_eq!(ring.vars().len(), point.len());
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    t.basis_product(i, j)
                        .coords()
                        .iter()
                        .map(|c| {
                            let r = c.substitute(&subs).unwrap().as_rational().unwrap();
                            assert!(r.is_integer());
                            r.to_integer().try_into().unwrap()
                        })
                        .collect()
                })
                .collect()
        })
        .collect()
}

fn oracle_twist_table(table: &[(usize, usize, usize, i64)], alpha: &[V], beta: &[V]) -> Vec<Vec<V>> {
    let n = alpha.len();
    (0..n)
        .map(|i| (0..n).map(|j| bracket(table, n, &alpha[i], &beta[j])).collect())
        .collect()
}

#[test]
fn keys_are_listed_and_load() {
    let listed: Vec<&str> = keys().iter().map(|(k, _)| *k).collect();
    assert_eq!(
        listed,
        ["albert5", "albert5_c1", "octonions", "octaut_alpha", "sagle4", "sagle4_ones", "sagle5", "sagle5_c1", "sagle5_c2"]
    );
    for (k, desc) in keys() {
        let e = get_entry(k).unwrap();
        assert_eq!(&e.key, k);
        assert!(!desc.is_empty());
        assert!(!e.provenance.is_empty());
    }
    let err = get_entry("quaternions").unwrap_err();
    assert!(matches!(err, CatalogError::UnknownKey(ref k) if k == "quaternions"));
    assert_eq!(err.to_string(), "unknown catalog key `quaternions`");
}

#[test]
fn instantiation_errors() {
    let albert = get_entry("albert5").unwrap();
    let at = |delta: i64| int_values(&[("gamma", 1), ("delta", delta), ("epsilon", 3), ("b", 2)]);
    assert!(instantiate(&albert, &at(2)).is_ok());
    for delta in [0, 1] {
        assert!(matches!(instantiate(&albert, &at(delta)), Err(CatalogError::InequationViolated(_))));
    }
    assert!(matches!(
        instantiate(&albert, &int_values(&[("gamma", 1), ("delta", 2), ("epsilon", 0)])),
        Err(CatalogError::MissingParameter(ref p)) if p == "b"
    ));
    let mut extra = at(2);
    extra.push(("zeta".into(), q(1, 1)));
    assert!(matches!(instantiate(&albert, &extra), Err(CatalogError::UnknownParameter(ref p)) if p == "zeta"));
}

#[test]
fn concrete_entries_have_no_parameters() {
    for key in ["albert5_c1", "octonions", "octaut_alpha", "sagle4_ones", "sagle5_c1", "sagle5_c2"] {
        let e = get_entry(key).unwrap();
        assert!(e.parameters.vars().is_empty(), "{key}");
        assert!(e.algebra.is_rational(), "{key}");
    }
    let c1 = get_entry("albert5_c1").unwrap();
    let (_, beta) = c1.maps.unwrap();
    assert_eq!(beta.entry(3, 3).as_rational(), Some(q(1, 1)));
}

#[test]
fn shipped_sagle5_points_satisfy_the_printed_constraints() {
    let points: [(V, V, V); 2] = [
        (unit(5, 0), unit(5, 3), unit(5, 4)),
        (vec![2, 0, 3, 1, 0], vec![1, 0, -1, 1, 0], vec![0, 4, 1, 0, 3]),
    ];
    for (key, (a, b, c)) in ["sagle5_c1", "sagle5_c2"].iter().zip(points) {
        assert!(sagle5_constraints_hold(&a, &b, &c), "{key}");
        let alpha = sagle5_alpha(&a, &b, &c);
        assert!(is_bracket_morphism(&SAGLE5, &alpha), "{key}");
        let e = get_entry(key).unwrap();
        let (lib_alpha, lib_beta) = e.maps.unwrap();
        assert!(lib_beta.is_identity());
        for (j, col) in alpha.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                assert_eq!(lib_alpha.entry(i, j).as_rational(), Some(q(*v, 1)), "{key} ({i}, {j})");
            }
        }
    }
}

#[test]
fn sagle4_first_row_entry_is_d5_e4() {
    let e = get_entry("sagle4").unwrap();
    let (a, b) = e.maps_or_identity();
    let t = twist(&e.algebra, &a, &b, Preconditions::Verify).unwrap();
    assert_eq!(t.algebra().basis_product(0, 1).display(t.basis()).to_string(), "d5*e4");
    assert_eq!(t.algebra().basis_product(3, 0).display(t.basis()).to_string(), "e4");
    assert_eq!(t.algebra().basis_product(2, 0).display(t.basis()).to_string(), "-e3 - 2*d2*e4");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn sagle4_twisted_table_matches_oracle(d in prop::array::uniform5(-4i64..=4)) {
        let e = get_entry("sagle4").unwrap();
        let (a, b) = e.maps_or_identity();
        let t = twist(&e.algebra, &a, &b, Preconditions::Verify).unwrap();
        let (alpha, beta) = sagle4_maps(d);
        prop_assert!(is_bracket_morphism(&SAGLE4, &alpha));
        prop_assert!(is_bracket_morphism(&SAGLE4, &beta));
        prop_assert_eq!(apply(&alpha, &apply(&beta, &unit(4, 0))), apply(&beta, &apply(&alpha, &unit(4, 0))));
        prop_assert_eq!(table_at(t.algebra(), &e.parameters, &d), oracle_twist_table(&SAGLE4, &alpha, &beta));
    }

    #[test]
    fn sagle5_instantiation_follows_the_constraints(
        a in prop::collection::vec(-1i64..=1, 5),
        b in prop::collection::vec(-1i64..=1, 5),
        c in prop::collection::vec(-1i64..=1, 5),
    ) {
        let entry = get_entry("sagle5").unwrap();
        let result = instantiate(&entry, &sagle5_assignment(&a, &b, &c));
        let ok = sagle5_constraints_hold(&a, &b, &c);
        prop_assert_eq!(result.is_ok(), ok);
        if ok {
            let alpha = sagle5_alpha(&a, &b, &c);
            prop_assert!(is_bracket_morphism(&SAGLE5, &alpha));
            let inst = result.unwrap();
            let (la, lb) = inst.maps_or_identity();
            let t = twist(&inst.algebra, &la, &lb, Preconditions::Verify).unwrap();
            let ident: Vec<V> = (0..5).map(|k| unit(5, k)).collect();
            prop_assert_eq!(table_at(t.algebra(), &Ring::empty(), &[]), oracle_twist_table(&SAGLE5, &alpha, &ident));
        } else {
            prop_assert!(matches!(result, Err(CatalogError::ConstraintViolated(_))));
        }
    }
}

#[test]
fn maps_or_identity_fills_in_identities() {
    let e = get_entry("octonions").unwrap();
    assert!(e.maps.is_none());
    let (a, b) = e.maps_or_identity();
    assert_eq!(a, LinearEndo::identity(8));
    assert_eq!(b, LinearEndo::identity(8));
    assert_eq!(get_entry("octaut_alpha").unwrap().maps.unwrap().0, octonion_automorphism());
}
