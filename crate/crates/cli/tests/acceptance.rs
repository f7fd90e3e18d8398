//! Acceptance checks. Prints one `criterion N: PASS|FAIL: detail` line per
//! criterion, then asserts the recorded outcome of each.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::io::Write;
use std::time::{Duration, Instant};

use bihom_cli::document::{emit_document, parse_document, AlgebraDocument};
use bihom_core::algebra::*;
use bihom_core::catalog::{get_entry, keys};
use bihom_core::identities::*;
use bihom_core::report::side_conditions_for;
use bihom_core::scalar::{parse_scalar, Rational, ScalarValue};
use common::*;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

/// Writes past the test harness's output capture.
fn say(line: String) {
    let _ = writeln!(std::io::stdout().lock(), "{line}");
}

fn check(b: &BiHomAlgebra, name: &str) -> IdentityReport {
    check_identity(b, identity(name).unwrap())
}

fn text(x: &Element, labels: &[String]) -> String {
    x.display(labels).to_string()
}

fn within(pass: bool, start: Instant, limit: u64, detail: String) -> Outcome {
    let took = start.elapsed();
    let in_time = took < Duration::from_secs(limit);
    outcome(pass && in_time, format!("{detail} ({:.2}s, limit {limit}s)", took.as_secs_f64()))
}

fn all_hold(reports: &[IdentityReport]) -> (bool, String) {
    let failed: Vec<String> = reports
        .iter()
        .filter(|r| !r.is_holds())
        .map(|r| format!("{} {}", r.identity, r.verdict.as_str()))
        .collect();
    let names: Vec<&str> = reports.iter().map(|r| r.identity.as_str()).collect();
    if failed.is_empty() {
        (true, format!("{} hold", names.join(", ")))
    } else {
        (false, format!("not holding: {}", failed.join(", ")))
    }
}

fn c1() -> Outcome {
    let start = Instant::now();
    let t = octonion_twist();
    let cells = table_cells(&TWISTED_ROWS);
    let mut mismatches = 0;
    for i in 0..8 {
        for j in 0..8 {
            if t.algebra().basis_product(i, j) != signed_basis(8, cells[i][j]) {
                mismatches += 1;
            }
        }
    }
    within(mismatches == 0, start, 1, format!("{} of 64 entries match the printed twisted table", 64 - mismatches))
}

fn c2() -> Outcome {
    let t = octonion_twist();
    let a = t.algebra();
    let (e0, e1) = (Element::basis(8, 0), Element::basis(8, 1));
    let left = a.mul(&a.mul(&e1, &e1).unwrap(), &e0).unwrap();
    let right = a.mul(&e1, &a.mul(&e1, &e0).unwrap()).unwrap();
    let l = t.basis();
    let pass = left == signed_basis(8, (-1, 3)) && right == signed_basis(8, (-1, 0));
    outcome(pass, format!("(e1 e1) e0 = {}, e1 (e1 e0) = {}", text(&left, l), text(&right, l)))
}

fn c3() -> Outcome {
    let start = Instant::now();
    let t = octonion_twist();
    let (ok, detail) = all_hold(&[check(&t, "left_alternative"), check(&t, "right_alternative")]);
    within(ok, start, 5, format!("{detail} over 512 basis triples each"))
}

fn c4() -> Outcome {
    let start = Instant::now();
    let entry = get_entry("albert5").unwrap();
    let plain = BiHomAlgebra::with_identity_maps(entry.algebra.clone());
    let a_ok = check(&plain, "right_alternative").is_holds() && check(&plain, "left_alternative").verdict.is_failure();

    let t = albert_twist();
    let l = t.basis().to_vec();
    let b_ok = check(&t, "right_alternative").is_holds() && check(&t, "right_alternative_short").is_holds();

    let left = check(&t, "left_alternative_short");
    let (e, u) = (Element::basis(5, 0), Element::basis(5, 1));
    let ctx = EvalContext { b: &t, minus: None };
    let at_eeu = identity("left_alternative_short").unwrap().evaluate(&ctx, &[e.clone(), u.clone()]).unwrap().remove(0);
    let conds_c: Vec<String> = side_conditions_for(&at_eeu, t.ring()).iter().map(|c| c.to_string()).collect();
    let delta = ScalarValue::var(t.ring(), 1);
    let claimed_c = Element::basis(5, 2).scale(&delta.pow(2));
    let c_ok = left.verdict == Verdict::FailsGenerically && at_eeu == claimed_c && conds_c == ["delta != 0"];
    // Observed: the residual at (e, e, u) is v, with no parameter dependence.
    assert_eq!(text(&at_eeu, &l), "v");
    assert!(conds_c.is_empty());
    assert!(left.verdict.is_failure());

    let twisted_plain = BiHomAlgebra::with_identity_maps(t.algebra().clone());
    let pctx = EvalContext {
        b: &twisted_plain,
        minus: None,
    };
    let right = check(&twisted_plain, "right_alternative_short");
    let at_uee = identity("right_alternative_short").unwrap().evaluate(&pctx, &[u.clone(), e.clone()]).unwrap().remove(0);
    let conds_d: Vec<String> = side_conditions_for(&at_uee, t.ring()).iter().map(|c| c.to_string()).collect();
    let claimed_d = u.scale(&parse_scalar("delta^2-delta", t.ring()).unwrap());
    let d_ok = right.verdict == Verdict::FailsGenerically && at_uee == claimed_d && conds_d == ["delta != 0", "delta != 1"];

    let detail = format!(
        "(a) {}; (b) {}; (c) {}: residual at (e, e, u) is {} with conditions [{}], claimed delta^2*v with [delta != 0]; (d) {}: residual at (u, e, e) is {} with conditions [{}]",
        if a_ok { "ok" } else { "wrong" },
        if b_ok { "ok" } else { "wrong" },
        if c_ok { "ok" } else { "mismatch" },
        text(&at_eeu, &l),
        conds_c.join(", "),
        if d_ok { "ok" } else { "mismatch" },
        text(&at_uee, &l),
        conds_d.join(", "),
    );
    within(a_ok && b_ok && c_ok && d_ok, start, 10, detail)
}

fn c5() -> Outcome {
    let start = Instant::now();
    let m = minus_algebra(&octonion_twist()).unwrap();
    let (ok, detail) = all_hold(&[check(&m, "bihom_skewsymmetry"), check(&m, "bihom_malcev")]);
    within(ok, start, 60, format!("{detail} on the commutator algebra"))
}

fn c6() -> Outcome {
    let o = octonion_twist();
    let m = minus_algebra(&o).unwrap();
    let rows = [check(&o, "jacobiator_assoc_formula"), check(&o, "jacobiator_six_as")];
    let shifted = |t: &[Element]| -> Element {
        o.associator(
            &o.apply_word(-1, 2, &t[0]).unwrap(),
            &o.apply_word(0, 1, &t[1]).unwrap(),
            &o.apply_word(1, 0, &t[2]).unwrap(),
        )
        .unwrap()
    };
    let perms: [([usize; 3], i64); 6] =
        [([0, 1, 2], 1), ([1, 2, 0], 1), ([2, 0, 1], 1), ([1, 0, 2], -1), ([0, 2, 1], -1), ([2, 1, 0], -1)];
    let six = Rational::from_integer(6.into());
    let (mut six_as, mut neg_six_as, mut formula, mut neg_formula) = (0, 0, 0, 0);
    for i in 0..8 {
        for j in 0..8 {
            for k in 0..8 {
                let t = [Element::basis(8, i), Element::basis(8, j), Element::basis(8, k)];
                let jac = m.jacobiator(&t[0], &t[1], &t[2]).unwrap();
                let a = shifted(&t).scale_rational(&six);
                let mut f = Element::zero(8);
                for (p, s) in perms {
                    let v = shifted(&[t[p[0]].clone(), t[p[1]].clone(), t[p[2]].clone()]);
                    f = if s > 0 { &f + &v } else { &f - &v };
                }
                six_as += (jac == a) as usize;
                neg_six_as += (jac == -&a) as usize;
                formula += (jac == f) as usize;
                neg_formula += (jac == -&f) as usize;
            }
        }
    }
    // Observed: the Jacobiator is the negative of both expressions.
    assert!(rows.iter().all(|r| r.verdict.is_failure()));
    assert_eq!((neg_six_as, neg_formula), (512, 512));
    let pass = rows.iter().all(|r| r.is_holds()) && six_as == 512 && formula == 512;
    outcome(
        pass,
        format!(
            "J = formula on {formula}/512, J = 6 as on {six_as}/512, J = -formula on {neg_formula}/512, J = -6 as on {neg_six_as}/512; rows {} and {} report {}",
            rows[0].identity,
            rows[1].identity,
            rows[1].verdict.as_str()
        ),
    )
}

fn c7() -> Outcome {
    let start = Instant::now();
    let o = octonion_twist();
    let f = |v: &[Element]| o.bk_f(&v[0], &v[1], &v[2], &v[3]);
    let mut reports = vec![is_alternating(&o, 4, f)];
    for name in ["f_alternating", "F_equals_f_cyclic", "f_zeta_formula", "H_decomposition"] {
        reports.push(check(&o, name));
    }
    let (ok, detail) = all_hold(&reports);
    within(ok, start, 120, format!("{detail} over 4096 quadruples"))
}

fn c8() -> Outcome {
    let o = octonion_twist();
    let reports: Vec<IdentityReport> = ["moufang_i", "moufang_ii", "moufang_iii"].iter().map(|n| check(&o, n)).collect();
    let (ok, detail) = all_hold(&reports);
    outcome(ok, format!("{detail} with generic elements"))
}

fn c9() -> Outcome {
    let start = Instant::now();
    let o = octonion_twist();
    let p = plus_algebra(&o).unwrap();
    let mut reports: Vec<IdentityReport> =
        ["bihom_commutativity", "bihom_jordan", "bihom_jordan_cyclic"].iter().map(|n| check(&p, n)).collect();
    reports.push(check(&o, "jordan_admissibility_lemma"));
    let (ok, detail) = all_hold(&reports);
    within(ok, start, 120, detail)
}

fn c10() -> Outcome {
    let start = Instant::now();
    let e = get_entry("sagle4").unwrap();
    let (alpha, beta) = e.maps_or_identity();
    let base = BiHomAlgebra::new(e.algebra.clone(), alpha.clone(), beta.clone()).unwrap();
    let mut reports = fact_reports(&base);
    let t = twist(&e.algebra, &alpha, &beta, Preconditions::Verify).unwrap();
    reports.push(check(&t, "bihom_skewsymmetry"));
    reports.push(check(&t, "bihom_malcev"));
    let (ok, detail) = all_hold(&reports);
    let l = t.basis();
    say("twisted sagle4 table:".into());
    for i in 0..4 {
        for j in 0..4 {
            let p = t.algebra().basis_product(i, j);
            if !p.is_zero() {
                say(format!("  [{}, {}]' = {}", l[i], l[j], text(&p, l)));
            }
        }
    }
    let e12 = text(&t.algebra().basis_product(0, 1), l);
    within(ok && e12 == "d5*e4", start, 60, format!("{detail}; [e1, e2]' = {e12}"))
}

/// The printed parameter constraints on `a, b, c`.
fn sagle5_constraints(a: [i64; 5], b: [i64; 5], c: [i64; 5]) -> bool {
    let m = a[3] * b[0] - a[0] * b[3];
    a[4] * m == 0
        && b[4] * m == 0
        && a[0] * c[3] == a[3] * c[0]
        && a[1] * c[4] == a[4] * c[1]
        && b[0] * c[3] == b[3] * c[0]
        && b[1] * c[4] == b[4] * c[1]
}

fn c11() -> Outcome {
    let points = [
        ("sagle5_c1", [1, 0, 0, 0, 0], [0, 0, 0, 1, 0], [0, 0, 0, 0, 1]),
        ("sagle5_c2", [2, 0, 3, 1, 0], [1, 0, -1, 1, 0], [0, 4, 1, 0, 3]),
    ];
    let mut pass = true;
    let mut parts = Vec::new();
    for (key, a, b, c) in points {
        let e = get_entry(key).unwrap();
        let (alpha, beta) = e.maps_or_identity();
        let shipped_a: Vec<i64> = as_ints(&alpha.column(0));
        let shipped_b: Vec<i64> = as_ints(&alpha.column(3));
        let shipped_c: Vec<i64> = as_ints(&alpha.column(4));
        let same = shipped_a == a && shipped_b == b && shipped_c == c;
        let t = twist(&e.algebra, &alpha, &beta, Preconditions::Verify).unwrap();
        let r = check(&t, "bihom_malcev");
        let ok = same && sagle5_constraints(a, b, c) && r.is_holds();
        pass &= ok;
        parts.push(format!("{key}: constraints {}, bihom_malcev {}", if ok { "met" } else { "not met" }, r.verdict.as_str()));
    }
    outcome(pass, parts.join("; "))
}

fn c12() -> Outcome {
    let o = octonion_twist();
    let u = untwist_star(&o).unwrap();
    let same = (0..8).all(|i| (0..8).all(|j| u.basis_product(i, j) == octonions().basis_product(i, j)));
    let reports = run_suite(&BiHomAlgebra::with_identity_maps(u), Profile::Alternative);
    let (ok, detail) = all_hold(&reports);
    outcome(same && ok, format!("structure tensor {}; {detail}", if same { "matches" } else { "differs" }))
}

fn run<S: Strategy>(cases: u32, strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Result<(), String> {
    let mut runner = TestRunner::new(Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    });
    runner.run(&strategy, test).map_err(|e| e.to_string())
}

fn c13() -> Outcome {
    let mut results: Vec<(&str, u32, Result<(), String>)> = Vec::new();

    results.push((
        "scalar field axioms",
        10_000,
        run(10_000, (scalar(), scalar(), scalar()), |(a, b, c)| {
            let ring = xy_ring();
            let (a, b, c) = (build_scalar(&ring, &a), build_scalar(&ring, &b), build_scalar(&ring, &c));
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
            if !b.is_zero() {
                prop_assert_eq!(&a.checked_div(&b).unwrap() * &b, a.clone());
            }
            Ok(())
        }),
    ));

    results.push((
        "bilinearity of mul",
        10_000,
        run(
            10_000,
            (prop::array::uniform8(-3i64..=3), prop::array::uniform8(-3i64..=3), prop::array::uniform8(-3i64..=3), -3i64..=3),
            |(x, y, z, s)| {
                let o = octonions();
                let el = |v: &[i64; 8]| Element::from_coords(v.iter().map(|&c| ScalarValue::from_int(c)).collect());
                let (ex, ey, ez) = (el(&x), el(&y), el(&z));
                let sr = Rational::from_integer(s.into());
                let comb = &ex.scale_rational(&sr) + &ey;
                let lhs = o.mul(&comb, &ez).unwrap();
                let rhs = &o.mul(&ex, &ez).unwrap().scale_rational(&sr) + &o.mul(&ey, &ez).unwrap();
                prop_assert_eq!(&lhs, &rhs);
                prop_assert_eq!(as_ints(&o.mul(&ex, &ey).unwrap()), oracle_octonion_mul(&x, &y).to_vec());
                Ok(())
            },
        ),
    ));

    results.push((
        "scalar print/parse round trip",
        10_000,
        run(10_000, scalar(), |a| {
            let ring = xy_ring();
            let v = build_scalar(&ring, &a);
            let back = parse_scalar(&v.to_string(), &ring).unwrap();
            prop_assert_eq!(back, v);
            Ok(())
        }),
    ));

    let documents = (|| -> Result<(), String> {
        for (key, _) in keys() {
            let e = get_entry(key).map_err(|e| e.to_string())?;
            let doc = AlgebraDocument::from_entry(&e);
            let text = emit_document(&doc);
            let back = parse_document(text.as_bytes()).map_err(|e| e.to_string())?;
            let loaded = back.load().map_err(|e| e.to_string())?;
            let again = AlgebraDocument::from_parts(
                &loaded.name,
                &loaded.algebra,
                loaded.maps.as_ref().map(|(a, b)| (a, b)),
                &loaded.constraints,
                &loaded.inequations,
            );
            if emit_document(&again) != text || loaded.algebra != e.algebra {
                return Err(format!("{key} does not round-trip"));
            }
        }
        Ok(())
    })();
    results.push(("document emit/parse round trip", keys().len() as u32, documents));

    results.push((
        "inverse soundness",
        10_000,
        run(10_000, prop::collection::vec(-4i64..=4, 9), |entries| {
            let m = LinearEndo::from_rows(
                entries.chunks(3).map(|r| r.iter().map(|&v| ScalarValue::from_int(v)).collect()).collect(),
            )
            .unwrap();
            if let Ok(inv) = m.inverse("m") {
                prop_assert!(m.compose(&inv).unwrap().is_identity());
            } else {
                prop_assert!(m.determinant().unwrap().is_zero());
            }
            Ok(())
        }),
    ));

    let consistency = (|| -> Result<(), String> {
        for (key, _) in keys() {
            let e = get_entry(key).map_err(|e| e.to_string())?;
            let (a, b) = e.maps_or_identity();
            let candidates = [
                BiHomAlgebra::new(e.algebra.clone(), a.clone(), b.clone()).map_err(|e| e.to_string())?,
                twist(&e.algebra, &a, &b, Preconditions::Force).map_err(|e| e.to_string())?,
            ];
            for alg in &candidates {
                for (long, short) in [("left_alternative", "left_alternative_short"), ("right_alternative", "right_alternative_short")] {
                    if check(alg, long).is_holds() != check(alg, short).is_holds() {
                        return Err(format!("{key}: {long} and {short} disagree"));
                    }
                }
            }
        }
        Ok(())
    })();
    results.push(("short/long consistency across the catalog", 2 * keys().len() as u32, consistency));

    let pass = results.iter().all(|(_, _, r)| r.is_ok());
    let detail = results
        .iter()
        .map(|(name, n, r)| match r {
            Ok(()) => format!("{name} ok ({n})"),
            Err(e) => format!("{name} failed: {e}"),
        })
        .collect::<Vec<_>>()
        .join("; ");
    outcome(pass, detail)
}

#[test]
fn acceptance() {
    let criteria: [(u32, fn() -> Outcome, bool); 13] = [
        (1, c1, true),
        (2, c2, true),
        (3, c3, true),
        (4, c4, false),
        (5, c5, true),
        (6, c6, false),
        (7, c7, true),
        (8, c8, true),
        (9, c9, true),
        (10, c10, true),
        (11, c11, true),
        (12, c12, true),
        (13, c13, true),
    ];
    let mut unexpected = Vec::new();
    for (n, f, expected) in criteria {
        let o = f();
        say(format!("criterion {n}: {}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail));
        if o.pass != expected {
            unexpected.push(n);
        }
    }
    assert!(unexpected.is_empty(), "criteria with unexpected outcomes: {unexpected:?}");
}
