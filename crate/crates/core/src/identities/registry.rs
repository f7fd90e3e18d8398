//! Evaluators for the registry rows. Each returns one residual per part; the
//! identity holds when every part vanishes.

use crate::algebra::{AlgebraError, BiHomAlgebra, Element, Permutation};
use crate::scalar::Rational;

use super::{EvalContext, IdentityDef, Requirement};

type R = Result<Vec<Element>, AlgebraError>;

fn w(b: &BiHomAlgebra, a: i32, c: i32, x: &Element) -> Result<Element, AlgebraError> {
    b.apply_word(a, c, x)
}

/// `μ(α^a β^b x, α^c β^d y)`.
fn mw(b: &BiHomAlgebra, x: &Element, wx: (i32, i32), y: &Element, wy: (i32, i32)) -> Result<Element, AlgebraError> {
    b.mul(&w(b, wx.0, wx.1, x)?, &w(b, wy.0, wy.1, y)?)
}

fn asw(
    b: &BiHomAlgebra,
    x: &Element,
    wx: (i32, i32),
    y: &Element,
    wy: (i32, i32),
    z: &Element,
    wz: (i32, i32),
) -> Result<Element, AlgebraError> {
    b.associator(&w(b, wx.0, wx.1, x)?, &w(b, wy.0, wy.1, y)?, &w(b, wz.0, wz.1, z)?)
}

fn sum(terms: &[(i64, Element)]) -> Element {
    let mut acc = Element::zero(terms[0].1.dim());
    for (c, t) in terms {
        acc = match c {
            1 => &acc + t,
            -1 => &acc - t,
            _ => &acc + &t.scale_rational(&Rational::from_integer((*c).into())),
        };
    }
    acc
}

fn bihom_associativity(c: &EvalContext, v: &[Element]) -> R {
    Ok(vec![c.b.associator(&v[0], &v[1], &v[2])?])
}

fn left_alternative(c: &EvalContext, v: &[Element]) -> R {
    let b = c.b;
    let (x, y, z) = (&v[0], &v[1], &v[2]);
    let p = asw(b, x, (0, 1), y, (1, 0), z, (0, 0))?;
    let q = asw(b, y, (0, 1), x, (1, 0), z, (0, 0))?;
    Ok(vec![&p + &q])
}

fn right_alternative(c: &EvalContext, v: &[Element]) -> R {
    let b = c.b;
    let (x, y, z) = (&v[0], &v[1], &v[2]);
    let p = asw(b, x, (0, 0), y, (0, 1), z, (1, 0))?;
    let q = asw(b, x, (0, 0), z, (0, 1), y, (1, 0))?;
    Ok(vec![&p + &q])
}

fn left_alternative_short(c: &EvalContext, v: &[Element]) -> R {
    let (x, y) = (&v[0], &v[1]);
    Ok(vec![asw(c.b, x, (0, 1), x, (1, 0), y, (0, 0))?])
}

fn right_alternative_short(c: &EvalContext, v: &[Element]) -> R {
    let (x, y) = (&v[0], &v[1]);
    Ok(vec![asw(c.b, x, (0, 0), y, (0, 1), y, (1, 0))?])
}

/// `as(β²a, αβb, α²c)`.
fn as_reg(b: &BiHomAlgebra, a: &Element, bb: &Element, cc: &Element) -> Result<Element, AlgebraError> {
    asw(b, a, (0, 2), bb, (1, 1), cc, (2, 0))
}

fn regular_alternative_pair(c: &EvalContext, v: &[Element]) -> R {
    let b = c.b;
    let (x, y, z) = (&v[0], &v[1], &v[2]);
    let base = as_reg(b, x, y, z)?;
    Ok(vec![&base + &as_reg(b, y, x, z)?, &base + &as_reg(b, x, z, y)?])
}

fn associator_symmetries(c: &EvalContext, v: &[Element]) -> R {
    let b = c.b;
    let (x, y, z) = (&v[0], &v[1], &v[2]);
    let base = as_reg(b, x, y, z)?;
    Ok(vec![
        &base + &as_reg(b, z, y, x)?,
        &base - &as_reg(b, z, x, y)?,
        as_reg(b, x, y, x)?,
    ])
}

fn bihom_skewsymmetry(c: &EvalContext, v: &[Element]) -> R {
    let b = c.b;
    let (x, y) = (&v[0], &v[1]);
    Ok(vec![&mw(b, x, (0, 1), y, (1, 0))? + &mw(b, y, (0, 1), x, (1, 0))?])
}

fn bihom_jacobi(c: &EvalContext, v: &[Element]) -> R {
    Ok(vec![c.b.jacobiator(&v[0], &v[1], &v[2])?])
}

fn bihom_malcev(c: &EvalContext, v: &[Element]) -> R {
    let b = c.b;
    let (x, y, z) = (&v[0], &v[1], &v[2]);
    let lhs = b.jacobiator(&w(b, 1, 1, x)?, &w(b, 1, 1, y)?, &mw(b, x, (0, 1), z, (1, 0))?)?;
    let j = b.jacobiator(&w(b, 0, 1, x)?, &w(b, 0, 1, y)?, &w(b, 0, 1, z)?)?;
    let rhs = b.mul(&j, &w(b, 2, 2, x)?)?;
    Ok(vec![&lhs - &rhs])
}

fn classical_malcev(c: &EvalContext, v: &[Element]) -> R {
    let b = c.b;
    let (x, y, z) = (&v[0], &v[1], &v[2]);
    let m = |p: &Element, q: &Element| b.mul(p, q);
    let xy = m(x, y)?;
    let lhs = m(&xy, &m(x, z)?)?;
    let t1 = m(&m(&xy, z)?, x)?;
    let t2 = m(&m(&m(y, z)?, x)?, x)?;
    let t3 = m(&m(&m(z, x)?, x)?, y)?;
    Ok(vec![sum(&[(1, lhs), (-1, t1), (-1, t2), (-1, t3)])])
}

fn bihom_commutativity(c: &EvalContext, v: &[Element]) -> R {
    let b = c.b;
    let (x, y) = (&v[0], &v[1]);
    Ok(vec![&mw(b, x, (0, 1), y, (1, 0))? - &mw(b, y, (0, 1), x, (1, 0))?])
}

/// `as(μ(β²a, αβb), α²βc, α³d)`.
fn jordan_term(b: &BiHomAlgebra, a: &Element, bb: &Element, cc: &Element, d: &Element) -> Result<Element, AlgebraError> {
    let p = mw(b, a, (0, 2), bb, (1, 1))?;
    b.associator(&p, &w(b, 2, 1, cc)?, &w(b, 3, 0, d)?)
}

fn bihom_jordan(c: &EvalContext, v: &[Element]) -> R {
    let (x, y) = (&v[0], &v[1]);
    Ok(vec![jordan_term(c.b, x, x, y, x)?])
}

fn bihom_jordan_cyclic(c: &EvalContext, v: &[Element]) -> R {
    let b = c.b;
    let (x, y, z, ww) = (&v[0], &v[1], &v[2], &v[3]);
    let t1 = jordan_term(b, x, ww, y, z)?;
    let t2 = jordan_term(b, ww, z, y, x)?;
    let t3 = jordan_term(b, z, x, y, ww)?;
    Ok(vec![sum(&[(1, t1), (1, t2), (1, t3)])])
}

fn moufang_i(c: &EvalContext, v: &[Element]) -> R {
    let b = c.b;
    let (x, y, z) = (&v[0], &v[1], &v[2]);
    let inner = mw(b, y, (0, 2), x, (1, 1))?;
    let lhs = b.mul(&b.mul(&w(b, 0, 3, x)?, &inner)?, &w(b, 2, 2, z)?)?;
    let r1 = mw(b, x, (1, 1), z, (2, 0))?;
    let r2 = b.mul(&w(b, 1, 2, y)?, &r1)?;
    let rhs = b.mul(&w(b, 1, 3, x)?, &r2)?;
    Ok(vec![&lhs - &rhs])
}

fn moufang_ii(c: &EvalContext, v: &[Element]) -> R {
    let b = c.b;
    let (x, y, z) = (&v[0], &v[1], &v[2]);
    let l1 = mw(b, z, (0, 2), x, (1, 1))?;
    let l2 = b.mul(&l1, &w(b, 2, 1, y)?)?;
    let lhs = b.mul(&l2, &w(b, 3, 1, x)?)?;
    let r1 = mw(b, x, (1, 1), y, (2, 0))?;
    let r2 = b.mul(&r1, &w(b, 3, 0, x)?)?;
    let rhs = b.mul(&w(b, 2, 2, z)?, &r2)?;
    Ok(vec![&lhs - &rhs])
}

fn moufang_iii(c: &EvalContext, v: &[Element]) -> R {
    let b = c.b;
    let (x, y, z) = (&v[0], &v[1], &v[2]);
    let lhs = b.mul(&mw(b, x, (1, 2), y, (2, 1))?, &mw(b, z, (2, 1), x, (3, 0))?)?;
    let r1 = mw(b, y, (1, 1), z, (2, 0))?;
    let r2 = b.mul(&w(b, 1, 2, x)?, &r1)?;
    let rhs = b.mul(&r2, &w(b, 3, 1, x)?)?;
    Ok(vec![&lhs - &rhs])
}

fn h_decomposition(c: &EvalContext, v: &[Element]) -> R {
    let b = c.b;
    let (ww, x, y, z) = (&v[0], &v[1], &v[2], &v[3]);
    let h = b.h_function(ww, x, y, z)?;
    let a1 = asw(b, x, (1, 1), y, (2, 0), z, (3, -1))?;
    let t1 = b.mul(&w(b, 2, 2, ww)?, &a1)?;
    let a2 = asw(b, ww, (0, 2), x, (1, 1), y, (2, 0))?;
    let t2 = b.mul(&a2, &w(b, 3, 1, z)?)?;
    Ok(vec![sum(&[(1, h), (-1, t1), (-1, t2)])])
}

fn bk_f_at(b: &BiHomAlgebra, t: &[Element]) -> Result<Element, AlgebraError> {
    b.bk_f(&t[0], &t[1], &t[2], &t[3])
}

fn f_equals_f_cyclic(c: &EvalContext, v: &[Element]) -> R {
    let b = c.b;
    let big = b.bk_F(&v[0], &v[1], &v[2], &v[3])?;
    let rho = Permutation::rho();
    let f0 = bk_f_at(b, v)?;
    let f1 = bk_f_at(b, &rho.apply(v))?;
    let f2 = bk_f_at(b, &rho.pow(2).apply(v))?;
    Ok(vec![sum(&[(1, big), (-1, f0), (1, f1), (-1, f2)])])
}

fn f_alternating(c: &EvalContext, v: &[Element]) -> R {
    let b = c.b;
    let f = bk_f_at(b, v)?;
    let fxi = bk_f_at(b, &Permutation::xi4().apply(v))?;
    let feta = bk_f_at(b, &Permutation::eta().apply(v))?;
    Ok(vec![&f + &fxi, &f + &feta])
}

fn f_zeta_formula(c: &EvalContext, v: &[Element]) -> R {
    let b = c.b;
    let f = bk_f_at(b, v)?;
    let big = b.bk_F(&v[0], &v[1], &v[2], &v[3])?;
    let g = |t: &[Element]| -> Result<Element, AlgebraError> {
        let br = b.bracket(&w(b, 0, 2, &t[0])?, &w(b, 1, 1, &t[1])?)?;
        b.associator(&br, &w(b, 2, 1, &t[2])?, &w(b, 3, 0, &t[3])?)
    };
    let zeta_sum = &g(v)? + &g(&Permutation::zeta().apply(v))?;
    Ok(vec![sum(&[(3, f.clone()), (-1, big)]), &f - &zeta_sum])
}

fn minus_of<'a>(c: &'a EvalContext) -> Result<&'a BiHomAlgebra, AlgebraError> {
    c.minus
        .ok_or_else(|| AlgebraError::NotApplicable("the commutator algebra is unavailable".into()))
}

/// `as(α⁻¹β² a, β b, α c)` in the base algebra.
fn jac_as(b: &BiHomAlgebra, t: &[Element]) -> Result<Element, AlgebraError> {
    asw(b, &t[0], (-1, 2), &t[1], (0, 1), &t[2], (1, 0))
}

fn jacobiator_assoc_formula(c: &EvalContext, v: &[Element]) -> R {
    let b = c.b;
    let j = minus_of(c)?.jacobiator(&v[0], &v[1], &v[2])?;
    let xi = Permutation::xi3();
    let delta = Permutation::delta();
    let mut terms = vec![(1, j)];
    for k in 0..3 {
        let s = xi.pow(k);
        terms.push((-1, jac_as(b, &s.apply(v))?));
        terms.push((1, jac_as(b, &s.compose(&delta).apply(v))?));
    }
    Ok(vec![sum(&terms)])
}

fn jacobiator_six_as(c: &EvalContext, v: &[Element]) -> R {
    let j = minus_of(c)?.jacobiator(&v[0], &v[1], &v[2])?;
    Ok(vec![sum(&[(1, j), (-6, jac_as(c.b, v)?)])])
}

fn jordan_admissibility_lemma(c: &EvalContext, v: &[Element]) -> R {
    let b = c.b;
    let (x, y) = (&v[0], &v[1]);
    let i = jordan_term(b, x, x, y, x)?;
    let xx = mw(b, x, (1, 1), x, (2, 0))?;
    let ii_l = b.mul(&b.mul(&w(b, 1, 2, y)?, &xx)?, &w(b, 3, 1, x)?)?;
    let ii_r = b.mul(&mw(b, y, (1, 2), x, (2, 1))?, &mw(b, x, (2, 1), x, (3, 0))?)?;
    let iii_l = b.mul(&w(b, 2, 2, x)?, &b.mul(&xx, &w(b, 3, 0, y)?)?)?;
    let iii_r = b.mul(&mw(b, x, (1, 2), x, (2, 1))?, &mw(b, x, (2, 1), y, (3, 0))?)?;
    let inner = mw(b, x, (2, 0), x, (3, -1))?;
    let iv_l = b.mul(&w(b, 2, 2, x)?, &b.mul(&w(b, 2, 1, y)?, &inner)?)?;
    let iv_r = b.mul(&mw(b, x, (1, 2), y, (2, 1))?, &mw(b, x, (2, 1), x, (3, 0))?)?;
    Ok(vec![i, &ii_l - &ii_r, &iii_l - &iii_r, &iv_l - &iv_r])
}

const XYZ: &[&str] = &["x", "y", "z"];
const WXYZ: &[&str] = &["w", "x", "y", "z"];
const XY: &[&str] = &["x", "y"];

macro_rules! row {
    ($name:literal, $vars:expr, $mult:expr, $req:expr, $parts:expr, $eval:expr) => {
        IdentityDef {
            name: $name,
            variables: $vars,
            multiplicities: $mult,
            slots: None,
            requires: $req,
            uses_commutator: false,
            parts: $parts,
            evaluator: $eval,
        }
    };
}

pub(super) static REGISTRY: [IdentityDef; 24] = [
    row!("bihom_associativity", XYZ, &[1, 1, 1], Requirement::None, &[], bihom_associativity),
    row!("left_alternative", XYZ, &[1, 1, 1], Requirement::None, &[], left_alternative),
    row!("right_alternative", XYZ, &[1, 1, 1], Requirement::None, &[], right_alternative),
    IdentityDef {
        slots: Some(&[0, 0, 1]),
        ..row!("left_alternative_short", XY, &[2, 1], Requirement::None, &[], left_alternative_short)
    },
    IdentityDef {
        slots: Some(&[0, 1, 1]),
        ..row!("right_alternative_short", XY, &[1, 2], Requirement::None, &[], right_alternative_short)
    },
    row!("regular_alternative_pair", XYZ, &[1, 1, 1], Requirement::None, &["left", "right"], regular_alternative_pair),
    row!(
        "associator_symmetries",
        XYZ,
        &[2, 1, 1],
        Requirement::None,
        &["outer swap", "cyclic", "repeated"],
        associator_symmetries
    ),
    row!("bihom_skewsymmetry", XY, &[1, 1], Requirement::None, &[], bihom_skewsymmetry),
    row!("bihom_jacobi", XYZ, &[1, 1, 1], Requirement::None, &[], bihom_jacobi),
    row!("bihom_malcev", XYZ, &[2, 1, 1], Requirement::None, &[], bihom_malcev),
    row!("classical_malcev", XYZ, &[2, 1, 1], Requirement::IdentityMaps, &[], classical_malcev),
    row!("bihom_commutativity", XY, &[1, 1], Requirement::None, &[], bihom_commutativity),
    row!("bihom_jordan", XY, &[3, 1], Requirement::None, &[], bihom_jordan),
    row!("bihom_jordan_cyclic", &["x", "y", "z", "w"], &[1, 1, 1, 1], Requirement::None, &[], bihom_jordan_cyclic),
    row!("moufang_i", XYZ, &[2, 1, 1], Requirement::None, &[], moufang_i),
    row!("moufang_ii", XYZ, &[2, 1, 1], Requirement::None, &[], moufang_ii),
    row!("moufang_iii", XYZ, &[2, 1, 1], Requirement::None, &[], moufang_iii),
    row!("H_decomposition", WXYZ, &[1, 1, 1, 1], Requirement::Invertible, &[], h_decomposition),
    row!("F_equals_f_cyclic", WXYZ, &[1, 1, 1, 1], Requirement::Invertible, &[], f_equals_f_cyclic),
    row!("f_alternating", WXYZ, &[1, 1, 1, 1], Requirement::Invertible, &["xi", "eta"], f_alternating),
    row!("f_zeta_formula", WXYZ, &[1, 1, 1, 1], Requirement::Invertible, &["3f = F", "zeta"], f_zeta_formula),
    IdentityDef {
        uses_commutator: true,
        ..row!("jacobiator_assoc_formula", XYZ, &[1, 1, 1], Requirement::Regular, &[], jacobiator_assoc_formula)
    },
    IdentityDef {
        uses_commutator: true,
        ..row!("jacobiator_six_as", XYZ, &[1, 1, 1], Requirement::Regular, &[], jacobiator_six_as)
    },
    row!(
        "jordan_admissibility_lemma",
        XY,
        &[3, 1],
        Requirement::Invertible,
        &["i", "ii", "iii", "iv"],
        jordan_admissibility_lemma
    ),
];
