use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::{adjoin_generic, minus_algebra, AlgebraError, BiHomAlgebra, Element, Permutation};
use crate::report::{IdentityReport, Witness, WitnessSlot};
use crate::scalar::{Rational, ScalarValue};

use super::{EvalContext, IdentityDef};

const POINT_SEED: u64 = 0x5eed_b1e0;
const POINT_TRIES: usize = 256;
const POINT_RANGE: i64 = 3;

/// First failing part: `(part index, residual)`.
type Failure = (usize, Element);

fn first_nonzero(parts: Vec<Element>) -> Option<Failure> {
    parts.into_iter().enumerate().find(|(_, r)| !r.is_zero())
}

/// Digits of `t` in base `n`, most significant first.
fn decode(mut t: usize, n: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = t % n;
        t /= n;
    }
    out
}

/// Lex-first tuple index whose evaluation fails or errors.
fn scan<F>(count: usize, eval: F) -> Option<(usize, Result<Failure, AlgebraError>)>
where
    F: Fn(usize) -> Result<Option<Failure>, AlgebraError> + Sync,
{
    (0..count).into_par_iter().find_map_first(|t| match eval(t) {
        Ok(None) => None,
        Ok(Some(f)) => Some((t, Ok(f))),
        Err(e) => Some((t, Err(e))),
    })
}

fn with_part(mut report: IdentityReport, def: &IdentityDef, part: usize) -> IdentityReport {
    if !def.parts.is_empty() {
        report.part = def.parts.get(part).map(|s| s.to_string());
    }
    report
}

/// Decides `def` on `b`.
pub fn check_identity(b: &BiHomAlgebra, def: &IdentityDef) -> IdentityReport {
    if let Err(why) = def.requires.check(b) {
        return IdentityReport::not_applicable(def.name, why);
    }
    let minus = if def.uses_commutator {
        match minus_algebra(b) {
            Ok(m) => Some(m),
            Err(e) => return IdentityReport::not_applicable(def.name, e.to_string()),
        }
    } else {
        None
    };
    let ctx = EvalContext { b, minus: minus.as_ref() };
    let mut report = match basis_stage(&ctx, def) {
        Ok(r) if r.is_holds() && !def.is_multilinear() => match generic_stage(&ctx, def) {
            Ok(r) => r,
            Err(e) => IdentityReport::not_applicable(def.name, e.to_string()),
        },
        Ok(r) => r,
        Err(e) => IdentityReport::not_applicable(def.name, e.to_string()),
    };
    if def.requires.uses_inverses() && report.verdict.is_failure() {
        report.add_side_conditions(&b.inverse_side_conditions());
    }
    report
}

fn basis_stage(ctx: &EvalContext, def: &IdentityDef) -> Result<IdentityReport, AlgebraError> {
    let b = ctx.b;
    let n = b.dim();
    let k = def.arity();
    let basis: Vec<Element> = (0..n).map(|i| Element::basis(n, i)).collect();
    let count = n.pow(k as u32);
    let found = scan(count, |t| {
        let values: Vec<Element> = decode(t, n, k).into_iter().map(|i| basis[i].clone()).collect();
        Ok(first_nonzero(def.evaluate(ctx, &values)?))
    });
    match found {
        None => Ok(IdentityReport::holds(def.name)),
        Some((_, Err(e))) => Err(e),
        Some((t, Ok((part, residual)))) => {
            let witness = Witness::Basis(def.expand(&decode(t, n, k)));
            let report = IdentityReport::failure(def.name, witness, residual, b.ring());
            Ok(with_part(report, def, part))
        }
    }
}

/// Repeated variables become generic elements; linear ones run over the basis.
fn generic_stage(ctx: &EvalContext, def: &IdentityDef) -> Result<IdentityReport, AlgebraError> {
    let b = ctx.b;
    let n = b.dim();
    let repeated: Vec<usize> = (0..def.arity()).filter(|&v| def.multiplicities[v] > 1).collect();
    let linear: Vec<usize> = (0..def.arity()).filter(|&v| def.multiplicities[v] == 1).collect();
    let stems: Vec<&str> = repeated.iter().map(|&v| def.variables[v]).collect();
    let generic = adjoin_generic(b, &stems)?;
    let ring = generic.algebra.ring().clone();
    let minus = match ctx.minus {
        Some(m) => Some(m.with_ring(&ring)?),
        None => None,
    };
    let gctx = EvalContext {
        b: &generic.algebra,
        minus: minus.as_ref(),
    };
    let basis: Vec<Element> = (0..n)
        .map(|i| Element::basis(n, i).with_ring(&ring))
        .collect::<Result<_, _>>()?;
    let assemble = |digits: &[usize], gens: &[Element], basis: &[Element]| -> Vec<Element> {
        let mut values = vec![Element::zero(n); def.arity()];
        for (slot, &v) in repeated.iter().enumerate() {
            values[v] = gens[slot].clone();
        }
        for (slot, &v) in linear.iter().enumerate() {
            values[v] = basis[digits[slot]].clone();
        }
        values
    };
    let count = n.pow(linear.len() as u32);
    let found = scan(count, |t| {
        let values = assemble(&decode(t, n, linear.len()), &generic.elements, &basis);
        Ok(first_nonzero(def.evaluate(&gctx, &values)?))
    });
    let (t, (part, residual)) = match found {
        None => return Ok(IdentityReport::holds(def.name)),
        Some((_, Err(e))) => return Err(e),
        Some((t, Ok(f))) => (t, f),
    };
    let digits = decode(t, n, linear.len());
    let params = generic.parameter_count;
    let involves_params = residual
        .coords()
        .iter()
        .any(|c| c.variables().iter().any(|&v| v < params));
    if !involves_params {
        if let Some(report) = concrete_point(ctx, def, &generic.elements, &residual, params, &digits, &assemble)? {
            return Ok(report);
        }
    }
    let mut slots: Vec<WitnessSlot> = vec![WitnessSlot::Basis(0); def.arity()];
    for (slot, &v) in repeated.iter().enumerate() {
        slots[v] = WitnessSlot::Generic(stems[slot].to_string());
    }
    for (slot, &v) in linear.iter().enumerate() {
        slots[v] = WitnessSlot::Basis(digits[slot]);
    }
    let mut report = IdentityReport::failure(def.name, Witness::Generic(def.expand(&slots)), residual, b.ring());
    report.verdict = crate::report::Verdict::FailsGenerically;
    Ok(with_part(report, def, part))
}

/// Searches small integer points for the generic coordinates at which the
/// residual is nonzero, then re-evaluates there on the original algebra.
fn concrete_point(
    ctx: &EvalContext,
    def: &IdentityDef,
    gens: &[Element],
    residual: &Element,
    params: usize,
    digits: &[usize],
    assemble: &dyn Fn(&[usize], &[Element], &[Element]) -> Vec<Element>,
) -> Result<Option<IdentityReport>, AlgebraError> {
    let b = ctx.b;
    let n = b.dim();
    let vars = gens.len() * n;
    let mut rng = ChaCha8Rng::seed_from_u64(POINT_SEED);
    for attempt in 0..POINT_TRIES {
        let point: Vec<i64> = (0..vars)
            .map(|k| {
                if attempt == 0 {
                    1 + (k as i64 % 2)
                } else {
                    rng.gen_range(-POINT_RANGE..=POINT_RANGE)
                }
            })
            .collect();
        let subs: Vec<(usize, Rational)> = point
            .iter()
            .enumerate()
            .map(|(k, &x)| (params + k, Rational::from_integer(x.into())))
            .collect();
        let nonzero = residual
            .coords()
            .iter()
            .any(|c| c.substitute(&subs).map(|s| !s.is_zero()).unwrap_or(false));
        if !nonzero {
            continue;
        }
        let concrete: Vec<Element> = (0..gens.len())
            .map(|g| {
                let coords = (0..n)
                    .map(|k| ScalarValue::from_int(point[g * n + k]).with_ring(b.ring()))
                    .collect::<Result<_, _>>()?;
                Ok(Element::from_coords(coords))
            })
            .collect::<Result<_, AlgebraError>>()?;
        let basis: Vec<Element> = (0..n).map(|i| Element::basis(n, i)).collect();
        let values = assemble(digits, &concrete, &basis);
        if let Some((part, r)) = first_nonzero(def.evaluate(ctx, &values)?) {
            let report = IdentityReport::failure(def.name, Witness::Point(def.expand(&values)), r, b.ring());
            return Ok(Some(with_part(report, def, part)));
        }
    }
    Ok(None)
}

/// Checks that `f` is alternating on basis tuples of the given arity (3 or 4)
/// by testing a generating set of the symmetric group.
pub fn is_alternating<F>(b: &BiHomAlgebra, arity: usize, f: F) -> IdentityReport
where
    F: Fn(&[Element]) -> Result<Element, AlgebraError> + Sync,
{
    const NAME: &str = "alternating";
    let generators: Vec<(&str, Permutation)> = match arity {
        3 => vec![("xi", Permutation::xi3()), ("delta", Permutation::delta())],
        4 => vec![("xi", Permutation::xi4()), ("eta", Permutation::eta())],
        _ => return IdentityReport::not_applicable(NAME, format!("unsupported arity {arity}")),
    };
    let n = b.dim();
    let basis: Vec<Element> = (0..n).map(|i| Element::basis(n, i)).collect();
    let found = scan(n.pow(arity as u32), |t| {
        let values: Vec<Element> = decode(t, n, arity).into_iter().map(|i| basis[i].clone()).collect();
        let base = f(&values)?;
        for (g, (_, p)) in generators.iter().enumerate() {
            let moved = f(&p.apply(&values))?;
            let r = if p.sign() > 0 { &base - &moved } else { &base + &moved };
            if !r.is_zero() {
                return Ok(Some((g, r)));
            }
        }
        Ok(None)
    });
    match found {
        None => IdentityReport::holds(NAME),
        Some((_, Err(e))) => IdentityReport::not_applicable(NAME, e.to_string()),
        Some((t, Ok((g, r)))) => {
            let mut report = IdentityReport::failure(NAME, Witness::Basis(decode(t, n, arity)), r, b.ring());
            report.part = Some(generators[g].0.to_string());
            report
        }
    }
}
