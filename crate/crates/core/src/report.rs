//! Verdicts, witnesses and side conditions shared by the checking routines.

use std::fmt;

use crate::algebra::Element;
use crate::scalar::{Polynomial, Rational, Ring, ScalarValue};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Verdict {
    Holds,
    Fails,
    FailsGenerically,
    NotApplicable,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Holds => "HOLDS",
            Verdict::Fails => "FAILS",
            Verdict::FailsGenerically => "FAILS-GENERICALLY",
            Verdict::NotApplicable => "NOT-APPLICABLE",
        }
    }

    pub fn is_failure(self) -> bool {
        matches!(self, Verdict::Fails | Verdict::FailsGenerically)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Where a failure was observed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Basis indices, one per argument slot.
    Basis(Vec<usize>),
    /// Concrete rational elements, one per argument slot.
    Point(Vec<Element>),
    /// Generic elements mixed with basis vectors.
    Generic(Vec<WitnessSlot>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessSlot {
    Basis(usize),
    /// A generic element, named by its variable.
    Generic(String),
}

impl Witness {
    /// Renders with basis labels, e.g. `(e, e, u)`.
    pub fn render(&self, labels: &[String]) -> String {
        match self {
            Witness::Basis(idx) => {
                let parts: Vec<&str> = idx.iter().map(|&i| labels[i].as_str()).collect();
                format!("({})", parts.join(", "))
            }
            Witness::Point(xs) => {
                let parts: Vec<String> = xs.iter().map(|x| format!("[{}]", x.display(labels))).collect();
                format!("({})", parts.join(", "))
            }
            Witness::Generic(slots) => {
                let parts: Vec<&str> = slots
                    .iter()
                    .map(|s| match s {
                        WitnessSlot::Basis(i) => labels[*i].as_str(),
                        WitnessSlot::Generic(name) => name.as_str(),
                    })
                    .collect();
                format!("({})", parts.join(", "))
            }
        }
    }
}

/// An assumed inequation `expr != excluded`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SideCondition {
    pub expr: ScalarValue,
    pub excluded: ScalarValue,
}

impl SideCondition {
    pub fn nonzero(expr: ScalarValue) -> SideCondition {
        SideCondition {
            expr,
            excluded: ScalarValue::zero(),
        }
    }
}

impl fmt::Display for SideCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} != {}", self.expr, self.excluded)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct IdentityReport {
    pub identity: String,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    /// Label of the failing component for multi-part identities.
    pub part: Option<String>,
    pub residual: Option<Element>,
    pub side_conditions: Vec<SideCondition>,
    /// Free-form explanation, used for NOT-APPLICABLE rows.
    pub note: Option<String>,
}

impl IdentityReport {
    pub fn holds(identity: impl Into<String>) -> IdentityReport {
        IdentityReport {
            identity: identity.into(),
            verdict: Verdict::Holds,
            witness: None,
            part: None,
            residual: None,
            side_conditions: Vec::new(),
            note: None,
        }
    }

    pub fn not_applicable(identity: impl Into<String>, reason: impl Into<String>) -> IdentityReport {
        IdentityReport {
            verdict: Verdict::NotApplicable,
            note: Some(reason.into()),
            ..IdentityReport::holds(identity)
        }
    }

    /// Failure at `witness`; FAILS when the residual is rational, otherwise
    /// FAILS-GENERICALLY with side conditions read off the residual.
    pub fn failure(identity: impl Into<String>, witness: Witness, residual: Element, params: &Ring) -> IdentityReport {
        let (verdict, side_conditions) = if residual.is_constant() {
            (Verdict::Fails, Vec::new())
        } else {
            (Verdict::FailsGenerically, side_conditions_for(&residual, params))
        };
        IdentityReport {
            identity: identity.into(),
            verdict,
            witness: Some(witness),
            part: None,
            residual: Some(residual),
            side_conditions,
            note: None,
        }
    }

    pub fn is_holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }

    pub(crate) fn add_side_conditions(&mut self, extra: &[SideCondition]) {
        for c in extra {
            if !self.side_conditions.contains(c) {
                self.side_conditions.push(c.clone());
            }
        }
    }
}

/// Inequations under which `residual` is nonzero, read off the first
/// coordinate that involves only parameters.
///
/// Variables dividing the numerator give `v != 0`; a remaining factor linear
/// in a single variable gives `v != root`; anything else is kept as
/// `p != 0`.
pub fn side_conditions_for(residual: &Element, params: &Ring) -> Vec<SideCondition> {
    let Some(coord) = residual
        .coords()
        .iter()
        .find(|c| !c.is_zero() && !c.is_constant() && c.variables().iter().all(|&v| v < params.len()))
    else {
        return Vec::new();
    };
    let num = match coord.numerator().with_ring(params) {
        Ok(p) => p,
        Err(_) => return Vec::new(),
    };
    let mut out = Vec::new();
    let content = num.monomial_content();
    for (v, _) in content.powers() {
        out.push(SideCondition::nonzero(ScalarValue::var(params, v)));
    }
    let rest = num
        .div_exact(&Polynomial::monomial(params, content, Rational::from_integer(1.into())))
        .expect("monomial content divides")
        .primitive();
    if !rest.is_constant() {
        out.push(linear_condition(&rest, params).unwrap_or_else(|| {
            SideCondition::nonzero(ScalarValue::from_polynomial(rest.clone()))
        }));
    }
    out
}

fn linear_condition(p: &Polynomial, params: &Ring) -> Option<SideCondition> {
    let vars = p.variables();
    if vars.len() != 1 || p.total_degree() != 1 {
        return None;
    }
    let v = vars[0];
    let coeffs = p.coefficients_in(v);
    let a = coeffs.get(&1)?.as_constant()?;
    let b = coeffs.get(&0).and_then(Polynomial::as_constant).unwrap_or_default();
    Some(SideCondition {
        expr: ScalarValue::var(params, v),
        excluded: ScalarValue::from_rational(-b / a),
    })
}
