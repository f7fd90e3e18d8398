//! Identity registry and decision procedure.
//!
//! Multilinear identities are decided on all basis tuples. For identities in
//! which some variable repeats, the repeated variables are replaced by generic
//! elements (fresh indeterminate coordinates) while the linear ones still run
//! over the basis.

mod check;
mod registry;
mod suite;

pub use check::{check_identity, is_alternating};
pub use suite::{check_admissibility, fact_reports, run_suite, Admissibility, Profile};

pub use crate::report::{IdentityReport, SideCondition, Verdict, Witness};

use crate::algebra::{AlgebraError, BiHomAlgebra, Element};

/// What the algebra must satisfy for an identity to be meaningful.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Requirement {
    None,
    /// Both structure maps invertible.
    Invertible,
    /// Both structure maps invertible algebra morphisms.
    Regular,
    /// Both structure maps equal to the identity.
    IdentityMaps,
}

impl Requirement {
    /// `Err(reason)` when `b` does not meet the requirement.
    pub fn check(self, b: &BiHomAlgebra) -> Result<(), String> {
        let f = b.facts();
        match self {
            Requirement::None => Ok(()),
            Requirement::Invertible if f.alpha_invertible && f.beta_invertible => Ok(()),
            Requirement::Invertible => Err("needs invertible structure maps".into()),
            Requirement::Regular => b.ensure_regular("this identity").map_err(|e| e.to_string()),
            Requirement::IdentityMaps if b.has_identity_maps() => Ok(()),
            Requirement::IdentityMaps => Err("only defined for identity structure maps".into()),
        }
    }

    pub fn uses_inverses(self) -> bool {
        matches!(self, Requirement::Invertible | Requirement::Regular)
    }
}

/// Inputs available to an evaluator.
pub struct EvalContext<'a> {
    pub b: &'a BiHomAlgebra,
    /// The commutator algebra of `b`, present for identities that need it.
    pub minus: Option<&'a BiHomAlgebra>,
}

pub type Evaluator = fn(&EvalContext, &[Element]) -> Result<Vec<Element>, AlgebraError>;

pub struct IdentityDef {
    pub name: &'static str,
    pub variables: &'static [&'static str],
    /// Occurrences of each variable in the defining expression.
    pub multiplicities: &'static [u32],
    /// Variable shown in each witness slot; `None` lists the variables once.
    pub slots: Option<&'static [usize]>,
    pub requires: Requirement,
    pub uses_commutator: bool,
    /// Labels of the residual parts; empty for single-part identities.
    pub parts: &'static [&'static str],
    pub evaluator: Evaluator,
}

impl IdentityDef {
    pub fn arity(&self) -> usize {
        self.variables.len()
    }

    pub fn is_multilinear(&self) -> bool {
        self.multiplicities.iter().all(|&m| m == 1)
    }

    pub fn evaluate(&self, ctx: &EvalContext, values: &[Element]) -> Result<Vec<Element>, AlgebraError> {
        (self.evaluator)(ctx, values)
    }

    /// Expands per-variable values into witness slots.
    pub(crate) fn expand<T: Clone>(&self, values: &[T]) -> Vec<T> {
        match self.slots {
            Some(slots) => slots.iter().map(|&i| values[i].clone()).collect(),
            None => values.to_vec(),
        }
    }
}

impl std::fmt::Debug for IdentityDef {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IdentityDef")
            .field("name", &self.name)
            .field("variables", &self.variables)
            .field("multiplicities", &self.multiplicities)
            .field("requires", &self.requires)
            .finish()
    }
}

/// All registry rows in order.
pub fn registry() -> &'static [IdentityDef] {
    &registry::REGISTRY
}

pub fn identity(name: &str) -> Option<&'static IdentityDef> {
    registry().iter().find(|d| d.name == name)
}
