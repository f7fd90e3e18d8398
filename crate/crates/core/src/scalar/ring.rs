use std::fmt;
use std::sync::{Arc, LazyLock};

use super::{Result, ScalarError};

static EMPTY: LazyLock<Arc<[String]>> = LazyLock::new(|| Arc::from(Vec::<String>::new()));

/// Ordered list of polynomial variable names.
///
/// Variables are referred to by position, so two rings are compatible when one
/// is a prefix of the other.
#[derive(Clone)]
pub struct Ring {
    vars: Arc<[String]>,
}

pub(crate) fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Ring {
    pub fn new<I, S>(vars: I) -> Result<Ring>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        for (i, v) in vars.iter().enumerate() {
            if !is_identifier(v) {
                return Err(ScalarError::InvalidVariable(v.clone()));
            }
            if vars[..i].contains(v) {
                return Err(ScalarError::DuplicateVariable(v.clone()));
            }
        }
        if vars.is_empty() {
            return Ok(Ring::empty());
        }
        Ok(Ring { vars: Arc::from(vars) })
    }

    /// The ring with no variables (plain rationals).
    pub fn empty() -> Ring {
        Ring { vars: EMPTY.clone() }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn name(&self, index: usize) -> &str {
        &self.vars[index]
    }

    /// Adjoins new variables after the existing ones.
    pub fn extend<I, S>(&self, names: I) -> Result<Ring>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Ring::new(self.vars.iter().cloned().chain(names.into_iter().map(Into::into)))
    }

    /// Picks a variable name based on `stem` that is not used in this ring.
    pub fn fresh_name(&self, stem: &str) -> String {
        let mut name = stem.to_string();
        while self.index_of(&name).is_some() {
            name.push('_');
        }
        name
    }

    pub fn ptr_eq(&self, other: &Ring) -> bool {
        Arc::ptr_eq(&self.vars, &other.vars)
    }

    pub fn is_prefix_of(&self, other: &Ring) -> bool {
        self.ptr_eq(other)
            || (self.len() <= other.len() && self.vars[..] == other.vars[..self.len()])
    }

    /// The larger of two compatible rings.
    pub fn join(&self, other: &Ring) -> Result<Ring> {
        if self.ptr_eq(other) {
            return Ok(self.clone());
        }
        if self.len() >= other.len() {
            if other.is_prefix_of(self) {
                return Ok(self.clone());
            }
        } else if self.is_prefix_of(other) {
            return Ok(other.clone());
        }
        Err(ScalarError::RingMismatch {
            left: self.vars.join(","),
            right: other.vars.join(","),
        })
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Ring) -> bool {
        self.ptr_eq(other) || self.vars == other.vars
    }
}

impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.vars.iter()).finish()
    }
}
