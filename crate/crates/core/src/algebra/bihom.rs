use std::sync::{Arc, OnceLock};

use crate::report::{side_conditions_for, SideCondition};
use crate::scalar::{Ring, ScalarValue};

use super::{is_morphism, maps_commute, Algebra, AlgebraError, Element, LinearEndo, Result};

/// Computed properties of the structure maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facts {
    pub maps_commute: bool,
    pub alpha_multiplicative: bool,
    pub beta_multiplicative: bool,
    pub alpha_invertible: bool,
    pub beta_invertible: bool,
}

impl Facts {
    /// Both maps are invertible algebra morphisms.
    pub fn is_regular(&self) -> bool {
        self.alpha_multiplicative && self.beta_multiplicative && self.alpha_invertible && self.beta_invertible
    }
}

const WORD_MIN: i32 = -3;
const WORD_MAX: i32 = 5;
const WORD_SPAN: usize = (WORD_MAX - WORD_MIN + 1) as usize;

struct Word {
    map: LinearEndo,
    identity: bool,
}

type Slot = OnceLock<Result<Arc<Word>>>;

/// Algebra with two structure maps `(A, μ, α, β)`.
#[derive(Clone)]
pub struct BiHomAlgebra {
    algebra: Algebra,
    alpha: LinearEndo,
    beta: LinearEndo,
    facts: Facts,
    alpha_det: ScalarValue,
    beta_det: ScalarValue,
    words: Arc<Vec<Slot>>,
}

impl BiHomAlgebra {
    /// Wraps an algebra and two maps, computing the facts.
    pub fn new(algebra: Algebra, alpha: LinearEndo, beta: LinearEndo) -> Result<BiHomAlgebra> {
        let n = algebra.dim();
        for m in [&alpha, &beta] {
            if m.dim() != n {
                return Err(AlgebraError::DimensionMismatch {
                    expected: n,
                    found: m.dim(),
                });
            }
        }
        let mut ring = algebra.ring().clone();
        for c in alpha.entries().iter().chain(beta.entries()) {
            ring = ring.join(c.ring())?;
        }
        let algebra = algebra.with_ring(&ring)?;
        let alpha = alpha.with_ring(&ring)?;
        let beta = beta.with_ring(&ring)?;
        let alpha_det = alpha.determinant()?;
        let beta_det = beta.determinant()?;
        let facts = Facts {
            maps_commute: maps_commute(&alpha, &beta, &ring).is_holds(),
            alpha_multiplicative: is_morphism(&algebra, &alpha).is_holds(),
            beta_multiplicative: is_morphism(&algebra, &beta).is_holds(),
            alpha_invertible: !alpha_det.is_zero(),
            beta_invertible: !beta_det.is_zero(),
        };
        Ok(BiHomAlgebra::assemble(algebra, alpha, beta, facts, alpha_det, beta_det))
    }

    /// The algebra with `α = β = id`.
    pub fn with_identity_maps(algebra: Algebra) -> BiHomAlgebra {
        let n = algebra.dim();
        let id = LinearEndo::identity(n);
        let facts = Facts {
            maps_commute: true,
            alpha_multiplicative: true,
            beta_multiplicative: true,
            alpha_invertible: true,
            beta_invertible: true,
        };
        BiHomAlgebra::assemble(algebra, id.clone(), id, facts, ScalarValue::one(), ScalarValue::one())
    }

    fn assemble(
        algebra: Algebra,
        alpha: LinearEndo,
        beta: LinearEndo,
        facts: Facts,
        alpha_det: ScalarValue,
        beta_det: ScalarValue,
    ) -> BiHomAlgebra {
        BiHomAlgebra {
            algebra,
            alpha,
            beta,
            facts,
            alpha_det,
            beta_det,
            words: Arc::new((0..WORD_SPAN * WORD_SPAN).map(|_| OnceLock::new()).collect()),
        }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn alpha(&self) -> &LinearEndo {
        &self.alpha
    }

    pub fn beta(&self) -> &LinearEndo {
        &self.beta
    }

    pub fn facts(&self) -> &Facts {
        &self.facts
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn basis(&self) -> &[String] {
        self.algebra.basis()
    }

    pub fn ring(&self) -> &Ring {
        self.algebra.ring()
    }

    pub fn is_regular(&self) -> bool {
        self.facts.is_regular()
    }

    /// Both maps square to the identity.
    pub fn is_involutive(&self) -> bool {
        let sq = |m: &LinearEndo| m.compose(m).map(|s| s.is_identity()).unwrap_or(false);
        sq(&self.alpha) && sq(&self.beta)
    }

    pub fn has_identity_maps(&self) -> bool {
        self.alpha.is_identity() && self.beta.is_identity()
    }

    /// `Err(NotApplicable)` unless both maps are invertible morphisms.
    pub fn ensure_regular(&self, what: &str) -> Result<()> {
        let f = &self.facts;
        let missing = [
            (!f.alpha_multiplicative, "alpha is not multiplicative"),
            (!f.beta_multiplicative, "beta is not multiplicative"),
            (!f.alpha_invertible, "alpha is not invertible"),
            (!f.beta_invertible, "beta is not invertible"),
        ];
        match missing.iter().find(|(bad, _)| *bad) {
            Some((_, why)) => Err(AlgebraError::NotApplicable(format!("{what} needs a regular algebra: {why}"))),
            None => Ok(()),
        }
    }

    /// Nonconstant determinants of the structure maps, assumed nonzero
    /// whenever an inverse is used.
    pub fn inverse_side_conditions(&self) -> Vec<SideCondition> {
        let mut out: Vec<SideCondition> = Vec::new();
        for d in [&self.alpha_det, &self.beta_det] {
            if d.is_constant() {
                continue;
            }
            for c in side_conditions_for(&Element::from_coords(vec![d.clone()]), self.ring()) {
                if !out.contains(&c) {
                    out.push(c);
                }
            }
        }
        out
    }

    pub fn mul(&self, x: &Element, y: &Element) -> Result<Element> {
        self.algebra.mul(x, y)
    }

    /// The map `α^a ∘ β^b`; negative exponents use inverses.
    pub fn word(&self, a: i32, b: i32) -> Result<LinearEndo> {
        Ok(self.word_arc(a, b)?.map.clone())
    }

    /// Applies `α^a ∘ β^b` to `x`.
    pub fn apply_word(&self, a: i32, b: i32, x: &Element) -> Result<Element> {
        if a == 0 && b == 0 {
            self.algebra.check_dim(x)?;
            return Ok(x.clone());
        }
        let w = self.word_arc(a, b)?;
        if w.identity {
            self.algebra.check_dim(x)?;
            return Ok(x.clone());
        }
        w.map.apply(x)
    }

    fn word_arc(&self, a: i32, b: i32) -> Result<Arc<Word>> {
        let in_range = |k: i32| (WORD_MIN..=WORD_MAX).contains(&k);
        if in_range(a) && in_range(b) {
            let slot = (a - WORD_MIN) as usize * WORD_SPAN + (b - WORD_MIN) as usize;
            return self.words[slot].get_or_init(|| self.compute_word(a, b)).clone();
        }
        self.compute_word(a, b)
    }

    fn compute_word(&self, a: i32, b: i32) -> Result<Arc<Word>> {
        let map = if a != 0 && b != 0 {
            self.word_arc(a, 0)?.map.compose(&self.word_arc(0, b)?.map)?
        } else if a == 0 && b == 0 {
            LinearEndo::identity(self.dim())
        } else {
            let (k, base, name) = if a != 0 { (a, &self.alpha, "alpha") } else { (b, &self.beta, "beta") };
            let step = if k > 0 { base.clone() } else { base.inverse(name)? };
            let prev = if a != 0 {
                self.word_arc(a - a.signum(), 0)?
            } else {
                self.word_arc(0, b - b.signum())?
            };
            prev.map.compose(&step)?
        };
        let identity = map.is_identity();
        Ok(Arc::new(Word { map, identity }))
    }

    /// Same structure over an extension ring; facts are carried over.
    pub fn with_ring(&self, ring: &Ring) -> Result<BiHomAlgebra> {
        Ok(BiHomAlgebra::assemble(
            self.algebra.with_ring(ring)?,
            self.alpha.with_ring(ring)?,
            self.beta.with_ring(ring)?,
            self.facts.clone(),
            self.alpha_det.with_ring(ring)?,
            self.beta_det.with_ring(ring)?,
        ))
    }
}

impl std::fmt::Debug for BiHomAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("BiHomAlgebra")
            .field("algebra", &self.algebra)
            .field("alpha", &self.alpha)
            .field("beta", &self.beta)
            .field("facts", &self.facts)
            .finish()
    }
}
