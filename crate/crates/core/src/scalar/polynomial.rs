use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Monomial, Rational, Result, Ring};

/// Sparse polynomial over the rationals.
///
/// Terms are kept sorted by strictly decreasing monomial (graded lex) with no
/// zero coefficients, so structural equality is polynomial equality.
#[derive(Clone)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(Monomial, Rational)>,
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Ring) -> Polynomial {
        Polynomial::constant(ring, Rational::one())
    }

    pub fn constant(ring: &Ring, c: Rational) -> Polynomial {
        Polynomial::monomial(ring, Monomial::one(), c)
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: Rational) -> Polynomial {
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// The variable at position `index` of `ring`.
    pub fn var(ring: &Ring, index: usize) -> Polynomial {
        assert!(index < ring.len(), "variable index out of range");
        Polynomial::monomial(ring, Monomial::var(index), Rational::one())
    }

    /// Collects terms in any order, merging duplicates.
    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Polynomial {
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in terms {
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        Polynomial::from_map(ring, acc)
    }

    fn from_map(ring: &Ring, acc: BTreeMap<Monomial, Rational>) -> Polynomial {
        let terms = acc.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect();
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// The value when the polynomial has no variables.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    pub fn leading_term(&self) -> Option<&(Monomial, Rational)> {
        self.terms.first()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    /// Indices of variables that occur with a nonzero coefficient.
    pub fn variables(&self) -> Vec<usize> {
        let mut vars: Vec<usize> = self
            .terms
            .iter()
            .flat_map(|(m, _)| m.powers().map(|(v, _)| v))
            .collect();
        vars.sort_unstable();
        vars.dedup();
        vars
    }

    /// Moves the polynomial into a compatible (usually larger) ring.
    pub fn with_ring(&self, ring: &Ring) -> Result<Polynomial> {
        if !self.ring.is_prefix_of(ring) && !self.is_constant() {
            self.ring.join(ring)?;
            if self.variables().last().is_some_and(|&v| v >= ring.len()) {
                return Err(super::ScalarError::RingMismatch {
                    left: self.ring.vars().join(","),
                    right: ring.vars().join(","),
                });
            }
        }
        Ok(Polynomial {
            ring: ring.clone(),
            terms: self.terms.clone(),
        })
    }

    pub(crate) fn set_ring(&mut self, ring: &Ring) {
        self.ring = ring.clone();
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        let ring = self.ring.join(&other.ring)?;
        Ok(Polynomial {
            ring,
            terms: merge(&self.terms, &other.terms, false),
        })
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        let ring = self.ring.join(&other.ring)?;
        Ok(Polynomial {
            ring,
            terms: merge(&self.terms, &other.terms, true),
        })
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        let ring = self.ring.join(&other.ring)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&ring));
        }
        if let Some(c) = self.as_constant() {
            return Ok(other.scale(&c).with_ring_unchecked(ring));
        }
        if let Some(c) = other.as_constant() {
            return Ok(self.scale(&c).with_ring_unchecked(ring));
        }
        if self.terms.len() == 1 || other.terms.len() == 1 {
            // Multiplying by a single term preserves the order.
            let (single, many) = if self.terms.len() == 1 {
                (&self.terms[0], &other.terms)
            } else {
                (&other.terms[0], &self.terms)
            };
            let terms = many
                .iter()
                .map(|(m, c)| (m.mul(&single.0), c * &single.1))
                .collect();
            return Ok(Polynomial { ring, terms });
        }
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let prod = ca * cb;
                acc.entry(ma.mul(mb))
                    .and_modify(|c| *c += &prod)
                    .or_insert(prod);
            }
        }
        Ok(Polynomial::from_map(&ring, acc))
    }

    fn with_ring_unchecked(mut self, ring: Ring) -> Polynomial {
        self.ring = ring;
        self
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(k, d)| (k.mul(m), d * c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Polynomial {
        let mut result = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder. Panics if `divisor` is zero.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let (lead_m, lead_c) = divisor.leading_term().expect("division by zero polynomial");
        if divisor.terms.len() == 1 {
            let terms: Option<Vec<_>> = self
                .terms
                .iter()
                .map(|(m, c)| m.div(lead_m).map(|q| (q, c / lead_c)))
                .collect();
            return terms.map(|terms| Polynomial {
                ring: self.ring.clone(),
                terms,
            });
        }
        let ring = self.ring.join(&divisor.ring).ok()?;
        let mut rem = self.clone();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.div(lead_m)?;
            let qc = c / lead_c;
            rem = &rem - &divisor.mul_monomial(&qm, &qc);
            quotient.push((qm, qc));
        }
        // Leading monomials of successive remainders strictly decrease, so
        // the quotient terms come out sorted.
        Some(Polynomial {
            ring,
            terms: quotient,
        })
    }

    /// Positive rational `c` such that `self / c` has coprime integer
    /// coefficients; the sign is taken from the leading coefficient.
    pub fn content(&self) -> Rational {
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for (_, c) in &self.terms {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        if num_gcd.is_zero() {
            return Rational::one();
        }
        let content = Rational::new(num_gcd, den_lcm);
        match self.leading_term() {
            Some((_, c)) if c.is_negative() => -content,
            _ => content,
        }
    }

    /// Integer-primitive form with positive leading coefficient.
    pub fn primitive(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.content().recip())
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut iter = self.terms.iter();
        let Some((first, _)) = iter.next() else {
            return Monomial::one();
        };
        iter.fold(first.clone(), |acc, (m, _)| acc.gcd(m))
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.exponent(var)).max().unwrap_or(0)
    }

    /// Coefficients with respect to `var`, keyed by its exponent.
    pub fn coefficients_in(&self, var: usize) -> BTreeMap<u32, Polynomial> {
        let mut groups: BTreeMap<u32, Vec<(Monomial, Rational)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (e, rest) = m.split_var(var);
            groups.entry(e).or_default().push((rest, c.clone()));
        }
        groups
            .into_iter()
            .map(|(e, terms)| (e, Polynomial::from_terms(&self.ring, terms)))
            .collect()
    }

    /// Substitutes rational values for some variables and leaves the rest.
    pub fn substitute(&self, values: &[(usize, Rational)]) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| {
            let mut coeff = c.clone();
            let mut rest = Vec::new();
            for (v, e) in m.powers() {
                match values.iter().find(|(k, _)| *k == v) {
                    Some((_, val)) => coeff *= num_traits::pow(val.clone(), e as usize),
                    None => rest.push((v, e)),
                }
            }
            (Monomial::from_pairs(rest), coeff)
        });
        Polynomial::from_terms(&self.ring, terms.collect::<Vec<_>>())
    }

    /// Re-expresses the polynomial in `ring` after renaming variable indices.
    pub fn remap(&self, ring: &Ring, map: impl Fn(usize) -> usize) -> Polynomial {
        Polynomial::from_terms(
            ring,
            self.terms
                .iter()
                .map(|(m, c)| (m.remap(&map), c.clone()))
                .collect::<Vec<_>>(),
        )
    }
}

fn merge(a: &[(Monomial, Rational)], b: &[(Monomial, Rational)], negate_b: bool) -> Vec<(Monomial, Rational)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let take_b = |c: &Rational| if negate_b { -c } else { c.clone() };
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Less => {
                out.push((b[j].0.clone(), take_b(&b[j].1)));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let c = if negate_b {
                    &a[i].1 - &b[j].1
                } else {
                    &a[i].1 + &b[j].1
                };
                if !c.is_zero() {
                    out.push((a[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    out.extend(b[j..].iter().map(|(m, c)| (m.clone(), take_b(c))));
    out
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Polynomial) -> bool {
        self.terms == other.terms
            && (self.is_constant() || self.ring.join(&other.ring).is_ok())
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).expect("polynomial ring mismatch")
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

pub(crate) fn fmt_rational(c: &Rational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if c.denom().is_one() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

pub(crate) fn fmt_monomial(ring: &Ring, m: &Monomial, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    for (i, (v, e)) in m.powers().enumerate() {
        if i > 0 {
            f.write_str("*")?;
        }
        let name = if v < ring.len() { ring.name(v).to_string() } else { format!("?{v}") };
        if e == 1 {
            f.write_str(&name)?;
        } else {
            write!(f, "{name}^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            if i > 0 {
                f.write_str(if negative { "-" } else { "+" })?;
            } else if negative {
                f.write_str("-")?;
            }
            let abs = c.abs();
            if m.is_one() {
                fmt_rational(&abs, f)?;
            } else {
                if !abs.is_one() {
                    fmt_rational(&abs, f)?;
                    f.write_str("*")?;
                }
                fmt_monomial(&self.ring, m, f)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}
