use std::fmt;

use num_traits::{One, Zero};

use super::polynomial::fmt_rational;
use super::{Polynomial, Rational, Result, Ring, ScalarError};

/// Element of the fraction field `Q(vars)`.
///
/// Canonical form: numerator and denominator are coprime, the denominator is
/// integer-primitive with a positive leading coefficient, and zero is `0/1`.
/// Canonical forms are unique, so derived equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ScalarValue {
    num: Polynomial,
    den: Polynomial,
}

impl ScalarValue {
    pub fn zero() -> ScalarValue {
        ScalarValue::from_rational(Rational::zero())
    }

    pub fn one() -> ScalarValue {
        ScalarValue::from_rational(Rational::one())
    }

    pub fn from_int(n: i64) -> ScalarValue {
        ScalarValue::from_rational(Rational::from_integer(n.into()))
    }

    pub fn from_ratio(n: i64, d: i64) -> ScalarValue {
        ScalarValue::from_rational(Rational::new(n.into(), d.into()))
    }

    pub fn from_rational(c: Rational) -> ScalarValue {
        let ring = Ring::empty();
        ScalarValue {
            num: Polynomial::constant(&ring, c),
            den: Polynomial::one(&ring),
        }
    }

    pub fn from_polynomial(p: Polynomial) -> ScalarValue {
        let den = Polynomial::one(p.ring());
        ScalarValue { num: p, den }
    }

    /// The variable at position `index` of `ring`.
    pub fn var(ring: &Ring, index: usize) -> ScalarValue {
        ScalarValue::from_polynomial(Polynomial::var(ring, index))
    }

    /// Builds `num / den` and normalizes.
    pub fn fraction(num: Polynomial, den: Polynomial) -> Result<ScalarValue> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let ring = num.ring().join(den.ring())?;
        let mut num = num;
        let mut den = den;
        num.set_ring(&ring);
        den.set_ring(&ring);
        Ok(normalize(num, den))
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn ring(&self) -> &Ring {
        self.num.ring()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    /// True when no variable occurs in the value.
    pub fn is_constant(&self) -> bool {
        self.as_rational().is_some()
    }

    /// Variable indices occurring in numerator or denominator.
    pub fn variables(&self) -> Vec<usize> {
        let mut vars = self.num.variables();
        vars.extend(self.den.variables());
        vars.sort_unstable();
        vars.dedup();
        vars
    }

    /// Re-tags the value with a compatible ring (typically an extension).
    pub fn with_ring(&self, ring: &Ring) -> Result<ScalarValue> {
        Ok(ScalarValue {
            num: self.num.with_ring(ring)?,
            den: self.den.with_ring(ring)?,
        })
    }

    pub fn checked_add(&self, other: &ScalarValue) -> Result<ScalarValue> {
        if self.is_zero() {
            return other.with_joined_ring(self.ring());
        }
        if other.is_zero() {
            return self.with_joined_ring(other.ring());
        }
        if self.den.is_one() && other.den.is_one() {
            let num = self.num.checked_add(&other.num)?;
            let den = Polynomial::one(num.ring());
            return Ok(ScalarValue { num, den });
        }
        if self.den == other.den {
            let num = self.num.checked_add(&other.num)?;
            return ScalarValue::fraction(num, self.den.clone());
        }
        let num = self
            .num
            .checked_mul(&other.den)?
            .checked_add(&other.num.checked_mul(&self.den)?)?;
        let den = self.den.checked_mul(&other.den)?;
        ScalarValue::fraction(num, den)
    }

    pub fn checked_sub(&self, other: &ScalarValue) -> Result<ScalarValue> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &ScalarValue) -> Result<ScalarValue> {
        if self.is_zero() || other.is_zero() {
            let ring = self.ring().join(other.ring())?;
            return Ok(ScalarValue::zero().with_ring_unchecked(&ring));
        }
        if self.den.is_one() && other.den.is_one() {
            let num = self.num.checked_mul(&other.num)?;
            let den = Polynomial::one(num.ring());
            return Ok(ScalarValue { num, den });
        }
        let num = self.num.checked_mul(&other.num)?;
        let den = self.den.checked_mul(&other.den)?;
        ScalarValue::fraction(num, den)
    }

    pub fn checked_div(&self, other: &ScalarValue) -> Result<ScalarValue> {
        self.checked_mul(&other.inv()?)
    }

    pub fn inv(&self) -> Result<ScalarValue> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        ScalarValue::fraction(self.den.clone(), self.num.clone())
    }

    pub fn neg(&self) -> ScalarValue {
        ScalarValue {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn scale(&self, c: &Rational) -> ScalarValue {
        if c.is_zero() {
            return ScalarValue::zero().with_ring_unchecked(self.ring());
        }
        ScalarValue {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, exp: u32) -> ScalarValue {
        ScalarValue {
            num: self.num.pow(exp),
            den: self.den.pow(exp),
        }
    }

    /// Substitutes rational values for the given variables.
    pub fn substitute(&self, values: &[(usize, Rational)]) -> Result<ScalarValue> {
        let num = self.num.substitute(values);
        let den = self.den.substitute(values);
        ScalarValue::fraction(num, den)
    }

    /// Moves into `ring` after renaming variable indices.
    pub fn remap(&self, ring: &Ring, map: impl Fn(usize) -> usize + Copy) -> ScalarValue {
        normalize(self.num.remap(ring, map), self.den.remap(ring, map))
    }

    fn with_joined_ring(&self, other: &Ring) -> Result<ScalarValue> {
        let ring = self.ring().join(other)?;
        Ok(self.clone().with_ring_unchecked(&ring))
    }

    fn with_ring_unchecked(mut self, ring: &Ring) -> ScalarValue {
        self.num.set_ring(ring);
        self.den.set_ring(ring);
        self
    }
}

fn normalize(num: Polynomial, den: Polynomial) -> ScalarValue {
    let ring = num.ring().clone();
    if num.is_zero() {
        return ScalarValue {
            num,
            den: Polynomial::one(&ring),
        };
    }
    if let Some(c) = den.as_constant() {
        return ScalarValue {
            num: num.scale(&c.recip()),
            den: Polynomial::one(&ring),
        };
    }
    if let Some(q) = num.div_exact(&den) {
        return ScalarValue {
            num: q,
            den: Polynomial::one(&ring),
        };
    }
    let g = num.gcd(&den);
    let (num, den) = if g.is_constant() {
        (num, den)
    } else {
        (
            num.div_exact(&g).expect("gcd divides numerator"),
            den.div_exact(&g).expect("gcd divides denominator"),
        )
    };
    let c = den.content().recip();
    ScalarValue {
        num: num.scale(&c),
        den: den.scale(&c),
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait<&ScalarValue> for &ScalarValue {
            type Output = ScalarValue;
            /// Panics on ring mismatch; use the `checked_*` form for fallible input.
            fn $method(self, rhs: &ScalarValue) -> ScalarValue {
                self.$checked(rhs).expect("scalar ring mismatch")
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl std::ops::Neg for &ScalarValue {
    type Output = ScalarValue;
    fn neg(self) -> ScalarValue {
        ScalarValue::neg(self)
    }
}

impl From<i64> for ScalarValue {
    fn from(n: i64) -> ScalarValue {
        ScalarValue::from_int(n)
    }
}

impl From<Rational> for ScalarValue {
    fn from(c: Rational) -> ScalarValue {
        ScalarValue::from_rational(c)
    }
}

fn needs_parens(p: &Polynomial) -> bool {
    p.terms().len() > 1
}

impl ScalarValue {
    /// True when printing needs parentheses to be used as a factor.
    pub fn is_compound(&self) -> bool {
        !self.den.is_one() || needs_parens(&self.num)
    }
}

impl fmt::Display for ScalarValue {
    /// Prints in the coefficient grammar; the output parses back to an equal
    /// value.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            if let Some(c) = self.num.as_constant() {
                return fmt_rational(&c, f);
            }
            return write!(f, "{}", self.num);
        }
        if needs_parens(&self.num) {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        let simple_den = match self.den.terms() {
            [(m, c)] => c.is_one() && m.powers().count() == 1,
            _ => false,
        };
        if simple_den {
            write!(f, "/{}", self.den)
        } else {
            write!(f, "/({})", self.den)
        }
    }
}

impl fmt::Debug for ScalarValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ScalarValue({self})")
    }
}
