//! Multivariate polynomial gcd over the rationals.
//!
//! Recursive primitive-remainder sequences: the lowest-index variable present
//! is the main variable, coefficients are polynomials in the remaining ones.

use num_traits::One;

use super::{Monomial, Polynomial, Rational};

impl Polynomial {
    /// Greatest common divisor, normalized to integer-primitive form with a
    /// positive leading coefficient. `gcd(0, 0)` is zero.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() {
            return other.primitive();
        }
        if other.is_zero() {
            return self.primitive();
        }
        if self.is_constant() || other.is_constant() {
            return Polynomial::one(self.ring());
        }
        // Pull out the common monomial factor first; it is cheap and keeps the
        // remainder sequences short for the common sparse cases.
        let ma = self.monomial_content();
        let mb = other.monomial_content();
        let mono = ma.gcd(&mb);
        let a = strip_monomial(self, &ma);
        let b = strip_monomial(other, &mb);
        let g = gcd_recursive(&a, &b);
        g.mul_monomial(&mono, &Rational::one()).primitive()
    }
}

fn strip_monomial(p: &Polynomial, m: &Monomial) -> Polynomial {
    if m.is_one() {
        p.clone()
    } else {
        p.div_exact(&Polynomial::monomial(p.ring(), m.clone(), Rational::one()))
            .expect("monomial content divides")
    }
}

fn gcd_recursive(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_zero() {
        return b.primitive();
    }
    if b.is_zero() {
        return a.primitive();
    }
    if a.is_constant() || b.is_constant() {
        return Polynomial::one(a.ring());
    }
    let va = a.variables();
    let vb = b.variables();
    let main = va[0].min(vb[0]);
    if a.degree_in(main) == 0 {
        return gcd_recursive(a, &content_in(b, main));
    }
    if b.degree_in(main) == 0 {
        return gcd_recursive(&content_in(a, main), b);
    }
    let ca = content_in(a, main);
    let cb = content_in(b, main);
    let c = gcd_recursive(&ca, &cb);
    let mut r0 = a.div_exact(&ca).expect("content divides");
    let mut r1 = b.div_exact(&cb).expect("content divides");
    if r0.degree_in(main) < r1.degree_in(main) {
        std::mem::swap(&mut r0, &mut r1);
    }
    loop {
        let r = pseudo_remainder(&r0, &r1, main);
        if r.is_zero() {
            break;
        }
        if r.degree_in(main) == 0 {
            r1 = Polynomial::one(a.ring());
            break;
        }
        r0 = r1;
        r1 = primitive_part_in(&r, main);
    }
    (&primitive_part_in(&r1, main) * &c).primitive()
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `var`.
fn content_in(p: &Polynomial, var: usize) -> Polynomial {
    let mut acc = Polynomial::zero(p.ring());
    for coeff in p.coefficients_in(var).values() {
        acc = gcd_recursive(&acc, coeff);
        if acc.is_one() {
            break;
        }
    }
    acc
}

fn primitive_part_in(p: &Polynomial, var: usize) -> Polynomial {
    let c = content_in(p, var);
    p.div_exact(&c).expect("content divides").primitive()
}

fn leading_coefficient_in(p: &Polynomial, var: usize) -> (u32, Polynomial) {
    let coeffs = p.coefficients_in(var);
    let (&deg, lc) = coeffs.iter().next_back().expect("nonzero polynomial");
    (deg, lc.clone())
}

/// `lc(b)^k * a mod b` in `var`, computed term by term.
fn pseudo_remainder(a: &Polynomial, b: &Polynomial, var: usize) -> Polynomial {
    let (db, lb) = leading_coefficient_in(b, var);
    let mut r = a.clone();
    while !r.is_zero() {
        let (dr, lr) = leading_coefficient_in(&r, var);
        if dr < db {
            break;
        }
        let shift = Polynomial::monomial(r.ring(), Monomial::power(var, dr - db), Rational::one());
        r = &(&r * &lb) - &(&(&lr * &shift) * b);
    }
    if r.is_zero() {
        return r;
    }
    r.primitive()
}
