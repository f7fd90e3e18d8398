use std::cmp::Ordering;

use smallvec::SmallVec;

/// Power product of ring variables, stored as `(variable index, exponent)`
/// pairs sorted by index. Exponents are always positive.
///
/// The `Ord` impl is the graded lexicographic order in which the first ring
/// variable is the largest.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    powers: SmallVec<[(u32, u32); 4]>,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial::default()
    }

    pub fn var(index: usize) -> Monomial {
        Monomial::power(index, 1)
    }

    pub fn power(index: usize, exp: u32) -> Monomial {
        let mut powers = SmallVec::new();
        if exp > 0 {
            powers.push((index as u32, exp));
        }
        Monomial { powers }
    }

    /// Builds from arbitrary pairs; repeated indices are merged and zero
    /// exponents dropped.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, u32)>) -> Monomial {
        let mut powers: SmallVec<[(u32, u32); 4]> =
            pairs.into_iter().map(|(v, e)| (v as u32, e)).collect();
        powers.sort_unstable_by_key(|p| p.0);
        let mut merged: SmallVec<[(u32, u32); 4]> = SmallVec::new();
        for (v, e) in powers {
            match merged.last_mut() {
                Some(last) if last.0 == v => last.1 += e,
                _ => merged.push((v, e)),
            }
        }
        merged.retain(|p| p.1 > 0);
        Monomial { powers: merged }
    }

    pub fn is_one(&self) -> bool {
        self.powers.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.powers.iter().map(|p| p.1).sum()
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.powers
            .iter()
            .find(|p| p.0 as usize == var)
            .map_or(0, |p| p.1)
    }

    pub fn powers(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.powers.iter().map(|&(v, e)| (v as usize, e))
    }

    /// Largest variable index present, if any.
    pub fn max_var(&self) -> Option<usize> {
        self.powers.last().map(|p| p.0 as usize)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.powers, &other.powers);
        let mut out = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial { powers: out }
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = SmallVec::new();
        let mut j = 0;
        for &(v, e) in &self.powers {
            if j < other.powers.len() && other.powers[j].0 < v {
                return None;
            }
            if j < other.powers.len() && other.powers[j].0 == v {
                let d = other.powers[j].1;
                j += 1;
                match e.cmp(&d) {
                    Ordering::Less => return None,
                    Ordering::Equal => continue,
                    Ordering::Greater => out.push((v, e - d)),
                }
            } else {
                out.push((v, e));
            }
        }
        if j < other.powers.len() {
            return None;
        }
        Some(Monomial { powers: out })
    }

    /// Componentwise minimum of exponents.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out = SmallVec::new();
        for &(v, e) in &self.powers {
            let d = other.exponent(v as usize);
            if d > 0 {
                out.push((v, e.min(d)));
            }
        }
        Monomial { powers: out }
    }

    /// Removes `var` entirely, returning its exponent and the remainder.
    pub fn split_var(&self, var: usize) -> (u32, Monomial) {
        let mut exp = 0;
        let mut rest = SmallVec::new();
        for &(v, e) in &self.powers {
            if v as usize == var {
                exp = e;
            } else {
                rest.push((v, e));
            }
        }
        (exp, Monomial { powers: rest })
    }

    /// Renames variable indices through `map`; the map must be injective on
    /// the variables present.
    pub fn remap(&self, map: impl Fn(usize) -> usize) -> Monomial {
        Monomial::from_pairs(self.powers().map(|(v, e)| (map(v), e)))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Monomial) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (a, b) = (&self.powers, &other.powers);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            if a[i].0 != b[j].0 {
                // The side holding the smaller index has a positive exponent
                // where the other has zero.
                return if a[i].0 < b[j].0 {
                    Ordering::Greater
                } else {
                    Ordering::Less
                };
            }
            match a[i].1.cmp(&b[j].1) {
                Ordering::Equal => {}
                ord => return ord,
            }
            i += 1;
            j += 1;
        }
        (a.len() - i).cmp(&(b.len() - j))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Monomial) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(pairs: &[(usize, u32)]) -> Monomial {
        Monomial::from_pairs(pairs.iter().copied())
    }

    #[test]
    fn grlex_order() {
        // x > y > 1, x^2 > xy > y^2, degree dominates
        let (x, y) = (m(&[(0, 1)]), m(&[(1, 1)]));
        assert!(x > y);
        assert!(y > Monomial::one());
        assert!(m(&[(0, 2)]) > m(&[(0, 1), (1, 1)]));
        assert!(m(&[(0, 1), (1, 1)]) > m(&[(1, 2)]));
        assert!(m(&[(1, 3)]) > m(&[(0, 2)]));
        assert!(m(&[(0, 1), (2, 1)]) > m(&[(1, 2)]));
    }

    #[test]
    fn mul_and_div() {
        let a = m(&[(0, 2), (3, 1)]);
        let b = m(&[(1, 1), (3, 2)]);
        let p = a.mul(&b);
        assert_eq!(p, m(&[(0, 2), (1, 1), (3, 3)]));
        assert_eq!(p.div(&b), Some(a.clone()));
        assert_eq!(a.div(&b), None);
        assert_eq!(a.gcd(&b), m(&[(3, 1)]));
    }
}
