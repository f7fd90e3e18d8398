use std::fmt;

/// Permutation of argument slots. Acting on a tuple `t` gives the tuple whose
/// `k`-th entry is `t[images[k]]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Returns `None` unless `images` is a bijection of `0..images.len()`.
    pub fn new(images: Vec<usize>) -> Option<Permutation> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return None;
            }
        }
        Some(Permutation { images })
    }

    pub fn identity(arity: usize) -> Permutation {
        Permutation {
            images: (0..arity).collect(),
        }
    }

    /// `(w,x,y,z) ↦ (z,w,x,y)`.
    pub fn xi4() -> Permutation {
        Permutation { images: vec![3, 0, 1, 2] }
    }

    /// `(w,x,y,z) ↦ (x,y,z,w)`, equal to `xi4` cubed.
    pub fn rho() -> Permutation {
        Permutation { images: vec![1, 2, 3, 0] }
    }

    /// `(w,x,y,z) ↦ (y,z,w,x)`.
    pub fn zeta() -> Permutation {
        Permutation { images: vec![2, 3, 0, 1] }
    }

    /// `(w,x,y,z) ↦ (w,x,z,y)`.
    pub fn eta() -> Permutation {
        Permutation { images: vec![0, 1, 3, 2] }
    }

    /// `(x,y,z) ↦ (z,x,y)`.
    pub fn xi3() -> Permutation {
        Permutation { images: vec![2, 0, 1] }
    }

    /// `(x,y,z) ↦ (x,z,y)`.
    pub fn delta() -> Permutation {
        Permutation { images: vec![0, 2, 1] }
    }

    /// `(x,y) ↦ (y,x)`.
    pub fn tau() -> Permutation {
        Permutation { images: vec![1, 0] }
    }

    pub fn arity(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply<T: Clone>(&self, tuple: &[T]) -> Vec<T> {
        assert_eq!(tuple.len(), self.arity(), "permutation arity mismatch");
        self.images.iter().map(|&i| tuple[i].clone()).collect()
    }

    /// The permutation acting as `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.arity(), other.arity(), "permutation arity mismatch");
        Permutation {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Permutation {
        (0..exp).fold(Permutation::identity(self.arity()), |acc, _| acc.compose(self))
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.arity()];
        for (k, &i) in self.images.iter().enumerate() {
            images[i] = k;
        }
        Permutation { images }
    }

    /// `+1` for even permutations, `-1` for odd ones.
    pub fn sign(&self) -> i64 {
        let mut seen = vec![false; self.arity()];
        let mut sign = 1;
        for start in 0..self.arity() {
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
                len += 1;
            }
            if len > 0 && len % 2 == 0 {
                sign = -sign;
            }
        }
        sign
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_actions() {
        let t = ['w', 'x', 'y', 'z'];
        assert_eq!(Permutation::xi4().apply(&t), ['z', 'w', 'x', 'y']);
        assert_eq!(Permutation::zeta().apply(&t), ['y', 'z', 'w', 'x']);
        assert_eq!(Permutation::eta().apply(&t), ['w', 'x', 'z', 'y']);
        assert_eq!(Permutation::rho().apply(&t), ['x', 'y', 'z', 'w']);
        assert_eq!(Permutation::delta().apply(&['x', 'y', 'z']), ['x', 'z', 'y']);
        assert_eq!(Permutation::xi3().apply(&['x', 'y', 'z']), ['z', 'x', 'y']);
    }

    #[test]
    fn rho_and_xi_relations() {
        assert_eq!(Permutation::xi4().pow(3), Permutation::rho());
        assert_eq!(Permutation::rho().pow(3), Permutation::xi4());
        assert_eq!(Permutation::xi4().pow(2), Permutation::zeta());
        assert_eq!(Permutation::xi4().pow(4), Permutation::identity(4));
    }

    #[test]
    fn compose_acts_right_to_left() {
        let t = [0, 1, 2, 3];
        let (a, b) = (Permutation::xi4(), Permutation::eta());
        assert_eq!(a.compose(&b).apply(&t), a.apply(&b.apply(&t)));
        assert_eq!(a.compose(&a.inverse()), Permutation::identity(4));
        assert_eq!(Permutation::eta().sign(), -1);
        assert_eq!(Permutation::xi4().sign(), -1);
        assert_eq!(Permutation::xi3().sign(), 1);
        assert!(Permutation::new(vec![0, 0]).is_none());
    }
}
