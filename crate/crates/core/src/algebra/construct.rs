use crate::report::Verdict;

use super::{is_morphism, maps_commute, Algebra, AlgebraError, BiHomAlgebra, Element, LinearEndo, Result};

/// Whether a construction verifies its hypotheses before building.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Preconditions {
    #[default]
    Verify,
    /// Build regardless; the result may violate the usual guarantees.
    Force,
}

/// The induced algebra with product `μ(α x, β y)` and the same maps.
pub fn twist(a: &Algebra, alpha: &LinearEndo, beta: &LinearEndo, pre: Preconditions) -> Result<BiHomAlgebra> {
    for m in [alpha, beta] {
        if m.dim() != a.dim() {
            return Err(AlgebraError::DimensionMismatch {
                expected: a.dim(),
                found: m.dim(),
            });
        }
    }
    if pre == Preconditions::Verify {
        let ring = a.ring();
        let checks = [
            ("alpha is not an algebra morphism", is_morphism(a, alpha)),
            ("beta is not an algebra morphism", is_morphism(a, beta)),
            ("alpha and beta do not commute", maps_commute(alpha, beta, ring)),
        ];
        for (fact, report) in checks {
            if report.verdict != Verdict::Holds {
                return Err(AlgebraError::Refused(fact.into()));
            }
        }
    }
    let n = a.dim();
    let images_a: Vec<_> = (0..n).map(|j| alpha.column(j)).collect();
    let images_b: Vec<_> = (0..n).map(|j| beta.column(j)).collect();
    let mut ring = a.ring().clone();
    for m in [alpha, beta] {
        for c in m.entries() {
            ring = ring.join(c.ring())?;
        }
    }
    let base = a.with_ring(&ring)?;
    let product = Algebra::from_fn(a.basis().to_vec(), ring, |i, j| base.mul(&images_a[i], &images_b[j]))?;
    BiHomAlgebra::new(product, alpha.clone(), beta.clone())
}

/// Commutator algebra with bracket `μ(x,y) − μ(α⁻¹β y, αβ⁻¹ x)`.
pub fn minus_algebra(b: &BiHomAlgebra) -> Result<BiHomAlgebra> {
    b.ensure_regular("the commutator algebra")?;
    let n = b.dim();
    let product = Algebra::from_fn(b.basis().to_vec(), b.ring().clone(), |i, j| {
        b.bracket(&Element::basis(n, i), &Element::basis(n, j))
    })?;
    BiHomAlgebra::new(product, b.alpha().clone(), b.beta().clone())
}

/// Plus algebra with product `½(μ(x,y) + μ(α⁻¹β y, αβ⁻¹ x))`.
pub fn plus_algebra(b: &BiHomAlgebra) -> Result<BiHomAlgebra> {
    b.ensure_regular("the plus algebra")?;
    let n = b.dim();
    let product = Algebra::from_fn(b.basis().to_vec(), b.ring().clone(), |i, j| {
        b.plus_product(&Element::basis(n, i), &Element::basis(n, j))
    })?;
    BiHomAlgebra::new(product, b.alpha().clone(), b.beta().clone())
}

/// Plain algebra with product `μ(α⁻¹ x, β⁻¹ y)`.
pub fn untwist_star(b: &BiHomAlgebra) -> Result<Algebra> {
    b.ensure_regular("untwisting")?;
    untwist_with(b, (-1, 0), (0, -1))
}

/// Plain algebra with product `μ(α x, β y)`, for involutive maps.
pub fn untwist_star_involutive(b: &BiHomAlgebra) -> Result<Algebra> {
    if !b.is_involutive() {
        return Err(AlgebraError::NotApplicable("the involutive untwist needs α² = β² = id".into()));
    }
    if !(b.facts().alpha_multiplicative && b.facts().beta_multiplicative) {
        return Err(AlgebraError::NotApplicable("the involutive untwist needs multiplicative maps".into()));
    }
    untwist_with(b, (1, 0), (0, 1))
}

fn untwist_with(b: &BiHomAlgebra, left: (i32, i32), right: (i32, i32)) -> Result<Algebra> {
    let n = b.dim();
    Algebra::from_fn(b.basis().to_vec(), b.ring().clone(), |i, j| {
        b.mul_words(&Element::basis(n, i), left, &Element::basis(n, j), right)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Ring, ScalarValue};

    fn dual_numbers() -> Algebra {
        let mut a = Algebra::new(vec!["1".into(), "t".into()], Ring::empty()).unwrap();
        a.set_product(0, 0, &Element::basis(2, 0)).unwrap();
        a.set_product(0, 1, &Element::basis(2, 1)).unwrap();
        a.set_product(1, 0, &Element::basis(2, 1)).unwrap();
        a
    }

    fn half_t() -> LinearEndo {
        LinearEndo::from_rows(vec![
            vec![ScalarValue::one(), ScalarValue::zero()],
            vec![ScalarValue::zero(), ScalarValue::from_ratio(1, 2)],
        ])
        .unwrap()
    }

    #[test]
    fn twist_by_identity_is_unchanged() {
        let a = dual_numbers();
        let id = LinearEndo::identity(2);
        let t = twist(&a, &id, &id, Preconditions::Verify).unwrap();
        assert_eq!(t.algebra(), &a);
    }

    #[test]
    fn twist_refuses_non_morphism() {
        let a = dual_numbers();
        let two = LinearEndo::from_rows(vec![
            vec![ScalarValue::from_int(2), ScalarValue::zero()],
            vec![ScalarValue::zero(), ScalarValue::one()],
        ])
        .unwrap();
        let id = LinearEndo::identity(2);
        assert!(matches!(
            twist(&a, &two, &id, Preconditions::Verify),
            Err(AlgebraError::Refused(msg)) if msg.contains("alpha")
        ));
        assert!(twist(&a, &two, &id, Preconditions::Force).is_ok());
    }

    #[test]
    fn untwist_recovers_base() {
        let a = dual_numbers();
        let t = twist(&a, &half_t(), &LinearEndo::identity(2), Preconditions::Verify).unwrap();
        assert_eq!(untwist_star(&t).unwrap(), a);
    }

    #[test]
    fn commutative_algebra_has_zero_bracket() {
        let b = BiHomAlgebra::with_identity_maps(dual_numbers());
        let m = minus_algebra(&b).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert!(m.algebra().product_terms(i, j).is_empty());
            }
        }
        assert_eq!(plus_algebra(&b).unwrap().algebra(), b.algebra());
    }
}
