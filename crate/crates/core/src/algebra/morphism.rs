use rayon::prelude::*;

use crate::report::{IdentityReport, Witness};
use crate::scalar::Ring;

use super::{Algebra, Element, LinearEndo, Result};

/// Checks `L(e_i e_j) = L(e_i) L(e_j)` on every basis pair.
pub fn is_morphism(a: &Algebra, l: &LinearEndo) -> IdentityReport {
    let n = a.dim();
    if l.dim() != n {
        return IdentityReport::not_applicable("morphism", format!("map has dimension {}, algebra {n}", l.dim()));
    }
    let images: Vec<Element> = (0..n).map(|j| l.column(j)).collect();
    let failure = (0..n * n).into_par_iter().find_map_first(|t| {
        let (i, j) = (t / n, t % n);
        let residual = (|| -> Result<Element> {
            let lhs = l.apply(&a.basis_product(i, j))?;
            let rhs = a.mul(&images[i], &images[j])?;
            Ok(&lhs - &rhs)
        })();
        match residual {
            Ok(r) if r.is_zero() => None,
            other => Some((i, j, other)),
        }
    });
    match failure {
        None => IdentityReport::holds("morphism"),
        Some((_, _, Err(e))) => IdentityReport::not_applicable("morphism", e.to_string()),
        Some((i, j, Ok(r))) => IdentityReport::failure("morphism", Witness::Basis(vec![i, j]), r, &params(a.ring(), l)),
    }
}

/// Checks `αβ(e_j) = βα(e_j)` on every basis vector.
pub fn maps_commute(alpha: &LinearEndo, beta: &LinearEndo, ring: &Ring) -> IdentityReport {
    let n = alpha.dim();
    if beta.dim() != n {
        return IdentityReport::not_applicable("maps_commute", "maps have different dimensions");
    }
    for j in 0..n {
        let e = Element::basis(n, j);
        let r = alpha
            .apply(&e)
            .and_then(|x| beta.apply(&x))
            .and_then(|ba| Ok(&alpha.apply(&beta.apply(&e)?)? - &ba));
        match r {
            Ok(r) if r.is_zero() => {}
            Ok(r) => return IdentityReport::failure("maps_commute", Witness::Basis(vec![j]), r, ring),
            Err(e) => return IdentityReport::not_applicable("maps_commute", e.to_string()),
        }
    }
    IdentityReport::holds("maps_commute")
}

fn params(ring: &Ring, l: &LinearEndo) -> Ring {
    l.entries()
        .iter()
        .try_fold(ring.clone(), |r, c| r.join(c.ring()))
        .unwrap_or_else(|_| ring.clone())
}
