//! Multilinear functions built from the product and the structure maps.

use crate::scalar::Rational;

use super::{BiHomAlgebra, Element, Permutation, Result};

impl BiHomAlgebra {
    /// `μ(μ(x,y), β(z)) − μ(α(x), μ(y,z))`.
    pub fn associator(&self, x: &Element, y: &Element, z: &Element) -> Result<Element> {
        let left = self.mul(&self.mul(x, y)?, &self.apply_word(0, 1, z)?)?;
        let right = self.mul(&self.apply_word(1, 0, x)?, &self.mul(y, z)?)?;
        Ok(&left - &right)
    }

    /// Cyclic sum of `μ(β²(x), μ(β(y), α(z)))`.
    pub fn jacobiator(&self, x: &Element, y: &Element, z: &Element) -> Result<Element> {
        let term = |a: &Element, b: &Element, c: &Element| -> Result<Element> {
            let inner = self.mul(&self.apply_word(0, 1, b)?, &self.apply_word(1, 0, c)?)?;
            self.mul(&self.apply_word(0, 2, a)?, &inner)
        };
        let s = &term(x, y, z)? + &term(z, x, y)?;
        Ok(&s + &term(y, z, x)?)
    }

    /// `μ(x,y) − μ(α⁻¹β(y), αβ⁻¹(x))`.
    pub fn bracket(&self, x: &Element, y: &Element) -> Result<Element> {
        let swapped = self.mul(&self.apply_word(-1, 1, y)?, &self.apply_word(1, -1, x)?)?;
        Ok(&self.mul(x, y)? - &swapped)
    }

    /// `½(μ(x,y) + μ(α⁻¹β(y), αβ⁻¹(x)))`.
    pub fn plus_product(&self, x: &Element, y: &Element) -> Result<Element> {
        let swapped = self.mul(&self.apply_word(-1, 1, y)?, &self.apply_word(1, -1, x)?)?;
        Ok((&self.mul(x, y)? + &swapped).scale_rational(&Rational::new(1.into(), 2.into())))
    }

    /// `μ(α^a β^b x, α^c β^d y)`.
    pub(crate) fn mul_words(&self, x: &Element, (a, b): (i32, i32), y: &Element, (c, d): (i32, i32)) -> Result<Element> {
        self.mul(&self.apply_word(a, b, x)?, &self.apply_word(c, d, y)?)
    }

    /// `as(α^a β^b x, α^c β^d y, α^e β^f z)`.
    pub(crate) fn associator_words(
        &self,
        x: &Element,
        wx: (i32, i32),
        y: &Element,
        wy: (i32, i32),
        z: &Element,
        wz: (i32, i32),
    ) -> Result<Element> {
        self.associator(
            &self.apply_word(wx.0, wx.1, x)?,
            &self.apply_word(wy.0, wy.1, y)?,
            &self.apply_word(wz.0, wz.1, z)?,
        )
    }

    /// `as(β²(x)·αβ(y), α²β(z), α³(w))`, the building block of `H` and `f`.
    fn product_associator(&self, x: &Element, y: &Element, z: &Element, w: &Element) -> Result<Element> {
        let p = self.mul_words(x, (0, 2), y, (1, 1))?;
        self.associator(&p, &self.apply_word(2, 1, z)?, &self.apply_word(3, 0, w)?)
    }

    /// `H(w,x,y,z)`: alternating sum of associators of products.
    pub fn h_function(&self, w: &Element, x: &Element, y: &Element, z: &Element) -> Result<Element> {
        let a = self.product_associator(w, x, y, z)?;
        let b = self.product_associator(x, y, z, w)?;
        let c = self.product_associator(y, z, w, x)?;
        Ok(&(&a - &b) + &c)
    }

    /// Bruck-Kleinfeld function
    /// `as(β²w·αβx, α²βy, α³z) − as(β²x, αβy, α²z)·α³βw − α²β²x·as(αβw, α²y, α³β⁻¹z)`.
    pub fn bk_f(&self, w: &Element, x: &Element, y: &Element, z: &Element) -> Result<Element> {
        let first = self.product_associator(w, x, y, z)?;
        let as2 = self.associator_words(x, (0, 2), y, (1, 1), z, (2, 0))?;
        let second = self.mul(&as2, &self.apply_word(3, 1, w)?)?;
        let as3 = self.associator_words(w, (1, 1), y, (2, 0), z, (3, -1))?;
        let third = self.mul(&self.apply_word(2, 2, x)?, &as3)?;
        Ok(&(&first - &second) - &third)
    }

    /// Four-term bracket sum
    /// `[as(β²w, αβx, α²y), α³βz]` composed with `id − ξ + ξ² − ξ³`.
    #[allow(non_snake_case)]
    pub fn bk_F(&self, w: &Element, x: &Element, y: &Element, z: &Element) -> Result<Element> {
        let g = |t: &[Element]| -> Result<Element> {
            let a = self.associator_words(&t[0], (0, 2), &t[1], (1, 1), &t[2], (2, 0))?;
            self.bracket(&a, &self.apply_word(3, 1, &t[3])?)
        };
        let args = [w.clone(), x.clone(), y.clone(), z.clone()];
        let xi = Permutation::xi4();
        let mut acc = Element::zero(self.dim());
        for k in 0..4u32 {
            let term = g(&xi.pow(k).apply(&args))?;
            acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        Ok(acc)
    }
}
