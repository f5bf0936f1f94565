use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

use super::{check_simple, WeylElement};

/// An element `Σ_w c_w T_w` of the generic Iwahori–Hecke algebra of `S_n`
/// with coefficients in `ℤ[q]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeElement {
    n: usize,
    terms: BTreeMap<WeylElement, IntPolynomial>,
}

impl HeckeElement {
    pub fn zero(n: usize) -> Self {
        HeckeElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// The basis element `T_w`.
    pub fn basis(w: WeylElement) -> Self {
        let mut out = HeckeElement::zero(w.rank());
        out.terms.insert(w, IntPolynomial::one());
        out
    }

    pub fn one(n: usize) -> Self {
        HeckeElement::basis(WeylElement::identity(n))
    }

    /// `T_{s_i}`.
    pub fn generator(n: usize, i: usize) -> Result<Self> {
        Ok(HeckeElement::basis(WeylElement::simple(n, i)?))
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn coeff(&self, w: &WeylElement) -> IntPolynomial {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&WeylElement, &IntPolynomial)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: WeylElement, c: &IntPolynomial) {
        let slot = self.terms.entry(w).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn add(&self, other: &HeckeElement) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::RankMismatch(self.n, other.n));
        }
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &IntPolynomial) -> Self {
        let mut out = HeckeElement::zero(self.n);
        for (w, d) in &self.terms {
            out.add_term(w.clone(), &(c * d));
        }
        out
    }

    /// `T_{s_i} · self`, using `T_s T_w = T_{sw}` when `ℓ(sw) > ℓ(w)` and
    /// `T_s T_w = q T_{sw} + (q-1) T_w` otherwise.
    pub fn left_mul_generator(&self, i: usize) -> Result<Self> {
        check_simple(self.n, i)?;
        let q = IntPolynomial::q();
        let q_minus_one = IntPolynomial::new(vec![-1, 1]);
        let mut out = HeckeElement::zero(self.n);
        for (w, c) in &self.terms {
            let sw = w.left_mul_simple(i);
            if w.has_left_descent(i) {
                out.add_term(sw, &(&q * c));
                out.add_term(w.clone(), &(&q_minus_one * c));
            } else {
                out.add_term(sw, c);
            }
        }
        Ok(out)
    }
}

/// Product in the Hecke algebra. Each `T_x` on the left is expanded along a
/// reduced word of `x` and applied generator by generator.
pub fn hecke_multiply(a: &HeckeElement, b: &HeckeElement) -> Result<HeckeElement> {
    if a.n != b.n {
        return Err(Error::RankMismatch(a.n, b.n));
    }
    let mut out = HeckeElement::zero(a.n);
    for (x, c) in &a.terms {
        let mut acc = b.clone();
        for &i in x.reduced_word().iter().rev() {
            acc = acc.left_mul_generator(i)?;
        }
        out = out.add(&acc.scale(c))?;
    }
    Ok(out)
}
