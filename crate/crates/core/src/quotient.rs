//! `R/I` by canonical coset representatives.
//!
//! The lexicographically smallest member of `x + I` is `(x_i mod d_i)_i`.
//! Arithmetic works in the base ring and re-canonicalises.

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::ring::{Ring, RingElement};

#[derive(Clone, Debug)]
pub struct QuotientRing {
    base: Ring,
    modulus: Ideal,
    representatives: Vec<RingElement>,
}

impl QuotientRing {
    pub fn new(ring: &Ring, ideal: &Ideal) -> Result<Self> {
        ring.same_ring(ideal.ring())?;
        if !ideal.is_proper() {
            return Err(Error::ImproperIdeal(ideal.spec()));
        }
        let mut representatives: Vec<_> = ring
            .elements()
            .filter(|x| x.coords().iter().zip(ideal.divisors()).all(|(c, d)| c < d))
            .collect();
        representatives.sort();
        Ok(QuotientRing {
            base: ring.clone(),
            modulus: ideal.clone(),
            representatives,
        })
    }

    pub fn base(&self) -> &Ring {
        &self.base
    }

    pub fn modulus(&self) -> &Ideal {
        &self.modulus
    }

    pub fn representatives(&self) -> &[RingElement] {
        &self.representatives
    }

    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    pub fn canonicalize(&self, x: &RingElement) -> Result<RingElement> {
        self.base.check(x)?;
        Ok(self.canon(x))
    }

    pub(crate) fn canon(&self, x: &RingElement) -> RingElement {
        RingElement::new(
            x.coords()
                .iter()
                .zip(self.modulus.divisors())
                .map(|(c, d)| c % d)
                .collect(),
        )
    }

    pub fn zero(&self) -> RingElement {
        self.canon(&self.base.zero())
    }

    pub fn one(&self) -> RingElement {
        self.canon(&self.base.one())
    }

    pub fn add(&self, x: &RingElement, y: &RingElement) -> Result<RingElement> {
        Ok(self.canon(&self.base.add(x, y)?))
    }

    pub fn mul(&self, x: &RingElement, y: &RingElement) -> Result<RingElement> {
        Ok(self.canon(&self.base.mul(x, y)?))
    }

    /// Set of canonical multiples `{x·s : s ∈ R/I}`, sorted.
    pub fn multiples(&self, x: &RingElement) -> Vec<RingElement> {
        let mut out: Vec<_> = self
            .representatives
            .iter()
            .map(|s| self.canon(&self.base.mul_unchecked(x, s)))
            .collect();
        out.sort();
        out.dedup();
        out
    }
}

pub fn quotient(ring: &Ring, ideal: &Ideal) -> Result<QuotientRing> {
    QuotientRing::new(ring, ideal)
}
