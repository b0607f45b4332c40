//! Finite commutative rings presented as `Z_{n1} x ... x Z_{nk}`.
//!
//! Elements are coordinate tuples. The total order on elements is the
//! lexicographic order of their tuples, which is also the order of their
//! mixed-radix index (first coordinate most significant); every enumeration
//! in the crate relies on that.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::arith::gcd;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct RingElement(Vec<u64>);

impl RingElement {
    pub fn new(coords: Vec<u64>) -> Self {
        RingElement(coords)
    }

    pub fn coords(&self) -> &[u64] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for RingElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("element `{s}` must look like `(a,b,...)`")))?;
        let coords = inner
            .split(',')
            .map(|c| {
                c.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::Parse(format!("bad coordinate `{c}` in `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(RingElement(coords))
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Ring {
    moduli: Arc<[u64]>,
    cardinality: u64,
}

impl Ring {
    /// Builds `Z_{m0} x Z_{m1} x ...`. Every modulus must be at least 2.
    pub fn new(moduli: &[u64]) -> Result<Self> {
        if moduli.is_empty() {
            return Err(Error::InvalidRing("a ring needs at least one factor".into()));
        }
        if let Some(bad) = moduli.iter().find(|&&n| n < 2) {
            return Err(Error::InvalidRing(format!("modulus {bad} is below 2")));
        }
        let cardinality = moduli
            .iter()
            .try_fold(1u64, |acc, &n| acc.checked_mul(n))
            .ok_or_else(|| Error::InvalidRing("cardinality overflows u64".into()))?;
        Ok(Ring {
            moduli: moduli.into(),
            cardinality,
        })
    }

    pub fn cyclic(n: u64) -> Result<Self> {
        Ring::new(&[n])
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn arity(&self) -> usize {
        self.moduli.len()
    }

    pub fn cardinality(&self) -> u64 {
        self.cardinality
    }

    /// `Z12`, `Z4xZ6`.
    pub fn spec(&self) -> String {
        self.to_string()
    }

    pub fn zero(&self) -> RingElement {
        RingElement(vec![0; self.arity()])
    }

    pub fn one(&self) -> RingElement {
        RingElement(vec![1; self.arity()])
    }

    pub fn element(&self, coords: &[u64]) -> Result<RingElement> {
        let x = RingElement(coords.to_vec());
        self.check(&x)?;
        Ok(x)
    }

    pub fn contains(&self, x: &RingElement) -> bool {
        x.arity() == self.arity() && x.0.iter().zip(self.moduli.iter()).all(|(c, n)| c < n)
    }

    pub fn check(&self, x: &RingElement) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::ElementMismatch {
                element: x.to_string(),
                ring: self.spec(),
            })
        }
    }

    /// All elements in lexicographic order.
    pub fn elements(&self) -> impl Iterator<Item = RingElement> + '_ {
        (0..self.cardinality as usize).map(move |i| self.element_at(i))
    }

    pub fn element_at(&self, mut index: usize) -> RingElement {
        let mut coords = vec![0; self.arity()];
        for (slot, &n) in coords.iter_mut().zip(self.moduli.iter()).rev() {
            *slot = index as u64 % n;
            index /= n as usize;
        }
        RingElement(coords)
    }

    pub fn index_of(&self, x: &RingElement) -> usize {
        x.0.iter()
            .zip(self.moduli.iter())
            .fold(0usize, |acc, (&c, &n)| acc * n as usize + c as usize)
    }

    pub fn add(&self, x: &RingElement, y: &RingElement) -> Result<RingElement> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.add_unchecked(x, y))
    }

    pub fn mul(&self, x: &RingElement, y: &RingElement) -> Result<RingElement> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.mul_unchecked(x, y))
    }

    pub fn neg(&self, x: &RingElement) -> Result<RingElement> {
        self.check(x)?;
        Ok(RingElement(
            x.0.iter()
                .zip(self.moduli.iter())
                .map(|(&c, &n)| (n - c) % n)
                .collect(),
        ))
    }

    /// `x^m` by repeated squaring; `x^0` is the identity.
    pub fn pow(&self, x: &RingElement, mut m: u64) -> Result<RingElement> {
        self.check(x)?;
        let mut base = x.clone();
        let mut acc = self.one();
        while m > 0 {
            if m & 1 == 1 {
                acc = self.mul_unchecked(&acc, &base);
            }
            base = self.mul_unchecked(&base, &base);
            m >>= 1;
        }
        Ok(acc)
    }

    pub fn is_unit(&self, x: &RingElement) -> Result<bool> {
        self.check(x)?;
        Ok(x.0
            .iter()
            .zip(self.moduli.iter())
            .all(|(&c, &n)| gcd(c, n) == 1))
    }

    pub(crate) fn add_unchecked(&self, x: &RingElement, y: &RingElement) -> RingElement {
        RingElement(
            x.0.iter()
                .zip(&y.0)
                .zip(self.moduli.iter())
                .map(|((&a, &b), &n)| (a + b) % n)
                .collect(),
        )
    }

    pub(crate) fn mul_unchecked(&self, x: &RingElement, y: &RingElement) -> RingElement {
        RingElement(
            x.0.iter()
                .zip(&y.0)
                .zip(self.moduli.iter())
                .map(|((&a, &b), &n)| ((a as u128 * b as u128) % n as u128) as u64)
                .collect(),
        )
    }

    pub(crate) fn same_ring(&self, other: &Ring) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                left: self.spec(),
                right: other.spec(),
            })
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, n) in self.moduli.iter().enumerate() {
            if i > 0 {
                f.write_str("x")?;
            }
            write!(f, "Z{n}")?;
        }
        Ok(())
    }
}

impl FromStr for Ring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty ring spec".into()));
        }
        let moduli = s
            .split('x')
            .map(|factor| {
                factor
                    .trim()
                    .strip_prefix('Z')
                    .and_then(|n| n.parse::<u64>().ok())
                    .ok_or_else(|| Error::Parse(format!("bad ring factor `{factor}` in `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ring::new(&moduli)
    }
}
