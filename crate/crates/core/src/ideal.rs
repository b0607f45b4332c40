//! Ideals of `Z_{n1} x ... x Z_{nk}` in canonical divisor form.
//!
//! Every ideal is `d1 Z_{n1} x ... x dk Z_{nk}` with `d_i | n_i`; `d_i = n_i`
//! is the zero component and `d_i = 1` the full one. Equality, sums,
//! intersections and containment are all divisor arithmetic, so element sets
//! are only materialised when a caller asks for them.

use std::fmt;
use std::str::FromStr;

use crate::arith::{gcd, lcm, prime_divisors, squarefree_kernel};
use crate::error::{Error, Result};
use crate::ring::{Ring, RingElement};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Ideal {
    ring: Ring,
    divisors: Vec<u64>,
}

impl Ideal {
    pub fn from_divisors(ring: &Ring, divisors: &[u64]) -> Result<Self> {
        if divisors.len() != ring.arity()
            || divisors
                .iter()
                .zip(ring.moduli())
                .any(|(&d, &n)| d == 0 || n % d != 0)
        {
            return Err(Error::Parse(format!(
                "divisor tuple {divisors:?} is not valid for {ring}"
            )));
        }
        Ok(Ideal {
            ring: ring.clone(),
            divisors: divisors.to_vec(),
        })
    }

    pub fn zero(ring: &Ring) -> Self {
        Ideal {
            ring: ring.clone(),
            divisors: ring.moduli().to_vec(),
        }
    }

    pub fn whole(ring: &Ring) -> Self {
        Ideal {
            ring: ring.clone(),
            divisors: vec![1; ring.arity()],
        }
    }

    /// Smallest ideal containing `gens`: component divisor `gcd(n_i, x_i...)`.
    pub fn from_generators(ring: &Ring, gens: &[RingElement]) -> Result<Self> {
        let mut divisors = ring.moduli().to_vec();
        for g in gens {
            ring.check(g)?;
            for (d, &c) in divisors.iter_mut().zip(g.coords()) {
                *d = gcd(*d, c);
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            divisors,
        })
    }

    /// Parses `0` or a comma-separated generator list such as `(2,0),(0,3)`.
    pub fn parse(ring: &Ring, s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(Ideal::zero(ring));
        }
        let mut gens = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            let close = rest
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unbalanced generator list `{s}`")))?;
            gens.push(rest[..=close].parse::<RingElement>()?);
            rest = rest[close + 1..].trim_start();
            if let Some(r) = rest.strip_prefix(',') {
                rest = r.trim_start();
                if rest.is_empty() {
                    return Err(Error::Parse(format!("trailing comma in `{s}`")));
                }
            } else if !rest.is_empty() {
                return Err(Error::Parse(format!("expected `,` between generators in `{s}`")));
            }
        }
        if gens.is_empty() {
            return Err(Error::Parse("empty ideal spec".into()));
        }
        Ideal::from_generators(ring, &gens)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn divisors(&self) -> &[u64] {
        &self.divisors
    }

    pub fn cardinality(&self) -> u64 {
        self.ring
            .moduli()
            .iter()
            .zip(&self.divisors)
            .map(|(n, d)| n / d)
            .product()
    }

    pub fn is_zero(&self) -> bool {
        self.divisors == self.ring.moduli()
    }

    pub fn is_proper(&self) -> bool {
        self.divisors.iter().any(|&d| d != 1)
    }

    pub fn is_radical(&self) -> bool {
        self.radical() == *self
    }

    /// A maximal ideal has exactly one non-full component, and that one is prime.
    pub fn is_maximal(&self) -> bool {
        let non_full: Vec<_> = self.divisors.iter().filter(|&&d| d != 1).collect();
        non_full.len() == 1 && crate::arith::is_prime(*non_full[0])
    }

    /// Single generator `(d_1 mod n_1, ..., d_k mod n_k)`.
    pub fn generator(&self) -> RingElement {
        RingElement::new(
            self.divisors
                .iter()
                .zip(self.ring.moduli())
                .map(|(d, n)| d % n)
                .collect(),
        )
    }

    /// `0` for the zero ideal, otherwise the single generator, e.g. `(12)`.
    pub fn spec(&self) -> String {
        self.to_string()
    }

    pub fn contains(&self, x: &RingElement) -> Result<bool> {
        self.ring.check(x)?;
        Ok(self.contains_unchecked(x))
    }

    pub(crate) fn contains_unchecked(&self, x: &RingElement) -> bool {
        x.coords()
            .iter()
            .zip(&self.divisors)
            .all(|(&c, &d)| c % d == 0)
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &Ideal) -> Result<bool> {
        self.ring.same_ring(&other.ring)?;
        Ok(self.subset_unchecked(other))
    }

    pub(crate) fn subset_unchecked(&self, other: &Ideal) -> bool {
        self.divisors
            .iter()
            .zip(&other.divisors)
            .all(|(&a, &b)| a % b == 0)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.ring.same_ring(&other.ring)?;
        Ok(self.zip_with(other, gcd))
    }

    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        self.ring.same_ring(&other.ring)?;
        Ok(self.zip_with(other, lcm))
    }

    fn zip_with(&self, other: &Ideal, f: impl Fn(u64, u64) -> u64) -> Ideal {
        Ideal {
            ring: self.ring.clone(),
            divisors: self
                .divisors
                .iter()
                .zip(&other.divisors)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    /// `xR + I`.
    pub fn principal_plus(x: &RingElement, ideal: &Ideal) -> Result<Ideal> {
        ideal.ring.check(x)?;
        Ok(ideal.principal_plus_unchecked(x))
    }

    pub(crate) fn principal_plus_unchecked(&self, x: &RingElement) -> Ideal {
        Ideal {
            ring: self.ring.clone(),
            divisors: self
                .divisors
                .iter()
                .zip(x.coords())
                .map(|(&d, &c)| gcd(d, c))
                .collect(),
        }
    }

    /// Componentwise squarefree kernel of the divisors.
    pub fn radical(&self) -> Ideal {
        Ideal {
            ring: self.ring.clone(),
            divisors: self.divisors.iter().map(|&d| squarefree_kernel(d)).collect(),
        }
    }

    /// Materialised element set, lexicographic.
    pub fn elements(&self) -> Vec<RingElement> {
        let mut out = vec![Vec::with_capacity(self.ring.arity())];
        for (&n, &d) in self.ring.moduli().iter().zip(&self.divisors) {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..n).step_by(d as usize).map(move |c| {
                        let mut v = prefix.clone();
                        v.push(c);
                        v
                    })
                })
                .collect();
        }
        out.into_iter().map(RingElement::new).collect()
    }

    fn require_proper(&self) -> Result<()> {
        if self.is_proper() {
            Ok(())
        } else {
            Err(Error::ImproperIdeal(self.spec()))
        }
    }

    /// The maximal ideals containing `self`, one per (factor, prime dividing its divisor).
    pub fn maximal_ideals_containing(&self) -> Result<IdealFamily> {
        self.require_proper()?;
        let mut members = Vec::new();
        for (slot, &d) in self.divisors.iter().enumerate() {
            for p in prime_divisors(d) {
                let mut divisors = vec![1; self.ring.arity()];
                divisors[slot] = p;
                members.push(Ideal {
                    ring: self.ring.clone(),
                    divisors,
                });
            }
        }
        Ok(IdealFamily::new(&self.ring, members))
    }

    /// Intersection of the maximal ideals containing `self`.
    pub fn jacobson(&self) -> Result<Ideal> {
        Ok(self.maximal_ideals_containing()?.intersection)
    }

    /// Elements `x` with `xR + I != xR + √I`.
    pub fn t_set(&self) -> Result<Vec<RingElement>> {
        self.require_proper()?;
        let radical = self.radical();
        Ok(self
            .ring
            .elements()
            .filter(|x| self.principal_plus_unchecked(x) != radical.principal_plus_unchecked(x))
            .collect())
    }

    /// First `x ∈ √I` (lexicographically) with `I + Rx = √I`, if any.
    pub fn sum_radical_witness(&self) -> Result<Option<RingElement>> {
        self.require_proper()?;
        let radical = self.radical();
        Ok(radical
            .elements()
            .into_iter()
            .find(|x| self.principal_plus_unchecked(x) == radical))
    }

    pub fn is_sum_radical(&self) -> Result<(bool, Option<RingElement>)> {
        let w = self.sum_radical_witness()?;
        Ok((w.is_some(), w))
    }

    /// `R/I` is a secondary ideal of itself: every `r` lies in `√I` or has `rR + I = R`.
    pub fn is_secondary_quotient(&self) -> Result<bool> {
        self.require_proper()?;
        let radical = self.radical();
        Ok(self.ring.elements().all(|r| {
            radical.contains_unchecked(&r) || !self.principal_plus_unchecked(&r).is_proper()
        }))
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            f.write_str("0")
        } else {
            write!(f, "{}", self.generator())
        }
    }
}

/// A set of ideals together with their intersection, e.g. `M(I)` and `J_I(R)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IdealFamily {
    pub members: Vec<Ideal>,
    pub intersection: Ideal,
}

impl IdealFamily {
    fn new(ring: &Ring, members: Vec<Ideal>) -> Self {
        let intersection = members
            .iter()
            .fold(Ideal::whole(ring), |acc, m| acc.zip_with(m, lcm));
        IdealFamily {
            members,
            intersection,
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Every maximal ideal of the ring.
pub fn maximal_ideals(ring: &Ring) -> IdealFamily {
    Ideal::zero(ring)
        .maximal_ideals_containing()
        .expect("zero ideal is proper")
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IdealFilter {
    All,
    RadicalNonmaximal,
    Nonzero,
}

impl FromStr for IdealFilter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(IdealFilter::All),
            "radical-nonmaximal" => Ok(IdealFilter::RadicalNonmaximal),
            "nonzero" => Ok(IdealFilter::Nonzero),
            other => Err(Error::Parse(format!("unknown ideal filter `{other}`"))),
        }
    }
}

/// Every proper ideal, ordered by divisor tuple.
pub fn enumerate_proper_ideals(ring: &Ring, filter: IdealFilter) -> Vec<Ideal> {
    let mut tuples: Vec<Vec<u64>> = vec![Vec::new()];
    for &n in ring.moduli() {
        let divs = crate::arith::divisors(n);
        tuples = tuples
            .into_iter()
            .flat_map(|prefix| {
                divs.iter().map(move |&d| {
                    let mut v = prefix.clone();
                    v.push(d);
                    v
                })
            })
            .collect();
    }
    tuples
        .into_iter()
        .map(|divisors| Ideal {
            ring: ring.clone(),
            divisors,
        })
        .filter(|i| i.is_proper())
        .filter(|i| match filter {
            IdealFilter::All => true,
            IdealFilter::RadicalNonmaximal => !i.radical().is_maximal(),
            IdealFilter::Nonzero => !i.is_zero(),
        })
        .collect()
}

/// Per-(ring, ideal) data every graph predicate consults, computed once.
#[derive(Clone, Debug)]
pub struct IdealContext {
    ideal: Ideal,
    radical: Ideal,
    maximal: IdealFamily,
    in_t: Vec<bool>,
    sum_radical: Option<RingElement>,
    secondary: bool,
}

impl IdealContext {
    pub fn new(ideal: &Ideal) -> Result<Self> {
        let maximal = ideal.maximal_ideals_containing()?;
        let radical = ideal.radical();
        let ring = ideal.ring();
        let mut in_t = vec![false; ring.cardinality() as usize];
        for x in ideal.t_set()? {
            in_t[ring.index_of(&x)] = true;
        }
        Ok(IdealContext {
            sum_radical: ideal.sum_radical_witness()?,
            secondary: ideal.is_secondary_quotient()?,
            ideal: ideal.clone(),
            radical,
            maximal,
            in_t,
        })
    }

    pub fn ring(&self) -> &Ring {
        self.ideal.ring()
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn radical(&self) -> &Ideal {
        &self.radical
    }

    pub fn maximal(&self) -> &IdealFamily {
        &self.maximal
    }

    /// `J_I(R)`.
    pub fn jacobson(&self) -> &Ideal {
        &self.maximal.intersection
    }

    pub fn in_t(&self, x: &RingElement) -> bool {
        self.in_t[self.ring().index_of(x)]
    }

    pub fn t_set(&self) -> Vec<RingElement> {
        self.ring().elements().filter(|x| self.in_t(x)).collect()
    }

    pub fn sum_radical_witness(&self) -> Option<&RingElement> {
        self.sum_radical.as_ref()
    }

    pub fn is_sum_radical(&self) -> bool {
        self.sum_radical.is_some()
    }

    pub fn is_secondary_quotient(&self) -> bool {
        self.secondary
    }

    pub fn radical_is_maximal(&self) -> bool {
        self.radical.is_maximal()
    }
}
