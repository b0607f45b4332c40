//! Residue-class model of `Γ″_{nZ}(Z) ∖ √(nZ)`.
//!
//! An integer `x` is a vertex iff `gcd(x, n) > 1` and `rad(n) ∤ x`, and two
//! vertices are adjacent iff `gcd(y, n) ∤ x` and `gcd(x, n) ∤ y`. Both depend
//! only on residues mod `n` (for `n > 0`), so each class `c` stands for an
//! infinite family of pairwise non-adjacent twins.

use serde::Serialize;

use crate::arith::{factorize, gcd, squarefree_kernel};

use super::{Family, Label, LabeledGraph, Provenance};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ZModelKind {
    /// `n = 0`: the model is not a finite class structure.
    ZeroIdeal,
    /// `n = 1`: `nZ = Z` is not proper.
    Unit,
    /// `n = p^k`: no classes.
    PrimePower,
    /// At least two distinct primes.
    Composite,
}

#[derive(Clone, Debug)]
pub struct ZClassModel {
    n: u64,
    kind: ZModelKind,
    factors: Vec<(u64, u32)>,
    classes: Vec<u64>,
}

pub fn build_z_class_model(n: u64) -> ZClassModel {
    ZClassModel::new(n)
}

/// Vertex predicate of `Γ″_{nZ}(Z) ∖ √(nZ)` on a positive integer.
/// For `n = 0`, `gcd(x, 0) = x` and `√0 = 0`.
pub fn integer_vertex(n: u64, x: u64) -> bool {
    x != 0 && gcd(x, n) > 1 && (n == 0 || !x.is_multiple_of(squarefree_kernel(n)))
}

/// Adjacency of two integers: `x ∉ yZ + nZ` and `y ∉ xZ + nZ`.
pub fn integer_adjacent(n: u64, x: u64, y: u64) -> bool {
    !x.is_multiple_of(gcd(y, n)) && !y.is_multiple_of(gcd(x, n))
}

impl ZClassModel {
    pub fn new(n: u64) -> Self {
        let factors = if n >= 2 { factorize(n) } else { Vec::new() };
        let kind = match n {
            0 => ZModelKind::ZeroIdeal,
            1 => ZModelKind::Unit,
            _ if factors.len() == 1 => ZModelKind::PrimePower,
            _ => ZModelKind::Composite,
        };
        let classes = if kind == ZModelKind::Composite {
            let kernel = squarefree_kernel(n);
            (0..n).filter(|&c| gcd(c, n) > 1 && c % kernel != 0).collect()
        } else {
            Vec::new()
        };
        ZClassModel {
            n,
            kind,
            factors,
            classes,
        }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn kind(&self) -> ZModelKind {
        self.kind
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Number of distinct prime divisors of `n`.
    pub fn prime_count(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn classes(&self) -> &[u64] {
        &self.classes
    }

    /// The type `gcd(c, n)` of a class; adjacency depends only on types.
    pub fn class_type(&self, c: u64) -> u64 {
        gcd(c, self.n)
    }

    pub fn adjacent(&self, c: u64, d: u64) -> bool {
        integer_adjacent(self.n, c, d)
    }

    /// Distinct class types in ascending order, each with its multiplicity.
    pub fn types(&self) -> Vec<(u64, usize)> {
        let mut out: Vec<(u64, usize)> = Vec::new();
        let mut gs: Vec<u64> = self.classes.iter().map(|&c| self.class_type(c)).collect();
        gs.sort_unstable();
        for g in gs {
            match out.last_mut() {
                Some((h, m)) if *h == g => *m += 1,
                _ => out.push((g, 1)),
            }
        }
        out
    }

    fn provenance(&self) -> Provenance {
        Provenance::new("Z", format!("{}Z", self.n))
    }

    /// One vertex per residue class.
    pub fn graph(&self) -> LabeledGraph {
        let classes = self.classes.clone();
        let n = self.n;
        LabeledGraph::from_relation(
            classes.iter().copied().map(Label::Residue).collect(),
            move |i, j| integer_adjacent(n, classes[i], classes[j]),
            Family::ZModel,
            self.provenance(),
        )
    }

    /// One vertex per class type `gcd(c, n)`; types are pairwise adjacent
    /// exactly when they are incomparable under divisibility.
    pub fn type_graph(&self) -> LabeledGraph {
        let types: Vec<u64> = self.types().into_iter().map(|(g, _)| g).collect();
        let labels = types.iter().copied().map(Label::Residue).collect();
        LabeledGraph::from_relation(
            labels,
            move |i, j| !types[i].is_multiple_of(types[j]) && !types[j].is_multiple_of(types[i]),
            Family::ZModel,
            self.provenance(),
        )
    }

    /// `copies` twins of every class. Twins of one class are never adjacent.
    pub fn twin_expansion(&self, copies: u32) -> LabeledGraph {
        let members: Vec<(u64, u32)> = self
            .classes
            .iter()
            .flat_map(|&c| (0..copies).map(move |k| (c, k)))
            .collect();
        let n = self.n;
        let labels = members
            .iter()
            .map(|&(residue, copy)| Label::Twin { residue, copy })
            .collect();
        LabeledGraph::from_relation(
            labels,
            move |i, j| integer_adjacent(n, members[i].0, members[j].0),
            Family::ZModel,
            self.provenance(),
        )
    }

    /// The classes of `n / p_i^{α_i}`, one per prime; empty unless composite.
    pub fn dominator_witness(&self) -> Vec<u64> {
        if self.kind != ZModelKind::Composite {
            return Vec::new();
        }
        let mut out: Vec<u64> = self.factors.iter().map(|&(p, a)| self.n / p.pow(a)).collect();
        out.sort_unstable();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve() {
        let m = ZClassModel::new(12);
        assert_eq!(m.kind(), ZModelKind::Composite);
        assert_eq!(m.classes(), &[2, 3, 4, 8, 9, 10]);
        assert!(m.adjacent(2, 3));
        assert!(!m.adjacent(2, 10));
        for &c in m.classes() {
            assert!(!m.adjacent(c, c));
            for &d in m.classes() {
                assert_eq!(m.adjacent(c, d), m.adjacent(d, c));
            }
        }
        assert_eq!(m.dominator_witness(), vec![3, 4]);
    }

    #[test]
    fn degenerate_models() {
        assert_eq!(ZClassModel::new(8).kind(), ZModelKind::PrimePower);
        assert!(ZClassModel::new(8).is_empty());
        assert_eq!(ZClassModel::new(0).kind(), ZModelKind::ZeroIdeal);
        assert_eq!(ZClassModel::new(1).kind(), ZModelKind::Unit);
        assert!(ZClassModel::new(7).graph().is_empty());
    }

    #[test]
    fn thirty_has_three_primes() {
        let m = ZClassModel::new(30);
        assert_eq!(m.prime_count(), 3);
        assert_eq!(m.dominator_witness(), vec![6, 10, 15]);
        let types: Vec<u64> = m.types().iter().map(|t| t.0).collect();
        assert_eq!(types, vec![2, 3, 5, 6, 10, 15]);
    }

    #[test]
    fn integer_pairs_agree_with_classes() {
        for n in [6u64, 12, 18, 20, 30] {
            let m = ZClassModel::new(n);
            for x in 1..=4 * n {
                assert_eq!(integer_vertex(n, x), m.classes().contains(&(x % n)), "n={n} x={x}");
                if !integer_vertex(n, x) {
                    continue;
                }
                for y in 1..=4 * n {
                    if integer_vertex(n, y) {
                        assert_eq!(integer_adjacent(n, x, y), m.adjacent(x % n, y % n));
                    }
                }
            }
        }
    }

    #[test]
    fn twins_are_independent() {
        let g = ZClassModel::new(6).twin_expansion(2);
        assert_eq!(g.order(), 6);
        let a = g.index_of(&Label::Twin { residue: 2, copy: 0 }).unwrap();
        let b = g.index_of(&Label::Twin { residue: 2, copy: 1 }).unwrap();
        assert!(!g.adjacent(a, b));
    }
}
