//! Labeled simple graphs and the ring-graph constructions.

mod build;
mod export;
mod zmodel;

use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ring::RingElement;

pub use build::{
    build_gamma, build_gamma_dblprime, build_gamma_i, build_gamma_prime,
    build_gamma_prime_quotient, build_q_gamma_dblprime, build_q_gamma_i, delete_ideal_vertices,
    gamma_dblprime, gamma_i, is_q_dblprime_vertex, q_gamma_dblprime, q_gamma_i,
};
pub use export::{to_dot, to_json, GraphJson};
pub use zmodel::{build_z_class_model, integer_adjacent, integer_vertex, ZClassModel, ZModelKind};

/// Vertex label. Within one graph every label has the same variant.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Label {
    Element(RingElement),
    /// A residue class (or a divisor type) of the integer model.
    Residue(u64),
    /// One of several interchangeable copies of a residue class.
    Twin { residue: u64, copy: u32 },
}

impl Label {
    pub fn element(&self) -> Option<&RingElement> {
        match self {
            Label::Element(x) => Some(x),
            _ => None,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Element(x) => write!(f, "{x}"),
            Label::Residue(c) => write!(f, "{c}"),
            Label::Twin { residue, copy } => write!(f, "{residue}#{copy}"),
        }
    }
}

impl Serialize for Label {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Family {
    Gamma,
    GammaI,
    GammaPrime,
    GammaDblPrime,
    QGamma,
    QGammaDblPrime,
    ZModel,
    Custom,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Gamma,
        Family::GammaI,
        Family::GammaPrime,
        Family::GammaDblPrime,
        Family::QGamma,
        Family::QGammaDblPrime,
        Family::ZModel,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Family::Gamma => "gamma",
            Family::GammaI => "gammaI",
            Family::GammaPrime => "gammaPrime",
            Family::GammaDblPrime => "gammaDblPrime",
            Family::QGamma => "qGamma",
            Family::QGammaDblPrime => "qGammaDblPrime",
            Family::ZModel => "zModel",
            Family::Custom => "custom",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.tag() == s)
            .ok_or_else(|| Error::Parse(format!("unknown graph family `{s}`")))
    }
}

/// Which ring and ideal a graph was built from, as text.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Provenance {
    pub ring: String,
    pub ideal: String,
}

impl Provenance {
    pub fn new(ring: impl Into<String>, ideal: impl Into<String>) -> Self {
        Provenance {
            ring: ring.into(),
            ideal: ideal.into(),
        }
    }
}

/// Simple undirected graph with labeled vertices in ascending label order.
#[derive(Clone, Debug)]
pub struct LabeledGraph {
    labels: Vec<Label>,
    adj: Vec<FixedBitSet>,
    family: Family,
    provenance: Provenance,
}

impl LabeledGraph {
    /// Builds the graph on `labels` with `adjacent(i, j)` evaluated for every
    /// pair `i < j`. Rows are computed in parallel when enabled.
    pub fn from_relation<F>(
        labels: Vec<Label>,
        adjacent: F,
        family: Family,
        provenance: Provenance,
    ) -> Self
    where
        F: Fn(usize, usize) -> bool + Sync + Send,
    {
        debug_assert!(labels.windows(2).all(|w| w[0] < w[1]));
        let n = labels.len();
        let upper: Vec<Vec<usize>> =
            crate::par::map_range(n, |i| (i + 1..n).filter(|&j| adjacent(i, j)).collect());
        let mut adj = vec![FixedBitSet::with_capacity(n); n];
        for (i, row) in upper.into_iter().enumerate() {
            for j in row {
                adj[i].insert(j);
                adj[j].insert(i);
            }
        }
        LabeledGraph {
            labels,
            adj,
            family,
            provenance,
        }
    }

    /// Builds from an edge list over `labels`, which are sorted first.
    pub fn from_edges(
        labels: Vec<Label>,
        edges: &[(Label, Label)],
        family: Family,
        provenance: Provenance,
    ) -> Result<Self> {
        let mut labels = labels;
        labels.sort();
        labels.dedup();
        let n = labels.len();
        let mut adj = vec![FixedBitSet::with_capacity(n); n];
        for (a, b) in edges {
            let (i, j) = match (labels.binary_search(a), labels.binary_search(b)) {
                (Ok(i), Ok(j)) if i != j => (i, j),
                _ => return Err(Error::MalformedWitness(format!("bad edge {a} -- {b}"))),
            };
            adj[i].insert(j);
            adj[j].insert(i);
        }
        Ok(LabeledGraph {
            labels,
            adj,
            family,
            provenance,
        })
    }

    /// Unlabeled convenience constructor: vertices `0..n` as residue labels.
    pub fn from_index_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut adj = vec![FixedBitSet::with_capacity(n); n];
        for &(i, j) in edges {
            assert!(i < n && j < n && i != j, "bad edge ({i}, {j})");
            adj[i].insert(j);
            adj[j].insert(i);
        }
        LabeledGraph {
            labels: (0..n as u64).map(Label::Residue).collect(),
            adj,
            family: Family::Custom,
            provenance: Provenance::default(),
        }
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &Label {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &Label) -> Option<usize> {
        self.labels.binary_search(label).ok()
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i].contains(j)
    }

    pub fn row(&self, i: usize) -> &FixedBitSet {
        &self.adj[i]
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[i].ones()
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].count_ones(..)
    }

    /// Edges `(i, j)` with `i < j`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.order())
            .flat_map(|i| self.adj[i].ones().filter(move |&j| j > i).map(move |j| (i, j)))
            .collect()
    }

    pub fn labeled_edges(&self) -> Vec<(Label, Label)> {
        self.edges()
            .into_iter()
            .map(|(i, j)| (self.labels[i].clone(), self.labels[j].clone()))
            .collect()
    }

    /// Induced subgraph on the vertices whose index satisfies `keep`.
    pub fn induced_by_index(&self, keep: impl Fn(usize) -> bool) -> LabeledGraph {
        let kept: Vec<usize> = (0..self.order()).filter(|&i| keep(i)).collect();
        let n = kept.len();
        let mut adj = vec![FixedBitSet::with_capacity(n); n];
        for (a, &i) in kept.iter().enumerate() {
            for (b, &j) in kept.iter().enumerate().skip(a + 1) {
                if self.adjacent(i, j) {
                    adj[a].insert(b);
                    adj[b].insert(a);
                }
            }
        }
        LabeledGraph {
            labels: kept.iter().map(|&i| self.labels[i].clone()).collect(),
            adj,
            family: self.family,
            provenance: self.provenance.clone(),
        }
    }

    pub fn induced(&self, keep: impl Fn(&Label) -> bool) -> LabeledGraph {
        self.induced_by_index(|i| keep(&self.labels[i]))
    }

    pub fn without_vertex(&self, v: usize) -> LabeledGraph {
        self.induced_by_index(|i| i != v)
    }

    pub fn with_family(mut self, family: Family, provenance: Provenance) -> Self {
        self.family = family;
        self.provenance = provenance;
        self
    }
}
