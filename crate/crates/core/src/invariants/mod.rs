//! Exact graph invariants. Exponential searches run under explicit budgets
//! and report `Computed::Skipped` instead of a guess when a budget is hit.

mod coloring;
mod connectivity;
mod domination;
mod hamilton;
mod homomorphism;
mod paths;
mod planarity;

use std::fmt;

use serde::{Serialize, Serializer};

use crate::graph::{Label, LabeledGraph};

pub use coloring::{
    bipartite_structure, chromatic_number, clique_number, greedy_coloring, is_k_partite,
    is_proper_coloring, maximum_clique, optimal_coloring, Bipartition,
};
pub use connectivity::{biconnected_components, cut_vertices, is_complete};
pub use domination::{
    class_total_domination, domination_number, is_dominating, is_total_dominating,
    minimum_dominating_set, minimum_total_dominating_set,
};
pub use hamilton::{hamiltonian_cycle, is_hamiltonian_cycle};
pub use homomorphism::{
    check_homomorphism, subgraph_embedding_exists, verify_retraction, HomomorphismWitness,
    MapKind, VertexMap,
};
pub use paths::{
    bfs_distances, components, diameter, eccentricity_pair, find_triangle, girth, is_connected,
    shortest_path,
};
pub use planarity::{
    planarity, verify_kuratowski, KuratowskiKind, KuratowskiWitness, Planarity,
};

/// A non-negative integer or `∞`; serialises `∞` as `"infinity"`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum Extended {
    Finite(u64),
    Infinite,
}

impl Extended {
    pub fn finite(self) -> Option<u64> {
        match self {
            Extended::Finite(v) => Some(v),
            Extended::Infinite => None,
        }
    }
}

impl fmt::Display for Extended {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extended::Finite(v) => write!(f, "{v}"),
            Extended::Infinite => f.write_str("infinity"),
        }
    }
}

impl Serialize for Extended {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Extended::Finite(v) => s.serialize_u64(*v),
            Extended::Infinite => s.serialize_str("infinity"),
        }
    }
}

/// A value, or the marker that its budget was exceeded.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Computed<T> {
    Value(T),
    Skipped,
}

impl<T> Computed<T> {
    pub fn value(&self) -> Option<&T> {
        match self {
            Computed::Value(v) => Some(v),
            Computed::Skipped => None,
        }
    }

    pub fn into_value(self) -> Option<T> {
        match self {
            Computed::Value(v) => Some(v),
            Computed::Skipped => None,
        }
    }

    pub fn is_skipped(&self) -> bool {
        matches!(self, Computed::Skipped)
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Computed<U> {
        match self {
            Computed::Value(v) => Computed::Value(f(v)),
            Computed::Skipped => Computed::Skipped,
        }
    }
}

impl<T: Serialize> Serialize for Computed<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Computed::Value(v) => v.serialize(s),
            Computed::Skipped => s.serialize_str("skipped"),
        }
    }
}

/// Size limits for the exponential searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budgets {
    /// Max vertices for the clique number.
    pub clique: usize,
    /// Max vertices for the chromatic number.
    pub chromatic: usize,
    /// Max vertices (or classes) for domination.
    pub domination: usize,
    /// Max vertices for Hamiltonicity.
    pub hamiltonian: usize,
    /// Max edges for planarity.
    pub planarity_edges: usize,
    /// Max vertices of a nonplanar graph that still gets a Kuratowski witness.
    pub kuratowski_vertices: usize,
    /// Max search-tree nodes any single backtracking search may visit.
    pub search_nodes: u64,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            clique: 512,
            chromatic: 128,
            domination: 64,
            hamiltonian: 32,
            planarity_edges: 20_000,
            kuratowski_vertices: 64,
            search_nodes: 50_000_000,
        }
    }
}

/// Search-node counter shared by the backtracking routines.
pub(crate) struct NodeBudget {
    left: u64,
}

impl NodeBudget {
    pub(crate) fn new(limit: u64) -> Self {
        NodeBudget { left: limit }
    }

    /// Charges one node; false once the budget is spent.
    pub(crate) fn tick(&mut self) -> bool {
        if self.left == 0 {
            false
        } else {
            self.left -= 1;
            true
        }
    }
}

#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
pub struct Parts {
    pub left: Vec<Label>,
    pub right: Vec<Label>,
}

#[derive(Serialize, Clone, Debug)]
pub struct InvariantReport {
    pub family: String,
    pub ring: String,
    pub ideal: String,
    pub vertices: usize,
    pub edges: usize,
    pub connected: bool,
    pub diameter: Extended,
    pub girth: Extended,
    pub clique_number: Computed<usize>,
    pub chromatic_number: Computed<usize>,
    pub domination_number: Computed<usize>,
    pub bipartite: bool,
    pub parts: Option<Parts>,
    pub complete_bipartite: bool,
    pub planar: Computed<bool>,
    pub kuratowski_witness: Option<KuratowskiWitness>,
    pub hamiltonian: Computed<bool>,
    pub hamiltonian_cycle: Option<Vec<Label>>,
    pub cut_vertices: Vec<Label>,
}

pub fn invariant_report(g: &LabeledGraph, budgets: &Budgets) -> InvariantReport {
    let names = |idx: &[usize]| idx.iter().map(|&i| g.label(i).clone()).collect::<Vec<_>>();
    let bip = bipartite_structure(g);
    let (planar, kuratowski_witness) = match planarity(g, budgets) {
        Computed::Value(Planarity::Planar { .. }) => (Computed::Value(true), None),
        Computed::Value(Planarity::Nonplanar { witness }) => (Computed::Value(false), witness),
        Computed::Skipped => (Computed::Skipped, None),
    };
    let ham = hamiltonian_cycle(g, budgets);
    InvariantReport {
        family: g.family().tag().to_string(),
        ring: g.provenance().ring.clone(),
        ideal: g.provenance().ideal.clone(),
        vertices: g.order(),
        edges: g.size(),
        connected: is_connected(g),
        diameter: diameter(g),
        girth: girth(g),
        clique_number: clique_number(g, budgets),
        chromatic_number: chromatic_number(g, budgets),
        domination_number: domination_number(g, budgets),
        bipartite: bip.bipartite,
        parts: bip.parts.as_ref().map(|(a, b)| Parts {
            left: names(a),
            right: names(b),
        }),
        complete_bipartite: bip.complete,
        planar,
        kuratowski_witness,
        hamiltonian: ham.clone().map(|c| c.is_some()),
        hamiltonian_cycle: ham.into_value().flatten().map(|c| names(&c)),
        cut_vertices: names(&cut_vertices(g)),
    }
}
