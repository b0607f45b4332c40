use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Label, LabeledGraph};

use super::{Computed, NodeBudget};

pub type VertexMap = BTreeMap<Label, Label>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MapKind {
    /// Edges go to edges.
    Homomorphism,
    /// Injective, edges go to edges.
    SubgraphEmbedding,
    /// Injective, adjacency preserved in both directions.
    InducedEmbedding,
}

#[derive(Clone, Debug)]
pub struct HomomorphismWitness {
    pub source: LabeledGraph,
    pub target: LabeledGraph,
    pub vertex_map: VertexMap,
    pub kind: MapKind,
}

/// Index form of `map`; errors unless it is total on `source` and lands in `target`.
fn resolve(source: &LabeledGraph, target: &LabeledGraph, map: &VertexMap) -> Result<Vec<usize>> {
    source
        .labels()
        .iter()
        .map(|l| {
            let image = map
                .get(l)
                .ok_or_else(|| Error::MalformedWitness(format!("no image for vertex {l}")))?;
            target
                .index_of(image)
                .ok_or_else(|| Error::MalformedWitness(format!("image {image} of {l} is not a vertex")))
        })
        .collect()
}

fn edges_preserved(source: &LabeledGraph, target: &LabeledGraph, idx: &[usize]) -> bool {
    source
        .edges()
        .iter()
        .all(|&(u, v)| target.adjacent(idx[u], idx[v]))
}

fn injective(idx: &[usize]) -> bool {
    let mut sorted = idx.to_vec();
    sorted.sort_unstable();
    sorted.windows(2).all(|w| w[0] != w[1])
}

/// Checks the witness according to its kind. A map that is not total on the
/// source, or that hits a non-vertex of the target, is malformed.
pub fn check_homomorphism(w: &HomomorphismWitness) -> Result<bool> {
    let idx = resolve(&w.source, &w.target, &w.vertex_map)?;
    let edges_ok = edges_preserved(&w.source, &w.target, &idx);
    Ok(match w.kind {
        MapKind::Homomorphism => edges_ok,
        MapKind::SubgraphEmbedding => edges_ok && injective(&idx),
        MapKind::InducedEmbedding => {
            let n = w.source.order();
            injective(&idx)
                && (0..n).all(|u| {
                    (u + 1..n).all(|v| w.source.adjacent(u, v) == w.target.adjacent(idx[u], idx[v]))
                })
        }
    })
}

/// `ρ: big → small` and `φ: small → big` are homomorphisms and `ρ∘φ = id`.
pub fn verify_retraction(
    big: &LabeledGraph,
    small: &LabeledGraph,
    rho: &VertexMap,
    phi: &VertexMap,
) -> Result<bool> {
    let rho_idx = resolve(big, small, rho)?;
    let phi_idx = resolve(small, big, phi)?;
    Ok(edges_preserved(big, small, &rho_idx)
        && edges_preserved(small, big, &phi_idx)
        && (0..small.order()).all(|h| rho_idx[phi_idx[h]] == h))
}

struct EmbedSearch<'a> {
    small: &'a LabeledGraph,
    big: &'a LabeledGraph,
    order: Vec<usize>,
    image: Vec<usize>,
    used: Vec<bool>,
    budget: NodeBudget,
    exhausted: bool,
}

impl EmbedSearch<'_> {
    fn place(&mut self, depth: usize) -> bool {
        if !self.budget.tick() {
            self.exhausted = true;
            return false;
        }
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        let need = self.small.degree(v);
        let placed: Vec<usize> = self.order[..depth]
            .iter()
            .copied()
            .filter(|&u| self.small.adjacent(u, v))
            .collect();
        for c in 0..self.big.order() {
            if self.used[c] || self.big.degree(c) < need {
                continue;
            }
            if !placed.iter().all(|&u| self.big.adjacent(self.image[u], c)) {
                continue;
            }
            self.image[v] = c;
            self.used[c] = true;
            if self.place(depth + 1) {
                return true;
            }
            self.used[c] = false;
            if self.exhausted {
                return false;
            }
        }
        false
    }
}

/// An injective edge-preserving map `small → big` (not necessarily induced).
pub fn subgraph_embedding_exists(
    small: &LabeledGraph,
    big: &LabeledGraph,
    node_budget: u64,
) -> Computed<Option<VertexMap>> {
    if small.order() > big.order() || small.size() > big.size() {
        return Computed::Value(None);
    }
    let mut order: Vec<usize> = (0..small.order()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(small.degree(v)), v));
    let mut search = EmbedSearch {
        small,
        big,
        order,
        image: vec![usize::MAX; small.order()],
        used: vec![false; big.order()],
        budget: NodeBudget::new(node_budget),
        exhausted: false,
    };
    if search.place(0) {
        let map = (0..small.order())
            .map(|v| (small.label(v).clone(), big.label(search.image[v]).clone()))
            .collect();
        return Computed::Value(Some(map));
    }
    if search.exhausted {
        Computed::Skipped
    } else {
        Computed::Value(None)
    }
}
