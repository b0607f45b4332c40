use fixedbitset::FixedBitSet;

use crate::graph::LabeledGraph;

use super::{bipartite_structure, cut_vertices, is_connected, Budgets, Computed, NodeBudget};

/// `cycle` lists every vertex once and consecutive entries (cyclically) are adjacent.
pub fn is_hamiltonian_cycle(g: &LabeledGraph, cycle: &[usize]) -> bool {
    let n = g.order();
    if n < 3 || cycle.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in cycle {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    (0..n).all(|i| g.adjacent(cycle[i], cycle[(i + 1) % n]))
}

struct HamSearch<'a> {
    g: &'a LabeledGraph,
    path: Vec<usize>,
    on_path: FixedBitSet,
    budget: NodeBudget,
    exhausted: bool,
}

impl HamSearch<'_> {
    /// Some unvisited vertex can no longer have two usable neighbours.
    fn dead_end(&self) -> bool {
        let n = self.g.order();
        let start = self.path[0];
        let end = *self.path.last().expect("path starts nonempty");
        (0..n).any(|w| {
            !self.on_path.contains(w)
                && self
                    .g
                    .neighbors(w)
                    .filter(|&u| !self.on_path.contains(u) || u == start || u == end)
                    .take(2)
                    .count()
                    < 2
        })
    }

    fn extend(&mut self) -> bool {
        if !self.budget.tick() {
            self.exhausted = true;
            return false;
        }
        let n = self.g.order();
        let end = *self.path.last().expect("nonempty");
        if self.path.len() == n {
            return self.g.adjacent(end, self.path[0]);
        }
        if self.dead_end() {
            return false;
        }
        let next: Vec<usize> = self
            .g
            .neighbors(end)
            .filter(|&v| !self.on_path.contains(v))
            .collect();
        for v in next {
            self.path.push(v);
            self.on_path.insert(v);
            if self.extend() {
                return true;
            }
            self.on_path.set(v, false);
            self.path.pop();
            if self.exhausted {
                return false;
            }
        }
        false
    }
}

/// A Hamiltonian cycle starting at vertex 0 (smallest label), `Value(None)`
/// if there is none. Graphs with fewer than 3 vertices have none.
pub fn hamiltonian_cycle(g: &LabeledGraph, budgets: &Budgets) -> Computed<Option<Vec<usize>>> {
    let n = g.order();
    if n > budgets.hamiltonian {
        return Computed::Skipped;
    }
    if n < 3
        || !is_connected(g)
        || (0..n).any(|v| g.degree(v) < 2)
        || !cut_vertices(g).is_empty()
    {
        return Computed::Value(None);
    }
    if let Some((a, b)) = bipartite_structure(g).parts {
        if a.len() != b.len() {
            return Computed::Value(None);
        }
    }
    let mut on_path = FixedBitSet::with_capacity(n);
    on_path.insert(0);
    let mut search = HamSearch {
        g,
        path: vec![0],
        on_path,
        budget: NodeBudget::new(budgets.search_nodes),
        exhausted: false,
    };
    if search.extend() {
        return Computed::Value(Some(search.path));
    }
    if search.exhausted {
        Computed::Skipped
    } else {
        Computed::Value(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k44_and_small_cases() {
        let b = Budgets::default();
        let mut edges = Vec::new();
        for a in 0..4 {
            for c in 4..8 {
                edges.push((a, c));
            }
        }
        let g = LabeledGraph::from_index_edges(8, &edges);
        let cycle = hamiltonian_cycle(&g, &b).into_value().unwrap().unwrap();
        assert!(is_hamiltonian_cycle(&g, &cycle));
        let path = LabeledGraph::from_index_edges(3, &[(0, 1), (1, 2)]);
        assert_eq!(hamiltonian_cycle(&path, &b), Computed::Value(None));
        let edge = LabeledGraph::from_index_edges(2, &[(0, 1)]);
        assert_eq!(hamiltonian_cycle(&edge, &b), Computed::Value(None));
    }

    #[test]
    fn petersen_is_not_hamiltonian() {
        let b = Budgets::default();
        let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend((0..5).map(|i| (i, i + 5)));
        edges.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
        let g = LabeledGraph::from_index_edges(10, &edges);
        assert_eq!(hamiltonian_cycle(&g, &b), Computed::Value(None));
        let tight = Budgets {
            search_nodes: 3,
            ..b
        };
        assert!(hamiltonian_cycle(&g, &tight).is_skipped());
        let small = Budgets {
            hamiltonian: 5,
            ..b
        };
        assert!(hamiltonian_cycle(&g, &small).is_skipped());
    }
}
