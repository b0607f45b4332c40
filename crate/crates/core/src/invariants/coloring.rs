use std::collections::VecDeque;

use fixedbitset::FixedBitSet;

use crate::graph::LabeledGraph;

use super::{Budgets, Computed, NodeBudget};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    pub bipartite: bool,
    /// Colour classes of a BFS 2-colouring, each component rooted at its
    /// smallest vertex with colour 0.
    pub parts: Option<(Vec<usize>, Vec<usize>)>,
    /// Connected, both parts nonempty, and every cross pair adjacent.
    pub complete: bool,
    /// An odd closed walk's endpoints when not bipartite: an edge inside a colour class.
    pub odd_edge: Option<(usize, usize)>,
}

pub fn bipartite_structure(g: &LabeledGraph) -> Bipartition {
    let n = g.order();
    let mut color = vec![u8::MAX; n];
    let mut odd_edge = None;
    for s in 0..n {
        if color[s] != u8::MAX {
            continue;
        }
        color[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u) {
                if color[v] == u8::MAX {
                    color[v] = 1 - color[u];
                    queue.push_back(v);
                } else if color[v] == color[u] && odd_edge.is_none() {
                    odd_edge = Some((u.min(v), u.max(v)));
                }
            }
        }
    }
    if odd_edge.is_some() {
        return Bipartition {
            bipartite: false,
            parts: None,
            complete: false,
            odd_edge,
        };
    }
    let a: Vec<usize> = (0..n).filter(|&v| color[v] == 0).collect();
    let b: Vec<usize> = (0..n).filter(|&v| color[v] == 1).collect();
    let complete = !a.is_empty()
        && !b.is_empty()
        && g.size() == a.len() * b.len()
        && super::is_connected(g);
    Bipartition {
        bipartite: true,
        parts: Some((a, b)),
        complete,
        odd_edge: None,
    }
}

/// Greedy colouring in index order; returns one colour per vertex.
pub fn greedy_coloring(g: &LabeledGraph) -> Vec<usize> {
    let n = g.order();
    let mut colors = vec![usize::MAX; n];
    for v in 0..n {
        let used: Vec<usize> = g.neighbors(v).map(|u| colors[u]).collect();
        colors[v] = (0..).find(|c| !used.contains(c)).expect("unbounded range");
    }
    colors
}

pub fn is_proper_coloring(g: &LabeledGraph, colors: &[usize]) -> bool {
    colors.len() == g.order() && g.edges().iter().all(|&(u, v)| colors[u] != colors[v])
}

struct CliqueSearch<'a> {
    g: &'a LabeledGraph,
    best: Vec<usize>,
    current: Vec<usize>,
    budget: NodeBudget,
    exhausted: bool,
}

impl CliqueSearch<'_> {
    /// Greedy colour classes over `cand` in index order: vertices listed by
    /// class, paired with their class number (an upper bound on any clique
    /// inside the prefix).
    fn color_sort(&self, cand: &FixedBitSet) -> Vec<(usize, usize)> {
        let mut classes: Vec<FixedBitSet> = Vec::new();
        let mut members: Vec<Vec<usize>> = Vec::new();
        for v in cand.ones() {
            let slot = classes.iter().position(|c| c.is_disjoint(self.g.row(v)));
            match slot {
                Some(k) => {
                    classes[k].insert(v);
                    members[k].push(v);
                }
                None => {
                    let mut c = FixedBitSet::with_capacity(self.g.order());
                    c.insert(v);
                    classes.push(c);
                    members.push(vec![v]);
                }
            }
        }
        members
            .into_iter()
            .enumerate()
            .flat_map(|(k, vs)| vs.into_iter().map(move |v| (v, k + 1)))
            .collect()
    }

    fn expand(&mut self, mut cand: FixedBitSet) {
        if !self.budget.tick() {
            self.exhausted = true;
            return;
        }
        let order = self.color_sort(&cand);
        for &(v, bound) in order.iter().rev() {
            if self.exhausted || self.current.len() + bound <= self.best.len() {
                return;
            }
            self.current.push(v);
            let mut next = cand.clone();
            next.intersect_with(self.g.row(v));
            if next.is_clear() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            cand.set(v, false);
        }
    }
}

/// A maximum clique (sorted), or `Skipped` over budget.
pub fn maximum_clique(g: &LabeledGraph, budgets: &Budgets) -> Computed<Vec<usize>> {
    if g.order() > budgets.clique {
        return Computed::Skipped;
    }
    let mut all = FixedBitSet::with_capacity(g.order());
    all.insert_range(..);
    let mut search = CliqueSearch {
        g,
        best: Vec::new(),
        current: Vec::new(),
        budget: NodeBudget::new(budgets.search_nodes),
        exhausted: false,
    };
    if g.order() > 0 {
        search.expand(all);
    }
    if search.exhausted {
        return Computed::Skipped;
    }
    let mut best = search.best;
    best.sort_unstable();
    Computed::Value(best)
}

pub fn clique_number(g: &LabeledGraph, budgets: &Budgets) -> Computed<usize> {
    maximum_clique(g, budgets).map(|c| c.len())
}

struct ColorSearch<'a> {
    g: &'a LabeledGraph,
    colors: Vec<usize>,
    best: Option<Vec<usize>>,
    best_count: usize,
    lower: usize,
    budget: NodeBudget,
    exhausted: bool,
}

const UNCOLORED: usize = usize::MAX;

impl ColorSearch<'_> {
    /// Uncoloured vertex with most distinct neighbour colours, then most
    /// uncoloured neighbours, then lowest index.
    fn pick(&self) -> Option<usize> {
        let mut best: Option<(usize, usize, usize)> = None;
        for v in 0..self.g.order() {
            if self.colors[v] != UNCOLORED {
                continue;
            }
            let mut seen: Vec<usize> = Vec::new();
            let mut free = 0;
            for u in self.g.neighbors(v) {
                match self.colors[u] {
                    UNCOLORED => free += 1,
                    c if !seen.contains(&c) => seen.push(c),
                    _ => {}
                }
            }
            let key = (seen.len(), free, v);
            let better = match best {
                None => true,
                Some((s, f, _)) => (key.0, key.1) > (s, f),
            };
            if better {
                best = Some(key);
            }
        }
        best.map(|b| b.2)
    }

    fn search(&mut self, used: usize) {
        if self.exhausted || self.best_count == self.lower {
            return;
        }
        if !self.budget.tick() {
            self.exhausted = true;
            return;
        }
        let Some(v) = self.pick() else {
            if used < self.best_count {
                self.best_count = used;
                self.best = Some(self.colors.clone());
            }
            return;
        };
        for c in 0..=used {
            if c + 1 >= self.best_count {
                break;
            }
            if self.g.neighbors(v).any(|u| self.colors[u] == c) {
                continue;
            }
            self.colors[v] = c;
            self.search(used.max(c + 1));
            self.colors[v] = UNCOLORED;
            if self.exhausted {
                return;
            }
        }
    }
}

/// An optimal colouring by DSATUR branch-and-bound, seeded with the greedy
/// colouring as upper bound and a maximum clique (pre-coloured) as lower bound.
pub fn optimal_coloring(g: &LabeledGraph, budgets: &Budgets) -> Computed<Vec<usize>> {
    let n = g.order();
    if n > budgets.chromatic {
        return Computed::Skipped;
    }
    if n == 0 {
        return Computed::Value(Vec::new());
    }
    let Computed::Value(clique) = maximum_clique(g, budgets) else {
        return Computed::Skipped;
    };
    let greedy = greedy_coloring(g);
    let greedy_count = greedy.iter().max().map_or(0, |m| m + 1);
    if greedy_count == clique.len() {
        return Computed::Value(greedy);
    }
    let mut colors = vec![UNCOLORED; n];
    for (c, &v) in clique.iter().enumerate() {
        colors[v] = c;
    }
    let mut search = ColorSearch {
        g,
        colors,
        best: Some(greedy),
        best_count: greedy_count,
        lower: clique.len(),
        budget: NodeBudget::new(budgets.search_nodes),
        exhausted: false,
    };
    search.search(clique.len());
    if search.exhausted {
        return Computed::Skipped;
    }
    Computed::Value(search.best.expect("seeded with the greedy colouring"))
}

pub fn chromatic_number(g: &LabeledGraph, budgets: &Budgets) -> Computed<usize> {
    optimal_coloring(g, budgets).map(|c| c.iter().max().map_or(0, |m| m + 1))
}

/// `χ(g) ≤ k`.
pub fn is_k_partite(g: &LabeledGraph, k: usize, budgets: &Budgets) -> Computed<bool> {
    chromatic_number(g, budgets).map(|chi| chi <= k)
}
