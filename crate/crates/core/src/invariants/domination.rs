use fixedbitset::FixedBitSet;

use crate::graph::{LabeledGraph, ZClassModel};

use super::{Budgets, Computed, NodeBudget};

/// Every vertex outside `set` has a neighbour in `set`.
pub fn is_dominating(g: &LabeledGraph, set: &[usize]) -> bool {
    (0..g.order()).all(|v| set.contains(&v) || g.neighbors(v).any(|u| set.contains(&u)))
}

/// Every vertex, including those in `set`, has a neighbour in `set`.
pub fn is_total_dominating(g: &LabeledGraph, set: &[usize]) -> bool {
    (0..g.order()).all(|v| g.neighbors(v).any(|u| set.contains(&u)))
}

struct DomSearch<'a> {
    /// `cover[v]`: the vertices that choosing `v` dominates.
    cover: Vec<FixedBitSet>,
    g: &'a LabeledGraph,
    chosen: Vec<usize>,
    max_cover: usize,
    budget: NodeBudget,
    exhausted: bool,
}

impl DomSearch<'_> {
    /// Branches on the lowest undominated vertex: one of the vertices that
    /// could dominate it must be chosen.
    fn search(&mut self, dominated: &FixedBitSet, k: usize) -> bool {
        if !self.budget.tick() {
            self.exhausted = true;
            return false;
        }
        let n = self.g.order();
        let missing = n - dominated.count_ones(..);
        if missing == 0 {
            return true;
        }
        let left = k - self.chosen.len();
        if left == 0 || missing > left * self.max_cover {
            return false;
        }
        let u = (0..n).find(|&v| !dominated.contains(v)).expect("missing > 0");
        let options: Vec<usize> = (0..n).filter(|&v| self.cover[v].contains(u)).collect();
        for v in options {
            if self.chosen.contains(&v) {
                continue;
            }
            let mut next = dominated.clone();
            next.union_with(&self.cover[v]);
            self.chosen.push(v);
            if self.search(&next, k) {
                return true;
            }
            self.chosen.pop();
            if self.exhausted {
                return false;
            }
        }
        false
    }
}

/// Iterative deepening over `k`. `Value(None)` means no such set exists.
fn minimum_cover(
    g: &LabeledGraph,
    closed: bool,
    budgets: &Budgets,
) -> Computed<Option<Vec<usize>>> {
    let n = g.order();
    if n > budgets.domination {
        return Computed::Skipped;
    }
    let cover: Vec<FixedBitSet> = (0..n)
        .map(|v| {
            let mut c = g.row(v).clone();
            if closed {
                c.insert(v);
            }
            c
        })
        .collect();
    if !closed && (0..n).any(|v| g.degree(v) == 0) {
        return Computed::Value(None);
    }
    let mut search = DomSearch {
        max_cover: cover.iter().map(|c| c.count_ones(..)).max().unwrap_or(0),
        cover,
        g,
        chosen: Vec::new(),
        budget: NodeBudget::new(budgets.search_nodes),
        exhausted: false,
    };
    let start = FixedBitSet::with_capacity(n);
    for k in 0..=n {
        if search.search(&start, k) {
            let mut set = search.chosen;
            set.sort_unstable();
            return Computed::Value(Some(set));
        }
        if search.exhausted {
            return Computed::Skipped;
        }
    }
    Computed::Value(None)
}

/// A minimum dominating set (sorted); empty for the empty graph.
pub fn minimum_dominating_set(g: &LabeledGraph, budgets: &Budgets) -> Computed<Vec<usize>> {
    minimum_cover(g, true, budgets).map(|s| s.expect("every graph has a dominating set"))
}

pub fn domination_number(g: &LabeledGraph, budgets: &Budgets) -> Computed<usize> {
    minimum_dominating_set(g, budgets).map(|s| s.len())
}

/// A minimum total dominating set, or `None` if some vertex is isolated.
pub fn minimum_total_dominating_set(
    g: &LabeledGraph,
    budgets: &Budgets,
) -> Computed<Option<Vec<usize>>> {
    minimum_cover(g, false, budgets)
}

/// Domination number of the twin-blown integer graph: the least number of
/// classes such that every class has a neighbour among them. Classes of one
/// type share their neighbourhood, so the search runs on the type graph and
/// each chosen type `g` is reported as the class `g` itself.
pub fn class_total_domination(
    m: &ZClassModel,
    budgets: &Budgets,
) -> Computed<Option<(usize, Vec<u64>)>> {
    let types = m.type_graph();
    minimum_total_dominating_set(&types, budgets).map(|found| {
        found.map(|set| {
            let classes: Vec<u64> = set
                .iter()
                .map(|&i| match types.label(i) {
                    crate::graph::Label::Residue(g) => *g,
                    other => unreachable!("type graph label {other}"),
                })
                .collect();
            (classes.len(), classes)
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_graphs() {
        let b = Budgets::default();
        let path = LabeledGraph::from_index_edges(3, &[(0, 1), (1, 2)]);
        assert_eq!(minimum_dominating_set(&path, &b), Computed::Value(vec![1]));
        assert_eq!(
            minimum_total_dominating_set(&path, &b),
            Computed::Value(Some(vec![0, 1]))
        );
        let c6: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        let c6 = LabeledGraph::from_index_edges(6, &c6);
        assert_eq!(domination_number(&c6, &b), Computed::Value(2));
        let isolated = LabeledGraph::from_index_edges(2, &[]);
        assert_eq!(domination_number(&isolated, &b), Computed::Value(2));
        assert_eq!(minimum_total_dominating_set(&isolated, &b), Computed::Value(None));
    }

    #[test]
    fn class_model_domination() {
        let b = Budgets::default();
        let m = ZClassModel::new(12);
        let (gamma, witness) = class_total_domination(&m, &b).into_value().unwrap().unwrap();
        assert_eq!(gamma, 2);
        let g = m.graph();
        let idx: Vec<usize> = witness
            .iter()
            .map(|&c| g.index_of(&crate::graph::Label::Residue(c)).unwrap())
            .collect();
        assert!(is_total_dominating(&g, &idx));
        assert_eq!(class_total_domination(&ZClassModel::new(8), &b), Computed::Value(Some((0, vec![]))));
    }

    #[test]
    fn same_shape_same_domination() {
        let b = Budgets::default();
        for (x, y) in [(12, 18), (30, 42), (36, 100), (60, 84)] {
            let gx = class_total_domination(&ZClassModel::new(x), &b).into_value().unwrap();
            let gy = class_total_domination(&ZClassModel::new(y), &b).into_value().unwrap();
            assert_eq!(gx.map(|t| t.0), gy.map(|t| t.0), "{x} vs {y}");
        }
    }
}
