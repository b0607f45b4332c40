use crate::graph::LabeledGraph;

pub fn is_complete(g: &LabeledGraph) -> bool {
    let n = g.order();
    g.size() == n * n.saturating_sub(1) / 2
}

struct LowLink<'a> {
    g: &'a LabeledGraph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    is_cut: Vec<bool>,
    edge_stack: Vec<(usize, usize)>,
    blocks: Vec<Vec<(usize, usize)>>,
}

impl LowLink<'_> {
    fn visit(&mut self, u: usize, parent: usize) {
        self.time += 1;
        self.disc[u] = self.time;
        self.low[u] = self.time;
        let mut children = 0;
        let neighbors: Vec<usize> = self.g.neighbors(u).collect();
        for v in neighbors {
            if self.disc[v] == 0 {
                children += 1;
                self.edge_stack.push((u, v));
                self.visit(v, u);
                self.low[u] = self.low[u].min(self.low[v]);
                if self.low[v] >= self.disc[u] {
                    if parent != usize::MAX || children > 1 {
                        self.is_cut[u] = true;
                    }
                    let mut block = Vec::new();
                    while let Some(e) = self.edge_stack.pop() {
                        block.push((e.0.min(e.1), e.0.max(e.1)));
                        if e == (u, v) {
                            break;
                        }
                    }
                    block.sort_unstable();
                    self.blocks.push(block);
                }
            } else if v != parent && self.disc[v] < self.disc[u] {
                self.edge_stack.push((u, v));
                self.low[u] = self.low[u].min(self.disc[v]);
            }
        }
        if parent == usize::MAX && children > 1 {
            self.is_cut[u] = true;
        }
    }
}

fn lowlink(g: &LabeledGraph) -> LowLink<'_> {
    let n = g.order();
    let mut state = LowLink {
        g,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        is_cut: vec![false; n],
        edge_stack: Vec::new(),
        blocks: Vec::new(),
    };
    for s in 0..n {
        if state.disc[s] == 0 {
            state.visit(s, usize::MAX);
        }
    }
    state
}

/// Articulation points, ascending.
pub fn cut_vertices(g: &LabeledGraph) -> Vec<usize> {
    let state = lowlink(g);
    (0..g.order()).filter(|&v| state.is_cut[v]).collect()
}

/// Edge sets of the biconnected components (isolated vertices have none),
/// ordered by their smallest edge.
pub fn biconnected_components(g: &LabeledGraph) -> Vec<Vec<(usize, usize)>> {
    let mut blocks = lowlink(g).blocks;
    blocks.sort();
    blocks
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_and_cycle() {
        let path = LabeledGraph::from_index_edges(3, &[(0, 1), (1, 2)]);
        assert_eq!(cut_vertices(&path), vec![1]);
        assert_eq!(biconnected_components(&path), vec![vec![(0, 1)], vec![(1, 2)]]);
        let c4 = LabeledGraph::from_index_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert!(cut_vertices(&c4).is_empty());
        assert_eq!(biconnected_components(&c4).len(), 1);
        assert!(!is_complete(&c4));
        assert!(is_complete(&LabeledGraph::from_index_edges(1, &[])));
    }

    #[test]
    fn bowtie() {
        let g = LabeledGraph::from_index_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]);
        assert_eq!(cut_vertices(&g), vec![2]);
        assert_eq!(
            biconnected_components(&g),
            vec![vec![(0, 1), (0, 2), (1, 2)], vec![(2, 3), (2, 4), (3, 4)]]
        );
    }
}
