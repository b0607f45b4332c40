//! Planarity by path addition on each biconnected block, with Kuratowski
//! subgraph extraction for nonplanar inputs.
//!
//! Each block is embedded starting from a cycle; at every step the pieces of
//! the block not yet drawn ("fragments") are listed with the faces that hold
//! all of their attachment vertices. A fragment with no such face proves the
//! block nonplanar. Otherwise a forced fragment (exactly one face) is drawn
//! first, or else any fragment, by routing one attachment-to-attachment path
//! through its face and splitting that face in two.

use std::collections::VecDeque;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::graph::{Label, LabeledGraph};

use super::{biconnected_components, Budgets, Computed};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum KuratowskiKind {
    K5,
    K33,
}

/// A subdivision of `K5` or `K3,3`: branch vertices and one path (endpoints
/// included) per edge of the underlying complete graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KuratowskiWitness {
    pub kind: KuratowskiKind,
    pub branch: Vec<Label>,
    pub paths: Vec<Vec<Label>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Planarity {
    /// Faces of the embedding of every block with a cycle, as vertex cycles.
    Planar { faces: Vec<Vec<usize>> },
    /// The witness is absent only above the witness vertex budget.
    Nonplanar { witness: Option<KuratowskiWitness> },
}

struct Block {
    adj: Vec<Vec<usize>>,
    edges: usize,
}

impl Block {
    fn new(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        Block {
            adj,
            edges: edges.len(),
        }
    }

    fn n(&self) -> usize {
        self.adj.len()
    }

    fn initial_cycle(&self) -> Vec<usize> {
        let u = 0;
        let v = self.adj[0][0];
        let n = self.n();
        let mut parent = vec![usize::MAX; n];
        parent[u] = u;
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x] {
                if (x == u && y == v) || parent[y] != usize::MAX {
                    continue;
                }
                parent[y] = x;
                queue.push_back(y);
            }
        }
        let mut cycle = vec![v];
        while *cycle.last().expect("nonempty") != u {
            let last = *cycle.last().expect("nonempty");
            cycle.push(parent[last]);
        }
        cycle
    }
}

struct Fragment {
    attachments: Vec<usize>,
    path: Vec<usize>,
}

struct Embedding<'a> {
    block: &'a Block,
    placed: Vec<bool>,
    drawn: Vec<FixedBitSet>,
    drawn_edges: usize,
    faces: Vec<Vec<usize>>,
}

impl Embedding<'_> {
    fn draw_path(&mut self, path: &[usize]) {
        for &v in path {
            self.placed[v] = true;
        }
        for w in path.windows(2) {
            self.drawn[w[0]].insert(w[1]);
            self.drawn[w[1]].insert(w[0]);
            self.drawn_edges += 1;
        }
    }

    fn fragments(&self) -> Vec<Fragment> {
        let n = self.block.n();
        let adj = &self.block.adj;
        let mut out = Vec::new();
        for (u, nbrs) in adj.iter().enumerate() {
            if !self.placed[u] {
                continue;
            }
            for &v in nbrs {
                if v > u && self.placed[v] && !self.drawn[u].contains(v) {
                    out.push(Fragment {
                        attachments: vec![u, v],
                        path: vec![u, v],
                    });
                }
            }
        }
        let mut seen = vec![false; n];
        for s in 0..n {
            if self.placed[s] || seen[s] {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = VecDeque::from([s]);
            seen[s] = true;
            while let Some(x) = queue.pop_front() {
                comp.push(x);
                for &y in &adj[x] {
                    if !self.placed[y] && !seen[y] {
                        seen[y] = true;
                        queue.push_back(y);
                    }
                }
            }
            let mut attachments: Vec<usize> = comp
                .iter()
                .flat_map(|&x| adj[x].iter().copied().filter(|&y| self.placed[y]))
                .collect();
            attachments.sort_unstable();
            attachments.dedup();
            let path = self.component_path(&comp, &attachments);
            out.push(Fragment { attachments, path });
        }
        out
    }

    /// Path `a, c, ..., w, b` through a component between two distinct attachments.
    fn component_path(&self, comp: &[usize], attachments: &[usize]) -> Vec<usize> {
        let adj = &self.block.adj;
        let a = attachments[0];
        let c = *comp
            .iter()
            .filter(|&&x| adj[x].contains(&a))
            .min()
            .expect("every attachment touches the component");
        let mut parent = vec![usize::MAX; self.block.n()];
        parent[c] = c;
        let mut queue = VecDeque::from([c]);
        while let Some(x) = queue.pop_front() {
            if let Some(&b) = adj[x].iter().find(|&&y| self.placed[y] && y != a) {
                let mut inner = vec![x];
                while *inner.last().expect("nonempty") != c {
                    let last = *inner.last().expect("nonempty");
                    inner.push(parent[last]);
                }
                inner.reverse();
                let mut path = vec![a];
                path.extend(inner);
                path.push(b);
                return path;
            }
            for &y in &adj[x] {
                if !self.placed[y] && parent[y] == usize::MAX {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        unreachable!("a block fragment has two attachments")
    }

    fn split_face(&mut self, face: usize, path: &[usize]) {
        let f = std::mem::take(&mut self.faces[face]);
        let pos = |v: usize| f.iter().position(|&x| x == v).expect("attachment on face");
        let (ia, ib) = (pos(path[0]), pos(*path.last().expect("nonempty")));
        let (i, j, path): (usize, usize, Vec<usize>) = if ia < ib {
            (ia, ib, path.to_vec())
        } else {
            (ib, ia, path.iter().rev().copied().collect())
        };
        let inner = &path[1..path.len() - 1];
        let mut first: Vec<usize> = f[i..=j].to_vec();
        first.extend(inner.iter().rev());
        let mut second: Vec<usize> = f[j..].to_vec();
        second.extend_from_slice(&f[..=i]);
        second.extend_from_slice(inner);
        self.faces[face] = first;
        self.faces.push(second);
    }
}

/// Faces of a planar embedding of a biconnected block, or `None`.
fn embed_block(block: &Block) -> Option<Vec<Vec<usize>>> {
    let n = block.n();
    if n >= 3 && block.edges > 3 * n - 6 {
        return None;
    }
    let cycle = block.initial_cycle();
    let mut emb = Embedding {
        block,
        placed: vec![false; n],
        drawn: vec![FixedBitSet::with_capacity(n); n],
        drawn_edges: 0,
        faces: vec![cycle.clone(), cycle.clone()],
    };
    let mut closed = cycle.clone();
    closed.push(cycle[0]);
    emb.draw_path(&closed);
    while emb.drawn_edges < block.edges {
        let fragments = emb.fragments();
        let mut forced = None;
        let mut fallback = None;
        for (k, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = (0..emb.faces.len())
                .filter(|&f| frag.attachments.iter().all(|a| emb.faces[f].contains(a)))
                .collect();
            match admissible.len() {
                0 => return None,
                1 => {
                    forced.get_or_insert((k, admissible[0]));
                }
                _ => {
                    fallback.get_or_insert((k, admissible[0]));
                }
            }
        }
        let (k, face) = forced.or(fallback).expect("undrawn edges leave a fragment");
        let path = fragments[k].path.clone();
        emb.split_face(face, &path);
        emb.draw_path(&path);
    }
    let placed = emb.placed.iter().filter(|&&p| p).count();
    debug_assert_eq!(placed + emb.faces.len(), block.edges + 2, "Euler on an embedded block");
    Some(emb.faces)
}

/// Planar embedding faces of the graph on `n` vertices with these edges.
fn embed(n: usize, edges: &[(usize, usize)]) -> Option<Vec<Vec<usize>>> {
    if n >= 3 && edges.len() > 3 * n - 6 {
        return None;
    }
    let g = LabeledGraph::from_index_edges(n, edges);
    let mut faces = Vec::new();
    for block_edges in biconnected_components(&g) {
        if block_edges.len() < 3 {
            continue;
        }
        let mut verts: Vec<usize> = block_edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        verts.sort_unstable();
        verts.dedup();
        let local = |x: usize| verts.binary_search(&x).expect("block vertex");
        let local_edges: Vec<(usize, usize)> =
            block_edges.iter().map(|&(u, v)| (local(u), local(v))).collect();
        let block = Block::new(verts.len(), &local_edges);
        for face in embed_block(&block)? {
            faces.push(face.into_iter().map(|x| verts[x]).collect());
        }
    }
    Some(faces)
}

fn find_k5(g: &LabeledGraph) -> Option<Vec<usize>> {
    fn grow(g: &LabeledGraph, clique: &mut Vec<usize>, cand: FixedBitSet) -> bool {
        if clique.len() == 5 {
            return true;
        }
        if clique.len() + cand.count_ones(..) < 5 {
            return false;
        }
        for v in cand.ones() {
            let mut next = cand.clone();
            next.intersect_with(g.row(v));
            next.set_range(..v + 1, false);
            clique.push(v);
            if grow(g, clique, next) {
                return true;
            }
            clique.pop();
        }
        false
    }
    let mut cand = FixedBitSet::with_capacity(g.order());
    cand.extend((0..g.order()).filter(|&v| g.degree(v) >= 4));
    let mut clique = Vec::new();
    grow(g, &mut clique, cand).then_some(clique)
}

/// Shrinks a nonplanar edge set to an edge-minimal nonplanar subgraph by
/// deleting chunks of edges while nonplanarity survives; the last pass uses
/// single edges, so every remaining edge is necessary.
fn minimise(n: usize, mut edges: Vec<(usize, usize)>) -> Vec<(usize, usize)> {
    let mut chunk = edges.len() / 2;
    loop {
        let step = chunk.max(1);
        let mut i = 0;
        while i < edges.len() {
            let end = (i + step).min(edges.len());
            let mut trial = edges[..i].to_vec();
            trial.extend_from_slice(&edges[end..]);
            if embed(n, &trial).is_none() {
                edges = trial;
            } else {
                i += step;
            }
        }
        if step == 1 {
            return edges;
        }
        chunk /= 2;
    }
}

/// Branch vertices and branch-to-branch paths of a subdivision.
fn trace(n: usize, edges: &[(usize, usize)]) -> Option<(KuratowskiKind, Vec<usize>, Vec<Vec<usize>>)> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let branch: Vec<usize> = (0..n).filter(|&v| adj[v].len() >= 3).collect();
    let kind = match (branch.len(), branch.iter().all(|&b| adj[b].len() == 4)) {
        (5, true) => KuratowskiKind::K5,
        (6, _) if branch.iter().all(|&b| adj[b].len() == 3) => KuratowskiKind::K33,
        _ => return None,
    };
    let mut paths = Vec::new();
    for &b in &branch {
        for &first in &adj[b] {
            let mut path = vec![b, first];
            while adj[*path.last().expect("nonempty")].len() == 2 {
                let last = *path.last().expect("nonempty");
                let prev = path[path.len() - 2];
                let next = *adj[last].iter().find(|&&x| x != prev)?;
                path.push(next);
            }
            if path[0] < *path.last().expect("nonempty") {
                paths.push(path);
            }
        }
    }
    paths.sort();
    Some((kind, branch, paths))
}

fn witness(g: &LabeledGraph) -> Option<KuratowskiWitness> {
    let names = |idx: &[usize]| idx.iter().map(|&i| g.label(i).clone()).collect::<Vec<_>>();
    if let Some(k5) = find_k5(g) {
        let mut paths = Vec::new();
        for a in 0..5 {
            for b in a + 1..5 {
                paths.push(names(&[k5[a], k5[b]]));
            }
        }
        return Some(KuratowskiWitness {
            kind: KuratowskiKind::K5,
            branch: names(&k5),
            paths,
        });
    }
    let n = g.order();
    let block = biconnected_components(g)
        .into_iter()
        .find(|b| b.len() >= 9 && embed(n, b).is_none())?;
    let minimal = minimise(n, block);
    let (kind, branch, paths) = trace(n, &minimal)?;
    Some(KuratowskiWitness {
        kind,
        branch: names(&branch),
        paths: paths.iter().map(|p| names(p)).collect(),
    })
}

pub fn planarity(g: &LabeledGraph, budgets: &Budgets) -> Computed<Planarity> {
    if g.size() > budgets.planarity_edges {
        return Computed::Skipped;
    }
    match embed(g.order(), &g.edges()) {
        Some(faces) => Computed::Value(Planarity::Planar { faces }),
        None => Computed::Value(Planarity::Nonplanar {
            witness: if g.order() <= budgets.kuratowski_vertices {
                witness(g)
            } else {
                None
            },
        }),
    }
}

/// Checks that the witness is a `K5` or `K3,3` subdivision inside `g`.
pub fn verify_kuratowski(g: &LabeledGraph, w: &KuratowskiWitness) -> bool {
    let Some(branch) = w
        .branch
        .iter()
        .map(|l| g.index_of(l))
        .collect::<Option<Vec<usize>>>()
    else {
        return false;
    };
    let (nb, np) = match w.kind {
        KuratowskiKind::K5 => (5, 10),
        KuratowskiKind::K33 => (6, 9),
    };
    let mut sorted = branch.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != nb || w.paths.len() != np {
        return false;
    }
    let mut used_inner = vec![false; g.order()];
    let mut pairs = Vec::new();
    for p in &w.paths {
        let Some(idx) = p.iter().map(|l| g.index_of(l)).collect::<Option<Vec<usize>>>() else {
            return false;
        };
        if idx.len() < 2 || !idx.windows(2).all(|e| g.adjacent(e[0], e[1])) {
            return false;
        }
        let (s, t) = (idx[0], idx[idx.len() - 1]);
        if sorted.binary_search(&s).is_err() || sorted.binary_search(&t).is_err() || s == t {
            return false;
        }
        for &x in &idx[1..idx.len() - 1] {
            if sorted.binary_search(&x).is_ok() || used_inner[x] {
                return false;
            }
            used_inner[x] = true;
        }
        pairs.push((s.min(t), s.max(t)));
    }
    pairs.sort_unstable();
    if pairs.windows(2).any(|w| w[0] == w[1]) {
        return false;
    }
    match w.kind {
        KuratowskiKind::K5 => true,
        KuratowskiKind::K33 => {
            let root = sorted[0];
            let side: Vec<usize> = pairs
                .iter()
                .filter_map(|&(a, b)| match (a == root, b == root) {
                    (true, _) => Some(b),
                    (_, true) => Some(a),
                    _ => None,
                })
                .collect();
            let other: Vec<usize> = sorted.iter().copied().filter(|x| !side.contains(x)).collect();
            side.len() == 3
                && other.len() == 3
                && other.iter().all(|&a| {
                    side.iter()
                        .all(|&b| pairs.binary_search(&(a.min(b), a.max(b))).is_ok())
                })
        }
    }
}
