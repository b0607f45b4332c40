use std::collections::VecDeque;

use crate::graph::LabeledGraph;

use super::Extended;

/// BFS distances from `s`; `None` for unreachable vertices.
pub fn bfs_distances(g: &LabeledGraph, s: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.order()];
    dist[s] = Some(0);
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        let d = dist[u].expect("queued vertices have a distance");
        for v in g.neighbors(u) {
            if dist[v].is_none() {
                dist[v] = Some(d + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}

/// Shortest path from `s` to `t` as a vertex list, lowest-index parents first.
pub fn shortest_path(g: &LabeledGraph, s: usize, t: usize) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; g.order()];
    parent[s] = s;
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        if u == t {
            break;
        }
        for v in g.neighbors(u) {
            if parent[v] == usize::MAX {
                parent[v] = u;
                queue.push_back(v);
            }
        }
    }
    if parent[t] == usize::MAX {
        return None;
    }
    let mut path = vec![t];
    while *path.last().expect("nonempty") != s {
        let last = *path.last().expect("nonempty");
        path.push(parent[last]);
    }
    path.reverse();
    Some(path)
}

/// Connected components, each sorted, ordered by smallest vertex.
pub fn components(g: &LabeledGraph) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.order()];
    let mut out = Vec::new();
    for s in 0..g.order() {
        if seen[s] {
            continue;
        }
        let mut comp: Vec<usize> = bfs_distances(g, s)
            .iter()
            .enumerate()
            .filter_map(|(v, d)| d.map(|_| v))
            .collect();
        comp.sort_unstable();
        for &v in &comp {
            seen[v] = true;
        }
        out.push(comp);
    }
    out
}

/// The empty graph counts as connected.
pub fn is_connected(g: &LabeledGraph) -> bool {
    components(g).len() <= 1
}

/// Diameter; `0` for the empty graph, `∞` when disconnected.
pub fn diameter(g: &LabeledGraph) -> Extended {
    match eccentricity_pair(g) {
        None => Extended::Finite(0),
        Some((_, _, d)) => d,
    }
}

/// A pair realising the diameter (lowest indices first), or an unreachable
/// pair when disconnected. `None` on the empty graph.
pub fn eccentricity_pair(g: &LabeledGraph) -> Option<(usize, usize, Extended)> {
    let n = g.order();
    if n == 0 {
        return None;
    }
    let rows = crate::par::map_range(n, |s| bfs_distances(g, s));
    let mut best = (0, 0, Extended::Finite(0));
    for (s, row) in rows.iter().enumerate() {
        for (t, d) in row.iter().enumerate().skip(s + 1) {
            let d = d.map_or(Extended::Infinite, |d| Extended::Finite(d as u64));
            if d > best.2 {
                best = (s, t, d);
            }
        }
    }
    Some(best)
}

/// Girth by a BFS from every vertex: each non-tree edge `uv` closes a walk of
/// length `d(u) + d(v) + 1` through the root, and the minimum over all roots
/// is the shortest cycle.
pub fn girth(g: &LabeledGraph) -> Extended {
    let n = g.order();
    let per_root = crate::par::map_range(n, |s| {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        let mut best = usize::MAX;
        while let Some(u) = queue.pop_front() {
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for v in g.neighbors(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if parent[u] != v {
                    best = best.min(dist[u] + dist[v] + 1);
                }
            }
        }
        best
    });
    match per_root.into_iter().min() {
        Some(b) if b != usize::MAX => Extended::Finite(b as u64),
        _ => Extended::Infinite,
    }
}

/// Lexicographically first triangle.
pub fn find_triangle(g: &LabeledGraph) -> Option<[usize; 3]> {
    for a in 0..g.order() {
        for b in g.neighbors(a).filter(|&b| b > a) {
            let mut common = g.row(a).clone();
            common.intersect_with(g.row(b));
            if let Some(c) = common.ones().find(|&c| c > b) {
                return Some([a, b, c]);
            }
        }
    }
    None
}
