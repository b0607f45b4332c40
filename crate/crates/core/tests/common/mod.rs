//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the library's algorithms; graphs are read only through `adjacent`.
#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use cozero::graph::LabeledGraph;
use cozero::invariants::{KuratowskiKind, KuratowskiWitness};
use cozero::{Ideal, Ring};
use rand::Rng;

pub type Matrix = Vec<Vec<bool>>;

pub fn matrix(g: &LabeledGraph) -> Matrix {
    let n = g.order();
    (0..n).map(|i| (0..n).map(|j| i != j && g.adjacent(i, j)).collect()).collect()
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> LabeledGraph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_bool(p) {
                edges.push((i, j));
            }
        }
    }
    LabeledGraph::from_index_edges(n, &edges)
}

fn edge_count(m: &Matrix) -> usize {
    m.iter().map(|r| r.iter().filter(|&&b| b).count()).sum::<usize>() / 2
}

/// Floyd-Warshall. `None` is an infinite distance.
pub fn all_pairs(m: &Matrix) -> Vec<Vec<Option<u64>>> {
    let n = m.len();
    let mut d: Vec<Vec<Option<u64>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Some(0) } else if m[i][j] { Some(1) } else { None })
                .collect()
        })
        .collect();
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

/// `Some(0)` on the empty graph, `None` when disconnected.
pub fn diameter(m: &Matrix) -> Option<u64> {
    let d = all_pairs(m);
    let mut best = 0;
    for row in &d {
        for x in row {
            best = best.max((*x)?);
        }
    }
    Some(best)
}

pub fn connected(m: &Matrix) -> bool {
    let d = all_pairs(m);
    d.iter().all(|r| r.iter().all(Option::is_some))
}

/// Shortest cycle: for each edge `uv`, one plus the `u`-`v` distance without it.
pub fn girth(m: &Matrix) -> Option<u64> {
    let n = m.len();
    let mut best: Option<u64> = None;
    for u in 0..n {
        for v in u + 1..n {
            if !m[u][v] {
                continue;
            }
            let mut dist = vec![None; n];
            dist[u] = Some(0u64);
            let mut q = VecDeque::from([u]);
            while let Some(a) = q.pop_front() {
                for b in 0..n {
                    if m[a][b] && !(a == u && b == v) && dist[b].is_none() {
                        dist[b] = Some(dist[a].unwrap() + 1);
                        q.push_back(b);
                    }
                }
            }
            if let Some(d) = dist[v] {
                best = Some(best.map_or(d + 1, |b: u64| b.min(d + 1)));
            }
        }
    }
    best
}

fn is_clique(m: &Matrix, mask: u32) -> bool {
    let n = m.len();
    (0..n).all(|i| mask >> i & 1 == 0 || (i + 1..n).all(|j| mask >> j & 1 == 0 || m[i][j]))
}

fn is_independent(m: &Matrix, mask: u32) -> bool {
    let n = m.len();
    (0..n).all(|i| mask >> i & 1 == 0 || (i + 1..n).all(|j| mask >> j & 1 == 0 || !m[i][j]))
}

pub fn clique_number(m: &Matrix) -> usize {
    (0u32..1 << m.len())
        .filter(|&s| is_clique(m, s))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Fewest independent sets covering the vertex set, by DP over subsets.
pub fn chromatic_number(m: &Matrix) -> usize {
    let n = m.len();
    let full = (1u32 << n) - 1;
    let indep: Vec<bool> = (0..=full).map(|s| is_independent(m, s)).collect();
    let mut dp = vec![usize::MAX; 1 << n];
    dp[0] = 0;
    for mask in 1..=full {
        let low = mask & mask.wrapping_neg();
        let mut sub = mask;
        while sub > 0 {
            if sub & low != 0 && indep[sub as usize] && dp[(mask ^ sub) as usize] != usize::MAX {
                dp[mask as usize] = dp[mask as usize].min(dp[(mask ^ sub) as usize] + 1);
            }
            sub = (sub - 1) & mask;
        }
    }
    dp[full as usize]
}

/// Smallest `S` with every vertex outside `S` (all vertices when `total`)
/// adjacent to `S`. `None` if no such set exists.
pub fn domination(m: &Matrix, total: bool) -> Option<usize> {
    let n = m.len();
    (0u32..1 << n)
        .filter(|&s| {
            (0..n).all(|v| {
                (!total && s >> v & 1 == 1) || (0..n).any(|u| s >> u & 1 == 1 && m[u][v])
            })
        })
        .map(|s| s.count_ones() as usize)
        .min()
}

/// Held-Karp over subsets.
pub fn hamiltonian(m: &Matrix) -> bool {
    let n = m.len();
    if n < 3 {
        return false;
    }
    let mut dp = vec![vec![false; n]; 1 << n];
    dp[1][0] = true;
    for mask in 1usize..1 << n {
        if mask & 1 == 0 {
            continue;
        }
        for v in 0..n {
            if !dp[mask][v] {
                continue;
            }
            for w in 0..n {
                if mask >> w & 1 == 0 && m[v][w] {
                    dp[mask | 1 << w][w] = true;
                }
            }
        }
    }
    (1..n).any(|v| dp[(1 << n) - 1][v] && m[v][0])
}

fn component_count(m: &Matrix, removed: Option<usize>) -> usize {
    let n = m.len();
    let mut seen = vec![false; n];
    let mut count = 0;
    for s in 0..n {
        if seen[s] || Some(s) == removed {
            continue;
        }
        count += 1;
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(a) = stack.pop() {
            for b in 0..n {
                if m[a][b] && !seen[b] && Some(b) != removed {
                    seen[b] = true;
                    stack.push(b);
                }
            }
        }
    }
    count
}

pub fn components(m: &Matrix) -> usize {
    component_count(m, None)
}

pub fn cut_vertices(m: &Matrix) -> Vec<usize> {
    let base = component_count(m, None);
    (0..m.len()).filter(|&v| component_count(m, Some(v)) > base).collect()
}

/// Bipartite by trying every 2-colouring.
pub fn bipartite(m: &Matrix) -> bool {
    let n = m.len();
    (0u32..1 << n).any(|s| {
        (0..n).all(|i| (i + 1..n).all(|j| !m[i][j] || (s >> i & 1) != (s >> j & 1)))
    })
}

pub fn complete_bipartite(m: &Matrix) -> bool {
    let n = m.len();
    (1u32..(1 << n) - 1).any(|s| {
        (0..n).all(|i| (i + 1..n).all(|j| m[i][j] == ((s >> i & 1) != (s >> j & 1))))
    })
}

/// Checks a combinatorial embedding given as faces. Every edge on a cycle
/// must border exactly two face sides, every face edge must exist, and
/// each face-connected piece must glue into a sphere: summed over pieces,
/// `V - E + F = 2` where a vertex counts once per cycle of its link.
pub fn planar_certificate(m: &Matrix, faces: &[Vec<usize>]) -> bool {
    let n = m.len();
    let mut sides = vec![vec![0usize; n]; n];
    for f in faces {
        let k = f.len();
        if k < 3 {
            return false;
        }
        for i in 0..k {
            let (a, b) = (f[i], f[(i + 1) % k]);
            if a >= n || b >= n || !m[a][b] {
                return false;
            }
            sides[a][b] += 1;
            sides[b][a] += 1;
        }
    }
    let mut cyc_edges = 0;
    for u in 0..n {
        for v in u + 1..n {
            if !m[u][v] {
                continue;
            }
            let mut without = m.clone();
            without[u][v] = false;
            without[v][u] = false;
            let bridge = component_count(&without, None) > component_count(m, None);
            match (bridge, sides[u][v]) {
                (true, 0) => {}
                (false, 2) => cyc_edges += 1,
                _ => return false,
            }
        }
    }
    // Link cycles: corners (a, v, b) join a and b around v.
    let mut link: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new(); n]; n];
    for f in faces {
        let k = f.len();
        for i in 0..k {
            let (a, v, b) = (f[(i + k - 1) % k], f[i], f[(i + 1) % k]);
            link[v][a].push(b);
            link[v][b].push(a);
        }
    }
    let mut link_cycles = 0;
    for lv in &link {
        let mut seen = vec![false; n];
        for s in 0..n {
            if lv[s].is_empty() || seen[s] {
                continue;
            }
            if lv[s].len() != 2 {
                return false;
            }
            link_cycles += 1;
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(a) = stack.pop() {
                for &b in &lv[a] {
                    if !seen[b] {
                        seen[b] = true;
                        stack.push(b);
                    }
                }
            }
        }
    }
    // Pieces: faces sharing an edge belong together.
    let mut piece: Vec<usize> = (0..faces.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    let mut owner: std::collections::HashMap<(usize, usize), usize> = Default::default();
    for (fi, f) in faces.iter().enumerate() {
        let k = f.len();
        for i in 0..k {
            let e = (f[i].min(f[(i + 1) % k]), f[i].max(f[(i + 1) % k]));
            if let Some(&other) = owner.get(&e) {
                let (a, b) = (find(&mut piece, fi), find(&mut piece, other));
                piece[a] = b;
            } else {
                owner.insert(e, fi);
            }
        }
    }
    let pieces: BTreeSet<usize> = (0..faces.len()).map(|f| find(&mut piece, f)).collect();
    link_cycles as i64 - cyc_edges as i64 + faces.len() as i64 == 2 * pieces.len() as i64
}

/// Checks a Kuratowski subdivision directly against the adjacency matrix.
pub fn kuratowski_valid(g: &LabeledGraph, w: &KuratowskiWitness) -> bool {
    let idx = |l| g.index_of(l);
    let Some(branch): Option<Vec<usize>> = w.branch.iter().map(idx).collect() else {
        return false;
    };
    let (nb, np) = match w.kind {
        KuratowskiKind::K5 => (5, 10),
        KuratowskiKind::K33 => (6, 9),
    };
    let bset: BTreeSet<usize> = branch.iter().copied().collect();
    if bset.len() != nb || w.paths.len() != np {
        return false;
    }
    let mut inner = BTreeSet::new();
    let mut pairs = BTreeSet::new();
    for p in &w.paths {
        let Some(p): Option<Vec<usize>> = p.iter().map(idx).collect() else {
            return false;
        };
        if p.len() < 2 || p.windows(2).any(|e| !g.adjacent(e[0], e[1])) {
            return false;
        }
        let (s, t) = (p[0], *p.last().unwrap());
        if !bset.contains(&s) || !bset.contains(&t) || s == t {
            return false;
        }
        for &x in &p[1..p.len() - 1] {
            if bset.contains(&x) || !inner.insert(x) {
                return false;
            }
        }
        if !pairs.insert((s.min(t), s.max(t))) {
            return false;
        }
    }
    match w.kind {
        KuratowskiKind::K5 => true,
        KuratowskiKind::K33 => {
            // The branch graph must be 2-colourable with every cross pair present.
            let b: Vec<usize> = bset.into_iter().collect();
            (0u32..64).any(|s| {
                s.count_ones() == 3
                    && (0..6).all(|i| {
                        (i + 1..6).all(|j| {
                            let cross = (s >> i & 1) != (s >> j & 1);
                            pairs.contains(&(b[i], b[j])) == cross
                        })
                    })
            })
        }
    }
}

/// A ring as plain coordinate vectors, with set-based ideals.
pub struct BruteRing {
    pub moduli: Vec<u64>,
    pub elems: Vec<Vec<u64>>,
}

pub type Set = BTreeSet<Vec<u64>>;
/// Vertices and edges as coordinate vectors.
pub type CoordGraph = (Vec<Vec<u64>>, Vec<(Vec<u64>, Vec<u64>)>);

impl BruteRing {
    pub fn new(moduli: &[u64]) -> Self {
        let mut elems = vec![Vec::new()];
        for &n in moduli {
            elems = elems
                .into_iter()
                .flat_map(|p: Vec<u64>| {
                    (0..n).map(move |c| {
                        let mut q = p.clone();
                        q.push(c);
                        q
                    })
                })
                .collect();
        }
        BruteRing {
            moduli: moduli.to_vec(),
            elems,
        }
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        (0..a.len()).map(|i| (a[i] + b[i]) % self.moduli[i]).collect()
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        (0..a.len()).map(|i| (a[i] * b[i]) % self.moduli[i]).collect()
    }

    pub fn zero(&self) -> Vec<u64> {
        vec![0; self.moduli.len()]
    }

    pub fn one(&self) -> Vec<u64> {
        self.moduli.iter().map(|&n| 1 % n).collect()
    }

    /// `xR + I` as a set.
    pub fn principal_plus(&self, x: &[u64], ideal: &Set) -> Set {
        let mut out = Set::new();
        for r in &self.elems {
            let xr = self.mul(x, r);
            for i in ideal {
                out.insert(self.add(&xr, i));
            }
        }
        out
    }

    pub fn ideal_of(&self, gen: &[u64]) -> Set {
        self.principal_plus(gen, &Set::from([self.zero()]))
    }

    /// Elements with some power in `ideal`.
    pub fn radical(&self, ideal: &Set) -> Set {
        self.elems
            .iter()
            .filter(|x| {
                let mut p = (*x).clone();
                for _ in 0..=self.elems.len() {
                    if ideal.contains(&p) {
                        return true;
                    }
                    p = self.mul(&p, x);
                }
                false
            })
            .cloned()
            .collect()
    }

    pub fn proper(&self, ideal: &Set) -> bool {
        !ideal.contains(&self.one())
    }

    /// Every ideal as a set: ideals here are principal, so `gR` over all `g`.
    pub fn all_ideals(&self) -> BTreeSet<Set> {
        self.elems.iter().map(|g| self.ideal_of(g)).collect()
    }

    /// Maximal ideals: proper ideals contained in no larger proper ideal.
    pub fn maximal_ideals(&self) -> Vec<Set> {
        let proper: Vec<Set> = self.all_ideals().into_iter().filter(|i| self.proper(i)).collect();
        proper
            .iter()
            .filter(|i| !proper.iter().any(|j| j.len() > i.len() && i.is_subset(j)))
            .cloned()
            .collect()
    }

    /// Vertices and edges of `Γ″_I` (`quasi = false`) or `QΓ″_I` from the definitions.
    pub fn graph(&self, ideal: &Set, quasi: bool) -> CoordGraph {
        let rad = self.radical(ideal);
        let spans: Vec<(Vec<u64>, Set)> = self
            .elems
            .iter()
            .filter_map(|x| {
                if quasi {
                    if rad.contains(x) {
                        return None;
                    }
                    let s = self.principal_plus(x, ideal);
                    (self.proper(&s) && s == self.principal_plus(x, &rad)).then(|| (x.clone(), s))
                } else {
                    if ideal.contains(x) {
                        return None;
                    }
                    let s = self.principal_plus(x, ideal);
                    self.proper(&s).then(|| (x.clone(), s))
                }
            })
            .collect();
        let mut edges = Vec::new();
        for (i, (x, sx)) in spans.iter().enumerate() {
            for (y, sy) in &spans[i + 1..] {
                if !sy.contains(x) && !sx.contains(y) {
                    edges.push((x.clone(), y.clone()));
                }
            }
        }
        (spans.into_iter().map(|(x, _)| x).collect(), edges)
    }
}

pub fn ideal_set(br: &BruteRing, i: &Ideal) -> Set {
    br.ideal_of(i.generator().coords())
}

pub fn brute(r: &Ring) -> BruteRing {
    BruteRing::new(r.moduli())
}

/// Graph vertices and edges as coordinate vectors, for comparison with [`BruteRing::graph`].
pub fn coords(g: &LabeledGraph) -> CoordGraph {
    let c = |i: usize| g.label(i).element().expect("element label").coords().to_vec();
    let vs = (0..g.order()).map(c).collect();
    let es = g.edges().into_iter().map(|(a, b)| (c(a), c(b))).collect();
    (vs, es)
}

/// Greatest common divisor, for the integer-model oracles.
pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Distinct prime divisors by trial division.
pub fn primes_of(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn edge_total(m: &Matrix) -> usize {
    edge_count(m)
}
