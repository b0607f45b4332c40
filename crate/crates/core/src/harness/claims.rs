use std::cell::OnceCell;

use serde_json::{json, Value};

use crate::graph::{
    build_gamma_prime_quotient, delete_ideal_vertices, gamma_dblprime, is_q_dblprime_vertex,
    q_gamma_dblprime, q_gamma_i, Label, LabeledGraph,
};
use crate::ideal::{enumerate_proper_ideals, maximal_ideals, Ideal, IdealContext, IdealFilter};
use crate::invariants::{
    bipartite_structure, check_homomorphism, chromatic_number, clique_number, components,
    cut_vertices, eccentricity_pair, find_triangle, girth, hamiltonian_cycle, planarity,
    subgraph_embedding_exists, verify_retraction, Budgets, Computed, Extended,
    HomomorphismWitness, MapKind, Planarity, VertexMap,
};
use crate::quotient::QuotientRing;
use crate::ring::RingElement;

use super::{timed, ClaimId, Instance, Outcome, TheoremVerdict};

/// Graphs and contexts of one instance, built on first use.
pub(crate) struct InstanceData<'a> {
    inst: &'a Instance,
    budgets: Budgets,
    ctx: IdealContext,
    radical_ctx: OnceCell<IdealContext>,
    gamma: OnceCell<LabeledGraph>,
    gamma_minus_j: OnceCell<LabeledGraph>,
    gamma_radical: OnceCell<LabeledGraph>,
    q: OnceCell<LabeledGraph>,
    q_minus_j: OnceCell<LabeledGraph>,
    cozero_quotient: OnceCell<LabeledGraph>,
    cozero_radical_quotient: OnceCell<LabeledGraph>,
}

impl<'a> InstanceData<'a> {
    fn new(inst: &'a Instance, budgets: &Budgets) -> Self {
        InstanceData {
            inst,
            budgets: *budgets,
            ctx: IdealContext::new(&inst.ideal).expect("universe ideals are proper"),
            radical_ctx: OnceCell::new(),
            gamma: OnceCell::new(),
            gamma_minus_j: OnceCell::new(),
            gamma_radical: OnceCell::new(),
            q: OnceCell::new(),
            q_minus_j: OnceCell::new(),
            cozero_quotient: OnceCell::new(),
            cozero_radical_quotient: OnceCell::new(),
        }
    }

    fn ideal(&self) -> &Ideal {
        &self.inst.ideal
    }

    fn radical(&self) -> &Ideal {
        self.ctx.radical()
    }

    fn radical_ctx(&self) -> &IdealContext {
        self.radical_ctx
            .get_or_init(|| IdealContext::new(self.ctx.radical()).expect("√I is proper"))
    }

    /// `Γ″_I(R)`.
    fn gamma(&self) -> &LabeledGraph {
        self.gamma.get_or_init(|| gamma_dblprime(&self.ctx))
    }

    fn gamma_minus_j(&self) -> &LabeledGraph {
        self.gamma_minus_j.get_or_init(|| {
            delete_ideal_vertices(self.gamma(), self.ctx.jacobson()).expect("same ring")
        })
    }

    /// `Γ″_√I(R)`.
    fn gamma_radical(&self) -> &LabeledGraph {
        self.gamma_radical
            .get_or_init(|| gamma_dblprime(self.radical_ctx()))
    }

    /// `QΓ″_I(R)`.
    fn q(&self) -> &LabeledGraph {
        self.q.get_or_init(|| q_gamma_dblprime(&self.ctx))
    }

    fn q_minus_j(&self) -> &LabeledGraph {
        self.q_minus_j.get_or_init(|| {
            delete_ideal_vertices(self.q(), self.ctx.jacobson()).expect("same ring")
        })
    }

    /// `Γ′(R/I)`.
    fn cozero_quotient(&self) -> &LabeledGraph {
        self.cozero_quotient.get_or_init(|| {
            let q = QuotientRing::new(&self.inst.ring, self.ideal()).expect("proper");
            build_gamma_prime_quotient(&q)
        })
    }

    /// `Γ′(R/√I)`.
    fn cozero_radical_quotient(&self) -> &LabeledGraph {
        self.cozero_radical_quotient.get_or_init(|| {
            let q = QuotientRing::new(&self.inst.ring, self.radical()).expect("proper");
            build_gamma_prime_quotient(&q)
        })
    }

    fn m_count(&self) -> usize {
        self.ctx.maximal().len()
    }

    /// The standing assumption: `√I` is not maximal.
    fn standing(&self) -> Option<Outcome> {
        self.ctx
            .radical_is_maximal()
            .then(|| Outcome::not_met("radical is maximal"))
    }

    fn standing_sum_radical(&self) -> Option<Outcome> {
        self.standing().or_else(|| {
            (!self.ctx.is_sum_radical()).then(|| Outcome::not_met("ideal is not sum-radical"))
        })
    }
}

fn el(x: &RingElement) -> Label {
    Label::Element(x.clone())
}

fn labels_of(g: &LabeledGraph, idx: &[usize]) -> Vec<Label> {
    idx.iter().map(|&i| g.label(i).clone()).collect()
}

/// Coordinate-wise residue of `x` modulo the divisors of `ideal`.
fn canon(ideal: &Ideal, x: &RingElement) -> RingElement {
    RingElement::new(
        x.coords()
            .iter()
            .zip(ideal.divisors())
            .map(|(c, d)| c % d)
            .collect(),
    )
}

/// First way in which `small` fails to be a (possibly induced) subgraph of
/// `big`, comparing by label.
fn subgraph_violation(small: &LabeledGraph, big: &LabeledGraph, induced: bool) -> Option<Value> {
    let mut idx = Vec::with_capacity(small.order());
    for l in small.labels() {
        match big.index_of(l) {
            Some(i) => idx.push(i),
            None => return Some(json!({ "missing_vertex": l })),
        }
    }
    let n = small.order();
    for u in 0..n {
        for v in u + 1..n {
            let a = small.adjacent(u, v);
            let b = big.adjacent(idx[u], idx[v]);
            if a && !b {
                return Some(json!({ "missing_edge": [small.label(u), small.label(v)] }));
            }
            if induced && !a && b {
                return Some(json!({ "extra_edge": [small.label(u), small.label(v)] }));
            }
        }
    }
    None
}

/// Connected, and of diameter at most 2 when `bounded`.
fn connected_small_diameter(g: &LabeledGraph, bounded: bool) -> Outcome {
    let comps = components(g);
    if comps.len() > 1 {
        return Outcome::fails(json!({
            "disconnected_pair": [g.label(comps[0][0]), g.label(comps[1][0])],
        }));
    }
    match eccentricity_pair(g) {
        None => Outcome::holds(json!({ "vertices": 0, "diameter": 0 })),
        Some((s, t, d)) => {
            if bounded && d > Extended::Finite(2) {
                Outcome::fails(json!({
                    "far_pair": [g.label(s), g.label(t)],
                    "distance": d,
                }))
            } else {
                Outcome::holds(json!({ "vertices": g.order(), "diameter": d }))
            }
        }
    }
}

pub(crate) fn run_instance(
    inst: &Instance,
    claims: &[ClaimId],
    budgets: &Budgets,
    timing: bool,
) -> Vec<TheoremVerdict> {
    let data = InstanceData::new(inst, budgets);
    claims
        .iter()
        .map(|&c| {
            let (out, millis) = timed(timing, || evaluate(c, &data));
            TheoremVerdict {
                claim_id: c,
                ring: inst.ring.spec(),
                ideal: inst.ideal.spec(),
                status: out.status,
                witness: out.witness,
                millis,
            }
        })
        .collect()
}

/// One claim on one instance. Integer-model claims do not apply to ring
/// instances and report hypothesis-not-met.
pub fn run_claim(c: ClaimId, inst: &Instance, budgets: &Budgets) -> TheoremVerdict {
    run_instance(inst, &[c], budgets, false)
        .pop()
        .expect("one claim in, one verdict out")
}

fn evaluate(c: ClaimId, d: &InstanceData) -> Outcome {
    match c {
        ClaimId::RemarkA => remark_a(d),
        ClaimId::RemarkB => remark_b(d),
        ClaimId::Prop24a => prop_2_4a(d),
        ClaimId::Prop24b => d.standing().unwrap_or_else(|| {
            match subgraph_violation(d.q(), d.gamma_radical(), false) {
                Some(w) => Outcome::fails(w),
                None => Outcome::holds(json!({ "vertices": d.q().order(), "edges": d.q().size() })),
            }
        }),
        ClaimId::Prop24c => d.standing().unwrap_or_else(|| {
            match subgraph_violation(d.gamma_radical(), d.gamma(), true) {
                Some(w) => Outcome::fails(w),
                None => Outcome::holds(json!({ "vertices": d.gamma_radical().order() })),
            }
        }),
        ClaimId::Prop24d => prop_2_4d(d),
        ClaimId::QgVertexId => qg_vertex_id(d),
        ClaimId::LemSecondary => {
            let secondary = d.ctx.is_secondary_quotient();
            let empty = d.q().is_empty();
            Outcome::from_bool(
                secondary == empty,
                json!({ "secondary": secondary, "vertices": d.q().order() }),
            )
        }
        ClaimId::Prop25 => prop_2_5(d),
        ClaimId::Thm26 => thm_2_6(d),
        ClaimId::Thm29 => thm_2_9(d),
        ClaimId::Cor210 => cor_2_10(d),
        ClaimId::Thm211a => thm_2_11a(d),
        ClaimId::Thm211bHom => thm_2_11b_hom(d),
        ClaimId::Thm211bLiteral => thm_2_11b_literal(d),
        ClaimId::Thm212 => d
            .standing()
            .unwrap_or_else(|| connected_small_diameter(d.gamma_minus_j(), d.m_count() != 1)),
        ClaimId::Lem215aLiteral => lem_2_15a(d, true),
        ClaimId::Lem215aSetminus => lem_2_15a(d, false),
        ClaimId::Lem215b => lem_2_15b(d),
        ClaimId::Thm216 => d
            .standing_sum_radical()
            .unwrap_or_else(|| connected_small_diameter(d.q_minus_j(), d.m_count() != 1)),
        ClaimId::QConnectivity => d
            .standing()
            .unwrap_or_else(|| connected_small_diameter(d.q_minus_j(), false)),
        ClaimId::CorGirth => cor_girth(d),
        ClaimId::Thm297 => thm_29_7(d),
        ClaimId::Thm253 => thm_2_53(d),
        ClaimId::ThmCut => thm_cut(d),
        ClaimId::ThmHam => thm_ham(d),
        ClaimId::ThmCbChain => thm_cb_chain(d),
        ClaimId::Prop257 => prop_2_57(d),
        ClaimId::Thm25997 => thm_2_5997(d),
        ClaimId::Cor28a
        | ClaimId::Cor28b
        | ClaimId::Thm27Dom
        | ClaimId::Thm27Gamma
        | ClaimId::Cor28cGamma
        | ClaimId::Cor28cPartite => Outcome::not_met("claim concerns the integer model"),
    }
}

fn remark_a(d: &InstanceData) -> Outcome {
    let ring = &d.inst.ring;
    for x in ring.elements() {
        let with_radical = d.radical().principal_plus_unchecked(&x).is_proper();
        let with_ideal = d.ideal().principal_plus_unchecked(&x).is_proper();
        if with_radical != with_ideal {
            return Outcome::fails(json!({
                "x": el(&x),
                "x_plus_radical_proper": with_radical,
                "x_plus_ideal_proper": with_ideal,
            }));
        }
    }
    Outcome::holds(json!({ "checked": ring.cardinality() }))
}

fn remark_b(d: &InstanceData) -> Outcome {
    if !d.ctx.radical_is_maximal() {
        return Outcome::not_met("radical is not maximal");
    }
    match d.inst.ring.elements().find(|x| is_q_dblprime_vertex(&d.ctx, x)) {
        Some(x) => Outcome::fails(json!({ "vertex": el(&x) })),
        None => Outcome::holds(json!({ "vertices": 0 })),
    }
}

fn prop_2_4a(d: &InstanceData) -> Outcome {
    if let Some(o) = d.standing() {
        return o;
    }
    if !d.ideal().is_radical() {
        return Outcome::not_met("ideal is not radical");
    }
    let (q, g) = (d.q(), d.gamma());
    if let Some(w) = subgraph_violation(q, g, true).or_else(|| subgraph_violation(g, q, true)) {
        return Outcome::fails(w);
    }
    Outcome::holds(json!({ "vertices": q.order(), "edges": q.size() }))
}

fn prop_2_4d(d: &InstanceData) -> Outcome {
    if let Some(o) = d.standing() {
        return o;
    }
    let q = d.q();
    let mut checked = 0;
    for j in enumerate_proper_ideals(&d.inst.ring, IdealFilter::All) {
        let jctx = IdealContext::new(&j).expect("proper");
        for x in d.inst.ring.elements() {
            if is_q_dblprime_vertex(&jctx, &x) && !d.ctx.in_t(&x) {
                checked += 1;
                if q.index_of(&el(&x)).is_none() {
                    return Outcome::fails(json!({ "J": j.spec(), "x": el(&x) }));
                }
            }
        }
    }
    let stable = q.induced(|l| !d.ctx.in_t(l.element().expect("element label")));
    if let Some(w) = subgraph_violation(&stable, q, true) {
        return Outcome::fails(w);
    }
    Outcome::holds(json!({ "vertices_checked": checked }))
}

fn qg_vertex_id(d: &InstanceData) -> Outcome {
    if let Some(o) = d.standing() {
        return o;
    }
    let expected: Vec<Label> = d
        .gamma_radical()
        .labels()
        .iter()
        .filter(|l| {
            let x = l.element().expect("element label");
            !d.radical().contains_unchecked(x) && !d.ctx.in_t(x)
        })
        .cloned()
        .collect();
    let actual = d.q().labels();
    if let Some(x) = expected.iter().find(|l| !actual.contains(l)) {
        return Outcome::fails(json!({ "only_in_stable_part": x }));
    }
    if let Some(x) = actual.iter().find(|l| !expected.contains(l)) {
        return Outcome::fails(json!({ "only_in_quasi_graph": x }));
    }
    Outcome::holds(json!({ "vertices": actual.len() }))
}

fn prop_2_5(d: &InstanceData) -> Outcome {
    if let Some(o) = d.standing() {
        return o;
    }
    if d.ideal().is_zero() {
        return Outcome::not_met("ideal is zero");
    }
    let q = d.q();
    let ring = &d.inst.ring;
    let nonzero: Vec<RingElement> = d
        .ideal()
        .elements()
        .into_iter()
        .filter(|i| *i != ring.zero())
        .collect();
    for u in 0..q.order() {
        let x = q.label(u).element().expect("element label");
        for i in &nonzero {
            let y = el(&ring.add_unchecked(x, i));
            match q.index_of(&y) {
                None => return Outcome::fails(json!({ "x": q.label(u), "i": el(i), "not_a_vertex": y })),
                Some(v) if q.adjacent(u, v) => {
                    return Outcome::fails(json!({ "x": q.label(u), "i": el(i), "adjacent": y }))
                }
                Some(_) => {}
            }
        }
    }
    match q.labels().first() {
        None => Outcome::holds(json!({ "vertices": 0 })),
        Some(x) => {
            let y = ring.add_unchecked(x.element().expect("element label"), &nonzero[0]);
            Outcome::holds(json!({ "non_adjacent_pair": [x, &el(&y)] }))
        }
    }
}

fn thm_2_6(d: &InstanceData) -> Outcome {
    let ring = &d.inst.ring;
    if ring.arity() != 1 || crate::arith::prime_divisors(ring.moduli()[0]).len() != 2 {
        return Outcome::not_met("ring is not Z_n with exactly two prime divisors");
    }
    let g = d.gamma_radical();
    if g.is_empty() {
        return Outcome::holds(json!({ "vertices": 0 }));
    }
    let b = bipartite_structure(g);
    match (&b.parts, b.complete) {
        (Some((l, r)), true) => Outcome::holds(json!({ "parts": [labels_of(g, l), labels_of(g, r)] })),
        _ => Outcome::fails(json!({
            "vertices": g.order(),
            "edges": g.size(),
            "bipartite": b.bipartite,
            "odd_edge": b.odd_edge.map(|(u, v)| [g.label(u), g.label(v)]),
        })),
    }
}

fn retraction_maps(d: &InstanceData) -> (VertexMap, VertexMap) {
    let rho = d
        .gamma()
        .labels()
        .iter()
        .map(|l| (l.clone(), el(&canon(d.ideal(), l.element().expect("element label")))))
        .collect();
    let phi = d
        .cozero_quotient()
        .labels()
        .iter()
        .map(|l| (l.clone(), l.clone()))
        .collect();
    (rho, phi)
}

fn thm_2_9(d: &InstanceData) -> Outcome {
    let (big, small) = (d.gamma(), d.cozero_quotient());
    let (rho, phi) = retraction_maps(d);
    match verify_retraction(big, small, &rho, &phi) {
        Ok(ok) => Outcome::from_bool(
            ok,
            json!({ "graph_vertices": big.order(), "quotient_vertices": small.order() }),
        ),
        Err(e) => Outcome::fails(json!({ "malformed": e.to_string() })),
    }
}

fn cor_2_10(d: &InstanceData) -> Outcome {
    let (big, small) = (d.gamma(), d.cozero_quotient());
    let b = &d.budgets;
    let vals = (
        clique_number(big, b),
        clique_number(small, b),
        chromatic_number(big, b),
        chromatic_number(small, b),
    );
    match vals {
        (Computed::Value(wg), Computed::Value(wq), Computed::Value(cg), Computed::Value(cq)) => {
            Outcome::from_bool(
                wg == wq && cg == cq,
                json!({
                    "clique": { "graph": wg, "quotient": wq },
                    "chromatic": { "graph": cg, "quotient": cq },
                }),
            )
        }
        _ => Outcome::skipped("clique or chromatic"),
    }
}

fn thm_2_11a(d: &InstanceData) -> Outcome {
    if let Some(o) = d.standing() {
        return o;
    }
    let (q, cq) = (d.q(), d.cozero_quotient());
    let candidates: Vec<RingElement> = d
        .inst
        .ring
        .elements()
        .filter(|x| !d.radical().contains_unchecked(x) && !d.ctx.in_t(x))
        .collect();
    let images: Vec<Option<usize>> = candidates
        .iter()
        .map(|x| cq.index_of(&el(&canon(d.ideal(), x))))
        .collect();
    let mut pairs = 0u64;
    for (i, a) in candidates.iter().enumerate() {
        for (j, b) in candidates.iter().enumerate().skip(i + 1) {
            let (Some(ia), Some(ib)) = (images[i], images[j]) else {
                continue;
            };
            if !cq.adjacent(ia, ib) {
                continue;
            }
            pairs += 1;
            let adjacent = match (q.index_of(&el(a)), q.index_of(&el(b))) {
                (Some(u), Some(v)) => q.adjacent(u, v),
                _ => false,
            };
            if !adjacent {
                return Outcome::fails(json!({ "a": el(a), "b": el(b) }));
            }
        }
    }
    Outcome::holds(json!({ "pairs_checked": pairs }))
}

fn thm_2_11b_hom(d: &InstanceData) -> Outcome {
    if let Some(o) = d.standing() {
        return o;
    }
    let (q, target) = (d.q(), d.cozero_radical_quotient());
    let map: VertexMap = q
        .labels()
        .iter()
        .map(|l| (l.clone(), el(&canon(d.radical(), l.element().expect("element label")))))
        .collect();
    let w = HomomorphismWitness {
        source: q.clone(),
        target: target.clone(),
        vertex_map: map,
        kind: MapKind::Homomorphism,
    };
    match check_homomorphism(&w) {
        Ok(true) => Outcome::holds(json!({ "edges_checked": q.size() })),
        Ok(false) => {
            let bad = q
                .labeled_edges()
                .into_iter()
                .find(|(a, b)| {
                    let (ia, ib) = (
                        target.index_of(&w.vertex_map[a]).expect("resolved"),
                        target.index_of(&w.vertex_map[b]).expect("resolved"),
                    );
                    !target.adjacent(ia, ib)
                })
                .expect("a non-preserved edge exists");
            Outcome::fails(json!({ "edge": [bad.0, bad.1] }))
        }
        Err(e) => Outcome::fails(json!({ "malformed": e.to_string() })),
    }
}

fn thm_2_11b_literal(d: &InstanceData) -> Outcome {
    if let Some(o) = d.standing() {
        return o;
    }
    let (q, target) = (d.q(), d.cozero_radical_quotient());
    let sizes = json!({
        "source_vertices": q.order(),
        "target_vertices": target.order(),
        "source_edges": q.size(),
        "target_edges": target.size(),
    });
    match subgraph_embedding_exists(q, target, d.budgets.search_nodes) {
        Computed::Value(Some(map)) => Outcome::holds(json!({ "embedding": map })),
        Computed::Value(None) => Outcome::fails(sizes),
        Computed::Skipped => Outcome::skipped("search_nodes"),
    }
}

fn lem_2_15a(d: &InstanceData, literal: bool) -> Outcome {
    if let Some(o) = d.standing() {
        return o;
    }
    let quasi = q_gamma_i(&d.ctx);
    let q = d.q();
    let mut checked = 0;
    for l in quasi.labels() {
        let x = l.element().expect("element label");
        if d.ctx.in_t(x) != literal {
            continue;
        }
        checked += 1;
        if q.index_of(l).is_none() {
            return Outcome::fails(json!({ "x": l }));
        }
    }
    Outcome::holds(json!({ "vertices_checked": checked }))
}

fn lem_2_15b(d: &InstanceData) -> Outcome {
    if let Some(o) = d.standing_sum_radical() {
        return o;
    }
    let mut found = Vec::new();
    for m in &d.ctx.maximal().members {
        match m.elements().into_iter().find(|x| !d.ctx.in_t(x)) {
            Some(x) => found.push(json!({ "m": m.spec(), "x": el(&x) })),
            None => return Outcome::fails(json!({ "m": m.spec() })),
        }
    }
    Outcome::holds(Value::Array(found))
}

fn cor_girth(d: &InstanceData) -> Outcome {
    if let Some(o) = d.standing_sum_radical() {
        return o;
    }
    if maximal_ideals(&d.inst.ring).len() < 2 {
        return Outcome::not_met("ring is local");
    }
    let g = girth(d.gamma_minus_j());
    Outcome::from_bool(
        g <= Extended::Finite(5) || g == Extended::Infinite,
        json!({ "girth": g }),
    )
}

fn thm_29_7(d: &InstanceData) -> Outcome {
    if let Some(o) = d.standing_sum_radical() {
        return o;
    }
    if d.m_count() < 3 {
        return Outcome::not_met("fewer than 3 maximal ideals contain I");
    }
    let q = d.q();
    match find_triangle(q) {
        Some(t) => Outcome::holds(json!({ "triangle": labels_of(q, &t) })),
        None => Outcome::fails(json!({ "girth": girth(q) })),
    }
}

fn thm_2_53(d: &InstanceData) -> Outcome {
    if let Some(o) = d.standing_sum_radical() {
        return o;
    }
    if d.m_count() < 5 {
        return Outcome::not_met("fewer than 5 maximal ideals contain I");
    }
    match planarity(d.q(), &d.budgets) {
        Computed::Value(Planarity::Nonplanar { witness }) => {
            Outcome::holds(json!({ "kuratowski": witness }))
        }
        Computed::Value(Planarity::Planar { faces }) => {
            Outcome::fails(json!({ "planar_faces": faces.len() }))
        }
        Computed::Skipped => Outcome::skipped("planarity_edges"),
    }
}

fn thm_cut(d: &InstanceData) -> Outcome {
    if let Some(o) = d.standing_sum_radical() {
        return o;
    }
    let g = d.q_minus_j();
    match cut_vertices(g).first() {
        None => Outcome::holds(json!({ "vertices": g.order() })),
        Some(&c) => {
            let rest = g.without_vertex(c);
            let comps = components(&rest);
            Outcome::fails(json!({
                "cut_vertex": g.label(c),
                "separated": [rest.label(comps[0][0]), rest.label(comps[1][0])],
            }))
        }
    }
}

fn thm_ham(d: &InstanceData) -> Outcome {
    if let Some(o) = d.standing_sum_radical() {
        return o;
    }
    let all = maximal_ideals(&d.inst.ring);
    if all.len() != 2 || d.m_count() != 2 {
        return Outcome::not_met("R does not have exactly two maximal ideals both containing I");
    }
    if all.members[0].cardinality() != all.members[1].cardinality() {
        return Outcome::not_met("the two maximal ideals differ in size");
    }
    let g = d.q_minus_j();
    if g.order() < 3 {
        return Outcome::not_met("fewer than 3 vertices after deletion");
    }
    match hamiltonian_cycle(g, &d.budgets) {
        Computed::Value(Some(c)) => Outcome::holds(json!({ "cycle": labels_of(g, &c) })),
        Computed::Value(None) => {
            let b = bipartite_structure(g);
            let cuts = cut_vertices(g);
            Outcome::fails(json!({
                "vertices": g.order(),
                "part_sizes": b.parts.map(|(l, r)| [l.len(), r.len()]),
                "cut_vertices": labels_of(g, &cuts),
            }))
        }
        Computed::Skipped => Outcome::skipped("hamiltonian"),
    }
}

fn thm_cb_chain(d: &InstanceData) -> Outcome {
    if let Some(o) = d.standing_sum_radical() {
        return o;
    }
    if d.m_count() != 2 {
        return Outcome::not_met("|M(I)| is not 2");
    }
    let g = d.q_minus_j();
    let members = &d.ctx.maximal().members;
    let parts: Vec<Vec<usize>> = members
        .iter()
        .map(|m| {
            (0..g.order())
                .filter(|&v| m.contains_unchecked(g.label(v).element().expect("element label")))
                .collect()
        })
        .collect();
    let covered = parts[0].len() + parts[1].len() == g.order()
        && parts[0].iter().all(|v| !parts[1].contains(v));
    let complete = covered
        && !parts[0].is_empty()
        && !parts[1].is_empty()
        && g.size() == parts[0].len() * parts[1].len()
        && parts[0].iter().all(|&u| parts[1].iter().all(|&v| g.adjacent(u, v)));
    let span = |v: usize| {
        d.ideal()
            .principal_plus_unchecked(g.label(v).element().expect("element label"))
    };
    let mut non_chain = None;
    'outer: for part in &parts {
        for (i, &u) in part.iter().enumerate() {
            for &v in &part[i + 1..] {
                let (su, sv) = (span(u), span(v));
                if !su.subset_unchecked(&sv) && !sv.subset_unchecked(&su) {
                    non_chain = Some([g.label(u).clone(), g.label(v).clone()]);
                    break 'outer;
                }
            }
        }
    }
    let chain = non_chain.is_none();
    Outcome::from_bool(
        complete == chain,
        json!({
            "complete_bipartite_on_parts": complete,
            "chain": chain,
            "non_chain_pair": non_chain,
        }),
    )
}

fn prop_2_57(d: &InstanceData) -> Outcome {
    if let Some(o) = d.standing_sum_radical() {
        return o;
    }
    match chromatic_number(d.q_minus_j(), &d.budgets) {
        Computed::Value(chi) => Outcome::from_bool(
            d.m_count() <= chi,
            json!({ "maximal_ideals": d.m_count(), "chromatic": chi }),
        ),
        Computed::Skipped => Outcome::skipped("chromatic"),
    }
}

fn thm_2_5997(d: &InstanceData) -> Outcome {
    if let Some(o) = d.standing_sum_radical() {
        return o;
    }
    if d.m_count() == 1 {
        return Outcome::not_met("|M(I)| is 1");
    }
    let g = d.q_minus_j();
    let b = bipartite_structure(g);
    let triangle = find_triangle(g);
    let (a, bi, c) = (b.complete, b.bipartite, triangle.is_none());
    Outcome::from_bool(
        a == bi && bi == c,
        json!({
            "complete_bipartite": a,
            "bipartite": bi,
            "triangle": triangle.map(|t| labels_of(g, &t)),
        }),
    )
}
