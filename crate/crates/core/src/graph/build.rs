use crate::arith::gcd;
use crate::error::{Error, Result};
use crate::ideal::{Ideal, IdealContext};
use crate::quotient::QuotientRing;
use crate::ring::{Ring, RingElement};

use super::{Family, Label, LabeledGraph, Provenance};

fn provenance(ring: &Ring, ideal: &Ideal) -> Provenance {
    Provenance::new(ring.spec(), ideal.spec())
}

fn context(ring: &Ring, ideal: &Ideal) -> Result<IdealContext> {
    ring.same_ring(ideal.ring())?;
    IdealContext::new(ideal)
}

/// Some `y` outside `outside` has `xy ∈ ideal`. The smallest such `y` sits in
/// `(ideal : x)`, whose divisors are `d_i / gcd(x_i, d_i)`, so it is enough
/// to ask whether that colon ideal escapes `outside`.
fn colon_escapes(x: &RingElement, ideal: &Ideal, outside: &Ideal) -> bool {
    x.coords()
        .iter()
        .zip(ideal.divisors())
        .zip(outside.divisors())
        .any(|((&c, &d), &o)| !(d / gcd(c, d)).is_multiple_of(o))
}

fn product_graph(
    vertices: Vec<RingElement>,
    ideal: &Ideal,
    family: Family,
    prov: Provenance,
) -> LabeledGraph {
    let ring = ideal.ring().clone();
    let ideal = ideal.clone();
    let labels = vertices.iter().cloned().map(Label::Element).collect();
    LabeledGraph::from_relation(
        labels,
        move |i, j| ideal.contains_unchecked(&ring.mul_unchecked(&vertices[i], &vertices[j])),
        family,
        prov,
    )
}

/// `Γ_I(R)`: vertices `x ∉ I` with `xy ∈ I` for some `y ∉ I`, adjacency `xy ∈ I`.
pub fn gamma_i(ctx: &IdealContext) -> LabeledGraph {
    let ideal = ctx.ideal();
    let vertices = ctx
        .ring()
        .elements()
        .filter(|x| !ideal.contains_unchecked(x) && colon_escapes(x, ideal, ideal))
        .collect();
    let family = if ideal.is_zero() {
        Family::Gamma
    } else {
        Family::GammaI
    };
    product_graph(vertices, ideal, family, provenance(ctx.ring(), ideal))
}

/// `QΓ_I(R)`: as `Γ_I(R)` with `√I` in place of `I` for both vertex conditions.
pub fn q_gamma_i(ctx: &IdealContext) -> LabeledGraph {
    let ideal = ctx.ideal();
    let radical = ctx.radical();
    let vertices = ctx
        .ring()
        .elements()
        .filter(|x| !radical.contains_unchecked(x) && colon_escapes(x, ideal, radical))
        .collect();
    product_graph(vertices, ideal, Family::QGamma, provenance(ctx.ring(), ideal))
}

fn cozero_graph(
    vertices: Vec<RingElement>,
    ideal: &Ideal,
    family: Family,
    prov: Provenance,
) -> LabeledGraph {
    let spans: Vec<Ideal> = vertices
        .iter()
        .map(|x| ideal.principal_plus_unchecked(x))
        .collect();
    let labels = vertices.iter().cloned().map(Label::Element).collect();
    LabeledGraph::from_relation(
        labels,
        move |i, j| {
            !spans[j].contains_unchecked(&vertices[i]) && !spans[i].contains_unchecked(&vertices[j])
        },
        family,
        prov,
    )
}

/// `Γ″_I(R)`: vertices `x ∉ I` with `xR + I ≠ R`, adjacency
/// `x ∉ yR + I` and `y ∉ xR + I`.
pub fn gamma_dblprime(ctx: &IdealContext) -> LabeledGraph {
    let ideal = ctx.ideal();
    let vertices = ctx
        .ring()
        .elements()
        .filter(|x| !ideal.contains_unchecked(x) && ideal.principal_plus_unchecked(x).is_proper())
        .collect();
    cozero_graph(vertices, ideal, Family::GammaDblPrime, provenance(ctx.ring(), ideal))
}

/// `QΓ″_I(R)`: vertices `x ∉ √I` with `xR + I ≠ R` and `xR + √I = xR + I`,
/// adjacency as in `Γ″_I(R)`.
pub fn q_gamma_dblprime(ctx: &IdealContext) -> LabeledGraph {
    let ideal = ctx.ideal();
    let prov = provenance(ctx.ring(), ideal);
    if ctx.radical_is_maximal() {
        return cozero_graph(Vec::new(), ideal, Family::QGammaDblPrime, prov);
    }
    let vertices = ctx
        .ring()
        .elements()
        .filter(|x| is_q_dblprime_vertex(ctx, x))
        .collect();
    cozero_graph(vertices, ideal, Family::QGammaDblPrime, prov)
}

/// The vertex predicate of `QΓ″_I(R)` straight from its definition, with no
/// shortcut for a maximal radical.
pub fn is_q_dblprime_vertex(ctx: &IdealContext, x: &RingElement) -> bool {
    if ctx.radical().contains_unchecked(x) {
        return false;
    }
    let span = ctx.ideal().principal_plus_unchecked(x);
    span.is_proper() && span == ctx.radical().principal_plus_unchecked(x)
}

pub fn build_gamma_i(r: &Ring, i: &Ideal) -> Result<LabeledGraph> {
    Ok(gamma_i(&context(r, i)?))
}

/// `Γ(R)`, the zero-divisor graph.
pub fn build_gamma(r: &Ring) -> LabeledGraph {
    gamma_i(&IdealContext::new(&Ideal::zero(r)).expect("zero ideal is proper"))
}

pub fn build_q_gamma_i(r: &Ring, i: &Ideal) -> Result<LabeledGraph> {
    Ok(q_gamma_i(&context(r, i)?))
}

pub fn build_gamma_dblprime(r: &Ring, i: &Ideal) -> Result<LabeledGraph> {
    Ok(gamma_dblprime(&context(r, i)?))
}

pub fn build_q_gamma_dblprime(r: &Ring, i: &Ideal) -> Result<LabeledGraph> {
    Ok(q_gamma_dblprime(&context(r, i)?))
}

/// `Γ′(R)`: nonzero nonunits, adjacency `x ∉ yR` and `y ∉ xR`.
pub fn build_gamma_prime(r: &Ring) -> LabeledGraph {
    let q = QuotientRing::new(r, &Ideal::zero(r)).expect("zero ideal is proper");
    build_gamma_prime_quotient(&q)
}

/// `Γ′(R/I)` on canonical representatives, computed inside the quotient.
pub fn build_gamma_prime_quotient(q: &QuotientRing) -> LabeledGraph {
    let zero = q.zero();
    let one = q.one();
    let mut vertices = Vec::new();
    let mut principal = Vec::new();
    for x in q.representatives() {
        if *x == zero {
            continue;
        }
        let mult = q.multiples(x);
        if mult.binary_search(&one).is_ok() {
            continue;
        }
        vertices.push(x.clone());
        principal.push(mult);
    }
    let labels = vertices.iter().cloned().map(Label::Element).collect();
    LabeledGraph::from_relation(
        labels,
        move |i, j| {
            principal[j].binary_search(&vertices[i]).is_err()
                && principal[i].binary_search(&vertices[j]).is_err()
        },
        Family::GammaPrime,
        Provenance::new(q.base().spec(), q.modulus().spec()),
    )
}

/// `G ∖ J`: the subgraph induced on vertices whose label is not in `j`.
pub fn delete_ideal_vertices(g: &LabeledGraph, j: &Ideal) -> Result<LabeledGraph> {
    let ring = j.ring();
    let prov = g.provenance();
    if !prov.ring.is_empty() && prov.ring != ring.spec() {
        return Err(Error::RingMismatch {
            left: prov.ring.clone(),
            right: ring.spec(),
        });
    }
    for label in g.labels() {
        match label.element() {
            Some(x) if ring.contains(x) => {}
            _ => {
                return Err(Error::RingMismatch {
                    left: format!("vertex {label}"),
                    right: ring.spec(),
                })
            }
        }
    }
    Ok(g.induced(|l| !j.contains_unchecked(l.element().expect("checked above"))))
}
