use serde_json::json;

use crate::graph::{integer_adjacent, integer_vertex, Label, LabeledGraph, ZClassModel, ZModelKind};
use crate::invariants::{
    bipartite_structure, chromatic_number, class_total_domination, diameter, girth,
    is_total_dominating, optimal_coloring, Budgets, Computed, Extended,
};

use super::{ClaimId, Domain, Outcome, TheoremVerdict};

/// Every `2 ≤ n ≤ max_n`, where the class model is finite. `n = 0` is
/// only evaluated when asked for explicitly.
pub fn default_z_values(max_n: u64) -> Vec<u64> {
    (2..=max_n).collect()
}

/// Search bound for an adjacent pair when `n = 0`, where there is no finite
/// class model.
const ZERO_SEARCH: u64 = 64;

fn indices(g: &LabeledGraph, classes: &[u64]) -> Vec<usize> {
    classes
        .iter()
        .filter_map(|&c| g.index_of(&Label::Residue(c)))
        .collect()
}

pub(crate) fn evaluate(c: ClaimId, n: u64, budgets: &Budgets) -> Outcome {
    if c.domain() != Domain::Integers {
        return Outcome::not_met("claim concerns ring instances");
    }
    if n == 1 {
        return Outcome::not_met("nZ is not proper");
    }
    let m = ZClassModel::new(n);
    if n == 0 && c != ClaimId::Cor28a {
        return Outcome::not_met("n = 0 has no finite class model");
    }
    let k = m.prime_count();
    match c {
        ClaimId::Cor28a => cor_2_8a(&m),
        ClaimId::Cor28b => {
            if k != 2 {
                return Outcome::not_met("n does not have exactly two prime divisors");
            }
            cor_2_8b(&m)
        }
        ClaimId::Thm27Dom => {
            if k < 2 {
                return Outcome::not_met("n has fewer than two prime divisors");
            }
            let g = m.graph();
            let w = m.dominator_witness();
            let idx = indices(&g, &w);
            Outcome::from_bool(
                idx.len() == w.len() && is_total_dominating(&g, &idx),
                json!({ "dominating_classes": w }),
            )
        }
        ClaimId::Thm27Gamma | ClaimId::Cor28cGamma => {
            let need = if c == ClaimId::Thm27Gamma { 2 } else { 3 };
            if k < need {
                return Outcome::not_met("too few prime divisors");
            }
            match class_total_domination(&m, budgets) {
                Computed::Value(Some((gamma, set))) => Outcome::from_bool(
                    gamma == k,
                    json!({ "gamma": gamma, "prime_divisors": k, "minimum_set": set }),
                ),
                Computed::Value(None) => Outcome::fails(json!({ "gamma": null, "prime_divisors": k })),
                Computed::Skipped => Outcome::skipped("domination"),
            }
        }
        ClaimId::Cor28cPartite => {
            if k < 3 {
                return Outcome::not_met("n has fewer than three prime divisors");
            }
            let types = m.type_graph();
            match (chromatic_number(&types, budgets), optimal_coloring(&types, budgets)) {
                (Computed::Value(chi), Computed::Value(colors)) => {
                    let colouring: Vec<(u64, usize)> = types
                        .labels()
                        .iter()
                        .zip(colors)
                        .map(|(l, col)| match l {
                            Label::Residue(t) => (*t, col),
                            other => unreachable!("type label {other}"),
                        })
                        .collect();
                    Outcome::from_bool(
                        chi <= k,
                        json!({ "chromatic": chi, "prime_divisors": k, "type_colouring": colouring }),
                    )
                }
                _ => Outcome::skipped("chromatic"),
            }
        }
        _ => unreachable!("ring claims are filtered above"),
    }
}

fn cor_2_8a(m: &ZClassModel) -> Outcome {
    match m.kind() {
        ZModelKind::PrimePower => Outcome::holds(json!({ "classes": 0 })),
        ZModelKind::ZeroIdeal => {
            for x in 1..=ZERO_SEARCH {
                for y in x + 1..=ZERO_SEARCH {
                    if integer_vertex(0, x) && integer_vertex(0, y) && integer_adjacent(0, x, y) {
                        return Outcome::fails(json!({ "edge": [x, y] }));
                    }
                }
            }
            Outcome::holds(json!({ "searched_up_to": ZERO_SEARCH }))
        }
        _ => Outcome::not_met("n is neither 0 nor a prime power"),
    }
}

fn cor_2_8b(m: &ZClassModel) -> Outcome {
    // Two twins per class stand in for the infinitely many integers of a class.
    let g = m.twin_expansion(2);
    let b = bipartite_structure(&g);
    let d = diameter(&g);
    let gi = girth(&g);
    let part_classes = |part: &[usize]| -> Vec<u64> {
        let mut out: Vec<u64> = part
            .iter()
            .filter_map(|&v| match g.label(v) {
                Label::Twin { residue, .. } => Some(*residue),
                _ => None,
            })
            .collect();
        out.dedup();
        out
    };
    let parts = b.parts.as_ref().map(|(l, r)| [part_classes(l), part_classes(r)]);
    Outcome::from_bool(
        b.complete && d == Extended::Finite(2) && gi == Extended::Finite(4),
        json!({
            "complete_bipartite": b.complete,
            "parts": parts,
            "diameter": d,
            "girth": gi,
        }),
    )
}

pub(crate) fn verdict(c: ClaimId, n: u64, out: Outcome, millis: u64) -> TheoremVerdict {
    TheoremVerdict {
        claim_id: c,
        ring: "Z".to_string(),
        ideal: format!("{n}Z"),
        status: out.status,
        witness: out.witness,
        millis,
    }
}

/// One integer-model claim at one `n`.
pub fn run_z_claim(c: ClaimId, n: u64, budgets: &Budgets) -> TheoremVerdict {
    verdict(c, n, evaluate(c, n, budgets), 0)
}

/// Every integer-model claim at every `n`, in input order.
pub fn run_z_claims(n_values: &[u64], budgets: &Budgets) -> Vec<TheoremVerdict> {
    n_values
        .iter()
        .flat_map(|&n| {
            ClaimId::ALL
                .iter()
                .filter(|c| c.domain() == Domain::Integers)
                .map(move |&c| run_z_claim(c, n, budgets))
        })
        .collect()
}
