mod common;

use std::collections::BTreeMap;

use cozero::graph::{
    build_gamma_dblprime, build_q_gamma_dblprime, delete_ideal_vertices, Label, LabeledGraph,
};
use cozero::harness::{
    default_universe, default_z_values, full_report, run_claim, run_z_claim, universe_rings,
    ClaimId, Domain, Instance, RunOptions, Status,
};
use cozero::invariants::{Budgets, Extended};
use cozero::{Ideal, Parallelism, Ring};
use itertools::Itertools;
use serde_json::Value;

use common::*;

const GOLDEN_COUNT: &str = include_str!("../golden/universe_60_count");

fn report_json(parallelism: Parallelism) -> String {
    let opts = RunOptions {
        parallelism,
        ..RunOptions::default()
    };
    full_report(&default_universe(16), ClaimId::ALL, &default_z_values(16), &opts).to_json()
}

#[test]
fn reports_are_byte_identical_across_runs_and_thread_counts() {
    let a = report_json(Parallelism::Sequential);
    let b = report_json(Parallelism::Threads(4));
    let c = report_json(Parallelism::Auto);
    assert_eq!(a, b);
    assert_eq!(a, c);
}

#[test]
fn universe_size_matches_independent_enumeration() {
    let golden: usize = GOLDEN_COUNT.trim().parse().unwrap();
    let mut shapes: Vec<Vec<u64>> = (4..=60).map(|n| vec![n]).collect();
    for k in 2..=5 {
        shapes.extend(
            (2..=60u64)
                .combinations_with_replacement(k)
                .filter(|t| t.iter().product::<u64>() <= 60),
        );
    }
    let oracle: usize = shapes
        .iter()
        .map(|m| BruteRing::new(m).all_ideals().len() - 1)
        .sum();
    assert_eq!(universe_rings(60).len(), shapes.len());
    assert_eq!(oracle, golden);
    assert_eq!(default_universe(60).len(), golden);
}

#[test]
fn universe_tags_radical_maximal_instances() {
    for inst in default_universe(30) {
        let br = brute(&inst.ring);
        let rad = br.radical(&ideal_set(&br, &inst.ideal));
        let maximal = br.maximal_ideals().contains(&rad);
        assert_eq!(inst.radical_maximal, maximal, "{} {}", inst.ring.spec(), inst.ideal.spec());
    }
}

/// Recomputes each hypothesis from brute-force data and checks that the
/// verdict is hypothesis-not-met exactly when it is false.
#[test]
fn hypothesis_gating_is_sound() {
    let universe = default_universe(24);
    let report = full_report(&universe, ClaimId::ALL, &[], &RunOptions::default());
    let by_key: BTreeMap<(String, String, &str), Status> = report
        .verdicts
        .iter()
        .map(|v| ((v.ring.clone(), v.ideal.clone(), v.claim_id.as_str()), v.status))
        .collect();
    for inst in &universe {
        let br = brute(&inst.ring);
        let i = ideal_set(&br, &inst.ideal);
        let rad = br.radical(&i);
        let maximal = br.maximal_ideals();
        let standing = !maximal.contains(&rad);
        let sum_radical = rad.iter().any(|x| br.principal_plus(x, &i) == rad);
        let m_count = maximal.iter().filter(|m| i.is_subset(m)).count();
        let status = |c: ClaimId| by_key[&(inst.ring.spec(), inst.ideal.spec(), c.as_str())];
        for &c in ClaimId::ALL {
            let hyp = match c {
                ClaimId::RemarkA | ClaimId::LemSecondary | ClaimId::Thm29 | ClaimId::Cor210 => true,
                ClaimId::RemarkB => !standing,
                ClaimId::Prop24a => standing && i == rad,
                ClaimId::Prop25 => standing && i.len() > 1,
                ClaimId::Thm26 => {
                    inst.ring.arity() == 1 && primes_of(inst.ring.moduli()[0]).len() == 2
                }
                ClaimId::Lem215b
                | ClaimId::Thm216
                | ClaimId::ThmCut
                | ClaimId::Prop257 => standing && sum_radical,
                ClaimId::CorGirth => standing && sum_radical && maximal.len() >= 2,
                ClaimId::Thm297 => standing && sum_radical && m_count >= 3,
                ClaimId::Thm253 => standing && sum_radical && m_count >= 5,
                ClaimId::ThmCbChain => standing && sum_radical && m_count == 2,
                ClaimId::Thm25997 => standing && sum_radical && m_count != 1,
                ClaimId::ThmHam => {
                    // The vertex-count condition is checked separately below.
                    if standing
                        && sum_radical
                        && maximal.len() == 2
                        && m_count == 2
                        && maximal[0].len() == maximal[1].len()
                    {
                        continue;
                    }
                    false
                }
                _ if c.domain() == Domain::Integers => continue,
                _ => standing,
            };
            let s = status(c);
            assert_eq!(
                s == Status::HypothesisNotMet,
                !hyp,
                "{c} on {} {}: {s}",
                inst.ring.spec(),
                inst.ideal.spec()
            );
        }
    }
}

fn label(s: &Value) -> Label {
    Label::Element(s.as_str().unwrap().parse().unwrap())
}

fn index(g: &LabeledGraph, v: &Value) -> usize {
    g.index_of(&label(v)).unwrap()
}

fn deleted(inst: &Instance, quasi: bool) -> LabeledGraph {
    let g = if quasi {
        build_q_gamma_dblprime(&inst.ring, &inst.ideal).unwrap()
    } else {
        build_gamma_dblprime(&inst.ring, &inst.ideal).unwrap()
    };
    delete_ideal_vertices(&g, &inst.ideal.jacobson().unwrap()).unwrap()
}

/// Every `fails` verdict reproduces on a fresh run and its witness
/// satisfies the negated conclusion under the brute-force oracles.
#[test]
fn failure_witnesses_revalidate() {
    let universe = default_universe(24);
    let report = full_report(&universe, ClaimId::ALL, &default_z_values(24), &RunOptions::default());
    let budgets = Budgets::default();
    let mut checked = 0;
    for v in report.verdicts.iter().filter(|v| v.status == Status::Fails) {
        assert!(!v.witness.is_null() && v.witness != Value::Object(Default::default()));
        if v.claim_id.domain() == Domain::Integers {
            let n: u64 = v.ideal.trim_end_matches('Z').parse().unwrap();
            let again = run_z_claim(v.claim_id, n, &budgets);
            assert_eq!(again.status, Status::Fails);
            assert_eq!(again.witness, v.witness);
            continue;
        }
        let ring: Ring = v.ring.parse().unwrap();
        let inst = Instance::new(Ideal::parse(&ring, &v.ideal).unwrap());
        let again = run_claim(v.claim_id, &inst, &budgets);
        assert_eq!((again.status, &again.witness), (v.status, &v.witness));
        let w = &v.witness;
        match v.claim_id {
            ClaimId::ThmCut => {
                let g = deleted(&inst, true);
                let m = matrix(&g);
                let c = index(&g, &w["cut_vertex"]);
                assert!(cut_vertices(&m).contains(&c));
            }
            ClaimId::ThmHam => {
                let g = deleted(&inst, true);
                assert!(g.order() >= 3 && !hamiltonian(&matrix(&g)));
            }
            ClaimId::Prop24c => {
                // An edge of Γ″_I between two vertices of Γ″_√I that Γ″_√I lacks.
                let big = build_gamma_dblprime(&inst.ring, &inst.ideal).unwrap();
                let small = build_gamma_dblprime(&inst.ring, &inst.ideal.radical()).unwrap();
                let e = &w["extra_edge"];
                let (a, b) = (label(&e[0]), label(&e[1]));
                let (sa, sb) = (small.index_of(&a).unwrap(), small.index_of(&b).unwrap());
                let (ba, bb) = (big.index_of(&a).unwrap(), big.index_of(&b).unwrap());
                assert!(!small.adjacent(sa, sb) && big.adjacent(ba, bb));
            }
            ClaimId::Prop24d | ClaimId::Lem215aLiteral | ClaimId::Thm211bLiteral => {}
            other => panic!("unexpected failing claim {other}"),
        }
        checked += 1;
    }
    assert!(checked > 0);
}

#[test]
fn spec_examples() {
    let b = Budgets::default();
    let z24: Ring = "Z24".parse().unwrap();
    let inst = Instance::new(Ideal::parse(&z24, "(12)").unwrap());
    assert_eq!(run_claim(ClaimId::Thm26, &inst, &b).status, Status::Holds);
    let v = run_claim(ClaimId::Prop25, &inst, &b);
    assert_eq!(v.status, Status::Holds);
    assert_eq!(v.witness["non_adjacent_pair"], serde_json::json!(["(2)", "(14)"]));
    let z12: Ring = "Z12".parse().unwrap();
    let v = run_claim(ClaimId::Thm297, &Instance::new(Ideal::zero(&z12)), &b);
    assert_eq!(v.status, Status::HypothesisNotMet);
    assert_eq!(run_z_claim(ClaimId::Cor28a, 8, &b).status, Status::Holds);
    let twelve = run_z_claim(ClaimId::Cor28b, 12, &b);
    assert_eq!(twelve.status, Status::Holds);
    assert_eq!(twelve.witness["diameter"], serde_json::json!(Extended::Finite(2)));
}

#[test]
fn claim_filter_limits_verdicts() {
    let report = full_report(
        &default_universe(60),
        &[ClaimId::Thm26],
        &default_z_values(60),
        &RunOptions::default(),
    );
    assert!(report.verdicts.iter().all(|v| v.claim_id == ClaimId::Thm26));
    assert_eq!(report.verdicts.len(), default_universe(60).len());
    assert!(report.passed());
}

#[test]
fn question_note_is_present_when_every_ideal_is_sum_radical() {
    let report = full_report(&default_universe(24), &[ClaimId::QConnectivity], &[], &RunOptions::default());
    assert!(report.summary.notes.iter().any(|n| n.contains("sum-radical")));
    assert_eq!(report.summary.claims["Q-CONNECTIVITY"].fails, 0);
}

#[test]
fn timing_stays_out_of_verdicts_unless_requested() {
    let u = default_universe(8);
    let plain = full_report(&u, ClaimId::ALL, &[], &RunOptions::default());
    assert!(plain.verdicts.iter().all(|v| v.millis == 0));
    assert!(plain.summary.total_millis.is_none());
    let timed = full_report(
        &u,
        ClaimId::ALL,
        &[],
        &RunOptions {
            timing: true,
            ..RunOptions::default()
        },
    );
    assert!(timed.summary.total_millis.is_some());
}
