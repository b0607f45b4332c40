//! Claim checking over a bounded universe of (ring, ideal) instances.
//!
//! Each claim has a hypothesis and a conclusion. The hypothesis is evaluated
//! first; the conclusion only runs on instances that satisfy it. Verdicts
//! carry a JSON witness: a counterexample for `fails`, a certificate or a
//! short summary otherwise.

mod claims;
mod universe;
mod zclaims;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::invariants::Budgets;
use crate::par::{self, Parallelism};

pub use claims::run_claim;
pub use universe::{default_universe, universe_rings, Instance};
pub use zclaims::{default_z_values, run_z_claim, run_z_claims};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Holds,
    Fails,
    HypothesisNotMet,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Holds => "holds",
            Status::Fails => "fails",
            Status::HypothesisNotMet => "hypothesis-not-met",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Expectation {
    /// A failure makes the run fail.
    ExpectedToHold,
    /// Recorded for the record either way.
    ReportOnly,
}

/// Whether a claim runs on ring instances or on the integer model `Z/nZ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Domain {
    Ring,
    Integers,
}

macro_rules! claim_ids {
    ($($variant:ident => $id:literal, $domain:ident, $exp:ident, $statement:literal;)*) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum ClaimId {
            $($variant,)*
        }

        impl ClaimId {
            pub const ALL: &'static [ClaimId] = &[$(ClaimId::$variant,)*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(ClaimId::$variant => $id,)*
                }
            }

            pub fn domain(self) -> Domain {
                match self {
                    $(ClaimId::$variant => Domain::$domain,)*
                }
            }

            pub fn expectation(self) -> Expectation {
                match self {
                    $(ClaimId::$variant => Expectation::$exp,)*
                }
            }

            pub fn statement(self) -> &'static str {
                match self {
                    $(ClaimId::$variant => $statement,)*
                }
            }
        }
    };
}

// Ids are opaque stable keys; the statements say what is actually checked.
// "H" below is: I proper and √I not maximal.
claim_ids! {
    RemarkA => "REMARK-a", Ring, ExpectedToHold,
        "I proper: xR+√I ≠ R iff xR+I ≠ R for every x";
    RemarkB => "REMARK-b", Ring, ExpectedToHold,
        "√I maximal: no x satisfies the QΓ″_I vertex condition";
    Prop24a => "PROP-2.4a", Ring, ExpectedToHold,
        "H and I = √I: QΓ″_I = Γ″_I";
    Prop24b => "PROP-2.4b", Ring, ExpectedToHold,
        "H: QΓ″_I is a subgraph of Γ″_√I";
    Prop24c => "PROP-2.4c", Ring, ExpectedToHold,
        "H: Γ″_√I is an induced subgraph of Γ″_I";
    Prop24d => "PROP-2.4d", Ring, ReportOnly,
        "H: for every proper J, V(QΓ″_J) minus T_I lies in V(QΓ″_I)";
    QgVertexId => "QG-VERTEX-ID", Ring, ExpectedToHold,
        "H: V(QΓ″_I) = V(Γ″_√I) minus (√I ∪ T_I)";
    LemSecondary => "LEM-SECONDARY", Ring, ExpectedToHold,
        "I proper: R/I is secondary iff QΓ″_I is empty";
    Prop25 => "PROP-2.5", Ring, ExpectedToHold,
        "H and I ≠ 0: for a vertex x and nonzero i in I, x+i is a vertex not adjacent to x";
    Thm26 => "THM-2.6", Ring, ExpectedToHold,
        "R = Z_n with two prime divisors: Γ″_√I is empty or complete bipartite";
    Thm29 => "THM-2.9", Ring, ExpectedToHold,
        "I proper: Γ′(R/I) is a retract of Γ″_I via x ↦ x+I and canonical representatives";
    Cor210 => "COR-2.10", Ring, ExpectedToHold,
        "I proper: ω and χ of Γ′(R/I) equal those of Γ″_I";
    Thm211a => "THM-2.11a", Ring, ExpectedToHold,
        "H: a, b outside √I ∪ T_I with a+I adjacent to b+I in Γ′(R/I) are adjacent in QΓ″_I";
    Thm211bHom => "THM-2.11b-hom", Ring, ExpectedToHold,
        "H: x ↦ x+√I is a graph homomorphism QΓ″_I → Γ′(R/√I)";
    Thm211bLiteral => "THM-2.11b-literal", Ring, ReportOnly,
        "H: QΓ″_I embeds as a subgraph of Γ′(R/√I)";
    Thm212 => "THM-2.12", Ring, ExpectedToHold,
        "H: Γ″_I minus J_I is connected, with diameter ≤ 2 when |M(I)| ≠ 1";
    Lem215aLiteral => "LEM-2.15a-literal", Ring, ReportOnly,
        "H: V(QΓ_I) ∩ T_I lies in V(QΓ″_I)";
    Lem215aSetminus => "LEM-2.15a-setminus", Ring, ReportOnly,
        "H: V(QΓ_I) minus T_I lies in V(QΓ″_I)";
    Lem215b => "LEM-2.15b", Ring, ExpectedToHold,
        "H and I sum-radical: every m in M(I) has an element outside T_I";
    Thm216 => "THM-2.16", Ring, ExpectedToHold,
        "H and I sum-radical: QΓ″_I minus J_I is connected, with diameter ≤ 2 when |M(I)| ≠ 1";
    QConnectivity => "Q-CONNECTIVITY", Ring, ReportOnly,
        "H: QΓ″_I minus J_I is connected";
    CorGirth => "COR-GIRTH", Ring, ExpectedToHold,
        "H, I sum-radical, R not local: girth of Γ″_I minus J_I is ≤ 5 or infinite";
    Thm297 => "THM-29.7", Ring, ExpectedToHold,
        "H, I sum-radical, |M(I)| ≥ 3: QΓ″_I has girth 3";
    Thm253 => "THM-2.53", Ring, ExpectedToHold,
        "H, I sum-radical, |M(I)| ≥ 5: QΓ″_I is not planar";
    ThmCut => "THM-CUT", Ring, ExpectedToHold,
        "H and I sum-radical: QΓ″_I minus J_I has no cut vertex";
    ThmHam => "THM-HAM", Ring, ExpectedToHold,
        "H, I sum-radical, R has exactly two maximal ideals, both contain I, equal sizes: QΓ″_I minus J_I is Hamiltonian";
    ThmCbChain => "THM-CB-CHAIN", Ring, ExpectedToHold,
        "H, I sum-radical, |M(I)| = 2: QΓ″_I minus J_I is complete bipartite on the parts m_i minus (J_I ∪ T_I) iff each part is a chain under xR+I inclusion";
    Prop257 => "PROP-2.57", Ring, ExpectedToHold,
        "H and I sum-radical: |M(I)| ≤ χ(QΓ″_I minus J_I)";
    Thm25997 => "THM-2.5997", Ring, ExpectedToHold,
        "H, I sum-radical, |M(I)| ≠ 1: QΓ″_I minus J_I complete bipartite iff bipartite iff triangle-free";
    Cor28a => "COR-2.8a", Integers, ExpectedToHold,
        "n = 0 or a prime power: Γ″_nZ(Z) minus √(nZ) is empty";
    Cor28b => "COR-2.8b", Integers, ExpectedToHold,
        "n with two prime divisors: the integer model is complete bipartite with diameter 2 and girth 4";
    Thm27Dom => "THM-2.7-dom", Integers, ExpectedToHold,
        "n with k ≥ 2 prime divisors: the classes n/p^a form a dominating set of the integer model";
    Thm27Gamma => "THM-2.7-gamma", Integers, ExpectedToHold,
        "n with k ≥ 2 prime divisors: the domination number of the integer model is k";
    Cor28cGamma => "COR-2.8c-gamma", Integers, ExpectedToHold,
        "n with k > 2 prime divisors: the domination number of the integer model is k";
    Cor28cPartite => "COR-2.8c-partite", Integers, ReportOnly,
        "n with k > 2 prime divisors: the integer model is k-partite";
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClaimId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClaimId::ALL
            .iter()
            .copied()
            .find(|c| c.as_str() == s.trim())
            .ok_or_else(|| Error::Parse(format!("unknown claim id {s:?}")))
    }
}

impl Serialize for ClaimId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// Comma-separated claim ids; `all` selects every claim.
pub fn parse_claim_list(s: &str) -> Result<Vec<ClaimId>> {
    if s.trim() == "all" {
        return Ok(ClaimId::ALL.to_vec());
    }
    let mut out: Vec<ClaimId> = s
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(str::parse)
        .collect::<Result<_>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TheoremVerdict {
    pub claim_id: ClaimId,
    pub ring: String,
    pub ideal: String,
    pub status: Status,
    pub witness: Value,
    /// Wall time of this verdict; always 0 unless timing was requested, so
    /// that reports stay byte-identical between runs.
    pub millis: u64,
}

/// What a claim evaluation returns before it is attached to an instance.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub status: Status,
    pub witness: Value,
}

impl Outcome {
    pub(crate) fn holds(witness: Value) -> Self {
        Outcome {
            status: Status::Holds,
            witness,
        }
    }

    pub(crate) fn fails(witness: Value) -> Self {
        Outcome {
            status: Status::Fails,
            witness,
        }
    }

    pub(crate) fn not_met(reason: &str) -> Self {
        Outcome {
            status: Status::HypothesisNotMet,
            witness: serde_json::json!({ "reason": reason }),
        }
    }

    pub(crate) fn skipped(what: &str) -> Self {
        Outcome {
            status: Status::Skipped,
            witness: serde_json::json!({ "budget": what }),
        }
    }

    pub(crate) fn from_bool(ok: bool, witness: Value) -> Self {
        if ok {
            Outcome::holds(witness)
        } else {
            Outcome::fails(witness)
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct StatusCounts {
    pub holds: usize,
    pub fails: usize,
    pub hypothesis_not_met: usize,
    pub skipped: usize,
}

impl StatusCounts {
    fn add(&mut self, s: Status) {
        match s {
            Status::Holds => self.holds += 1,
            Status::Fails => self.fails += 1,
            Status::HypothesisNotMet => self.hypothesis_not_met += 1,
            Status::Skipped => self.skipped += 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Summary {
    pub claims: BTreeMap<String, StatusCounts>,
    pub expected_to_hold_failures: usize,
    /// Expected-to-hold claims with at least one `fails`.
    pub failing_claims: Vec<String>,
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub total_millis: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub verdicts: Vec<TheoremVerdict>,
    pub summary: Summary,
}

impl Report {
    /// The run passes when no expected-to-hold claim fails.
    pub fn passed(&self) -> bool {
        self.summary.expected_to_hold_failures == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    pub fn verdicts_for(&self, id: ClaimId) -> impl Iterator<Item = &TheoremVerdict> {
        self.verdicts.iter().filter(move |v| v.claim_id == id)
    }

    pub fn find(&self, id: ClaimId, ring: &str, ideal: &str) -> Option<&TheoremVerdict> {
        self.verdicts
            .iter()
            .find(|v| v.claim_id == id && v.ring == ring && v.ideal == ideal)
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct RunOptions {
    pub budgets: Budgets,
    pub parallelism: Parallelism,
    pub timing: bool,
}

pub(crate) fn timed(timing: bool, f: impl FnOnce() -> Outcome) -> (Outcome, u64) {
    if !timing {
        return (f(), 0);
    }
    let start = Instant::now();
    let out = f();
    (out, start.elapsed().as_millis() as u64)
}

/// Runs `claims` on every instance and, for integer claims, on every `n` in
/// `z_values`, then sorts by (claim id, ring, ideal).
pub fn full_report(
    universe: &[Instance],
    claims: &[ClaimId],
    z_values: &[u64],
    opts: &RunOptions,
) -> Report {
    let start = Instant::now();
    let ring_claims: Vec<ClaimId> = claims
        .iter()
        .copied()
        .filter(|c| c.domain() == Domain::Ring)
        .collect();
    let z_claims: Vec<ClaimId> = claims
        .iter()
        .copied()
        .filter(|c| c.domain() == Domain::Integers)
        .collect();
    let budgets = opts.budgets;
    let timing = opts.timing;
    let mut verdicts: Vec<TheoremVerdict> = opts.parallelism.install(|| {
        let mut out: Vec<TheoremVerdict> = if ring_claims.is_empty() {
            Vec::new()
        } else {
            par::map_slice(universe, |inst| {
                claims::run_instance(inst, &ring_claims, &budgets, timing)
            })
            .into_iter()
            .flatten()
            .collect()
        };
        if !z_claims.is_empty() {
            out.extend(
                par::map_slice(z_values, |&n| run_z_claims_timed(n, &z_claims, &budgets, timing))
                    .into_iter()
                    .flatten(),
            );
        }
        out
    });
    verdicts.sort_by(|a, b| {
        (a.claim_id.as_str(), &a.ring, &a.ideal).cmp(&(b.claim_id.as_str(), &b.ring, &b.ideal))
    });
    let mut summary = summarize(&verdicts);
    if !ring_claims.is_empty() {
        summary.notes.extend(universe_notes(universe, &ring_claims));
    }
    if timing {
        summary.total_millis = Some(start.elapsed().as_millis() as u64);
    }
    Report { verdicts, summary }
}

fn run_z_claims_timed(n: u64, claims: &[ClaimId], budgets: &Budgets, timing: bool) -> Vec<TheoremVerdict> {
    claims
        .iter()
        .map(|&c| {
            let (out, millis) = timed(timing, || zclaims::evaluate(c, n, budgets));
            zclaims::verdict(c, n, out, millis)
        })
        .collect()
}

fn summarize(verdicts: &[TheoremVerdict]) -> Summary {
    let mut claims: BTreeMap<String, StatusCounts> = BTreeMap::new();
    let mut failures = 0;
    let mut failing = Vec::new();
    for v in verdicts {
        claims.entry(v.claim_id.as_str().to_string()).or_default().add(v.status);
        if v.status == Status::Fails && v.claim_id.expectation() == Expectation::ExpectedToHold {
            failures += 1;
            if failing.last() != Some(&v.claim_id.as_str().to_string()) {
                failing.push(v.claim_id.as_str().to_string());
            }
        }
    }
    Summary {
        claims,
        expected_to_hold_failures: failures,
        failing_claims: failing,
        notes: Vec::new(),
        total_millis: None,
    }
}

fn universe_notes(universe: &[Instance], claims: &[ClaimId]) -> Vec<String> {
    let mut notes = Vec::new();
    if claims.contains(&ClaimId::QConnectivity) {
        let open = universe
            .iter()
            .filter(|inst| !inst.radical_maximal)
            .filter(|inst| inst.ideal.sum_radical_witness().ok().flatten().is_none())
            .count();
        if open == 0 {
            notes.push(
                "every ideal in this universe is sum-radical, so Q-CONNECTIVITY is only \
                 observed where connectivity is already claimed; the open case is not exercised"
                    .to_string(),
            );
        } else {
            notes.push(format!(
                "{open} instances have a non-sum-radical ideal; Q-CONNECTIVITY on them is the open case"
            ));
        }
    }
    if claims.contains(&ClaimId::ThmHam) {
        notes.push(
            "THM-HAM: instances whose deleted graph has fewer than 3 vertices are recorded as \
             hypothesis-not-met, since a cycle needs at least 3 vertices"
                .to_string(),
        );
    }
    notes
}
