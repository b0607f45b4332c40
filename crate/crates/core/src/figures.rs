//! The six reference graphs over `Z_12` and `Z_24`, and the checked-in edge
//! lists they are compared against.

use std::collections::BTreeSet;

use crate::graph::{build_gamma_dblprime, build_q_gamma_dblprime, LabeledGraph};
use crate::ideal::Ideal;
use crate::ring::Ring;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Figure {
    pub id: char,
    pub ring: &'static str,
    pub ideal: &'static str,
    /// `true` for `QΓ″_I`, `false` for `Γ″_I`.
    pub quasi: bool,
    pub golden: &'static str,
}

pub const FIGURES: [Figure; 6] = [
    Figure {
        id: 'a',
        ring: "Z12",
        ideal: "0",
        quasi: true,
        golden: include_str!("../golden/figure_a"),
    },
    Figure {
        id: 'b',
        ring: "Z12",
        ideal: "0",
        quasi: false,
        golden: include_str!("../golden/figure_b"),
    },
    Figure {
        id: 'c',
        ring: "Z12",
        ideal: "(6)",
        quasi: false,
        golden: include_str!("../golden/figure_c"),
    },
    Figure {
        id: 'd',
        ring: "Z24",
        ideal: "(12)",
        quasi: false,
        golden: include_str!("../golden/figure_d"),
    },
    Figure {
        id: 'e',
        ring: "Z24",
        ideal: "(6)",
        quasi: false,
        golden: include_str!("../golden/figure_e"),
    },
    Figure {
        id: 'f',
        ring: "Z24",
        ideal: "(12)",
        quasi: true,
        golden: include_str!("../golden/figure_f"),
    },
];

impl Figure {
    pub fn build(&self) -> LabeledGraph {
        let ring: Ring = self.ring.parse().expect("figure ring");
        let ideal = Ideal::parse(&ring, self.ideal).expect("figure ideal");
        if self.quasi {
            build_q_gamma_dblprime(&ring, &ideal).expect("proper")
        } else {
            build_gamma_dblprime(&ring, &ideal).expect("proper")
        }
    }
}

/// `v <label>` per vertex then `e <label> <label>` per edge, both in graph order.
pub fn edge_list(g: &LabeledGraph) -> String {
    let mut out = String::new();
    for l in g.labels() {
        out.push_str(&format!("v {l}\n"));
    }
    for (a, b) in g.labeled_edges() {
        out.push_str(&format!("e {a} {b}\n"));
    }
    out
}

/// Lines present in only one of the two listings: `(only_left, only_right)`.
pub fn diff_lines(left: &str, right: &str) -> (Vec<String>, Vec<String>) {
    let l: BTreeSet<&str> = left.lines().filter(|s| !s.trim().is_empty()).collect();
    let r: BTreeSet<&str> = right.lines().filter(|s| !s.trim().is_empty()).collect();
    (
        l.difference(&r).map(|s| s.to_string()).collect(),
        r.difference(&l).map(|s| s.to_string()).collect(),
    )
}
