use std::fmt::Write as _;

use serde::Serialize;

use super::{Label, LabeledGraph};

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct GraphJson {
    pub ring: String,
    pub ideal: String,
    pub family: String,
    pub vertices: Vec<Label>,
    pub edges: Vec<[Label; 2]>,
}

/// JSON view; edges follow vertex order, so they are sorted by label.
pub fn to_json(g: &LabeledGraph) -> GraphJson {
    GraphJson {
        ring: g.provenance().ring.clone(),
        ideal: g.provenance().ideal.clone(),
        family: g.family().tag().to_string(),
        vertices: g.labels().to_vec(),
        edges: g.labeled_edges().into_iter().map(|(a, b)| [a, b]).collect(),
    }
}

fn quoted(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn to_dot(g: &LabeledGraph) -> String {
    let tag = g.family().tag();
    let prov = g.provenance();
    let mut out = String::new();
    let _ = writeln!(out, "graph {} {{", quoted(tag));
    let _ = writeln!(
        out,
        "  graph [family={}, ring={}, ideal={}];",
        quoted(tag),
        quoted(&prov.ring),
        quoted(&prov.ideal)
    );
    for label in g.labels() {
        let _ = writeln!(out, "  {};", quoted(&label.to_string()));
    }
    for (a, b) in g.labeled_edges() {
        let _ = writeln!(
            out,
            "  {} -- {};",
            quoted(&a.to_string()),
            quoted(&b.to_string())
        );
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_gamma;
    use crate::ring::Ring;

    #[test]
    fn dot_and_json_for_z6() {
        let g = build_gamma(&Ring::cyclic(6).unwrap());
        let dot = to_dot(&g);
        assert!(dot.starts_with("graph \"gamma\" {\n  graph [family=\"gamma\", ring=\"Z6\", ideal=\"0\"];"));
        assert!(dot.contains("\"(2)\" -- \"(3)\";"));
        let json = serde_json::to_string(&to_json(&g)).unwrap();
        assert_eq!(
            json,
            r#"{"ring":"Z6","ideal":"0","family":"gamma","vertices":["(2)","(3)","(4)"],"edges":[["(2)","(3)"],["(3)","(4)"]]}"#
        );
    }
}
