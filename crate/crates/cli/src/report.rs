//! JSON result documents, DOT graphs and plain-text summaries.

use serde::Serialize;
use stau_core::opext::VerificationReport;
use stau_core::tautilt::{is_sincere, STPoset};

use crate::VERSION;

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SummandEntry {
    pub label: String,
    pub dims: Vec<usize>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct NodeEntry {
    pub id: usize,
    pub label: String,
    pub summands: Vec<SummandEntry>,
    /// Vertex names of the projective part.
    pub projective: Vec<String>,
    pub semibrick: Vec<String>,
    pub sincere: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct EdgeEntry {
    pub from: usize,
    pub to: usize,
    pub mutated: String,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Counts {
    pub nodes: usize,
    pub edges: usize,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct EnumerationDocument {
    pub tool: &'static str,
    pub version: &'static str,
    pub input_digest: String,
    pub vertices: Vec<String>,
    pub field: u32,
    pub counts: Counts,
    pub nodes: Vec<NodeEntry>,
    pub edges: Vec<EdgeEntry>,
}

impl EnumerationDocument {
    pub fn new(poset: &STPoset, input_digest: String) -> Self {
        let q = poset.algebra.quiver();
        let nodes = poset
            .nodes
            .iter()
            .enumerate()
            .map(|(id, n)| NodeEntry {
                id,
                label: n.label.clone(),
                summands: n
                    .summand_ids
                    .iter()
                    .map(|&i| SummandEntry {
                        label: poset.module_labels[i].clone(),
                        dims: poset.modules[i].dims().to_vec(),
                    })
                    .collect(),
                projective: n.pair.proj_part().iter().map(|&v| q.vertices()[v].clone()).collect(),
                semibrick: n.semibrick_labels.clone(),
                sincere: is_sincere(&n.pair.module()),
            })
            .collect();
        let edges = poset
            .edges
            .iter()
            .map(|e| EdgeEntry {
                from: e.from,
                to: e.to,
                mutated: e.mutated.clone(),
            })
            .collect();
        EnumerationDocument {
            tool: "stau",
            version: VERSION,
            input_digest,
            vertices: q.vertices().to_vec(),
            field: poset.algebra.field().p(),
            counts: Counts {
                nodes: poset.nodes.len(),
                edges: poset.edges.len(),
            },
            nodes,
            edges,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// One box per pair labelled with its summand words and bricks, one arrow per
/// left mutation labelled with the exchanged summand.
pub fn poset_dot(poset: &STPoset) -> String {
    let mut s = String::from("digraph stau {\n  rankdir=TB;\n  node [shape=box];\n");
    for (i, n) in poset.nodes.iter().enumerate() {
        let bricks = format!("{{{}}}", n.semibrick_labels.join(", "));
        s.push_str(&format!(
            "  n{i} [label=\"{}\\n{}\"];\n",
            dot_escape(&n.label),
            dot_escape(&bricks)
        ));
    }
    for e in &poset.edges {
        s.push_str(&format!("  n{} -> n{} [label=\"{}\"];\n", e.from, e.to, dot_escape(&e.mutated)));
    }
    s.push_str("}\n");
    s
}

pub fn poset_summary(poset: &STPoset) -> String {
    let mut s = format!("{} pairs, {} edges\n", poset.nodes.len(), poset.edges.len());
    for (i, n) in poset.nodes.iter().enumerate() {
        s.push_str(&format!("{i:>4}  {}  {{{}}}\n", n.label, n.semibrick_labels.join(", ")));
    }
    for e in &poset.edges {
        s.push_str(&format!("{:>4} -> {}  ({})\n", e.from, e.to, e.mutated));
    }
    s
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct RowEntry {
    pub node: String,
    pub check: &'static str,
    pub applicable: bool,
    pub passed: bool,
    pub witness: Option<String>,
    pub tau_tilting: Option<bool>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct VerificationDocument {
    pub tool: &'static str,
    pub version: &'static str,
    pub input_digest: String,
    pub extension: String,
    pub pairs_a: usize,
    pub pairs_b: usize,
    pub all_passed: bool,
    pub rows: Vec<RowEntry>,
}

impl VerificationDocument {
    pub fn new(r: &VerificationReport, input_digest: String) -> Self {
        let (a, b) = r.counts();
        VerificationDocument {
            tool: "stau",
            version: VERSION,
            input_digest,
            extension: crate::format::emit_algebra(&r.extension.algebra),
            pairs_a: a,
            pairs_b: b,
            all_passed: r.all_passed(),
            rows: r
                .rows
                .iter()
                .map(|row| RowEntry {
                    node: row.node.clone(),
                    check: row.check.code(),
                    applicable: row.applicable,
                    passed: row.passed,
                    witness: row.witness.clone(),
                    tau_tilting: row.tau_tilting,
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }
}

pub fn verification_table(r: &VerificationReport) -> String {
    let width = r.rows.iter().map(|row| row.node.len()).max().unwrap_or(0).max(4);
    let mut s = format!("{:<width$}  check  result  witness\n", "node");
    for row in &r.rows {
        let result = match (row.applicable, row.passed) {
            (false, _) => "n/a",
            (true, true) => "pass",
            (true, false) => "FAIL",
        };
        let mut witness = row.witness.clone().unwrap_or_default();
        if row.tau_tilting == Some(true) {
            witness.push_str(" (tau-tilting)");
        }
        s.push_str(&format!("{:<width$}  {:<5}  {:<6}  {}\n", row.node, row.check.code(), result, witness).trim_end().to_string());
        s.push('\n');
    }
    let (a, b) = r.counts();
    s.push_str(&format!("counts: {b} >= 2*{a}\n"));
    s.push_str(if r.all_passed() { "all checks passed\n" } else { "some checks FAILED\n" });
    s
}
