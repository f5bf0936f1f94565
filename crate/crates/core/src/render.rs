//! Byte-stable text, JSON and DOT output.

use std::fmt::Write;

use serde::Serialize;

use crate::multiseg::{Multisegment, Poset};
use crate::partition::PartitionVector;

/// One `λ : c` row per constituent, descending lexicographically.
pub fn vector_table(v: &PartitionVector) -> String {
    if v.is_empty() {
        return "(no constituents)\n".to_string();
    }
    let mut out = String::new();
    for (p, c) in v.iter() {
        writeln!(out, "{p} : {c}").unwrap();
    }
    out
}

/// `{"n":n,"entries":[{"partition":[..],"coeff":c},...]}`.
pub fn vector_json(v: &PartitionVector) -> String {
    serde_json::to_string(v).expect("vector serializes")
}

/// Compact JSON for any serializable value, newline terminated.
pub fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("value serializes");
    s.push('\n');
    s
}

pub fn poset_dot(p: &Poset) -> String {
    let mut out = String::from("digraph poset {\n");
    for (i, node) in p.nodes.iter().enumerate() {
        writeln!(out, "  n{i} [label=\"{node}\"];").unwrap();
    }
    for (from, to) in &p.edges {
        writeln!(out, "  n{from} -> n{to};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize)]
struct PosetForm<'a> {
    nodes: Vec<String>,
    edges: &'a [(usize, usize)],
    /// `m_values[i]` is `m(nodes[i]; nodes[0])`.
    m_values: &'a [u64],
}

/// `{"nodes":[..],"edges":[[i,j],..],"m_values":[..]}`, nodes in text form.
pub fn poset_json(p: &Poset, m_values: &[u64]) -> String {
    json(&PosetForm {
        nodes: p.nodes.iter().map(Multisegment::to_string).collect(),
        edges: &p.edges,
        m_values,
    })
}
