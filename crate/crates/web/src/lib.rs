//! Browser bindings. Each exported function takes text literals and returns
//! a JSON string; errors come back as the library's message.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use depthzero::branching::{branch_report, generic_branching};
use depthzero::multiseg::{poset, DecompositionNumbers};
use depthzero::{Error, Multisegment, Partition};

/// Browsers get a smaller cap than the CLI to keep the page responsive.
pub const WEB_POSET_CAP: usize = 10;

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("value serializes")
}

fn parse_multisegment(text: &str) -> Result<Multisegment, String> {
    text.parse().map_err(|e: Error| e.to_string())
}

#[derive(Serialize)]
struct Bar {
    partition: String,
    multiplicity: i64,
}

#[derive(Serialize)]
struct BranchView {
    multisegment: String,
    top: String,
    dual: String,
    dual_partition: String,
    dual_is_minimum: bool,
    bars: Vec<Bar>,
    expansion: Vec<(String, i64)>,
}

/// Branching law of a multisegment literal such as `[0]+[1]+[1]+[2]`.
pub fn branch_view(text: &str) -> Result<String, String> {
    let a = parse_multisegment(text)?;
    let rep = branch_report(&a, WEB_POSET_CAP).map_err(|e| e.to_string())?;
    Ok(to_json(&BranchView {
        multisegment: a.to_string(),
        top: rep.top.to_string(),
        dual: rep.dual.to_string(),
        dual_partition: rep.dual_partition.to_string(),
        dual_is_minimum: rep.dual_is_minimum,
        bars: rep
            .branch
            .multiplicities
            .iter()
            .map(|(p, c)| Bar {
                partition: p.to_string(),
                multiplicity: c,
            })
            .collect(),
        expansion: rep
            .c_coefficients
            .iter()
            .map(|(b, c)| (b.to_string(), *c))
            .collect(),
    }))
}

#[derive(Serialize)]
struct Node {
    label: String,
    level: usize,
    m: u64,
}

#[derive(Serialize)]
struct PosetView {
    nodes: Vec<Node>,
    edges: Vec<(usize, usize)>,
}

/// The interval below a multisegment, with levels for a layered drawing and
/// `m(b;a)` on each node.
pub fn poset_view(text: &str) -> Result<String, String> {
    let a = parse_multisegment(text)?;
    let p = poset(&a, WEB_POSET_CAP).map_err(|e| e.to_string())?;
    // level = length of the longest chain down from a
    let mut level = vec![0usize; p.len()];
    for &(i, j) in &p.edges {
        level[j] = level[j].max(level[i] + 1);
    }
    let mut dn = DecompositionNumbers::new();
    let mut nodes = Vec::with_capacity(p.len());
    for (b, &lvl) in p.nodes.iter().zip(&level) {
        nodes.push(Node {
            label: b.to_string(),
            level: lvl,
            m: dn.m(b, &a).map_err(|e| e.to_string())?,
        });
    }
    Ok(to_json(&PosetView {
        nodes,
        edges: p.edges.clone(),
    }))
}

#[derive(Serialize)]
struct GenericView {
    top: String,
    rows: Vec<(String, i64)>,
}

/// Decomposition for pairwise unlinked segments of the given lengths, e.g. `2,1,1`.
pub fn generic_view(text: &str) -> Result<String, String> {
    let lengths = text
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .ok()
                .filter(|&l| l > 0)
                .ok_or_else(|| format!("invalid literal `{text}`: lengths must be positive integers"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if lengths.iter().sum::<usize>() > 12 {
        return Err("at most 12 points in the browser".to_string());
    }
    let r = generic_branching(&lengths).map_err(|e| e.to_string())?;
    Ok(to_json(&GenericView {
        top: r.top.to_string(),
        rows: Partition::all(r.n)
            .into_iter()
            .map(|mu| {
                let c = r.multiplicities.get(&mu);
                (mu.to_string(), c)
            })
            .collect(),
    }))
}

#[wasm_bindgen]
pub fn branch(text: &str) -> Result<String, JsValue> {
    branch_view(text).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn interval(text: &str) -> Result<String, JsValue> {
    poset_view(text).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn generic(text: &str) -> Result<String, JsValue> {
    generic_view(text).map_err(|e| JsValue::from_str(&e))
}
