//! Browser bindings: generate a node set, draw it as SVG, and list its structure.
//!
//! Documents cross the boundary as the same JSON used by the command-line tool.

use wasm_bindgen::prelude::*;

use gcsets::generators::{cg_with_prescribed_2node_lines, principal_lattice, random_carnicer_gasca, random_chung_yao};
use gcsets::io::{analysis_summary, parse_nodeset, render_svg, serialize_nodeset, triplets_summary, NodeSetDocument, SvgOptions};

/// JSON document for a generated set. `kind` is one of `chung-yao`, `carnicer-gasca`,
/// `principal`, `cg-prescribed`.
pub fn generate_document(kind: &str, degree: usize, seed: u64) -> Result<String, String> {
    let (set, distinguished) = match kind {
        "chung-yao" => (random_chung_yao(degree, seed), None),
        "carnicer-gasca" => (random_carnicer_gasca(degree, seed), None),
        "principal" => (principal_lattice(degree), None),
        "cg-prescribed" => match cg_with_prescribed_2node_lines(degree, seed) {
            Ok((set, b)) => (Ok(set), Some(b)),
            Err(e) => (Err(e), None),
        },
        other => return Err(format!("unknown kind {other:?}")),
    };
    let set = set.map_err(|e| e.to_string())?;
    Ok(serialize_nodeset(&NodeSetDocument::from_set(&set).with_distinguished(distinguished)))
}

/// SVG for a document; `highlight` falls back to the document's distinguished node.
pub fn render_document(json: &str, min_k: usize, highlight: Option<usize>) -> Result<String, String> {
    let loaded = parse_nodeset(json).map_err(|e| e.to_string())?;
    if let Some(h) = highlight {
        loaded.set.check_index(h).map_err(|e| e.to_string())?;
    }
    let options = SvgOptions { min_k, highlight: highlight.or(loaded.document.distinguished) };
    Ok(render_svg(&loaded.set, &options))
}

/// Analysis text followed by the special triplets through `node` (or all of them).
pub fn describe_document(json: &str, node: Option<usize>) -> Result<String, String> {
    let loaded = parse_nodeset(json).map_err(|e| e.to_string())?;
    let mut out = String::new();
    for w in &loaded.warnings {
        out.push_str(&format!("warning: {w}\n"));
    }
    out.push_str(&analysis_summary(&loaded.set));
    let node = node.or(loaded.document.distinguished);
    match triplets_summary(&loaded.set, node) {
        Ok(text) => {
            if let Some(b) = node {
                out.push_str(&format!("triplets through #{b}:\n"));
            }
            out.push_str(&text);
        }
        Err(e) => out.push_str(&format!("triplets: {e}\n")),
    }
    Ok(out)
}

#[wasm_bindgen]
pub fn generate(kind: &str, degree: u32, seed: u32) -> Result<String, JsValue> {
    generate_document(kind, degree as usize, seed as u64).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn render(json: &str, min_k: u32, highlight: Option<u32>) -> Result<String, JsValue> {
    render_document(json, min_k as usize, highlight.map(|h| h as usize)).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn describe(json: &str, node: Option<u32>) -> Result<String, JsValue> {
    describe_document(json, node.map(|n| n as usize)).map_err(|e| JsValue::from_str(&e))
}
