use std::collections::BTreeMap;
use std::fmt::Write;

use crate::curves::{all_special_triplets, TripletDetector};
use crate::harness::TRIPLET_CACHE_LIMIT;
use crate::lines::{classify_correct, gc_factorization_idx, line_census, users_of_line};
use crate::nodeset::{CorrectSet, NodeSet};
use crate::Error;

fn node_label(x: &NodeSet, i: usize) -> String {
    format!("#{i} {}", x.node(i))
}

fn index_list(x: &NodeSet, indices: &[usize]) -> String {
    indices.iter().map(|&i| node_label(x, i)).collect::<Vec<_>>().join(", ")
}

/// Census table, maximal lines, classification and per-node usage summary.
pub fn analysis_summary(x: &NodeSet) -> String {
    let mut out = String::new();
    let n = x.degree();
    writeln!(out, "degree: {n}").unwrap();
    writeln!(out, "nodes: {} (expected {})", x.len(), x.expected_len()).unwrap();
    let cs = CorrectSet::new(x.clone()).ok();
    writeln!(out, "{n}-correct: {}", if cs.is_some() { "yes" } else { "no" }).unwrap();

    let census = match &cs {
        Some(cs) => cs.census().to_vec(),
        None => line_census(x),
    };
    let mut histogram: BTreeMap<usize, usize> = BTreeMap::new();
    for e in &census {
        *histogram.entry(e.k()).or_default() += 1;
    }
    out.push_str("census:\n");
    for (k, count) in histogram.iter().rev() {
        writeln!(out, "  {k}-node lines: {count}").unwrap();
    }
    out.push_str("lines with 3 or more nodes:\n");
    for e in census.iter().filter(|e| e.k() >= 3) {
        let mark = if e.k() == n + 1 { " (maximal)" } else { "" };
        writeln!(out, "  {}  k={}{mark}: {}", e.line, e.k(), index_list(x, &e.indices)).unwrap();
    }
    let maximal: Vec<_> = census.iter().filter(|e| e.k() == n + 1).collect();
    writeln!(out, "maximal lines: {}", maximal.len()).unwrap();
    for e in &maximal {
        writeln!(out, "  {}", e.line).unwrap();
    }

    let Some(cs) = cs else {
        out.push_str("classification: not-correct\n");
        return out;
    };
    writeln!(out, "classification: {}", classify_correct(&cs)).unwrap();

    let mut used_by: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    for e in cs.census().iter().filter(|e| e.k() == 2) {
        for (c, _) in users_of_line(&cs, e) {
            used_by.entry(c).or_default().push(format!("{} (through {})", e.line, index_list(x, &e.indices)));
        }
    }
    out.push_str("nodes:\n");
    for i in 0..cs.len() {
        let factors = match gc_factorization_idx(&cs, i) {
            Some(lines) => {
                let maximal_used = lines.iter().filter(|l| maximal.iter().any(|e| &e.line == *l)).count();
                format!("factors into {} lines ({maximal_used} maximal)", lines.len())
            }
            None => "no census factorization".to_string(),
        };
        let used = used_by.get(&i).map(|v| v.join("; ")).unwrap_or_else(|| "none".to_string());
        writeln!(out, "  {}: {factors}; used 2-node lines: {used}", node_label(x, i)).unwrap();
    }
    out
}

/// Graded-lex coefficients of `p⋆` for one node, optionally with its census factorization.
pub fn fundpoly_summary(x: &NodeSet, node: usize, factor: bool) -> Result<String, Error> {
    x.check_index(node)?;
    let cs = CorrectSet::new(x.clone())?;
    let p = cs.fundamental(node);
    let mut out = String::new();
    writeln!(out, "node: {}", node_label(x, node)).unwrap();
    writeln!(out, "p* = {p}").unwrap();
    out.push_str("coefficients (graded-lex):\n");
    let mut index = 0;
    for d in 0..=cs.degree() {
        for j in 0..=d {
            let c = &p.coeffs()[index];
            writeln!(out, "  x^{} y^{}: {}", d - j, j, crate::algebra::rational::format_rational(c)).unwrap();
            index += 1;
        }
    }
    if factor {
        match gc_factorization_idx(&cs, node) {
            Some(lines) => {
                out.push_str("factorization:\n");
                for l in lines {
                    writeln!(out, "  {l}").unwrap();
                }
            }
            None => out.push_str("no census factorization\n"),
        }
    }
    Ok(out)
}

/// Special triplets of the set, or only those containing `node`.
pub fn triplets_summary(x: &NodeSet, node: Option<usize>) -> Result<String, Error> {
    if let Some(i) = node {
        x.check_index(i)?;
    }
    let cs = CorrectSet::new(x.clone())?;
    let triplets = match node {
        None => {
            if cs.len() > TRIPLET_CACHE_LIMIT {
                return Err(Error::Precondition(format!(
                    "exhaustive triplet search is limited to {TRIPLET_CACHE_LIMIT} nodes; pass --node"
                )));
            }
            all_special_triplets(&cs)
        }
        Some(b) => {
            let det = TripletDetector::new(&cs);
            let mut found = Vec::new();
            for i in 0..cs.len() {
                for j in i + 1..cs.len() {
                    if i != b && j != b {
                        let mut idx = [i, j, b];
                        idx.sort_unstable();
                        found.extend(det.special(idx));
                    }
                }
            }
            found.sort_by_key(|t| t.indices);
            found
        }
    };
    let mut out = String::new();
    writeln!(out, "special triplets: {}", triplets.len()).unwrap();
    for t in &triplets {
        writeln!(out, "  {{{}}}  f = {}", index_list(x, &t.indices), t.f).unwrap();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::principal_lattice;

    #[test]
    fn lattice_summary() {
        let x = principal_lattice(2).unwrap();
        let text = analysis_summary(&x);
        assert!(text.contains("classification: carnicer-gasca"));
        assert!(text.contains("maximal lines: 3"));
        assert!(text.contains("#0 (0, 0): factors into 2 lines (1 maximal); used 2-node lines: x + y - 1 = 0"));
    }

    #[test]
    fn fundpoly_lists_all_coefficients() {
        let x = principal_lattice(2).unwrap();
        let text = fundpoly_summary(&x, 0, true).unwrap();
        assert_eq!(text.matches("  x^").count(), 6);
        assert!(text.contains("factorization:"));
        assert!(fundpoly_summary(&x, 9, false).is_err());
    }

    #[test]
    fn triplet_listing() {
        let x = principal_lattice(2).unwrap();
        let text = triplets_summary(&x, Some(0)).unwrap();
        assert!(text.starts_with("special triplets: 1\n"));
    }
}
