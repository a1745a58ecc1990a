//! Cover files, DOT and JSON.

use std::collections::HashMap;
use std::fmt::Write as _;

use anyhow::{bail, Context, Result};
use mulat_core::congruence::{JiSet, Partition};
use mulat_core::irreducibles::DGraph;
use mulat_core::lattice::FiniteLattice;
use mulat_core::sd_engine::TheoremReport;
use serde_json::{json, Value};

/// Reads a cover list: one `lower<upper` per line, `#` starts a comment
/// line. Elements are numbered in order of first appearance.
pub fn parse_covers(text: &str) -> Result<FiniteLattice> {
    let mut labels: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut covers = Vec::new();
    let mut id = |s: &str, labels: &mut Vec<String>| -> usize {
        *index.entry(s.to_string()).or_insert_with(|| {
            labels.push(s.to_string());
            labels.len() - 1
        })
    };
    for (no, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((lo, hi)) = line.split_once('<') else {
            bail!("line {}: expected lower<upper, got {line:?}", no + 1);
        };
        let (lo, hi) = (lo.trim(), hi.trim());
        if lo.is_empty() || hi.is_empty() || hi.contains('<') {
            bail!("line {}: expected lower<upper, got {line:?}", no + 1);
        }
        let a = id(lo, &mut labels);
        let b = id(hi, &mut labels);
        covers.push((a, b));
    }
    if labels.is_empty() {
        bail!("cover file lists no elements");
    }
    Ok(FiniteLattice::from_covers(labels, &covers)?)
}

pub fn read_covers(path: &std::path::Path) -> Result<FiniteLattice> {
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    parse_covers(&text).with_context(|| format!("in {}", path.display()))
}

pub fn write_covers(l: &FiniteLattice) -> String {
    let mut out = String::new();
    for &(a, b) in l.covers() {
        let _ = writeln!(out, "{}<{}", l.label(a), l.label(b));
    }
    out
}

fn quote(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

pub fn hasse_dot(l: &FiniteLattice, name: &str) -> String {
    let mut out = format!("digraph {} {{\n  rankdir=BT;\n", quote(name));
    for e in 0..l.len() {
        let _ = writeln!(out, "  n{e} [label={}];", quote(l.label(e)));
    }
    for &(a, b) in l.covers() {
        let _ = writeln!(out, "  n{a} -> n{b};");
    }
    out.push_str("}\n");
    out
}

pub fn dgraph_dot(g: &DGraph) -> String {
    let mut out = String::from("digraph D {\n");
    for (i, x) in g.nodes.iter().enumerate() {
        let _ = writeln!(out, "  n{i} [label={}];", quote(&x.to_string()));
    }
    for &(a, b, tag) in &g.edges {
        let _ = writeln!(out, "  n{a} -> n{b} [label={}];", quote(&tag.to_string()));
    }
    out.push_str("}\n");
    out
}

pub fn dgraph_json(g: &DGraph) -> Value {
    json!({
        "nodes": g.nodes.iter().map(|x| json!({ "x": x.x(), "word": x.word().to_string() })).collect::<Vec<_>>(),
        "edges": g.edges.iter().map(|&(a, b, t)| json!({ "source": a, "target": b, "tag": t.to_string() })).collect::<Vec<_>>(),
    })
}

pub fn partition_json(s: &JiSet, p: &Partition) -> Value {
    json!({
        "v": p.v.entries(),
        "S": s.members().iter().map(|x| x.x().to_vec()).collect::<Vec<_>>(),
        "blocks": p.blocks.iter().map(|b| b.iter().map(|w| w.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
    })
}

pub fn quotient_json(l: &FiniteLattice) -> Value {
    json!({
        "elements": l.labels(),
        "covers": l.covers().iter().map(|&(a, b)| [l.label(a), l.label(b)]).collect::<Vec<_>>(),
    })
}

pub fn report_json(r: &TheoremReport) -> Value {
    json!({
        "v": r.v.entries(),
        "dim": r.dim,
        "sd_fail_level": r.sd_fail_level,
        "sd_hold_level": r.sd_hold_level,
        "witness_words": r.witness_words.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
        "method": r.method.to_string(),
        "swapped": r.swapped,
        "fails": r.fails,
        "holds": r.holds,
        "longest_d_path": r.longest_d_path,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use mulat_core::lattice::fixtures;

    #[test]
    fn covers_roundtrip() {
        for (name, l) in fixtures::named() {
            let text = write_covers(&l);
            let back = parse_covers(&text).unwrap();
            assert_eq!(back.len(), l.len(), "{name}");
            let pairs = |t: &str| {
                let mut v: Vec<String> = t.lines().map(String::from).collect();
                v.sort();
                v
            };
            assert_eq!(pairs(&write_covers(&back)), pairs(&text), "{name}");
        }
    }

    #[test]
    fn comments_and_errors() {
        let l = parse_covers("# N5\n0<b\nb<a\na<1\n\n0<c\nc<1\n").unwrap();
        assert_eq!(l.len(), 5);
        assert!(parse_covers("0<a\n0<b\na<c\nb<c\na<d\nb<d\n").is_err());
        let e = parse_covers("0<a\nbad line\n").unwrap_err();
        assert!(e.to_string().contains("line 2"));
        assert!(parse_covers("# nothing\n").is_err());
    }

    #[test]
    fn dot_is_deterministic() {
        let l = fixtures::n5();
        let d = hasse_dot(&l, "n5");
        assert!(d.starts_with("digraph \"n5\""));
        assert_eq!(d.matches("->").count(), 5);
        assert_eq!(d, hasse_dot(&l, "n5"));
    }
}
