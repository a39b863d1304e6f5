//! Reference oracles written from the definitions, independent of the engine's
//! own algorithms.

#![allow(dead_code)]

use std::fs;
use std::path::Path as FsPath;

use lpa_core::graph::named;
use lpa_core::paths::{find_exit, simple_cycles};
use lpa_core::{Graph, Monomial, Path, VertexId};

/// Every path of length at most `max_len`, trivial paths included.
pub fn all_paths(g: &Graph, max_len: usize) -> Vec<Path> {
    let mut out: Vec<Path> = g.vertices().map(Path::trivial).collect();
    let mut frontier: Vec<Vec<lpa_core::EdgeId>> = g.edges().map(|e| vec![e]).collect();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for edges in frontier {
            let end = g.range(*edges.last().unwrap());
            out.push(g.path(&edges).unwrap());
            for &f in g.out_edges(end) {
                let mut longer = edges.clone();
                longer.push(f);
                next.push(longer);
            }
        }
        frontier = next;
    }
    out
}

/// `p·q*` can be rewritten by CK2 iff both paths end in the same edge and that
/// edge is the smallest edge leaving its source.
pub fn reducible_by_definition(g: &Graph, p: &Path, q: &Path) -> bool {
    match (p.edges().last(), q.edges().last()) {
        (Some(&e), Some(&f)) => e == f && g.out_edges(g.source(e)).iter().min() == Some(&e),
        _ => false,
    }
}

/// All irreducible monomials `p·q*` with `|p|, |q| ≤ max_len`.
pub fn irreducible_monomials(g: &Graph, max_len: usize) -> Vec<Monomial> {
    let paths = all_paths(g, max_len);
    let mut out = Vec::new();
    for p in &paths {
        for q in &paths {
            if p.range() == q.range() && !reducible_by_definition(g, p, q) {
                out.push(Monomial::new(p.clone(), q.clone()).unwrap());
            }
        }
    }
    out
}

/// A closed path at `v` of positive length whose edges after the first never
/// start at `v`.
pub fn closed_simple_by_definition(g: &Graph, p: &Path, v: VertexId) -> bool {
    !p.is_trivial()
        && p.source() == v
        && p.range() == v
        && p.edges().iter().skip(1).all(|&e| g.source(e) != v)
}

/// Every way of cutting a closed path at `v` into closed simple paths at `v`.
pub fn factorizations(g: &Graph, p: &Path, v: VertexId) -> Vec<Vec<Path>> {
    if p.is_trivial() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for k in 1..=p.len() {
        let head = p.slice(g, 0, k);
        if closed_simple_by_definition(g, &head, v) {
            for mut rest in factorizations(g, &p.slice(g, k, p.len()), v) {
                rest.insert(0, head.clone());
                out.push(rest);
            }
        }
    }
    out
}

pub fn every_cycle_has_exit(g: &Graph) -> bool {
    simple_cycles(g).iter().all(|c| find_exit(g, c.path()).unwrap().is_some())
}

/// The graphs in the repository corpus together with the named families.
pub fn corpus_graphs() -> Vec<(String, Graph)> {
    let dir = FsPath::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus");
    let mut out: Vec<(String, Graph)> = Vec::new();
    let mut files: Vec<_> = fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    for f in files {
        let name = f.file_stem().unwrap().to_string_lossy().into_owned();
        out.push((name, Graph::from_json(&fs::read_to_string(&f).unwrap()).unwrap()));
    }
    for n in 1..=4 {
        out.push((format!("line({n})"), named::line(n)));
        out.push((format!("cycle({n})"), named::cycle(n)));
        out.push((format!("rose({n})"), named::rose(n)));
    }
    out.push(("flag".into(), named::flag()));
    out
}
