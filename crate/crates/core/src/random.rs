//! Seeded generators for graphs, paths and elements, shared by the property
//! tests, the acceptance suite and the CLI's randomized checks.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Element, LeavittAlgebra, Monomial};
use crate::graph::{Graph, Path, VertexId};
use crate::paths::condition_l;
use crate::scalar::{Field, Scalar};

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A graph on `1..=max_vertices` vertices `v1, v2, …` with up to twice as many
/// edges `e1, e2, …`; loops and parallel edges are allowed.
pub fn random_graph(rng: &mut impl Rng, max_vertices: usize) -> Graph {
    let n = rng.gen_range(1..=max_vertices.max(1));
    let m = rng.gen_range(0..=2 * n);
    let vertices: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
    let edges: Vec<(String, String, String)> = (1..=m)
        .map(|i| {
            let s = rng.gen_range(1..=n);
            let r = rng.gen_range(1..=n);
            (format!("e{i}"), format!("v{s}"), format!("v{r}"))
        })
        .collect();
    Graph::new(vertices, edges).expect("generated ids are valid")
}

/// A random graph in which every cycle has an exit, by rejection.
pub fn random_condition_l_graph(rng: &mut impl Rng, max_vertices: usize) -> Graph {
    loop {
        let g = random_graph(rng, max_vertices);
        if condition_l(&g).holds {
            return g;
        }
    }
}

/// The same graph with vertices and edges renamed by random permutations.
pub fn relabel(rng: &mut impl Rng, g: &Graph) -> Graph {
    let mut vperm: Vec<usize> = (0..g.vertex_count()).collect();
    let mut eperm: Vec<usize> = (0..g.edge_count()).collect();
    vperm.shuffle(rng);
    eperm.shuffle(rng);
    let vname = |v: VertexId| format!("w{}", vperm[v.index()]);
    let edges: Vec<(String, String, String)> = g
        .edges()
        .map(|e| (format!("f{}", eperm[e.index()]), vname(g.source(e)), vname(g.range(e))))
        .collect();
    Graph::new(g.vertices().map(vname), edges).expect("renamed ids are valid")
}

pub fn random_vertex(rng: &mut impl Rng, g: &Graph) -> VertexId {
    VertexId(rng.gen_range(0..g.vertex_count() as u32))
}

/// A walk of length at most `max_len` starting at `v`; stops early at a sink.
pub fn random_path_from(rng: &mut impl Rng, g: &Graph, v: VertexId, max_len: usize) -> Path {
    let len = rng.gen_range(0..=max_len);
    let mut p = Path::trivial(v);
    for _ in 0..len {
        match g.out_edges(p.range()).choose(rng) {
            Some(&e) => p = p.push_edge(g, e),
            None => break,
        }
    }
    p
}

/// A walk of length at most `max_len` ending at `v`; stops early at a source.
pub fn random_path_into(rng: &mut impl Rng, g: &Graph, v: VertexId, max_len: usize) -> Path {
    let len = rng.gen_range(0..=max_len);
    let mut rev = Vec::new();
    let mut at = v;
    for _ in 0..len {
        match g.in_edges(at).choose(rng) {
            Some(&e) => {
                rev.push(e);
                at = g.source(e);
            }
            None => break,
        }
    }
    rev.reverse();
    if rev.is_empty() {
        Path::trivial(v)
    } else {
        g.path(&rev).expect("walk is composable")
    }
}

/// A closed path at `v` of length `1..=max_len` chosen by first drawing a
/// feasible length, or `None` if `v` lies on no closed path that short.
pub fn random_closed_path(rng: &mut impl Rng, g: &Graph, v: VertexId, max_len: usize) -> Option<Path> {
    // reach[k][u]: some walk of length exactly k runs from u to v.
    let n = g.vertex_count();
    let mut reach = vec![vec![false; n]; max_len + 1];
    reach[0][v.index()] = true;
    for k in 1..=max_len {
        for u in g.vertices() {
            reach[k][u.index()] = g.out_edges(u).iter().any(|&e| reach[k - 1][g.range(e).index()]);
        }
    }
    let lengths: Vec<usize> = (1..=max_len).filter(|&k| reach[k][v.index()]).collect();
    let &len = lengths.choose(rng)?;
    let mut p = Path::trivial(v);
    for left in (0..len).rev() {
        let options: Vec<_> = g
            .out_edges(p.range())
            .iter()
            .copied()
            .filter(|&e| reach[left][g.range(e).index()])
            .collect();
        p = p.push_edge(g, *options.choose(rng).expect("reach table guarantees a step"));
    }
    Some(p)
}

/// A nonzero scalar: small integers and fractions over `Q`, any unit in `GF(p)`.
pub fn random_scalar(rng: &mut impl Rng, field: Field) -> Scalar {
    match field {
        Field::Rationals => {
            let num = loop {
                let k = rng.gen_range(-5i64..=5);
                if k != 0 {
                    break k;
                }
            };
            let den = if rng.gen_bool(0.25) { rng.gen_range(2i64..=4) } else { 1 };
            field.ratio(num, den).expect("nonzero denominator")
        }
        Field::Prime(p) => field.int(rng.gen_range(1..p) as i64),
    }
}

/// A random monomial `p·q*` with `|p|, |q| ≤ max_len`.
pub fn random_monomial(rng: &mut impl Rng, g: &Graph, max_len: usize) -> Monomial {
    let u = random_vertex(rng, g);
    let p = random_path_into(rng, g, u, max_len);
    let q = random_path_into(rng, g, u, max_len);
    Monomial::new(p, q).expect("common range")
}

/// A sum of `1..=max_terms` random monomials with nonzero coefficients, in
/// canonical form (which may be zero).
pub fn random_element(rng: &mut impl Rng, alg: &Arc<LeavittAlgebra>, max_terms: usize, max_len: usize) -> Element {
    let k = rng.gen_range(1..=max_terms.max(1));
    let terms: Vec<(Monomial, Scalar)> = (0..k)
        .map(|_| (random_monomial(rng, alg.graph(), max_len), random_scalar(rng, alg.field())))
        .collect();
    alg.normalize_terms(terms)
}

/// A nonzero element whose monomials have no ghost part and real length at
/// most `max_len`.
pub fn random_real_element(
    rng: &mut impl Rng,
    alg: &Arc<LeavittAlgebra>,
    max_terms: usize,
    max_len: usize,
) -> Element {
    loop {
        let k = rng.gen_range(1..=max_terms.max(1));
        let terms: Vec<(Monomial, Scalar)> = (0..k)
            .map(|_| {
                let v = random_vertex(rng, alg.graph());
                let p = random_path_from(rng, alg.graph(), v, max_len);
                let r = p.range();
                (Monomial::new(p, Path::trivial(r)).expect("common range"), random_scalar(rng, alg.field()))
            })
            .collect();
        let a = alg.normalize_terms(terms);
        if !a.is_zero() {
            return a;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn generators_respect_bounds() {
        let mut r = rng(7);
        for _ in 0..200 {
            let g = random_graph(&mut r, 5);
            assert!((1..=5).contains(&g.vertex_count()));
            let v = random_vertex(&mut r, &g);
            let p = random_path_from(&mut r, &g, v, 4);
            assert!(p.len() <= 4 && p.source() == v);
            let q = random_path_into(&mut r, &g, v, 4);
            assert!(q.len() <= 4 && q.range() == v);
            if let Some(c) = random_closed_path(&mut r, &g, v, 6) {
                assert!(c.is_closed() && c.source() == v && (1..=6).contains(&c.len()));
            }
        }
    }

    #[test]
    fn closed_paths_exist_on_cycles() {
        let g = named::cycle(3);
        let mut r = rng(1);
        let p = random_closed_path(&mut r, &g, VertexId(0), 8).unwrap();
        assert!(p.len() == 3 || p.len() == 6);
        assert!(random_closed_path(&mut r, &named::line(3), VertexId(0), 8).is_none());
    }

    #[test]
    fn relabeling_preserves_shape() {
        let mut r = rng(3);
        let g = named::flag();
        let h = relabel(&mut r, &g);
        assert_eq!(h.vertex_count(), 2);
        assert_eq!(h.edge_count(), 2);
        assert_eq!(h.sinks().len(), 1);
    }

    #[test]
    fn real_elements_are_real() {
        let alg = LeavittAlgebra::new(named::rose(2), Field::prime(3).unwrap());
        let mut r = rng(5);
        for _ in 0..50 {
            let a = random_real_element(&mut r, &alg, 4, 4);
            assert!(a.is_real_only() && !a.is_zero());
        }
    }
}
