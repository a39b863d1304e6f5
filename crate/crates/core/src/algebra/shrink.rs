//! Two-sided multiplications that shrink a nonzero polynomial in only real
//! (or only ghost) edges down to a single vertex, on graphs where every cycle
//! has an exit.
//!
//! The reduction follows the constructive argument: with no vertex terms,
//! peel a leading edge with its ghost; otherwise corner the element at a vertex
//! `v` with a nonzero coefficient, repeatedly strip a closed simple path `c`
//! at `v` with `c*`, and kill the ghost powers of `c` with a path `z` that
//! leaves `c` through an exit. Every answer is re-multiplied and checked, and
//! a bounded search over `μ*·a·ν` stands behind the constructive route.

use std::sync::Arc;

use super::{Element, LeavittAlgebra};
use crate::error::AlgebraError;
use crate::graph::{Graph, Path, VertexId};
use crate::paths::{condition_l, factor_closed_path, find_exit};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Real,
    Ghost,
}

/// `result = left · a · right`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shrink {
    pub left: Element,
    pub right: Element,
    pub result: Element,
}

/// `left · a · right = vertex`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShrinkToVertex {
    pub left: Element,
    pub right: Element,
    pub vertex: VertexId,
}

const MAX_ROUNDS: usize = 64;
const SEARCH_PATH_CAP: usize = 160;

fn check_real(a: &Element) -> Result<usize, AlgebraError> {
    if !condition_l(a.graph()).holds {
        return Err(AlgebraError::ConditionLFails);
    }
    if a.is_zero() {
        return Err(AlgebraError::ZeroElement);
    }
    if !a.is_real_only() {
        return Err(AlgebraError::WrongSide("real"));
    }
    Ok(a.real_degree().expect("nonzero"))
}

fn certified(a: &Element, left: &Element, right: &Element, degree: usize) -> Option<Element> {
    let result = &(left * a) * right;
    let ok = !result.is_zero() && result.is_real_only() && result.real_degree() < Some(degree);
    ok.then_some(result)
}

/// Finds `left`, `right` with `left·a·right` nonzero, in only real edges and
/// of strictly smaller real degree than `a`.
pub fn shrink_real_once(a: &Element) -> Result<Shrink, AlgebraError> {
    let degree = check_real(a)?;
    if degree == 0 {
        return Err(AlgebraError::DegreeZero);
    }
    let candidates = constructive(a).into_iter().chain(search(a, degree));
    for (left, right) in candidates {
        if let Some(result) = certified(a, &left, &right, degree) {
            return Ok(Shrink { left, right, result });
        }
    }
    Err(AlgebraError::ShrinkFailed)
}

fn constructive(a: &Element) -> Option<(Element, Element)> {
    let alg = a.algebra();
    let g = a.graph();
    let Some((v, _)) = a.vertex_terms().next() else {
        // No vertex terms: every monomial starts with an edge; strip the first.
        let (m, _) = a.terms().next()?;
        let e = *m.real().edges().first()?;
        let right = a
            .terms()
            .map(|(m, _)| m.real().range())
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .map(|w| alg.vertex(w))
            .fold(alg.zero(), |acc, w| &acc + &w);
        return Some((alg.ghost(e), right));
    };

    let vv = alg.vertex(v);
    let mut left = vv.clone();
    let mut right = vv.clone();
    let mut current = &(&vv * a) * &vv;
    if current.real_degree() < a.real_degree() {
        return Some((left, right));
    }
    'rounds: for _ in 0..MAX_ROUNDS {
        if current.real_degree() == Some(0) {
            return Some((left, right));
        }
        // `current` is k·v plus closed paths at v, with k ≠ 0.
        let (m, _) = current.terms().find(|(m, _)| !m.is_vertex())?;
        let c = factor_closed_path(g, m.real()).ok()?.into_iter().next()?;
        let exit = find_exit(g, &c).ok()??;
        let z = c
            .slice(g, 0, exit.position - 1)
            .concat(&g.edge_path(exit.edge))
            .expect("exit leaves from the same vertex");
        let c_ghost = alg.ghost_path(&c);
        let c_real = alg.path(&c);
        let return_degree = current
            .terms()
            .filter(|(m, _)| !m.is_vertex())
            .filter_map(|(m, _)| factor_closed_path(g, m.real()).ok().map(|f| f.len()))
            .max()
            .unwrap_or(0);

        let mut stripped = current.clone();
        let mut ghost_pow = vv.clone();
        let mut real_pow = vv.clone();
        for _ in 0..=return_degree {
            stripped = &c_ghost * &stripped;
            ghost_pow = &c_ghost * &ghost_pow;
            real_pow = &real_pow * &c_real;
            let real_part = real_terms(alg, &stripped);
            if real_part.is_zero() {
                // Conjugating by the power of c leaves a polynomial in c
                // with nonzero constant term and lower return degree.
                left = &ghost_pow * &left;
                right = &right * &real_pow;
                current = &(&ghost_pow * &current) * &real_pow;
                continue 'rounds;
            }
            if real_part.real_degree() == Some(0) {
                // c*·z = 0 kills the ghost powers of c; the constant survives.
                left = &(&alg.ghost_path(&z) * &ghost_pow) * &left;
                right = &right * &alg.path(&z);
                return Some((left, right));
            }
        }
        return None;
    }
    None
}

fn real_terms(alg: &Arc<LeavittAlgebra>, a: &Element) -> Element {
    alg.normalize_terms(
        a.terms()
            .filter(|(m, _)| m.ghost().is_trivial())
            .map(|(m, c)| (m.clone(), c.clone())),
    )
}

/// Paths of length ≤ `max_len`, shortest first, at most `cap` of them.
fn short_paths(g: &Graph, max_len: usize, cap: usize) -> Vec<Path> {
    let mut out: Vec<Path> = g.vertices().map(Path::trivial).collect();
    let mut frontier = out.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for p in &frontier {
            for &e in g.out_edges(p.range()) {
                next.push(p.push_edge(g, e));
                if out.len() + next.len() >= cap {
                    out.extend(next);
                    return out;
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

fn search(a: &Element, degree: usize) -> impl Iterator<Item = (Element, Element)> + '_ {
    let alg = a.algebra().clone();
    let g = a.graph();
    let paths = short_paths(g, g.edge_count() + degree, SEARCH_PATH_CAP);
    let lefts: Vec<Element> = paths.iter().map(|p| alg.ghost_path(p)).collect();
    let rights: Vec<Element> = paths.iter().map(|p| alg.path(p)).collect();
    lefts
        .into_iter()
        .flat_map(move |l| rights.clone().into_iter().map(move |r| (l.clone(), r)))
}

/// Multiplies `a` on both sides down to a single vertex with coefficient 1.
///
/// For `Side::Ghost`, `a` must be in only ghost edges; the real procedure runs
/// on its involution and the multipliers are conjugated back.
pub fn shrink_to_vertex(a: &Element, side: Side) -> Result<ShrinkToVertex, AlgebraError> {
    match side {
        Side::Real => shrink_real_to_vertex(a),
        Side::Ghost => {
            if !a.is_zero() && !a.is_ghost_only() {
                return Err(AlgebraError::WrongSide("ghost"));
            }
            let dual = shrink_real_to_vertex(&a.involution())?;
            let out = ShrinkToVertex {
                left: dual.right.involution(),
                right: dual.left.involution(),
                vertex: dual.vertex,
            };
            certify_vertex(a, &out)?;
            Ok(out)
        }
    }
}

fn shrink_real_to_vertex(a: &Element) -> Result<ShrinkToVertex, AlgebraError> {
    check_real(a)?;
    let alg = a.algebra();
    let mut acc: Option<(Element, Element)> = None;
    let mut current = a.clone();
    while current.real_degree() > Some(0) {
        let step = shrink_real_once(&current)?;
        acc = Some(match acc {
            None => (step.left, step.right),
            Some((l, r)) => (&step.left * &l, &r * &step.right),
        });
        current = step.result;
    }
    let (vertex, k) = current.vertex_terms().next().ok_or(AlgebraError::ShrinkFailed)?;
    let k_inv = k.inv()?;
    let vv = alg.vertex(vertex);
    let (left, right) = match acc {
        None => (vv.scale(&k_inv), vv),
        Some((l, r)) => (l.scale(&k_inv), &r * &vv),
    };
    let out = ShrinkToVertex { left, right, vertex };
    certify_vertex(a, &out)?;
    Ok(out)
}

fn certify_vertex(a: &Element, s: &ShrinkToVertex) -> Result<(), AlgebraError> {
    let got = &(&s.left * a) * &s.right;
    if got.as_vertex() == Some(s.vertex) {
        Ok(())
    } else {
        Err(AlgebraError::ShrinkFailed)
    }
}
