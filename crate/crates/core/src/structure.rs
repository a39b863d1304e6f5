//! Structure theory of `L(E)` read off the graph: the reachability preorder,
//! hereditary and saturated vertex sets, the simplicity decision, the quotient
//! graph by a hereditary saturated set with its homomorphism, and the edge matrix.

use std::collections::{BTreeSet, VecDeque};
use std::sync::Arc;

use crate::algebra::{Element, LeavittAlgebra, Monomial};
use crate::error::StructureError;
use crate::graph::{EdgeId, Graph, Path, VertexId};
use crate::paths::{condition_l, ConditionL};

/// Hard limit for [`enumerate_hs`].
pub const ENUMERATION_LIMIT: usize = 20;

fn check_vertex(g: &Graph, v: VertexId) -> Result<(), StructureError> {
    if v.index() < g.vertex_count() {
        Ok(())
    } else {
        Err(StructureError::UnknownVertex(v.to_string()))
    }
}

/// `v ≤ w` iff `v = w` or there is a path from `v` to `w`.
pub fn leq(g: &Graph, v: VertexId, w: VertexId) -> Result<bool, StructureError> {
    check_vertex(g, v)?;
    check_vertex(g, w)?;
    Ok(reachable(g, [v]).contains(&w))
}

/// Every vertex reachable from `seeds`, including the seeds.
pub fn reachable(g: &Graph, seeds: impl IntoIterator<Item = VertexId>) -> BTreeSet<VertexId> {
    let mut seen: BTreeSet<VertexId> = BTreeSet::new();
    let mut queue: VecDeque<VertexId> = VecDeque::new();
    for s in seeds {
        if seen.insert(s) {
            queue.push_back(s);
        }
    }
    while let Some(v) = queue.pop_front() {
        for &e in g.out_edges(v) {
            let w = g.range(e);
            if seen.insert(w) {
                queue.push_back(w);
            }
        }
    }
    seen
}

/// Closed under moving forward along edges.
pub fn is_hereditary(g: &Graph, set: &BTreeSet<VertexId>) -> bool {
    set.iter()
        .all(|&v| g.out_edges(v).iter().all(|&e| set.contains(&g.range(e))))
}

/// Contains every non-sink whose out-ranges all lie in the set.
pub fn is_saturated(g: &Graph, set: &BTreeSet<VertexId>) -> bool {
    g.vertices().all(|v| {
        set.contains(&v)
            || g.is_sink(v)
            || g.out_edges(v).iter().any(|&e| !set.contains(&g.range(e)))
    })
}

/// A vertex set with its hereditary and saturated flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HSubset {
    vertices: BTreeSet<VertexId>,
    hereditary: bool,
    saturated: bool,
}

impl HSubset {
    pub fn new(g: &Graph, vertices: impl IntoIterator<Item = VertexId>) -> Result<HSubset, StructureError> {
        let vertices: BTreeSet<VertexId> = vertices.into_iter().collect();
        for &v in &vertices {
            check_vertex(g, v)?;
        }
        Ok(HSubset {
            hereditary: is_hereditary(g, &vertices),
            saturated: is_saturated(g, &vertices),
            vertices,
        })
    }

    pub fn from_names(g: &Graph, names: &[&str]) -> Result<HSubset, StructureError> {
        let vs = names
            .iter()
            .map(|n| g.vertex(n).ok_or_else(|| StructureError::UnknownVertex(n.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        HSubset::new(g, vs)
    }

    pub fn vertices(&self) -> &BTreeSet<VertexId> {
        &self.vertices
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_hereditary(&self) -> bool {
        self.hereditary
    }

    pub fn is_saturated(&self) -> bool {
        self.saturated
    }

    pub fn names(&self, g: &Graph) -> Vec<String> {
        g.vertex_names(self.vertices.iter().copied())
    }
}

/// Smallest hereditary and saturated set containing `seed`.
pub fn hs_closure(g: &Graph, seed: impl IntoIterator<Item = VertexId>) -> Result<HSubset, StructureError> {
    let seed: Vec<VertexId> = seed.into_iter().collect();
    for &v in &seed {
        check_vertex(g, v)?;
    }
    let mut set = reachable(g, seed);
    loop {
        let saturate: Vec<VertexId> = g
            .vertices()
            .filter(|v| {
                !set.contains(v)
                    && !g.is_sink(*v)
                    && g.out_edges(*v).iter().all(|&e| set.contains(&g.range(e)))
            })
            .collect();
        if saturate.is_empty() {
            break;
        }
        // Saturation can only add vertices whose successors are already in
        // the set, so the set stays hereditary.
        set.extend(saturate);
    }
    debug_assert!(is_hereditary(g, &set) && is_saturated(g, &set));
    Ok(HSubset {
        vertices: set,
        hereditary: true,
        saturated: true,
    })
}

/// All hereditary and saturated subsets, by size and then lexicographically.
pub fn enumerate_hs(g: &Graph) -> Result<Vec<HSubset>, StructureError> {
    let n = g.vertex_count();
    if n > ENUMERATION_LIMIT {
        return Err(StructureError::TooManyVertices {
            limit: ENUMERATION_LIMIT,
            actual: n,
        });
    }
    let out_mask: Vec<u32> = g
        .vertices()
        .map(|v| g.out_edges(v).iter().fold(0u32, |m, &e| m | 1 << g.range(e).index()))
        .collect();
    let mut found: Vec<BTreeSet<VertexId>> = Vec::new();
    for mask in 0u32..(1u32 << n) {
        let ok = (0..n).all(|i| {
            let inside = mask >> i & 1 == 1;
            let closed = out_mask[i] & !mask == 0;
            if inside {
                closed
            } else {
                out_mask[i] == 0 || !closed
            }
        });
        if ok {
            found.push((0..n).filter(|i| mask >> i & 1 == 1).map(|i| VertexId(i as u32)).collect());
        }
    }
    found.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(found
        .into_iter()
        .map(|vertices| HSubset {
            vertices,
            hereditary: true,
            saturated: true,
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionI {
    pub holds: bool,
    pub witness: Option<HSubset>,
}

/// The only hereditary saturated subsets are `∅` and `E⁰`.
///
/// Any nonempty hereditary saturated set contains the closure of one of its
/// vertices, so it suffices to check that every singleton closes to `E⁰`.
pub fn condition_i(g: &Graph) -> ConditionI {
    let witness = g.vertices().find_map(|v| {
        let h = hs_closure(g, [v]).expect("vertex exists");
        (h.len() < g.vertex_count()).then_some(h)
    });
    ConditionI {
        holds: witness.is_none(),
        witness,
    }
}

/// Simplicity of `L(E)` with the witnesses that refute it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicityVerdict {
    pub simple: bool,
    pub condition_l: ConditionL,
    pub condition_i: ConditionI,
    /// `v + p` for the exitless cycle `p` based at `v`.
    pub witness_element: Option<Element>,
}

/// Decides simplicity: `L(E)` is simple iff every cycle has an exit and the
/// only hereditary saturated subsets are trivial.
///
/// For an exitless cycle `p` at `v` the engine confirms `p·p* = v = p*·p`.
pub fn is_simple(alg: &Arc<LeavittAlgebra>) -> SimplicityVerdict {
    let g = alg.graph();
    let cond_l = condition_l(g);
    let cond_i = condition_i(g);
    let witness_element = cond_l.witness.as_ref().map(|c| {
        let v = alg.vertex(c.base());
        let p = alg.path(c.path());
        let p_star = alg.ghost_path(c.path());
        assert_eq!(&p * &p_star, v, "exitless cycle must satisfy p p* = v");
        assert_eq!(&p_star * &p, v, "p* p = v");
        &v + &p
    });
    SimplicityVerdict {
        simple: cond_l.holds && cond_i.holds,
        condition_l: cond_l,
        condition_i: cond_i,
        witness_element,
    }
}

fn check_quotient_subset(g: &Graph, h: &HSubset) -> Result<(), StructureError> {
    if h.is_empty() || h.len() == g.vertex_count() {
        return Err(StructureError::TrivialSubset);
    }
    if !is_hereditary(g, h.vertices()) {
        return Err(StructureError::NotHereditary);
    }
    if !is_saturated(g, h.vertices()) {
        return Err(StructureError::NotSaturated);
    }
    Ok(())
}

/// The graph on `E⁰ − H` keeping the edges whose range avoids `H`.
pub fn quotient_graph(g: &Graph, h: &HSubset) -> Result<Graph, StructureError> {
    check_quotient_subset(g, h)?;
    let vertices: Vec<&str> = g
        .vertices()
        .filter(|v| !h.contains(*v))
        .map(|v| g.vertex_name(v))
        .collect();
    let edges: Vec<(&str, &str, &str)> = g
        .edges()
        .filter(|&e| !h.contains(g.range(e)))
        .map(|e| {
            // Hereditary H: s(e) ∈ H would force r(e) ∈ H.
            assert!(!h.contains(g.source(e)), "quotient edge source lies in H");
            (g.edge_name(e), g.vertex_name(g.source(e)), g.vertex_name(g.range(e)))
        })
        .collect();
    Ok(Graph::new(vertices, edges).expect("subgraph of a valid graph"))
}

/// The homomorphism `Ψ: L(E) → L(F)` onto the quotient graph `F`, which kills
/// the vertices of `H` and the edges landing in `H`.
#[derive(Debug)]
pub struct QuotientMap {
    source: Arc<LeavittAlgebra>,
    target: Arc<LeavittAlgebra>,
    vertex_map: Vec<Option<VertexId>>,
    edge_map: Vec<Option<EdgeId>>,
}

impl QuotientMap {
    pub fn new(source: &Arc<LeavittAlgebra>, h: &HSubset) -> Result<QuotientMap, StructureError> {
        let g = source.graph();
        let f = quotient_graph(g, h)?;
        let vertex_map = g.vertices().map(|v| f.vertex(g.vertex_name(v))).collect();
        let edge_map = g.edges().map(|e| f.edge(g.edge_name(e))).collect();
        Ok(QuotientMap {
            source: source.clone(),
            target: LeavittAlgebra::new(f, source.field()),
            vertex_map,
            edge_map,
        })
    }

    pub fn target(&self) -> &Arc<LeavittAlgebra> {
        &self.target
    }

    fn map_path(&self, p: &Path) -> Option<Path> {
        if p.is_trivial() {
            return self.vertex_map[p.source().index()].map(Path::trivial);
        }
        let edges = p
            .edges()
            .iter()
            .map(|e| self.edge_map[e.index()])
            .collect::<Option<Vec<_>>>()?;
        Some(self.target.graph().path(&edges).expect("image of a path is a path"))
    }

    pub fn apply(&self, a: &Element) -> Result<Element, StructureError> {
        if **a.algebra() != *self.source {
            return Err(crate::error::AlgebraError::Mismatch.into());
        }
        let images = a.terms().filter_map(|(m, c)| {
            let real = self.map_path(m.real())?;
            let ghost = self.map_path(m.ghost())?;
            Some((Monomial::new(real, ghost).expect("ranges are preserved"), c.clone()))
        });
        // γ(v) may have been removed from F, so the images need renormalizing.
        Ok(self.target.normalize_terms(images))
    }
}

/// `Ψ(a)` for the quotient by `h`.
pub fn psi(h: &HSubset, a: &Element) -> Result<Element, StructureError> {
    QuotientMap::new(a.algebra(), h)?.apply(a)
}

/// `A_E`: `a_ij = 1` iff `r(e_i) = s(e_j)`, edges in id order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeMatrix {
    entries: Vec<Vec<u8>>,
}

impl EdgeMatrix {
    pub fn order(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.entries
    }

    pub fn has_zero_row(&self) -> bool {
        self.entries.iter().any(|r| r.iter().all(|&x| x == 0))
    }

    pub fn has_zero_column(&self) -> bool {
        (0..self.order()).any(|j| self.entries.iter().all(|r| r[j] == 0))
    }

    /// Exactly one 1 in every row and every column.
    pub fn is_permutation(&self) -> bool {
        let n = self.order();
        let rows_ok = self.entries.iter().all(|r| r.iter().filter(|&&x| x == 1).count() == 1);
        let cols_ok = (0..n).all(|j| self.entries.iter().filter(|r| r[j] == 1).count() == 1);
        rows_ok && cols_ok
    }
}

pub fn edge_matrix(g: &Graph) -> Result<EdgeMatrix, StructureError> {
    if g.edge_count() == 0 {
        return Err(StructureError::NoEdges);
    }
    let entries = g
        .edges()
        .map(|ei| g.edges().map(|ej| u8::from(g.range(ei) == g.source(ej))).collect())
        .collect();
    Ok(EdgeMatrix { entries })
}
