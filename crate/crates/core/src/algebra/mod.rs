//! The Leavitt path algebra `L(E)` over an exact field.
//!
//! Elements are finite linear combinations of monomials `p·q*` with
//! `r(p) = r(q)`. CK1 is applied while multiplying. CK2 is oriented as a
//! rewrite rule: every non-sink `v` has a special edge `γ(v)` (its smallest
//! out-edge) and any monomial `p₁γ·(q₁γ)*` is replaced by
//! `p₁q₁* − Σ_{e ≠ γ, s(e) = v} p₁e·(q₁e)*`. Monomials with no such junction
//! are canonical, so two elements are equal iff their term maps are equal.

mod element;
mod shrink;

pub use element::{local_unit, Element, GradedDecomposition};
pub use shrink::{shrink_real_once, shrink_to_vertex, Shrink, ShrinkToVertex, Side};

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::AlgebraError;
use crate::graph::{EdgeId, Graph, Path, VertexId};
use crate::scalar::{Field, Scalar};

/// A spanning monomial `p·q*` with `r(p) = r(q)`.
///
/// Ordered by total length `|p| + |q|`, then `p`, then `q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    real: Path,
    ghost: Path,
}

impl Monomial {
    pub fn new(real: Path, ghost: Path) -> Result<Monomial, AlgebraError> {
        if real.range() != ghost.range() {
            return Err(AlgebraError::RangeMismatch);
        }
        Ok(Monomial { real, ghost })
    }

    pub fn vertex(v: VertexId) -> Monomial {
        Monomial {
            real: Path::trivial(v),
            ghost: Path::trivial(v),
        }
    }

    pub fn real(&self) -> &Path {
        &self.real
    }

    pub fn ghost(&self) -> &Path {
        &self.ghost
    }

    /// `s(p)`: the monomial is fixed by left multiplication with this vertex.
    pub fn left_vertex(&self) -> VertexId {
        self.real.source()
    }

    /// `s(q)`: the monomial is fixed by right multiplication with this vertex.
    pub fn right_vertex(&self) -> VertexId {
        self.ghost.source()
    }

    pub fn is_vertex(&self) -> bool {
        self.real.is_trivial() && self.ghost.is_trivial()
    }

    /// `|p| − |q|`.
    pub fn degree(&self) -> i64 {
        self.real.len() as i64 - self.ghost.len() as i64
    }

    pub fn total_len(&self) -> usize {
        self.real.len() + self.ghost.len()
    }

    pub fn adjoint(&self) -> Monomial {
        Monomial {
            real: self.ghost.clone(),
            ghost: self.real.clone(),
        }
    }

    /// Product of two monomials under CK1 and the path-algebra relations.
    ///
    /// `(p q*)(s t*)` is `(p u) t*` when `s = q u`, `p (t u)*` when `q = s u`,
    /// and zero otherwise.
    pub fn mul(&self, rhs: &Monomial) -> Option<Monomial> {
        if let Some(u) = rhs.real.strip_prefix(&self.ghost) {
            let real = self.real.concat(&u).expect("r(p) = r(q) = s(u)");
            return Some(Monomial {
                real,
                ghost: rhs.ghost.clone(),
            });
        }
        if let Some(u) = self.ghost.strip_prefix(&rhs.real) {
            let ghost = rhs.ghost.concat(&u).expect("r(t) = r(s) = s(u)");
            return Some(Monomial {
                real: self.real.clone(),
                ghost,
            });
        }
        None
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_len()
            .cmp(&other.total_len())
            .then_with(|| self.real.cmp(&other.real))
            .then_with(|| self.ghost.cmp(&other.ghost))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorKind {
    Vertex,
    Edge,
    GhostEdge,
}

/// `L(E)` for a fixed graph and field. Elements hold an `Arc` to their algebra.
#[derive(Debug)]
pub struct LeavittAlgebra {
    graph: Arc<Graph>,
    field: Field,
    special: Vec<Option<EdgeId>>,
}

impl PartialEq for LeavittAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && (Arc::ptr_eq(&self.graph, &other.graph) || self.graph == other.graph)
    }
}

impl Eq for LeavittAlgebra {}

impl LeavittAlgebra {
    pub fn new(graph: impl Into<Arc<Graph>>, field: Field) -> Arc<LeavittAlgebra> {
        let graph = graph.into();
        let special = graph
            .vertices()
            .map(|v| graph.out_edges(v).first().copied())
            .collect();
        Arc::new(LeavittAlgebra {
            graph,
            field,
            special,
        })
    }

    pub fn graph(&self) -> &Arc<Graph> {
        &self.graph
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// The edge `γ(v)` whose junctions are rewritten away; `None` for sinks.
    pub fn special_edge(&self, v: VertexId) -> Option<EdgeId> {
        self.special[v.index()]
    }

    /// Whether the monomial contains a special-edge junction.
    pub fn is_reducible(&self, m: &Monomial) -> bool {
        match (m.real.last(), m.ghost.last()) {
            (Some(a), Some(b)) => a == b && self.special_edge(self.graph.source(a)) == Some(a),
            _ => false,
        }
    }

    pub fn zero(self: &Arc<Self>) -> Element {
        Element::from_terms(self.clone(), BTreeMap::new())
    }

    /// `Σ v` over all vertices: the unit of `L(E)` for a finite graph.
    pub fn one(self: &Arc<Self>) -> Element {
        let terms = self
            .graph
            .vertices()
            .map(|v| (Monomial::vertex(v), self.field.one()))
            .collect();
        Element::from_terms(self.clone(), terms)
    }

    pub fn scalar(self: &Arc<Self>, k: Scalar) -> Element {
        self.one().scale(&k)
    }

    pub fn vertex(self: &Arc<Self>, v: VertexId) -> Element {
        self.monomial_unchecked(Monomial::vertex(v))
    }

    pub fn edge(self: &Arc<Self>, e: EdgeId) -> Element {
        self.path(&self.graph.edge_path(e))
    }

    pub fn ghost(self: &Arc<Self>, e: EdgeId) -> Element {
        self.ghost_path(&self.graph.edge_path(e))
    }

    /// The real path `p` as the monomial `p·r(p)*`.
    pub fn path(self: &Arc<Self>, p: &Path) -> Element {
        self.monomial_unchecked(Monomial {
            real: p.clone(),
            ghost: Path::trivial(p.range()),
        })
    }

    /// The ghost path `q*` as the monomial `r(q)·q*`.
    pub fn ghost_path(self: &Arc<Self>, q: &Path) -> Element {
        self.monomial_unchecked(Monomial {
            real: Path::trivial(q.range()),
            ghost: q.clone(),
        })
    }

    /// The element `p·q*`, normalized.
    pub fn monomial(self: &Arc<Self>, p: &Path, q: &Path) -> Result<Element, AlgebraError> {
        let m = Monomial::new(p.clone(), q.clone())?;
        Ok(self.monomial_unchecked(m))
    }

    fn monomial_unchecked(self: &Arc<Self>, m: Monomial) -> Element {
        self.normalize_terms(std::iter::once((m, self.field.one())))
    }

    pub fn generator(self: &Arc<Self>, kind: GeneratorKind, id: &str) -> Result<Element, AlgebraError> {
        let unknown = |kind| AlgebraError::UnknownGenerator {
            kind,
            id: id.to_string(),
        };
        match kind {
            GeneratorKind::Vertex => self.graph.vertex(id).map(|v| self.vertex(v)).ok_or(unknown("vertex")),
            GeneratorKind::Edge => self.graph.edge(id).map(|e| self.edge(e)).ok_or(unknown("edge")),
            GeneratorKind::GhostEdge => self.graph.edge(id).map(|e| self.ghost(e)).ok_or(unknown("edge")),
        }
    }

    /// Brings a formal sum of spanning monomials into canonical form.
    pub fn normalize<I>(self: &Arc<Self>, raw: I) -> Result<Element, AlgebraError>
    where
        I: IntoIterator<Item = (Path, Path, Scalar)>,
    {
        let mut terms = Vec::new();
        for (p, q, c) in raw {
            if c.field() != self.field {
                return Err(AlgebraError::Mismatch);
            }
            terms.push((Monomial::new(p, q)?, c));
        }
        Ok(self.normalize_terms(terms))
    }

    pub(crate) fn normalize_terms<I>(self: &Arc<Self>, raw: I) -> Element
    where
        I: IntoIterator<Item = (Monomial, Scalar)>,
    {
        let g = &*self.graph;
        let mut acc: BTreeMap<Monomial, Scalar> = BTreeMap::new();
        let mut add = |m: Monomial, c: Scalar| match acc.get_mut(&m) {
            Some(x) => *x = &*x + &c,
            None => {
                acc.insert(m, c);
            }
        };
        for (mut m, c) in raw {
            if c.is_zero() {
                continue;
            }
            // Each rewrite shortens the reducible monomial by one edge on each
            // side; the sibling terms it emits end in a non-special edge.
            while self.is_reducible(&m) {
                let gamma = m.real.last().expect("reducible monomials are nontrivial");
                let p1 = m.real.without_last(g).expect("nontrivial");
                let q1 = m.ghost.without_last(g).expect("nontrivial");
                let neg = -&c;
                for &e in g.out_edges(g.source(gamma)) {
                    if e != gamma {
                        add(
                            Monomial {
                                real: p1.push_edge(g, e),
                                ghost: q1.push_edge(g, e),
                            },
                            neg.clone(),
                        );
                    }
                }
                m = Monomial { real: p1, ghost: q1 };
            }
            add(m, c);
        }
        acc.retain(|_, c| !c.is_zero());
        Element::from_terms(self.clone(), acc)
    }
}
