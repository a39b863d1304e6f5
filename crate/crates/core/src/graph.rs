//! Finite directed graphs and paths.
//!
//! Vertices and edges are stored sorted by identifier, so the index handles
//! [`VertexId`] and [`EdgeId`] order exactly like their string ids. Every
//! canonical ordering in the crate relies on this.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;

/// Index of a vertex in a [`Graph`]. Ordered like the vertex identifiers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

/// Index of an edge in a [`Graph`]. Ordered like the edge identifiers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub u32);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl EdgeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct EdgeData {
    name: String,
    src: VertexId,
    rng: VertexId,
}

/// A finite directed graph `E = (E⁰, E¹, r, s)`. Parallel edges and loops are allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertex_names: Vec<String>,
    edges: Vec<EdgeData>,
    out_index: Vec<Vec<EdgeId>>,
    in_index: Vec<Vec<EdgeId>>,
    vertex_lookup: BTreeMap<String, VertexId>,
    edge_lookup: BTreeMap<String, EdgeId>,
}

/// On-disk graph format.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphFile {
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeRecord>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EdgeRecord {
    pub id: String,
    pub src: String,
    pub rng: String,
}

pub(crate) fn is_valid_ident(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Graph {
    /// Builds a graph from vertex ids and `(edge id, source, range)` triples.
    pub fn new<V, E, S>(vertices: V, edges: E) -> Result<Graph, GraphError>
    where
        V: IntoIterator<Item = S>,
        E: IntoIterator<Item = (S, S, S)>,
        S: Into<String>,
    {
        let file = GraphFile {
            vertices: vertices.into_iter().map(Into::into).collect(),
            edges: edges
                .into_iter()
                .map(|(id, src, rng)| EdgeRecord {
                    id: id.into(),
                    src: src.into(),
                    rng: rng.into(),
                })
                .collect(),
        };
        Graph::from_file(&file)
    }

    /// Parses and validates the JSON graph format.
    pub fn from_json(text: &str) -> Result<Graph, GraphError> {
        let file: GraphFile =
            serde_json::from_str(text).map_err(|e| GraphError::Parse(e.to_string()))?;
        Graph::from_file(&file)
    }

    pub fn from_file(file: &GraphFile) -> Result<Graph, GraphError> {
        let mut vertex_set = BTreeSet::new();
        for v in &file.vertices {
            if !is_valid_ident(v) {
                return Err(GraphError::InvalidId(v.clone()));
            }
            if !vertex_set.insert(v.clone()) {
                return Err(GraphError::DuplicateId(v.clone()));
            }
        }
        let mut edge_map: BTreeMap<String, (String, String)> = BTreeMap::new();
        for e in &file.edges {
            if !is_valid_ident(&e.id) {
                return Err(GraphError::InvalidId(e.id.clone()));
            }
            if vertex_set.contains(&e.id) || edge_map.contains_key(&e.id) {
                return Err(GraphError::DuplicateId(e.id.clone()));
            }
            for end in [&e.src, &e.rng] {
                if !vertex_set.contains(end) {
                    return Err(GraphError::DanglingEndpoint {
                        edge: e.id.clone(),
                        vertex: end.clone(),
                    });
                }
            }
            edge_map.insert(e.id.clone(), (e.src.clone(), e.rng.clone()));
        }

        let vertex_names: Vec<String> = vertex_set.into_iter().collect();
        let vertex_lookup: BTreeMap<String, VertexId> = vertex_names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), VertexId(i as u32)))
            .collect();
        let mut edges = Vec::with_capacity(edge_map.len());
        let mut edge_lookup = BTreeMap::new();
        let mut out_index = vec![Vec::new(); vertex_names.len()];
        let mut in_index = vec![Vec::new(); vertex_names.len()];
        for (i, (name, (src, rng))) in edge_map.into_iter().enumerate() {
            let id = EdgeId(i as u32);
            let src = vertex_lookup[&src];
            let rng = vertex_lookup[&rng];
            out_index[src.index()].push(id);
            in_index[rng.index()].push(id);
            edge_lookup.insert(name.clone(), id);
            edges.push(EdgeData { name, src, rng });
        }
        Ok(Graph {
            vertex_names,
            edges,
            out_index,
            in_index,
            vertex_lookup,
            edge_lookup,
        })
    }

    pub fn to_file(&self) -> GraphFile {
        GraphFile {
            vertices: self.vertex_names.clone(),
            edges: self
                .edges
                .iter()
                .map(|e| EdgeRecord {
                    id: e.name.clone(),
                    src: self.vertex_name(e.src).to_string(),
                    rng: self.vertex_name(e.rng).to_string(),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("graph file serializes")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl ExactSizeIterator<Item = VertexId> + '_ {
        (0..self.vertex_names.len() as u32).map(VertexId)
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = EdgeId> + '_ {
        (0..self.edges.len() as u32).map(EdgeId)
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertex_names[v.index()]
    }

    pub fn edge_name(&self, e: EdgeId) -> &str {
        &self.edges[e.index()].name
    }

    pub fn vertex(&self, name: &str) -> Option<VertexId> {
        self.vertex_lookup.get(name).copied()
    }

    pub fn edge(&self, name: &str) -> Option<EdgeId> {
        self.edge_lookup.get(name).copied()
    }

    pub fn source(&self, e: EdgeId) -> VertexId {
        self.edges[e.index()].src
    }

    pub fn range(&self, e: EdgeId) -> VertexId {
        self.edges[e.index()].rng
    }

    /// Edges emitted by `v`, in id order.
    pub fn out_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.out_index[v.index()]
    }

    /// Edges received by `v`, in id order.
    pub fn in_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.in_index[v.index()]
    }

    pub fn is_sink(&self, v: VertexId) -> bool {
        self.out_index[v.index()].is_empty()
    }

    pub fn is_source(&self, v: VertexId) -> bool {
        self.in_index[v.index()].is_empty()
    }

    pub fn sinks(&self) -> Vec<VertexId> {
        self.vertices().filter(|&v| self.is_sink(v)).collect()
    }

    pub fn sources(&self) -> Vec<VertexId> {
        self.vertices().filter(|&v| self.is_source(v)).collect()
    }

    /// Checks composability and builds a path from a nonempty edge list.
    pub fn path(&self, edges: &[EdgeId]) -> Result<Path, GraphError> {
        let (first, rest) = edges.split_first().ok_or(GraphError::EmptyPath)?;
        let mut range = self.range(*first);
        for &e in rest {
            if self.source(e) != range {
                return Err(GraphError::NotComposable(self.edge_name(e).to_string()));
            }
            range = self.range(e);
        }
        Ok(Path {
            edges: edges.to_vec(),
            source: self.source(*first),
            range,
        })
    }

    /// Builds a path from edge ids, e.g. `["e1", "e2"]`.
    pub fn path_by_names(&self, names: &[&str]) -> Result<Path, GraphError> {
        let ids = names
            .iter()
            .map(|n| self.edge(n).ok_or_else(|| GraphError::UnknownId(n.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        self.path(&ids)
    }

    pub fn edge_path(&self, e: EdgeId) -> Path {
        Path {
            edges: vec![e],
            source: self.source(e),
            range: self.range(e),
        }
    }

    pub fn format_path(&self, p: &Path) -> String {
        if p.is_trivial() {
            self.vertex_name(p.source).to_string()
        } else {
            p.edges
                .iter()
                .map(|&e| self.edge_name(e))
                .collect::<Vec<_>>()
                .join(".")
        }
    }

    pub fn vertex_names(&self, vs: impl IntoIterator<Item = VertexId>) -> Vec<String> {
        vs.into_iter().map(|v| self.vertex_name(v).to_string()).collect()
    }
}

/// A path in a graph: a composable edge sequence, or the trivial path at a vertex.
///
/// The derived order compares edge sequences first, which is the
/// lexicographic order on edge ids.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    edges: Vec<EdgeId>,
    source: VertexId,
    range: VertexId,
}

#[allow(clippy::len_without_is_empty)]
impl Path {
    pub fn trivial(v: VertexId) -> Path {
        Path {
            edges: Vec::new(),
            source: v,
            range: v,
        }
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn range(&self) -> VertexId {
        self.range
    }

    pub fn is_closed(&self) -> bool {
        !self.is_trivial() && self.source == self.range
    }

    pub fn last(&self) -> Option<EdgeId> {
        self.edges.last().copied()
    }

    /// `self · other` when `r(self) = s(other)`.
    pub fn concat(&self, other: &Path) -> Option<Path> {
        if self.range != other.source {
            return None;
        }
        let mut edges = self.edges.clone();
        edges.extend_from_slice(&other.edges);
        Some(Path {
            edges,
            source: self.source,
            range: other.range,
        })
    }

    /// If `self = prefix · u`, returns `u`.
    pub fn strip_prefix(&self, prefix: &Path) -> Option<Path> {
        if self.source != prefix.source || !self.edges.starts_with(&prefix.edges) {
            return None;
        }
        Some(Path {
            edges: self.edges[prefix.len()..].to_vec(),
            source: prefix.range,
            range: self.range,
        })
    }

    /// The path with its last edge removed, given the graph to recover the new range.
    pub fn without_last(&self, g: &Graph) -> Option<Path> {
        let last = self.last()?;
        Some(Path {
            edges: self.edges[..self.len() - 1].to_vec(),
            source: self.source,
            range: g.source(last),
        })
    }

    /// `self · e`, assuming `r(self) = s(e)`.
    pub(crate) fn push_edge(&self, g: &Graph, e: EdgeId) -> Path {
        debug_assert_eq!(self.range, g.source(e));
        let mut edges = self.edges.clone();
        edges.push(e);
        Path {
            edges,
            source: self.source,
            range: g.range(e),
        }
    }

    /// The sub-path `edges[from..to]`.
    pub fn slice(&self, g: &Graph, from: usize, to: usize) -> Path {
        assert!(from <= to && to <= self.len());
        if from == to {
            let v = if from == 0 {
                self.source
            } else {
                g.range(self.edges[from - 1])
            };
            return Path::trivial(v);
        }
        Path {
            edges: self.edges[from..to].to_vec(),
            source: g.source(self.edges[from]),
            range: g.range(self.edges[to - 1]),
        }
    }

    /// Source vertex of each edge, in order.
    pub fn edge_sources<'a>(&'a self, g: &'a Graph) -> impl Iterator<Item = VertexId> + 'a {
        self.edges.iter().map(move |&e| g.source(e))
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Standard small graphs used throughout tests and examples.
pub mod named {
    use super::Graph;

    /// `v1 → v2 → … → vn` with edges `e1 … e(n-1)`.
    pub fn line(n: usize) -> Graph {
        assert!(n >= 1);
        let vertices: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
        let edges: Vec<(String, String, String)> = (1..n)
            .map(|i| (format!("e{i}"), format!("v{i}"), format!("v{}", i + 1)))
            .collect();
        Graph::new(vertices, edges).expect("line graph is well formed")
    }

    /// One vertex `v` with a loop `x`.
    pub fn lp() -> Graph {
        Graph::new(["v"], [("x", "v", "v")]).expect("loop graph is well formed")
    }

    /// One vertex `v` with loops `y1 … yn`.
    pub fn rose(n: usize) -> Graph {
        let edges: Vec<(String, String, String)> = (1..=n)
            .map(|i| (format!("y{i}"), "v".to_string(), "v".to_string()))
            .collect();
        Graph::new(vec!["v".to_string()], edges).expect("rose graph is well formed")
    }

    /// A single directed cycle `v1 → v2 → … → vn → v1` with edges `e1 … en`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 1);
        let vertices: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
        let edges: Vec<(String, String, String)> = (1..=n)
            .map(|i| (format!("e{i}"), format!("v{i}"), format!("v{}", i % n + 1)))
            .collect();
        Graph::new(vertices, edges).expect("cycle graph is well formed")
    }

    /// `v1` with a loop `e2` and an edge `e1: v1 → v2`.
    pub fn flag() -> Graph {
        Graph::new(["v1", "v2"], [("e1", "v1", "v2"), ("e2", "v1", "v1")])
            .expect("flag graph is well formed")
    }

    pub fn single_vertex() -> Graph {
        Graph::new(["v"], Vec::<(&str, &str, &str)>::new()).expect("single vertex graph")
    }
}
