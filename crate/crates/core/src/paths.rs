//! Path analysis on a graph: exits, closed simple paths, factorization of
//! closed paths and cycle detection.

use crate::error::GraphError;
use crate::graph::{EdgeId, Graph, Path, VertexId};

/// A cycle: a closed path of length ≥ 1 whose edges have pairwise distinct sources.
///
/// Cycles produced by this module start at their smallest vertex.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cycle(Path);

impl Cycle {
    pub fn new(g: &Graph, path: Path) -> Option<Cycle> {
        if !path.is_closed() {
            return None;
        }
        let mut seen = vec![false; g.vertex_count()];
        for v in path.edge_sources(g) {
            if std::mem::replace(&mut seen[v.index()], true) {
                return None;
            }
        }
        Some(Cycle(path))
    }

    pub fn path(&self) -> &Path {
        &self.0
    }

    pub fn into_path(self) -> Path {
        self.0
    }

    pub fn base(&self) -> VertexId {
        self.0.source()
    }

    /// Rotates the cycle to begin at its smallest vertex.
    fn canonical(g: &Graph, path: &Path) -> Path {
        let edges = path.edges();
        let start = (0..edges.len())
            .min_by_key(|&i| g.source(edges[i]))
            .expect("cycle is nonempty");
        let rotated: Vec<EdgeId> = edges[start..].iter().chain(&edges[..start]).copied().collect();
        g.path(&rotated).expect("rotation of a closed path is a path")
    }
}

/// An exit of a path: an edge leaving the source of the `position`-th edge
/// (1-based) that is different from that edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Exit {
    pub position: usize,
    pub edge: EdgeId,
}

/// Smallest position with an exit, and the smallest exit edge there.
pub fn find_exit(g: &Graph, path: &Path) -> Result<Option<Exit>, GraphError> {
    if path.is_trivial() {
        return Err(GraphError::EmptyPath);
    }
    for (i, &mu) in path.edges().iter().enumerate() {
        if let Some(&e) = g.out_edges(g.source(mu)).iter().find(|&&e| e != mu) {
            return Ok(Some(Exit {
                position: i + 1,
                edge: e,
            }));
        }
    }
    Ok(None)
}

/// Finds a cycle without an exit, in time linear in the size of the graph.
///
/// A cycle has no exit exactly when every vertex on it emits a single edge,
/// so such cycles are the cycles of the partial function sending each
/// out-degree-1 vertex along its unique edge. When several exist, the one
/// through the smallest vertex is returned.
pub fn exitless_cycle(g: &Graph) -> Option<Cycle> {
    const UNSEEN: u8 = 0;
    const ON_WALK: u8 = 1;
    const DONE: u8 = 2;

    let next = |v: VertexId| match g.out_edges(v) {
        [e] => Some(*e),
        _ => None,
    };
    let mut state = vec![UNSEEN; g.vertex_count()];
    let mut best: Option<Path> = None;
    for start in g.vertices() {
        let mut walk: Vec<EdgeId> = Vec::new();
        let mut v = start;
        while state[v.index()] == UNSEEN {
            state[v.index()] = ON_WALK;
            match next(v) {
                Some(e) => {
                    walk.push(e);
                    v = g.range(e);
                }
                None => break,
            }
        }
        if state[v.index()] == ON_WALK && !walk.is_empty() && next(v).is_some() {
            // `v` was reached again during this walk: the tail from v is a cycle.
            if let Some(at) = walk.iter().position(|&e| g.source(e) == v) {
                let path = g.path(&walk[at..]).expect("walk is composable");
                let path = Cycle::canonical(g, &path);
                if best.as_ref().is_none_or(|b| path.source() < b.source()) {
                    best = Some(path);
                }
            }
        }
        for &e in &walk {
            state[g.source(e).index()] = DONE;
        }
        state[v.index()] = DONE;
    }
    best.map(Cycle)
}

fn check_vertex(g: &Graph, v: VertexId) -> Result<(), GraphError> {
    if v.index() < g.vertex_count() {
        Ok(())
    } else {
        Err(GraphError::UnknownId(v.to_string()))
    }
}

/// Closed simple paths based at `v` of length at most `max_len`, ordered by
/// length and then lexicographically.
///
/// A closed simple path never passes through `v` internally but may revisit
/// other vertices, so the set can be infinite and the bound is mandatory.
pub fn enumerate_csp(g: &Graph, v: VertexId, max_len: usize) -> Result<Vec<Path>, GraphError> {
    check_vertex(g, v)?;
    let mut out = Vec::new();
    let mut stack: Vec<EdgeId> = Vec::new();
    fn dfs(
        g: &Graph,
        base: VertexId,
        at: VertexId,
        max_len: usize,
        stack: &mut Vec<EdgeId>,
        out: &mut Vec<Path>,
    ) {
        for &e in g.out_edges(at) {
            stack.push(e);
            if g.range(e) == base {
                out.push(g.path(stack).expect("dfs builds composable paths"));
            } else if stack.len() < max_len {
                dfs(g, base, g.range(e), max_len, stack, out);
            }
            stack.pop();
        }
    }
    if max_len > 0 {
        dfs(g, v, v, max_len, &mut stack, &mut out);
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.edges().cmp(b.edges())));
    Ok(out)
}

/// Splits a closed path based at `v` into its closed simple factors, cutting
/// after every edge that lands on `v`.
pub fn factor_closed_path(g: &Graph, p: &Path) -> Result<Vec<Path>, GraphError> {
    if !p.is_closed() {
        return Err(GraphError::NotClosed);
    }
    let v = p.source();
    let mut factors = Vec::new();
    let mut start = 0;
    for (i, &e) in p.edges().iter().enumerate() {
        if g.range(e) == v {
            factors.push(p.slice(g, start, i + 1));
            start = i + 1;
        }
    }
    Ok(factors)
}

/// Number of closed simple factors of a closed path.
pub fn return_degree(g: &Graph, p: &Path) -> Result<usize, GraphError> {
    factor_closed_path(g, p).map(|f| f.len())
}

/// Whether `p` is a closed simple path based at `v`.
pub fn is_csp(g: &Graph, p: &Path, v: VertexId) -> bool {
    p.is_closed() && p.source() == v && p.edge_sources(g).skip(1).all(|w| w != v)
}

/// Every cycle of the graph up to rotation, each starting at its smallest vertex.
///
/// Exponential in general; used as a reference oracle on small graphs.
pub fn simple_cycles(g: &Graph) -> Vec<Cycle> {
    fn dfs(
        g: &Graph,
        start: VertexId,
        at: VertexId,
        on_path: &mut [bool],
        stack: &mut Vec<EdgeId>,
        out: &mut Vec<Cycle>,
    ) {
        for &e in g.out_edges(at) {
            let w = g.range(e);
            stack.push(e);
            if w == start {
                out.push(Cycle(g.path(stack).expect("dfs builds composable paths")));
            } else if w > start && !on_path[w.index()] {
                on_path[w.index()] = true;
                dfs(g, start, w, on_path, stack, out);
                on_path[w.index()] = false;
            }
            stack.pop();
        }
    }
    let mut out = Vec::new();
    let mut on_path = vec![false; g.vertex_count()];
    for s in g.vertices() {
        on_path[s.index()] = true;
        dfs(g, s, s, &mut on_path, &mut Vec::new(), &mut out);
        on_path[s.index()] = false;
    }
    out.sort();
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionL {
    pub holds: bool,
    pub witness: Option<Cycle>,
}

/// Condition (L): every cycle has an exit.
pub fn condition_l(g: &Graph) -> ConditionL {
    let witness = exitless_cycle(g);
    ConditionL {
        holds: witness.is_none(),
        witness,
    }
}
