use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("malformed graph file: {0}")]
    Parse(String),
    #[error("invalid identifier {0:?}")]
    InvalidId(String),
    #[error("duplicate identifier {0:?}")]
    DuplicateId(String),
    #[error("edge {edge:?} has undeclared endpoint {vertex:?}")]
    DanglingEndpoint { edge: String, vertex: String },
    #[error("unknown identifier {0:?}")]
    UnknownId(String),
    #[error("a path needs at least one edge")]
    EmptyPath,
    #[error("edge {0:?} does not start where the previous edge ends")]
    NotComposable(String),
    #[error("path is not closed")]
    NotClosed,
}

impl GraphError {
    /// Whether this is a syntactic (rather than semantic) failure.
    pub fn is_parse(&self) -> bool {
        matches!(self, GraphError::Parse(_) | GraphError::InvalidId(_))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("operands belong to different algebras (graph or field mismatch)")]
    Mismatch,
    #[error("unknown {kind} {id:?}")]
    UnknownGenerator { kind: &'static str, id: String },
    #[error("monomial p·q* requires r(p) = r(q)")]
    RangeMismatch,
    #[error("{0} is not prime or is out of range (2 <= p < 2^31)")]
    NotPrime(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("the graph has a cycle without an exit")]
    ConditionLFails,
    #[error("element is zero")]
    ZeroElement,
    #[error("element is not a polynomial in only {0} edges")]
    WrongSide(&'static str),
    #[error("element already has degree 0")]
    DegreeZero,
    #[error("empty element list")]
    EmptyList,
    #[error("element does not live on the expected graph ({0})")]
    WrongGraph(String),
    #[error("no certified reduction found")]
    ShrinkFailed,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("vertex set is not hereditary")]
    NotHereditary,
    #[error("vertex set is not saturated")]
    NotSaturated,
    #[error("trivial subset (empty or all vertices)")]
    TrivialSubset,
    #[error("enumeration limited to {limit} vertices, graph has {actual}")]
    TooManyVertices { limit: usize, actual: usize },
    #[error("graph has no edges")]
    NoEdges,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExprError {
    #[error("lexical error at {pos}: {msg}")]
    Lex { pos: usize, msg: String },
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown identifier {name:?} at {pos}")]
    UnknownIdent { pos: usize, name: String },
    #[error("ghost marker on vertex {name:?} at {pos}")]
    GhostOnVertex { pos: usize, name: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl ExprError {
    pub fn is_parse(&self) -> bool {
        matches!(self, ExprError::Lex { .. } | ExprError::Syntax { .. })
    }
}
