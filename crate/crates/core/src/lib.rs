//! Exact computer algebra for Leavitt path algebras `L(E)` of finite directed graphs.
//!
//! * [`graph`] and [`paths`]: the graph model and path analysis (exits,
//!   closed simple paths, cycles, condition (L)).
//! * [`algebra`]: canonical-form arithmetic under the Cuntz–Krieger relations,
//!   grading, involution, local units and the degree-shrinking procedures.
//! * [`oracle`]: faithful representations of `L(LINE_n)` as matrices and of
//!   `L(LOOP)` as Laurent polynomials, used to cross-check the engine.
//! * [`structure`]: hereditary and saturated vertex sets, the simplicity
//!   decision with witnesses, quotient graphs and edge matrices.
//! * [`expr`] and [`report`]: the expression language and analysis reports
//!   behind the `lpa` command-line tool.
//!
//! ```
//! use lpa_core::{expr::evaluate, graph::named, structure::is_simple, Field, LeavittAlgebra};
//!
//! let alg = LeavittAlgebra::new(named::rose(2), Field::Rationals);
//! assert!(is_simple(&alg).simple);
//! let a = evaluate("y1 . y1* + y2 . y2*", &alg).unwrap();
//! assert_eq!(a.to_string(), "v");
//! ```

pub mod algebra;
pub mod error;
pub mod expr;
pub mod graph;
pub mod oracle;
pub mod paths;
pub mod random;
pub mod report;
pub mod scalar;
pub mod structure;

pub use algebra::{Element, GeneratorKind, LeavittAlgebra, Monomial};
pub use error::{AlgebraError, ExprError, GraphError, StructureError};
pub use graph::{EdgeId, Graph, Path, VertexId};
pub use scalar::{Field, Scalar};
