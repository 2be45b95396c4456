//! General position sets in graphs.
//!
//! A vertex set `S` is in general position when no member of `S` lies on a
//! shortest path between two other members; `gp(G)` is the largest size of
//! such a set. This crate computes `gp(G)` exactly for arbitrary graphs, in
//! polynomial time or closed form for several structured classes, and checks
//! candidate sets by two independent routes.
//!
//! ```
//! use gpn_core::{family::{generate, FamilySpec}, formulas::{solve, Method}, SearchBudget};
//!
//! let petersen = generate(&FamilySpec::Petersen).unwrap();
//! let result = solve(&petersen, &SearchBudget::default()).unwrap();
//! assert_eq!(result.value, 6);
//! assert_eq!(result.method, Method::Diameter2);
//! ```

pub mod cograph;
pub mod construct;
mod error;
pub mod exact;
pub mod family;
pub mod formulas;
pub mod graph;
pub mod io;
pub mod metric;
pub mod verify;

pub use error::{Error, Result};
pub use exact::{SearchBudget, SearchMode};
pub use graph::{Distance, DistanceMatrix, Graph, GraphBuilder, Vertex, VertexSet};
pub use metric::{BipartiteLabeling, Bipartiteness};
