//! Exact graph invariant solvers, named graph families, and certified
//! checks of clique-cover bounds for χ-bounded classes.

pub mod certificate;
pub mod families;
pub mod format;
pub mod graph;
pub mod par;
pub mod solve;
pub mod verify;

pub use certificate::{Certificate, CertificateError};
pub use graph::{Graph, GraphError, VertexSet, MAX_VERTICES};
pub use solve::{Budget, SolveError, SolveResult};
