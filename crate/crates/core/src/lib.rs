//! Exact and spectral tools for walk-regular and distance-regular graphs,
//! their one- and two-vertex perturbations, and cospectral mate generation.
//!
//! Exact integer polynomials decide every cospectrality question; floating
//! idempotents are used only where the quantities are inherently real, and
//! are certified against the exact characteristic polynomial.

pub mod catalog;
pub mod classify;
pub mod error;
pub mod exact;
pub mod graph;
pub mod graph6;
pub mod iso;
pub mod perturb;
pub mod poly;
pub mod report;
pub mod sets;
pub mod spectral;
pub mod walks;

pub use catalog::catalog;
pub use error::{Error, Result};
pub use exact::{charpoly, cofactor_poly, cospectral, evaluate_rational_trace};
pub use graph::{DistanceMatrix, Graph};
pub use graph6::{emit_graph6, parse_graph6};
pub use iso::are_isomorphic;
pub use perturb::{PerturbationKind, PerturbationOp};
pub use poly::IntPoly;
pub use report::{analyze, AnalysisReport, AnalyzeOptions};
pub use spectral::{decompose, SpectralData};
pub use walks::walk_count;
