//! Diagrammatic knot invariants: Seifert circles and Seifert graphs of
//! planar-diagram codes, block-wise Seifert matrices, Alexander polynomials
//! (with an independent Fox-calculus cross-check) and mechanical checks of
//! the genus/breadth theorems for alternating and homogeneous diagrams.

pub mod cli;
pub mod error;
pub mod fixtures;
pub mod laurent;
pub mod linalg;
pub mod pd;
pub mod seifert_matrix;
pub mod seifert_state;
pub mod verdicts;
pub mod wirtinger;

pub use error::{Error, Result};
pub use laurent::LaurentPoly;
pub use linalg::IntMatrix;
pub use pd::{CrossingSign, PlanarDiagram};
pub use seifert_matrix::{BlockMatrix, BlockSeifertMatrix, Definiteness};
pub use seifert_state::{BlockDecomposition, SeifertGraph};
pub use verdicts::{InvariantReport, Status, TheoremId, TheoremVerdict};
