//! (t,r) broadcast domination on grid-like graphs.
//!
//! A tower of strength `t` at `w` sends `max(0, t − d(v, w))` to every vertex
//! `v`; a tower set dominates when every vertex collects at least `r`. The
//! crate builds the graph families, evaluates the closed forms, emits the
//! matching tower layouts and checks all of it against an exact solver.

pub mod audit;
pub mod closed_forms;
pub mod constructors;
pub mod error;
pub mod graph;
pub mod reception;
pub mod render;
pub mod solver;

pub use closed_forms::{BlockDims, Block3dShape, GammaKind, GammaResult};
pub use constructors::{LatticeKind, LatticePattern, PlacementPlan};
pub use error::{Error, Result};
pub use graph::{build, GraphFamily, GraphInstance, LatticePoint, VertexId};
pub use reception::{compute_reception, verify, ReceptionMap, TowerSet, VerificationReport};
pub use solver::{naive_enumerate, solve, OracleResult, SolverConfig};
