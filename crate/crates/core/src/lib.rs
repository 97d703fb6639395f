//! Gomory-Hu trees and laminar families of optimal cuts on finite weighted
//! graphs, with exact rational arithmetic throughout.
//!
//! The crate has three layers:
//!
//! * [`graph`], [`cut`], [`rational`]: exact-arithmetic weighted graphs and
//!   bit-vector vertex subsets.
//! * [`maxflow`], [`oracle`], [`verify`]: two independent routes to minimum
//!   cuts — an augmenting-path max-flow engine and exhaustive enumeration
//!   over an abstract symmetric submodular set function — plus checkers that
//!   accept a construction only if both routes agree.
//! * [`construct`]: cut uncrossing, the `prec` order on optimal cuts,
//!   minimal-vertex selection, the recursive partition into smallest optimal
//!   cuts, and two Gomory-Hu tree builders (recursive and contraction-based),
//!   together with an incremental laminar-family builder.
//!
//! [`counterexample`] generates finite truncations of a finitely separable
//! weighted graph whose unique optimal cuts form a strictly growing chain,
//! the obstruction to a Gomory-Hu tree in the infinite limit.

pub mod counterexample;
pub mod construct;
pub mod cut;
pub mod engine;
pub mod error;
pub mod graph;
pub mod maxflow;
pub mod oracle;
pub mod rational;
pub mod verify;

pub use construct::{GomoryHuTree, LaminarCut, LaminarFamily};
pub use cut::Cut;
pub use engine::{CutEngine, ExhaustiveEngine, MaxFlowEngine};
pub use error::{Error, Result};
pub use graph::WeightedGraph;
pub use oracle::{SetFunctionOracle, Value};
pub use rational::Rational;
pub use verify::{BruteForce, Finding, Report};
