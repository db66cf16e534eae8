//! Analysis of *why* a finite-state system satisfies a temporal specification.
//!
//! Given a Kripke structure and a CTL formula that holds in it, this crate
//! reports, for every state, whether the state is covered by the
//! specification (flipping an atomic proposition there falsifies it), whether
//! it is a cause of satisfaction, and its exact degree of responsibility
//! `1/(k+1)`, where `k` is the size of the smallest set of auxiliary flips
//! under which the state becomes critical.
//!
//! The same notions are provided for Boolean circuits and for binary
//! structural-equation causal models, and the three views are tied together
//! by compiling the system/specification product into a circuit
//! ([`compile`]). Four interchangeable responsibility engines are available
//! on circuits: exhaustive search, bounded-threshold search, binary search
//! over an NP-style oracle, and a linear-time pass for read-once trees.
//!
//! Entry points:
//! - [`coverage::build_report`] produces the per-state report behind the CLI.
//! - [`circuit::resp_brute`] and friends operate on raw circuits.
//! - [`causal::responsibility`] works on structural-equation models.
//! - [`cliquebench`] stress-tests the engines through a max-clique reduction.

pub mod causal;
pub mod circuit;
pub mod cliquebench;
pub mod compile;
pub mod coverage;
pub mod ctl;
pub mod kripke;
pub mod sample;

mod util;

pub use circuit::{
    Assignment, BoundedResp, Circuit, CircuitError, Gate, GateId, RespResult, Responsibility,
};
pub use compile::ProductCircuit;
pub use coverage::CoverageReport;
pub use ctl::CtlFormula;
pub use kripke::KripkeStructure;
