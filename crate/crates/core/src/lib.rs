//! Exact computations in the lattice-ordered pregroups `F_n(Z)` of
//! `n`-periodic order-preserving finite-to-one maps on the integers, and in
//! the lexicographic and wreath products built over them.
//!
//! - [`periodic`]: element arithmetic, residuals, `sigma`/`gamma`, atoms,
//!   `core`, `delta`, the generation pipeline and atom decompositions.
//! - [`terms`]: the term language, its parser and evaluator, equations and
//!   axiom schemas.
//! - [`checker`]: bounded counterexample search and the law suite.
//! - [`models`]: `F_n(Z)` as a model, lexicographic and wreath products.
//! - [`variety`]: the lattice of varieties generated by finitely many `F_k(Z)`.
//! - [`cli`]: the batch command-line front end.

pub mod checker;
pub mod cli;
pub mod error;
pub mod models;
pub mod periodic;
pub mod terms;
pub mod variety;

pub use error::{Error, Result};
pub use periodic::PeriodicMap;
