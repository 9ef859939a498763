//! Exact Gröbner basis computations over prime fields.
//!
//! The crate provides a generic signature-based engine (with the
//! non-minimal-syzygy and rewritable criteria, POT and Schreyer module
//! orderings, and an F5-style degree presorting mode), a classical
//! Buchberger engine with Gebauer–Möller pair elimination and the sugar
//! selection strategy, and the instrumentation needed to compare them.
//!
//! Everything here is `no_std` and only needs `alloc`; text formats, timing
//! and the benchmark harness live in the `sigbasis` crate.

#![no_std]

extern crate alloc;

pub mod coeff;
pub mod engines;
mod error;
pub mod polyring;
pub mod sigcore;
pub mod stats;
pub mod systems;

pub use coeff::{FieldElem, FieldSpec};
pub use engines::{
    buchberger_sugar, compute, compute_with_abort, dehomogenize_basis, f5_presort, interreduce, sba,
    verify_groebner, Algorithm, Criteria, Dehomogenized, EngineConfig, GrobnerResult, ReducerOrder,
    RewriteFlavor,
};
pub use error::Error;
pub use polyring::{dehomogenize, homogenize, Monomial, MonomialOrder, Polynomial, Ring, Term};
pub use sigcore::{LabeledPolynomial, SigOrderKind, SigOrderSpec, Signature};
pub use stats::{Audit, RunStats, TraceEntry};
