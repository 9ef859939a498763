//! Signatures, module orderings, labeled polynomials, critical pairs and
//! sig-safe reduction.

mod labeled;
mod pair;
mod reduce;
mod signature;

pub use labeled::{sugar_of_mul, sugar_of_sum, LabeledPolynomial};
pub use pair::{make_pair, spoly, CriticalPair, NonMinimal};
pub use reduce::{is_sig_redundant, sig_safe_reduce, ReduceOptions};
pub use signature::{SigKey, SigOrderKind, SigOrderSpec, Signature};
