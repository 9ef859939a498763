//! Run counters, invariant audit counters and the processed-pair trace.

use crate::sigcore::Signature;

/// Counters of one engine run. `elapsed_ms` is filled in by the caller,
/// since timing needs `std`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RunStats {
    /// Reduction steps (one per `r - c t g` update, head or tail).
    pub reduction_steps: u64,
    /// Reducers whose lead divides the term but whose multiplied signature
    /// is not strictly smaller.
    pub higher_sig_detections: u64,
    /// S-polynomials handed to the reducer.
    pub spoly_reductions: u64,
    pub zero_reductions: u64,
    pub discarded_nonminimal_pair: u64,
    pub discarded_syzygy_criterion: u64,
    pub discarded_rewritable: u64,
    pub sig_redundant_skips: u64,
    pub basis_size_final: u64,
    pub elapsed_ms: u64,
}

impl RunStats {
    /// `higher_sig_detections / reduction_steps` in percent.
    pub fn ratio_pct(&self) -> f64 {
        if self.reduction_steps == 0 {
            if self.higher_sig_detections == 0 {
                0.0
            } else {
                f64::INFINITY
            }
        } else {
            100.0 * self.higher_sig_detections as f64 / self.reduction_steps as f64
        }
    }
}

/// Invariant counters collected while an engine runs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Audit {
    pub spolys_checked: u64,
    /// `sig_deg >= pair_deg >= deg(spoly)` failed.
    pub relation_violations: u64,
    /// One of the two inequalities above was strict (the second one only
    /// counts for nonzero s-polynomials).
    pub strict_relation: u64,
    /// `sig_deg == pair_deg`, or for a nonzero s-polynomial also
    /// `pair_deg == deg(spoly)`, failed.
    pub degree_equality_violations: u64,
    pub sugar_checked: u64,
    /// Labeled polynomials whose tracked sugar differs from their signature degree.
    pub sugar_violations: u64,
    /// Processed signature smaller than its predecessor in the trace.
    pub signature_order_violations: u64,
    /// Processed pair degree smaller than its predecessor (sugar engine: sugar).
    pub degree_order_violations: u64,
}

/// One processed critical pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceEntry {
    /// Pair signature; `None` for the Buchberger engine.
    pub sig: Option<Signature>,
    pub sig_deg: u32,
    pub pair_deg: u32,
    pub spoly_deg: i64,
    pub sugar: u32,
}
