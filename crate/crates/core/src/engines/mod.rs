//! Complete Gröbner basis engines and the post-processing around them.

mod buchberger;
mod criteria;
mod interreduce;
mod queue;
mod signature;
mod verify;

use alloc::vec::Vec;

pub use buchberger::buchberger_sugar;
pub use criteria::{criterion_nonminimal_syzygy, criterion_rewritable, RewriteRules, SyzygySet};
pub use interreduce::{interreduce, normal_form};
pub use signature::{f5_presort, sba};
pub use verify::{verify_groebner, verify_with_oracle};

use crate::polyring::{dehomogenize, Polynomial, Ring};
use crate::sigcore::SigOrderKind;
use crate::stats::{Audit, RunStats, TraceEntry};
use crate::Error;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Algorithm {
    /// Pairs strictly by increasing signature.
    #[default]
    Sba,
    /// F5-style presorting by pair degree, signature order inside a degree.
    F5Presort,
    /// Classical Buchberger with Gebauer–Möller and the sugar strategy.
    BuchbergerSugar,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Sba => "sba",
            Algorithm::F5Presort => "f5",
            Algorithm::BuchbergerSugar => "buchberger",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Criteria {
    pub nonminimal_syzygy: bool,
    pub rewritable: bool,
}

impl Criteria {
    pub const ALL: Criteria = Criteria { nonminimal_syzygy: true, rewritable: true };
    pub const NONE: Criteria = Criteria { nonminimal_syzygy: false, rewritable: false };
    pub const SYZYGY: Criteria = Criteria { nonminimal_syzygy: true, rewritable: false };
    pub const REWRITE: Criteria = Criteria { nonminimal_syzygy: false, rewritable: true };

    pub fn name(self) -> &'static str {
        match (self.nonminimal_syzygy, self.rewritable) {
            (true, true) => "all",
            (true, false) => "syz",
            (false, true) => "rewrite",
            (false, false) => "none",
        }
    }
}

impl Default for Criteria {
    fn default() -> Self {
        Criteria::ALL
    }
}

/// How the rewritable criterion decides which element owns a signature.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum RewriteFlavor {
    /// A later basis element whose signature divides the pair signature wins.
    #[default]
    ArriPerry,
    /// F5 rule lists: a later rule dividing either multiplied signature wins.
    F5RuleList,
}

impl RewriteFlavor {
    pub fn name(self) -> &'static str {
        match self {
            RewriteFlavor::ArriPerry => "ap",
            RewriteFlavor::F5RuleList => "f5",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum ReducerOrder {
    /// First sig-safe divisor in insertion order.
    #[default]
    Insertion,
    /// First sig-safe divisor by ascending signature.
    AscendingSignature,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EngineConfig {
    pub algorithm: Algorithm,
    pub sig_order: SigOrderKind,
    pub criteria: Criteria,
    pub rewrite_flavor: RewriteFlavor,
    pub tail_reduce: bool,
    pub reducer_order: ReducerOrder,
    /// Skip reduction results that are sig-redundant to the basis.
    pub sig_redundant_filter: bool,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            algorithm: Algorithm::Sba,
            sig_order: SigOrderKind::Pot,
            criteria: Criteria::ALL,
            rewrite_flavor: RewriteFlavor::ArriPerry,
            tail_reduce: true,
            reducer_order: ReducerOrder::Insertion,
            sig_redundant_filter: true,
        }
    }
}

impl EngineConfig {
    pub fn new(algorithm: Algorithm, sig_order: SigOrderKind) -> Self {
        EngineConfig { algorithm, sig_order, ..Default::default() }
    }

    pub fn with_criteria(mut self, criteria: Criteria) -> Self {
        self.criteria = criteria;
        self
    }

    pub fn with_rewrite(mut self, flavor: RewriteFlavor) -> Self {
        self.rewrite_flavor = flavor;
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Warning {
    /// Input polynomial at this position was zero and has been dropped.
    DroppedZeroInput(usize),
    /// Degree presorting requested with a non-degree-compatible ordering.
    PresortWithoutDegreeOrder,
}

#[derive(Clone, Debug, Default)]
pub struct GrobnerResult {
    /// Reduced Gröbner basis, monic, ascending by leading monomial.
    pub basis: Vec<Polynomial>,
    pub stats: RunStats,
    /// Processed pairs in processing order.
    pub trace: Vec<TraceEntry>,
    pub audit: Audit,
    pub warnings: Vec<Warning>,
    /// Set when the abort hook stopped the run; `basis` is then partial.
    pub aborted: bool,
}

/// Runs the engine selected by `cfg.algorithm`.
pub fn compute(ring: &Ring, input: &[Polynomial], cfg: &EngineConfig) -> Result<GrobnerResult, Error> {
    compute_with_abort(ring, input, cfg, &mut |_| false)
}

/// Like [`compute`]; `abort` is polled with the running counters once per
/// critical pair and stops the run when it returns true.
pub fn compute_with_abort(
    ring: &Ring,
    input: &[Polynomial],
    cfg: &EngineConfig,
    abort: &mut dyn FnMut(&RunStats) -> bool,
) -> Result<GrobnerResult, Error> {
    match cfg.algorithm {
        Algorithm::Sba | Algorithm::F5Presort => signature::run(ring, input, cfg, abort),
        Algorithm::BuchbergerSugar => buchberger::run(ring, input, abort),
    }
}

/// A basis mapped back from a homogenized ring.
#[derive(Clone, Debug)]
pub struct Dehomogenized {
    pub ring: Ring,
    /// Reduced Gröbner basis of the dehomogenized ideal.
    pub basis: Vec<Polynomial>,
    /// True when the interreduced image was not already a Gröbner basis.
    pub completion_added: bool,
}

/// Sets `h = 1` in `basis`, interreduces, and closes the result under
/// Buchberger completion. The image of a homogeneous basis is a Gröbner basis
/// when `h` is the smallest variable, but this is checked, not assumed.
pub fn dehomogenize_basis(ring: &Ring, basis: &[Polynomial]) -> Result<Dehomogenized, Error> {
    let (base, polys) = dehomogenize(ring, basis)?;
    let polys: Vec<Polynomial> = polys.into_iter().filter(|p| !p.is_zero()).collect();
    let image = interreduce(&base, &polys);
    let closed = buchberger_sugar(&base, &image)?.basis;
    Ok(Dehomogenized { completion_added: closed != image, ring: base, basis: closed })
}

/// Drops zero inputs, checks dimensions and makes the rest monic.
fn prepare_input(
    ring: &Ring,
    input: &[Polynomial],
    warnings: &mut Vec<Warning>,
) -> Result<Vec<Polynomial>, Error> {
    let mut out = Vec::with_capacity(input.len());
    for (k, f) in input.iter().enumerate() {
        if let Some(t) = f.terms().iter().find(|t| t.mono.nvars() != ring.nvars) {
            return Err(Error::DimensionMismatch { expected: ring.nvars, found: t.mono.nvars() });
        }
        if f.is_zero() {
            warnings.push(Warning::DroppedZeroInput(k));
        } else {
            out.push(f.monic(ring));
        }
    }
    if out.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(out)
}
