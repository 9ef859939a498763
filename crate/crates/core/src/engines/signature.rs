//! The generic signature-based algorithm and its F5 presorted variant.

use alloc::vec::Vec;
use core::cmp::Ordering;

use super::criteria::{criterion_nonminimal_syzygy, criterion_rewritable, RewriteRules, SyzygySet};
use super::queue::PairQueue;
use super::{interreduce, prepare_input, Algorithm, EngineConfig, GrobnerResult, ReducerOrder, Warning};
use crate::polyring::{Polynomial, Ring};
use crate::sigcore::{
    is_sig_redundant, make_pair, sig_safe_reduce, spoly, CriticalPair, LabeledPolynomial, ReduceOptions,
    SigOrderSpec, Signature,
};
use crate::stats::{Audit, RunStats, TraceEntry};
use crate::Error;

/// Signature-based Gröbner basis: pairs by increasing signature.
pub fn sba(ring: &Ring, input: &[Polynomial], cfg: &EngineConfig) -> Result<GrobnerResult, Error> {
    let cfg = EngineConfig { algorithm: Algorithm::Sba, ..*cfg };
    run(ring, input, &cfg, &mut |_| false)
}

/// Signature-based Gröbner basis with F5's presorting by pair degree.
pub fn f5_presort(ring: &Ring, input: &[Polynomial], cfg: &EngineConfig) -> Result<GrobnerResult, Error> {
    let cfg = EngineConfig { algorithm: Algorithm::F5Presort, ..*cfg };
    run(ring, input, &cfg, &mut |_| false)
}

struct Engine<'a> {
    ring: &'a Ring,
    cfg: &'a EngineConfig,
    spec: SigOrderSpec,
    basis: Vec<LabeledPolynomial>,
    /// Basis positions sorted by ascending signature.
    by_signature: Vec<usize>,
    syz: SyzygySet,
    rules: RewriteRules,
    queue: PairQueue,
    seq: u64,
    stats: RunStats,
    audit: Audit,
    trace: Vec<TraceEntry>,
    last_processed: Option<(Signature, u32)>,
}

pub(super) fn run(
    ring: &Ring,
    input: &[Polynomial],
    cfg: &EngineConfig,
    abort: &mut dyn FnMut(&RunStats) -> bool,
) -> Result<GrobnerResult, Error> {
    let mut warnings = Vec::new();
    let gens = prepare_input(ring, input, &mut warnings)?;
    if cfg.algorithm == Algorithm::F5Presort && !ring.order.is_degree_compatible() {
        warnings.push(Warning::PresortWithoutDegreeOrder);
    }
    let leads = gens.iter().map(|f| f.lm().expect("nonzero").clone()).collect();
    let spec = SigOrderSpec::for_generators(cfg.sig_order, ring.order, leads)?;
    let m = gens.len();
    let mut engine = Engine {
        ring,
        cfg,
        spec,
        basis: Vec::new(),
        by_signature: Vec::new(),
        syz: SyzygySet::new(m),
        rules: RewriteRules::new(m),
        queue: match cfg.algorithm {
            Algorithm::F5Presort => PairQueue::presorted(),
            _ => PairQueue::by_signature(),
        },
        seq: 0,
        stats: RunStats::default(),
        audit: Audit::default(),
        trace: Vec::new(),
        last_processed: None,
    };
    for (idx, f) in gens.into_iter().enumerate() {
        let g = LabeledPolynomial::generator(ring.nvars, idx, f);
        engine.check_sugar(&g);
        engine.insert(g);
    }
    let mut aborted = false;
    while let Some(pair) = engine.queue.pop(&engine.spec) {
        if abort(&engine.stats) {
            aborted = true;
            break;
        }
        engine.process(pair);
    }
    let polys: Vec<Polynomial> = engine.basis.iter().map(|g| g.poly.clone()).collect();
    let basis = interreduce(ring, &polys);
    engine.stats.basis_size_final = basis.len() as u64;
    Ok(GrobnerResult {
        basis,
        stats: engine.stats,
        trace: engine.trace,
        audit: engine.audit,
        warnings,
        aborted,
    })
}

impl Engine<'_> {
    fn check_sugar(&mut self, f: &LabeledPolynomial) {
        self.audit.sugar_checked += 1;
        if f.sugar != f.sigdeg() {
            self.audit.sugar_violations += 1;
        }
    }

    /// True if an enabled criterion discards `pair`.
    fn discard(&mut self, pair: &CriticalPair) -> bool {
        let crit = self.cfg.criteria;
        if crit.nonminimal_syzygy && criterion_nonminimal_syzygy(pair, &self.syz) {
            self.stats.discarded_syzygy_criterion += 1;
            return true;
        }
        if crit.rewritable && criterion_rewritable(pair, &self.basis, &self.rules, self.cfg.rewrite_flavor) {
            self.stats.discarded_rewritable += 1;
            return true;
        }
        false
    }

    /// Adds a nonzero element, its principal syzygies and its new pairs.
    fn insert(&mut self, mut g: LabeledPolynomial) {
        g.poly = g.poly.monic(self.ring);
        let k = self.basis.len();
        for h in &self.basis {
            self.syz.insert_koszul(&self.spec, &g, h);
        }
        self.rules.add_element(k, &g.sig);
        if self.cfg.reducer_order == ReducerOrder::AscendingSignature {
            let spec = &self.spec;
            let basis = &self.basis;
            let at =
                self.by_signature.partition_point(|&b| spec.cmp(&basis[b].sig, &g.sig) != Ordering::Greater);
            self.by_signature.insert(at, k);
        }
        self.basis.push(g);
        for j in 0..k {
            self.seq += 1;
            match make_pair(k, j, &self.basis, &self.spec, self.seq) {
                Err(_) => self.stats.discarded_nonminimal_pair += 1,
                Ok(pair) => {
                    if !self.discard(&pair) {
                        self.queue.push(&self.spec, pair);
                    }
                }
            }
        }
    }

    fn process(&mut self, pair: CriticalPair) {
        if self.discard(&pair) {
            return;
        }
        if let Some((last, last_deg)) = &self.last_processed {
            if self.spec.cmp(&pair.pair_sig, last) == Ordering::Less {
                self.audit.signature_order_violations += 1;
            }
            if pair.pair_deg < *last_deg {
                self.audit.degree_order_violations += 1;
            }
        }
        self.last_processed = Some((pair.pair_sig.clone(), pair.pair_deg));

        let s = spoly(self.ring, &pair, &self.basis);
        let spoly_deg = s.poly.deg();
        self.audit_relation(&pair, spoly_deg);
        self.check_sugar(&s);
        self.trace.push(TraceEntry {
            sig: Some(pair.pair_sig.clone()),
            sig_deg: pair.sig_deg,
            pair_deg: pair.pair_deg,
            spoly_deg,
            sugar: pair.sugar,
        });

        self.stats.spoly_reductions += 1;
        let opts = ReduceOptions {
            tail: self.cfg.tail_reduce,
            scan: match self.cfg.reducer_order {
                ReducerOrder::Insertion => None,
                ReducerOrder::AscendingSignature => Some(&self.by_signature),
            },
        };
        let r = sig_safe_reduce(self.ring, s, &self.basis, &self.spec, opts, &mut self.stats);
        if r.poly.is_zero() {
            self.stats.zero_reductions += 1;
            self.syz.insert(&r.sig);
            self.rules.add_zero(&r.sig);
            return;
        }
        self.check_sugar(&r);
        if self.cfg.sig_redundant_filter && is_sig_redundant(&r, &self.basis) {
            self.stats.sig_redundant_skips += 1;
            return;
        }
        self.insert(r);
    }

    fn audit_relation(&mut self, pair: &CriticalPair, spoly_deg: i64) {
        let a = &mut self.audit;
        a.spolys_checked += 1;
        let (sd, pd) = (i64::from(pair.sig_deg), i64::from(pair.pair_deg));
        if !(sd >= pd && pd >= spoly_deg) {
            a.relation_violations += 1;
        }
        let nonzero = spoly_deg >= 0;
        if sd > pd || (nonzero && pd > spoly_deg) {
            a.strict_relation += 1;
        }
        if sd != pd || (nonzero && pd != spoly_deg) {
            a.degree_equality_violations += 1;
        }
    }
}
