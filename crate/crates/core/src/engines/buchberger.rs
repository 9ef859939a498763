//! Buchberger's algorithm with Gebauer–Möller pair elimination and the
//! sugar selection strategy. Serves as the correctness oracle.

use alloc::collections::BinaryHeap;
use alloc::vec::Vec;
use core::cmp::{Ordering, Reverse};

use super::interreduce::reduce_full;
use super::{interreduce, prepare_input, GrobnerResult};
use crate::polyring::{Monomial, Polynomial, Ring};
use crate::sigcore::SigKey;
use crate::stats::{Audit, RunStats, TraceEntry};
use crate::Error;

struct Elem {
    poly: Polynomial,
    sugar: u32,
    active: bool,
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
    /// (sugar, degree, monomial order) key for the threepartite strategy.
    key: SigKey,
    seq: u64,
}

impl PartialEq for Pair {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for Pair {}
impl PartialOrd for Pair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Pair {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key.cmp(&other.key).then(self.seq.cmp(&other.seq))
    }
}

struct Engine<'a> {
    ring: &'a Ring,
    elems: Vec<Elem>,
    pairs: BinaryHeap<Reverse<Pair>>,
    seq: u64,
    stats: RunStats,
    audit: Audit,
    trace: Vec<TraceEntry>,
}

/// Gröbner basis by Buchberger's algorithm, pairs by increasing sugar,
/// then degree, then lcm.
pub fn buchberger_sugar(ring: &Ring, input: &[Polynomial]) -> Result<GrobnerResult, Error> {
    run(ring, input, &mut |_| false)
}

pub(super) fn run(
    ring: &Ring,
    input: &[Polynomial],
    abort: &mut dyn FnMut(&RunStats) -> bool,
) -> Result<GrobnerResult, Error> {
    let mut warnings = Vec::new();
    let gens = prepare_input(ring, input, &mut warnings)?;
    let mut e = Engine {
        ring,
        elems: Vec::new(),
        pairs: BinaryHeap::new(),
        seq: 0,
        stats: RunStats::default(),
        audit: Audit::default(),
        trace: Vec::new(),
    };
    for f in gens {
        let sugar = f.deg() as u32;
        e.update(f, sugar);
    }
    let mut last: Option<(u32, u32)> = None;
    let mut aborted = false;
    while let Some(Reverse(pair)) = e.pairs.pop() {
        if abort(&e.stats) {
            aborted = true;
            break;
        }
        if let Some((s, d)) = last {
            if pair.sugar < s {
                e.audit.signature_order_violations += 1;
            }
            if pair.lcm.deg() < d {
                e.audit.degree_order_violations += 1;
            }
        }
        last = Some((pair.sugar, pair.lcm.deg()));
        let (f, g) = (&e.elems[pair.i], &e.elems[pair.j]);
        let lf = f.poly.lm().unwrap();
        let lg = g.poly.lm().unwrap();
        let uf = pair.lcm.div_unchecked(lf);
        let ug = pair.lcm.div_unchecked(lg);
        let s =
            g.poly.mul_term(ring, f.poly.lc().unwrap(), &ug).axpy(ring, g.poly.lc().unwrap(), &uf, &f.poly);
        let spoly_deg = s.deg();
        e.trace.push(TraceEntry {
            sig: None,
            sig_deg: pair.sugar,
            pair_deg: pair.lcm.deg(),
            spoly_deg,
            sugar: pair.sugar,
        });
        e.audit.spolys_checked += 1;
        if spoly_deg >= 0 && pair.lcm.deg() as i64 != spoly_deg {
            e.audit.strict_relation += 1;
        }
        e.stats.spoly_reductions += 1;
        let (h, sugar) = e.reduce(&s, pair.sugar);
        if h.is_zero() {
            e.stats.zero_reductions += 1;
        } else {
            e.update(h, sugar);
        }
    }
    let polys: Vec<Polynomial> = e.elems.iter().filter(|x| x.active).map(|x| x.poly.clone()).collect();
    let basis = interreduce(ring, &polys);
    e.stats.basis_size_final = basis.len() as u64;
    Ok(GrobnerResult { basis, stats: e.stats, trace: e.trace, audit: e.audit, warnings, aborted })
}

impl Engine<'_> {
    fn reduce(&mut self, s: &Polynomial, mut sugar: u32) -> (Polynomial, u32) {
        let active: Vec<usize> = (0..self.elems.len()).filter(|&k| self.elems[k].active).collect();
        let refs: Vec<&Polynomial> = active.iter().map(|&k| &self.elems[k].poly).collect();
        let mut steps = 0;
        let elems = &self.elems;
        let h = reduce_full(self.ring, s, &refs, |k, t| {
            steps += 1;
            sugar = sugar.max(t.deg() + elems[active[k]].sugar);
        });
        self.stats.reduction_steps += steps;
        (h.monic(self.ring), sugar)
    }

    fn push_pair(&mut self, i: usize, j: usize, lcm: Monomial) {
        let (fi, fj) = (&self.elems[i], &self.elems[j]);
        let di = lcm.deg() - fi.poly.lm().unwrap().deg();
        let dj = lcm.deg() - fj.poly.lm().unwrap().deg();
        let sugar = (di + fi.sugar).max(dj + fj.sugar);
        let mut key = SigKey::new();
        key.push(sugar as i32);
        // grevlex keys already start with the degree
        if !self.ring.order.is_degree_compatible() {
            key.push(lcm.deg() as i32);
        }
        self.ring.order.push_key(&lcm, &mut key);
        self.seq += 1;
        self.pairs.push(Reverse(Pair { i, j, lcm, sugar, key, seq: self.seq }));
    }

    /// Gebauer–Möller update for a new element `h`.
    fn update(&mut self, h: Polynomial, sugar: u32) {
        let k = self.elems.len();
        let lh = h.lm().unwrap().clone();
        self.elems.push(Elem { poly: h, sugar, active: true });

        let cands: Vec<(usize, Monomial, bool)> = (0..k)
            .filter(|&g| self.elems[g].active)
            .map(|g| {
                let lg = self.elems[g].poly.lm().unwrap();
                (g, lh.lcm(lg), lh.is_coprime(lg))
            })
            .collect();

        // Chain criterion among the new pairs; coprime pairs are kept for
        // now so that they can shadow others, then dropped (product criterion).
        let mut kept: Vec<usize> = Vec::new();
        for (a, (_, la, coprime)) in cands.iter().enumerate() {
            let shadowed = cands[a + 1..].iter().any(|(_, lb, _)| lb.divides(la))
                || kept.iter().any(|&b| cands[b].1.divides(la));
            if *coprime || !shadowed {
                kept.push(a);
            }
        }
        let before = cands.len() as u64;
        let survivors = kept.iter().filter(|&&a| !cands[a].2).count() as u64;

        // Old pairs made redundant by h.
        let old = core::mem::take(&mut self.pairs).into_vec();
        let mut dropped_old = 0;
        for Reverse(p) in old {
            let li = self.elems[p.i].poly.lm().unwrap();
            let lj = self.elems[p.j].poly.lm().unwrap();
            if lh.divides(&p.lcm) && lh.lcm(li) != p.lcm && lh.lcm(lj) != p.lcm {
                dropped_old += 1;
            } else {
                self.pairs.push(Reverse(p));
            }
        }
        self.stats.discarded_syzygy_criterion += before - survivors + dropped_old;

        for &a in &kept {
            let (g, ref lcm, coprime) = cands[a];
            if !coprime {
                self.push_pair(k, g, lcm.clone());
            }
        }

        for g in 0..k {
            if self.elems[g].active && lh.divides(self.elems[g].poly.lm().unwrap()) {
                self.elems[g].active = false;
            }
        }
    }
}
