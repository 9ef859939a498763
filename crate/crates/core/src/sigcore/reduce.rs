use alloc::vec::Vec;
use core::cmp::Ordering;

use super::{sugar_of_mul, sugar_of_sum, LabeledPolynomial, SigOrderSpec};
use crate::polyring::polynomial::axpy_into;
use crate::polyring::{Polynomial, Ring, Term};
use crate::stats::RunStats;

/// Knobs of [`sig_safe_reduce`].
#[derive(Clone, Copy, Debug)]
pub struct ReduceOptions<'a> {
    /// Keep reducing lower terms once the leading term is irreducible.
    pub tail: bool,
    /// Order in which basis elements are tried; insertion order when `None`.
    pub scan: Option<&'a [usize]>,
}

impl Default for ReduceOptions<'_> {
    fn default() -> Self {
        ReduceOptions { tail: true, scan: None }
    }
}

/// Reduces `f` modulo `basis` using only reducers `t * g` with
/// `t * sig(g) < sig(f)`. The signature never changes.
pub fn sig_safe_reduce(
    ring: &Ring,
    f: LabeledPolynomial,
    basis: &[LabeledPolynomial],
    spec: &SigOrderSpec,
    opts: ReduceOptions<'_>,
    stats: &mut RunStats,
) -> LabeledPolynomial {
    let LabeledPolynomial { sig, poly, mut sugar, gen_deg } = f;
    let mut rest: Vec<Term> = poly.into_terms();
    let mut pos = 0;
    let mut next: Vec<Term> = Vec::new();
    let mut done: Vec<Term> = Vec::new();
    let insertion: Vec<usize>;
    let scan = match opts.scan {
        Some(s) => s,
        None => {
            insertion = (0..basis.len()).collect();
            &insertion
        }
    };

    while pos < rest.len() {
        let lead = &rest[pos];
        let mut found = None;
        for &k in scan {
            let g = &basis[k];
            let Some(lg) = g.poly.lm() else { continue };
            if !lg.divides(&lead.mono) {
                continue;
            }
            let t = lead.mono.div_unchecked(lg);
            if spec.cmp_scaled(&t, &g.sig, &sig) == Ordering::Less {
                found = Some((k, t));
                break;
            }
            stats.higher_sig_detections += 1;
        }
        match found {
            Some((k, t)) => {
                let g = &basis[k];
                let c = ring.field.div(lead.coeff, g.poly.lc().expect("nonzero"));
                #[cfg(debug_assertions)]
                let before = lead.mono.clone();
                next.clear();
                axpy_into(ring, &mut next, rest.drain(pos..), c, &t, g.poly.terms());
                #[cfg(debug_assertions)]
                debug_assert!(next
                    .first()
                    .is_none_or(|n| ring.order.cmp(&n.mono, &before) == Ordering::Less));
                done.append(&mut rest);
                core::mem::swap(&mut rest, &mut next);
                pos = 0;
                sugar = sugar_of_sum(sugar, sugar_of_mul(&t, g.sugar));
                stats.reduction_steps += 1;
            }
            None if opts.tail => pos += 1,
            None => break,
        }
    }
    done.append(&mut rest);
    LabeledPolynomial { sig, poly: Polynomial::from_sorted(ring, done), sugar, gen_deg }
}

/// True iff some `h` in `basis` has `sig(h) | sig(r)` and `lm(h) | lm(r)`.
pub fn is_sig_redundant(r: &LabeledPolynomial, basis: &[LabeledPolynomial]) -> bool {
    let Some(lr) = r.poly.lm() else { return false };
    basis.iter().any(|h| h.sig.divides(&r.sig) && h.poly.lm().is_some_and(|lh| lh.divides(lr)))
}
