use alloc::vec::Vec;

use crate::polyring::polynomial::axpy_into;
use crate::polyring::{Monomial, Polynomial, Ring, Term};

/// Full (head and tail) reduction of `f` by `reducers`, first divisor wins.
/// `on_step(k, t)` is called for every step `f -= c * t * reducers[k]`.
pub(super) fn reduce_full(
    ring: &Ring,
    f: &Polynomial,
    reducers: &[&Polynomial],
    mut on_step: impl FnMut(usize, &Monomial),
) -> Polynomial {
    let mut rest: Vec<Term> = f.terms().to_vec();
    let mut pos = 0;
    let mut next: Vec<Term> = Vec::new();
    let mut done = Vec::new();
    while pos < rest.len() {
        let lead = &rest[pos];
        let hit = reducers.iter().enumerate().find_map(|(k, g)| {
            let lg = g.lm()?;
            lg.divides(&lead.mono).then(|| (k, lead.mono.div_unchecked(lg)))
        });
        match hit {
            Some((k, t)) => {
                let g = reducers[k];
                let c = ring.field.div(lead.coeff, g.lc().expect("nonzero"));
                next.clear();
                axpy_into(ring, &mut next, rest.drain(pos..), c, &t, g.terms());
                done.append(&mut rest);
                core::mem::swap(&mut rest, &mut next);
                pos = 0;
                on_step(k, &t);
            }
            None => pos += 1,
        }
    }
    done.append(&mut rest);
    Polynomial::from_sorted(ring, done)
}

/// Normal form of `f` modulo `reducers` (plain, signature-free).
pub fn normal_form(ring: &Ring, f: &Polynomial, reducers: &[Polynomial]) -> Polynomial {
    let refs: Vec<&Polynomial> = reducers.iter().collect();
    reduce_full(ring, f, &refs, |_, _| {})
}

/// Turns a Gröbner basis into the reduced one: drops elements whose leading
/// monomial is divisible by another's, tail-reduces the survivors, makes
/// them monic and sorts them ascending by leading monomial.
pub fn interreduce(ring: &Ring, g: &[Polynomial]) -> Vec<Polynomial> {
    let mut v: Vec<Polynomial> = g.iter().filter(|p| !p.is_zero()).map(|p| p.monic(ring)).collect();
    v.sort_by(|a, b| ring.order.cmp(a.lm().unwrap(), b.lm().unwrap()));
    let mut minimal: Vec<Polynomial> = Vec::with_capacity(v.len());
    for p in v {
        let lm = p.lm().unwrap();
        if !minimal.iter().any(|q| q.lm().unwrap().divides(lm)) {
            minimal.push(p);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for (k, p) in minimal.iter().enumerate() {
        let others: Vec<&Polynomial> =
            minimal.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, q)| q).collect();
        out.push(reduce_full(ring, p, &others, |_, _| {}).monic(ring));
    }
    out
}
