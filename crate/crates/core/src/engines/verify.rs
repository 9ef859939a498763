use alloc::vec::Vec;

use super::{buchberger_sugar, normal_form};
use crate::polyring::{Polynomial, Ring};

/// Checks that `g` is a Gröbner basis of the ideal generated by `f`:
/// every s-polynomial of `g` reduces to zero modulo `g` (pairs with coprime
/// leading monomials are skipped, as they always do), every element of
/// `f` reduces to zero modulo `g`, and every element of `g` reduces to zero
/// modulo the sugar-strategy basis of `f`.
pub fn verify_groebner(ring: &Ring, g: &[Polynomial], f: &[Polynomial]) -> bool {
    let nonzero: Vec<Polynomial> = f.iter().filter(|p| !p.is_zero()).cloned().collect();
    if nonzero.is_empty() {
        return g.iter().all(Polynomial::is_zero);
    }
    match buchberger_sugar(ring, &nonzero) {
        Ok(oracle) => verify_with_oracle(ring, g, f, &oracle.basis),
        Err(_) => false,
    }
}

/// [`verify_groebner`] with a precomputed Gröbner basis `oracle` of `f`.
pub fn verify_with_oracle(ring: &Ring, g: &[Polynomial], f: &[Polynomial], oracle: &[Polynomial]) -> bool {
    let g: Vec<Polynomial> = g.iter().filter(|p| !p.is_zero()).cloned().collect();
    for (a, p) in g.iter().enumerate() {
        for q in &g[..a] {
            let (lp, lq) = (p.lm().unwrap(), q.lm().unwrap());
            if lp.is_coprime(lq) {
                continue;
            }
            let l = lp.lcm(lq);
            let s = p.mul_term(ring, q.lc().unwrap(), &l.div_unchecked(lp)).axpy(
                ring,
                p.lc().unwrap(),
                &l.div_unchecked(lq),
                q,
            );
            if !normal_form(ring, &s, &g).is_zero() {
                return false;
            }
        }
    }
    f.iter().all(|p| normal_form(ring, p, &g).is_zero())
        && g.iter().all(|p| normal_form(ring, p, oracle).is_zero())
}
