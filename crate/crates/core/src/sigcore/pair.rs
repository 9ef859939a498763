use core::cmp::Ordering;

use super::{sugar_of_mul, sugar_of_sum, LabeledPolynomial, SigOrderSpec, Signature};
use crate::polyring::{Monomial, Polynomial, Ring};

/// The two multiplied signatures of a pair coincide.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NonMinimal;

/// A critical pair of basis elements `i` (entered later) and `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalPair {
    pub i: usize,
    pub j: usize,
    pub lcm: Monomial,
    /// Multiplier of `basis[i]`.
    pub u_i: Monomial,
    /// Multiplier of `basis[j]`.
    pub u_j: Monomial,
    pub pair_sig: Signature,
    /// Whether `pair_sig = u_i * sig(basis[i])` (else it comes from `j`).
    pub sig_from_i: bool,
    pub pair_deg: u32,
    pub sig_deg: u32,
    pub sugar: u32,
    pub entry_seq: u64,
}

impl CriticalPair {
    /// Index and multiplier of the element the pair signature comes from.
    pub fn sig_source(&self) -> (usize, &Monomial) {
        if self.sig_from_i {
            (self.i, &self.u_i)
        } else {
            (self.j, &self.u_j)
        }
    }

    /// Index and multiplier of the other element.
    pub fn other_side(&self) -> (usize, &Monomial) {
        if self.sig_from_i {
            (self.j, &self.u_j)
        } else {
            (self.i, &self.u_i)
        }
    }
}

/// Builds the pair `(basis[i], basis[j])`; both must be nonzero.
pub fn make_pair(
    i: usize,
    j: usize,
    basis: &[LabeledPolynomial],
    spec: &SigOrderSpec,
    entry_seq: u64,
) -> Result<CriticalPair, NonMinimal> {
    let (f, g) = (&basis[i], &basis[j]);
    let lf = f.lm().expect("pair of a zero polynomial");
    let lg = g.lm().expect("pair of a zero polynomial");
    let lcm = lf.lcm(lg);
    let u_i = lcm.div_unchecked(lf);
    let u_j = lcm.div_unchecked(lg);
    let sig_from_i = match spec.cmp(&f.sig.mul(&u_i), &g.sig.mul(&u_j)) {
        Ordering::Equal => return Err(NonMinimal),
        Ordering::Greater => true,
        Ordering::Less => false,
    };
    let (pair_sig, sig_deg) = if sig_from_i {
        (f.sig.mul(&u_i), u_i.deg() + f.sigdeg())
    } else {
        (g.sig.mul(&u_j), u_j.deg() + g.sigdeg())
    };
    let sugar = sugar_of_sum(sugar_of_mul(&u_i, f.sugar), sugar_of_mul(&u_j, g.sugar));
    Ok(CriticalPair {
        i,
        j,
        pair_deg: lcm.deg(),
        lcm,
        u_i,
        u_j,
        pair_sig,
        sig_from_i,
        sig_deg,
        sugar,
        entry_seq,
    })
}

/// `(pair_sig, lc(g) u_f f - lc(f) u_g g)` for the older element `f = basis[j]`
/// and the newer `g = basis[i]`.
pub fn spoly(ring: &Ring, pair: &CriticalPair, basis: &[LabeledPolynomial]) -> LabeledPolynomial {
    let (f, g) = (&basis[pair.i], &basis[pair.j]);
    let lcf = f.poly.lc().expect("nonzero");
    let lcg = g.poly.lc().expect("nonzero");
    let poly: Polynomial = g.poly.mul_term(ring, lcf, &pair.u_j).axpy(ring, lcg, &pair.u_i, &f.poly);
    let src = if pair.sig_from_i { f } else { g };
    LabeledPolynomial { sig: pair.pair_sig.clone(), poly, sugar: pair.sugar, gen_deg: src.gen_deg }
}
