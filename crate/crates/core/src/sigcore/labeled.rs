use super::Signature;
use crate::polyring::{Monomial, Polynomial};

/// A polynomial together with a signature, its tracked sugar degree and the
/// degree of the generator its signature points at.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledPolynomial {
    pub sig: Signature,
    pub poly: Polynomial,
    pub sugar: u32,
    /// `deg(f_idx)` for `sig = t * e_idx`.
    pub gen_deg: u32,
}

impl LabeledPolynomial {
    /// The initial element `(e_idx, f)`.
    pub fn generator(nvars: usize, idx: usize, f: Polynomial) -> Self {
        let d = f.deg().max(0) as u32;
        LabeledPolynomial { sig: Signature::new(Monomial::one(nvars), idx), poly: f, sugar: d, gen_deg: d }
    }

    /// `deg(t) + deg(f_idx)` for `sig = t * e_idx`.
    #[inline]
    pub fn sigdeg(&self) -> u32 {
        self.sig.mono.deg() + self.gen_deg
    }

    #[inline]
    pub fn lm(&self) -> Option<&Monomial> {
        self.poly.lm()
    }
}

/// Sugar of a sum: the larger sugar.
#[inline]
pub fn sugar_of_sum(a: u32, b: u32) -> u32 {
    a.max(b)
}

/// Sugar of `t * f`.
#[inline]
pub fn sugar_of_mul(t: &Monomial, a: u32) -> u32 {
    t.deg() + a
}
