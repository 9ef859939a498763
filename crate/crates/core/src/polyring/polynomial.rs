use alloc::vec::Vec;
use core::cmp::Ordering;

use super::{Monomial, Ring};
use crate::coeff::FieldElem;
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub mono: Monomial,
    pub coeff: FieldElem,
}

impl Term {
    pub fn new(mono: Monomial, coeff: FieldElem) -> Self {
        Term { mono, coeff }
    }
}

/// A sparse polynomial: terms sorted strictly decreasing under the ring's
/// ordering, no zero coefficients. The empty list is the zero polynomial.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn constant(ring: &Ring, c: FieldElem) -> Self {
        Self::from_terms(ring, [Term::new(ring.one(), c)])
    }

    pub fn monomial(mono: Monomial, c: FieldElem) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial { terms: alloc::vec![Term::new(mono, c)] }
    }

    /// Builds a normalized polynomial from arbitrary terms: sorts, merges
    /// equal monomials and drops zero coefficients.
    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = Term>) -> Self {
        let mut terms: Vec<Term> = terms.into_iter().collect();
        terms.sort_by(|a, b| ring.order.cmp(&b.mono, &a.mono));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.mono == t.mono => {
                    last.coeff = ring.field.add(last.coeff, t.coeff);
                }
                _ => {
                    if out.last().is_some_and(|l| l.coeff.is_zero()) {
                        out.pop();
                    }
                    out.push(t);
                }
            }
        }
        if out.last().is_some_and(|l| l.coeff.is_zero()) {
            out.pop();
        }
        Polynomial { terms: out }
    }

    /// Wraps terms that are already normalized (checked in debug builds).
    pub(crate) fn from_sorted(ring: &Ring, terms: Vec<Term>) -> Self {
        let p = Polynomial { terms };
        debug_assert!(p.is_valid(ring));
        p
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Leading monomial and coefficient.
    pub fn leading_term(&self) -> Result<(&Monomial, FieldElem), Error> {
        self.terms.first().map(|t| (&t.mono, t.coeff)).ok_or(Error::ZeroPolynomial)
    }

    #[inline]
    pub fn lm(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    #[inline]
    pub fn lc(&self) -> Option<FieldElem> {
        self.terms.first().map(|t| t.coeff)
    }

    /// Total degree; `-1` for the zero polynomial.
    pub fn deg(&self) -> i64 {
        self.terms.iter().map(|t| i64::from(t.mono.deg())).max().unwrap_or(-1)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].mono.deg() == w[1].mono.deg())
    }

    /// Structural invariant: strictly decreasing, nonzero coefficients,
    /// right dimension.
    pub fn is_valid(&self, ring: &Ring) -> bool {
        self.terms.iter().all(|t| {
            !t.coeff.is_zero() && t.coeff.value() < ring.field.modulus() && t.mono.nvars() == ring.nvars
        }) && self.terms.windows(2).all(|w| ring.order.cmp(&w[0].mono, &w[1].mono) == Ordering::Greater)
    }

    /// `c * t * self`.
    pub fn mul_term(&self, ring: &Ring, c: FieldElem, t: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        let terms = self.terms.iter().map(|s| Term::new(s.mono.mul(t), ring.field.mul(s.coeff, c))).collect();
        Polynomial { terms }
    }

    pub fn scale(&self, ring: &Ring, c: FieldElem) -> Polynomial {
        self.mul_term(ring, c, &ring.one())
    }

    /// Scales so the leading coefficient is one. Zero stays zero.
    pub fn monic(&self, ring: &Ring) -> Polynomial {
        match self.lc() {
            None => Polynomial::zero(),
            Some(c) if c == FieldElem::ONE => self.clone(),
            Some(c) => self.scale(ring, ring.field.inv(c).expect("nonzero lc")),
        }
    }

    /// `self - c * t * g`, merged in one pass.
    pub fn axpy(&self, ring: &Ring, c: FieldElem, t: &Monomial, g: &Polynomial) -> Polynomial {
        Polynomial { terms: axpy_terms(ring, self.terms.iter().cloned(), c, t, &g.terms) }
    }

    pub fn add(&self, ring: &Ring, other: &Polynomial) -> Polynomial {
        self.axpy(ring, ring.field.neg(FieldElem::ONE), &ring.one(), other)
    }

    pub fn sub(&self, ring: &Ring, other: &Polynomial) -> Polynomial {
        self.axpy(ring, FieldElem::ONE, &ring.one(), other)
    }
}

/// Merge kernel for `r - c * t * g` on sorted term slices.
pub(crate) fn axpy_terms(
    ring: &Ring,
    r: impl ExactSizeIterator<Item = Term>,
    c: FieldElem,
    t: &Monomial,
    g: &[Term],
) -> Vec<Term> {
    let mut out = Vec::new();
    axpy_into(ring, &mut out, r, c, t, g);
    out
}

/// As [`axpy_terms`], appending to `out` so callers can recycle buffers.
pub(crate) fn axpy_into(
    ring: &Ring,
    out: &mut Vec<Term>,
    r: impl ExactSizeIterator<Item = Term>,
    c: FieldElem,
    t: &Monomial,
    g: &[Term],
) {
    if c.is_zero() || g.is_empty() {
        out.extend(r);
        return;
    }
    let f = &ring.field;
    let negc = f.neg(c);
    out.reserve(r.len() + g.len());
    let mut ri = r.peekable();
    for gt in g {
        let m = gt.mono.mul(t);
        let coeff = f.mul(gt.coeff, negc);
        loop {
            match ri.peek() {
                Some(rt) => match ring.order.cmp(&rt.mono, &m) {
                    Ordering::Greater => out.extend(ri.next()),
                    Ordering::Equal => {
                        let s = f.add(rt.coeff, coeff);
                        if !s.is_zero() {
                            out.push(Term::new(m, s));
                        }
                        ri.next();
                        break;
                    }
                    Ordering::Less => {
                        out.push(Term::new(m, coeff));
                        break;
                    }
                },
                None => {
                    out.push(Term::new(m, coeff));
                    break;
                }
            }
        }
    }
    out.extend(ri);
}
