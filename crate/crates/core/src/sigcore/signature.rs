use alloc::vec::Vec;
use core::cmp::Ordering;

use smallvec::SmallVec;

use crate::polyring::{Monomial, MonomialOrder};
use crate::Error;

/// A module monomial `t * e_idx`. Indices are zero-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Signature {
    pub mono: Monomial,
    pub idx: usize,
}

impl Signature {
    pub fn new(mono: Monomial, idx: usize) -> Self {
        Signature { mono, idx }
    }

    /// `t * self`.
    pub fn mul(&self, t: &Monomial) -> Signature {
        Signature { mono: self.mono.mul(t), idx: self.idx }
    }

    /// Same index and monomial divisibility.
    #[inline]
    pub fn divides(&self, other: &Signature) -> bool {
        self.idx == other.idx && self.mono.divides(&other.mono)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum SigOrderKind {
    /// Position over term: index first, then the monomial.
    #[default]
    Pot,
    /// Compare `t * lm(f_i)` first, ties broken by the smaller index.
    Schreyer,
}

impl SigOrderKind {
    pub fn name(self) -> &'static str {
        match self {
            SigOrderKind::Pot => "pot",
            SigOrderKind::Schreyer => "schreyer",
        }
    }
}

/// Sort key whose lexicographic order is the signature order.
pub type SigKey = SmallVec<[i32; 24]>;

/// A module ordering on signatures.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigOrderSpec {
    pub kind: SigOrderKind,
    pub order: MonomialOrder,
    /// `lm(f_i)` for each generator; only consulted by the Schreyer ordering.
    pub lead_of_gen: Vec<Monomial>,
}

/// Compares the products of two small factor lists without materializing them.
fn cmp_prod(order: MonomialOrder, a: &[&Monomial], b: &[&Monomial]) -> Ordering {
    let exp = |fs: &[&Monomial], v: usize| fs.iter().map(|m| u32::from(m.exps()[v])).sum::<u32>();
    let n = a[0].nvars();
    match order {
        MonomialOrder::Grevlex => {
            let da: u32 = a.iter().map(|m| m.deg()).sum();
            let db: u32 = b.iter().map(|m| m.deg()).sum();
            da.cmp(&db).then_with(|| {
                for v in (0..n).rev() {
                    let (ea, eb) = (exp(a, v), exp(b, v));
                    if ea != eb {
                        return eb.cmp(&ea);
                    }
                }
                Ordering::Equal
            })
        }
        MonomialOrder::Lex => {
            for v in 0..n {
                let (ea, eb) = (exp(a, v), exp(b, v));
                if ea != eb {
                    return ea.cmp(&eb);
                }
            }
            Ordering::Equal
        }
    }
}

impl SigOrderSpec {
    pub fn pot(order: MonomialOrder) -> Self {
        SigOrderSpec { kind: SigOrderKind::Pot, order, lead_of_gen: Vec::new() }
    }

    pub fn schreyer(order: MonomialOrder, lead_of_gen: Vec<Monomial>) -> Result<Self, Error> {
        if lead_of_gen.is_empty() {
            return Err(Error::InvalidSchreyerData);
        }
        let n = lead_of_gen[0].nvars();
        if lead_of_gen.iter().any(|m| m.nvars() != n) {
            return Err(Error::InvalidSchreyerData);
        }
        Ok(SigOrderSpec { kind: SigOrderKind::Schreyer, order, lead_of_gen })
    }

    /// Builds the ordering of `kind` for generators with the given leads.
    pub fn for_generators(
        kind: SigOrderKind,
        order: MonomialOrder,
        leads: Vec<Monomial>,
    ) -> Result<Self, Error> {
        match kind {
            SigOrderKind::Pot => Ok(Self::pot(order)),
            SigOrderKind::Schreyer => Self::schreyer(order, leads),
        }
    }

    pub fn cmp(&self, a: &Signature, b: &Signature) -> Ordering {
        match self.kind {
            SigOrderKind::Pot => a.idx.cmp(&b.idx).then_with(|| self.order.cmp(&a.mono, &b.mono)),
            SigOrderKind::Schreyer => cmp_prod(
                self.order,
                &[&a.mono, &self.lead_of_gen[a.idx]],
                &[&b.mono, &self.lead_of_gen[b.idx]],
            )
            .then(a.idx.cmp(&b.idx)),
        }
    }

    /// Compares `t * a` with `b`.
    pub fn cmp_scaled(&self, t: &Monomial, a: &Signature, b: &Signature) -> Ordering {
        match self.kind {
            SigOrderKind::Pot => {
                a.idx.cmp(&b.idx).then_with(|| cmp_prod(self.order, &[t, &a.mono], &[&b.mono]))
            }
            SigOrderKind::Schreyer => cmp_prod(
                self.order,
                &[t, &a.mono, &self.lead_of_gen[a.idx]],
                &[&b.mono, &self.lead_of_gen[b.idx]],
            )
            .then(a.idx.cmp(&b.idx)),
        }
    }

    pub fn key(&self, s: &Signature) -> SigKey {
        let mut k = SigKey::new();
        match self.kind {
            SigOrderKind::Pot => {
                k.push(s.idx as i32);
                self.order.push_key(&s.mono, &mut k);
            }
            SigOrderKind::Schreyer => {
                self.order.push_key(&s.mono.mul(&self.lead_of_gen[s.idx]), &mut k);
                k.push(s.idx as i32);
            }
        }
        k
    }
}
