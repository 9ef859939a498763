use core::fmt;

use smallvec::SmallVec;

use crate::Error;

pub type Exponent = u16;

type Exps = SmallVec<[Exponent; 16]>;

/// An exponent vector with cached total degree.
///
/// `mask` has bit `i % 64` set when variable `i` occurs; it only serves as
/// a quick divisibility pre-check.
#[derive(PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exps,
    deg: u32,
    mask: u64,
}

impl Clone for Monomial {
    #[inline]
    fn clone(&self) -> Self {
        Monomial { exps: Exps::from_slice(&self.exps), deg: self.deg, mask: self.mask }
    }
}

fn mask_of(exps: &[Exponent]) -> u64 {
    exps.iter().enumerate().filter(|(_, &e)| e > 0).fold(0, |m, (i, _)| m | 1u64 << (i % 64))
}

impl Monomial {
    fn build(exps: Exps) -> Self {
        let deg = exps.iter().map(|&e| u32::from(e)).sum();
        let mask = mask_of(&exps);
        Monomial { exps, deg, mask }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial { exps: smallvec::smallvec![0; nvars], deg: 0, mask: 0 }
    }

    pub fn from_exps(exps: &[Exponent]) -> Self {
        Self::build(Exps::from_slice(exps))
    }

    pub fn var(nvars: usize, i: usize, k: Exponent) -> Self {
        let mut exps: Exps = smallvec::smallvec![0; nvars];
        exps[i] = k;
        Self::build(exps)
    }

    #[inline]
    pub fn exps(&self) -> &[Exponent] {
        &self.exps
    }

    #[inline]
    pub fn deg(&self) -> u32 {
        self.deg
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn try_mul(&self, other: &Monomial) -> Result<Monomial, Error> {
        if self.nvars() != other.nvars() {
            return Err(Error::DimensionMismatch { expected: self.nvars(), found: other.nvars() });
        }
        let mut exps = Exps::with_capacity(self.nvars());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_add(*b).ok_or(Error::ExponentOverflow)?);
        }
        Ok(Monomial { exps, deg: self.deg + other.deg, mask: self.mask | other.mask })
    }

    /// Product; panics on exponent overflow.
    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        let mut exps = Exps::from_slice(&self.exps);
        for (a, b) in exps.iter_mut().zip(&other.exps) {
            *a = a.checked_add(*b).expect("exponent overflow");
        }
        Monomial { exps, deg: self.deg + other.deg, mask: self.mask | other.mask }
    }

    /// True iff `self` divides `other`.
    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.mask & !other.mask == 0
            && self.deg <= other.deg
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(self.div_unchecked(other))
    }

    #[inline]
    pub(crate) fn div_unchecked(&self, other: &Monomial) -> Monomial {
        let mut exps = Exps::from_slice(&self.exps);
        for (a, b) in exps.iter_mut().zip(&other.exps) {
            *a -= b;
        }
        Self::build(exps)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect();
        Self::build(exps)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.mask & other.mask == 0 || self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Copy with one more variable of exponent `k` appended.
    pub(crate) fn extend_by(&self, k: Exponent) -> Monomial {
        let mut exps = self.exps.clone();
        exps.push(k);
        Self::build(exps)
    }

    /// Copy with the last variable dropped.
    pub(crate) fn drop_last(&self) -> Monomial {
        let mut exps = self.exps.clone();
        exps.pop();
        Self::build(exps)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())
    }
}
