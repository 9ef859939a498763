//! Arithmetic in GF(p).

use core::fmt;

use crate::Error;

/// A canonical residue in `[0, p)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElem(u32);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    #[inline]
    pub fn value(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// The prime field GF(p) with `2 < p < 2^31`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    p: u32,
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec { p: Self::DEFAULT_PRIME }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let p = u64::from(p);
    let mut d = 3u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl FieldSpec {
    pub const DEFAULT_PRIME: u32 = 32003;

    pub fn new(p: u64) -> Result<Self, Error> {
        if p <= 2 || p >= 1 << 31 {
            return Err(Error::ModulusOutOfRange(p));
        }
        let p = p as u32;
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec { p })
    }

    #[inline]
    pub fn modulus(&self) -> u32 {
        self.p
    }

    /// Reduces an unsigned integer into the field.
    #[inline]
    pub fn elem(&self, v: u64) -> FieldElem {
        FieldElem((v % u64::from(self.p)) as u32)
    }

    /// Reduces a signed integer into the field.
    #[inline]
    pub fn from_i64(&self, v: i64) -> FieldElem {
        FieldElem(v.rem_euclid(i64::from(self.p)) as u32)
    }

    #[inline]
    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let s = a.0 + b.0;
        FieldElem(if s >= self.p { s - self.p } else { s })
    }

    #[inline]
    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        FieldElem(if a.0 >= b.0 { a.0 - b.0 } else { a.0 + self.p - b.0 })
    }

    #[inline]
    pub fn neg(&self, a: FieldElem) -> FieldElem {
        FieldElem(if a.0 == 0 { 0 } else { self.p - a.0 })
    }

    #[inline]
    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        FieldElem(((u64::from(a.0) * u64::from(b.0)) % u64::from(self.p)) as u32)
    }

    pub fn arith(&self, a: FieldElem, b: FieldElem, op: ArithOp) -> FieldElem {
        match op {
            ArithOp::Add => self.add(a, b),
            ArithOp::Sub => self.sub(a, b),
            ArithOp::Mul => self.mul(a, b),
        }
    }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    pub fn inv(&self, a: FieldElem) -> Result<FieldElem, Error> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let (mut r0, mut r1) = (i64::from(self.p), i64::from(a.0));
        let (mut s0, mut s1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1);
        Ok(self.from_i64(s0))
    }

    /// `a / b`; panics when `b` is zero.
    #[inline]
    pub fn div(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.mul(a, self.inv(b).expect("division by zero in GF(p)"))
    }
}
