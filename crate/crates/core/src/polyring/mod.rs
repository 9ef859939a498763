//! Monomials, monomial orderings, sparse polynomials and homogenization.

mod homogenize;
mod monomial;
mod order;
pub(crate) mod polynomial;

pub use homogenize::{dehomogenize, homogenize};
pub use monomial::{Exponent, Monomial};
pub use order::MonomialOrder;
pub use polynomial::{Polynomial, Term};

use crate::coeff::FieldSpec;

/// Ring context shared by all polynomials of a computation.
///
/// `homogenizing` marks rings produced by [`homogenize`]; their last
/// variable is the homogenizing one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ring {
    pub nvars: usize,
    pub field: FieldSpec,
    pub order: MonomialOrder,
    pub homogenizing: bool,
}

impl Ring {
    pub fn new(nvars: usize, field: FieldSpec, order: MonomialOrder) -> Self {
        Ring { nvars, field, order, homogenizing: false }
    }

    /// GF(32003) with grevlex, the usual benchmark setting.
    pub fn grevlex(nvars: usize) -> Self {
        Ring::new(nvars, FieldSpec::default(), MonomialOrder::Grevlex)
    }

    pub fn one(&self) -> Monomial {
        Monomial::one(self.nvars)
    }

    /// The monomial `x_i^k`.
    pub fn var(&self, i: usize, k: Exponent) -> Monomial {
        Monomial::var(self.nvars, i, k)
    }
}
