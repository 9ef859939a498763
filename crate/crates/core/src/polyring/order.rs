use core::cmp::Ordering;

use super::Monomial;
use crate::Error;

/// Admissible orderings on monomials.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Degree first, then the monomial with the smaller exponent in the last
    /// differing variable is larger.
    #[default]
    Grevlex,
    /// First differing exponent decides, larger exponent is larger.
    Lex,
}

impl MonomialOrder {
    pub fn is_degree_compatible(self) -> bool {
        matches!(self, MonomialOrder::Grevlex)
    }

    pub fn name(self) -> &'static str {
        match self {
            MonomialOrder::Grevlex => "grevlex",
            MonomialOrder::Lex => "lex",
        }
    }

    #[inline]
    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        match self {
            MonomialOrder::Grevlex => a.deg().cmp(&b.deg()).then_with(|| {
                for (x, y) in a.exps().iter().zip(b.exps()).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
            MonomialOrder::Lex => a.exps().cmp(b.exps()),
        }
    }

    /// Like [`MonomialOrder::cmp`] but reports mismatched dimensions.
    pub fn try_cmp(self, a: &Monomial, b: &Monomial) -> Result<Ordering, Error> {
        if a.nvars() != b.nvars() {
            return Err(Error::DimensionMismatch { expected: a.nvars(), found: b.nvars() });
        }
        Ok(self.cmp(a, b))
    }

    /// Appends a key to `out` whose lexicographic order matches this ordering.
    pub fn push_key(self, m: &Monomial, out: &mut impl Extend<i32>) {
        match self {
            MonomialOrder::Grevlex => {
                out.extend(core::iter::once(m.deg() as i32));
                out.extend(m.exps().iter().rev().map(|&e| -i32::from(e)));
            }
            MonomialOrder::Lex => out.extend(m.exps().iter().map(|&e| i32::from(e))),
        }
    }
}
