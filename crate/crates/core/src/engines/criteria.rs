//! The non-minimal-syzygy and rewritable criteria.

use alloc::vec::Vec;

use super::RewriteFlavor;
use crate::polyring::Monomial;
use crate::sigcore::{CriticalPair, LabeledPolynomial, SigOrderSpec, Signature};

/// `a | b * c` without forming the product.
#[inline]
fn divides_product(a: &Monomial, b: &Monomial, c: &Monomial) -> bool {
    a.deg() <= b.deg() + c.deg()
        && a.exps()
            .iter()
            .zip(b.exps().iter().zip(c.exps()))
            .all(|(x, (y, z))| u32::from(*x) <= u32::from(*y) + u32::from(*z))
}

/// Leading signatures of known syzygies, grouped by module index.
#[derive(Clone, Debug, Default)]
pub struct SyzygySet {
    per_index: Vec<Vec<Monomial>>,
    len: usize,
}

impl SyzygySet {
    pub fn new(ngens: usize) -> Self {
        SyzygySet { per_index: alloc::vec![Vec::new(); ngens], len: 0 }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Stores `sig` unless an existing entry already divides it.
    pub fn insert(&mut self, sig: &Signature) {
        if self.per_index.len() <= sig.idx {
            self.per_index.resize(sig.idx + 1, Vec::new());
        }
        let list = &mut self.per_index[sig.idx];
        if list.iter().any(|m| m.divides(&sig.mono)) {
            return;
        }
        list.push(sig.mono.clone());
        self.len += 1;
    }

    /// True iff some stored signature divides `sig`.
    pub fn covers(&self, sig: &Signature) -> bool {
        self.per_index.get(sig.idx).is_some_and(|l| l.iter().any(|m| m.divides(&sig.mono)))
    }

    /// Stores the principal syzygy signature of `r` and `h`, i.e. the larger
    /// of `lm(h) * sig(r)` and `lm(r) * sig(h)` when they differ.
    pub fn insert_koszul(&mut self, spec: &SigOrderSpec, r: &LabeledPolynomial, h: &LabeledPolynomial) {
        let (Some(lr), Some(lh)) = (r.lm(), h.lm()) else { return };
        let a = r.sig.mul(lh);
        let b = h.sig.mul(lr);
        match spec.cmp(&a, &b) {
            core::cmp::Ordering::Greater => self.insert(&a),
            core::cmp::Ordering::Less => self.insert(&b),
            core::cmp::Ordering::Equal => {}
        }
    }
}

/// Discard `pair` iff a known syzygy signature divides its signature.
pub fn criterion_nonminimal_syzygy(pair: &CriticalPair, syz: &SyzygySet) -> bool {
    syz.covers(&pair.pair_sig)
}

#[derive(Clone, Debug)]
struct Rule {
    mono: Monomial,
    id: u64,
    /// Basis element owning the rule; `None` for zero reductions.
    owner: Option<usize>,
}

/// Signatures in the order they were produced, per module index.
#[derive(Clone, Debug, Default)]
pub struct RewriteRules {
    per_index: Vec<Vec<Rule>>,
    /// Rule id of each basis element.
    element_rule: Vec<u64>,
    next_id: u64,
}

impl RewriteRules {
    pub fn new(ngens: usize) -> Self {
        RewriteRules { per_index: alloc::vec![Vec::new(); ngens], ..Default::default() }
    }

    fn push(&mut self, sig: &Signature, owner: Option<usize>) -> u64 {
        let id = self.next_id;
        self.next_id += 1;
        if self.per_index.len() <= sig.idx {
            self.per_index.resize(sig.idx + 1, Vec::new());
        }
        self.per_index[sig.idx].push(Rule { mono: sig.mono.clone(), id, owner });
        id
    }

    /// Records basis element `k`; elements must be added in basis order.
    pub fn add_element(&mut self, k: usize, sig: &Signature) {
        debug_assert_eq!(self.element_rule.len(), k);
        let id = self.push(sig, Some(k));
        self.element_rule.push(id);
    }

    /// Records the signature of a reduction to zero.
    pub fn add_zero(&mut self, sig: &Signature) {
        self.push(sig, None);
    }

    /// Is `u * sig(basis[k])` divisible by a rule newer than `basis[k]`?
    /// With `elements_only`, rules from zero reductions are ignored.
    fn rewritable(&self, k: usize, u: &Monomial, sig: &Signature, elements_only: bool) -> bool {
        let own = self.element_rule[k];
        let Some(list) = self.per_index.get(sig.idx) else { return false };
        list.iter()
            .rev()
            .take_while(|r| r.id > own)
            .filter(|r| !elements_only || r.owner.is_some())
            .any(|r| divides_product(&r.mono, u, &sig.mono))
    }
}

/// Discard `pair` iff its signature has a newer owner.
///
/// Arri–Perry flavor: a basis element inserted after the pair's signature
/// source whose signature divides the pair signature. F5 flavor: a rule
/// newer than either component dividing that component's multiplied
/// signature.
pub fn criterion_rewritable(
    pair: &CriticalPair,
    basis: &[LabeledPolynomial],
    rules: &RewriteRules,
    flavor: RewriteFlavor,
) -> bool {
    let (k, u) = pair.sig_source();
    match flavor {
        RewriteFlavor::ArriPerry => rules.rewritable(k, u, &basis[k].sig, true),
        RewriteFlavor::F5RuleList => {
            let (l, v) = pair.other_side();
            rules.rewritable(k, u, &basis[k].sig, false) || rules.rewritable(l, v, &basis[l].sig, false)
        }
    }
}
