//! Strategies and checks shared by the property suites and the acceptance
//! run. Every check returns `Err` with a message instead of panicking.

#![allow(dead_code)]

use std::collections::BTreeMap;

use proptest::prelude::*;
use proptest::test_runner::TestCaseError;
use sigbasis_core::sigcore::{is_sig_redundant, sig_safe_reduce, ReduceOptions};
use sigbasis_core::*;

pub const PRIMES: [u64; 5] = [3, 7, 32003, 65521, 2_147_483_647];

pub type Exps = Vec<u16>;
pub type RawPoly = Vec<(i64, Exps)>;

fn fail(msg: String) -> Result<(), TestCaseError> {
    Err(TestCaseError::fail(msg))
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return fail(format!($($fmt)+));
        }
    };
}

// ---------------------------------------------------------------- field

pub fn field_triple() -> impl Strategy<Value = (u64, u64, u64, u64)> {
    prop::sample::select(PRIMES.to_vec()).prop_flat_map(|p| (Just(p), 0..p, 0..p, 0..p))
}

pub fn check_field_axioms((p, a, b, c): (u64, u64, u64, u64)) -> Result<(), TestCaseError> {
    let f = FieldSpec::new(p).unwrap();
    let (a, b, c) = (f.elem(a), f.elem(b), f.elem(c));
    let (zero, one) = (FieldElem::ZERO, FieldElem::ONE);
    ensure!(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)), "add not associative");
    ensure!(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)), "mul not associative");
    ensure!(f.add(a, b) == f.add(b, a) && f.mul(a, b) == f.mul(b, a), "not commutative");
    ensure!(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)), "not distributive");
    ensure!(f.add(a, zero) == a && f.mul(a, one) == a, "identity broken");
    ensure!(f.add(a, f.neg(a)) == zero, "additive inverse broken");
    ensure!(f.add(f.sub(a, b), b) == a, "sub is not add of neg");
    for v in [f.add(a, b), f.sub(a, b), f.mul(a, b), f.neg(a)] {
        ensure!((v.value() as u64) < p, "value {} escaped [0, {p})", v.value());
    }
    let want = (a.value() as u64 * b.value() as u64) % p;
    ensure!(f.mul(a, b).value() as u64 == want, "mul disagrees with u64 arithmetic");
    if a.is_zero() {
        ensure!(f.inv(a).is_err(), "inverse of zero must fail");
    } else {
        ensure!(f.mul(a, f.inv(a).unwrap()) == one, "a * inv(a) != 1");
    }
    Ok(())
}

// ------------------------------------------------------------- monomials

pub fn exps(n: usize, max: u16) -> impl Strategy<Value = Exps> {
    prop::collection::vec(0..=max, n)
}

pub fn monomial_triple() -> impl Strategy<Value = (Exps, Exps, Exps)> {
    (1usize..7).prop_flat_map(|n| (exps(n, 5), exps(n, 5), exps(n, 5)))
}

pub fn check_order_axioms((a, b, c): (Exps, Exps, Exps)) -> Result<(), TestCaseError> {
    let (a, b, c) = (Monomial::from_exps(&a), Monomial::from_exps(&b), Monomial::from_exps(&c));
    let one = Monomial::one(a.nvars());
    for ord in [MonomialOrder::Grevlex, MonomialOrder::Lex] {
        let ab = ord.cmp(&a, &b);
        ensure!(ab == ord.cmp(&b, &a).reverse(), "{ord:?} not antisymmetric");
        ensure!(ab.is_eq() == (a == b), "{ord:?} equality mismatch");
        if ab.is_le() && ord.cmp(&b, &c).is_le() {
            ensure!(ord.cmp(&a, &c).is_le(), "{ord:?} not transitive");
        }
        ensure!(ord.cmp(&a.mul(&c), &b.mul(&c)) == ab, "{ord:?} not multiplicative");
        ensure!(ord.cmp(&one, &a).is_le(), "{ord:?}: 1 is not minimal");
        if ord.is_degree_compatible() && a.deg() < b.deg() {
            ensure!(ab.is_lt(), "{ord:?} not degree compatible");
        }
        let (mut ka, mut kb) = (Vec::new(), Vec::new());
        ord.push_key(&a, &mut ka);
        ord.push_key(&b, &mut kb);
        ensure!(ka.cmp(&kb) == ab, "{ord:?} sort key disagrees with cmp");
    }
    ensure!(a.deg() == a.exps().iter().map(|&e| e as u32).sum::<u32>(), "cached degree is stale");
    let l = a.lcm(&b);
    ensure!(a.divides(&l) && b.divides(&l), "lcm is not a common multiple");
    ensure!(a.divides(&a.mul(&b)), "a does not divide a*b");
    ensure!(a.mul(&b).div(&b) == Some(a.clone()), "division does not undo multiplication");
    let exact = a.exps().iter().zip(b.exps()).all(|(x, y)| x <= y);
    ensure!(a.divides(&b) == exact, "divisibility mask gives a wrong answer");
    Ok(())
}

// ----------------------------------------------------------- polynomials

pub fn raw_poly(n: usize) -> impl Strategy<Value = RawPoly> {
    prop::collection::vec((-40i64..40, exps(n, 4)), 0..8)
}

pub fn poly_system() -> impl Strategy<Value = (usize, Vec<RawPoly>)> {
    (1usize..5).prop_flat_map(|n| (Just(n), prop::collection::vec(raw_poly(n), 1..5)))
}

pub fn build(ring: &Ring, raw: &RawPoly) -> Polynomial {
    Polynomial::from_terms(
        ring,
        raw.iter().map(|(c, e)| Term::new(Monomial::from_exps(e), ring.field.from_i64(*c))),
    )
}

pub fn check_homogenize_round_trip((n, raw): (usize, Vec<RawPoly>)) -> Result<(), TestCaseError> {
    for ord in [MonomialOrder::Grevlex, MonomialOrder::Lex] {
        let ring = Ring::new(n, FieldSpec::default(), ord);
        let polys: Vec<Polynomial> = raw.iter().map(|r| build(&ring, r)).collect();
        let (hr, hp) = homogenize(&ring, &polys);
        ensure!(hr.nvars == n + 1 && hr.homogenizing, "homogenized ring shape");
        for (f, h) in polys.iter().zip(&hp) {
            ensure!(h.is_valid(&hr), "homogenized polynomial not normalized");
            ensure!(h.is_homogeneous(), "output not homogeneous: {h:?}");
            ensure!(h.deg() == f.deg() && h.num_terms() == f.num_terms(), "degree or length changed");
        }
        let (br, back) = dehomogenize(&hr, &hp).unwrap();
        ensure!(br == ring, "ring did not round trip");
        ensure!(back == polys, "polynomials did not round trip");
    }
    Ok(())
}

/// Dense reference for `r - c * t * g`.
fn naive_axpy(p: u64, r: &RawPoly, c: i64, t: &Exps, g: &RawPoly) -> BTreeMap<Exps, u64> {
    let mut acc: BTreeMap<Exps, i64> = BTreeMap::new();
    for (k, e) in r {
        *acc.entry(e.clone()).or_default() += k;
    }
    for (k, e) in g {
        let m: Exps = e.iter().zip(t).map(|(a, b)| a + b).collect();
        *acc.entry(m).or_default() -= (c % p as i64) * k;
    }
    acc.into_iter().map(|(e, v)| (e, v.rem_euclid(p as i64) as u64)).filter(|(_, v)| *v != 0).collect()
}

pub fn axpy_case() -> impl Strategy<Value = (usize, RawPoly, i64, Exps, RawPoly)> {
    (1usize..5).prop_flat_map(|n| (Just(n), raw_poly(n), -10i64..10, exps(n, 3), raw_poly(n)))
}

pub fn check_axpy((n, r, c, t, g): (usize, RawPoly, i64, Exps, RawPoly)) -> Result<(), TestCaseError> {
    let p = 7;
    for ord in [MonomialOrder::Grevlex, MonomialOrder::Lex] {
        let ring = Ring::new(n, FieldSpec::new(p).unwrap(), ord);
        let out =
            build(&ring, &r).axpy(&ring, ring.field.from_i64(c), &Monomial::from_exps(&t), &build(&ring, &g));
        ensure!(out.is_valid(&ring), "axpy output not normalized: {out:?}");
        let got: BTreeMap<Exps, u64> =
            out.terms().iter().map(|t| (t.mono.exps().to_vec(), t.coeff.value() as u64)).collect();
        ensure!(got == naive_axpy(p, &r, c, &t, &g), "axpy disagrees with dense reference");
    }
    Ok(())
}

// ------------------------------------------------------------ signatures

#[derive(Clone, Debug)]
pub struct SigCase {
    pub n: usize,
    pub schreyer: bool,
    pub leads: Vec<Exps>,
    pub basis: Vec<(Exps, usize, RawPoly)>,
    pub f: (Exps, usize, RawPoly),
}

pub fn sig_case() -> impl Strategy<Value = SigCase> {
    (2usize..4).prop_flat_map(|n| {
        let lead = exps(n, 2).prop_map(|mut e| {
            e[0] += 1;
            e
        });
        let elem = move || (exps(n, 2), 0usize..3, raw_poly(n));
        (any::<bool>(), prop::collection::vec(lead, 3), prop::collection::vec(elem(), 0..6), elem())
            .prop_map(move |(schreyer, leads, basis, f)| SigCase { n, schreyer, leads, basis, f })
    })
}

fn spec_of(c: &SigCase) -> SigOrderSpec {
    let leads = c.leads.iter().map(|e| Monomial::from_exps(e)).collect();
    let kind = if c.schreyer { SigOrderKind::Schreyer } else { SigOrderKind::Pot };
    SigOrderSpec::for_generators(kind, MonomialOrder::Grevlex, leads).unwrap()
}

fn labeled(ring: &Ring, c: &SigCase, (s, idx, raw): &(Exps, usize, RawPoly)) -> LabeledPolynomial {
    let sig = Signature::new(Monomial::from_exps(s), *idx);
    let gen_deg = Monomial::from_exps(&c.leads[*idx]).deg();
    let poly = build(ring, raw);
    let sugar = (sig.mono.deg() + gen_deg).max(poly.deg().max(0) as u32);
    LabeledPolynomial { sig, poly, sugar, gen_deg }
}

/// Straightforward re-implementation of the scan rule: first divisor in
/// insertion order whose scaled signature is strictly smaller.
fn reference_reduce(
    ring: &Ring,
    f: &LabeledPolynomial,
    basis: &[LabeledPolynomial],
    spec: &SigOrderSpec,
    tail: bool,
) -> (Polynomial, u64, u64) {
    let (mut steps, mut rejected) = (0, 0);
    let mut kept: Vec<Term> = Vec::new();
    let mut p = f.poly.clone();
    'outer: while let Some(lt) = p.terms().first().cloned() {
        for g in basis {
            let Some(lg) = g.poly.lm() else { continue };
            let Some(t) = lt.mono.div(lg) else { continue };
            if spec.cmp(&g.sig.mul(&t), &f.sig).is_lt() {
                let c = ring.field.div(lt.coeff, g.poly.lc().unwrap());
                p = p.sub(ring, &g.poly.mul_term(ring, c, &t));
                steps += 1;
                continue 'outer;
            }
            rejected += 1;
        }
        if !tail {
            break;
        }
        kept.push(lt);
        p = Polynomial::from_terms(ring, p.terms()[1..].iter().cloned());
    }
    kept.extend(p.terms().iter().cloned());
    (Polynomial::from_terms(ring, kept), steps, rejected)
}

pub fn check_sig_safe_contract(c: SigCase) -> Result<(), TestCaseError> {
    let ring = Ring::new(c.n, FieldSpec::new(32003).unwrap(), MonomialOrder::Grevlex);
    let spec = spec_of(&c);
    let basis: Vec<LabeledPolynomial> = c.basis.iter().map(|e| labeled(&ring, &c, e)).collect();
    let f = labeled(&ring, &c, &c.f);
    for tail in [true, false] {
        let mut stats = RunStats::default();
        let opts = ReduceOptions { tail, scan: None };
        let out = sig_safe_reduce(&ring, f.clone(), &basis, &spec, opts, &mut stats);
        ensure!(out.sig == f.sig && out.gen_deg == f.gen_deg, "signature changed");
        ensure!(out.poly.is_valid(&ring), "result not normalized");
        if let (Some(a), Some(b)) = (out.poly.lm(), f.poly.lm()) {
            ensure!(ring.order.cmp(a, b).is_le(), "leading monomial increased");
        }
        ensure!(out.sugar >= f.sugar, "sugar decreased");
        if !out.poly.is_zero() {
            ensure!(out.sugar as i64 >= out.poly.deg(), "sugar below degree");
        }
        let (want, steps, rejected) = reference_reduce(&ring, &f, &basis, &spec, tail);
        ensure!(out.poly == want, "result differs from reference (tail={tail})");
        ensure!(stats.reduction_steps == steps, "step count {} != {steps}", stats.reduction_steps);
        ensure!(stats.higher_sig_detections == rejected, "rejection count differs");
        let checked: &[Term] =
            if tail { out.poly.terms() } else { &out.poly.terms()[..out.poly.num_terms().min(1)] };
        for term in checked {
            for g in &basis {
                let Some(t) = g.poly.lm().and_then(|lg| term.mono.div(lg)) else { continue };
                ensure!(!spec.cmp(&g.sig.mul(&t), &f.sig).is_lt(), "a sig-safe reducer was left unused");
            }
        }
    }
    Ok(())
}

pub fn sig_pair() -> impl Strategy<Value = (Vec<Exps>, Exps, usize, Exps, usize, Exps)> {
    (1usize..5).prop_flat_map(|n| {
        (prop::collection::vec(exps(n, 3), 3), exps(n, 3), 0usize..3, exps(n, 3), 0usize..3, exps(n, 2))
    })
}

pub fn check_signature_orders(
    (leads, a, ia, b, ib, t): (Vec<Exps>, Exps, usize, Exps, usize, Exps),
) -> Result<(), TestCaseError> {
    let leads: Vec<Monomial> = leads.iter().map(|e| Monomial::from_exps(e)).collect();
    let a = Signature::new(Monomial::from_exps(&a), ia);
    let b = Signature::new(Monomial::from_exps(&b), ib);
    let t = Monomial::from_exps(&t);
    for ord in [MonomialOrder::Grevlex, MonomialOrder::Lex] {
        for kind in [SigOrderKind::Pot, SigOrderKind::Schreyer] {
            let spec = SigOrderSpec::for_generators(kind, ord, leads.clone()).unwrap();
            let ab = spec.cmp(&a, &b);
            ensure!(ab == spec.cmp(&b, &a).reverse(), "{kind:?} not antisymmetric");
            ensure!(ab.is_eq() == (a == b), "{kind:?} equality mismatch");
            ensure!(spec.cmp_scaled(&t, &a, &b) == spec.cmp(&a.mul(&t), &b), "cmp_scaled disagrees");
            ensure!(spec.key(&a).cmp(&spec.key(&b)) == ab, "{kind:?} queue key disagrees with cmp");
            ensure!(spec.cmp(&a.mul(&t), &b.mul(&t)) == ab, "{kind:?} not multiplicative");
            if kind == SigOrderKind::Schreyer && ord == MonomialOrder::Grevlex && ab.is_lt() {
                let da = a.mono.deg() + leads[a.idx].deg();
                let db = b.mono.deg() + leads[b.idx].deg();
                ensure!(da <= db, "Schreyer/grevlex: smaller signature has larger sigdeg");
            }
        }
    }
    Ok(())
}

pub fn check_sig_redundant_monotone(c: SigCase) -> Result<(), TestCaseError> {
    let ring = Ring::new(c.n, FieldSpec::new(32003).unwrap(), MonomialOrder::Grevlex);
    let mut basis: Vec<LabeledPolynomial> = Vec::new();
    let r = labeled(&ring, &c, &c.f);
    let mut was = is_sig_redundant(&r, &basis);
    for e in &c.basis {
        basis.push(labeled(&ring, &c, e));
        let now = is_sig_redundant(&r, &basis);
        ensure!(!was || now, "growing the basis flipped redundancy off");
        was = now;
    }
    Ok(())
}
