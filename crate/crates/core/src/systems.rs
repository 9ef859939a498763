//! Standard benchmark systems (Cyclic-n, Katsura-n, Eco-n).

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::polyring::{Monomial, MonomialOrder, Polynomial, Ring, Term};
use crate::FieldSpec;

/// A named polynomial system with variable names for I/O.
#[derive(Clone, Debug)]
pub struct System {
    pub name: String,
    pub ring: Ring,
    pub vars: Vec<String>,
    pub polys: Vec<Polynomial>,
}

fn ring_for(n: usize, field: FieldSpec, order: MonomialOrder) -> Ring {
    Ring::new(n, field, order)
}

/// Cyclic-n: `sum_i prod_{j=i}^{i+k-1} x_j` for `k < n` (indices mod n),
/// and `x_1 ... x_n - 1`.
pub fn cyclic(n: usize, field: FieldSpec, order: MonomialOrder) -> System {
    assert!(n >= 2, "cyclic needs n >= 2");
    let ring = ring_for(n, field, order);
    let mut polys = Vec::with_capacity(n);
    for k in 1..n {
        let terms = (0..n).map(|i| {
            let mut e = alloc::vec![0u16; n];
            for j in i..i + k {
                e[j % n] += 1;
            }
            Term::new(Monomial::from_exps(&e), field.elem(1))
        });
        polys.push(Polynomial::from_terms(&ring, terms));
    }
    let all = Monomial::from_exps(&alloc::vec![1u16; n]);
    polys.push(Polynomial::from_terms(
        &ring,
        [Term::new(all, field.elem(1)), Term::new(ring.one(), field.from_i64(-1))],
    ));
    let vars = (1..=n).map(|i| format!("x{i}")).collect();
    System { name: format!("cyclic-{n}"), ring, vars, polys }
}

/// Katsura-n in `u_0..u_n`: `sum_{k=-n}^{n} u_|k| u_|m-k| - u_m` for
/// `m < n` (with `u_i = 0` for `i > n`), and `sum_{k=-n}^{n} u_|k| - 1`.
pub fn katsura(n: usize, field: FieldSpec, order: MonomialOrder) -> System {
    assert!(n >= 1, "katsura needs n >= 1");
    let nv = n + 1;
    let ring = ring_for(nv, field, order);
    let n_i = n as i64;
    let mut polys = Vec::with_capacity(nv);
    for m in 0..n_i {
        let mut terms = Vec::new();
        for k in -n_i..=n_i {
            let (a, b) = (k.unsigned_abs() as usize, (m - k).unsigned_abs() as usize);
            if a > n || b > n {
                continue;
            }
            let mut e = alloc::vec![0u16; nv];
            e[a] += 1;
            e[b] += 1;
            terms.push(Term::new(Monomial::from_exps(&e), field.elem(1)));
        }
        terms.push(Term::new(ring.var(m as usize, 1), field.from_i64(-1)));
        polys.push(Polynomial::from_terms(&ring, terms));
    }
    let mut terms: Vec<Term> =
        (-n_i..=n_i).map(|k| Term::new(ring.var(k.unsigned_abs() as usize, 1), field.elem(1))).collect();
    terms.push(Term::new(ring.one(), field.from_i64(-1)));
    polys.push(Polynomial::from_terms(&ring, terms));
    let vars = (0..nv).map(|i| format!("u{i}")).collect();
    System { name: format!("katsura-{n}"), ring, vars, polys }
}

/// Eco-n in `x_1..x_n`: `(x_k + sum_{i=1}^{n-k-1} x_i x_{i+k}) x_n - k` for
/// `k = 1..n-2`, and `sum_{i<n} x_i + 1`.
pub fn eco(n: usize, field: FieldSpec, order: MonomialOrder) -> System {
    assert!(n >= 3, "eco needs n >= 3");
    let ring = ring_for(n, field, order);
    let last = n - 1;
    let mut polys = Vec::with_capacity(n - 1);
    for k in 1..=n - 2 {
        let mut terms = Vec::new();
        let mut e = alloc::vec![0u16; n];
        e[k - 1] = 1;
        e[last] = 1;
        terms.push(Term::new(Monomial::from_exps(&e), field.elem(1)));
        for i in 1..=n - k - 1 {
            let mut e = alloc::vec![0u16; n];
            e[i - 1] += 1;
            e[i + k - 1] += 1;
            e[last] += 1;
            terms.push(Term::new(Monomial::from_exps(&e), field.elem(1)));
        }
        terms.push(Term::new(ring.one(), field.from_i64(-(k as i64))));
        polys.push(Polynomial::from_terms(&ring, terms));
    }
    let mut terms: Vec<Term> = (0..last).map(|i| Term::new(ring.var(i, 1), field.elem(1))).collect();
    terms.push(Term::new(ring.one(), field.elem(1)));
    polys.push(Polynomial::from_terms(&ring, terms));
    let vars = (1..=n).map(|i| format!("x{i}")).collect();
    System { name: format!("eco-{n}"), ring, vars, polys }
}
