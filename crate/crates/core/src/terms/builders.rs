//! Derived term symbols, expanded into basic operations.

use super::ast::{Equation, Term};
use crate::error::{Error, Result};

/// `t^(l^k)` for `k >= 0`, `t^(r^-k)` for `k < 0`.
pub fn iter_l(t: &Term, k: i64) -> Term {
    let mut out = t.clone();
    for _ in 0..k.unsigned_abs() {
        out = if k > 0 { out.resl() } else { out.resr() };
    }
    out
}

/// `t^[k] = t^(l^2k)`.
pub fn bracket(t: &Term, k: i64) -> Term {
    iter_l(t, 2 * k)
}

fn fold_brackets(n: usize, t: &Term, op: fn(Term, Term) -> Term) -> Term {
    assert!(n >= 1, "index must be at least 1");
    (1..n as i64).fold(t.clone(), |acc, k| op(acc, bracket(t, k)))
}

/// `t ∧ t^[1] ∧ ... ∧ t^[n-1]`.
pub fn sigma_term(n: usize, t: &Term) -> Term {
    fold_brackets(n, t, Term::meet)
}

/// `t ∨ t^[1] ∨ ... ∨ t^[n-1]`.
pub fn gamma_term(n: usize, t: &Term) -> Term {
    fold_brackets(n, t, Term::join)
}

/// `t^lll t ∨ 1`.
pub fn delta_term(t: &Term) -> Term {
    iter_l(t, 3).mul(t.clone()).join(Term::One)
}

/// `sigma_n(t)^l ∨ gamma_n(t)`; the inverse of an invertible element is its residual.
pub fn norm_term(n: usize, t: &Term) -> Term {
    sigma_term(n, t).resl().join(gamma_term(n, t))
}

/// Left conjugate `b^r a b ∧ 1`.
pub fn conj(a: &Term, b: &Term) -> Term {
    b.clone().resr().mul(a.clone()).mul(b.clone()).meet(Term::One)
}

/// `t t ... t` (`k >= 1` factors); `1` for `k = 0`.
pub fn power(t: &Term, k: usize) -> Term {
    if k == 0 {
        return Term::One;
    }
    (1..k).fold(t.clone(), |acc, _| acc.mul(t.clone()))
}

/// `x sigma_n(y)^n = sigma_n(y)^n x`.
pub fn axiom_commute(n: usize) -> Equation {
    let s = power(&sigma_term(n, &Term::var("y")), n);
    Equation::eq(Term::var("x").mul(s.clone()), s.mul(Term::var("x")))
}

/// `x <= x^[n]`.
pub fn axiom_periodic(n: usize) -> Equation {
    Equation::leq(Term::var("x"), bracket(&Term::var("x"), n as i64))
}

/// Single inequality `1 <= u` axiomatizing the join of the varieties of
/// `F_k(Z)` for `k` in `ks`. Uses variables `w_k, x_k, y_k, z_k` per `k`.
pub fn axiom_join(ks: &[usize]) -> Result<Equation> {
    let mut ks = ks.to_vec();
    ks.sort_unstable();
    ks.dedup();
    if ks.is_empty() {
        return Err(Error::EmptySet);
    }
    if ks.contains(&0) {
        return Err(Error::PreconditionFailed("indices must be positive".into()));
    }
    let disjuncts = ks.iter().map(|&k| {
        let var = |c: &str| Term::var(format!("{c}{k}"));
        let (w, x, y, z) = (var("w"), var("x"), var("y"), var("z"));
        let periodic = bracket(&z, k as i64).mul(z.resl());
        let s = sigma_term(k, &y);
        let commute = power(&s, k)
            .mul(x.clone())
            .mul(power(&s.resl(), k))
            .mul(x.resl());
        w.clone().mul(periodic.meet(commute)).mul(w.resl())
    });
    let rhs = disjuncts.reduce(Term::join).expect("nonempty");
    Ok(Equation::leq(Term::One, rhs))
}
