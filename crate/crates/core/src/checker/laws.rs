//! Equational laws of `n`-periodic l-pregroups, stated as terms so they can be
//! checked in any model.

use super::{check_equation, Bounds, Universe, Verdict};
use crate::error::Result;
use crate::terms::{
    axiom_commute, bracket, conj, gamma_term, norm_term, parse_equation, sigma_term, Equation, Term,
};

/// Where a law is expected to hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    /// Every `n`-periodic l-pregroup.
    Periodic,
    /// Only the variety generated by `F_n(Z)`; the wreath model violates it.
    FnVariety,
}

#[derive(Debug, Clone)]
pub struct Law {
    pub name: String,
    pub equation: Equation,
    pub scope: Scope,
}

impl Law {
    pub fn arity(&self) -> usize {
        self.equation.vars().len()
    }
}

fn law(name: &str, src: &str) -> Law {
    law_eq(name, parse_equation(src).expect("law text parses"))
}

fn law_eq(name: &str, equation: Equation) -> Law {
    Law { name: name.into(), equation, scope: Scope::Periodic }
}

/// The law suite for `n`-periodic l-pregroups.
pub fn laws(n: usize) -> Vec<Law> {
    let x = Term::var("x");
    let y = Term::var("y");
    let s = |t: &Term| sigma_term(n, t);
    let g = |t: &Term| gamma_term(n, t);
    let nm = |t: &Term| norm_term(n, t);
    let xy = x.clone().mul(y.clone());
    let mut out = vec![
        law("adjunction/l-below", "x^l x <= 1"),
        law("adjunction/l-above", "1 <= x x^l"),
        law("adjunction/r-below", "x x^r <= 1"),
        law("adjunction/r-above", "1 <= x^r x"),
        law("involution/lr", "x^lr = x"),
        law("involution/rl", "x^rl = x"),
        law("antihomomorphism/l", "(x y)^l = y^l x^l"),
        law("antihomomorphism/r", "(x y)^r = y^r x^r"),
        law("de-morgan/l-join", "(x | y)^l = x^l & y^l"),
        law("de-morgan/l-meet", "(x & y)^l = x^l | y^l"),
        law("de-morgan/r-join", "(x | y)^r = x^r & y^r"),
        law("de-morgan/r-meet", "(x & y)^r = x^r | y^r"),
        law("monoid/associativity", "x (y z) = (x y) z"),
        law("distributivity/left-join", "x (y | z) = x y | x z"),
        law("distributivity/right-join", "(y | z) x = y x | z x"),
        law("distributivity/left-meet", "x (y & z) = x y & x z"),
        law("distributivity/right-meet", "(y & z) x = y x & z x"),
        law("distributivity/lattice", "x & (y | z) = (x & y) | (x & z)"),
        law("bracket/mul", "(x y)^ll = x^ll y^ll"),
        law("bracket/meet", "(x & y)^ll = x^ll & y^ll"),
        law("bracket/join", "(x | y)^ll = x^ll | y^ll"),
        law_eq("bracket/l", Equation::eq(bracket(&x.clone().resl(), 1), bracket(&x, 1).resl())),
        law_eq("bracket/periodic", Equation::eq(bracket(&x, n as i64), x.clone())),
        Law { name: "skeleton-power/central".into(), equation: axiom_commute(n), scope: Scope::FnVariety },
        law_eq("sigma/deflationary", Equation::leq(s(&x), x.clone())),
        law_eq("sigma/idempotent", Equation::eq(s(&s(&x)), s(&x))),
        law_eq("sigma/conucleus", Equation::leq(s(&x).mul(s(&y)), s(&xy))),
        law_eq("sigma/meet", Equation::eq(s(&x.clone().meet(y.clone())), s(&x).meet(s(&y)))),
        law_eq("sigma/invertible", Equation::eq(s(&x).resl(), s(&x).resr())),
        law_eq("gamma/inflationary", Equation::leq(x.clone(), g(&x))),
        law_eq("gamma/idempotent", Equation::eq(g(&g(&x)), g(&x))),
        law_eq("gamma/submultiplicative", Equation::leq(g(&xy), g(&x).mul(g(&y)))),
        law_eq("gamma/join", Equation::eq(g(&x.clone().join(y.clone())), g(&x).join(g(&y)))),
        law_eq("gamma/invertible", Equation::eq(g(&x).resl(), g(&x).resr())),
        law_eq("duality/gamma-of-l", Equation::eq(g(&x.clone().resl()), s(&x).resl())),
        law_eq("duality/sigma-of-l", Equation::eq(s(&x.clone().resl()), g(&x).resl())),
        law_eq("norm/above-inverse", Equation::leq(nm(&x).resl(), x.clone())),
        law_eq("norm/above", Equation::leq(x.clone(), nm(&x))),
        law_eq("norm/positive", Equation::leq(Term::One, nm(&x))),
        law_eq("norm/l", Equation::eq(nm(&x.clone().resl()), nm(&x))),
        law_eq("norm/r", Equation::eq(nm(&x.clone().resr()), nm(&x))),
        law_eq("norm/meet", Equation::leq(nm(&x.clone().meet(y.clone())), nm(&x).join(nm(&y)))),
        law_eq("norm/join", Equation::leq(nm(&x.clone().join(y.clone())), nm(&x).join(nm(&y)))),
        law_eq("norm/mul", Equation::leq(nm(&xy), nm(&x).mul(nm(&y)).mul(nm(&x)))),
    ];
    let z = Term::var("z");
    out.push(law_eq(
        "conjugate/iterated",
        Equation::eq(conj(&conj(&x, &y), &z), conj(&x, &y.clone().mul(z.clone()))),
    ));
    out.push(law_eq(
        "conjugate/right-as-left",
        Equation::eq(
            y.clone().mul(x.clone()).mul(y.clone().resl()).meet(Term::One),
            conj(&x, &y.resl()),
        ),
    ));
    out
}

/// Outcome of one law.
#[derive(Debug, Clone)]
pub struct LawOutcome<E> {
    pub law: Law,
    pub verdict: Verdict<E>,
}

/// The laws of [`laws`] that hold in every `n`-periodic l-pregroup.
pub fn periodic_laws(n: usize) -> Vec<Law> {
    laws(n).into_iter().filter(|l| l.scope == Scope::Periodic).collect()
}

/// Checks every law in `laws` with at most `max_arity` variables.
pub fn check_laws<M: Universe>(
    model: &M,
    laws: Vec<Law>,
    bounds: &Bounds,
    max_arity: usize,
) -> Result<Vec<LawOutcome<M::Elem>>> {
    laws.into_iter()
        .filter(|l| l.arity() <= max_arity)
        .map(|law| {
            let verdict = check_equation(&law.equation, model, bounds)?;
            Ok(LawOutcome { law, verdict })
        })
        .collect()
}
