//! The lexicographic product and the wreath product with Z.

use std::collections::BTreeMap;

use fnz::checker::laws::{check_laws, periodic_laws};
use fnz::checker::{check_equation, Bounds, Tails, Verdict, WreathBounds};
use fnz::models::{LexModel, LocalFamily, WreathElement, WreathModel};
use fnz::terms::{axiom_commute, Equation, Model};
use fnz::{PeriodicMap, Result};

fn main() -> Result<()> {
    let lex = LexModel::new(1, 2);
    let lb = Bounds { h: 1, lex: 1, ..Bounds::default() };
    let eq = axiom_commute(2);
    println!("{}", show(&lex, &eq, &check_equation(&eq, &lex, &lb)?));

    let a: PeriodicMap = "F2:[1,1]".parse()?;
    let b: PeriodicMap = "F2:[0,2]".parse()?;
    let w = WreathElement::new(1, LocalFamily::new(a.clone(), b.clone(), BTreeMap::from([(0, b.clone())]))?);
    let u = WreathElement::new(0, LocalFamily::constant(a));
    println!("\nw        = {w}");
    println!("u        = {u}");
    println!("w u      = {}", w.mul(&u)?);
    println!("w^l      = {}", w.resl());
    println!("w^[1]    = {}", w.conj_shift(1));
    println!("per(u)   = {}", u.per());

    let wm = WreathModel::new(2);
    let wb = Bounds {
        h: 1,
        wreath: WreathBounds { window: 2, global: 1, max_exceptions: 1, tails: Tails::Shared },
        ..Bounds::default()
    };
    println!("\n{}", show(&wm, &eq, &check_equation(&eq, &wm, &wb)?));
    let outcomes = check_laws(&wm, periodic_laws(2), &wb, 1)?;
    let held = outcomes.iter().filter(|o| o.verdict.holds()).count();
    println!("unary periodic laws holding in {}: {held}/{}", wm.name(), outcomes.len());
    Ok(())
}

fn show<M: Model>(model: &M, eq: &Equation, v: &Verdict<M::Elem>) -> String {
    match v {
        Verdict::Counterexample(c) => format!("{eq}\n  counterexample in {}: {}", model.name(), c.describe(model, eq)),
        Verdict::HoldsWithinBounds(s) => format!("{eq}\n  holds: {} assignments over {} elements", s.assignments, s.universe),
    }
}
