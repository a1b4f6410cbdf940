//! Bounded search for counterexamples, exhaustive and seeded.

use fnz::checker::{check_equation, Bounds, Verdict};
use fnz::models::FnModel;
use fnz::terms::{axiom_commute, axiom_periodic, parse_equation, Equation, Model};
use fnz::Result;

fn main() -> Result<()> {
    let m3 = FnModel::new(3);
    for eq in [axiom_periodic(2), axiom_periodic(3), axiom_commute(3)] {
        let v = check_equation(&eq, &m3, &Bounds::exhaustive(2))?;
        println!("{}", show(&m3, &eq, &v));
    }

    let eq = parse_equation("x y = y x")?;
    let m2 = FnModel::new(2);
    let sampled = check_equation(&eq, &m2, &Bounds::random(2, 1000, 42))?;
    println!("{}", show(&m2, &eq, &sampled));

    let threaded = Bounds { threads: 4, ..Bounds::exhaustive(2) };
    let eq = parse_equation("x (y | z) = x y | x z")?;
    println!("{}", show(&m2, &eq, &check_equation(&eq, &m2, &threaded)?));
    Ok(())
}

fn show<M: Model>(model: &M, eq: &Equation, v: &Verdict<M::Elem>) -> String {
    match v {
        Verdict::Counterexample(c) => format!("{eq}\n  counterexample in {}: {}", model.name(), c.describe(model, eq)),
        Verdict::HoldsWithinBounds(s) => format!("{eq}\n  holds: {} assignments over {} elements", s.assignments, s.universe),
    }
}
