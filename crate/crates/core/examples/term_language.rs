//! Parsing terms with macros and evaluating them in different models.

use std::collections::BTreeMap;

use fnz::models::{FnModel, LexElement, LexModel};
use fnz::terms::{eval, parse, parse_equation, Model};
use fnz::{PeriodicMap, Result};

fn main() -> Result<()> {
    let model = FnModel::new(3);
    let env = BTreeMap::from([
        ("x".to_string(), "F3:[1,1,4]".parse::<PeriodicMap>()?),
        ("y".to_string(), "F3:[0,2,2]".parse::<PeriodicMap>()?),
    ]);
    for src in ["x y", "(x | y)^l", "sigma_3(x)", "gamma_3(x) & y", "delta(x)", "sh(x, 2)", "conj(x, y)"] {
        let t = parse(src)?;
        println!("{src:<16} {:<40} = {}", t.to_string(), eval(&t, &model, &env)?);
    }

    let eq = parse_equation("x (y | z) = x y | x z")?;
    println!("\n{eq}\n  normalized: 1 <= {}", eq.normalize());

    let lex = LexModel::new(1, 2);
    let env = BTreeMap::from([
        ("x".to_string(), "Lex[1]:F2:[1,1]".parse::<LexElement>()?),
        ("y".to_string(), "Lex[-3]:F2:[0,2]".parse::<LexElement>()?),
    ]);
    println!("\nin {}: x y = {}", lex.name(), eval(&parse("x y")?, &lex, &env)?);
    Ok(())
}
