//! Generating an atom from an element of full periodicity, and joining
//! atoms of incomparable periods.

use fnz::{PeriodicMap, Result};

fn main() -> Result<()> {
    let f: PeriodicMap = "F6:[2,2,2,4,5,5]".parse()?;
    let trace = f.generate_atom()?;
    println!("input        {}", trace.input);
    for stage in &trace.stages {
        match stage.final_periodicity {
            Some(k) => println!("{:<12} {}  final periodicity {k}", stage.label, stage.map),
            None => println!("{:<12} {}", stage.label, stage.map),
        }
    }

    let a = PeriodicMap::atom(4, 1);
    let b = PeriodicMap::atom(6, 2);
    let j = PeriodicMap::atom_lcm_join(&a, &b)?;
    println!("\n{a} ^[{}]  |  {b} ^[{}]", j.s, j.t);
    println!("  = {}  (period {})", j.join, j.join.per());
    Ok(())
}
