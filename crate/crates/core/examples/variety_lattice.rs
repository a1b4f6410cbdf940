//! The lattice of subvarieties below F_n(Z) and their axioms.

use fnz::variety::{axiom_for, cover_report, properly_periodic_bottom, subvarieties, VarietySig};
use fnz::Result;

fn main() -> Result<()> {
    let n = 12;
    let all = subvarieties(n);
    println!("{} subvarieties below V(F{n}):", all.len());
    for v in &all {
        print!(" {v}");
    }
    println!();

    let r = cover_report(n);
    println!("covers:");
    for [i, j] in &r.covers {
        println!("  {} < {}", r.nodes[*i], r.nodes[*j]);
    }

    let a: VarietySig = "V{4}".parse()?;
    let b: VarietySig = "V{6}".parse()?;
    println!("\n{a} | {b} = {}", a.join(&b));
    println!("{a} & {b} = {}", a.meet(&b));
    println!("{a} <= {b}: {}", a.leq(&b));
    println!("bottom of properly {n}-periodic: {}", properly_periodic_bottom(n));
    println!("axiom for {}: {}", a.join(&b), axiom_for(&a.join(&b))?);
    Ok(())
}
