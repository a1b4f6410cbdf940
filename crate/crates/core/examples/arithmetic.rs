//! Basic arithmetic on periodic maps: products, lattice operations,
//! residuals and the conjugation shift.

use fnz::{PeriodicMap, Result};

fn main() -> Result<()> {
    let f: PeriodicMap = "F3:[1,1,4]".parse()?;
    let g: PeriodicMap = "F3:[0,2,2]".parse()?;
    println!("f          = {f}");
    println!("g          = {g}");
    println!("f(-4..5)   = {:?}", (-4..5).map(|x| f.eval(x)).collect::<Vec<_>>());
    println!("f g        = {}", f.compose(&g)?);
    println!("f & g      = {}", f.meet(&g)?);
    println!("f | g      = {}", f.join(&g)?);
    println!("f^l        = {}", f.resl());
    println!("f^r        = {}", f.resr());
    println!("f^ll       = {}", f.resl().resl());
    for k in 0..3 {
        println!("f^[{k}]      = {}", f.conj_shift(k));
    }
    println!("sigma(f)   = {}", f.sigma());
    println!("gamma(f)   = {}", f.gamma());
    println!("per(f)     = {}", f.per());

    let e = f.compose(&f.resl())?;
    println!("f f^l      = {e}  idempotent: {}", e.is_idempotent());
    Ok(())
}
