//! Flatness, cores, the delta construction and atoms.

use fnz::{PeriodicMap, Result};

fn main() -> Result<()> {
    for src in ["F6:[2,2,2,4,5,5]", "F4:[1,1,3,3]", "F3:[2,2,2]"] {
        let f: PeriodicMap = src.parse()?;
        println!("{f}");
        println!("  positive {}  idempotent {}  flat {}", f.is_positive(), f.is_idempotent(), f.is_flat());
        println!("  fixed points {:?}", f.fixed_points());
        match f.core() {
            Ok(c) => println!("  core  {c}"),
            Err(e) => println!("  core  unavailable: {e}"),
        }
        println!("  delta {}", f.delta());
    }

    println!("atoms of F4:");
    for a in PeriodicMap::atoms(4) {
        println!("  {a}");
    }
    Ok(())
}
