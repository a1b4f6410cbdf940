//! Writing positive elements as words in the shift and the atoms.

use fnz::periodic::DEFAULT_SEARCH_LIMIT;
use fnz::{PeriodicMap, Result};

fn main() -> Result<()> {
    for src in ["F2:[2,2]", "F3:[1,2,4]", "F4:[1,1,3,5]", "F5:[2,2,3,5,6]"] {
        let f: PeriodicMap = src.parse()?;
        let (word, strategy) = f.decompose_positive_with(DEFAULT_SEARCH_LIMIT)?;
        let back = word.eval(f.n())?;
        println!("{:<18} = {word}  ({} letters, {strategy:?}, round trip {})", f.to_string(), word.len(), back == f);
    }

    let neg: PeriodicMap = "F2:[-1,1]".parse()?;
    if let Err(e) = neg.decompose_positive() {
        println!("{neg}: {e}");
    }
    Ok(())
}
