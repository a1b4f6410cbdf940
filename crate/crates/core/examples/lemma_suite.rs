//! Running the built-in property suite and registering a custom property.

use fnz::checker::suite::{verify_lemma_suite, LemmaSuite, Outcome, SuiteConfig};
use fnz::PeriodicMap;
use serde_json::json;

fn main() {
    let (ok, reports) = verify_lemma_suite(&LemmaSuite::builtin(), &SuiteConfig::Only(vec!["core".into(), "delta".into(), "variety".into()]));
    for r in &reports {
        println!("{:<28} {:<5} {}ms", r.property, r.verdict, r.elapsed_ms);
    }
    println!("built-in selection passed: {ok}\n");

    let mut suite = LemmaSuite::new();
    suite.register("custom/atoms-are-positive", json!({"n": "1..=8"}), || {
        let mut checked = 0;
        for n in 1..=8 {
            for a in PeriodicMap::atoms(n) {
                if !a.is_positive() {
                    return Ok(Outcome::Fail { witness: a.to_string() });
                }
                checked += 1;
            }
        }
        Ok(Outcome::Pass { checked })
    });
    let (ok, reports) = verify_lemma_suite(&suite, &SuiteConfig::All);
    println!("{}", serde_json::to_string_pretty(&reports).unwrap());
    println!("custom suite passed: {ok}");
}
