//! A registry of named properties, each run at fixed bounds and reported as
//! pass or fail with the first failing witness.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::laws::{check_laws, laws, periodic_laws, Law};
use super::{check_equation, enumerate_elements, Bounds, Tails, Universe, WreathBounds};
use crate::error::Result;
use crate::models::{FnModel, LexModel, WreathElement, WreathModel};
use crate::periodic::PeriodicMap;
use crate::terms::{
    axiom_commute, axiom_periodic, bracket, eval, parse_equation, relation_holds, sigma_term, Model, Term,
};
use crate::variety::{self, VarietySig};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass { checked: u64 },
    Fail { witness: String },
}

type Runner = Box<dyn Fn() -> Result<Outcome> + Send + Sync>;

pub struct Property {
    pub name: String,
    pub bounds: Value,
    run: Runner,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub property: String,
    pub bounds: Value,
    /// `pass`, `fail` or `error`.
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checked: Option<u64>,
    pub elapsed_ms: u128,
}

impl PropertyReport {
    pub fn passed(&self) -> bool {
        self.verdict == "pass"
    }
}

/// Which registered properties to run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub enum SuiteConfig {
    /// Nothing.
    #[default]
    Empty,
    All,
    /// Properties whose name starts with one of these prefixes.
    Only(Vec<String>),
}

#[derive(Default)]
pub struct LemmaSuite {
    properties: Vec<Property>,
}

impl LemmaSuite {
    pub fn new() -> Self {
        LemmaSuite::default()
    }

    pub fn register(
        &mut self,
        name: impl Into<String>,
        bounds: Value,
        run: impl Fn() -> Result<Outcome> + Send + Sync + 'static,
    ) -> &mut Self {
        self.properties.push(Property { name: name.into(), bounds, run: Box::new(run) });
        self
    }

    pub fn names(&self) -> Vec<&str> {
        self.properties.iter().map(|p| p.name.as_str()).collect()
    }

    pub fn run(&self, config: &SuiteConfig) -> Vec<PropertyReport> {
        let selected = |name: &str| match config {
            SuiteConfig::Empty => false,
            SuiteConfig::All => true,
            SuiteConfig::Only(prefixes) => prefixes.iter().any(|p| name.starts_with(p.as_str())),
        };
        self.properties
            .iter()
            .filter(|p| selected(&p.name))
            .map(|p| {
                let t = Instant::now();
                let outcome = (p.run)();
                let elapsed_ms = t.elapsed().as_millis();
                let (verdict, witness, checked) = match outcome {
                    Ok(Outcome::Pass { checked }) => ("pass", None, Some(checked)),
                    Ok(Outcome::Fail { witness }) => ("fail", Some(witness), None),
                    Err(e) => ("error", Some(e.to_string()), None),
                };
                PropertyReport {
                    property: p.name.clone(),
                    bounds: p.bounds.clone(),
                    verdict: verdict.into(),
                    witness,
                    checked,
                    elapsed_ms,
                }
            })
            .collect()
    }

    /// Every built-in property, at bounds that keep the whole run short.
    pub fn builtin() -> Self {
        let mut s = LemmaSuite::new();
        for n in 1..=4 {
            let b = Bounds::exhaustive(if n <= 3 { 2 } else { 1 });
            s.register(format!("laws/F{n}"), json!({"n": n, "h": b.h}), move || {
                laws_outcome(&FnModel::new(n), laws(n), &b, 3)
            });
        }
        let lex = Bounds { h: 1, lex: 1, ..Bounds::default() };
        s.register("laws/lex1xF2", json!({"m": 1, "n": 2, "h": 1, "lex": 1}), move || {
            laws_outcome(&LexModel::new(1, 2), laws(2), &lex, 3)
        });
        let wr = Bounds {
            h: 1,
            wreath: WreathBounds { window: 2, global: 1, max_exceptions: 1, tails: Tails::Identity },
            ..Bounds::default()
        };
        s.register("laws/wreathF2", json!({"n": 2, "h": 1, "window": 2, "global": 1}), move || {
            laws_outcome(&WreathModel::new(2), periodic_laws(2), &wr, 2)
        });
        s.register("wreath/outside-fn-variety", json!({"n": 2, "h": 1, "window": 2, "global": 1}), move || {
            // a global shift does not commute with an invertible local element
            let eq = axiom_commute(2);
            Ok(match check_equation(&eq, &WreathModel::new(2), &wr)?.counterexample() {
                Some(_) => Outcome::Pass { checked: 1 },
                None => Outcome::Fail { witness: "skeleton powers are central in the wreath sample".into() },
            })
        });
        s.register("flatness/tri-equivalence", json!({"n": "1..=4", "h": 3}), || {
            let mut checked = 0;
            for n in 1..=4 {
                for f in enumerate_elements(n, 3) {
                    // is_flat asserts that its three criteria agree
                    std::panic::catch_unwind(|| f.is_flat())
                        .map_err(|_| crate::Error::PreconditionFailed(format!("criteria disagree on {f}")))?;
                    checked += 1;
                }
            }
            Ok(Outcome::Pass { checked })
        });
        s.register("core/atom", json!({"n": "2..=8"}), || {
            each_positive_idempotent(8, |e| {
                let c = e.core()?;
                Ok((c.reduced().is_atom() && c.per() == e.per()).then_some(()).ok_or(format!("core({e}) = {c}")))
            })
        });
        s.register("delta/atom-height", json!({"n": "2..=8"}), || {
            each_positive_idempotent(8, |e| {
                let d = e.delta();
                let ok = d.is_idempotent()
                    && d.is_strictly_positive()
                    && d.hmax() == 1
                    && d.gamma() == PeriodicMap::shift(e.n(), 1);
                Ok(ok.then_some(()).ok_or(format!("delta({e}) = {d}")))
            })
        });
        s.register("decompose/positive", json!({"n": "1..=3", "hmax": 3}), || {
            let mut checked = 0;
            for n in 1..=3 {
                for f in enumerate_elements(n, 3).into_iter().filter(PeriodicMap::is_positive) {
                    let w = f.decompose_positive()?;
                    if w.eval(n)? != f {
                        return Ok(Outcome::Fail { witness: format!("{f} -> {w}") });
                    }
                    checked += 1;
                }
            }
            Ok(Outcome::Pass { checked })
        });
        s.register("generate/atom", json!({"n": [2, 3, 4], "heights": "<= n"}), || {
            let mut checked = 0;
            for n in [2, 3, 4] {
                for a in enumerate_elements(n, n as i64) {
                    if !(a.is_strictly_positive() && a.is_flat() && a.per() == n) {
                        continue;
                    }
                    let t = a.generate_atom()?;
                    let fp = t.final_periodicities();
                    if !t.atom().is_atom() || fp.windows(2).any(|w| w[0] >= w[1]) || fp.last() != Some(&n) {
                        return Ok(Outcome::Fail { witness: format!("{a}: periodicities {fp:?}") });
                    }
                    checked += 1;
                }
            }
            Ok(Outcome::Pass { checked })
        });
        s.register("lcm-join/periods", json!({"pairs": [[2, 3], [4, 6]]}), || {
            for (n, m) in [(2, 3), (4, 6)] {
                for a in PeriodicMap::atoms(n) {
                    for b in PeriodicMap::atoms(m) {
                        let j = PeriodicMap::atom_lcm_join(&a, &b)?;
                        if j.join.per() != num_integer::lcm(n, m) {
                            return Ok(Outcome::Fail { witness: format!("{a} v {b} = {}", j.join) });
                        }
                    }
                }
            }
            Ok(Outcome::Pass { checked: 2 * 3 + 4 * 6 })
        });
        s.register("terms/macro-coherence", json!({"n": "1..=4", "h": 2}), || {
            let x = Term::var("x");
            let mut checked = 0;
            for n in 1..=4 {
                let m = FnModel::new(n);
                for f in enumerate_elements(n, 2) {
                    let env = BTreeMap::from([("x".to_string(), f.clone())]);
                    if eval(&sigma_term(n, &x), &m, &env)? != f.sigma() {
                        return Ok(Outcome::Fail { witness: format!("sigma_{n}({f})") });
                    }
                    for k in -2..=2 {
                        if eval(&bracket(&x, k), &m, &env)? != f.conj_shift(k) {
                            return Ok(Outcome::Fail { witness: format!("{f}^[{k}]") });
                        }
                    }
                    checked += 1;
                }
            }
            Ok(Outcome::Pass { checked })
        });
        s.register("terms/normalize-soundness", json!({"n": 2, "h": 1}), || {
            let m = FnModel::new(2);
            let eqs = ["x y = y x", "x <= x^llll", "x x^l = x^l x", "x & y <= x y", "x^ll = x"];
            let elems = enumerate_elements(2, 1);
            let mut checked = 0;
            for src in eqs {
                let eq = parse_equation(src)?;
                let u = eq.normalize();
                for a in &elems {
                    for b in &elems {
                        let env = BTreeMap::from([("x".to_string(), a.clone()), ("y".to_string(), b.clone())]);
                        let direct = relation_holds(&m, eq.kind, &eval(&eq.lhs, &m, &env)?, &eval(&eq.rhs, &m, &env)?)?;
                        let normal = m.leq(&m.one(), &eval(&u, &m, &env)?)?;
                        if direct != normal {
                            return Ok(Outcome::Fail { witness: format!("{src} at x={a}, y={b}") });
                        }
                        checked += 1;
                    }
                }
            }
            Ok(Outcome::Pass { checked })
        });
        s.register("axioms/divisor-law", json!({"k": "1..=4", "n": "1..=4", "h": 2}), || {
            let mut checked = 0;
            for k in 1..=4 {
                for n in 1..=4 {
                    let m = FnModel::new(k);
                    let b = Bounds::exhaustive(2);
                    let per = check_equation(&axiom_periodic(n), &m, &b)?;
                    let com = check_equation(&axiom_commute(n), &m, &b)?;
                    let expected = n % k == 0;
                    if per.holds() != expected || (expected && !com.holds()) {
                        return Ok(Outcome::Fail { witness: format!("F{k} against n={n}") });
                    }
                    checked += 1;
                }
            }
            Ok(Outcome::Pass { checked })
        });
        s.register("wreath/local-subalgebra", json!({"n": 2, "h": 1, "window": 2}), || {
            let b = Bounds {
                h: 1,
                wreath: WreathBounds { window: 2, global: 1, max_exceptions: 1, tails: Tails::Shared },
                ..Bounds::default()
            };
            let u = WreathModel::new(2).universe(&b)?;
            let local: Vec<&WreathElement> = u.iter().filter(|w| w.is_local()).collect();
            let mut checked = 0;
            for a in &local {
                for c in &u {
                    let conj = c.resr().mul(a)?.mul(c)?.meet(&WreathElement::identity(2))?;
                    let closed = [a.resl(), a.resr(), a.mul(c)?, a.meet(c)?]
                        .iter()
                        .zip([true, true, c.is_local(), c.is_local()])
                        .all(|(r, expect_local)| !expect_local || r.is_local());
                    if !closed || !conj.is_local() || a.is_idempotent() != a.is_idempotent_by_components() {
                        return Ok(Outcome::Fail { witness: format!("a={a}, c={c}") });
                    }
                    checked += 1;
                }
            }
            Ok(Outcome::Pass { checked })
        });
        s.register("variety/lattice", json!({"n": 12}), || {
            let sigs = variety::subvarieties(12);
            let mut checked = 0;
            for a in &sigs {
                for b in &sigs {
                    let j = a.join(b);
                    let m = a.meet(b);
                    let da: BTreeSet<usize> = a.downset();
                    let db = b.downset();
                    let ok = j.downset() == da.union(&db).copied().collect()
                        && m.downset() == da.intersection(&db).copied().collect()
                        && a.leq(b) == da.is_subset(&db);
                    if !ok {
                        return Ok(Outcome::Fail { witness: format!("{a}, {b}") });
                    }
                    checked += 1;
                }
            }
            let count_ok = sigs.len() == 10 && variety::properly_periodic_bottom(12) == VarietySig::normalize([4, 3])?;
            Ok(if count_ok { Outcome::Pass { checked } } else { Outcome::Fail { witness: "D12".into() } })
        });
        s
    }
}

fn laws_outcome<M: Universe>(model: &M, laws: Vec<Law>, b: &Bounds, max_arity: usize) -> Result<Outcome> {
    let mut checked = 0u64;
    for o in check_laws(model, laws, b, max_arity)? {
        match o.verdict.counterexample() {
            Some(c) => {
                return Ok(Outcome::Fail {
                    witness: format!("{}: {}", o.law.name, c.describe(model, &o.law.equation)),
                })
            }
            None => checked += 1,
        }
    }
    Ok(Outcome::Pass { checked })
}

/// Runs `check` on every strictly positive idempotent of `F_n(Z)`, `2 <= n <= max_n`,
/// one per nonempty proper set of fixed residues.
fn each_positive_idempotent(
    max_n: usize,
    check: impl Fn(&PeriodicMap) -> Result<std::result::Result<(), String>>,
) -> Result<Outcome> {
    let mut checked = 0;
    for n in 2..=max_n {
        for mask in 1u32..(1 << n) - 1 {
            let fixed: BTreeSet<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            let e = PeriodicMap::positive_idempotent(n, &fixed)?;
            if let Err(w) = check(&e)? {
                return Ok(Outcome::Fail { witness: w });
            }
            checked += 1;
        }
    }
    Ok(Outcome::Pass { checked })
}

/// Runs the selected properties of `suite`.
pub fn verify_lemma_suite(suite: &LemmaSuite, config: &SuiteConfig) -> (bool, Vec<PropertyReport>) {
    let reports = suite.run(config);
    (reports.iter().all(PropertyReport::passed), reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_config_is_empty_success() {
        let (ok, r) = verify_lemma_suite(&LemmaSuite::builtin(), &SuiteConfig::Empty);
        assert!(ok && r.is_empty());
    }

    #[test]
    fn corrupted_law_is_reported() {
        let mut s = LemmaSuite::new();
        s.register("corrupt/commutativity", json!({"n": 2, "h": 1}), || {
            let eq = parse_equation("x y = y x")?;
            let m = FnModel::new(2);
            Ok(match check_equation(&eq, &m, &Bounds::exhaustive(1))?.counterexample() {
                Some(c) => Outcome::Fail { witness: c.describe(&m, &eq) },
                None => Outcome::Pass { checked: 0 },
            })
        });
        let (ok, r) = verify_lemma_suite(&s, &SuiteConfig::All);
        assert!(!ok);
        assert_eq!(r[0].property, "corrupt/commutativity");
        assert!(r[0].witness.as_ref().unwrap().contains("x="));
        let json = serde_json::to_value(&r[0]).unwrap();
        assert_eq!(json["verdict"], "fail");
    }

    #[test]
    fn fast_builtins_pass() {
        let cfg = SuiteConfig::Only(vec!["core".into(), "delta".into(), "lcm".into(), "variety".into(), "terms".into()]);
        let (ok, r) = verify_lemma_suite(&LemmaSuite::builtin(), &cfg);
        assert!(ok, "{r:#?}");
        assert_eq!(r.len(), 6);
        assert!(LemmaSuite::builtin().names().contains(&"wreath/outside-fn-variety"));
    }
}
