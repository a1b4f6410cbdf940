//! Bounded counterexample search for equations over finite samples of a
//! model, the shared law suite, and a registry of checkable properties.
//!
//! A verdict of [`Verdict::HoldsWithinBounds`] is evidence, not proof: it
//! records exactly how many assignments were tried.

mod enumerate;
pub mod laws;
pub mod suite;

use std::collections::BTreeMap;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::terms::{eval, relation_holds, Equation, Model, Program, Relation};

pub use enumerate::{enumerate_elements, lex_vectors, zigzag, Universe};

/// Exhaustive enumeration or seeded sampling of assignments.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Mode {
    Exhaustive,
    Random { samples: u64, seed: u64 },
}

/// How wreath-product tails are sampled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Tails {
    /// Both tails are the identity.
    Identity,
    /// Left and right tails coincide.
    Shared,
    /// Left and right tails range independently.
    Independent,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WreathBounds {
    /// Exceptions live at indices `0..window`.
    pub window: i64,
    /// Global shifts range over `[-global, global]`.
    pub global: i64,
    pub max_exceptions: usize,
    pub tails: Tails,
}

impl Default for WreathBounds {
    fn default() -> Self {
        WreathBounds { window: 3, global: 1, max_exceptions: 1, tails: Tails::Identity }
    }
}

/// Sample-space parameters. The period comes from the model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    /// Heights `f(i) - i` of base elements lie in `[-h, h]`.
    pub h: i64,
    pub mode: Mode,
    /// Lexicographic group components lie in `[-lex, lex]`.
    pub lex: i64,
    pub wreath: WreathBounds,
    /// Largest exhaustive assignment space accepted.
    pub ceiling: u128,
    pub threads: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            h: 2,
            mode: Mode::Exhaustive,
            lex: 1,
            wreath: WreathBounds::default(),
            ceiling: 50_000_000,
            threads: 1,
        }
    }
}

impl Bounds {
    pub fn exhaustive(h: i64) -> Self {
        Bounds { h, ..Bounds::default() }
    }

    pub fn random(h: i64, samples: u64, seed: u64) -> Self {
        Bounds { h, mode: Mode::Random { samples, seed }, ..Bounds::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stats {
    pub universe: usize,
    pub variables: usize,
    pub assignments: u128,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Counterexample<E> {
    /// Variable bindings, sorted by name.
    pub assignment: Vec<(String, E)>,
    pub lhs: E,
    pub rhs: E,
    /// Position in the deterministic assignment order.
    pub index: u128,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Verdict<E> {
    HoldsWithinBounds(Stats),
    Counterexample(Counterexample<E>),
}

impl<E> Verdict<E> {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::HoldsWithinBounds(_))
    }

    pub fn counterexample(&self) -> Option<&Counterexample<E>> {
        match self {
            Verdict::Counterexample(c) => Some(c),
            Verdict::HoldsWithinBounds(_) => None,
        }
    }
}

impl<E: Clone> Counterexample<E> {
    pub fn get(&self, var: &str) -> Option<&E> {
        self.assignment.iter().find(|(v, _)| v == var).map(|(_, e)| e)
    }

    /// Human-readable description using the model's literals.
    pub fn describe<M: Model<Elem = E>>(&self, model: &M, eq: &Equation) -> String {
        let binds: Vec<String> = self
            .assignment
            .iter()
            .map(|(v, e)| format!("{v}={}", model.format(e)))
            .collect();
        let rel = match eq.kind {
            Relation::Eq => "!=",
            Relation::Leq => "not <=",
        };
        format!(
            "{}: lhs {} {rel} rhs {}",
            binds.join(", "),
            model.format(&self.lhs),
            model.format(&self.rhs)
        )
    }
}

/// Machine-readable verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictReport {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stats: Option<Stats>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<BTreeMap<String, String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<String>,
}

impl<E> Verdict<E> {
    pub fn report<M: Model<Elem = E>>(&self, model: &M) -> VerdictReport {
        match self {
            Verdict::HoldsWithinBounds(s) => VerdictReport {
                holds: true,
                stats: Some(s.clone()),
                witness: None,
                lhs: None,
                rhs: None,
            },
            Verdict::Counterexample(c) => VerdictReport {
                holds: false,
                stats: None,
                witness: Some(c.assignment.iter().map(|(v, e)| (v.clone(), model.format(e))).collect()),
                lhs: Some(model.format(&c.lhs)),
                rhs: Some(model.format(&c.rhs)),
            },
        }
    }
}

fn assignment_space(universe: usize, vars: usize) -> u128 {
    (0..vars).fold(1u128, |acc, _| acc.saturating_mul(universe as u128))
}

/// Searches a block of consecutive odometer indices for the first failure.
fn scan_block<M: Model>(
    prog: &Program,
    model: &M,
    rel: Relation,
    universe: &[M::Elem],
    start: u128,
    end: u128,
) -> Result<Option<u128>> {
    let k = prog.vars().len();
    let u = universe.len() as u128;
    let mut digits: Vec<usize> = (0..k)
        .scan(start, |rest, _| {
            let d = (*rest % u) as usize;
            *rest /= u;
            Some(d)
        })
        .collect();
    let mut ev = prog.evaluator(model)?;
    let env = |digits: &[usize]| -> Vec<&M::Elem> { digits.iter().map(|&d| &universe[d]).collect() };
    ev.load(model, &env(&digits))?;
    let mut idx = start;
    loop {
        if !relation_holds(model, rel, ev.root(0), ev.root(1))? {
            return Ok(Some(idx));
        }
        idx += 1;
        if idx >= end {
            return Ok(None);
        }
        // advance the odometer; digit 0 is least significant
        let mut j = 0;
        loop {
            digits[j] += 1;
            if digits[j] < universe.len() {
                break;
            }
            digits[j] = 0;
            j += 1;
        }
        ev.update(model, j, &env(&digits))?;
    }
}

/// Evaluates `eq` on every assignment of elements of `model.universe(bounds)`
/// to its variables (or on seeded random samples) and returns the first
/// failure in the deterministic order, re-verified with the tree evaluator.
pub fn check_equation<M: Universe>(eq: &Equation, model: &M, bounds: &Bounds) -> Result<Verdict<M::Elem>> {
    let vars: Vec<String> = eq.vars().into_iter().collect();
    let universe = model.universe(bounds)?;
    if universe.is_empty() {
        return Err(Error::PreconditionFailed("empty sample universe".into()));
    }
    let prog = Program::compile(&[&eq.lhs, &eq.rhs], &vars)?;
    let k = vars.len();
    let stats = |assignments| Stats { universe: universe.len(), variables: k, assignments };

    let (failure, digits_of): (Option<u128>, Box<dyn Fn(u128) -> Vec<usize>>) = match bounds.mode {
        Mode::Exhaustive => {
            let total = assignment_space(universe.len(), k);
            if total > bounds.ceiling {
                return Err(Error::BoundsTooLarge { size: total, ceiling: bounds.ceiling });
            }
            let threads = bounds.threads.max(1) as u128;
            let chunk = total.div_ceil(threads).max(1);
            let blocks: Vec<(u128, u128)> = (0..threads)
                .map(|t| (t * chunk, ((t + 1) * chunk).min(total)))
                .filter(|(s, e)| s < e)
                .collect();
            let results: Vec<Result<Option<u128>>> = if blocks.len() <= 1 {
                blocks.iter().map(|&(s, e)| scan_block(&prog, model, eq.kind, &universe, s, e)).collect()
            } else {
                std::thread::scope(|scope| {
                    let handles: Vec<_> = blocks
                        .iter()
                        .map(|&(s, e)| {
                            let (prog, universe) = (&prog, &universe);
                            scope.spawn(move || scan_block(prog, model, eq.kind, universe, s, e))
                        })
                        .collect();
                    handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
                })
            };
            let mut first = None;
            for r in results {
                if let Some(i) = r? {
                    first = Some(first.map_or(i, |f: u128| f.min(i)));
                }
            }
            let u = universe.len() as u128;
            let digits = move |mut i: u128| {
                (0..k)
                    .map(|_| {
                        let d = (i % u) as usize;
                        i /= u;
                        d
                    })
                    .collect()
            };
            match first {
                None => return Ok(Verdict::HoldsWithinBounds(stats(total))),
                Some(i) => (Some(i), Box::new(digits)),
            }
        }
        Mode::Random { samples, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let draws: Vec<Vec<usize>> = (0..samples)
                .map(|_| (0..k).map(|_| rng.gen_range(0..universe.len())).collect())
                .collect();
            let mut ev = prog.evaluator(model)?;
            let mut failure = None;
            for (i, d) in draws.iter().enumerate() {
                let env: Vec<&M::Elem> = d.iter().map(|&j| &universe[j]).collect();
                ev.load(model, &env)?;
                if !relation_holds(model, eq.kind, ev.root(0), ev.root(1))? {
                    failure = Some(i as u128);
                    break;
                }
            }
            match failure {
                None => return Ok(Verdict::HoldsWithinBounds(stats(samples as u128))),
                Some(i) => (Some(i), Box::new(move |i: u128| draws[i as usize].clone())),
            }
        }
    };

    let index = failure.expect("failure found");
    let assignment: Vec<(String, M::Elem)> = vars
        .iter()
        .cloned()
        .zip(digits_of(index).into_iter().map(|d| universe[d].clone()))
        .collect();
    // independent re-evaluation
    let env: BTreeMap<String, M::Elem> = assignment.iter().cloned().collect();
    let lhs = eval(&eq.lhs, model, &env)?;
    let rhs = eval(&eq.rhs, model, &env)?;
    assert!(
        !relation_holds(model, eq.kind, &lhs, &rhs)?,
        "reported counterexample to `{eq}` does not re-verify"
    );
    Ok(Verdict::Counterexample(Counterexample { assignment, lhs, rhs, index }))
}

/// [`check_equation`] and its wall-clock time in milliseconds.
pub fn timed_check<M: Universe>(
    eq: &Equation,
    model: &M,
    bounds: &Bounds,
) -> Result<(Verdict<M::Elem>, u128)> {
    let t = Instant::now();
    let v = check_equation(eq, model, bounds)?;
    Ok((v, t.elapsed().as_millis()))
}
