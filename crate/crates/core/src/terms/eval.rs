//! Interpreting terms in a [`Model`]: a direct tree walk, and a compiled form
//! that shares common subterms and re-evaluates only what an assignment
//! change touches.

use std::collections::{BTreeMap, HashMap};

use super::ast::{Relation, Term};
use super::model::Model;
use crate::error::{Error, Result};

/// Structural interpretation of `t` under `env`.
pub fn eval<M: Model>(t: &Term, model: &M, env: &BTreeMap<String, M::Elem>) -> Result<M::Elem> {
    match t {
        Term::Var(v) => env.get(v).cloned().ok_or_else(|| Error::UnboundVariable(v.clone())),
        Term::One => Ok(model.one()),
        Term::Mul(a, b) => model.mul(&eval(a, model, env)?, &eval(b, model, env)?),
        Term::Meet(a, b) => model.meet(&eval(a, model, env)?, &eval(b, model, env)?),
        Term::Join(a, b) => model.join(&eval(a, model, env)?, &eval(b, model, env)?),
        Term::Resl(a) => model.resl(&eval(a, model, env)?),
        Term::Resr(a) => model.resr(&eval(a, model, env)?),
    }
}

/// Whether `lhs rel rhs` holds for two evaluated sides.
pub fn relation_holds<M: Model>(model: &M, rel: Relation, lhs: &M::Elem, rhs: &M::Elem) -> Result<bool> {
    match rel {
        Relation::Eq => Ok(lhs == rhs),
        Relation::Leq => model.leq(lhs, rhs),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Op {
    Var(usize),
    One,
    Mul(usize, usize),
    Meet(usize, usize),
    Join(usize, usize),
    Resl(usize),
    Resr(usize),
}

/// Several terms compiled into one DAG with structurally equal subterms shared.
///
/// Variables are numbered by their position in the list given to
/// [`Program::compile`]. The incremental [`Evaluator`] assumes odometer-style
/// updates: when variable `j` changes, so may every variable before it.
#[derive(Debug, Clone)]
pub struct Program {
    ops: Vec<Op>,
    roots: Vec<usize>,
    vars: Vec<String>,
    /// Nodes to recompute after variables `0..=j` changed, in dependency order.
    schedule: Vec<Vec<usize>>,
    constants: Vec<usize>,
}

impl Program {
    pub fn compile(terms: &[&Term], vars: &[String]) -> Result<Self> {
        let index: HashMap<&str, usize> = vars.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        let mut b = Builder { ops: Vec::new(), dedup: HashMap::new(), min_var: Vec::new(), index: &index };
        let roots = terms.iter().map(|t| b.add(t)).collect::<Result<Vec<_>>>()?;
        let Builder { ops, min_var, .. } = b;
        let schedule = (0..vars.len())
            .map(|j| (0..ops.len()).filter(|&i| min_var[i] <= j).collect())
            .collect();
        let constants = (0..ops.len()).filter(|&i| min_var[i] == usize::MAX).collect();
        Ok(Program { ops, roots, vars: vars.to_vec(), schedule, constants })
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// Number of distinct subterm nodes.
    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    pub fn evaluator<'p, M: Model>(&'p self, model: &M) -> Result<Evaluator<'p, M>> {
        let mut values = vec![None; self.ops.len()];
        for &i in &self.constants {
            values[i] = Some(apply(model, self.ops[i], &values, &[])?);
        }
        Ok(Evaluator { prog: self, values })
    }
}

struct Builder<'a> {
    ops: Vec<Op>,
    dedup: HashMap<Op, usize>,
    min_var: Vec<usize>,
    index: &'a HashMap<&'a str, usize>,
}

impl Builder<'_> {
    fn add(&mut self, t: &Term) -> Result<usize> {
        let op = match t {
            Term::Var(v) => Op::Var(*self.index.get(v.as_str()).ok_or_else(|| Error::UnboundVariable(v.clone()))?),
            Term::One => Op::One,
            Term::Mul(a, b) => Op::Mul(self.add(a)?, self.add(b)?),
            Term::Meet(a, b) => Op::Meet(self.add(a)?, self.add(b)?),
            Term::Join(a, b) => Op::Join(self.add(a)?, self.add(b)?),
            Term::Resl(a) => Op::Resl(self.add(a)?),
            Term::Resr(a) => Op::Resr(self.add(a)?),
        };
        if let Some(&i) = self.dedup.get(&op) {
            return Ok(i);
        }
        let m = &self.min_var;
        let min_var = match op {
            Op::Var(j) => j,
            Op::One => usize::MAX,
            Op::Mul(a, b) | Op::Meet(a, b) | Op::Join(a, b) => m[a].min(m[b]),
            Op::Resl(a) | Op::Resr(a) => m[a],
        };
        self.ops.push(op);
        self.min_var.push(min_var);
        self.dedup.insert(op, self.ops.len() - 1);
        Ok(self.ops.len() - 1)
    }
}

fn apply<M: Model>(model: &M, op: Op, values: &[Option<M::Elem>], env: &[&M::Elem]) -> Result<M::Elem> {
    let get = |i: usize| values[i].as_ref().expect("operands are evaluated first");
    match op {
        Op::Var(j) => Ok(env[j].clone()),
        Op::One => Ok(model.one()),
        Op::Mul(a, b) => model.mul(get(a), get(b)),
        Op::Meet(a, b) => model.meet(get(a), get(b)),
        Op::Join(a, b) => model.join(get(a), get(b)),
        Op::Resl(a) => model.resl(get(a)),
        Op::Resr(a) => model.resr(get(a)),
    }
}

/// Cached node values of a [`Program`] for the current assignment.
pub struct Evaluator<'p, M: Model> {
    prog: &'p Program,
    values: Vec<Option<M::Elem>>,
}

impl<M: Model> Evaluator<'_, M> {
    /// Evaluates everything for `env`, given in the program's variable order.
    pub fn load(&mut self, model: &M, env: &[&M::Elem]) -> Result<()> {
        match self.prog.vars.len() {
            0 => Ok(()),
            k => self.update(model, k - 1, env),
        }
    }

    /// Re-evaluates after variables `0..=changed` took new values in `env`.
    pub fn update(&mut self, model: &M, changed: usize, env: &[&M::Elem]) -> Result<()> {
        for &i in &self.prog.schedule[changed] {
            let v = apply(model, self.prog.ops[i], &self.values, env)?;
            self.values[i] = Some(v);
        }
        Ok(())
    }

    /// Value of the `k`-th compiled term.
    pub fn root(&self, k: usize) -> &M::Elem {
        self.values[self.prog.roots[k]].as_ref().expect("loaded")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::FnModel;
    use crate::terms::parse;
    use crate::PeriodicMap;

    fn pm(s: &str) -> PeriodicMap {
        s.parse().unwrap()
    }

    #[test]
    fn tree_eval() {
        let m = FnModel::new(2);
        let env = BTreeMap::from([("y".to_string(), pm("F2:[4,4]")), ("x".to_string(), pm("F2:[1,1]"))]);
        assert_eq!(eval(&Term::One, &m, &BTreeMap::new()).unwrap(), PeriodicMap::identity(2));
        assert_eq!(eval(&parse("sigma_2(y)").unwrap(), &m, &env).unwrap(), PeriodicMap::shift(2, 3));
        assert_eq!(eval(&parse("x x^l").unwrap(), &m, &env).unwrap(), pm("F2:[1,1]"));
        assert_eq!(
            eval(&parse("z").unwrap(), &m, &env),
            Err(Error::UnboundVariable("z".into()))
        );
    }

    #[test]
    fn compiled_matches_tree_walk() {
        let m = FnModel::new(2);
        let terms = [parse("x y^l & y x | 1").unwrap(), parse("(x y^l)^r y").unwrap()];
        let vars = vec!["x".to_string(), "y".to_string()];
        let prog = Program::compile(&[&terms[0], &terms[1]], &vars).unwrap();
        // `x y^l` and `y` are shared
        assert!(prog.len() < terms[0].size() + terms[1].size());
        let mut ev = prog.evaluator(&m).unwrap();
        let elems = [pm("F2:[1,1]"), pm("F2:[0,2]"), pm("F2:[-1,1]")];
        let mut first = true;
        for y in &elems {
            for x in &elems {
                let env = [x, y];
                if first {
                    ev.load(&m, &env).unwrap();
                    first = false;
                } else if std::ptr::eq(x, &elems[0]) {
                    ev.update(&m, 1, &env).unwrap();
                } else {
                    ev.update(&m, 0, &env).unwrap();
                }
                let map = BTreeMap::from([("x".to_string(), x.clone()), ("y".to_string(), y.clone())]);
                for (k, t) in terms.iter().enumerate() {
                    assert_eq!(ev.root(k), &eval(t, &m, &map).unwrap());
                }
            }
        }
    }

    #[test]
    fn compile_rejects_unknown_variables() {
        let t = parse("x y").unwrap();
        assert!(matches!(
            Program::compile(&[&t], &["x".to_string()]),
            Err(Error::UnboundVariable(_))
        ));
    }
}
