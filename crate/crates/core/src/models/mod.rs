//! Concrete l-pregroups for evaluating terms: `F_n(Z)` itself, lexicographic
//! products `Z^m x F_n(Z)`, and a wreath product of `Aut(Z)` with `F_n(Z)`.

mod lex;
mod wreath;

pub use lex::{LexElement, LexModel};
pub use wreath::{LocalFamily, Support, WreathElement, WreathModel};

use crate::error::{Error, Result};
use crate::terms::Model;
use crate::PeriodicMap;

/// `F_n(Z)` for a fixed `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FnModel {
    n: usize,
}

impl FnModel {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "period must be positive");
        FnModel { n }
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

impl Model for FnModel {
    type Elem = PeriodicMap;

    fn name(&self) -> String {
        format!("F{}", self.n)
    }

    fn one(&self) -> PeriodicMap {
        PeriodicMap::identity(self.n)
    }

    fn mul(&self, a: &PeriodicMap, b: &PeriodicMap) -> Result<PeriodicMap> {
        a.compose(b)
    }

    fn meet(&self, a: &PeriodicMap, b: &PeriodicMap) -> Result<PeriodicMap> {
        a.meet(b)
    }

    fn join(&self, a: &PeriodicMap, b: &PeriodicMap) -> Result<PeriodicMap> {
        a.join(b)
    }

    fn resl(&self, a: &PeriodicMap) -> Result<PeriodicMap> {
        Ok(a.resl())
    }

    fn resr(&self, a: &PeriodicMap) -> Result<PeriodicMap> {
        Ok(a.resr())
    }

    fn leq(&self, a: &PeriodicMap, b: &PeriodicMap) -> Result<bool> {
        a.leq(b)
    }

    fn format(&self, a: &PeriodicMap) -> String {
        a.to_string()
    }

    fn parse_elem(&self, s: &str) -> Result<PeriodicMap> {
        let f: PeriodicMap = s.parse()?;
        if f.n() != self.n {
            return Err(Error::PeriodMismatch(f.n(), self.n));
        }
        Ok(f)
    }
}
