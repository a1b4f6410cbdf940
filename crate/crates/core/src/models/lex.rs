use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::terms::Model;
use crate::PeriodicMap;

/// A pair `(h, f)` in the lexicographic product of the ordered group `Z^m`
/// (itself ordered lexicographically) with `F_n(Z)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LexElement {
    pub h: Vec<i64>,
    pub f: PeriodicMap,
}

impl LexElement {
    pub fn new(h: Vec<i64>, f: PeriodicMap) -> Self {
        LexElement { h, f }
    }

    fn shape(&self) -> (usize, usize) {
        (self.h.len(), self.f.n())
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.shape() == other.shape() {
            Ok(())
        } else {
            Err(Error::ShapeMismatch(format!(
                "Lex{:?} vs Lex{:?} (length, period)",
                self.shape(),
                other.shape()
            )))
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let h = self.h.iter().zip(&other.h).map(|(a, b)| a + b).collect();
        Ok(LexElement { h, f: self.f.compose(&other.f)? })
    }

    fn neg_h(&self) -> Vec<i64> {
        self.h.iter().map(|a| -a).collect()
    }

    pub fn resl(&self) -> Self {
        LexElement { h: self.neg_h(), f: self.f.resl() }
    }

    pub fn resr(&self) -> Self {
        LexElement { h: self.neg_h(), f: self.f.resr() }
    }

    pub fn leq(&self, other: &Self) -> Result<bool> {
        self.check(other)?;
        match self.h.cmp(&other.h) {
            Ordering::Less => Ok(true),
            Ordering::Greater => Ok(false),
            Ordering::Equal => self.f.leq(&other.f),
        }
    }

    pub fn meet(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(match self.h.cmp(&other.h) {
            Ordering::Less => self.clone(),
            Ordering::Greater => other.clone(),
            Ordering::Equal => LexElement { h: self.h.clone(), f: self.f.meet(&other.f)? },
        })
    }

    pub fn join(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(match self.h.cmp(&other.h) {
            Ordering::Less => other.clone(),
            Ordering::Greater => self.clone(),
            Ordering::Equal => LexElement { h: self.h.clone(), f: self.f.join(&other.f)? },
        })
    }

    /// `x^[k]`: the group part is fixed by double residuals.
    pub fn conj_shift(&self, k: i64) -> Self {
        LexElement { h: self.h.clone(), f: self.f.conj_shift(k) }
    }
}

impl fmt::Display for LexElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let h: Vec<String> = self.h.iter().map(|x| x.to_string()).collect();
        write!(f, "Lex[{}]:{}", h.join(","), self.f)
    }
}

impl fmt::Debug for LexElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for LexElement {
    type Err = Error;

    /// `Lex[h1,..,hm]:F<n>:[..]`
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Literal(format!("expected Lex[h1,..]:F<n>:[..], got `{s}`"));
        let rest = s.trim().strip_prefix("Lex[").ok_or_else(bad)?;
        let (hs, f) = rest.split_once("]:").ok_or_else(bad)?;
        let h = if hs.trim().is_empty() {
            Vec::new()
        } else {
            hs.split(',')
                .map(|x| x.trim().parse::<i64>().map_err(|_| bad()))
                .collect::<Result<_>>()?
        };
        Ok(LexElement { h, f: f.parse()? })
    }
}

/// `Z^m x F_n(Z)` with lexicographic order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LexModel {
    pub m: usize,
    pub n: usize,
}

impl LexModel {
    pub fn new(m: usize, n: usize) -> Self {
        assert!(n >= 1, "period must be positive");
        LexModel { m, n }
    }
}

impl Model for LexModel {
    type Elem = LexElement;

    fn name(&self) -> String {
        format!("Lex{}xF{}", self.m, self.n)
    }

    fn one(&self) -> LexElement {
        LexElement { h: vec![0; self.m], f: PeriodicMap::identity(self.n) }
    }

    fn mul(&self, a: &LexElement, b: &LexElement) -> Result<LexElement> {
        a.mul(b)
    }

    fn meet(&self, a: &LexElement, b: &LexElement) -> Result<LexElement> {
        a.meet(b)
    }

    fn join(&self, a: &LexElement, b: &LexElement) -> Result<LexElement> {
        a.join(b)
    }

    fn resl(&self, a: &LexElement) -> Result<LexElement> {
        Ok(a.resl())
    }

    fn resr(&self, a: &LexElement) -> Result<LexElement> {
        Ok(a.resr())
    }

    fn leq(&self, a: &LexElement, b: &LexElement) -> Result<bool> {
        a.leq(b)
    }

    fn format(&self, a: &LexElement) -> String {
        a.to_string()
    }

    fn parse_elem(&self, s: &str) -> Result<LexElement> {
        let e: LexElement = s.parse()?;
        if e.shape() != (self.m, self.n) {
            return Err(Error::ShapeMismatch(format!("{e} is not in {}", self.name())));
        }
        Ok(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lx(s: &str) -> LexElement {
        s.parse().unwrap()
    }

    #[test]
    fn lattice_cases() {
        let a = lx("Lex[1]:F2:[1,1]");
        let b = lx("Lex[0]:F2:[5,5]");
        assert_eq!(a.meet(&b).unwrap(), b);
        assert_eq!(a.join(&b).unwrap(), a);
        assert!(b.leq(&a).unwrap());
        let c = lx("Lex[0]:F2:[0,2]");
        assert_eq!(b.meet(&c).unwrap(), lx("Lex[0]:F2:[0,2]").meet(&b).unwrap());
        assert_eq!(b.meet(&c).unwrap(), lx("Lex[0]:F2:[0,2]"));
        assert_eq!(b.join(&c).unwrap(), lx("Lex[0]:F2:[5,5]"));
    }

    #[test]
    fn residuals_are_coordinatewise() {
        let a = lx("Lex[0]:F2:[1,1]");
        assert_eq!(a.resl(), lx("Lex[0]:F2:[0,0]"));
        let a = lx("Lex[2,-1]:F3:[1,1,2]");
        assert_eq!(a.resl().h, vec![-2, 1]);
        assert_eq!(a.resl().resl().resl().resl().resl().resl(), a);
        assert_eq!(a.conj_shift(3), a);
    }

    #[test]
    fn shapes_must_match() {
        let a = lx("Lex[1]:F2:[1,1]");
        let b = lx("Lex[1,0]:F2:[1,1]");
        assert!(matches!(a.mul(&b), Err(Error::ShapeMismatch(_))));
        assert!(LexModel::new(1, 3).parse_elem("Lex[1]:F2:[1,1]").is_err());
        assert_eq!(a.to_string(), "Lex[1]:F2:[1,1]");
        assert!("Lex[x]:F2:[1,1]".parse::<LexElement>().is_err());
    }
}
