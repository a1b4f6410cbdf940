//! Writing positive elements as products of shifts and atoms.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use super::PeriodicMap;
use crate::error::{Error, Result};

/// Word length bound for the breadth-first fallback.
pub const DEFAULT_SEARCH_LIMIT: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    /// The successor shift `s`.
    S,
    /// Its inverse.
    SInv,
    /// The atom `c_i`, `1 <= i <= n`.
    C(usize),
}

impl Letter {
    fn to_map(self, n: usize) -> PeriodicMap {
        match self {
            Letter::S => PeriodicMap::shift(n, 1),
            Letter::SInv => PeriodicMap::shift(n, -1),
            Letter::C(i) => PeriodicMap::atom(n, i),
        }
    }

    fn cancels(self, other: Letter) -> bool {
        matches!((self, other), (Letter::S, Letter::SInv) | (Letter::SInv, Letter::S))
    }
}

/// A product of letters, read as a composite: the rightmost letter acts first.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Word(pub Vec<Letter>);

/// How a decomposition was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Conjugate by `s^(k+1)` with `k = max f^-1[f(0)]`, then factor into
    /// descending atom products. Only applicable when the conjugate is positive.
    Construction,
    /// Peel off `s^hmin`, conjugate a fixed point to `n - 1`, then factor.
    AlignedConstruction,
    /// Breadth-first search over words.
    Search,
}

impl Word {
    fn push(&mut self, l: Letter) {
        if let Some(&last) = self.0.last() {
            if last.cancels(l) {
                self.0.pop();
                return;
            }
        }
        self.0.push(l);
    }

    fn push_shift(&mut self, m: i64) {
        let l = if m >= 0 { Letter::S } else { Letter::SInv };
        for _ in 0..m.unsigned_abs() {
            self.push(l);
        }
    }

    fn extend(&mut self, other: &Word) {
        for &l in &other.0 {
            self.push(l);
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The product of the letters as an element of `F_n(Z)`.
    pub fn eval(&self, n: usize) -> Result<PeriodicMap> {
        let mut acc = PeriodicMap::identity(n);
        for &l in self.0.iter().rev() {
            if let Letter::C(i) = l {
                if n < 2 || i == 0 || i > n {
                    return Err(Error::PreconditionFailed(format!("C{i} is not an atom of F{n}")));
                }
            }
            acc = l.to_map(n).compose_unchecked(&acc);
        }
        Ok(acc)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            match l {
                Letter::S => f.write_str("S")?,
                Letter::SInv => f.write_str("S^-1")?,
                Letter::C(k) => write!(f, "C{k}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut w = Vec::new();
        for tok in s.split_whitespace() {
            let l = match tok {
                "1" => continue,
                "S" => Letter::S,
                "S^-1" => Letter::SInv,
                t => t
                    .strip_prefix('C')
                    .and_then(|i| i.parse().ok())
                    .map(Letter::C)
                    .ok_or_else(|| Error::Literal(format!("bad letter `{t}`")))?,
            };
            w.push(l);
        }
        Ok(Word(w))
    }
}

/// Factors a positive `g` with `g[0, n-1] ⊆ [0, n-1]` as `g_{k_1} ... g_{k_r}`,
/// where `k_1 < ... < k_r` are the collapse targets in the window and
/// `g_k = c_k c_{k-1} ... c_{l_k}` with `l_k = min g^-1[k] + 1`.
fn factor_window_map(g: &PeriodicMap) -> Word {
    let n = g.n();
    let mut word = Word::default();
    for k in 0..n {
        let pre: Vec<usize> = (0..n).filter(|&x| g.values()[x] == k as i64).collect();
        if pre.is_empty() || pre == [k] {
            continue;
        }
        let lk = pre[0] + 1;
        for i in (lk..=k).rev() {
            word.push(Letter::C(i));
        }
    }
    word
}

fn maps_window_into_itself(g: &PeriodicMap) -> bool {
    let n = g.n() as i64;
    g.values().iter().all(|&v| (0..n).contains(&v))
}

impl PeriodicMap {
    /// A word over `{S, S^-1, C_1..C_n}` whose product is `self`.
    pub fn decompose_positive(&self) -> Result<Word> {
        self.decompose_positive_with(DEFAULT_SEARCH_LIMIT).map(|(w, _)| w)
    }

    /// Like [`decompose_positive`](Self::decompose_positive), also reporting the
    /// route taken. `limit` bounds the word length of the search fallback.
    pub fn decompose_positive_with(&self, limit: usize) -> Result<(Word, Strategy)> {
        if !self.is_positive() {
            return Err(Error::NotPositive);
        }
        let n = self.n();
        let verified = |w: Word, s: Strategy| -> Option<(Word, Strategy)> {
            (w.eval(n).ok()? == *self).then_some((w, s))
        };

        // k := max f^-1[f(0)],  g := s^-f(k+1) f s^(k+1)
        let f0 = self.eval(0);
        let k = (0..n as i64).rev().find(|&x| self.eval(x) == f0).expect("0 qualifies");
        let top = self.eval(k + 1);
        let g = Self::shift(n, -top)
            .compose_unchecked(self)
            .compose_unchecked(&Self::shift(n, k + 1));
        if g.is_positive() && maps_window_into_itself(&g) {
            let mut w = Word::default();
            w.push_shift(top);
            w.extend(&factor_window_map(&g));
            w.push_shift(-(k + 1));
            if let Some(hit) = verified(w, Strategy::Construction) {
                return Ok(hit);
            }
        }

        // f = s^p f' with f' positive and flat; conjugating a fixed point q of f'
        // to n-1 gives a positive map of the window into itself.
        let p = self.hmin();
        let flat = Self::shift(n, -p).compose_unchecked(self);
        let q = *flat.fixed_points().iter().next().expect("hmin 0 gives a fixed point") as i64;
        let t = q - (n as i64 - 1);
        let g = Self::shift(n, -t)
            .compose_unchecked(&flat)
            .compose_unchecked(&Self::shift(n, t));
        if g.is_positive() && maps_window_into_itself(&g) {
            let mut w = Word::default();
            w.push_shift(p + t);
            w.extend(&factor_window_map(&g));
            w.push_shift(-t);
            if let Some(hit) = verified(w, Strategy::AlignedConstruction) {
                return Ok(hit);
            }
        }

        search_word(self, limit).map(|w| (w, Strategy::Search))
    }
}

/// Shortest word (first in the order `S < S^-1 < C_1 < ... < C_n`) whose
/// product is `target`, searching breadth-first up to `limit` letters.
pub fn search_word(target: &PeriodicMap, limit: usize) -> Result<Word> {
    let n = target.n();
    let mut alphabet = vec![Letter::S, Letter::SInv];
    if n > 1 {
        alphabet.extend((1..=n).map(Letter::C));
    }
    let letters: Vec<PeriodicMap> = alphabet.iter().map(|l| l.to_map(n)).collect();
    let start = PeriodicMap::identity(n);
    if start == *target {
        return Ok(Word::default());
    }
    let mut seen = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([(start, Vec::<Letter>::new())]);
    while let Some((map, word)) = queue.pop_front() {
        if word.len() >= limit {
            continue;
        }
        for (l, lm) in alphabet.iter().zip(&letters) {
            let next = map.compose_unchecked(lm);
            if seen.insert(next.clone()) {
                let mut w = word.clone();
                w.push(*l);
                if next == *target {
                    return Ok(Word(w));
                }
                queue.push_back((next, w));
            }
        }
    }
    Err(Error::SearchExhausted(limit))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pm(s: &str) -> PeriodicMap {
        s.parse().unwrap()
    }

    #[test]
    fn decomposition_examples() {
        let (w, s) = pm("F2:[1,2]").decompose_positive_with(12).unwrap();
        assert_eq!(w.to_string(), "S");
        assert_eq!(s, Strategy::Construction);
        assert_eq!(pm("F2:[1,1]").decompose_positive().unwrap().to_string(), "C1");
        assert_eq!(pm("F2:[2,2]").decompose_positive().unwrap().to_string(), "S C1");
        assert_eq!(PeriodicMap::identity(3).decompose_positive().unwrap().to_string(), "1");
        assert_eq!(pm("F2:[0,0]").decompose_positive(), Err(Error::NotPositive));
    }

    #[test]
    fn construction_gap() {
        // k = 1 gives g = [0,0], which is not positive
        let (_, s) = pm("F2:[1,1]").decompose_positive_with(12).unwrap();
        assert_eq!(s, Strategy::AlignedConstruction);
    }

    #[test]
    fn search_finds_lexicographically_first_shortest() {
        assert_eq!(search_word(&pm("F2:[2,2]"), 4).unwrap().to_string(), "S C1");
        assert_eq!(search_word(&pm("F2:[1,1]"), 4).unwrap().to_string(), "C1");
        assert_eq!(search_word(&pm("F2:[5,5]"), 2), Err(Error::SearchExhausted(2)));
    }

    #[test]
    fn words_parse_and_evaluate() {
        let w: Word = "S C1 S^-1".parse().unwrap();
        assert_eq!(w.to_string(), "S C1 S^-1");
        assert_eq!(w.eval(2).unwrap(), pm("F2:[1,1]").conj_shift(1));
        assert!("S X".parse::<Word>().is_err());
        assert!(Word(vec![Letter::C(3)]).eval(2).is_err());
    }
}
