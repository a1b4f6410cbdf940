//! Slow, definition-level reimplementations used to cross-check the library.
//! Nothing here calls library arithmetic; library values only enter through
//! their raw value vectors.
#![allow(dead_code)]

use std::collections::BTreeSet;

use fnz::models::WreathElement;
use fnz::PeriodicMap;

/// Search radius for residuals. Heights in the tests stay far below it.
const R: i64 = 64;

/// An `n`-periodic map given by its values on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Map {
    pub n: i64,
    pub v: Vec<i64>,
}

impl Map {
    pub fn new(v: Vec<i64>) -> Self {
        Map { n: v.len() as i64, v }
    }

    pub fn of(f: &PeriodicMap) -> Self {
        Map::new(f.values().to_vec())
    }

    pub fn to_lib(&self) -> PeriodicMap {
        PeriodicMap::new(self.n, &self.v).expect("oracle map is valid")
    }

    pub fn tabulate(n: i64, g: impl Fn(i64) -> i64) -> Self {
        Map { n, v: (0..n).map(g).collect() }
    }

    pub fn identity(n: i64) -> Self {
        Map::tabulate(n, |x| x)
    }

    pub fn shift(n: i64, k: i64) -> Self {
        Map::tabulate(n, |x| x + k)
    }

    pub fn at(&self, x: i64) -> i64 {
        self.v[x.rem_euclid(self.n) as usize] + self.n * x.div_euclid(self.n)
    }

    /// Order-preserving on a full period.
    pub fn is_valid(&self) -> bool {
        (0..self.n).all(|x| self.at(x) <= self.at(x + 1))
    }

    pub fn mul(&self, o: &Map) -> Map {
        Map::tabulate(self.n, |x| self.at(o.at(x)))
    }

    pub fn meet(&self, o: &Map) -> Map {
        Map::tabulate(self.n, |x| self.at(x).min(o.at(x)))
    }

    pub fn join(&self, o: &Map) -> Map {
        Map::tabulate(self.n, |x| self.at(x).max(o.at(x)))
    }

    /// `min { p : q <= f(p) }` by scanning.
    pub fn resl(&self) -> Map {
        Map::tabulate(self.n, |q| (q - R..=q + R).find(|&p| q <= self.at(p)).expect("radius"))
    }

    /// `max { p : f(p) <= q }` by scanning.
    pub fn resr(&self) -> Map {
        Map::tabulate(self.n, |q| (q - R..=q + R).rev().find(|&p| self.at(p) <= q).expect("radius"))
    }

    /// `f^[k]`: `2k` left residuals, or `-2k` right ones.
    pub fn bracket(&self, k: i64) -> Map {
        let mut f = self.clone();
        for _ in 0..2 * k.abs() {
            f = if k > 0 { f.resl() } else { f.resr() };
        }
        f
    }

    pub fn leq(&self, o: &Map) -> bool {
        (0..self.n).all(|x| self.at(x) <= o.at(x))
    }

    pub fn pow(&self, k: usize) -> Map {
        (0..k).fold(Map::identity(self.n), |acc, _| acc.mul(self))
    }

    pub fn sigma(&self) -> Map {
        (1..self.n).fold(self.clone(), |acc, k| acc.meet(&self.bracket(k)))
    }

    pub fn gamma(&self) -> Map {
        (1..self.n).fold(self.clone(), |acc, k| acc.join(&self.bracket(k)))
    }

    /// Least `p >= 1` with `f(x + p) = f(x) + p`.
    pub fn per(&self) -> i64 {
        (1..=self.n).find(|&p| (0..self.n).all(|x| self.at(x + p) == self.at(x) + p)).unwrap()
    }

    /// The same map viewed with period `p`.
    pub fn with_period(&self, p: i64) -> Map {
        Map::tabulate(p, |x| self.at(x))
    }

    pub fn hmax(&self) -> i64 {
        (0..self.n).map(|x| self.at(x) - x).max().unwrap()
    }

    pub fn hmin(&self) -> i64 {
        (0..self.n).map(|x| self.at(x) - x).min().unwrap()
    }

    pub fn is_positive(&self) -> bool {
        self.hmin() >= 0
    }

    pub fn is_identity(&self) -> bool {
        *self == Map::identity(self.n)
    }

    pub fn is_idempotent(&self) -> bool {
        self.mul(self) == *self
    }

    pub fn has_fixed_point(&self) -> bool {
        (0..self.n).any(|x| self.at(x) == x)
    }

    /// Some `n`-element interval is mapped into itself, checked point by point.
    pub fn has_flat_interval(&self) -> bool {
        (0..self.n).any(|a| (a..a + self.n).all(|x| (a..a + self.n).contains(&self.at(x))))
    }

    /// Exactly one residue moves, and it moves up by one.
    pub fn is_atom(&self) -> bool {
        let moved: Vec<i64> = (0..self.n).filter(|&x| self.at(x) != x).collect();
        self.n > 1 && moved.len() == 1 && self.at(moved[0]) == moved[0] + 1
    }
}

/// Every `n`-periodic map with heights in `lo..=hi`, by brute force.
pub fn all_maps(n: i64, lo: i64, hi: i64) -> Vec<Map> {
    let width = hi - lo + 1;
    let total = width.pow(n as u32);
    (0..total)
        .filter_map(|mut code| {
            let v = (0..n)
                .map(|i| {
                    let d = code % width + lo;
                    code /= width;
                    i + d
                })
                .collect();
            let m = Map::new(v);
            m.is_valid().then_some(m)
        })
        .collect()
}

/// The positive idempotent with fixed points `fixed + nZ`.
pub fn positive_idempotent(n: i64, fixed: &BTreeSet<i64>) -> Map {
    Map::tabulate(n, |k| (k..).find(|l| fixed.contains(&l.rem_euclid(n))).unwrap())
}

/// Divisors of `n`, by trial.
pub fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// Subsets of the divisors of `n` closed under taking divisors.
pub fn divisor_downsets(n: usize) -> Vec<BTreeSet<usize>> {
    let ds = divisors(n);
    (0u32..1 << ds.len())
        .map(|mask| (0..ds.len()).filter(|i| mask >> i & 1 == 1).map(|i| ds[i]).collect::<BTreeSet<_>>())
        .filter(|s| s.iter().all(|&a| ds.iter().all(|&b| a % b != 0 || s.contains(&b))))
        .collect()
}

/// A wreath element as a map on `Z x Z` ordered lexicographically.
pub fn act(w: &WreathElement, (i, m): (i64, i64)) -> (i64, i64) {
    (i + w.g, w.local.at(i).eval(m))
}

/// Points covering every distinct local behaviour of the given elements.
pub fn wreath_box(ws: &[&WreathElement], margin: i64) -> Vec<(i64, i64)> {
    let n = ws[0].n() as i64;
    let idx: Vec<i64> = ws
        .iter()
        .flat_map(|w| w.local.exceptions().keys().copied().chain([0]))
        .collect();
    let (lo, hi) = (idx.iter().min().unwrap() - margin, idx.iter().max().unwrap() + margin);
    (lo..=hi).flat_map(|i| (0..n).map(move |m| (i, m))).collect()
}

/// `min { p : q <= w(p) }` over a search box around `q`.
pub fn wreath_resl_at(w: &WreathElement, q: (i64, i64)) -> (i64, i64) {
    (q.0 - 4..=q.0 + 4)
        .flat_map(|i| (q.1 - R..=q.1 + R).map(move |m| (i, m)))
        .filter(|&p| q <= act(w, p))
        .min()
        .expect("radius")
}

/// `max { p : w(p) <= q }` over a search box around `q`.
pub fn wreath_resr_at(w: &WreathElement, q: (i64, i64)) -> (i64, i64) {
    (q.0 - 4..=q.0 + 4)
        .flat_map(|i| (q.1 - R..=q.1 + R).map(move |m| (i, m)))
        .filter(|&p| act(w, p) <= q)
        .max()
        .expect("radius")
}
