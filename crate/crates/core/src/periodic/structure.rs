//! Order-theoretic structure of single elements: positivity, idempotency,
//! flatness, atoms, `core` and `delta`.

use std::collections::BTreeSet;

use super::{PeriodicMap, Values};
use crate::error::{Error, Result};

impl PeriodicMap {
    /// `1 <= f`.
    pub fn is_positive(&self) -> bool {
        self.heights().all(|h| h >= 0)
    }

    /// `1 < f`.
    pub fn is_strictly_positive(&self) -> bool {
        self.is_positive() && !self.is_identity()
    }

    pub fn is_idempotent(&self) -> bool {
        self.compose_unchecked(self) == *self
    }

    /// Residues `i` in `[0, n-1]` with `f(i) = i`; by periodicity these
    /// describe every fixed point.
    pub fn fixed_points(&self) -> BTreeSet<usize> {
        self.heights()
            .enumerate()
            .filter(|&(_, h)| h == 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// Left endpoint `a` in `[0, n-1]` of an `n`-element interval `I = [a, a+n-1]`
    /// with `f[I] ⊆ I`, if any. By monotonicity only the endpoints matter.
    pub fn flat_interval(&self) -> Option<i64> {
        let n = self.n() as i64;
        (0..n).find(|&a| self.eval(a) >= a && self.eval(a + n - 1) <= a + n - 1)
    }

    /// Flatness, decided by three independent criteria that must agree:
    /// a fixed point exists; `f^n = f^(n-1)`; a flat interval exists.
    pub fn is_flat(&self) -> bool {
        let by_fixed_point = !self.fixed_points().is_empty();
        let n = self.n();
        let by_powers = self.pow(n) == self.pow(n - 1);
        let by_interval = self.flat_interval().is_some();
        assert!(
            by_fixed_point == by_powers && by_powers == by_interval,
            "flatness criteria disagree on {self}: fixed point {by_fixed_point}, \
             powers {by_powers}, interval {by_interval}"
        );
        by_fixed_point
    }

    /// The positive idempotent whose fixed points are exactly `fixed + nZ`:
    /// `e(k) = min { l >= k : l fixed }`.
    pub fn positive_idempotent(n: usize, fixed: &BTreeSet<usize>) -> Result<Self> {
        if fixed.is_empty() || fixed.iter().any(|&i| i >= n) {
            return Err(Error::PreconditionFailed(format!(
                "fixed-point residues must be a nonempty subset of [0, {}]",
                n.saturating_sub(1)
            )));
        }
        let first = *fixed.iter().next().expect("nonempty") as i64;
        let values = (0..n as i64)
            .map(|k| {
                fixed
                    .iter()
                    .map(|&l| l as i64)
                    .find(|&l| l >= k)
                    .unwrap_or(first + n as i64)
            })
            .collect();
        Ok(Self::from_values(values))
    }

    /// The `n`-atoms `c_1, ..., c_n` with `c_i(i-1) = i` and identity elsewhere
    /// on the period. Empty for `n = 1`.
    pub fn atoms(n: usize) -> Vec<Self> {
        if n <= 1 {
            return Vec::new();
        }
        (1..=n).map(|i| Self::atom(n, i)).collect()
    }

    /// The single atom `c_i`, `1 <= i <= n`.
    pub fn atom(n: usize, i: usize) -> Self {
        assert!(n > 1 && (1..=n).contains(&i), "atom index out of range");
        let mut v: Values = (0..n as i64).collect();
        v[i - 1] += 1;
        Self::from_values(v)
    }

    /// Covers of the identity in `F_n(Z)`: positive idempotents whose fixed
    /// points are all residues but one.
    pub fn is_atom(&self) -> bool {
        self.n() > 1
            && self.is_positive()
            && self.is_idempotent()
            && self.fixed_points().len() == self.n() - 1
    }

    /// Residues `l` with `f^[l](0) > 0`.
    pub fn p_set(&self) -> BTreeSet<usize> {
        (0..self.n())
            .filter(|&l| self.eval(-(l as i64)) + l as i64 > 0)
            .collect()
    }

    /// Meet of the conjugates `f^[l]` over `l` in the p-set.
    pub fn core(&self) -> Result<Self> {
        let mut it = self.p_set().into_iter();
        let first = it.next().ok_or(Error::EmptyPSet)?;
        Ok(it.fold(self.conj_shift(first as i64), |acc, l| {
            acc.zip_with(&self.conj_shift(l as i64), i64::min)
        }))
    }

    /// `f^lll f v 1`.
    pub fn delta(&self) -> Self {
        let lll = self.resl().resl().resl();
        lll.compose_unchecked(self)
            .zip_with(&Self::identity(self.n()), i64::max)
    }

    /// Periodicity of `f^(n-1)`, the least idempotent above a positive flat `f`.
    pub fn final_periodicity(&self) -> Result<usize> {
        if !self.is_positive() {
            return Err(Error::NotPositive);
        }
        if !self.is_flat() {
            return Err(Error::NotFlat);
        }
        Ok(self.pow(self.n() - 1).per())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pm(s: &str) -> PeriodicMap {
        s.parse().unwrap()
    }

    #[test]
    fn flatness_examples() {
        let f = pm("F6:[2,2,2,4,5,5]");
        assert!(f.is_flat());
        assert_eq!(f.fixed_points(), BTreeSet::from([2, 5]));
        assert!(!PeriodicMap::shift(2, 1).is_flat());
        assert!(PeriodicMap::identity(3).is_flat());
        assert!(pm("F2:[1,1]").is_idempotent());
        assert_eq!(pm("F3:[1,1,2]").flat_interval(), Some(0));
    }

    #[test]
    fn atom_examples() {
        assert_eq!(PeriodicMap::atoms(2), vec![pm("F2:[1,1]"), pm("F2:[0,2]")]);
        assert!(PeriodicMap::atoms(1).is_empty());
        assert!(pm("F3:[1,1,2]").is_atom());
        assert!(!PeriodicMap::identity(3).is_atom());
        assert!(!pm("F3:[2,2,2]").is_atom());
        for n in 2..7 {
            for a in PeriodicMap::atoms(n) {
                assert!(a.is_atom(), "{a}");
            }
        }
    }

    #[test]
    fn positive_idempotents_from_fixed_points() {
        let e = PeriodicMap::positive_idempotent(6, &BTreeSet::from([2, 5])).unwrap();
        assert_eq!(e, pm("F6:[2,2,2,5,5,5]"));
        assert!(e.is_idempotent() && e.is_positive());
        assert_eq!(e.fixed_points(), BTreeSet::from([2, 5]));
        assert!(PeriodicMap::positive_idempotent(3, &BTreeSet::new()).is_err());
    }

    #[test]
    fn core_examples() {
        let f = pm("F6:[2,2,2,4,5,5]");
        assert_eq!(f.p_set(), BTreeSet::from([0, 2, 3, 5]));
        assert_eq!(f.core().unwrap(), pm("F6:[1,1,2,4,4,5]"));
        assert_eq!(pm("F2:[1,1]").core().unwrap(), pm("F2:[1,1]"));
        assert_eq!(PeriodicMap::identity(4).core(), Err(Error::EmptyPSet));
    }

    #[test]
    fn delta_examples() {
        let e = pm("F2:[1,1]");
        assert_eq!(e.resl().resl().resl(), pm("F2:[-1,1]"));
        assert_eq!(e.delta(), e);
        assert_eq!(pm("F3:[2,2,2]").delta(), pm("F3:[1,1,2]"));
        assert_eq!(PeriodicMap::identity(4).delta(), PeriodicMap::identity(4));
    }

    #[test]
    fn final_periodicity_examples() {
        assert_eq!(pm("F6:[2,2,2,4,5,5]").final_periodicity(), Ok(3));
        assert_eq!(pm("F6:[3,3,3,3,6,6]").final_periodicity(), Ok(6));
        assert_eq!(PeriodicMap::identity(5).final_periodicity(), Ok(1));
        assert_eq!(PeriodicMap::shift(2, 1).final_periodicity(), Err(Error::NotFlat));
        assert_eq!(pm("F2:[-1,1]").final_periodicity(), Err(Error::NotPositive));
    }
}
