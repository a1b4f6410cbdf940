//! Elements of `F_n(Z)`: order-preserving, finite-to-one maps `f` on the
//! integers with `f(x + n) = f(x) + n`.
//!
//! A map is stored by its values on the base window `[0, n-1]`; the total map
//! is `f(x) = v[x mod n] + n * floor(x / n)`. Elements are never reduced to
//! their minimal period automatically, so the period `n` is part of the value.
//! Equality across different periods goes through [`PeriodicMap::same_map`].

mod algorithms;
mod decompose;
mod structure;

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use smallvec::SmallVec;

use crate::error::{Error, Result};

pub use algorithms::{GenerationStage, GenerationTrace, LcmJoin};
pub use decompose::{Letter, Strategy, Word, DEFAULT_SEARCH_LIMIT};

/// Largest absolute value any stored value may reach. Desk-scale inputs stay
/// far below this; crossing it means something diverged.
pub const VALUE_BOUND: i64 = 1 << 40;

pub(crate) type Values = SmallVec<[i64; 8]>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PeriodicMap {
    values: Values,
}

impl PeriodicMap {
    /// Validates `values` as one period of an element of `F_n(Z)`.
    pub fn new(n: i64, values: &[i64]) -> Result<Self> {
        if n <= 0 {
            return Err(Error::InvalidPeriod(n));
        }
        if values.len() as i64 != n {
            return Err(Error::Literal(format!(
                "expected {n} values, got {}",
                values.len()
            )));
        }
        for i in 0..values.len().saturating_sub(1) {
            if values[i] > values[i + 1] {
                return Err(Error::NotMonotone(format!(
                    "v{} = {} > v{} = {}",
                    i,
                    values[i],
                    i + 1,
                    values[i + 1]
                )));
            }
        }
        let last = values[values.len() - 1];
        if last > values[0] + n {
            return Err(Error::NotMonotone(format!(
                "wrap: v{} = {} > v0 + {} = {}",
                n - 1,
                last,
                n,
                values[0] + n
            )));
        }
        Ok(Self::from_values(values.iter().copied().collect()))
    }

    /// Internal constructor for values already known to be valid.
    pub(crate) fn from_values(values: Values) -> Self {
        debug_assert!(!values.is_empty());
        for &v in values.iter() {
            assert!(
                v.abs() <= VALUE_BOUND,
                "value {v} exceeds the configured bound {VALUE_BOUND}"
            );
        }
        let f = PeriodicMap { values };
        debug_assert!(f.check_invariants());
        f
    }

    fn check_invariants(&self) -> bool {
        let n = self.n() as i64;
        self.values.windows(2).all(|w| w[0] <= w[1])
            && self.values[self.values.len() - 1] <= self.values[0] + n
    }

    pub fn identity(n: usize) -> Self {
        Self::shift(n, 0)
    }

    /// The power `s^m` of the successor map `x -> x + 1`, represented with period `n`.
    pub fn shift(n: usize, m: i64) -> Self {
        assert!(n > 0, "period must be positive");
        Self::from_values((0..n as i64).map(|i| m + i).collect())
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    #[inline]
    pub fn eval(&self, x: i64) -> i64 {
        let n = self.values.len() as i64;
        let (q, r) = x.div_mod_floor(&n);
        self.values[r as usize] + n * q
    }

    fn same_period(&self, other: &Self) -> Result<()> {
        if self.n() == other.n() {
            Ok(())
        } else {
            Err(Error::PeriodMismatch(self.n(), other.n()))
        }
    }

    /// The composite `x -> self(other(x))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.same_period(other)?;
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Self) -> Self {
        Self::from_values(other.values.iter().map(|&x| self.eval(x)).collect())
    }

    pub fn meet(&self, other: &Self) -> Result<Self> {
        self.same_period(other)?;
        Ok(self.zip_with(other, i64::min))
    }

    pub fn join(&self, other: &Self) -> Result<Self> {
        self.same_period(other)?;
        Ok(self.zip_with(other, i64::max))
    }

    pub(crate) fn zip_with(&self, other: &Self, op: impl Fn(i64, i64) -> i64) -> Self {
        Self::from_values(
            self.values
                .iter()
                .zip(other.values.iter())
                .map(|(&a, &b)| op(a, b))
                .collect(),
        )
    }

    /// Pointwise order.
    pub fn leq(&self, other: &Self) -> Result<bool> {
        self.same_period(other)?;
        Ok(self.values.iter().zip(other.values.iter()).all(|(a, b)| a <= b))
    }

    pub fn hmin(&self) -> i64 {
        self.heights().min().expect("nonempty period")
    }

    pub fn hmax(&self) -> i64 {
        self.heights().max().expect("nonempty period")
    }

    /// Heights `f(i) - i` over the base window.
    pub fn heights(&self) -> impl Iterator<Item = i64> + '_ {
        self.values.iter().enumerate().map(|(i, &v)| v - i as i64)
    }

    /// Dual residual: `f^l(q) = min { p : q <= f(p) }`.
    ///
    /// The minimizer lies in `[q - hmax - n, q - hmin + n]`: below the window
    /// `f(p) <= p + hmax < q`, at its top `f(p) >= p + hmin >= q`. Since `f^l`
    /// is monotone the scan pointer never moves backwards across `q`.
    pub fn resl(&self) -> Self {
        let n = self.n() as i64;
        let (lo, hi) = (self.hmin(), self.hmax());
        let mut p = -hi - n;
        let mut out = Values::with_capacity(self.n());
        debug_assert!(self.eval(p) < 0);
        for q in 0..n {
            while self.eval(p) < q {
                p += 1;
                assert!(p <= q - lo + n, "dual residual minimizer escaped its window");
            }
            out.push(p);
        }
        Self::from_values(out)
    }

    /// Residual: `f^r(q) = max { p : f(p) <= q }`.
    pub fn resr(&self) -> Self {
        let n = self.n() as i64;
        let (lo, hi) = (self.hmin(), self.hmax());
        // scan downward from the top of the window for q = n-1, then reuse
        let mut p = (n - 1) - lo + n;
        let mut out = Values::from_elem(0, self.n());
        for q in (0..n).rev() {
            while self.eval(p) > q {
                p -= 1;
                assert!(p >= q - hi - n, "residual maximizer escaped its window");
            }
            out[q as usize] = p;
        }
        Self::from_values(out)
    }

    /// `f^[k](x) = f(x - k) + k`, i.e. conjugation by `s^k`.
    pub fn conj_shift(&self, k: i64) -> Self {
        Self::from_values((0..self.n() as i64).map(|i| self.eval(i - k) + k).collect())
    }

    /// Greatest invertible element below `f`.
    pub fn sigma(&self) -> Self {
        Self::shift(self.n(), self.hmin())
    }

    /// Least invertible element above `f`.
    pub fn gamma(&self) -> Self {
        Self::shift(self.n(), self.hmax())
    }

    /// `||f|| = sigma(f)^-1 v gamma(f)`, always a shift `s^k` with `k >= 0`.
    pub fn norm(&self) -> Self {
        Self::shift(self.n(), (-self.hmin()).max(self.hmax()))
    }

    /// Whether `b` lies in the convex subalgebra generated by `a`, i.e.
    /// `||b|| <= ||a||^k` for some `k >= 0`.
    ///
    /// Norms are shifts, so this holds iff `||a||` is a proper shift or `||b|| = 1`.
    pub fn cv_member(b: &Self, a: &Self) -> Result<bool> {
        b.same_period(a)?;
        let nb = (-b.hmin()).max(b.hmax());
        let na = (-a.hmin()).max(a.hmax());
        Ok(na != 0 || nb == 0)
    }

    pub fn is_invertible(&self) -> bool {
        self.hmin() == self.hmax()
    }

    pub fn is_identity(&self) -> bool {
        self.heights().all(|h| h == 0)
    }

    /// `f^k` under composition; `f^0` is the identity.
    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::identity(self.n());
        for _ in 0..k {
            acc = self.compose_unchecked(&acc);
        }
        acc
    }

    /// Whether `f(x + k) = f(x) + k` for all `x`.
    pub fn has_period(&self, k: usize) -> bool {
        let k = k as i64;
        (0..self.n() as i64).all(|x| self.eval(x + k) == self.eval(x) + k)
    }

    /// The least `k >= 1` for which `f` is `k`-periodic.
    pub fn per(&self) -> usize {
        // Only divisors of n need checking: if j and n are both periods then
        // so is gcd(j, n), so the least period divides n.
        divisors(self.n())
            .into_iter()
            .find(|&d| self.has_period(d))
            .expect("n is always a period")
    }

    /// Re-represents the same total map with period `m`, where `n | m`.
    pub fn rescale(&self, m: usize) -> Result<Self> {
        if m == 0 || m % self.n() != 0 {
            return Err(Error::NotDivisible { from: self.n(), to: m });
        }
        Ok(Self::from_values((0..m as i64).map(|x| self.eval(x)).collect()))
    }

    /// Re-represents the map with a smaller period `k`, which must be a period of it.
    pub fn reduce_period(&self, k: usize) -> Result<Self> {
        if k == 0 || self.n() % k != 0 {
            return Err(Error::NotDivisible { from: k, to: self.n() });
        }
        if !self.has_period(k) {
            return Err(Error::NotPeriodic(k));
        }
        Ok(Self::from_values(self.values[..k].iter().copied().collect()))
    }

    /// The same map, stored with its minimal period.
    pub fn reduced(&self) -> Self {
        self.reduce_period(self.per()).expect("per is a period")
    }

    /// Equality of the underlying total maps, whatever their stored periods.
    pub fn same_map(&self, other: &Self) -> bool {
        let l = self.n().lcm(&other.n());
        self.rescale(l).expect("n | lcm") == other.rescale(l).expect("n | lcm")
    }
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: usize) -> Vec<usize> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

impl fmt::Display for PeriodicMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}:[", self.n())?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for PeriodicMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for PeriodicMap {
    type Err = Error;

    /// Parses `F<n>:[v0,...,v{n-1}]`, ignoring whitespace.
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Literal(format!("expected F<n>:[v0,...], got `{s}`"));
        let rest = s.strip_prefix('F').ok_or_else(bad)?;
        let (n, list) = rest.split_once(':').ok_or_else(bad)?;
        let n: i64 = n.parse().map_err(|_| bad())?;
        let list = list
            .strip_prefix('[')
            .and_then(|l| l.strip_suffix(']'))
            .ok_or_else(bad)?;
        let values = if list.is_empty() {
            Vec::new()
        } else {
            list.split(',')
                .map(|v| v.parse::<i64>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?
        };
        PeriodicMap::new(n, &values)
    }
}
