//! The wreath product of the translations of `Z` with `F_n(Z)`, restricted to
//! local families that are eventually constant in both directions.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::terms::Model;
use crate::PeriodicMap;

/// A `Z`-indexed family of elements of `F_n(Z)` equal to `left` at every
/// index `i < 0` and to `right` at every `i >= 0`, except at finitely many
/// indices. Exceptions never repeat the tail value, so the representation
/// is canonical.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LocalFamily {
    left: PeriodicMap,
    right: PeriodicMap,
    exceptions: BTreeMap<i64, PeriodicMap>,
}

impl LocalFamily {
    pub fn new(
        left: PeriodicMap,
        right: PeriodicMap,
        exceptions: BTreeMap<i64, PeriodicMap>,
    ) -> Result<Self> {
        let n = left.n();
        for f in std::iter::once(&right).chain(exceptions.values()) {
            if f.n() != n {
                return Err(Error::PeriodMismatch(n, f.n()));
            }
        }
        let mut fam = LocalFamily { left, right, exceptions: BTreeMap::new() };
        for (i, f) in exceptions {
            if f != *fam.tail(i) {
                fam.exceptions.insert(i, f);
            }
        }
        Ok(fam)
    }

    pub fn constant(f: PeriodicMap) -> Self {
        LocalFamily { left: f.clone(), right: f, exceptions: BTreeMap::new() }
    }

    pub fn n(&self) -> usize {
        self.left.n()
    }

    pub fn left(&self) -> &PeriodicMap {
        &self.left
    }

    pub fn right(&self) -> &PeriodicMap {
        &self.right
    }

    pub fn exceptions(&self) -> &BTreeMap<i64, PeriodicMap> {
        &self.exceptions
    }

    fn tail(&self, i: i64) -> &PeriodicMap {
        if i < 0 {
            &self.left
        } else {
            &self.right
        }
    }

    /// The component at index `i`.
    pub fn at(&self, i: i64) -> &PeriodicMap {
        self.exceptions.get(&i).unwrap_or_else(|| self.tail(i))
    }

    /// Indices at which the family can differ from a tail, including the
    /// split point.
    fn critical(&self) -> impl Iterator<Item = i64> + '_ {
        [-1, 0].into_iter().chain(self.exceptions.keys().copied())
    }

    /// Every distinct component.
    pub fn components(&self) -> impl Iterator<Item = &PeriodicMap> {
        [&self.left, &self.right].into_iter().chain(self.exceptions.values())
    }

    /// Materializes `comp` over `critical`, with the given tails, and checks that
    /// `comp` agrees with the tails just outside that range.
    fn build(
        left: PeriodicMap,
        right: PeriodicMap,
        critical: impl IntoIterator<Item = i64>,
        comp: impl Fn(i64) -> PeriodicMap,
    ) -> Self {
        let idx: BTreeSet<i64> = critical.into_iter().collect();
        let lo = *idx.first().expect("split point is critical");
        let hi = *idx.last().expect("split point is critical");
        let exceptions = (lo..=hi).map(|i| (i, comp(i))).collect();
        let fam = LocalFamily::new(left, right, exceptions).expect("components share a period");
        for i in [lo - 2, lo - 1, hi + 1, hi + 2] {
            assert_eq!(
                comp(i),
                *fam.at(i),
                "local family is not eventually constant at index {i}"
            );
        }
        fam
    }

    fn pointwise(&self, other: &Self, op: impl Fn(&PeriodicMap, &PeriodicMap) -> PeriodicMap) -> Self {
        Self::build(
            op(&self.left, &other.left),
            op(&self.right, &other.right),
            self.critical().chain(other.critical()),
            |i| op(self.at(i), other.at(i)),
        )
    }

    fn map(&self, op: impl Fn(&PeriodicMap) -> PeriodicMap) -> Self {
        Self::build(op(&self.left), op(&self.right), self.critical(), |i| op(self.at(i)))
    }
}

/// `(g, f)`: the translation `i -> i + g` of the index chain and a local
/// family; acts on `Z x Z` (ordered lexicographically) by
/// `(i, x) -> (i + g, f_i(x))`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WreathElement {
    pub g: i64,
    pub local: LocalFamily,
}

/// Indices whose component is not the identity. A flag is set when a whole
/// tail is non-identity, in which case the support is infinite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Support {
    pub indices: BTreeSet<i64>,
    pub left_tail: bool,
    pub right_tail: bool,
}

impl WreathElement {
    pub fn new(g: i64, local: LocalFamily) -> Self {
        WreathElement { g, local }
    }

    pub fn identity(n: usize) -> Self {
        WreathElement { g: 0, local: LocalFamily::constant(PeriodicMap::identity(n)) }
    }

    /// A local element that is the identity except at the given indices.
    pub fn local_at(n: usize, at: impl IntoIterator<Item = (i64, PeriodicMap)>) -> Result<Self> {
        let id = PeriodicMap::identity(n);
        Ok(WreathElement {
            g: 0,
            local: LocalFamily::new(id.clone(), id, at.into_iter().collect())?,
        })
    }

    pub fn n(&self) -> usize {
        self.local.n()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.n() == other.n() {
            Ok(())
        } else {
            Err(Error::ShapeMismatch(format!(
                "wreath elements over F{} and F{}",
                self.n(),
                other.n()
            )))
        }
    }

    /// Composite `self ∘ other`: `(g + g', i -> f_{i+g'} ∘ f'_i)`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let shift = other.g;
        let local = LocalFamily::build(
            self.local.left.compose_unchecked(&other.local.left),
            self.local.right.compose_unchecked(&other.local.right),
            other.local.critical().chain(self.local.critical().map(|i| i - shift)),
            |i| self.local.at(i + shift).compose_unchecked(other.local.at(i)),
        );
        Ok(WreathElement { g: self.g + other.g, local })
    }

    fn residual(&self, op: fn(&PeriodicMap) -> PeriodicMap) -> Self {
        let g = self.g;
        let local = LocalFamily::build(
            op(&self.local.left),
            op(&self.local.right),
            self.local.critical().map(|i| i + g).chain([-1, 0]),
            |i| op(self.local.at(i - g)),
        );
        WreathElement { g: -g, local }
    }

    /// `(-g, i -> (f_{i-g})^l)`.
    pub fn resl(&self) -> Self {
        self.residual(PeriodicMap::resl)
    }

    /// `(-g, i -> (f_{i-g})^r)`.
    pub fn resr(&self) -> Self {
        self.residual(PeriodicMap::resr)
    }

    pub fn leq(&self, other: &Self) -> Result<bool> {
        self.check(other)?;
        Ok(match self.g.cmp(&other.g) {
            std::cmp::Ordering::Less => true,
            std::cmp::Ordering::Greater => false,
            std::cmp::Ordering::Equal => {
                let (a, b) = (&self.local, &other.local);
                a.left.leq(&b.left)? && a.right.leq(&b.right)? && a
                    .critical()
                    .chain(b.critical())
                    .all(|i| a.at(i).leq(b.at(i)).expect("same period"))
            }
        })
    }

    fn lattice(&self, other: &Self, meet: bool) -> Result<Self> {
        self.check(other)?;
        use std::cmp::Ordering::*;
        Ok(match (self.g.cmp(&other.g), meet) {
            (Less, true) | (Greater, false) => self.clone(),
            (Less, false) | (Greater, true) => other.clone(),
            (Equal, _) => {
                let op = if meet { i64::min } else { i64::max };
                WreathElement {
                    g: self.g,
                    local: self.local.pointwise(&other.local, |a, b| a.zip_with(b, op)),
                }
            }
        })
    }

    pub fn meet(&self, other: &Self) -> Result<Self> {
        self.lattice(other, true)
    }

    pub fn join(&self, other: &Self) -> Result<Self> {
        self.lattice(other, false)
    }

    pub fn is_local(&self) -> bool {
        self.g == 0
    }

    pub fn support(&self) -> Support {
        let id = PeriodicMap::identity(self.n());
        Support {
            indices: self.local.exceptions.iter().filter(|(_, f)| **f != id).map(|(&i, _)| i).collect(),
            left_tail: self.local.left != id,
            right_tail: self.local.right != id,
        }
    }

    /// Componentwise `sigma`, global part unchanged.
    pub fn sigma_w(&self) -> Self {
        WreathElement { g: self.g, local: self.local.map(PeriodicMap::sigma) }
    }

    /// Componentwise `gamma`, global part unchanged.
    pub fn gamma_w(&self) -> Self {
        WreathElement { g: self.g, local: self.local.map(PeriodicMap::gamma) }
    }

    /// `x^[k]`, computed componentwise.
    pub fn conj_shift(&self, k: i64) -> Self {
        WreathElement { g: self.g, local: self.local.map(|f| f.conj_shift(k)) }
    }

    /// Least `k` with `x^[k] = x`: the lcm of the component periodicities.
    pub fn per(&self) -> usize {
        self.local.components().fold(1, |acc, f| acc.lcm(&f.per()))
    }

    pub fn is_idempotent(&self) -> bool {
        self.mul(self).expect("same shape") == *self
    }

    /// Idempotency read off the components: trivial global part and
    /// idempotent local components.
    pub fn is_idempotent_by_components(&self) -> bool {
        self.g == 0 && self.local.components().all(PeriodicMap::is_idempotent)
    }
}

impl fmt::Display for WreathElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W(g={}; left={}; right={}; at{{", self.g, self.local.left, self.local.right)?;
        for (k, (i, c)) in self.local.exceptions.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}={c}")?;
        }
        f.write_str("})")
    }
}

impl fmt::Debug for WreathElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Splits on `sep` outside square brackets.
fn split_top(s: &str, sep: char) -> Vec<&str> {
    let mut parts = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in s.char_indices() {
        match c {
            '[' => depth += 1,
            ']' => depth -= 1,
            c if c == sep && depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

impl FromStr for WreathElement {
    type Err = Error;

    /// `W(g=<int>; left=F<n>:[..]; right=F<n>:[..]; at{i=F<n>:[..],...})`
    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::Literal(format!("wreath literal `{s}`: {why}"));
        let body = s
            .trim()
            .strip_prefix("W(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| bad("expected W(...)"))?;
        let (mut g, mut left, mut right, mut at) = (None, None, None, BTreeMap::new());
        for field in body.split(';').map(str::trim) {
            if let Some(v) = field.strip_prefix("g=") {
                g = Some(v.trim().parse::<i64>().map_err(|_| bad("g is not an integer"))?);
            } else if let Some(v) = field.strip_prefix("left=") {
                left = Some(v.parse::<PeriodicMap>()?);
            } else if let Some(v) = field.strip_prefix("right=") {
                right = Some(v.parse::<PeriodicMap>()?);
            } else if let Some(v) = field.strip_prefix("at{") {
                let inner = v.strip_suffix('}').ok_or_else(|| bad("unclosed at{"))?;
                for entry in split_top(inner, ',').into_iter().map(str::trim).filter(|e| !e.is_empty()) {
                    let (i, f) = entry.split_once('=').ok_or_else(|| bad("expected i=F<n>:[..]"))?;
                    let i = i.trim().parse::<i64>().map_err(|_| bad("bad index"))?;
                    if at.insert(i, f.parse::<PeriodicMap>()?).is_some() {
                        return Err(bad("repeated index"));
                    }
                }
            } else {
                return Err(bad(&format!("unknown field `{field}`")));
            }
        }
        let (g, left, right) = match (g, left, right) {
            (Some(g), Some(l), Some(r)) => (g, l, r),
            _ => return Err(bad("g, left and right are required")),
        };
        Ok(WreathElement { g, local: LocalFamily::new(left, right, at)? })
    }
}

/// Wreath product model over `F_n(Z)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WreathModel {
    pub n: usize,
}

impl WreathModel {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "period must be positive");
        WreathModel { n }
    }
}

impl Model for WreathModel {
    type Elem = WreathElement;

    fn name(&self) -> String {
        format!("WxF{}", self.n)
    }

    fn one(&self) -> WreathElement {
        WreathElement::identity(self.n)
    }

    fn mul(&self, a: &WreathElement, b: &WreathElement) -> Result<WreathElement> {
        a.mul(b)
    }

    fn meet(&self, a: &WreathElement, b: &WreathElement) -> Result<WreathElement> {
        a.meet(b)
    }

    fn join(&self, a: &WreathElement, b: &WreathElement) -> Result<WreathElement> {
        a.join(b)
    }

    fn resl(&self, a: &WreathElement) -> Result<WreathElement> {
        Ok(a.resl())
    }

    fn resr(&self, a: &WreathElement) -> Result<WreathElement> {
        Ok(a.resr())
    }

    fn leq(&self, a: &WreathElement, b: &WreathElement) -> Result<bool> {
        a.leq(b)
    }

    fn format(&self, a: &WreathElement) -> String {
        a.to_string()
    }

    fn parse_elem(&self, s: &str) -> Result<WreathElement> {
        let e: WreathElement = s.parse()?;
        if e.n() != self.n {
            return Err(Error::ShapeMismatch(format!("{e} is not over F{}", self.n)));
        }
        Ok(e)
    }
}
