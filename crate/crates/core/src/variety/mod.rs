//! Varieties generated by finitely many `F_k(Z)`, named by antichains of the
//! divisibility order: `V(S) <= V(T)` iff every element of `S` divides some
//! element of `T`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::terms::{axiom_join, Equation};

pub use crate::periodic::divisors;

/// All downward-closed subsets of the divisors of `n` under divisibility.
/// The empty set comes first; a divisor is only added once all its proper
/// divisors are present.
pub fn downsets(n: usize) -> Vec<BTreeSet<usize>> {
    assert!(n >= 1, "n must be positive");
    let ds = divisors(n);
    let mut out = Vec::new();
    let mut current = BTreeSet::new();
    extend_downsets(&ds, 0, &mut current, &mut out);
    out
}

fn extend_downsets(ds: &[usize], i: usize, cur: &mut BTreeSet<usize>, out: &mut Vec<BTreeSet<usize>>) {
    if i == ds.len() {
        out.push(cur.clone());
        return;
    }
    extend_downsets(ds, i + 1, cur, out);
    let d = ds[i];
    if ds[..i].iter().filter(|&&e| d % e == 0).all(|e| cur.contains(e)) {
        cur.insert(d);
        extend_downsets(ds, i + 1, cur, out);
        cur.remove(&d);
    }
}

/// A variety `V(S)`, stored as the maximal elements of `↓S`. The empty
/// antichain is the trivial variety.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VarietySig {
    antichain: BTreeSet<usize>,
}

impl VarietySig {
    /// Keeps the maximal elements of `s` under divisibility.
    pub fn normalize(s: impl IntoIterator<Item = usize>) -> Result<Self> {
        let s: BTreeSet<usize> = s.into_iter().collect();
        if s.contains(&0) {
            return Err(Error::PreconditionFailed("indices must be positive".into()));
        }
        let antichain = s
            .iter()
            .copied()
            .filter(|&a| !s.iter().any(|&b| b != a && b % a == 0))
            .collect();
        Ok(VarietySig { antichain })
    }

    pub fn trivial() -> Self {
        VarietySig::default()
    }

    pub fn antichain(&self) -> &BTreeSet<usize> {
        &self.antichain
    }

    pub fn is_trivial(&self) -> bool {
        self.antichain.is_empty()
    }

    /// `↓S`: every divisor of an element of the antichain.
    pub fn downset(&self) -> BTreeSet<usize> {
        self.antichain.iter().flat_map(|&a| divisors(a)).collect()
    }

    pub fn leq(&self, other: &Self) -> bool {
        self.antichain.iter().all(|a| other.antichain.iter().any(|b| b % a == 0))
    }

    pub fn join(&self, other: &Self) -> Self {
        Self::normalize(self.antichain.union(&other.antichain).copied()).expect("positive")
    }

    /// `↓A ∩ ↓B`, generated by the pairwise gcds.
    pub fn meet(&self, other: &Self) -> Self {
        let gcds = self
            .antichain
            .iter()
            .flat_map(|a| other.antichain.iter().map(move |b| a.gcd(b)));
        Self::normalize(gcds).expect("positive")
    }
}

impl fmt::Display for VarietySig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.antichain.iter().rev().map(|k| k.to_string()).collect();
        write!(f, "V{{{}}}", items.join(","))
    }
}

impl FromStr for VarietySig {
    type Err = Error;

    /// `V{4,3}`; the listed set need not be an antichain.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Literal(format!("expected V{{k1,k2,...}}, got `{s}`"));
        let inner = s
            .trim()
            .strip_prefix("V{")
            .and_then(|r| r.strip_suffix('}'))
            .ok_or_else(bad)?;
        let items = inner
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        Self::normalize(items)
    }
}

/// The maximal prime powers dividing `n`, e.g. `V{4,3}` for `12`.
pub fn properly_periodic_bottom(n: usize) -> VarietySig {
    assert!(n >= 1, "n must be positive");
    let mut rest = n;
    let mut powers = Vec::new();
    let mut p = 2;
    while p * p <= rest {
        if rest % p == 0 {
            let mut q = 1;
            while rest % p == 0 {
                rest /= p;
                q *= p;
            }
            powers.push(q);
        }
        p += 1;
    }
    if rest > 1 {
        powers.push(rest);
    }
    if powers.is_empty() {
        powers.push(1);
    }
    VarietySig::normalize(powers).expect("positive")
}

/// Single-inequality axiomatization of `sig` relative to distributive
/// l-pregroups.
pub fn axiom_for(sig: &VarietySig) -> Result<Equation> {
    if sig.is_trivial() {
        return Err(Error::EmptySignature);
    }
    axiom_join(&sig.antichain.iter().copied().collect::<Vec<_>>())
}

/// Hasse diagram of the subvarieties of `V(F_n(Z))`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverReport {
    pub n: usize,
    pub nodes: Vec<String>,
    /// `[i, j]`: node `j` covers node `i`.
    pub covers: Vec<[usize; 2]>,
}

/// Subvarieties of `V(F_n(Z))` in [`downsets`] order.
pub fn subvarieties(n: usize) -> Vec<VarietySig> {
    downsets(n)
        .into_iter()
        .map(|d| VarietySig::normalize(d).expect("positive"))
        .collect()
}

pub fn cover_report(n: usize) -> CoverReport {
    let ds = downsets(n);
    let mut covers = Vec::new();
    for (i, a) in ds.iter().enumerate() {
        for (j, b) in ds.iter().enumerate() {
            if b.len() == a.len() + 1 && a.is_subset(b) {
                covers.push([i, j]);
            }
        }
    }
    CoverReport { n, nodes: subvarieties(n).iter().map(|v| v.to_string()).collect(), covers }
}
