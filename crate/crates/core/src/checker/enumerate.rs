use std::collections::BTreeMap;

use super::{Bounds, Tails};
use crate::error::Result;
use crate::models::{FnModel, LexElement, LexModel, LocalFamily, WreathElement, WreathModel};
use crate::periodic::PeriodicMap;
use crate::terms::Model;

/// `0, 1, -1, 2, -2, ..., h, -h`.
pub fn zigzag(h: i64) -> Vec<i64> {
    std::iter::once(0).chain((1..=h).flat_map(|k| [k, -k])).collect()
}

/// Every element of `F_n(Z)` with all heights in `[-h, h]`.
///
/// Heights `d_i = f(i) - i` satisfy `d_i <= d_{i+1} + 1` cyclically. Elements
/// come in shells of increasing `max |d_i|`; inside a shell the last height is
/// the most significant digit and digits run in [`zigzag`] order. The listing
/// for `h` is a prefix of the listing for `h + 1`.
pub fn enumerate_elements(n: usize, h: i64) -> Vec<PeriodicMap> {
    assert!(n >= 1 && h >= 0, "need n >= 1 and h >= 0");
    let digits = zigzag(h);
    let mut out = Vec::new();
    let mut d = vec![0i64; n];
    for shell in 0..=h {
        let allowed = &digits[..(2 * shell + 1) as usize];
        fill(n - 1, &mut d, allowed, shell, &mut out);
    }
    out
}

fn fill(i: usize, d: &mut [i64], allowed: &[i64], shell: i64, out: &mut Vec<PeriodicMap>) {
    let n = d.len();
    for &x in allowed {
        if i + 1 < n && x > d[i + 1] + 1 {
            continue;
        }
        d[i] = x;
        if i > 0 {
            fill(i - 1, d, allowed, shell, out);
        } else if d[n - 1] <= d[0] + 1 && d.iter().any(|v| v.abs() == shell) {
            let values = d.iter().enumerate().map(|(k, &h)| h + k as i64).collect();
            out.push(PeriodicMap::from_values(values));
        }
    }
}

/// All vectors in `[-b, b]^m`, first coordinate fastest, zigzag digits.
pub fn lex_vectors(m: usize, b: i64) -> Vec<Vec<i64>> {
    let digits = zigzag(b);
    let mut out = vec![Vec::new()];
    for _ in 0..m {
        out = digits
            .iter()
            .flat_map(|&x| out.iter().map(move |v| {
                let mut v = v.clone();
                v.push(x);
                v
            }))
            .collect();
    }
    out
}

/// A model with a finite, deterministically ordered sample space.
pub trait Universe: Model {
    fn universe(&self, bounds: &Bounds) -> Result<Vec<Self::Elem>>;
}

impl Universe for FnModel {
    fn universe(&self, bounds: &Bounds) -> Result<Vec<PeriodicMap>> {
        Ok(enumerate_elements(self.n(), bounds.h))
    }
}

impl Universe for LexModel {
    fn universe(&self, bounds: &Bounds) -> Result<Vec<LexElement>> {
        let base = enumerate_elements(self.n, bounds.h);
        Ok(lex_vectors(self.m, bounds.lex)
            .into_iter()
            .flat_map(|h| base.iter().map(move |f| LexElement::new(h.clone(), f.clone())))
            .collect())
    }
}

/// Subsets of `0..w` with at most `k` elements, by size then lexicographically.
fn small_subsets(w: i64, k: usize) -> Vec<Vec<i64>> {
    let mut by_size: Vec<Vec<Vec<i64>>> = vec![vec![Vec::new()]];
    for s in 1..=k {
        let next = by_size[s - 1]
            .iter()
            .flat_map(|set| {
                let start = set.last().map_or(0, |&l| l + 1);
                (start..w).map(move |i| {
                    let mut s = set.clone();
                    s.push(i);
                    s
                })
            })
            .collect();
        by_size.push(next);
    }
    by_size.into_iter().flatten().collect()
}

impl Universe for WreathModel {
    fn universe(&self, bounds: &Bounds) -> Result<Vec<WreathElement>> {
        let base = enumerate_elements(self.n, bounds.h);
        let wb = bounds.wreath;
        let id = PeriodicMap::identity(self.n);
        let tails: Vec<(PeriodicMap, PeriodicMap)> = match wb.tails {
            Tails::Identity => vec![(id.clone(), id)],
            Tails::Shared => base.iter().map(|f| (f.clone(), f.clone())).collect(),
            Tails::Independent => base
                .iter()
                .flat_map(|l| base.iter().map(move |r| (l.clone(), r.clone())))
                .collect(),
        };
        let subsets = small_subsets(wb.window, wb.max_exceptions);
        let mut out = Vec::new();
        for g in zigzag(wb.global) {
            for (left, right) in &tails {
                for set in &subsets {
                    // the window is at indices >= 0, so exceptions avoid the right tail
                    let choices: Vec<&PeriodicMap> = base.iter().filter(|f| *f != right).collect();
                    let mut pick = vec![0usize; set.len()];
                    loop {
                        let exc: BTreeMap<i64, PeriodicMap> =
                            set.iter().zip(&pick).map(|(&i, &p)| (i, choices[p].clone())).collect();
                        let local = LocalFamily::new(left.clone(), right.clone(), exc)?;
                        out.push(WreathElement::new(g, local));
                        // odometer over the choices, first index fastest
                        let mut j = 0;
                        while j < pick.len() {
                            pick[j] += 1;
                            if pick[j] < choices.len() {
                                break;
                            }
                            pick[j] = 0;
                            j += 1;
                        }
                        if j == pick.len() {
                            break;
                        }
                    }
                }
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checker::WreathBounds;
    use std::collections::HashSet;

    /// Brute force over all value vectors with the defining inequalities.
    fn count_oracle(n: usize, h: i64) -> usize {
        let mut count = 0;
        let total = (2 * h + 1).pow(n as u32);
        for mut code in 0..total {
            let mut v = Vec::new();
            for i in 0..n {
                v.push(code % (2 * h + 1) - h + i as i64);
                code /= 2 * h + 1;
            }
            if PeriodicMap::new(n as i64, &v).is_ok() {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn counts_match_brute_force() {
        for (n, h, want) in [(1, 1, 3), (2, 0, 1), (2, 1, 7), (2, 2, 13), (3, 2, 38), (4, 3, 187)] {
            let all = enumerate_elements(n, h);
            assert_eq!(all.len(), want, "n={n} h={h}");
            assert_eq!(all.len(), count_oracle(n, h));
            assert_eq!(all.iter().collect::<HashSet<_>>().len(), all.len());
        }
    }

    #[test]
    fn order_is_prefix_stable() {
        let small = enumerate_elements(3, 1);
        let big = enumerate_elements(3, 2);
        assert_eq!(&big[..small.len()], &small[..]);
        assert_eq!(small[0], PeriodicMap::identity(3));
        assert_eq!(small[1], "F3:[1,1,2]".parse().unwrap());
    }

    #[test]
    fn contains_figure_element() {
        let f: PeriodicMap = "F6:[2,2,2,4,5,5]".parse().unwrap();
        assert!(enumerate_elements(6, 2).contains(&f));
    }

    #[test]
    fn product_universes() {
        let b = Bounds { h: 1, lex: 2, ..Bounds::default() };
        assert_eq!(LexModel::new(1, 2).universe(&b).unwrap().len(), 35);
        assert_eq!(lex_vectors(2, 1).len(), 9);
        let b = Bounds {
            h: 1,
            wreath: WreathBounds { window: 3, global: 1, max_exceptions: 1, tails: Tails::Identity },
            ..Bounds::default()
        };
        let u = WreathModel::new(2).universe(&b).unwrap();
        assert_eq!(u.len(), 3 * (1 + 3 * 6));
        assert_eq!(u.iter().collect::<HashSet<_>>().len(), u.len());
        assert_eq!(small_subsets(3, 2).len(), 1 + 3 + 3);
    }
}
