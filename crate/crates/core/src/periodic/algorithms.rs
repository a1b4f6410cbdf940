//! Constructive generation: raising the final periodicity of a flat element,
//! the pipeline from an element of full periodicity down to an atom, and
//! joins of atoms of incomparable periods.

use num_integer::Integer;

use super::PeriodicMap;
use crate::error::{Error, Result};

/// The pieces of one final-periodicity boosting step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Boost {
    /// Smallest `l >= 0` with `a(l + k) < a(l) + k`.
    pub witness: i64,
    /// The `k`-periodic idempotent collapsing `[a(l), a(l)+k-1]` to its top.
    pub top: PeriodicMap,
    /// `top * a`.
    pub product: PeriodicMap,
    /// `sigma(top a)^-1 top a`, positive and flat with larger final periodicity.
    pub boosted: PeriodicMap,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenerationStage {
    pub label: String,
    pub map: PeriodicMap,
    pub final_periodicity: Option<usize>,
}

/// Element-level record of the generation pipeline. Stages are the flattened
/// element, each boosted element, the terminal idempotent and its core.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenerationTrace {
    pub input: PeriodicMap,
    pub stages: Vec<GenerationStage>,
}

impl GenerationTrace {
    pub fn atom(&self) -> &PeriodicMap {
        &self.stages.last().expect("trace has stages").map
    }

    /// Final periodicities of the flattened and boosted stages, in order.
    pub fn final_periodicities(&self) -> Vec<usize> {
        self.stages.iter().filter_map(|s| s.final_periodicity).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LcmJoin {
    pub s: i64,
    pub t: i64,
    pub join: PeriodicMap,
}

impl PeriodicMap {
    /// `sigma(f)^-1 f`: positive, flat, and of the same periodicity as `f`.
    pub fn flatten(&self) -> Self {
        Self::shift(self.n(), -self.hmin()).compose_unchecked(self)
    }

    /// One step of raising the final periodicity `k < n` of elements generated
    /// by `self`, a positive flat map of full periodicity `n`.
    pub fn boost_final_periodicity(&self, k: usize) -> Result<Boost> {
        let n = self.n();
        if !self.is_positive() {
            return Err(Error::NotPositive);
        }
        if !self.is_flat() {
            return Err(Error::NotFlat);
        }
        let per = self.per();
        if per != n {
            return Err(Error::NotProperPeriodicity { per, n });
        }
        if k == 0 || n % k != 0 {
            return Err(Error::PreconditionFailed(format!("{k} does not divide {n}")));
        }
        let ki = k as i64;
        // a(l+k) - a(l) - k is n-periodic in l, so one period suffices
        let l = (0..n as i64)
            .find(|&l| self.eval(l + ki) < self.eval(l) + ki)
            .ok_or(Error::NoWitness(k))?;
        let base = self.eval(l);
        let top_value = base + ki - 1;
        let top_k = Self::from_values(
            (0..ki)
                .map(|r| {
                    // representative of r mod k inside [base, base+k-1]
                    let x = base + (r - base).rem_euclid(ki);
                    top_value - (x - r)
                })
                .collect(),
        );
        let top = top_k.rescale(n)?;
        let product = top.compose_unchecked(self);
        let boosted = product.flatten();
        Ok(Boost { witness: l, top, product, boosted })
    }

    /// Runs the generation pipeline on an element of full periodicity `n > 1`,
    /// ending in an `n`-atom. Every stage is checked against its contract.
    pub fn generate_atom(&self) -> Result<GenerationTrace> {
        let n = self.n();
        let per = self.per();
        if per != n || n == 1 {
            return Err(Error::NotProperPeriodicity { per, n });
        }
        let c0 = self.flatten();
        assert!(
            c0.is_strictly_positive() && c0.is_flat() && c0.per() == n,
            "flattened element {c0} lost positivity, flatness or periodicity"
        );
        let mut k = c0.final_periodicity()?;
        let mut stages = vec![GenerationStage {
            label: "flattened".into(),
            map: c0.clone(),
            final_periodicity: Some(k),
        }];
        let mut current = c0.clone();
        while k < n {
            let step = c0.boost_final_periodicity(k)?;
            let next_k = step.boosted.final_periodicity()?;
            assert!(next_k > k && n % next_k == 0, "boosting did not raise {k} (got {next_k})");
            stages.push(GenerationStage {
                label: format!("boosted[{}]", stages.len()),
                map: step.boosted.clone(),
                final_periodicity: Some(next_k),
            });
            current = step.boosted;
            k = next_k;
        }
        let e = current.pow(n - 1);
        assert!(
            e.is_idempotent() && e.is_strictly_positive() && e.per() == n,
            "terminal power {e} is not a strictly positive idempotent of periodicity {n}"
        );
        let atom = e.core()?;
        assert!(atom.is_atom(), "core {atom} of {e} is not an atom");
        stages.push(GenerationStage {
            label: "idempotent".into(),
            map: e,
            final_periodicity: None,
        });
        stages.push(GenerationStage {
            label: "atom".into(),
            map: atom,
            final_periodicity: None,
        });
        Ok(GenerationTrace { input: self.clone(), stages })
    }

    /// Aligns an `n`-atom and an `m`-atom with `n`, `m` incomparable under
    /// divisibility so that both have their unique raised point at `0`, and
    /// joins them; the join has periodicity `lcm(n, m)`.
    pub fn atom_lcm_join(a: &Self, b: &Self) -> Result<LcmJoin> {
        let ra = a.reduced();
        let rb = b.reduced();
        for (x, orig) in [(&ra, a), (&rb, b)] {
            if !x.is_atom() {
                return Err(Error::PreconditionFailed(format!("{orig} is not an atom")));
            }
        }
        let (n, m) = (ra.n(), rb.n());
        if n % m == 0 || m % n == 0 {
            return Err(Error::PreconditionFailed(format!(
                "periods {n} and {m} are comparable under divisibility"
            )));
        }
        let s = aligning_shift(&ra);
        let t = aligning_shift(&rb);
        let l = n.lcm(&m);
        let join = ra
            .conj_shift(s)
            .rescale(l)?
            .join(&rb.conj_shift(t).rescale(l)?)?;
        assert_eq!(join.per(), l, "join {join} does not have periodicity {l}");
        Ok(LcmJoin { s, t, join })
    }
}

/// The `s` in `[0, n-1]` for which the atom `a^[s]` is raised exactly at `0`.
fn aligning_shift(atom: &PeriodicMap) -> i64 {
    (0..atom.n() as i64)
        .find(|&s| {
            let c = atom.conj_shift(s);
            c.eval(0) == 1 && (1..atom.n() as i64).all(|x| c.eval(x) == x)
        })
        .expect("every atom has an aligning conjugate")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pm(s: &str) -> PeriodicMap {
        s.parse().unwrap()
    }

    #[test]
    fn figure_boost() {
        let a = pm("F6:[2,2,2,4,5,5]");
        let step = a.boost_final_periodicity(3).unwrap();
        assert_eq!(step.witness, 0);
        assert_eq!(step.product, pm("F6:[4,4,4,4,7,7]"));
        assert_eq!(step.boosted, pm("F6:[3,3,3,3,6,6]"));
        assert_eq!(step.boosted.final_periodicity(), Ok(6));
        assert!(step.top.is_idempotent() && step.top.per() == 3);
    }

    #[test]
    fn boost_without_witness() {
        let c = pm("F6:[3,3,3,3,6,6]");
        assert_eq!(c.boost_final_periodicity(6), Err(Error::NoWitness(6)));
        assert!(matches!(
            c.boost_final_periodicity(4),
            Err(Error::PreconditionFailed(_))
        ));
    }

    #[test]
    fn generation_examples() {
        let trace = pm("F6:[2,2,2,4,5,5]").generate_atom().unwrap();
        assert!(trace.atom().is_atom());
        assert_eq!(trace.atom().n(), 6);
        assert_eq!(trace.final_periodicities(), vec![3, 6]);

        let trace = pm("F2:[1,1]").generate_atom().unwrap();
        let maps: Vec<_> = trace.stages.iter().map(|s| s.map.clone()).collect();
        assert_eq!(maps, vec![pm("F2:[1,1]"), pm("F2:[1,1]"), pm("F2:[1,1]")]);

        assert_eq!(
            PeriodicMap::shift(2, 1).generate_atom(),
            Err(Error::NotProperPeriodicity { per: 1, n: 2 })
        );
    }

    #[test]
    fn lcm_join_examples() {
        let a = pm("F2:[1,1]").rescale(6).unwrap();
        let b = pm("F3:[1,1,2]").rescale(6).unwrap();
        let j = PeriodicMap::atom_lcm_join(&a, &b).unwrap();
        assert_eq!((j.s, j.t), (0, 0));
        assert_eq!(j.join, pm("F6:[1,1,3,4,5,5]"));
        assert_eq!(j.join.per(), 6);

        let j = PeriodicMap::atom_lcm_join(&PeriodicMap::atom(4, 3), &PeriodicMap::atom(6, 5)).unwrap();
        assert_eq!(j.join.per(), 12);

        assert!(matches!(
            PeriodicMap::atom_lcm_join(&pm("F2:[1,1]"), &PeriodicMap::atom(4, 1)),
            Err(Error::PreconditionFailed(_))
        ));
    }
}
