//! Brute-force lattice-point counts for dilates of the fixed polytopes.
//!
//! Nothing here uses the closed formulas: a point fixed by `sigma` is
//! constant on each cycle, so the candidates are vectors `y` with one integer
//! per cycle, expanded to an ambient point and tested against the
//! majorization description of `t * Pi_n`.

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::combinatorics::{partitions_of, CycleType};
use crate::error::{Error, Result};
use crate::fixed_polytope::ehrhart_quasipolynomial;

/// Limits on a single brute-force count.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Upper bound on `t * n`.
    pub max_tn: u64,
    /// Upper bound on the candidate box size `(t(n-1) + 1)^m`.
    pub max_candidates: u128,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_tn: 40,
            max_candidates: 100_000_000,
        }
    }
}

impl Budget {
    /// Errors with the offending bound when `(lambda, t)` is too large.
    pub fn check(&self, lambda: &CycleType, t: u64) -> Result<()> {
        let n = u64::from(lambda.n());
        let tn = t.saturating_mul(n);
        if tn > self.max_tn {
            return Err(Error::BudgetExceeded(format!(
                "{lambda} at t = {t}: t*n = {tn} exceeds the limit {}",
                self.max_tn
            )));
        }
        let side = u128::from(t * (n - 1) + 1);
        let candidates = (0..lambda.m()).try_fold(1u128, |acc, _| acc.checked_mul(side));
        match candidates {
            Some(c) if c <= self.max_candidates => Ok(()),
            Some(c) => Err(Error::BudgetExceeded(format!(
                "{lambda} at t = {t}: {c} candidates exceed the limit {}",
                self.max_candidates
            ))),
            None => Err(Error::BudgetExceeded(format!(
                "{lambda} at t = {t}: candidate count overflows"
            ))),
        }
    }
}

/// Membership in `t * Pi_n` for `n = x.len()`: coordinates sum to
/// `t n(n+1)/2` and the `k` largest sum to at most `t (n + ... + (n-k+1))`.
pub fn in_dilated_permutahedron(x: &[i64], t: u64) -> bool {
    let mut sorted = x.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    majorized(&sorted, t as i64)
}

/// `sorted` must be in decreasing order.
fn majorized(sorted: &[i64], t: i64) -> bool {
    let n = sorted.len() as i64;
    let total: i64 = sorted.iter().sum();
    if total != t * n * (n + 1) / 2 {
        return false;
    }
    let mut prefix = 0;
    let mut bound = 0;
    for (k, &v) in sorted.iter().enumerate().take(sorted.len().saturating_sub(1)) {
        prefix += v;
        bound += t * (n - k as i64);
        if prefix > bound {
            return false;
        }
    }
    true
}

/// `|t Pi_n^sigma ∩ Z^n|` by enumeration under the default [`Budget`].
pub fn count_fixed_lattice_points(lambda: &CycleType, t: u64) -> Result<u64> {
    count_fixed_lattice_points_with_budget(lambda, t, &Budget::default())
}

/// `|t Pi_n^sigma ∩ Z^n|`: the number of `y ∈ [t, tn]^m` whose expansion
/// (each `y_k` repeated `l_k` times) lies in `t Pi_n`.
///
/// Every coordinate of a point of `t Pi_n` lies in `[t, tn]`. The last
/// cycle's value is forced by the coordinate-sum equation, so only the first
/// `m - 1` values are enumerated; work is split across threads by `y_1`.
pub fn count_fixed_lattice_points_with_budget(lambda: &CycleType, t: u64, budget: &Budget) -> Result<u64> {
    count_for_cycle_lengths(lambda.parts(), t, budget)
}

/// Same count for cycle lengths given in any order (cycle `k` owns the
/// `k`-th consecutive run of coordinates).
pub fn count_for_cycle_lengths(lengths: &[u32], t: u64, budget: &Budget) -> Result<u64> {
    if t == 0 {
        return Err(Error::InvalidInput("dilation factor t must be positive".into()));
    }
    budget.check(&CycleType::new(lengths.to_vec())?, t)?;
    let parts: Vec<i64> = lengths.iter().map(|&l| i64::from(l)).collect();
    let n: i64 = parts.iter().sum();
    let t = t as i64;
    let (lo, hi) = (t, t * n);
    let target = t * n * (n + 1) / 2;

    if parts.len() == 1 {
        let y = target / parts[0];
        let hit = target % parts[0] == 0 && (lo..=hi).contains(&y) && {
            let x = vec![y; n as usize];
            majorized(&x, t)
        };
        return Ok(u64::from(hit));
    }

    let count = (lo..=hi)
        .into_par_iter()
        .map(|first| {
            let mut search = Search {
                parts: &parts,
                lo,
                hi,
                t,
                target,
                ys: vec![0; parts.len()],
                scratch: Vec::with_capacity(n as usize),
            };
            search.ys[0] = first;
            search.run(1, parts[0] * first)
        })
        .sum();
    Ok(count)
}

struct Search<'a> {
    parts: &'a [i64],
    lo: i64,
    hi: i64,
    t: i64,
    target: i64,
    ys: Vec<i64>,
    scratch: Vec<i64>,
}

impl Search<'_> {
    fn run(&mut self, k: usize, weighted: i64) -> u64 {
        let last = self.parts.len() - 1;
        if k == last {
            let rest = self.target - weighted;
            let l = self.parts[last];
            if rest % l != 0 {
                return 0;
            }
            let y = rest / l;
            if y < self.lo || y > self.hi {
                return 0;
            }
            self.ys[last] = y;
            return u64::from(self.accept());
        }
        let mut total = 0;
        for y in self.lo..=self.hi {
            self.ys[k] = y;
            total += self.run(k + 1, weighted + self.parts[k] * y);
        }
        total
    }

    fn accept(&mut self) -> bool {
        self.scratch.clear();
        for (&y, &l) in self.ys.iter().zip(self.parts) {
            self.scratch.extend(std::iter::repeat_n(y, l as usize));
        }
        self.scratch.sort_unstable_by(|a, b| b.cmp(a));
        majorized(&self.scratch, self.t)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepEntry {
    pub lambda: CycleType,
    pub t: u64,
    pub oracle: u64,
    pub formula: BigInt,
}

impl SweepEntry {
    pub fn matches(&self) -> bool {
        BigInt::from(self.oracle) == self.formula
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepReport {
    pub entries: Vec<SweepEntry>,
    /// `(lambda, t, reason)` for cases refused by the budget.
    pub skipped: Vec<(CycleType, u64, String)>,
}

impl SweepReport {
    pub fn mismatches(&self) -> impl Iterator<Item = &SweepEntry> {
        self.entries.iter().filter(|e| !e.matches())
    }

    pub fn all_match(&self) -> bool {
        self.mismatches().next().is_none()
    }
}

/// Compares brute-force counts with the quasipolynomial for every cycle type
/// of every `n <= n_max` and `1 <= t <= t_max`. Over-budget cases are
/// recorded as skipped.
pub fn oracle_sweep(n_max: u32, t_max: u64, budget: &Budget) -> Result<SweepReport> {
    if n_max == 0 || t_max == 0 {
        return Err(Error::InvalidInput("sweep bounds must be positive".into()));
    }
    let mut report = SweepReport::default();
    for n in 1..=n_max {
        for lambda in partitions_of(n)? {
            let q = ehrhart_quasipolynomial(&lambda);
            for t in 1..=t_max {
                match count_fixed_lattice_points_with_budget(&lambda, t, budget) {
                    Ok(oracle) => report.entries.push(SweepEntry {
                        lambda: lambda.clone(),
                        t,
                        oracle,
                        formula: q.eval(t),
                    }),
                    Err(Error::BudgetExceeded(reason)) => report.skipped.push((lambda.clone(), t, reason)),
                    Err(e) => return Err(e),
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ct(parts: &[u32]) -> CycleType {
        CycleType::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn membership() {
        assert!(in_dilated_permutahedron(&[1, 2, 3], 1));
        assert!(in_dilated_permutahedron(&[2, 2, 2], 1));
        assert!(!in_dilated_permutahedron(&[3, 3, 0], 1));
        assert!(!in_dilated_permutahedron(&[1, 2, 4], 1));
        assert!(in_dilated_permutahedron(&[2, 4, 6], 2));
    }

    #[test]
    fn small_counts() {
        assert_eq!(count_fixed_lattice_points(&ct(&[2, 1, 1]), 1).unwrap(), 6);
        assert_eq!(count_fixed_lattice_points(&ct(&[1, 1, 1]), 1).unwrap(), 7);
        assert_eq!(count_fixed_lattice_points(&ct(&[4]), 1).unwrap(), 0);
        assert_eq!(count_fixed_lattice_points(&ct(&[4]), 2).unwrap(), 1);
    }

    #[test]
    fn refuses_bad_requests() {
        assert!(matches!(
            count_fixed_lattice_points(&ct(&[1, 1, 1]), 0),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            count_fixed_lattice_points(&ct(&[5, 5]), 5),
            Err(Error::BudgetExceeded(_))
        ));
        let tight = Budget {
            max_tn: 1000,
            max_candidates: 10,
        };
        assert!(matches!(
            count_fixed_lattice_points_with_budget(&ct(&[1, 1, 1]), 2, &tight),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn sweep_records_skips() {
        let budget = Budget {
            max_tn: 4,
            ..Budget::default()
        };
        let report = oracle_sweep(3, 2, &budget).unwrap();
        assert!(report.all_match());
        assert!(report.skipped.iter().all(|(l, t, _)| u64::from(l.n()) * t > 4));
        assert!(!report.skipped.is_empty());
    }
}
