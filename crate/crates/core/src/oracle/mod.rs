//! Exact decision procedures for small instances.

mod search;

pub use search::{search_realizable, search_with, Budget, EdgeOrder, SearchOptions};

use crate::model::{choose2, partitions, Distribution, Verdict, VerdictTag};

/// Every `k`-part distribution of `C(n, 2)` with its verdict.
#[derive(Clone, Debug)]
pub struct Enumeration {
    pub n: usize,
    pub k: usize,
    pub entries: Vec<(Distribution, Verdict)>,
}

impl Enumeration {
    pub fn with_tag(&self, tag: VerdictTag) -> impl Iterator<Item = &Distribution> + '_ {
        self.entries.iter().filter(move |(_, v)| v.tag == tag).map(|(d, _)| d)
    }

    pub fn all_feasible(&self) -> bool {
        self.entries.iter().all(|(_, v)| v.tag == VerdictTag::Feasible)
    }
}

/// Classifies every partition of `C(n, 2)` into exactly `k` positive parts.
/// `budget` applies to each search separately.
pub fn enumerate_realizable(n: usize, k: usize, opts: &SearchOptions) -> Enumeration {
    let entries = partitions(choose2(n), k)
        .into_iter()
        .map(|sizes| {
            let d = Distribution::canonicalize(sizes, n).expect("partition of C(n, 2)");
            let v = search_with(&d, opts);
            (d, v)
        })
        .collect();
    Enumeration { n, k, entries }
}

/// Status of one vertex count while computing `g(k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LevelStatus {
    AllFeasible,
    /// The first distribution found to be unrealizable.
    Infeasible(Distribution),
    /// No infeasible distribution found, but some search ran out of budget.
    Undecided(Distribution),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GReport {
    /// `Some(g(k))` when decided within `n_max`.
    pub value: Option<usize>,
    pub levels: Vec<(usize, LevelStatus)>,
}

/// Smallest `n <= n_max` at which every `k`-part distribution is realizable.
/// Monotonicity makes the first such `n` equal to `g(k)`. An undecided level
/// leaves the answer unknown.
pub fn compute_g(k: usize, n_max: usize, opts: &SearchOptions) -> GReport {
    let mut levels = Vec::new();
    let first = (1..).find(|&n| choose2(n) >= k).unwrap_or(1);
    for n in first..=n_max {
        let mut status = LevelStatus::AllFeasible;
        for sizes in partitions(choose2(n), k) {
            let d = Distribution::canonicalize(sizes, n).expect("partition of C(n, 2)");
            match search_with(&d, opts).tag {
                VerdictTag::Feasible => {}
                VerdictTag::Infeasible => {
                    status = LevelStatus::Infeasible(d);
                    break;
                }
                VerdictTag::Unknown => {
                    if status == LevelStatus::AllFeasible {
                        status = LevelStatus::Undecided(d);
                    }
                }
            }
        }
        let done = status == LevelStatus::AllFeasible;
        let undecided = matches!(status, LevelStatus::Undecided(_));
        levels.push((n, status));
        if done {
            return GReport {
                value: Some(n),
                levels,
            };
        }
        if undecided {
            break;
        }
    }
    GReport { value: None, levels }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerate_small() {
        let opts = SearchOptions::default();
        let e = enumerate_realizable(5, 3, &opts);
        assert_eq!(e.entries.len(), 8);
        assert!(e.all_feasible());
        let e = enumerate_realizable(4, 3, &opts);
        let feasible: Vec<_> = e.with_tag(VerdictTag::Feasible).map(|d| d.sizes().to_vec()).collect();
        let infeasible: Vec<_> = e.with_tag(VerdictTag::Infeasible).map(|d| d.sizes().to_vec()).collect();
        assert_eq!(feasible, vec![vec![4, 1, 1], vec![3, 2, 1]]);
        assert_eq!(infeasible, vec![vec![2, 2, 2]]);
        let e = enumerate_realizable(3, 3, &opts);
        assert_eq!(e.with_tag(VerdictTag::Infeasible).count(), 1);
    }

    #[test]
    fn g3() {
        let r = compute_g(3, 6, &SearchOptions::default());
        assert_eq!(r.value, Some(5));
        assert_eq!(r.levels.len(), 3);
    }

    #[test]
    fn undecided_when_budget_is_tiny() {
        let opts = SearchOptions {
            budget: Budget::nodes(0),
            ..SearchOptions::default()
        };
        // K_5 searches need at least a few nodes each
        let r = compute_g(3, 5, &opts);
        assert_eq!(r.value, None);
    }
}
