use std::fmt;

use serde::Serialize;

use crate::error::ModelError;
use crate::model::choose2;

/// Class sizes `e_1 >= e_2 >= ... >= e_k` of an edge coloring of `K_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Distribution {
    n: usize,
    sizes: Vec<usize>,
}

impl Distribution {
    /// Sorts `sizes` non-increasing and checks that they sum to `C(n, 2)`.
    pub fn canonicalize(mut sizes: Vec<usize>, n: usize) -> Result<Self, ModelError> {
        if sizes.contains(&0) {
            return Err(ModelError::NonPositiveEntry);
        }
        let got: usize = sizes.iter().sum();
        if got != choose2(n) {
            return Err(ModelError::SumMismatch {
                expected: choose2(n),
                got,
            });
        }
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { n, sizes })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of classes.
    pub fn k(&self) -> usize {
        self.sizes.len()
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn largest(&self) -> usize {
        self.sizes.first().copied().unwrap_or(0)
    }

    pub fn smallest(&self) -> usize {
        self.sizes.last().copied().unwrap_or(0)
    }

    /// `e_1 - e_k <= 1`.
    pub fn is_balanced(&self) -> bool {
        self.largest() - self.smallest() <= 1
    }

    /// The unique balanced distribution of `C(n, 2)` into `k` parts.
    pub fn balanced(n: usize, k: usize) -> Result<Self, ModelError> {
        if k == 0 || k > choose2(n) {
            return Err(ModelError::Params(format!(
                "cannot split {} edges into {k} positive parts",
                choose2(n)
            )));
        }
        let total = choose2(n);
        let (s, t) = (total / k, total % k);
        let sizes = (0..k).map(|j| if j < t { s + 1 } else { s }).collect();
        Self::canonicalize(sizes, n)
    }
}

impl fmt::Display for Distribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (j, s) in self.sizes.iter().enumerate() {
            if j > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `total` into exactly `parts` positive summands, each in
/// non-increasing order, emitted in reverse lexicographic order.
pub fn partitions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, parts: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 0 {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if rest < parts {
            return;
        }
        // the first summand must be at least ceil(rest / parts)
        let lo = rest.div_ceil(parts);
        let hi = max.min(rest - (parts - 1));
        for first in (lo..=hi).rev() {
            cur.push(first);
            rec(rest - first, parts - 1, first, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(total, parts, total, &mut Vec::with_capacity(parts), &mut out);
    out
}
