//! Balanced special colorings: `k` classes whose sizes differ by at most one.
//!
//! For `n = 2k + i` the top centers are paired into classes of size `Z` or
//! `Z + 1`, where `C(i, 2) = l*k + m`, `Z = 2k + 2i + l - 1`; the leftover
//! bottom centers are handed to a smaller balanced instance or to the division
//! construction.

use crate::construct::division::{divide, schedule_err, star_pair};
use crate::construct::{finish_checked, special_coloring, star_partition_for};
use crate::error::ConstructError;
use crate::model::{choose2, BalancedParams, Coloring, Distribution, StarPartition};

/// Largest `k` admitting a balanced Gallai `k`-coloring of `K_n`.
pub fn max_balanced_colors(n: usize) -> usize {
    n.div_ceil(2).min(choose2(n))
}

fn pairs_with_sum(top: usize, bottom: usize, sum: usize) -> Vec<Vec<usize>> {
    (bottom..=top).rev().map(|a| star_pair(a, sum - a)).collect()
}

fn check_level(n: usize, k: usize, groups: &[Vec<usize>]) -> Result<(), ConstructError> {
    let mut seen = vec![false; n];
    for &i in groups.iter().flatten() {
        if i == 0 || i >= n || std::mem::replace(&mut seen[i], true) {
            return Err(schedule_err(format!("balanced n={n} k={k}: center {i} misused")));
        }
    }
    let sums: Vec<usize> = groups.iter().map(|g| g.iter().sum()).collect();
    let (lo, hi) = (sums.iter().min(), sums.iter().max());
    let ok = groups.len() == k
        && seen.iter().skip(1).all(|&s| s)
        && lo.zip(hi).is_none_or(|(lo, hi)| hi - lo <= 1 && *lo > 0);
    if ok {
        Ok(())
    } else {
        Err(schedule_err(format!("balanced n={n} k={k}: class sums {sums:?}")))
    }
}

fn balance(n: usize, k: usize) -> Result<Vec<Vec<usize>>, ConstructError> {
    if k == 0 {
        return if choose2(n) == 0 {
            Ok(Vec::new())
        } else {
            Err(schedule_err(format!("balanced n={n}: zero classes")))
        };
    }
    if k > max_balanced_colors(n) {
        return Err(schedule_err(format!("balanced n={n} k={k}: too many classes")));
    }
    let groups = if k == 1 {
        vec![(1..n).rev().collect()]
    } else if 4 * k <= n {
        regroup(n, k)?
    } else if n + 1 == 2 * k {
        // S(n-1) and S(n-2) alone, then pairs summing to n-2
        let mut groups = vec![vec![n - 1], vec![n - 2]];
        groups.extend(pairs_with_sum(n - 3, k - 1, n - 2));
        groups
    } else {
        paired(n, k)?
    };
    check_level(n, k, &groups)?;
    Ok(groups)
}

/// `4k <= n`: build `r*k` balanced classes with `4rk > n`, then merge them `r`
/// at a time, dealing the larger classes round-robin.
fn regroup(n: usize, k: usize) -> Result<Vec<Vec<usize>>, ConstructError> {
    let r = n / (4 * k) + 1;
    let mut fine = balance(n, r * k)?;
    fine.sort_by_key(|g| std::cmp::Reverse(g.iter().sum::<usize>()));
    let mut parts = vec![Vec::new(); k];
    for (idx, g) in fine.into_iter().enumerate() {
        parts[idx % k].extend(g);
    }
    Ok(parts)
}

/// `2k <= n < 4k`.
fn paired(n: usize, k: usize) -> Result<Vec<Vec<usize>>, ConstructError> {
    let BalancedParams { i, l, m, z, .. } = BalancedParams::new(n, k)?;
    let zp = z + 1;
    let mut groups;
    if l % 2 == 0 {
        let h = l / 2;
        if m <= h {
            // k - h pairs of size Z cover i+l..n-1
            groups = pairs_with_sum(n - 1, k + i + h, z);
            groups.extend(balance(i + l, h)?);
        } else {
            // k - m pairs of size Z, then m - h - 1 pairs of size Z+1; the
            // skipped centers k+i-m+l and k+i+h join the q class of a division
            // instance on K_{i+l}
            groups = pairs_with_sum(n - 1, k + i + m, z);
            groups.extend(pairs_with_sum(k + i + m - 1, k + i + h + 1, zp));
            let split = divide(i + l, h, zp, m - h)?;
            groups.extend(split.p_groups);
            let mut last = split.q_group;
            last.extend([k + i - m + l, k + i + h]);
            groups.push(last);
        }
    } else {
        let h = l.div_ceil(2);
        if k - h <= m {
            // k - h pairs of size Z+1 cover i+l+1..n-1
            groups = pairs_with_sum(n - 1, k + i + h, zp);
            groups.extend(balance(i + l + 1, h)?);
        } else {
            // m pairs of size Z+1, k-m-h-1 pairs of size Z; the skipped centers
            // are e1 = 2k+i-m-1 and e2 = k+i+h-1 = Z/2
            let e1 = 2 * k + i - m - 1;
            let e2 = z / 2;
            groups = pairs_with_sum(n - 1, n - m, zp);
            groups.extend(pairs_with_sum(e1 - 1, e2 + 1, z));
            // K_{i+l+1} supplies Z - e1 for e1 and classes of Z/2 to pair up
            let q = z - e1;
            let residual = choose2(i + l + 1)
                .checked_sub(q)
                .filter(|t| t % e2 == 0)
                .ok_or_else(|| schedule_err(format!("balanced n={n} k={k}: residual not in halves")))?;
            let split = divide(i + l + 1, residual / e2, e2, q)?;
            let mut first = split.q_group;
            first.push(e1);
            groups.push(first);
            let mut halves = split.p_groups;
            halves.push(vec![e2]);
            if halves.len() % 2 == 1 {
                return Err(schedule_err(format!("balanced n={n} k={k}: odd number of halves")));
            }
            let mut it = halves.into_iter();
            while let (Some(mut a), Some(b)) = (it.next(), it.next()) {
                a.extend(b);
                groups.push(a);
            }
        }
    }
    Ok(groups)
}

/// The star partition produced by the pairing schedule alone.
pub fn balanced_schedule(n: usize, k: usize) -> Result<StarPartition, ConstructError> {
    check_balanced_request(n, k)?;
    let groups = balance(n, k)?;
    StarPartition::new(n, groups).map_err(|e| schedule_err(format!("balanced n={n} k={k}: {e}")))
}

fn check_balanced_request(n: usize, k: usize) -> Result<(), ConstructError> {
    if k == 0 {
        return Err(ConstructError::PreconditionViolated("k must be at least 1".into()));
    }
    let max = max_balanced_colors(n);
    if k > max {
        return Err(ConstructError::TooManyColors { k, max });
    }
    Ok(())
}

/// Balanced Gallai `k`-coloring of `K_n`; requires `k <= ceil(n/2)`.
pub fn construct_balanced(n: usize, k: usize) -> Result<Coloring, ConstructError> {
    check_balanced_request(n, k)?;
    let target = Distribution::balanced(n, k)?;
    let sp = match balanced_schedule(n, k) {
        Ok(sp) => sp,
        Err(ConstructError::InternalSchedule(_)) => star_partition_for(&target)?,
        Err(e) => return Err(e),
    };
    finish_checked(special_coloring(&sp), &target)
}
