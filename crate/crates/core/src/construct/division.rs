//! `C(n, 2) = k*p + q`, `p >= n - 1`: a special coloring with `k` classes of
//! size `p` and one class of size `q`.
//!
//! The recursion always removes stars from the top of the vertex range, so the
//! residual instance lives on the same center labels `1..n'-1` and no relabeling
//! is needed when the pieces are reassembled.

use crate::construct::{finish_checked, special_coloring, star_partition_for};
use crate::error::ConstructError;
use crate::model::{choose2, Coloring, DivisionParams, Distribution, StarPartition};

#[derive(Debug, Default)]
pub(crate) struct Split {
    pub(crate) p_groups: Vec<Vec<usize>>,
    pub(crate) q_group: Vec<usize>,
}

pub(crate) fn schedule_err(msg: String) -> ConstructError {
    ConstructError::InternalSchedule(msg)
}

/// Appends `S(a)` and `S(b)`, skipping the empty star `S(0)`.
pub(crate) fn star_pair(a: usize, b: usize) -> Vec<usize> {
    if b == 0 {
        vec![a]
    } else {
        vec![a, b]
    }
}

pub(crate) fn divide(n: usize, k: usize, p: usize, q: usize) -> Result<Split, ConstructError> {
    if k * p + q != choose2(n) || p + 1 < n {
        return Err(schedule_err(format!(
            "residual instance n={n} k={k} p={p} q={q} breaks the division identity"
        )));
    }
    if n <= 1 {
        return Ok(Split {
            p_groups: vec![Vec::new(); k],
            q_group: Vec::new(),
        });
    }
    if k == 0 {
        return Ok(Split {
            p_groups: Vec::new(),
            q_group: (1..n).rev().collect(),
        });
    }
    // fold whole multiples of p out of q, then merge them back
    if q >= p {
        let mut s = divide(n, k + q / p, p, q % p)?;
        for g in s.p_groups.split_off(k) {
            s.q_group.extend(g);
        }
        return Ok(s);
    }
    // the top star fits inside the q class
    if q + 1 >= n {
        let mut s = divide(n - 1, k, p, q - (n - 1))?;
        s.q_group.push(n - 1);
        return Ok(s);
    }
    if p + 3 <= 2 * n {
        pairs_of_stars(n, k, p, q)
    } else {
        shrink_classes(n, k, p, q)
    }
}

/// `p <= 2n - 3`: classes of size `p` from star pairs `S(a), S(p - a)` covering
/// the centers `p-n+1..n-1`.
fn pairs_of_stars(n: usize, k: usize, p: usize, q: usize) -> Result<Split, ConstructError> {
    let r = p + 1 - n;
    if p % 2 == 1 {
        let pairs: Vec<Vec<usize>> = (p.div_ceil(2)..n).rev().map(|a| star_pair(a, p - a)).collect();
        let rest = k.checked_sub(pairs.len()).ok_or_else(|| {
            schedule_err(format!("odd pairing at n={n} p={p} needs {} > k={k} classes", pairs.len()))
        })?;
        let mut s = divide(r, rest, p, q)?;
        s.p_groups.extend(pairs);
        return Ok(s);
    }
    let half = p / 2;
    let pairs: Vec<Vec<usize>> = (half + 1..n).rev().map(|a| star_pair(a, p - a)).collect();
    // residual K_r plus the lone star S(half) must split into classes of size
    // half, paired up below, and the q class
    let (halves, q_group) = match choose2(r).checked_sub(q) {
        Some(t) if t % half == 0 => {
            let inner = divide(r, t / half, half, q)?;
            let mut halves = inner.p_groups;
            halves.push(vec![half]);
            (halves, inner.q_group)
        }
        Some(_) => {
            return Err(schedule_err(format!(
                "even pairing at n={n} p={p} q={q}: residual not divisible"
            )))
        }
        None if choose2(r) + half == q => {
            // no p classes left: K_r and the lone star together form the q class
            let mut q_group: Vec<usize> = (1..r).rev().collect();
            q_group.push(half);
            (Vec::new(), q_group)
        }
        None => return Err(schedule_err(format!("even pairing at n={n} p={p} q={q}: q too large"))),
    };
    if halves.len() % 2 == 1 {
        return Err(schedule_err(format!("even pairing at n={n} p={p}: odd number of halves")));
    }
    let mut groups = pairs;
    let mut it = halves.into_iter();
    while let (Some(mut a), Some(b)) = (it.next(), it.next()) {
        a.extend(b);
        groups.push(a);
    }
    if groups.len() != k {
        return Err(schedule_err(format!(
            "even pairing at n={n} p={p}: built {} classes, need {k}",
            groups.len()
        )));
    }
    Ok(Split {
        p_groups: groups,
        q_group,
    })
}

/// `p >= 2n - 2`: every class takes one pair `S(n-j), S(n-2k-1+j)` and the
/// instance shrinks to `n' = n - 2k`, `p' = p - 2n + 2k + 1`.
fn shrink_classes(n: usize, k: usize, p: usize, q: usize) -> Result<Split, ConstructError> {
    let params = DivisionParams { n, k, p, q };
    if 2 * k > n {
        return Err(schedule_err(format!("shrink at n={n} k={k}: not enough star pairs")));
    }
    let pairs: Vec<Vec<usize>> = (1..=k).map(|j| star_pair(n - j, n - 2 * k - 1 + j)).collect();
    let (n_red, p_red) = (params.reduced_n(), params.reduced_p());
    if p_red >= 0 && p_red + 1 >= n_red {
        let mut s = divide(n_red as usize, k, p_red as usize, q)?;
        for (g, pair) in s.p_groups.iter_mut().zip(pairs) {
            g.extend(pair);
        }
        return Ok(s);
    }
    match params.delta() {
        1 if p == 8 * k && q == 2 * k => {
            // S(4k), S(4k-1), S(1) and quadruples S(4k-2j), S(4k-2j-1), S(2j), S(2j+1)
            let mut groups = vec![vec![4 * k, 4 * k - 1, 1]];
            for j in 1..k {
                groups.push(vec![4 * k - 2 * j, 4 * k - 2 * j - 1, 2 * j, 2 * j + 1]);
            }
            Ok(Split {
                p_groups: groups,
                q_group: vec![2 * k],
            })
        }
        2 if p == 8 * k + 3 && q == 3 * k + 1 => {
            // after the pairs: K_{2k+2} with k classes of 2k and q = 3k+1; the
            // top star S(2k+1) goes to q, leaving K_{2k+1} with q = k
            let mut s = divide(2 * k + 1, k, 2 * k, k)?;
            s.q_group.push(2 * k + 1);
            for (g, pair) in s.p_groups.iter_mut().zip(pairs) {
                g.extend(pair);
            }
            Ok(s)
        }
        delta => Err(schedule_err(format!(
            "shrink at n={n} k={k} p={p} q={q}: p'={p_red} < n'-1={} with delta={delta}",
            n_red - 1
        ))),
    }
}

/// The star partition produced by the recursive pairing schedule alone, with
/// the `q` class last (omitted when `q = 0`). Fails if the schedule does.
pub fn division_schedule(params: &DivisionParams) -> Result<StarPartition, ConstructError> {
    params
        .check()
        .map_err(|e| ConstructError::PreconditionViolated(e.to_string()))?;
    let DivisionParams { n, k, p, q } = *params;
    let split = divide(n, k, p, q)?;
    let mut groups = split.p_groups;
    match (q, split.q_group.is_empty()) {
        (0, true) => {}
        (0, false) => return Err(schedule_err("q = 0 but the q class is nonempty".into())),
        (_, _) => groups.push(split.q_group),
    }
    let sp = StarPartition::new(n, groups)
        .map_err(|e| schedule_err(format!("n={n} k={k} p={p} q={q}: {e}")))?;
    let sums = sp.group_sums();
    let bad = sums[..k].iter().any(|&s| s != p) || (q > 0 && sums[k] != q);
    if bad {
        return Err(schedule_err(format!("n={n} k={k} p={p} q={q}: class sums {sums:?}")));
    }
    Ok(sp)
}

/// Target distribution of a division instance.
pub fn division_target(params: &DivisionParams) -> Result<Distribution, ConstructError> {
    let mut sizes = vec![params.p; params.k];
    if params.q > 0 {
        sizes.push(params.q);
    }
    Ok(Distribution::canonicalize(sizes, params.n)?)
}

/// Special Gallai coloring with `k` classes of size `p` and, when `q >= 1`, one
/// class of size `q`. A failed schedule falls back to a direct star-partition
/// search for the same distribution.
pub fn construct_division(params: &DivisionParams) -> Result<Coloring, ConstructError> {
    params
        .check()
        .map_err(|e| ConstructError::PreconditionViolated(e.to_string()))?;
    let target = division_target(params)?;
    let sp = match division_schedule(params) {
        Ok(sp) => sp,
        Err(ConstructError::InternalSchedule(_)) => star_partition_for(&target)?,
        Err(e) => return Err(e),
    };
    finish_checked(special_coloring(&sp), &target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::is_gallai;

    fn build(n: usize, k: usize, p: usize, q: usize) -> Coloring {
        let params = DivisionParams::new(n, k, p, q).unwrap();
        division_schedule(&params).expect("schedule");
        construct_division(&params).unwrap()
    }

    #[test]
    fn small_examples() {
        let c = build(5, 2, 4, 2);
        assert_eq!(c.distribution().sizes(), &[4, 4, 2]);
        let c = build(4, 1, 6, 0);
        assert_eq!(c, Coloring::monochromatic(4));
        let c = build(7, 3, 6, 3);
        assert_eq!(c.distribution().sizes(), &[6, 6, 6, 3]);
        assert!(is_gallai(&c) && c.is_special());
    }

    #[test]
    fn endgames() {
        // delta = 1: n = 4k+1, p = 8k, q = 2k
        for k in 1..6 {
            let c = build(4 * k + 1, k, 8 * k, 2 * k);
            assert!(c.is_special());
        }
        // delta = 2: n = 4k+2, p = 8k+3, q = 3k+1
        for k in 1..6 {
            let c = build(4 * k + 2, k, 8 * k + 3, 3 * k + 1);
            assert!(c.is_special());
        }
    }

    #[test]
    fn precondition() {
        let bad = DivisionParams {
            n: 6,
            k: 3,
            p: 4,
            q: 3,
        };
        assert!(matches!(
            construct_division(&bad),
            Err(ConstructError::PreconditionViolated(_))
        ));
    }

    #[test]
    fn all_instances_up_to_25() {
        for n in 2..=25 {
            let total = choose2(n);
            for p in (n - 1).max(1)..=total {
                for k in 1..=total / p {
                    let q = total - k * p;
                    let params = DivisionParams::new(n, k, p, q).unwrap();
                    let sp = division_schedule(&params)
                        .unwrap_or_else(|e| panic!("n={n} k={k} p={p} q={q}: {e}"));
                    assert_eq!(sp.k(), k + usize::from(q > 0));
                }
            }
        }
    }
}
