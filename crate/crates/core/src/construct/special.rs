use crate::error::ConstructError;
use crate::model::{Color, Coloring, Distribution, EdgeBuffer, StarPartition};

/// Colors edge `(i, j)`, `i > j`, with the group that owns center `i`.
pub fn special_coloring(sp: &StarPartition) -> Coloring {
    let mut buf = EdgeBuffer::new(sp.n());
    for (j, g) in sp.groups().iter().enumerate() {
        for &i in g {
            buf.set_star(i, (j + 1) as Color);
        }
    }
    buf.finish().expect("a star partition colors every edge with every group")
}

/// Default node budget for [`star_partition_for`].
pub const STAR_SEARCH_BUDGET: u64 = 5_000_000;

struct StarSearch {
    residual: Vec<usize>,
    assign: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl StarSearch {
    /// Places centers `label, label-1, ..., 1`.
    fn place(&mut self, label: usize) -> Result<bool, ConstructError> {
        if label == 0 {
            return Ok(self.residual.iter().all(|&r| r == 0));
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(ConstructError::BudgetExceeded);
        }
        // every open group still needs at least one of the centers 1..=label
        let open = self.residual.iter().filter(|&&r| r > 0).count();
        if open > label {
            return Ok(false);
        }
        let mut order: Vec<usize> = (0..self.residual.len())
            .filter(|&j| self.residual[j] >= label)
            .collect();
        // exact fits first, then the roomiest groups
        order.sort_by_key(|&j| {
            let r = self.residual[j];
            (r != label, std::cmp::Reverse(r), j)
        });
        let mut tried: Vec<usize> = Vec::with_capacity(order.len());
        for j in order {
            let r = self.residual[j];
            if tried.contains(&r) {
                continue;
            }
            tried.push(r);
            self.residual[j] -= label;
            self.assign[label] = j;
            if self.place(label - 1)? {
                return Ok(true);
            }
            self.residual[j] += label;
        }
        Ok(false)
    }
}

/// Searches for a star partition whose group sums are exactly `d` (group `j`
/// realizes `d.sizes()[j]`). `NotFound` means no special coloring has this
/// distribution.
pub fn star_partition_for(d: &Distribution) -> Result<StarPartition, ConstructError> {
    star_partition_with_budget(d, STAR_SEARCH_BUDGET)
}

pub fn star_partition_with_budget(
    d: &Distribution,
    budget: u64,
) -> Result<StarPartition, ConstructError> {
    let n = d.n();
    if d.k() > n.saturating_sub(1) {
        return Err(ConstructError::NotFound);
    }
    let mut search = StarSearch {
        residual: d.sizes().to_vec(),
        assign: vec![usize::MAX; n],
        nodes: 0,
        budget,
    };
    if !search.place(n.saturating_sub(1))? {
        return Err(ConstructError::NotFound);
    }
    let mut groups = vec![Vec::new(); d.k()];
    for i in (1..n).rev() {
        groups[search.assign[i]].push(i);
    }
    Ok(StarPartition::new(n, groups)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::is_gallai;

    fn dist(sizes: &[usize], n: usize) -> Distribution {
        Distribution::canonicalize(sizes.to_vec(), n).unwrap()
    }

    #[test]
    fn special_examples() {
        let c = special_coloring(&StarPartition::new(5, vec![vec![4, 3], vec![2], vec![1]]).unwrap());
        assert!(is_gallai(&c));
        assert_eq!(c.counts(), &[7, 2, 1]);
        let c = special_coloring(&StarPartition::new(5, vec![vec![4], vec![3, 1], vec![2]]).unwrap());
        assert_eq!(c.distribution().sizes(), &[4, 4, 2]);
        let c = special_coloring(&StarPartition::new(2, vec![vec![1]]).unwrap());
        assert_eq!(c.counts(), &[1]);
        assert!(c.is_special());
    }

    #[test]
    fn search_examples() {
        let sp = star_partition_for(&dist(&[7, 2, 1], 5)).unwrap();
        assert_eq!(sp.group_sums(), vec![7, 2, 1]);
        let sp = star_partition_for(&dist(&[3, 2, 1], 4)).unwrap();
        assert_eq!(sp.groups(), &[vec![3], vec![2], vec![1]]);
        assert_eq!(star_partition_for(&dist(&[8, 3, 3, 1], 6)), Err(ConstructError::NotFound));
    }

    #[test]
    fn search_matches_brute_force() {
        // brute force: every assignment of centers 1..n-1 to k groups
        fn brute(sizes: &[usize], n: usize) -> bool {
            let k = sizes.len();
            let total = k.pow((n - 1) as u32);
            (0..total).any(|mut code| {
                let mut sums = vec![0; k];
                for i in 1..n {
                    sums[code % k] += i;
                    code /= k;
                }
                sums == sizes
            })
        }
        for n in 2..=7 {
            for k in 1..=4.min(n - 1) {
                for sizes in crate::model::partitions(crate::model::choose2(n), k) {
                    let found = star_partition_for(&dist(&sizes, n)).is_ok();
                    assert_eq!(found, brute(&sizes, n), "n={n} {sizes:?}");
                }
            }
        }
    }

    #[test]
    fn budget_is_reported() {
        assert_eq!(star_partition_with_budget(&dist(&[6, 4], 5), 0), Err(ConstructError::BudgetExceeded));
    }
}
