use crate::error::ModelError;
use crate::model::Distribution;

/// Partition of the star centers `{1, ..., n-1}` into color groups `T_1, ..., T_k`.
///
/// Group `j` colors every star `S(i)`, `i` in `T_j`, where `S(i)` is the set of
/// edges from `i` to the lower vertices `0..i`. The resulting coloring is always
/// Gallai: in a triangle `a > b > c` the edges `ab` and `ac` share a color.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarPartition {
    n: usize,
    groups: Vec<Vec<usize>>,
}

impl StarPartition {
    pub fn new(n: usize, mut groups: Vec<Vec<usize>>) -> Result<Self, ModelError> {
        let mut seen = vec![false; n];
        for g in &groups {
            if g.is_empty() {
                return Err(ModelError::StarPartition("empty group".into()));
            }
            for &i in g {
                if i == 0 || i >= n {
                    return Err(ModelError::StarPartition(format!(
                        "center {i} outside 1..={}",
                        n.saturating_sub(1)
                    )));
                }
                if std::mem::replace(&mut seen[i], true) {
                    return Err(ModelError::StarPartition(format!("center {i} used twice")));
                }
            }
        }
        if let Some(i) = (1..n).find(|&i| !seen[i]) {
            return Err(ModelError::StarPartition(format!("center {i} unused")));
        }
        for g in groups.iter_mut() {
            g.sort_unstable_by(|a, b| b.cmp(a));
        }
        Ok(Self { n, groups })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.groups.len()
    }

    pub fn groups(&self) -> &[Vec<usize>] {
        &self.groups
    }

    /// Class size of each group, in group order.
    pub fn group_sums(&self) -> Vec<usize> {
        self.groups.iter().map(|g| g.iter().sum()).collect()
    }

    pub fn distribution(&self) -> Distribution {
        Distribution::canonicalize(self.group_sums(), self.n)
            .expect("stars S(1..n-1) partition the edge set")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::choose2;
    use proptest::prelude::*;

    #[test]
    fn rejects_bad_groups() {
        assert!(StarPartition::new(5, vec![vec![4, 3], vec![2]]).is_err());
        assert!(StarPartition::new(5, vec![vec![4, 3], vec![2, 3], vec![1]]).is_err());
        assert!(StarPartition::new(5, vec![vec![4, 3, 0], vec![2], vec![1]]).is_err());
        assert!(StarPartition::new(5, vec![vec![4, 3, 2, 1], vec![]]).is_err());
    }

    #[test]
    fn sums() {
        let sp = StarPartition::new(5, vec![vec![3, 4], vec![2], vec![1]]).unwrap();
        assert_eq!(sp.group_sums(), vec![7, 2, 1]);
        assert_eq!(sp.groups()[0], vec![4, 3]);
    }

    proptest! {
        #[test]
        fn group_sums_cover_all_edges(n in 2usize..60, k in 1usize..10, seed in any::<u64>()) {
            let k = k.min(n - 1);
            let mut groups = vec![Vec::new(); k];
            let mut x = seed;
            for i in 1..n {
                // first k centers seed distinct groups, the rest land pseudo-randomly
                let j = if i <= k { i - 1 } else {
                    x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    ((x >> 33) as usize) % k
                };
                groups[j].push(i);
            }
            let sp = StarPartition::new(n, groups).unwrap();
            prop_assert_eq!(sp.group_sums().iter().sum::<usize>(), choose2(n));
        }
    }
}
