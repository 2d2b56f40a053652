//! Certificate checkers.

use crate::error::VerifyError;
use crate::model::{Color, Coloring, Distribution, GallaiPartition};

/// First rainbow triangle `[a, b, c]` (`a < b < c`) in scan order, if any.
pub fn rainbow_triangle(c: &Coloring) -> Option<[usize; 3]> {
    let edges = c.buffer();
    for top in 2..c.n() {
        let row_top = &edges[top * (top - 1) / 2..][..top];
        for mid in 1..top {
            let row_mid = &edges[mid * (mid - 1) / 2..][..mid];
            let y = row_top[mid];
            for low in 0..mid {
                let (x, z) = (row_mid[low], row_top[low]);
                if x != y && x != z && y != z {
                    return Some([low, mid, top]);
                }
            }
        }
    }
    None
}

/// True iff no triangle carries three distinct colors.
pub fn is_gallai(c: &Coloring) -> bool {
    rainbow_triangle(c).is_none()
}

pub fn class_sizes(c: &Coloring) -> Distribution {
    c.distribution()
}

/// `(n-1) + (n-2) + ... + (n-l)`.
pub fn prefix_bound(n: usize, l: usize) -> i64 {
    let (n, l) = (n as i64, l as i64);
    l * n - l * (l + 1) / 2
}

/// A prefix of the sorted class sizes that falls short of the bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NecessaryFailure {
    pub ell: usize,
    pub prefix: usize,
    pub bound: i64,
}

/// Checks `e_1 + ... + e_l >= (n-1) + ... + (n-l)` for every `l`; reports the
/// smallest failing `l`.
pub fn check_necessary(d: &Distribution) -> Result<(), NecessaryFailure> {
    let mut prefix = 0usize;
    for (idx, &e) in d.sizes().iter().enumerate() {
        prefix += e;
        let ell = idx + 1;
        let bound = prefix_bound(d.n(), ell);
        if (prefix as i64) < bound {
            return Err(NecessaryFailure { ell, prefix, bound });
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cover {
    pub colors: Vec<Color>,
    pub total: usize,
}

/// The `l` largest classes (ties to the smaller id) and their combined size.
/// With `require_gallai`, a non-Gallai input is an error.
pub fn top_l_cover(c: &Coloring, ell: usize, require_gallai: bool) -> Result<Cover, VerifyError> {
    if ell == 0 || ell > c.k() {
        return Err(VerifyError::BadEll { ell, k: c.k() });
    }
    if require_gallai {
        if let Some(t) = rainbow_triangle(c) {
            return Err(VerifyError::NotGallai(t));
        }
    }
    let mut ids: Vec<Color> = (1..=c.k() as Color).collect();
    ids.sort_by(|&a, &b| c.count_of(b).cmp(&c.count_of(a)).then(a.cmp(&b)));
    ids.truncate(ell);
    let total = ids.iter().map(|&id| c.count_of(id)).sum();
    Ok(Cover { colors: ids, total })
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Self {
        Self((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            y = std::mem::replace(&mut self.0[y], r);
        }
        r
    }
    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a.max(b)] = a.min(b);
        }
    }
}

/// Attempts a partition whose cross edges use only colors from `allowed`.
///
/// Blocks start as the components of the edges outside `allowed`, then any two
/// blocks joined by more than one color are merged. Every merge stays inside a
/// block of any valid partition with these cross colors, so the result has at
/// least as many blocks as such a partition.
fn partition_for_colors(c: &Coloring, allowed: &[Color]) -> Option<GallaiPartition> {
    let n = c.n();
    let mut dsu = Dsu::new(n);
    for v in 1..n {
        for u in 0..v {
            if !allowed.contains(&c.color(u, v)) {
                dsu.union(u, v);
            }
        }
    }
    loop {
        let mut roots: Vec<usize> = (0..n).filter(|&v| dsu.find(v) == v).collect();
        roots.sort_unstable();
        if roots.len() < 2 {
            return None;
        }
        let mut index = vec![0usize; n];
        for (x, &r) in roots.iter().enumerate() {
            index[r] = x;
        }
        let block_of: Vec<usize> = (0..n).map(|v| index[dsu.find(v)]).collect();
        let m = roots.len();
        let mut reduced = vec![vec![0 as Color; m]; m];
        let mut clash = None;
        'scan: for v in 1..n {
            for u in 0..v {
                let (x, y) = (block_of[u], block_of[v]);
                if x == y {
                    continue;
                }
                let col = c.color(u, v);
                let slot = &mut reduced[x][y];
                if *slot == 0 {
                    *slot = col;
                    reduced[y][x] = col;
                } else if *slot != col {
                    clash = Some((u, v));
                    break 'scan;
                }
            }
        }
        match clash {
            Some((u, v)) => dsu.union(u, v),
            None => {
                let mut blocks = vec![Vec::new(); m];
                for v in 0..n {
                    blocks[block_of[v]].push(v);
                }
                let mut cross: Vec<Color> = reduced.iter().flatten().copied().filter(|&x| x != 0).collect();
                cross.sort_unstable();
                cross.dedup();
                return Some(GallaiPartition {
                    blocks,
                    cross_colors: cross,
                    reduced,
                });
            }
        }
    }
}

/// Finds a decomposition into `m >= 2` blocks with block-pair-monochromatic
/// cross edges in at most two colors. Every returned partition has been
/// re-validated.
pub fn find_gallai_partition(c: &Coloring) -> Result<GallaiPartition, VerifyError> {
    if c.n() < 2 {
        return Err(VerifyError::NotFound);
    }
    if let Some(t) = rainbow_triangle(c) {
        return Err(VerifyError::NotGallai(t));
    }
    let k = c.k() as Color;
    let mut candidates: Vec<Vec<Color>> = Vec::new();
    if k == 1 {
        candidates.push(vec![1]);
    }
    for a in 1..=k {
        for b in (a + 1)..=k {
            candidates.push(vec![a, b]);
        }
    }
    for allowed in candidates {
        if let Some(p) = partition_for_colors(c, &allowed) {
            if p.validate(c).is_ok() {
                return Ok(p);
            }
        }
    }
    Err(VerifyError::NotFound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::StarPartition;

    fn special(n: usize, groups: Vec<Vec<usize>>) -> Coloring {
        crate::construct::special_coloring(&StarPartition::new(n, groups).unwrap())
    }

    #[test]
    fn rainbow_k3() {
        let c = Coloring::from_fn(3, |u, v| (u + v) as Color).unwrap();
        assert!(!is_gallai(&c));
        assert_eq!(rainbow_triangle(&c), Some([0, 1, 2]));
    }

    #[test]
    fn monochromatic_is_gallai() {
        assert!(is_gallai(&Coloring::monochromatic(10)));
    }

    #[test]
    fn special_721() {
        let c = special(5, vec![vec![4, 3], vec![2], vec![1]]);
        assert!(is_gallai(&c));
        assert_eq!(class_sizes(&c).sizes(), &[7, 2, 1]);
    }

    #[test]
    fn class_sizes_examples() {
        assert_eq!(class_sizes(&Coloring::monochromatic(4)).sizes(), &[6]);
        let c = Coloring::from_fn(5, |u, v| match (u, v) {
            (0, 1) => 2,
            (2, 3) => 3,
            _ => 1,
        })
        .unwrap();
        assert!(is_gallai(&c));
        assert_eq!(class_sizes(&c).sizes(), &[8, 1, 1]);
    }

    #[test]
    fn necessary_examples() {
        let d = Distribution::canonicalize(vec![7, 3, 2, 2, 1], 6).unwrap();
        assert_eq!(check_necessary(&d), Ok(()));
        let d = Distribution::canonicalize(vec![2, 2, 2], 4).unwrap();
        assert_eq!(
            check_necessary(&d),
            Err(NecessaryFailure {
                ell: 1,
                prefix: 2,
                bound: 3
            })
        );
        // 7 >= 4, 9 >= 7, 10 >= 9
        let d = Distribution::canonicalize(vec![7, 2, 1], 5).unwrap();
        assert_eq!(check_necessary(&d), Ok(()));
        assert_eq!(prefix_bound(5, 1), 4);
        assert_eq!(prefix_bound(5, 2), 7);
        assert_eq!(prefix_bound(5, 3), 9);
    }

    #[test]
    fn cover_is_sharp_on_singleton_stars() {
        for n in 2..15 {
            let c = special(n, (1..n).rev().map(|i| vec![i]).collect());
            for ell in 1..n {
                let cover = top_l_cover(&c, ell, true).unwrap();
                assert_eq!(cover.total as i64, prefix_bound(n, ell), "n={n} l={ell}");
            }
        }
    }

    #[test]
    fn cover_monochromatic_and_ties() {
        let cover = top_l_cover(&Coloring::monochromatic(6), 1, true).unwrap();
        assert_eq!(cover, Cover { colors: vec![1], total: 15 });
        // colors 1 and 2 tie at 2 edges, color 3 has 2: smaller ids win
        let c = Coloring::from_fn(4, |u, v| match (u, v) {
            (0, 1) | (0, 2) => 1,
            (0, 3) | (1, 2) => 2,
            _ => 3,
        })
        .unwrap();
        assert_eq!(top_l_cover(&c, 2, false).unwrap().colors, vec![1, 2]);
        assert_eq!(top_l_cover(&c, 4, false), Err(VerifyError::BadEll { ell: 4, k: 3 }));
    }

    #[test]
    fn cover_rejects_rainbow_when_checked() {
        let c = Coloring::from_fn(3, |u, v| (u + v) as Color).unwrap();
        assert!(matches!(top_l_cover(&c, 1, true), Err(VerifyError::NotGallai(_))));
        assert!(top_l_cover(&c, 1, false).is_ok());
    }

    #[test]
    fn partition_of_monochromatic() {
        let c = Coloring::monochromatic(4);
        let p = find_gallai_partition(&c).unwrap();
        assert_eq!(p.blocks.len(), 4);
        assert_eq!(p.cross_colors, vec![1]);
        p.validate(&c).unwrap();
    }

    #[test]
    fn partition_of_two_coloring() {
        let c = Coloring::from_fn(7, |u, v| ((u * 3 + v * 5) % 2 + 1) as Color).unwrap();
        let p = find_gallai_partition(&c).unwrap();
        assert_eq!(p.blocks.len(), 7);
        assert_eq!(p.cross_colors, vec![1, 2]);
    }

    #[test]
    fn partition_needs_merging() {
        // two K_3 blocks joined by color 1; one block uses colors {1, 2}, the
        // other is monochromatic in 3
        let c = Coloring::from_fn(6, |u, v| match (u / 3, v / 3) {
            (0, 0) => if (u, v) == (0, 1) { 1 } else { 2 },
            (1, 1) => 3,
            _ => 1,
        })
        .unwrap();
        assert!(is_gallai(&c));
        let p = find_gallai_partition(&c).unwrap();
        p.validate(&c).unwrap();
        assert!(p.blocks.len() >= 2);
    }

    #[test]
    fn partition_rejects_rainbow() {
        let c = Coloring::from_fn(3, |u, v| (u + v) as Color).unwrap();
        assert!(matches!(find_gallai_partition(&c), Err(VerifyError::NotGallai(_))));
    }
}
