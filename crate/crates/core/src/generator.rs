//! Seeded random Gallai colorings built by substitution: split the vertices
//! into blocks, 2-color the blocks' reduced graph, recurse into every block.

use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::model::{Color, Coloring, EdgeBuffer, GallaiPartition};

/// A generated coloring with the block structure of its top substitution
/// (`None` when `n < 2`).
#[derive(Clone, Debug)]
pub struct Generated {
    pub coloring: Coloring,
    pub top: Option<GallaiPartition>,
}

const MAX_BLOCKS: usize = 5;

fn fill(rng: &mut ChaCha8Rng, verts: &[usize], buf: &mut EdgeBuffer, max_colors: usize) -> Vec<Vec<usize>> {
    let len = verts.len();
    if len < 2 {
        return Vec::new();
    }
    let m = rng.gen_range(2..=len.min(MAX_BLOCKS));
    let mut order = verts.to_vec();
    order.shuffle(rng);
    let mut cuts: Vec<usize> = index::sample(rng, len - 1, m - 1).into_iter().map(|c| c + 1).collect();
    cuts.sort_unstable();
    cuts.push(len);
    let mut blocks = Vec::with_capacity(m);
    let mut start = 0;
    for end in cuts {
        blocks.push(order[start..end].to_vec());
        start = end;
    }
    let a = rng.gen_range(1..=max_colors) as Color;
    let pair = if max_colors == 1 || rng.gen_ratio(1, 4) {
        [a, a]
    } else {
        let mut b = rng.gen_range(1..max_colors) as Color;
        if b >= a {
            b += 1;
        }
        [a, b]
    };
    for x in 0..m {
        for y in x + 1..m {
            let col = pair[rng.gen_range(0..2)];
            for &u in &blocks[x] {
                for &v in &blocks[y] {
                    buf.set(u, v, col);
                }
            }
        }
    }
    for b in &blocks {
        fill(rng, b, buf, max_colors);
    }
    blocks
}

/// Random Gallai coloring of `K_n` with colors drawn from `1..=max_colors`
/// (unused ids compacted away). Deterministic in `(n, seed, max_colors)`.
pub fn random_gallai(n: usize, seed: u64, max_colors: usize) -> Generated {
    let max_colors = max_colors.max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut buf = EdgeBuffer::new(n);
    let verts: Vec<usize> = (0..n).collect();
    let mut blocks = fill(&mut rng, &verts, &mut buf, max_colors);
    let coloring = buf.finish_compacted().expect("substitution colors every edge");
    let top = (n >= 2).then(|| {
        for b in blocks.iter_mut() {
            b.sort_unstable();
        }
        let m = blocks.len();
        let mut reduced = vec![vec![0 as Color; m]; m];
        for x in 0..m {
            for y in 0..m {
                if x != y {
                    reduced[x][y] = coloring.color(blocks[x][0], blocks[y][0]);
                }
            }
        }
        let mut cross_colors: Vec<Color> = reduced.iter().flatten().copied().filter(|&c| c != 0).collect();
        cross_colors.sort_unstable();
        cross_colors.dedup();
        GallaiPartition {
            blocks,
            cross_colors,
            reduced,
        }
    });
    Generated { coloring, top }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{find_gallai_partition, is_gallai};

    #[test]
    fn tiny() {
        let g = random_gallai(1, 7, 3);
        assert_eq!((g.coloring.n(), g.coloring.k()), (1, 0));
        assert!(g.top.is_none());
        let g = random_gallai(2, 7, 3);
        assert_eq!(g.coloring.counts(), &[1]);
    }

    #[test]
    fn reproducible_and_gallai() {
        let a = random_gallai(12, 42, 5);
        let b = random_gallai(12, 42, 5);
        assert_eq!(a.coloring, b.coloring);
        assert!(is_gallai(&a.coloring));
        a.top.as_ref().unwrap().validate(&a.coloring).unwrap();
        for seed in 0..200 {
            let g = random_gallai(20, seed, 6);
            assert!(is_gallai(&g.coloring));
            assert!(g.coloring.k() <= 6);
            g.top.unwrap().validate(&g.coloring).unwrap();
            find_gallai_partition(&g.coloring).unwrap().validate(&g.coloring).unwrap();
        }
    }
}
