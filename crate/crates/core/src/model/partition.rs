use serde::Serialize;

use crate::error::ModelError;
use crate::model::{Color, Coloring};

/// A decomposition of the vertex set into `m >= 2` blocks such that all edges
/// between two blocks share one color, and at most two colors occur between blocks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GallaiPartition {
    pub blocks: Vec<Vec<usize>>,
    pub cross_colors: Vec<Color>,
    /// `reduced[x][y]` is the color between blocks `x` and `y` (`0` on the diagonal).
    pub reduced: Vec<Vec<Color>>,
}

impl GallaiPartition {
    /// Checks every invariant against the coloring it claims to decompose.
    pub fn validate(&self, c: &Coloring) -> Result<(), ModelError> {
        let err = |msg: String| Err(ModelError::GallaiPartition(msg));
        let m = self.blocks.len();
        if m < 2 {
            return err(format!("{m} blocks"));
        }
        if self.cross_colors.len() > 2 {
            return err(format!("{} cross colors", self.cross_colors.len()));
        }
        let mut block_of = vec![usize::MAX; c.n()];
        for (x, b) in self.blocks.iter().enumerate() {
            if b.is_empty() {
                return err(format!("block {x} is empty"));
            }
            for &v in b {
                if v >= c.n() || block_of[v] != usize::MAX {
                    return err(format!("vertex {v} misplaced"));
                }
                block_of[v] = x;
            }
        }
        if block_of.contains(&usize::MAX) {
            return err("blocks do not cover the vertex set".into());
        }
        if self.reduced.len() != m || self.reduced.iter().any(|row| row.len() != m) {
            return err("reduced matrix has the wrong shape".into());
        }
        for v in 1..c.n() {
            for u in 0..v {
                let (x, y) = (block_of[u], block_of[v]);
                if x == y {
                    continue;
                }
                let r = self.reduced[x][y];
                if r != self.reduced[y][x] || !self.cross_colors.contains(&r) {
                    return err(format!("block pair ({x},{y}) has color {r}"));
                }
                if c.color(u, v) != r {
                    return err(format!("edge ({u},{v}) breaks block pair ({x},{y})"));
                }
            }
        }
        Ok(())
    }
}
