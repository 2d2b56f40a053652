//! Constructive procedures: special colorings, the division and balanced
//! schedules, monotone peeling, small base tables and the general reduction.

mod balanced;
mod base;
mod division;
mod general;
mod merge;
mod peel;
mod registry;
mod special;

pub use balanced::{balanced_schedule, construct_balanced, max_balanced_colors};
pub use base::{construct_k3, construct_k3_base, construct_k4, construct_k4_base, two_color_fill};
pub use division::{construct_division, division_schedule, division_target};
pub use general::{construct_gk_general, general_threshold, lower_bound_witness};
pub use merge::merge_classes;
pub use peel::{extend_by_star, peel_reduction, replay_peel, PeelLog};
pub use registry::{
    construct_any, construct_any_with, construct_with, division_params_of, guaranteed, Realizer, Registry,
    ORACLE_FALLBACK_MAX_N,
};
pub use special::{special_coloring, star_partition_for, star_partition_with_budget, STAR_SEARCH_BUDGET};

use crate::error::ConstructError;
use crate::model::{Color, Coloring, Distribution, EdgeBuffer};
use crate::verify::rainbow_triangle;

/// Post-check shared by every constructor: the coloring must be Gallai and
/// realize exactly `target`.
pub(crate) fn finish_checked(c: Coloring, target: &Distribution) -> Result<Coloring, ConstructError> {
    if let Some(t) = rainbow_triangle(&c) {
        return Err(ConstructError::PostCheck(format!("rainbow triangle {t:?}")));
    }
    let got = c.distribution();
    if &got != target {
        return Err(ConstructError::PostCheck(format!("built {got}, wanted {target}")));
    }
    Ok(c)
}

/// Residual class sizes indexed by the class they belong to. Zero entries are
/// dropped when the residual is realized on a smaller vertex set.
#[derive(Clone, Debug)]
pub(crate) struct Residual {
    pub(crate) sizes: Vec<usize>,
}

impl Residual {
    pub(crate) fn new(d: &Distribution) -> Self {
        Self {
            sizes: d.sizes().to_vec(),
        }
    }

    /// Charges `amount` edges to `class`.
    pub(crate) fn take(&mut self, class: usize, amount: usize) -> Result<(), ConstructError> {
        let have = self.sizes[class];
        if have < amount {
            return Err(ConstructError::PreconditionViolated(format!(
                "class {class} has {have} edges left, needs {amount}"
            )));
        }
        self.sizes[class] -= amount;
        Ok(())
    }

    /// Index of the largest remaining class, ties to the smaller index,
    /// skipping `except`.
    pub(crate) fn largest_except(&self, except: Option<usize>) -> Option<usize> {
        (0..self.sizes.len())
            .filter(|&j| Some(j) != except)
            .max_by(|&a, &b| self.sizes[a].cmp(&self.sizes[b]).then(b.cmp(&a)))
    }

    /// The nonzero classes as a distribution on `n` vertices, with the class
    /// index of each sorted entry.
    pub(crate) fn to_distribution(&self, n: usize) -> Result<(Distribution, Vec<usize>), ConstructError> {
        let mut classes: Vec<usize> = (0..self.sizes.len()).filter(|&j| self.sizes[j] > 0).collect();
        classes.sort_by(|&a, &b| self.sizes[b].cmp(&self.sizes[a]).then(a.cmp(&b)));
        let d = Distribution::canonicalize(classes.iter().map(|&j| self.sizes[j]).collect(), n)?;
        Ok((d, classes))
    }
}

/// Copies `sub` onto `labels`, sending each of its colors to the class of
/// `classes` whose wanted size matches (see [`Residual::to_distribution`]).
pub(crate) fn embed_classes(
    buf: &mut EdgeBuffer,
    sub: &Coloring,
    labels: &[usize],
    sub_target: &Distribution,
    classes: &[usize],
) -> Result<(), ConstructError> {
    let positions = peel::align_colors(sub, sub_target.sizes())
        .ok_or_else(|| ConstructError::PostCheck(format!("sub-coloring does not realize {sub_target}")))?;
    let map: Vec<Color> = positions.iter().map(|&pos| (classes[pos] + 1) as Color).collect();
    buf.embed(sub, labels, &map);
    Ok(())
}
