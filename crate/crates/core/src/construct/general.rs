//! The reduction from `k` to `k - 1` colors on `n >= 8k^2 + 1` vertices.
//!
//! Stars of the smallest class are attached at the top while they fit; the
//! remainder of that class goes into a block `A` of `4k + 1` vertices whose
//! edges to everything below are in the largest class. The rest of the graph
//! is handled with one color fewer.

use crate::construct::{embed_classes, finish_checked, registry, Residual};
use crate::error::ConstructError;
use crate::model::{choose2, Color, Coloring, Distribution, EdgeBuffer};

/// Smallest `n` covered by [`construct_gk_general`] for `k` colors.
pub fn general_threshold(k: usize) -> usize {
    8 * k * k + 1
}

/// An unrealizable instance: `K_{2k-3}` with `k - 1` unit classes, two of
/// which must meet in a rainbow triangle.
pub fn lower_bound_witness(k: usize) -> Result<(usize, Distribution), ConstructError> {
    if k < 3 {
        return Err(ConstructError::PreconditionViolated(format!("k = {k} < 3")));
    }
    let n = 2 * k - 3;
    let mut sizes = vec![choose2(n) - (k - 1)];
    sizes.extend(std::iter::repeat_n(1, k - 1));
    Ok((n, Distribution::canonicalize(sizes, n)?))
}

/// Distinct star sizes `s < size` inside a block of `size` vertices summing to
/// `total`, largest first.
fn greedy_stars(size: usize, mut total: usize) -> Vec<usize> {
    let mut out = Vec::new();
    for s in (1..size).rev() {
        if s <= total {
            out.push(s);
            total -= s;
        }
    }
    debug_assert_eq!(total, 0);
    out
}

/// Gallai `k`-coloring for any distribution with `k >= 3` on
/// `n >= 8k^2 + 1` vertices.
pub fn construct_gk_general(d: &Distribution) -> Result<Coloring, ConstructError> {
    let (n, k) = (d.n(), d.k());
    if k < 3 || n < general_threshold(k) {
        return Err(ConstructError::PreconditionViolated(format!(
            "needs k >= 3 and n >= {}, got k={k}, n={n}",
            general_threshold(k.max(3))
        )));
    }
    let mut buf = EdgeBuffer::new(n);
    let mut res = Residual::new(d);
    let top = reduce(&mut buf, &mut res, n, k)?;
    let (sd, classes) = res.to_distribution(top)?;
    let sub = registry::realize_guaranteed(&sd).ok_or_else(|| {
        ConstructError::InternalSchedule(format!("residual {sd} on {top} vertices left the covered range"))
    })??;
    let labels: Vec<usize> = (0..top).collect();
    embed_classes(&mut buf, &sub, &labels, &sd, &classes)?;
    finish_checked(buf.finish()?, d)
}

/// Eliminates class `k - 1` from the top of the vertex range and returns the
/// number of vertices left for the remaining classes.
fn reduce(buf: &mut EdgeBuffer, res: &mut Residual, n: usize, k: usize) -> Result<usize, ConstructError> {
    let (last, first) = (k - 1, 0);
    let last_color = (last + 1) as Color;
    let first_color = (first + 1) as Color;
    let mut top = n;
    // phase 1: whole stars of the last class
    while top >= 1 && res.sizes[last] >= top - 1 && res.sizes[last] > 0 {
        top -= 1;
        buf.set_star(top, last_color);
        res.take(last, top)?;
    }
    let rest = res.sizes[last];
    if rest == 0 {
        return Ok(top);
    }
    // phase 2: the block A = top-4k-1 .. top-1
    let size = 4 * k + 1;
    if top < size || choose2(size) < rest {
        return Err(ConstructError::InternalSchedule(format!(
            "block of {size} vertices cannot hold {rest} edges below {top}"
        )));
    }
    let base = top - size;
    for a in base..top {
        for v in 0..a {
            buf.set(v, a, first_color);
        }
    }
    res.take(first, choose2(top) - choose2(base) - rest)?;
    for (t, s) in greedy_stars(size, rest).into_iter().enumerate() {
        let center = top - 1 - t;
        for v in (center - s)..center {
            buf.set(v, center, last_color);
        }
    }
    res.take(last, rest)?;
    Ok(base)
}
