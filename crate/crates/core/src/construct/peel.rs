use crate::error::ConstructError;
use crate::model::{Color, Coloring, Distribution, EdgeBuffer};

/// Joins a new vertex `n` to every vertex of `c` in `color`. The new vertex is
/// homogeneous, so no rainbow triangle can appear.
pub fn extend_by_star(c: &Coloring, color: Color) -> Result<Coloring, ConstructError> {
    if color == 0 || color as usize > c.k() {
        return Err(ConstructError::PreconditionViolated(format!(
            "color {color} outside 1..={}",
            c.k()
        )));
    }
    let mut buf = EdgeBuffer::new(c.n() + 1);
    buf.edges[..c.edge_count()].copy_from_slice(c.buffer());
    buf.set_star(c.n(), color);
    Ok(buf.finish()?)
}

/// Record of a peel: which class of the original distribution lost a star at
/// each removed vertex, and where the surviving classes sit in the base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeelLog {
    /// Vertex count before peeling.
    pub n: usize,
    /// `steps[t]` is the class index (into the original sizes) of the star on
    /// vertex `n - 1 - t`.
    pub steps: Vec<usize>,
    /// `base_classes[j]` is the original class index of `base.sizes()[j]`.
    pub base_classes: Vec<usize>,
    /// Sizes of the base distribution.
    pub base_sizes: Vec<usize>,
}

/// Repeatedly removes the top vertex, charging its `n' - 1` edges to the
/// current largest class (ties go to the smaller class index), until `base_n`
/// vertices remain. Classes that reach zero drop out of the base distribution.
pub fn peel_reduction(d: &Distribution, base_n: usize) -> Result<(Distribution, PeelLog), ConstructError> {
    if base_n > d.n() {
        return Err(ConstructError::PreconditionViolated(format!(
            "base {base_n} exceeds n = {}",
            d.n()
        )));
    }
    let mut sizes = d.sizes().to_vec();
    let mut steps = Vec::with_capacity(d.n() - base_n);
    for cur in ((base_n + 1)..=d.n()).rev() {
        let (idx, &largest) = sizes
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))
            .expect("nonempty while edges remain");
        if largest < cur - 1 {
            return Err(ConstructError::PeelImpossible {
                n: cur,
                largest,
                needed: cur - 1,
            });
        }
        sizes[idx] -= cur - 1;
        steps.push(idx);
    }
    let mut base_classes: Vec<usize> = (0..sizes.len()).filter(|&j| sizes[j] > 0).collect();
    base_classes.sort_by(|&a, &b| sizes[b].cmp(&sizes[a]).then(a.cmp(&b)));
    let base = Distribution::canonicalize(base_classes.iter().map(|&j| sizes[j]).collect(), base_n)?;
    Ok((
        base.clone(),
        PeelLog {
            n: d.n(),
            steps,
            base_classes,
            base_sizes: base.sizes().to_vec(),
        },
    ))
}

/// Maps each color of `c` to an index of `wanted` with the same class size,
/// bijectively. `None` if the multisets differ.
pub(crate) fn align_colors(c: &Coloring, wanted: &[usize]) -> Option<Vec<usize>> {
    if c.k() != wanted.len() {
        return None;
    }
    let mut used = vec![false; wanted.len()];
    c.counts()
        .iter()
        .map(|&size| {
            let j = (0..wanted.len()).find(|&j| !used[j] && wanted[j] == size)?;
            used[j] = true;
            Some(j)
        })
        .collect()
}

/// Rebuilds the full coloring from a coloring of the base distribution. Color
/// `j + 1` of the result is class `j` of the original distribution.
pub fn replay_peel(base: &Coloring, log: &PeelLog) -> Result<Coloring, ConstructError> {
    if base.n() + log.steps.len() != log.n {
        return Err(ConstructError::PreconditionViolated(format!(
            "base has {} vertices, log expects {}",
            base.n(),
            log.n - log.steps.len()
        )));
    }
    let positions = align_colors(base, &log.base_sizes).ok_or_else(|| {
        ConstructError::PostCheck("base coloring does not match the base distribution".into())
    })?;
    let map: Vec<Color> = positions
        .iter()
        .map(|&pos| (log.base_classes[pos] + 1) as Color)
        .collect();
    let base_n = base.n();
    let mut buf = EdgeBuffer::new(log.n);
    let labels: Vec<usize> = (0..base_n).collect();
    buf.embed(base, &labels, &map);
    for (t, &class) in log.steps.iter().enumerate() {
        buf.set_star(log.n - 1 - t, (class + 1) as Color);
    }
    Ok(buf.finish()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::special_coloring;
    use crate::model::StarPartition;
    use crate::verify::is_gallai;

    fn dist(sizes: &[usize], n: usize) -> Distribution {
        Distribution::canonicalize(sizes.to_vec(), n).unwrap()
    }

    #[test]
    fn extend_examples() {
        let c = extend_by_star(&Coloring::monochromatic(3), 1).unwrap();
        assert_eq!(c, Coloring::monochromatic(4));
        let base = special_coloring(&StarPartition::new(5, vec![vec![4, 3], vec![2], vec![1]]).unwrap());
        let c = extend_by_star(&base, 1).unwrap();
        assert_eq!(c.counts(), &[12, 2, 1]);
        assert!(is_gallai(&c));
        assert!(extend_by_star(&base, 4).is_err());
    }

    #[test]
    fn peel_examples() {
        let (base, log) = peel_reduction(&dist(&[12, 2, 1], 6), 5).unwrap();
        assert_eq!(base, dist(&[7, 2, 1], 5));
        assert_eq!(log.steps, vec![0]);
        let (base, log) = peel_reduction(&dist(&[7, 2, 1], 5), 5).unwrap();
        assert_eq!(base, dist(&[7, 2, 1], 5));
        assert!(log.steps.is_empty());
        assert_eq!(
            peel_reduction(&dist(&[2, 2, 2], 4), 3),
            Err(ConstructError::PeelImpossible {
                n: 4,
                largest: 2,
                needed: 3
            })
        );
    }

    #[test]
    fn peel_follows_current_largest() {
        // (5, 5) on K_5: peel 4 from the first class, then 3 from the second
        let (base, log) = peel_reduction(&dist(&[5, 5], 5), 3).unwrap();
        assert_eq!(base, dist(&[2, 1], 3));
        assert_eq!(log.steps, vec![0, 1]);
        assert_eq!(log.base_classes, vec![1, 0]);
    }

    #[test]
    fn replay_inverts_peel() {
        for sizes in crate::model::partitions(45, 3) {
            let d = dist(&sizes, 10);
            let Ok((base, log)) = peel_reduction(&d, 5) else { continue };
            let sp = crate::construct::star_partition_for(&base);
            let Ok(sp) = sp else { continue };
            let full = replay_peel(&special_coloring(&sp), &log).unwrap();
            assert!(is_gallai(&full));
            assert_eq!(full.counts(), d.sizes());
        }
    }
}
