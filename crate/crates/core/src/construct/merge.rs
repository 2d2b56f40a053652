use crate::error::ConstructError;
use crate::model::{Color, Coloring};

/// Merges color classes: every part of `grouping` becomes one color, numbered
/// by the position of the part. Merging cannot create a rainbow triangle.
pub fn merge_classes(c: &Coloring, grouping: &[Vec<Color>]) -> Result<Coloring, ConstructError> {
    let mut map: Vec<Color> = vec![0; c.k()];
    for (part_idx, part) in grouping.iter().enumerate() {
        if part.is_empty() {
            return Err(ConstructError::PreconditionViolated(format!("part {part_idx} is empty")));
        }
        for &col in part {
            let slot = (col as usize)
                .checked_sub(1)
                .and_then(|i| map.get_mut(i))
                .ok_or_else(|| ConstructError::PreconditionViolated(format!("color {col} out of range")))?;
            if *slot != 0 {
                return Err(ConstructError::PreconditionViolated(format!("color {col} in two parts")));
            }
            *slot = (part_idx + 1) as Color;
        }
    }
    if let Some(missing) = map.iter().position(|&m| m == 0) {
        return Err(ConstructError::PreconditionViolated(format!(
            "color {} not in any part",
            missing + 1
        )));
    }
    Ok(c.recolor(&map)?)
}
