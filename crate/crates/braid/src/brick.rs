use exchange_core::ExchangeMatrix;
use serde::Serialize;

use crate::{BraidError, BraidWord};

/// Occurrence positions (0-based) per level and the bricks between them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BrickDiagram {
    /// `positions[i - 1]` lists where s_i occurs.
    pub positions: Vec<Vec<usize>>,
    /// `(level, left, right)` with consecutive occurrences `left < right`,
    /// ordered by level then position. Quiver vertices follow this order.
    pub bricks: Vec<(usize, usize, usize)>,
}

impl BrickDiagram {
    pub fn new(w: &BraidWord) -> Result<Self, BraidError> {
        let mut positions = vec![Vec::new(); w.strands - 1];
        for (p, &g) in w.letters.iter().enumerate() {
            positions[g - 1].push(p);
        }
        if let Some(i) = positions.iter().position(|v| v.is_empty()) {
            return Err(BraidError::LevelUnused(i + 1));
        }
        let bricks = positions
            .iter()
            .enumerate()
            .flat_map(|(i, ps)| ps.windows(2).map(move |p| (i + 1, p[0], p[1])))
            .collect();
        Ok(BrickDiagram { positions, bricks })
    }

    pub fn bricks_on(&self, level: usize) -> usize {
        self.positions[level - 1].len().saturating_sub(1)
    }
}

/// Brick quiver: consecutive bricks on a level point left to right; bricks on
/// adjacent levels whose intervals interleave point from the lower level up.
pub fn brick_quiver(w: &BraidWord) -> Result<ExchangeMatrix, BraidError> {
    let d = BrickDiagram::new(w)?;
    let n = d.bricks.len();
    let mut rows = vec![vec![0i64; n]; n];
    for (a, &(la, l0, r0)) in d.bricks.iter().enumerate() {
        for (b, &(lb, l1, r1)) in d.bricks.iter().enumerate() {
            let arrow = if la == lb {
                r0 == l1
            } else if lb == la + 1 {
                // exactly one endpoint of b strictly inside a
                let inside = |x: usize| l0 < x && x < r0;
                inside(l1) != inside(r1)
            } else {
                false
            };
            if arrow {
                rows[a][b] += 1;
                rows[b][a] -= 1;
            }
        }
    }
    Ok(ExchangeMatrix::square(rows).expect("skew-symmetric by construction"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d4_bricks() {
        let w = BraidWord::new(4, vec![3, 2, 2, 3, 1, 2, 2, 1]).unwrap();
        let d = BrickDiagram::new(&w).unwrap();
        assert_eq!(d.bricks, vec![(1, 4, 7), (2, 1, 2), (2, 2, 5), (2, 5, 6), (3, 0, 3)]);
        let q = brick_quiver(&w).unwrap();
        // centre is the middle level-2 brick, vertex 2
        assert_eq!(q, ExchangeMatrix::from_arrows(5, &[(0, 2), (1, 2), (2, 3), (2, 4)]));
    }

    #[test]
    fn single_level_is_a_path() {
        let q = brick_quiver(&BraidWord::new(2, vec![1; 4]).unwrap()).unwrap();
        assert_eq!(q, ExchangeMatrix::from_arrows(3, &[(0, 1), (1, 2)]));
    }

    #[test]
    fn unused_level() {
        let w = BraidWord::new(4, vec![1, 1, 3]).unwrap();
        assert_eq!(brick_quiver(&w), Err(BraidError::LevelUnused(2)));
    }
}
