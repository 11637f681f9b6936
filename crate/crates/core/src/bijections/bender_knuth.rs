//! Pairs of column-strict plane partitions of equal shape and plane
//! partitions, glued along the main diagonal.

use thiserror::Error;

use crate::closedform::{b_lambda, hl_strip_polys, HLPoly};
use crate::coeff::TPoly;
use crate::partition::Partition;
use crate::plane::PlanePartition;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BenderKnuthError {
    #[error("shapes {0:?} and {1:?} differ")]
    ShapeMismatch(Vec<u32>, Vec<u32>),
    #[error("input is not column strict")]
    NotColumnStrict,
}

/// `σ^{(i)}`: the shape of the entries `≥ i`, for `i = 1..=max`.
pub fn level_shapes(t: &PlanePartition) -> Vec<Partition> {
    let max = t.rows().iter().flatten().copied().max().unwrap_or(0);
    (1..=max)
        .map(|i| {
            Partition::new(
                t.rows()
                    .iter()
                    .map(|r| r.iter().filter(|&&v| v >= i).count() as u32)
                    .filter(|&c| c > 0)
                    .collect::<Vec<_>>(),
            )
        })
        .collect()
}

/// Inverse of [`level_shapes`]: cell `(r, c)` gets the largest `i` with the
/// cell in the `i`-th shape.
fn from_level_shapes(shapes: &[Partition]) -> PlanePartition {
    let Some(outer) = shapes.first() else {
        return PlanePartition::empty();
    };
    let rows = (1..=outer.len())
        .map(|r| {
            (1..=outer.part(r) as usize)
                .map(|c| {
                    shapes
                        .iter()
                        .take_while(|s| s.part(r) as usize >= c)
                        .count() as u32
                })
                .collect()
        })
        .collect();
    PlanePartition::from_rows_unchecked(rows)
}

/// `Π` whose diagonal `x ≥ 0` is `σ^{(x+1)}` and whose diagonal `x < 0` is
/// `λ^{(1-x)}`.
pub fn bender_knuth(
    sigma: &PlanePartition,
    lambda: &PlanePartition,
) -> Result<PlanePartition, BenderKnuthError> {
    if sigma.shape() != lambda.shape() {
        return Err(BenderKnuthError::ShapeMismatch(
            sigma.shape().parts().to_vec(),
            lambda.shape().parts().to_vec(),
        ));
    }
    if !sigma.is_column_strict() || !lambda.is_column_strict() {
        return Err(BenderKnuthError::NotColumnStrict);
    }
    let up = level_shapes(sigma);
    let down = level_shapes(lambda);
    let diag = |x: i64| -> Partition {
        let idx = if x >= 0 { x as usize } else { (-x) as usize };
        let src = if x >= 0 { &up } else { &down };
        src.get(idx).cloned().unwrap_or_else(Partition::empty)
    };
    let (cols, rows) = (up.len() as i64, down.len() as i64);
    let mut grid: Vec<Vec<u32>> = Vec::new();
    for x in -(rows - 1).max(0)..cols {
        let d = diag(x);
        for (k, &v) in d.parts().iter().enumerate() {
            let (i, j) = if x >= 0 {
                (k, k + x as usize)
            } else {
                (k + (-x) as usize, k)
            };
            if grid.len() <= i {
                grid.resize(i + 1, Vec::new());
            }
            if grid[i].len() <= j {
                grid[i].resize(j + 1, 0);
            }
            grid[i][j] = v;
        }
    }
    PlanePartition::new(grid).map_err(|_| BenderKnuthError::NotColumnStrict)
}

/// Splits `Π` back into `(Σ, Λ)`.
pub fn bender_knuth_inverse(pi: &PlanePartition) -> (PlanePartition, PlanePartition) {
    let shapes = |sign: i64| -> Vec<Partition> {
        (0..)
            .map(|x: i64| pi.diagonal_partition(sign * x))
            .take_while(|p| !p.is_empty())
            .collect()
    };
    (
        from_level_shapes(&shapes(1)),
        from_level_shapes(&shapes(-1)),
    )
}

/// `φ_T = ∏_i φ_{σ^{(i)}/σ^{(i+1)}}` over the level shapes of `T`.
pub fn phi_column_strict(t: &PlanePartition) -> HLPoly {
    let mut shapes = level_shapes(t);
    shapes.push(Partition::empty());
    shapes.windows(2).fold(TPoly::one(), |acc, w| {
        &acc * &hl_strip_polys(&w[0], &w[1]).0
    })
}

/// `φ_Σ φ_Λ / b_λ` for the pair, which equals the `A` polynomial of the
/// glued plane partition.
pub fn pair_a_poly(sigma: &PlanePartition, lambda: &PlanePartition) -> Option<HLPoly> {
    let num = &phi_column_strict(sigma) * &phi_column_strict(lambda);
    num.div_exact(&b_lambda(&sigma.shape()))
}
