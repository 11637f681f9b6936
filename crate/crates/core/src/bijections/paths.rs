//! Overpartitions as lattice paths with East, North and North-East steps,
//! and plane overpartitions as families of nonintersecting paths.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partition::{Entry, Overpartition, Partition};
use crate::plane::PlaneOverpartition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Step {
    E,
    N,
    NE,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LatticePath {
    pub start: (i64, i64),
    pub steps: Vec<Step>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PathError {
    #[error("part {part} exceeds the horizontal extent {x}")]
    PartTooLarge { part: u32, x: u32 },
    #[error("{parts} parts do not fit in {rows} rows")]
    TooManyParts { parts: usize, rows: usize },
    #[error("path does not end at ({0}, {1})")]
    WrongEnd(i64, i64),
    #[error("paths {0} and {1} share the vertex {2:?}")]
    Intersecting(usize, usize, (i64, i64)),
    #[error("decoded object is invalid: {0}")]
    Invalid(String),
}

impl LatticePath {
    pub fn end(&self) -> (i64, i64) {
        self.steps.iter().fold(self.start, |(x, y), s| match s {
            Step::E => (x + 1, y),
            Step::N => (x, y + 1),
            Step::NE => (x + 1, y + 1),
        })
    }

    pub fn vertices(&self) -> Vec<(i64, i64)> {
        let mut out = vec![self.start];
        let (mut x, mut y) = self.start;
        for s in &self.steps {
            match s {
                Step::E => x += 1,
                Step::N => y += 1,
                Step::NE => {
                    x += 1;
                    y += 1
                }
            }
            out.push((x, y));
        }
        out
    }

    /// `(o, w)` with weight `a^o q^w`: East steps weigh 1, North steps on
    /// the line `x = i` weigh `q^i`, a North-East step from line `i` to
    /// `i + 1` weighs `a q^{i+1}`.
    pub fn weight(&self) -> (u32, u64) {
        let (mut o, mut w) = (0u32, 0u64);
        let mut x = self.start.0;
        for s in &self.steps {
            match s {
                Step::E => x += 1,
                Step::N => w += x as u64,
                Step::NE => {
                    x += 1;
                    o += 1;
                    w += x as u64;
                }
            }
        }
        (o, w)
    }
}

/// The path from `(0, 0)` to `(x, k)` along the border of the diagram of
/// `λ`, read from the smallest part up; the corner of an overlined part is
/// cut by a North-East step.
pub fn overpartition_to_path(
    op: &Overpartition,
    k: usize,
    x: u32,
) -> Result<LatticePath, PathError> {
    row_path(op.entries(), k, x, (0, 0))
}

fn row_path(
    entries: &[Entry],
    k: usize,
    x: u32,
    start: (i64, i64),
) -> Result<LatticePath, PathError> {
    if entries.len() > k {
        return Err(PathError::TooManyParts {
            parts: entries.len(),
            rows: k,
        });
    }
    let mut steps = vec![Step::N; k - entries.len()];
    let mut cur = 0u32;
    for e in entries.iter().rev() {
        if e.value > x {
            return Err(PathError::PartTooLarge { part: e.value, x });
        }
        if e.overlined {
            steps.extend(std::iter::repeat(Step::E).take((e.value - cur - 1) as usize));
            steps.push(Step::NE);
        } else {
            steps.extend(std::iter::repeat(Step::E).take((e.value - cur) as usize));
            steps.push(Step::N);
        }
        cur = e.value;
    }
    steps.extend(std::iter::repeat(Step::E).take((x - cur) as usize));
    Ok(LatticePath { start, steps })
}

/// Reads the parts off a path, largest first. Zero parts are dropped.
fn path_entries(path: &LatticePath) -> Vec<Entry> {
    let mut out = Vec::new();
    let mut x = 0u32;
    for s in &path.steps {
        match s {
            Step::E => x += 1,
            Step::N => {
                if x > 0 {
                    out.push(Entry::plain(x));
                }
            }
            Step::NE => {
                x += 1;
                out.push(Entry::over(x));
            }
        }
    }
    out.reverse();
    out
}

pub fn path_to_overpartition(path: &LatticePath) -> Result<Overpartition, PathError> {
    Overpartition::new(path_entries(path)).map_err(|v| PathError::Invalid(format!("{v:?}")))
}

/// Start `(0, λ_1 - λ_i + i - 1)` and end `(x, λ_1 + i - 1)` of the path of row `i`.
pub fn row_endpoints(shape: &Partition, i: usize, x: u32) -> ((i64, i64), (i64, i64)) {
    let l1 = shape.part(1) as i64;
    let li = shape.part(i) as i64;
    ((0, l1 - li + i as i64 - 1), (x as i64, l1 + i as i64 - 1))
}

/// One path per row of `Π`, row `i` shifted up so it starts at
/// `(0, λ_1 - λ_i + i - 1)`.
pub fn pop_to_paths(pop: &PlaneOverpartition, x: u32) -> Result<Vec<LatticePath>, PathError> {
    let shape = pop.shape();
    pop.rows()
        .iter()
        .enumerate()
        .map(|(i0, row)| {
            let (start, _) = row_endpoints(&shape, i0 + 1, x);
            row_path(row, row.len(), x, start)
        })
        .collect()
}

/// Inverse of [`pop_to_paths`]. Paths must be vertex-disjoint.
pub fn paths_to_pop(paths: &[LatticePath]) -> Result<PlaneOverpartition, PathError> {
    let mut seen: std::collections::HashMap<(i64, i64), usize> = Default::default();
    for (k, p) in paths.iter().enumerate() {
        let vs: HashSet<_> = p.vertices().into_iter().collect();
        for v in vs {
            if let Some(&other) = seen.get(&v) {
                return Err(PathError::Intersecting(other, k, v));
            }
            seen.insert(v, k);
        }
    }
    let rows: Vec<Vec<Entry>> = paths.iter().map(path_entries).collect();
    let pop = PlaneOverpartition::new(rows.into_iter().filter(|r| !r.is_empty()).collect())
        .map_err(|v| PathError::Invalid(format!("{v:?}")))?;
    let shape = pop.shape();
    for (i0, p) in paths.iter().enumerate().take(shape.len()) {
        let (start, end) = row_endpoints(&shape, i0 + 1, (p.end().0) as u32);
        if p.start != start || p.end() != end {
            return Err(PathError::WrongEnd(end.0, end.1));
        }
    }
    Ok(pop)
}
