//! Super semistandard tableaux turned into plane overpartitions by sliding
//! plain entries, and a sign-reversing involution on reverse plane
//! overpartitions.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partition::{Entry, Partition};
use crate::plane::{parse_entry_rows, PlaneOverpartition, ReversePlaneOverpartition};

/// A filling over the alphabet `1 < 2 < … < 1̄ < 2̄ < …`: the plain entries
/// occupy an inner shape `ν` and increase weakly along rows, strictly down
/// columns; the overlined entries fill `λ/ν`, strictly along rows and
/// weakly down columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SuperTableau {
    rows: Vec<Vec<Entry>>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SuperTableauError {
    #[error("rows do not form a partition shape")]
    BadShape,
    #[error("plain entries do not form a partition shape")]
    BadInnerShape,
    #[error("zero entry at ({0}, {1})")]
    Zero(usize, usize),
    #[error("row condition fails at ({0}, {1})")]
    Row(usize, usize),
    #[error("column condition fails at ({0}, {1})")]
    Column(usize, usize),
    #[error("entry {0} exceeds its bound")]
    TooLarge(Entry),
    #[error("sliding produced an invalid plane overpartition: {0}")]
    Output(String),
}

/// `x < y` in the super alphabet.
fn super_lt(x: Entry, y: Entry) -> bool {
    (x.overlined, x.value) < (y.overlined, y.value)
}

impl SuperTableau {
    pub fn new(rows: Vec<Vec<Entry>>) -> Result<Self, SuperTableauError> {
        let t = Self { rows };
        t.check()?;
        Ok(t)
    }

    /// Parses `"1 3 2'/2 1'"`.
    pub fn parse(s: &str) -> Result<Self, String> {
        Self::new(parse_entry_rows(s)?).map_err(|e| e.to_string())
    }

    pub fn rows(&self) -> &[Vec<Entry>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len() as u32).collect::<Vec<_>>())
    }

    pub fn inner_shape(&self) -> Partition {
        Partition::new(
            self.rows
                .iter()
                .map(|r| r.iter().filter(|e| !e.overlined).count() as u32)
                .filter(|&c| c > 0)
                .collect::<Vec<_>>(),
        )
    }

    pub fn weight(&self) -> u64 {
        self.rows.iter().flatten().map(|e| e.value as u64).sum()
    }

    pub fn overlined_count(&self) -> u32 {
        self.rows.iter().flatten().filter(|e| e.overlined).count() as u32
    }

    fn check(&self) -> Result<(), SuperTableauError> {
        let rows = &self.rows;
        if rows.iter().any(Vec::is_empty) || rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(SuperTableauError::BadShape);
        }
        let inner: Vec<usize> = rows
            .iter()
            .map(|r| r.iter().filter(|e| !e.overlined).count())
            .collect();
        if inner.windows(2).any(|w| w[0] < w[1]) {
            return Err(SuperTableauError::BadInnerShape);
        }
        for (i, r) in rows.iter().enumerate() {
            for (j, &e) in r.iter().enumerate() {
                if e.value == 0 {
                    return Err(SuperTableauError::Zero(i + 1, j + 1));
                }
                if j > 0 {
                    let left = r[j - 1];
                    let ok = if e.overlined {
                        super_lt(left, e)
                    } else {
                        !super_lt(e, left)
                    };
                    if !ok {
                        return Err(SuperTableauError::Row(i + 1, j + 1));
                    }
                }
                if let Some(&up) = i.checked_sub(1).and_then(|k| rows[k].get(j)) {
                    let ok = if e.overlined {
                        !super_lt(e, up)
                    } else {
                        super_lt(up, e)
                    };
                    if !ok {
                        return Err(SuperTableauError::Column(i + 1, j + 1));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Relabels `a ↦ k + 1 - a`, `ā ↦ (ℓ + 1 - a)‾`, then repeatedly takes the
/// smallest active plain part (rightmost on ties) and swaps it with the
/// larger of its east and south neighbours (east on ties) until it is at
/// least both; cells outside the shape count as `0`.
pub fn super_to_pop(
    t: &SuperTableau,
    k: u32,
    l: u32,
) -> Result<PlaneOverpartition, SuperTableauError> {
    let mut grid: Vec<Vec<Entry>> = Vec::with_capacity(t.rows.len());
    let mut active: Vec<Vec<bool>> = Vec::with_capacity(t.rows.len());
    for r in &t.rows {
        let mut row = Vec::with_capacity(r.len());
        for &e in r {
            let bound = if e.overlined { l } else { k };
            if e.value > bound {
                return Err(SuperTableauError::TooLarge(e));
            }
            row.push(Entry {
                value: bound + 1 - e.value,
                overlined: e.overlined,
            });
        }
        active.push(r.iter().map(|e| !e.overlined).collect());
        grid.push(row);
    }
    let at = |g: &Vec<Vec<Entry>>, i: usize, j: usize| -> Option<Entry> {
        g.get(i).and_then(|r| r.get(j)).copied()
    };
    let zero = Entry::plain(0);
    loop {
        let mut pick: Option<(usize, usize)> = None;
        for (i, row) in active.iter().enumerate() {
            for (j, &on) in row.iter().enumerate() {
                if !on {
                    continue;
                }
                let better = match pick {
                    None => true,
                    Some((pi, pj)) => {
                        let (e, p) = (grid[i][j], grid[pi][pj]);
                        e < p || (e == p && (j > pj || (j == pj && i > pi)))
                    }
                };
                if better {
                    pick = Some((i, j));
                }
            }
        }
        let Some((mut i, mut j)) = pick else { break };
        active[i][j] = false;
        loop {
            let cur = grid[i][j];
            let east = at(&grid, i, j + 1).unwrap_or(zero);
            let south = at(&grid, i + 1, j).unwrap_or(zero);
            if cur >= east && cur >= south {
                break;
            }
            let (ni, nj) = if east >= south {
                (i, j + 1)
            } else {
                (i + 1, j)
            };
            grid[i][j] = grid[ni][nj];
            grid[ni][nj] = cur;
            let moved = active[ni][nj];
            active[i][j] = moved;
            active[ni][nj] = false;
            (i, j) = (ni, nj);
        }
    }
    PlaneOverpartition::new(grid).map_err(|v| SuperTableauError::Output(format!("{v:?}")))
}

/// Toggles the overline of the rightmost part `> n` in the uppermost row
/// that has one; fillings with every part `≤ n` are fixed.
pub fn stanley_involution(r: &ReversePlaneOverpartition, n: u32) -> ReversePlaneOverpartition {
    for (i, row) in r.cells().iter().enumerate() {
        if let Some(j) = row.iter().rposition(|e| e.value > n) {
            return r.with_entry(i + 1, j + 1, row[j].toggled());
        }
    }
    r.clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_tableau() {
        let t = SuperTableau::parse("1 3 4 5 5 2' 4'/2 4 5 1' 2' 3' 4'/3 5 2' 3' 4'/4 1' 3'/3'")
            .unwrap();
        assert_eq!(t.inner_shape(), Partition::new(vec![5, 3, 2, 1]));
        let pop = super_to_pop(&t, 5, 4).unwrap();
        // the printed grid shows row 4 as 2̄ 2 1, which is not a valid row;
        // the stated order 2̄ < 2 stops the sliding 2 in front of 2̄
        let expected =
            PlaneOverpartition::parse("5 4' 3 3' 2 2' 1'/4 4' 3' 2' 1 1 1'/3 3' 2 1 1'/2 2' 1/2'")
                .unwrap();
        assert_eq!(
            pop.row(1),
            PlaneOverpartition::parse("5 4' 3 3' 2 2' 1'")
                .unwrap()
                .row(1)
        );
        assert_eq!(pop, expected);
    }

    #[test]
    fn empty_tableau() {
        let t = SuperTableau::new(Vec::new()).unwrap();
        assert_eq!(super_to_pop(&t, 3, 3).unwrap(), PlaneOverpartition::empty());
    }

    #[test]
    fn rejects_invalid_tableaux() {
        assert!(SuperTableau::parse("2 1").is_err());
        assert!(SuperTableau::parse("1' 1").is_err());
        assert!(SuperTableau::parse("1' 1'").is_err());
        assert!(SuperTableau::parse("1/1").is_err());
        assert!(SuperTableau::parse("1'/1'").is_ok());
        let t = SuperTableau::parse("3").unwrap();
        assert!(matches!(
            super_to_pop(&t, 2, 2),
            Err(SuperTableauError::TooLarge(_))
        ));
    }

    #[test]
    fn involution_examples() {
        let r = ReversePlaneOverpartition::parse("1 2/2").unwrap();
        assert_eq!(stanley_involution(&r, 2), r);
        let single = ReversePlaneOverpartition::parse("3").unwrap();
        assert_eq!(
            stanley_involution(&single, 2),
            ReversePlaneOverpartition::parse("3'").unwrap()
        );
    }
}
