//! Plane partitions, plane overpartitions and their reverse variant.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::partition::{Entry, Partition};
use crate::validate::{Validate, Violation};

fn shape_of<T>(rows: &[Vec<T>]) -> Partition {
    Partition::new(rows.iter().map(|r| r.len() as u32).collect::<Vec<_>>())
}

fn row_length_violations<T>(rows: &[Vec<T>], out: &mut Vec<Violation>) {
    for (i, w) in rows.windows(2).enumerate() {
        if w[1].len() > w[0].len() {
            out.push(Violation::at_index(i + 2, "row longer than the row above"));
        }
    }
    for (i, r) in rows.iter().enumerate() {
        if r.is_empty() {
            out.push(Violation::at_index(i + 1, "empty row"));
        }
    }
}

/// Parses rows separated by `/`, entries by spaces or commas; `3'` is overlined.
pub fn parse_entry_rows(s: &str) -> Result<Vec<Vec<Entry>>, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split('/')
        .map(|row| {
            row.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(str::parse::<Entry>)
                .collect()
        })
        .collect()
}

fn fmt_rows<T: fmt::Display>(rows: &[Vec<T>], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    for (i, r) in rows.iter().enumerate() {
        if i > 0 {
            f.write_str("/")?;
        }
        for (j, e) in r.iter().enumerate() {
            if j > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
    }
    Ok(())
}

/// Every overline assignment compatible with the row-last and column-first
/// rules on a grid of values. Zero entries stay plain. Returns an empty list
/// when the rules conflict.
pub fn overline_assignments(values: &[Vec<u32>]) -> Vec<Vec<Vec<Entry>>> {
    let mut forced: Vec<Vec<Option<bool>>> = Vec::with_capacity(values.len());
    let mut free = Vec::new();
    for (i, row) in values.iter().enumerate() {
        let mut frow = Vec::with_capacity(row.len());
        for (j, &v) in row.iter().enumerate() {
            let right_eq = row.get(j + 1) == Some(&v);
            let up_eq = i > 0 && values[i - 1].get(j) == Some(&v);
            let f = if v == 0 {
                Some(false)
            } else {
                match (right_eq, up_eq) {
                    (true, true) => return Vec::new(),
                    (true, false) => Some(false),
                    (false, true) => Some(true),
                    (false, false) => None,
                }
            };
            if f.is_none() {
                free.push((i, j));
            }
            frow.push(f);
        }
        forced.push(frow);
    }
    let base: Vec<Vec<Entry>> = values
        .iter()
        .zip(&forced)
        .map(|(row, frow)| {
            row.iter()
                .zip(frow)
                .map(|(&v, f)| Entry {
                    value: v,
                    overlined: f.unwrap_or(false),
                })
                .collect()
        })
        .collect();
    let mut out = Vec::with_capacity(1 << free.len());
    for mask in 0u64..(1u64 << free.len()) {
        let mut g = base.clone();
        for (b, &(i, j)) in free.iter().enumerate() {
            g[i][j].overlined = mask >> b & 1 == 1;
        }
        out.push(g);
    }
    out
}

/// A filling with positive integers, weakly decreasing along rows and columns.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PlanePartition {
    rows: Vec<Vec<u32>>,
}

impl PlanePartition {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self, Vec<Violation>> {
        let p = Self { rows };
        let v = p.violations();
        if v.is_empty() {
            Ok(p)
        } else {
            Err(v)
        }
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<u32>>) -> Self {
        Self { rows }
    }

    /// Parses `"4 4 4 4/4 4 3/2 2"`.
    pub fn parse(s: &str) -> Result<Self, String> {
        let rows = parse_entry_rows(s)?
            .into_iter()
            .map(|r| r.into_iter().map(|e| e.value).collect())
            .collect();
        Self::new(rows).map_err(|v| format!("{v:?}"))
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        shape_of(&self.rows)
    }

    pub fn weight(&self) -> u64 {
        self.rows.iter().flatten().map(|&v| v as u64).sum()
    }

    /// Entry at 1-based `(i, j)`, zero outside the diagram.
    pub fn get(&self, i: usize, j: usize) -> u32 {
        if i == 0 || j == 0 {
            return 0;
        }
        self.rows
            .get(i - 1)
            .and_then(|r| r.get(j - 1))
            .copied()
            .unwrap_or(0)
    }

    pub fn is_diagonally_strict(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, r)| {
            r.iter()
                .enumerate()
                .all(|(j, &v)| self.get(i + 2, j + 2) < v)
        })
    }

    /// Strictly decreasing down every column.
    pub fn is_column_strict(&self) -> bool {
        self.rows
            .windows(2)
            .all(|w| w[1].iter().zip(&w[0]).all(|(b, a)| b < a))
    }

    pub fn transpose(&self) -> Self {
        let shape = self.shape().conjugate();
        let rows = (1..=shape.len())
            .map(|i| {
                (1..=shape.part(i) as usize)
                    .map(|j| self.get(j, i))
                    .collect()
            })
            .collect();
        Self { rows }
    }

    /// Entries on diagonal `x = j - i`, read from the top-left.
    pub fn diagonal(&self, x: i64) -> Vec<u32> {
        let mut out = Vec::new();
        let (mut i, mut j) = if x >= 0 {
            (1usize, 1 + x as usize)
        } else {
            (1 + (-x) as usize, 1usize)
        };
        loop {
            let v = self.get(i, j);
            if v == 0 {
                break;
            }
            out.push(v);
            i += 1;
            j += 1;
        }
        out
    }

    /// Partition formed by the entries on diagonal `x`.
    pub fn diagonal_partition(&self, x: i64) -> Partition {
        Partition::new(self.diagonal(x))
    }

    /// Every plane overpartition with this underlying plane partition.
    pub fn overline_expansions(&self) -> Vec<PlaneOverpartition> {
        overline_assignments(&self.rows)
            .into_iter()
            .map(|rows| PlaneOverpartition { rows })
            .collect()
    }
}

impl Validate for PlanePartition {
    fn violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        row_length_violations(&self.rows, &mut out);
        for (i0, r) in self.rows.iter().enumerate() {
            for (j0, &v) in r.iter().enumerate() {
                let (i, j) = (i0 + 1, j0 + 1);
                if v == 0 {
                    out.push(Violation::at_cell(i, j, "zero entry"));
                }
                if j0 + 1 < r.len() && r[j0 + 1] > v {
                    out.push(Violation::at_cell(
                        i,
                        j + 1,
                        "entry larger than its left neighbour",
                    ));
                }
                if i0 > 0 && self.rows[i0 - 1].get(j0).is_some_and(|&u| u < v) {
                    out.push(Violation::at_cell(
                        i,
                        j,
                        "entry larger than the entry above",
                    ));
                }
            }
        }
        out
    }
}

impl fmt::Display for PlanePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_rows(&self.rows, f)
    }
}

/// A plane partition with overlines: in each row only the last occurrence
/// of a value may be overlined, and in each column every occurrence of a
/// value after the first is overlined.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PlaneOverpartition {
    rows: Vec<Vec<Entry>>,
}

impl PlaneOverpartition {
    pub fn new(rows: Vec<Vec<Entry>>) -> Result<Self, Vec<Violation>> {
        let p = Self { rows };
        let v = p.violations();
        if v.is_empty() {
            Ok(p)
        } else {
            Err(v)
        }
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<Entry>>) -> Self {
        Self { rows }
    }

    /// Parses `"4 4 4' 3'/4' 3 3 3'/4' 3'"`.
    pub fn parse(s: &str) -> Result<Self, String> {
        Self::new(parse_entry_rows(s)?).map_err(|v| {
            v.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join("; ")
        })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn rows(&self) -> &[Vec<Entry>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        shape_of(&self.rows)
    }

    pub fn weight(&self) -> u64 {
        self.rows.iter().flatten().map(|e| e.value as u64).sum()
    }

    /// `o(Π)`.
    pub fn overlined_count(&self) -> u32 {
        self.rows.iter().flatten().filter(|e| e.overlined).count() as u32
    }

    pub fn largest(&self) -> u32 {
        self.rows
            .iter()
            .flatten()
            .map(|e| e.value)
            .max()
            .unwrap_or(0)
    }

    /// Entry at 1-based `(i, j)`, `None` outside the diagram.
    pub fn get(&self, i: usize, j: usize) -> Option<Entry> {
        if i == 0 || j == 0 {
            return None;
        }
        self.rows.get(i - 1).and_then(|r| r.get(j - 1)).copied()
    }

    pub fn underlying(&self) -> PlanePartition {
        PlanePartition {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|e| e.value).collect())
                .collect(),
        }
    }

    /// Row `i` (1-based) as an overpartition.
    pub fn row(&self, i: usize) -> &[Entry] {
        &self.rows[i - 1]
    }

    pub fn with_entry(&self, i: usize, j: usize, e: Entry) -> Self {
        let mut rows = self.rows.clone();
        rows[i - 1][j - 1] = e;
        Self { rows }
    }

    /// Drops cell `(i, j)`; it must be the last cell of its row and column.
    pub fn without_corner(&self, i: usize) -> Self {
        let mut rows = self.rows.clone();
        rows[i - 1].pop();
        if rows[i - 1].is_empty() {
            rows.remove(i - 1);
        }
        Self { rows }
    }

    pub fn with_cell_appended(&self, i: usize, e: Entry) -> Self {
        let mut rows = self.rows.clone();
        if i > rows.len() {
            rows.push(Vec::new());
        }
        rows[i - 1].push(e);
        Self { rows }
    }
}

impl Validate for PlaneOverpartition {
    fn violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        row_length_violations(&self.rows, &mut out);
        for (i0, r) in self.rows.iter().enumerate() {
            for (j0, e) in r.iter().enumerate() {
                let (i, j) = (i0 + 1, j0 + 1);
                let v = e.value;
                if v == 0 {
                    out.push(Violation::at_cell(i, j, "zero entry"));
                }
                if let Some(right) = r.get(j0 + 1) {
                    if right.value > v {
                        out.push(Violation::at_cell(
                            i,
                            j + 1,
                            "entry larger than its left neighbour",
                        ));
                    }
                    if right.value == v && e.overlined {
                        out.push(Violation::at_cell(
                            i,
                            j,
                            "overlined entry not last occurrence in row",
                        ));
                    }
                }
                if let Some(up) = self.get(i - 1, j) {
                    if up.value < v {
                        out.push(Violation::at_cell(
                            i,
                            j,
                            "entry larger than the entry above",
                        ));
                    }
                    if up.value == v && !e.overlined {
                        out.push(Violation::at_cell(
                            i,
                            j,
                            "repeated entry in column not overlined",
                        ));
                    }
                }
                if let Some(diag) = self.get(i + 1, j + 1) {
                    if diag.value >= v {
                        out.push(Violation::at_cell(
                            i + 1,
                            j + 1,
                            "diagonal not strictly decreasing",
                        ));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for PlaneOverpartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_rows(&self.rows, f)
    }
}

/// A filling of a fixed shape with nonnegative integers, weakly increasing
/// along rows and columns; positive entries carry overlines under the same
/// row-last and column-first rules.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ReversePlaneOverpartition {
    shape: Partition,
    cells: Vec<Vec<Entry>>,
}

impl ReversePlaneOverpartition {
    pub fn new(cells: Vec<Vec<Entry>>) -> Result<Self, Vec<Violation>> {
        let shape = Partition::try_new(cells.iter().map(|r| r.len() as u32).collect::<Vec<_>>())?;
        let p = Self { shape, cells };
        let v = p.violations();
        if v.is_empty() {
            Ok(p)
        } else {
            Err(v)
        }
    }

    pub(crate) fn from_cells_unchecked(cells: Vec<Vec<Entry>>) -> Self {
        let shape = shape_of(&cells);
        Self { shape, cells }
    }

    pub fn parse(s: &str) -> Result<Self, String> {
        Self::new(parse_entry_rows(s)?).map_err(|v| {
            v.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join("; ")
        })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn cells(&self) -> &[Vec<Entry>] {
        &self.cells
    }

    pub fn weight(&self) -> u64 {
        self.cells.iter().flatten().map(|e| e.value as u64).sum()
    }

    pub fn overlined_count(&self) -> u32 {
        self.cells.iter().flatten().filter(|e| e.overlined).count() as u32
    }

    pub fn get(&self, i: usize, j: usize) -> Option<Entry> {
        if i == 0 || j == 0 {
            return None;
        }
        self.cells.get(i - 1).and_then(|r| r.get(j - 1)).copied()
    }

    pub fn with_entry(&self, i: usize, j: usize, e: Entry) -> Self {
        let mut cells = self.cells.clone();
        cells[i - 1][j - 1] = e;
        Self {
            shape: self.shape.clone(),
            cells,
        }
    }
}

impl Validate for ReversePlaneOverpartition {
    fn violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if shape_of(&self.cells) != self.shape {
            out.push(Violation::at_index(0, "cells do not match the shape"));
        }
        for (i0, r) in self.cells.iter().enumerate() {
            for (j0, e) in r.iter().enumerate() {
                let (i, j) = (i0 + 1, j0 + 1);
                let v = e.value;
                if v == 0 && e.overlined {
                    out.push(Violation::at_cell(i, j, "zero entry overlined"));
                }
                if let Some(right) = r.get(j0 + 1) {
                    if right.value < v {
                        out.push(Violation::at_cell(
                            i,
                            j + 1,
                            "entry smaller than its left neighbour",
                        ));
                    }
                    if right.value == v && e.overlined {
                        out.push(Violation::at_cell(
                            i,
                            j,
                            "overlined entry not last occurrence in row",
                        ));
                    }
                }
                if i0 > 0 {
                    if let Some(up) = self.get(i - 1, j) {
                        if up.value > v {
                            out.push(Violation::at_cell(
                                i,
                                j,
                                "entry smaller than the entry above",
                            ));
                        }
                        if v > 0 && up.value == v && !e.overlined {
                            out.push(Violation::at_cell(
                                i,
                                j,
                                "repeated entry in column not overlined",
                            ));
                        }
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for ReversePlaneOverpartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_rows(&self.cells, f)
    }
}
