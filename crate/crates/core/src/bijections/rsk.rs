//! Insertion of overlined and plain letters into plane overpartitions, and
//! the correspondence between block matrices and pairs of plane
//! overpartitions of the same shape.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partition::Entry;
use crate::plane::PlaneOverpartition;
use crate::validate::Validate;

/// `M = [[A, B], [C, D]]` with `A, D` nonnegative and `B, C` in `{0, 1}`,
/// each `n × n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BlockMatrix {
    pub n: usize,
    pub a: Vec<Vec<u32>>,
    pub b: Vec<Vec<u32>>,
    pub c: Vec<Vec<u32>>,
    pub d: Vec<Vec<u32>>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RskError {
    #[error("block {0} is not {1}x{1}")]
    BadDimensions(&'static str, usize),
    #[error("block {0} has an entry other than 0 or 1")]
    NotBinary(&'static str),
    #[error("P and Q have different shapes")]
    ShapeMismatch,
    #[error("entry {0} exceeds the matrix size {1}")]
    EntryTooLarge(u32, usize),
    #[error("not a plane overpartition: {0}")]
    Invalid(String),
    #[error("pair of tableaux is not in the image of insertion")]
    NotAnImage,
}

impl BlockMatrix {
    pub fn zero(n: usize) -> Self {
        let z = vec![vec![0; n]; n];
        Self {
            n,
            a: z.clone(),
            b: z.clone(),
            c: z.clone(),
            d: z,
        }
    }

    /// Splits a `2n × 2n` matrix into its four blocks.
    pub fn from_full(m: &[Vec<u32>]) -> Result<Self, RskError> {
        let size = m.len();
        if size % 2 != 0 || m.iter().any(|r| r.len() != size) {
            return Err(RskError::BadDimensions("M", size));
        }
        let n = size / 2;
        let block = |r0: usize, c0: usize| -> Vec<Vec<u32>> {
            (0..n).map(|i| m[r0 + i][c0..c0 + n].to_vec()).collect()
        };
        let out = Self {
            n,
            a: block(0, 0),
            b: block(0, n),
            c: block(n, 0),
            d: block(n, n),
        };
        out.check()?;
        Ok(out)
    }

    pub fn to_full(&self) -> Vec<Vec<u32>> {
        let n = self.n;
        let mut m = vec![vec![0; 2 * n]; 2 * n];
        for i in 0..n {
            for j in 0..n {
                m[i][j] = self.a[i][j];
                m[i][n + j] = self.b[i][j];
                m[n + i][j] = self.c[i][j];
                m[n + i][n + j] = self.d[i][j];
            }
        }
        m
    }

    pub fn check(&self) -> Result<(), RskError> {
        for (name, blk) in [
            ("A", &self.a),
            ("B", &self.b),
            ("C", &self.c),
            ("D", &self.d),
        ] {
            if blk.len() != self.n || blk.iter().any(|r| r.len() != self.n) {
                return Err(RskError::BadDimensions(name, self.n));
            }
        }
        for (name, blk) in [("B", &self.b), ("C", &self.c)] {
            if blk.iter().flatten().any(|&v| v > 1) {
                return Err(RskError::NotBinary(name));
            }
        }
        Ok(())
    }

    pub fn transpose(&self) -> Self {
        let t = |m: &Vec<Vec<u32>>| -> Vec<Vec<u32>> {
            (0..self.n)
                .map(|i| (0..self.n).map(|j| m[j][i]).collect())
                .collect()
        };
        Self {
            n: self.n,
            a: t(&self.a),
            b: t(&self.c),
            c: t(&self.b),
            d: t(&self.d),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self == &self.transpose()
    }

    /// Pairs `(i, j)` from `A`, `(i, j̄)` from `B`, `(ī, j)` from `C` and
    /// `(ī, j̄)` from `D`, with multiplicity.
    pub fn pairs(&self) -> Vec<(Entry, Entry)> {
        let mut out = Vec::new();
        for (blk, top_over, bot_over) in [
            (&self.a, false, false),
            (&self.b, false, true),
            (&self.c, true, false),
            (&self.d, true, true),
        ] {
            for i in 0..self.n {
                for j in 0..self.n {
                    for _ in 0..blk[i][j] {
                        out.push((
                            Entry {
                                value: i as u32 + 1,
                                overlined: top_over,
                            },
                            Entry {
                                value: j as u32 + 1,
                                overlined: bot_over,
                            },
                        ));
                    }
                }
            }
        }
        out
    }

    /// `Σ |entries|` of the bottom line, the weight of `P`.
    pub fn bottom_weight(&self) -> u64 {
        self.pairs().iter().map(|(_, b)| b.value as u64).sum()
    }
}

/// The sorted two-line array: tops weakly decreasing in `1̄ < 1 < 2̄ < …`;
/// below equal tops, bottoms weakly increasing under an overlined top and
/// weakly decreasing under a plain one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoLineArray {
    pub pairs: Vec<(Entry, Entry)>,
}

impl TwoLineArray {
    pub fn from_matrix(m: &BlockMatrix) -> Self {
        let mut pairs = m.pairs();
        pairs.sort_by(|(t1, b1), (t2, b2)| {
            t2.cmp(t1)
                .then_with(|| if t1.overlined { b1.cmp(b2) } else { b2.cmp(b1) })
        });
        Self { pairs }
    }

    pub fn to_matrix(&self, n: usize) -> Result<BlockMatrix, RskError> {
        let mut m = BlockMatrix::zero(n);
        for (t, b) in &self.pairs {
            for e in [t, b] {
                if e.value == 0 || e.value as usize > n {
                    return Err(RskError::EntryTooLarge(e.value, n));
                }
            }
            let (i, j) = (t.value as usize - 1, b.value as usize - 1);
            let blk = match (t.overlined, b.overlined) {
                (false, false) => &mut m.a,
                (false, true) => &mut m.b,
                (true, false) => &mut m.c,
                (true, true) => &mut m.d,
            };
            blk[i][j] += 1;
        }
        m.check()?;
        Ok(m)
    }
}

/// True if `row` is a valid overpartition row: weakly decreasing, with an
/// overlined value never repeated.
fn row_ok(row: &[Entry]) -> bool {
    row.windows(2)
        .all(|w| w[0] > w[1] || (w[0] == w[1] && !w[0].overlined))
}

/// Inserts `j` into one row. Appends when possible; otherwise replaces the
/// smallest part whose replacement leaves a valid row (rightmost among
/// equals) and returns it.
pub fn insert_into_row(row: &mut Vec<Entry>, j: Entry) -> Option<Entry> {
    row.push(j);
    if row_ok(row) {
        return None;
    }
    row.pop();
    let mut best: Option<usize> = None;
    for p in 0..row.len() {
        let old = row[p];
        row[p] = j;
        let ok = row_ok(row);
        row[p] = old;
        if ok && best.map_or(true, |b| old <= row[b]) {
            best = Some(p);
        }
    }
    let p = best.expect("a part can always be replaced");
    Some(std::mem::replace(&mut row[p], j))
}

/// Row insertion of `j` into `rows`; returns the `(row, column)` (0-based)
/// of the new cell.
pub fn insert(rows: &mut Vec<Vec<Entry>>, j: Entry) -> (usize, usize) {
    let mut carry = j;
    let mut r = 0;
    loop {
        if r == rows.len() {
            rows.push(Vec::new());
        }
        match insert_into_row(&mut rows[r], carry) {
            None => return (r, rows[r].len() - 1),
            Some(b) => {
                carry = b;
                r += 1;
            }
        }
    }
}

/// Inserts the two-line array of `M` left to right, recording tops in `Q`.
pub fn rsk_forward(m: &BlockMatrix) -> Result<(PlaneOverpartition, PlaneOverpartition), RskError> {
    m.check()?;
    let mut p: Vec<Vec<Entry>> = Vec::new();
    let mut q: Vec<Vec<Entry>> = Vec::new();
    for (top, bot) in TwoLineArray::from_matrix(m).pairs {
        let (r, c) = insert(&mut p, bot);
        if r == q.len() {
            q.push(Vec::new());
        }
        debug_assert_eq!(q[r].len(), c);
        q[r].push(top);
    }
    Ok((
        PlaneOverpartition::from_rows_unchecked(p),
        PlaneOverpartition::from_rows_unchecked(q),
    ))
}

/// Undoes one row insertion ending at the end of row `r`: removes that
/// cell and bumps back up through the rows above. Each step picks the part
/// that forward insertion would have displaced.
fn uninsert(rows: &[Vec<Entry>], r: usize) -> Option<(Vec<Vec<Entry>>, Entry)> {
    let mut rows = rows.to_vec();
    let mut carry = rows[r].pop()?;
    if rows[r].is_empty() {
        rows.pop();
    }
    for k in (0..r).rev() {
        let row = &rows[k];
        let mut found = None;
        for p in 0..row.len() {
            let mut before = row.clone();
            let y = before[p];
            before[p] = carry;
            if !row_ok(&before) {
                continue;
            }
            let mut trial = before.clone();
            if insert_into_row(&mut trial, y) == Some(carry) && trial == *row {
                found = Some((before, y));
                break;
            }
        }
        let (before, y) = found?;
        rows[k] = before;
        carry = y;
    }
    Some((rows, carry))
}

/// Inverse of [`rsk_forward`]. The last inserted pair sits in the cell of
/// `Q` holding the smallest top: rightmost among plain copies, lowest
/// among overlined copies. Every step is checked by reinserting.
pub fn rsk_inverse(
    p: &PlaneOverpartition,
    q: &PlaneOverpartition,
    n: usize,
) -> Result<BlockMatrix, RskError> {
    if p.shape() != q.shape() {
        return Err(RskError::ShapeMismatch);
    }
    for t in [p, q] {
        let v = t.violations();
        if !v.is_empty() {
            return Err(RskError::Invalid(format!("{v:?}")));
        }
        if t.largest() as usize > n {
            return Err(RskError::EntryTooLarge(t.largest(), n));
        }
    }
    let mut prows = p.rows().to_vec();
    let mut qrows = q.rows().to_vec();
    let mut pairs = Vec::new();
    while !qrows.is_empty() {
        let min = *qrows.iter().flatten().min().expect("nonempty");
        // corner cells of Q holding the smallest top
        let mut cands: Vec<usize> = (0..qrows.len())
            .filter(|&r| {
                qrows[r].last() == Some(&min)
                    && qrows
                        .get(r + 1)
                        .map_or(true, |nx| nx.len() < qrows[r].len())
            })
            .collect();
        if min.overlined {
            cands.sort_by_key(|&r| std::cmp::Reverse(r));
        } else {
            cands.sort_by_key(|&r| std::cmp::Reverse(qrows[r].len()));
        }
        let r = *cands.first().ok_or(RskError::NotAnImage)?;
        let (new_p, bot) = uninsert(&prows, r).ok_or(RskError::NotAnImage)?;
        let mut check = new_p.clone();
        if insert(&mut check, bot) != (r, prows[r].len() - 1) || check != prows {
            return Err(RskError::NotAnImage);
        }
        prows = new_p;
        qrows[r].pop();
        if qrows[r].is_empty() {
            qrows.pop();
        }
        pairs.push((min, bot));
    }
    pairs.reverse();
    let arr = TwoLineArray { pairs };
    let m = arr.to_matrix(n)?;
    if TwoLineArray::from_matrix(&m) != arr {
        return Err(RskError::NotAnImage);
    }
    Ok(m)
}

/// Occurrence counts `(#k in P, #k̄ in P, #k in Q, #k̄ in Q)` for `k = 1..n`.
pub fn occurrence_counts(
    p: &PlaneOverpartition,
    q: &PlaneOverpartition,
    n: usize,
) -> Vec<[u32; 4]> {
    let mut out = vec![[0u32; 4]; n];
    for (t, base) in [(p, 0), (q, 2)] {
        for e in t.rows().iter().flatten() {
            out[e.value as usize - 1][base + e.overlined as usize] += 1;
        }
    }
    out
}

/// The same counts read from the matrix: column sums of `A + C`, `B + D`
/// and row sums of `A + B`, `C + D`.
pub fn matrix_counts(m: &BlockMatrix) -> Vec<[u32; 4]> {
    (0..m.n)
        .map(|k| {
            let col = |x: &Vec<Vec<u32>>| (0..m.n).map(|i| x[i][k]).sum::<u32>();
            let row = |x: &Vec<Vec<u32>>| x[k].iter().sum::<u32>();
            [
                col(&m.a) + col(&m.c),
                col(&m.b) + col(&m.d),
                row(&m.a) + row(&m.b),
                row(&m.c) + row(&m.d),
            ]
        })
        .collect()
}

/// Every matrix in `M_n` with all entries of `A` and `D` at most `max`.
pub fn all_block_matrices(n: usize, max: u32) -> Vec<BlockMatrix> {
    let cells = 4 * n * n;
    let bound = |k: usize| -> u32 {
        let blk = k / (n * n);
        if blk == 1 || blk == 2 {
            1
        } else {
            max
        }
    };
    let mut out = Vec::new();
    let mut vals = vec![0u32; cells];
    loop {
        let mut m = BlockMatrix::zero(n);
        for (k, &v) in vals.iter().enumerate() {
            let (blk, i, j) = (k / (n * n), (k % (n * n)) / n, k % n);
            match blk {
                0 => m.a[i][j] = v,
                1 => m.b[i][j] = v,
                2 => m.c[i][j] = v,
                _ => m.d[i][j] = v,
            }
        }
        out.push(m);
        let mut k = 0;
        loop {
            if k == cells {
                return out;
            }
            if vals[k] < bound(k) {
                vals[k] += 1;
                break;
            }
            vals[k] = 0;
            k += 1;
        }
    }
}

/// Symmetric matrices in `M_n` whose `P` has weight at most `max_weight`.
pub fn symmetric_block_matrices(n: usize, max_weight: u64) -> Vec<BlockMatrix> {
    // free entries: a_ij, d_ij for i ≤ j; b_ij for all i, j (c = bᵀ)
    let mut slots: Vec<(u8, usize, usize, u64)> = Vec::new();
    for i in 0..n {
        for j in i..n {
            let w = if i == j {
                (i + 1) as u64
            } else {
                (i + j + 2) as u64
            };
            slots.push((0, i, j, w));
            slots.push((3, i, j, w));
        }
    }
    for i in 0..n {
        for j in 0..n {
            slots.push((1, i, j, (i + j + 2) as u64));
        }
    }
    let mut out = Vec::new();
    let mut m = BlockMatrix::zero(n);
    fn rec(
        k: usize,
        budget: u64,
        slots: &[(u8, usize, usize, u64)],
        m: &mut BlockMatrix,
        out: &mut Vec<BlockMatrix>,
    ) {
        if k == slots.len() {
            out.push(m.clone());
            return;
        }
        let (blk, i, j, w) = slots[k];
        let max = if blk == 1 { 1 } else { budget / w };
        for v in 0..=max {
            if v * w > budget {
                break;
            }
            set(m, blk, i, j, v as u32);
            rec(k + 1, budget - v * w, slots, m, out);
        }
        set(m, blk, i, j, 0);
    }
    fn set(m: &mut BlockMatrix, blk: u8, i: usize, j: usize, v: u32) {
        match blk {
            0 => {
                m.a[i][j] = v;
                m.a[j][i] = v;
            }
            3 => {
                m.d[i][j] = v;
                m.d[j][i] = v;
            }
            _ => {
                m.b[i][j] = v;
                m.c[j][i] = v;
            }
        }
    }
    rec(0, max_weight, &slots, &mut m, &mut out);
    out
}
