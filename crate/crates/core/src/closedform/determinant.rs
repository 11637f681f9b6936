//! The matrices `M_λ(a; q)` with entries `(-a)_m / (q)_m`, `m = λ_j + i - j`,
//! and their determinants.

use crate::coeff::CoeffPoly;
use crate::partition::Partition;
use crate::series::{geometric, TruncSeries};

/// `(-a q^s)_m / (q)_m`; zero for negative `m`.
fn entry(m: i64, s: i64, order: i64) -> TruncSeries {
    if m < 0 {
        return TruncSeries::zero(order);
    }
    let mut acc = TruncSeries::pochhammer(&-&CoeffPoly::a(), s, Some(m as u32), order);
    for k in 1..=m.min(order) {
        acc = &acc * &geometric(&CoeffPoly::one(), k, order);
    }
    acc
}

/// Determinant by expansion along rows, memoised over the set of used
/// columns. No division is needed, so it works over any commutative ring.
pub fn det_series(matrix: &[Vec<TruncSeries>], order: i64) -> TruncSeries {
    let n = matrix.len();
    assert!(n <= 20, "matrix too large for subset expansion");
    // dp[mask] = signed sum over ways to fill rows 0..|mask| with columns in mask
    let mut dp: Vec<Option<TruncSeries>> = vec![None; 1 << n];
    dp[0] = Some(TruncSeries::one(order));
    for mask in 0usize..(1 << n) {
        let Some(cur) = dp[mask].take() else { continue };
        let row = mask.count_ones() as usize;
        if row == n {
            dp[mask] = Some(cur);
            continue;
        }
        for col in 0..n {
            if mask & (1 << col) != 0 || matrix[row][col].is_zero() {
                continue;
            }
            // sign of placing `col` after the columns already used above it
            let inversions = (mask >> col).count_ones();
            let term = &cur * &matrix[row][col];
            let term = if inversions % 2 == 1 { -&term } else { term };
            let slot = &mut dp[mask | (1 << col)];
            *slot = Some(match slot.take() {
                Some(s) => &s + &term,
                None => term,
            });
        }
        dp[mask] = Some(cur);
    }
    dp[(1 << n) - 1]
        .clone()
        .unwrap_or_else(|| TruncSeries::zero(order))
        .truncate(order)
}

/// `M_λ(a q^s; q)` for an arbitrary weakly decreasing tuple, zeros allowed.
pub fn m_matrix(parts: &[u32], shifted: bool, order: i64) -> Vec<Vec<TruncSeries>> {
    let s = shifted as i64;
    let n = parts.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| entry(parts[j] as i64 + i as i64 - j as i64, s, order))
                .collect()
        })
        .collect()
}

/// `det M_λ(aq; q)` (shifted) or `det M_λ(a; q)`.
pub fn det_m(lambda: &Partition, shifted: bool, order: i64) -> TruncSeries {
    det_m_tuple(lambda.parts(), shifted, order)
}

pub fn det_m_tuple(parts: &[u32], shifted: bool, order: i64) -> TruncSeries {
    det_series(&m_matrix(parts, shifted, order), order)
}

/// Plane overpartitions with at most `r` rows and `c` columns, as a sum of
/// `det M(aq; q)` over tuples `(c, μ_1, μ_1, …, μ_k, μ_k)` (odd `r`) or
/// `(μ_1, μ_1, …, μ_k, μ_k)` (even `r`) with `c ≥ μ_1 ≥ … ≥ μ_k ≥ 0`.
pub fn gf_box_det_sum(rows: u32, cols: u32, order: i64) -> TruncSeries {
    let k = (rows / 2) as usize;
    let mut acc = TruncSeries::zero(order);
    for mu in Partition::all_in_box(k as u32, cols) {
        let mut tuple = Vec::with_capacity(rows as usize);
        if rows % 2 == 1 {
            tuple.push(cols);
        }
        for i in 1..=k {
            let p = mu.part(i);
            tuple.push(p);
            tuple.push(p);
        }
        acc = &acc + &det_m_tuple(&tuple, true, order);
    }
    acc
}
