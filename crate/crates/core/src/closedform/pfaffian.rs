//! The series `W(r_1, …, r_ℓ)` attached to strictly decreasing tuples.
//!
//! `W(s) = (-q)_s / (q)_s`, `W(r, s) = W(r) W(s) (1 - q^{r-s}) / (1 + q^{r-s})`,
//! and longer tuples are Pfaffians of the matrix of pairwise values.

use thiserror::Error;

use crate::coeff::CoeffPoly;
use crate::partition::Partition;
use crate::series::{geometric, TruncSeries};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WError {
    #[error("tuple {0:?} is not strictly decreasing")]
    NotStrictlyDecreasing(Vec<u32>),
}

fn check(rs: &[u32]) -> Result<(), WError> {
    if rs.windows(2).all(|w| w[0] > w[1]) {
        Ok(())
    } else {
        Err(WError::NotStrictlyDecreasing(rs.to_vec()))
    }
}

/// `W(s) = (-q)_s / (q)_s`.
pub fn w_single(s: u32, order: i64) -> TruncSeries {
    let mut acc = TruncSeries::pochhammer(&-&CoeffPoly::one(), 1, Some(s), order);
    for k in 1..=(s as i64).min(order) {
        acc = &acc * &geometric(&CoeffPoly::one(), k, order);
    }
    acc
}

/// `(1 - q^d) / (1 + q^d)`.
fn pair_factor(d: i64, order: i64) -> TruncSeries {
    &TruncSeries::binomial(&-&CoeffPoly::one(), d, order)
        * &geometric(&-&CoeffPoly::one(), d, order)
}

/// `W(r, s)` for `r > s ≥ 0`.
pub fn w_pair(r: u32, s: u32, order: i64) -> TruncSeries {
    assert!(r > s, "W(r, s) needs r > s");
    let base = &w_single(r, order) * &w_single(s, order);
    let d = (r - s) as i64;
    if d > order {
        return base;
    }
    &base * &pair_factor(d, order)
}

/// Pfaffian of a skew-symmetric matrix of even size, summing over perfect
/// matchings by expansion along the first row.
pub fn pfaffian(matrix: &[Vec<TruncSeries>], order: i64) -> TruncSeries {
    let n = matrix.len();
    assert!(n % 2 == 0, "Pfaffian needs an even-sized matrix");
    let idx: Vec<usize> = (0..n).collect();
    pf_rec(matrix, &idx, order)
}

fn pf_rec(m: &[Vec<TruncSeries>], idx: &[usize], order: i64) -> TruncSeries {
    if idx.is_empty() {
        return TruncSeries::one(order);
    }
    let first = idx[0];
    let mut acc = TruncSeries::zero(order);
    for k in 1..idx.len() {
        let entry = &m[first][idx[k]];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = idx[1..]
            .iter()
            .enumerate()
            .filter(|&(p, _)| p + 1 != k)
            .map(|(_, &v)| v)
            .collect();
        let term = entry * &pf_rec(m, &rest, order);
        acc = if k % 2 == 1 {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    acc
}

/// The skew matrix with entries `W(r_i, r_j)` above the diagonal, bordered
/// by the column `W(r_i)` when `ℓ` is odd.
pub fn w_matrix(rs: &[u32], order: i64) -> Vec<Vec<TruncSeries>> {
    let l = rs.len();
    let n = l + l % 2;
    let mut m = vec![vec![TruncSeries::zero(order); n]; n];
    for i in 0..l {
        for j in i + 1..l {
            let w = w_pair(rs[i], rs[j], order);
            m[j][i] = -&w;
            m[i][j] = w;
        }
        if l % 2 == 1 {
            let w = w_single(rs[i], order);
            m[l][i] = -&w;
            m[i][l] = w;
        }
    }
    m
}

/// `W(r_1, …, r_ℓ)` through the Pfaffian of [`w_matrix`], for any length.
pub fn w_pfaffian(rs: &[u32], order: i64) -> Result<TruncSeries, WError> {
    check(rs)?;
    Ok(pfaffian(&w_matrix(rs, order), order))
}

/// `W(r_1, …, r_ℓ)`: closed forms for `ℓ ≤ 2`, the Pfaffian beyond.
pub fn w_gf(rs: &[u32], order: i64) -> Result<TruncSeries, WError> {
    check(rs)?;
    Ok(match rs {
        [] => TruncSeries::one(order),
        [s] => w_single(*s, order),
        [r, s] => w_pair(*r, *s, order),
        _ => pfaffian(&w_matrix(rs, order), order),
    })
}

/// `∏_i W(r_i) ∏_{i<j} (1 - q^{r_i - r_j}) / (1 + q^{r_i - r_j})`, the
/// factored value of the same Pfaffian.
pub fn w_product(rs: &[u32], order: i64) -> Result<TruncSeries, WError> {
    check(rs)?;
    let mut acc = TruncSeries::one(order);
    for (i, &r) in rs.iter().enumerate() {
        acc = &acc * &w_single(r, order);
        for &s in &rs[i + 1..] {
            let d = (r - s) as i64;
            if d <= order {
                acc = &acc * &pair_factor(d, order);
            }
        }
    }
    Ok(acc)
}

/// `(λ_1 + ℓ - 1, λ_2 + ℓ - 2, …, λ_ℓ)`, the tuple whose `W` is the
/// generating function of reverse plane overpartitions of shape `λ`.
pub fn shape_tuple(lambda: &Partition) -> Vec<u32> {
    let l = lambda.len() as u32;
    lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + l - 1 - i as u32)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::from_integers;

    const N: i64 = 10;

    #[test]
    fn w_zero_is_one() {
        assert_eq!(w_single(0, N), TruncSeries::one(N));
    }

    #[test]
    fn w_one() {
        let expected =
            &TruncSeries::binomial(&CoeffPoly::one(), 1, N) * &geometric(&CoeffPoly::one(), 1, N);
        assert_eq!(w_single(1, N), expected);
    }

    #[test]
    fn w_two_one_cancels() {
        // W(2) W(1) (1-q)/(1+q) = W(2)
        assert_eq!(w_pair(2, 1, N), w_single(2, N));
    }

    #[test]
    fn rejects_non_decreasing() {
        assert!(w_gf(&[1, 1], N).is_err());
        assert!(w_gf(&[1, 2], N).is_err());
    }

    #[test]
    fn pfaffian_of_four_by_four() {
        let s = |k: i64| from_integers(N, &[k]);
        let m = vec![
            vec![s(0), s(1), s(2), s(3)],
            vec![s(-1), s(0), s(4), s(5)],
            vec![s(-2), s(-4), s(0), s(6)],
            vec![s(-3), s(-5), s(-6), s(0)],
        ];
        // 1·6 - 2·5 + 3·4
        assert_eq!(pfaffian(&m, N), s(8));
    }
}
