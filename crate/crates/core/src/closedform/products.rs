//! Infinite and finite q-products, truncated at a fixed order.

use std::collections::BTreeSet;

use crate::coeff::CoeffPoly;
use crate::interlacing::Profile;
use crate::partition::Partition;
use crate::series::{geometric, SeriesError, TruncSeries};

fn neg_t() -> CoeffPoly {
    -&CoeffPoly::t()
}

/// `(1 - t q^e) / (1 - q^e)`.
fn t_ratio(e: i64, order: i64) -> TruncSeries {
    &TruncSeries::binomial(&neg_t(), e, order) * &geometric(&CoeffPoly::one(), e, order)
}

/// `(q)_n`, or `(q)_∞` up to `order` when `n` is `None`.
fn q_poch(n: Option<u32>, order: i64) -> TruncSeries {
    TruncSeries::pochhammer(&CoeffPoly::one(), 1, n, order)
}

/// `1 / (q)_n` as a product of geometric series.
fn inv_q_poch(n: u32, order: i64) -> TruncSeries {
    let mut acc = TruncSeries::one(order);
    for i in 1..=n as i64 {
        if i > order {
            break;
        }
        acc = &acc * &geometric(&CoeffPoly::one(), i, order);
    }
    acc
}

/// Overpartitions with at most `k` parts, `(-aq)_k / (q)_k`; with
/// `exact` set, exactly `k` parts, `q^k (-a)_k / (q)_k`.
pub fn gf_overpartitions(k: u32, exact: bool, order: i64) -> TruncSeries {
    let den = inv_q_poch(k, order);
    if exact {
        let num = TruncSeries::pochhammer(&-&CoeffPoly::a(), 0, Some(k), order);
        (&num * &den).shift(k as i64).truncate(order)
    } else {
        let num = TruncSeries::pochhammer(&-&CoeffPoly::a(), 1, Some(k), order);
        &num * &den
    }
}

/// `∏_{i≤r, j≤c} (1 - t q^{i+j-1}) / (1 - q^{i+j-1})`.
pub fn gf_box_t(rows: u32, cols: u32, order: i64) -> TruncSeries {
    let mut acc = TruncSeries::one(order);
    for i in 1..=rows as i64 {
        for j in 1..=cols as i64 {
            let e = i + j - 1;
            if e <= order {
                acc = &acc * &t_ratio(e, order);
            }
        }
    }
    acc
}

/// Plane overpartitions in an `r × c` box: the `t = -1` case of [`gf_box_t`].
pub fn gf_box(rows: u32, cols: u32, order: i64) -> TruncSeries {
    gf_box_t(rows, cols, order).eval_t(-1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HookVariant {
    /// Every plane overpartition of the given shape.
    Shape,
    /// Plane overpartitions whose shape is bounded by the given one.
    Bounded,
}

/// Hook–content product for plane overpartitions of shape `λ`
/// (`Shape`) or with `i`-th row at most `λ_i` (`Bounded`).
pub fn gf_hook_content(
    lambda: &Partition,
    variant: HookVariant,
    order: i64,
) -> Result<TruncSeries, SeriesError> {
    let (shift, content_shift) = match variant {
        HookVariant::Shape => (
            lambda
                .parts()
                .iter()
                .enumerate()
                .map(|(i, &p)| (i as i64 + 1) * p as i64)
                .sum::<i64>(),
            0,
        ),
        HookVariant::Bounded => (lambda.n_statistic() as i64, 1),
    };
    // the numerator is a Laurent polynomial; multiply it out exactly first
    let mut num = TruncSeries::monomial(CoeffPoly::one(), shift, crate::series::EXACT);
    let mut hooks = Vec::new();
    for row in lambda.hooks_and_contents() {
        for (h, content) in row {
            num = &num
                * &TruncSeries::exact([
                    (0, CoeffPoly::one()),
                    (content + content_shift, CoeffPoly::a()),
                ]);
            hooks.push(h as i64);
        }
    }
    let num = num.ensure_laurent_free()?.truncate(order);
    let mut acc = num;
    for h in hooks {
        if h <= order {
            acc = &acc * &geometric(&CoeffPoly::one(), h, order);
        }
    }
    Ok(acc)
}

/// `∏_{(i,j)∈λ} (1 + q^{h_{ij}}) / (1 - q^{h_{ij}})`: reverse plane
/// overpartitions of shape `λ`.
pub fn gf_reverse_hook(lambda: &Partition, order: i64) -> TruncSeries {
    gf_skew_hook(lambda, order).eval_t(-1)
}

/// `∏_{(i,j)∈λ} (1 - t q^{h_{ij}}) / (1 - q^{h_{ij}})`.
pub fn gf_skew_hook(lambda: &Partition, order: i64) -> TruncSeries {
    let mut acc = TruncSeries::one(order);
    for row in lambda.hooks_and_contents() {
        for (h, _) in row {
            if (h as i64) <= order {
                acc = &acc * &t_ratio(h as i64, order);
            }
        }
    }
    acc
}

/// `∏_{(i,j)∈λ} 1 / (1 - q^{h_{ij}})`, the `t = 0` hook product for
/// reverse plane partitions.
pub fn gf_gansner(lambda: &Partition, order: i64) -> TruncSeries {
    gf_skew_hook(lambda, order).eval_t(0)
}

/// `∏_n ((1 - t q^n) / (1 - q^n))^n`: all plane partitions weighted by `A_Π(t)`.
pub fn gf_macmahon_t(order: i64) -> TruncSeries {
    let mut acc = TruncSeries::one(order);
    for n in 1..=order {
        acc = &acc * &t_ratio(n, order).pow(n as u32);
    }
    acc
}

/// `∏_i (1 + a q^i)^i / ((1 - q^i)^{⌈i/2⌉} (1 - a² q^i)^{⌊i/2⌋})`.
pub fn gf_all_weighted(order: i64) -> TruncSeries {
    let a = CoeffPoly::a();
    let a2 = &a * &a;
    let mut acc = TruncSeries::one(order);
    for i in 1..=order {
        let up = TruncSeries::binomial(&a, i, order).pow(i as u32);
        let d1 = geometric(&CoeffPoly::one(), i, order).pow(((i + 1) / 2) as u32);
        let d2 = geometric(&a2, i, order).pow((i / 2) as u32);
        acc = &(&(&acc * &up) * &d1) * &d2;
    }
    acc
}

/// Plane overpartitions with all entries at most `n`.
pub fn gf_max_entry(n: u32, order: i64) -> TruncSeries {
    let a = CoeffPoly::a();
    let a2 = &a * &a;
    let n = n as i64;
    let mut acc = TruncSeries::one(order);
    for j in 1..=n {
        for i in 0..=n {
            if i + j <= order {
                acc = &acc * &TruncSeries::binomial(&a, i + j, order);
            }
        }
        for i in 1..=j {
            if i + j - 1 <= order {
                acc = &acc * &geometric(&CoeffPoly::one(), i + j - 1, order);
            }
            if i + j <= order {
                acc = &acc * &geometric(&a2, i + j, order);
            }
        }
    }
    acc
}

/// Plane overpartitions with all parts in `s`. Elements above `order`
/// contribute nothing and are ignored.
pub fn gf_parts_in_set(s: &BTreeSet<u32>, order: i64) -> TruncSeries {
    let a = CoeffPoly::a();
    let a2 = &a * &a;
    let parts: Vec<i64> = s
        .iter()
        .map(|&x| x as i64)
        .filter(|&x| x >= 1 && x <= order)
        .collect();
    let mut acc = TruncSeries::one(order);
    for &i in &parts {
        for &j in &parts {
            if i + j <= order {
                acc = &acc * &TruncSeries::binomial(&a, i + j, order);
            }
        }
        acc = &(&acc * &geometric(&CoeffPoly::one(), i, order)) * &geometric(&a, i, order);
        for &j in parts.iter().filter(|&&j| j < i) {
            if i + j <= order {
                acc = &(&acc * &geometric(&CoeffPoly::one(), i + j, order))
                    * &geometric(&a2, i + j, order);
            }
        }
    }
    acc
}

/// Plane overpartitions with odd parts:
/// `∏_i (1 + a q^{2i})^i / ((1-q^{2i-1})(1-a q^{2i-1})(1-q^{2i})^{⌊i/2⌋}(1-a²q^{2i})^{⌊i/2⌋})`.
/// The exponent `i` counts ordered pairs of odd numbers summing to `2i`.
pub fn gf_odd_parts(order: i64) -> TruncSeries {
    odd_parts_product(order, 0)
}

/// The same product with exponent `i - 1` on `(1 + a q^{2i})`. It is not a
/// generating function of anything; kept so the difference can be shown.
pub fn gf_odd_parts_lagged(order: i64) -> TruncSeries {
    odd_parts_product(order, 1)
}

fn odd_parts_product(order: i64, lag: i64) -> TruncSeries {
    let a = CoeffPoly::a();
    let a2 = &a * &a;
    let mut acc = TruncSeries::one(order);
    let mut i = 1i64;
    while 2 * i - 1 <= order {
        acc = &acc * &TruncSeries::binomial(&a, 2 * i, order).pow((i - lag) as u32);
        acc = &(&acc * &geometric(&CoeffPoly::one(), 2 * i - 1, order))
            * &geometric(&a, 2 * i - 1, order);
        if 2 * i <= order {
            let f = (i / 2) as u32;
            acc = &(&acc * &geometric(&CoeffPoly::one(), 2 * i, order).pow(f))
                * &geometric(&a2, 2 * i, order).pow(f);
        }
        i += 1;
    }
    acc
}

/// `Σ_{k=0}^{min(n,c)} a^k q^{k(k+1)/2} (q)_{n-k+c} / ((q)_{n-k} (q)_k (q)_{c-k})`:
/// single-row plane overpartitions with at most `c` parts, each at most `n`.
pub fn gf_row_bounded(n: u32, cols: u32, order: i64) -> TruncSeries {
    let mut acc = TruncSeries::zero(order);
    for k in 0..=n.min(cols) {
        let e = (k as i64) * (k as i64 + 1) / 2;
        if e > order {
            break;
        }
        let mut term = TruncSeries::monomial(CoeffPoly::monomial(1, k, 0), e, order);
        term = &term * &q_poch(Some(n - k + cols), order);
        term = &term * &inv_q_poch(n - k, order);
        term = &term * &inv_q_poch(k, order);
        term = &term * &inv_q_poch(cols - k, order);
        acc = &acc + &term;
    }
    acc
}

/// `∏_{i<j, A_i=0, A_j=1} (1 - t q^{j-i}) / (1 - q^{j-i})` for a skew profile.
pub fn gf_skew(profile: &Profile, order: i64) -> TruncSeries {
    let bits = profile.bits();
    let mut acc = TruncSeries::one(order);
    for i in 0..bits.len() {
        for j in i + 1..bits.len() {
            let e = (j - i) as i64;
            if bits[i] == 0 && bits[j] == 1 && e <= order {
                acc = &acc * &t_ratio(e, order);
            }
        }
    }
    acc
}

/// Cylindric partitions of period `T = |A|`, weighted by `A^cyl(t)`:
/// `∏_n 1/(1-q^{nT}) ∏_{A_i=0, A_j=1} (1 - t q^{(j-i)_T+(n-1)T}) / (1 - q^{(j-i)_T+(n-1)T})`,
/// where `(x)_T` is the least positive residue of `x` mod `T`.
pub fn gf_cylindric(profile: &Profile, order: i64) -> TruncSeries {
    let bits = profile.bits();
    let t = bits.len() as i64;
    let mut acc = TruncSeries::one(order);
    if t == 0 {
        return acc;
    }
    let mut n = 1i64;
    while (n - 1) * t < order + t {
        if n * t <= order {
            acc = &acc * &geometric(&CoeffPoly::one(), n * t, order);
        }
        for i in 0..bits.len() {
            for j in 0..bits.len() {
                if bits[i] != 0 || bits[j] != 1 {
                    continue;
                }
                let r = (j as i64 - i as i64).rem_euclid(t);
                let r = if r == 0 { t } else { r };
                let e = r + (n - 1) * t;
                if e <= order {
                    acc = &acc * &t_ratio(e, order);
                }
            }
        }
        n += 1;
    }
    acc
}

/// `∏_n ((1 + q^n) / (1 - q^n))^n`: unweighted plane overpartitions.
pub fn gf_plane_overpartitions(order: i64) -> TruncSeries {
    gf_macmahon_t(order).eval_t(-1)
}
