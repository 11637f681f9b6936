//! Truncated formal power series in `q` over `Z[a, t]`.
//!
//! A `TruncSeries` stores `Σ c_k q^k + O(q^{N+1})` sparsely. Negative
//! exponents are allowed while a product is being assembled; precision is
//! tracked so that a Laurent factor lowers the order of the result instead
//! of silently producing wrong coefficients. Generating functions are
//! reported only after [`TruncSeries::ensure_laurent_free`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coeff::{CoeffPoly, MonomialJson};

/// Order used for exact (polynomial) values: large enough that it never
/// binds, small enough that order arithmetic cannot overflow.
pub const EXACT: i64 = i64::MAX / 4;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("constant term {0} is not a unit in Z[a,t]")]
    NonUnit(String),
    #[error("cannot invert a series with a negative q-exponent ({0})")]
    LaurentInverse(i64),
    #[error("cannot invert an exact polynomial without a truncation order")]
    Unbounded,
    #[error("q-exponent {requested} is above the truncation order {order}")]
    AboveOrder { requested: i64, order: i64 },
    #[error("negative q-exponent {0} survived in a reported series")]
    SurvivingLaurent(i64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    order: i64,
    terms: BTreeMap<i64, CoeffPoly>,
}

impl TruncSeries {
    pub fn zero(order: i64) -> Self {
        Self {
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(order: i64) -> Self {
        Self::monomial(CoeffPoly::one(), 0, order)
    }

    /// `coeff · q^exp`, dropped if `exp` exceeds `order`.
    pub fn monomial(coeff: CoeffPoly, exp: i64, order: i64) -> Self {
        let mut s = Self::zero(order);
        s.add_term(exp, &coeff);
        s
    }

    /// An exact polynomial in `q` (never truncated by later products).
    pub fn exact(terms: impl IntoIterator<Item = (i64, CoeffPoly)>) -> Self {
        let mut s = Self::zero(EXACT);
        for (e, c) in terms {
            s.add_term(e, &c);
        }
        s
    }

    pub fn from_terms(order: i64, terms: impl IntoIterator<Item = (i64, CoeffPoly)>) -> Self {
        let mut s = Self::zero(order);
        for (e, c) in terms {
            s.add_term(e, &c);
        }
        s
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn is_exact(&self) -> bool {
        self.order >= EXACT
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &CoeffPoly)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// Smallest stored exponent, or `None` for the zero series.
    pub fn valuation(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    fn add_term(&mut self, exp: i64, c: &CoeffPoly) {
        if exp > self.order || c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_default();
        slot.add_assign_ref(c);
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn coefficient_at(&self, exp: i64) -> Result<CoeffPoly, SeriesError> {
        if exp > self.order {
            return Err(SeriesError::AboveOrder {
                requested: exp,
                order: self.order,
            });
        }
        Ok(self.terms.get(&exp).cloned().unwrap_or_default())
    }

    /// Coefficient lookup for callers that already know `exp <= order`.
    pub fn coeff(&self, exp: i64) -> CoeffPoly {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn truncate(&self, order: i64) -> Self {
        let order = order.min(self.order);
        Self {
            order,
            terms: self
                .terms
                .range(..=order)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    /// Multiplies by `q^shift`; the order moves with the terms.
    pub fn shift(&self, shift: i64) -> Self {
        Self {
            order: self.order.saturating_add(shift).min(EXACT),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e + shift, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &CoeffPoly) -> Self {
        let mut out = Self::zero(self.order);
        for (e, x) in &self.terms {
            out.add_term(*e, &(x * c));
        }
        out
    }

    pub fn map_coeffs(&self, f: impl Fn(&CoeffPoly) -> CoeffPoly) -> Self {
        let mut out = Self::zero(self.order);
        for (e, c) in &self.terms {
            out.add_term(*e, &f(c));
        }
        out
    }

    pub fn eval_t(&self, value: i64) -> Self {
        self.map_coeffs(|c| c.eval_t(value))
    }

    pub fn eval_a(&self, value: i64) -> Self {
        self.map_coeffs(|c| c.eval_a(value))
    }

    /// Errors if a negative exponent survived; otherwise returns `self`.
    pub fn ensure_laurent_free(self) -> Result<Self, SeriesError> {
        match self.valuation() {
            Some(v) if v < 0 => Err(SeriesError::SurvivingLaurent(v)),
            _ => Ok(self),
        }
    }

    pub fn invert(&self) -> Result<Self, SeriesError> {
        if self.is_exact() {
            return Err(SeriesError::Unbounded);
        }
        if let Some(v) = self.valuation() {
            if v < 0 {
                return Err(SeriesError::LaurentInverse(v));
            }
        }
        let c0 = self.coeff(0);
        let unit = match c0.as_constant() {
            Some(c) if c.abs().is_one() => c,
            _ => return Err(SeriesError::NonUnit(c0.to_string())),
        };
        let n = self.order.max(-1);
        let mut out: Vec<CoeffPoly> = Vec::with_capacity((n + 1).max(0) as usize);
        if n >= 0 {
            out.push(CoeffPoly::constant(unit.clone()));
        }
        for k in 1..=n {
            let mut acc = CoeffPoly::zero();
            for (&j, xj) in self.terms.range(1..=k) {
                acc.add_product(xj, &out[(k - j) as usize]);
            }
            out.push(acc.scale(&-&unit));
        }
        Ok(Self::from_terms(
            self.order,
            out.into_iter().enumerate().map(|(k, c)| (k as i64, c)),
        ))
    }

    pub fn div(&self, rhs: &TruncSeries) -> Result<Self, SeriesError> {
        let order = self.order.min(rhs.order);
        let order = if order >= EXACT { self.order } else { order };
        Ok(self * &rhs.truncate(order).invert_at(order)?)
    }

    fn invert_at(&self, order: i64) -> Result<Self, SeriesError> {
        self.truncate(order).invert()
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = TruncSeries::one(self.order);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `(arg; q)_n = ∏_{i=0}^{n-1} (1 - arg·q^i)` where `arg = coeff · q^q_exp`.
    /// `n = None` takes every factor that can reach degree `order`.
    pub fn pochhammer(coeff: &CoeffPoly, q_exp: i64, n: Option<u32>, order: i64) -> Self {
        debug_assert!(q_exp >= 0);
        let mut acc = TruncSeries::one(order);
        let mut i = 0u32;
        while n.map_or(true, |n| i < n) {
            let e = q_exp + i as i64;
            if e > order {
                break;
            }
            let factor = TruncSeries::from_terms(order, [(0, CoeffPoly::one()), (e, -coeff)]);
            acc = &acc * &factor;
            i += 1;
        }
        acc
    }

    /// `1 + c·q^e` as a series of the given order.
    pub fn binomial(c: &CoeffPoly, e: i64, order: i64) -> Self {
        TruncSeries::from_terms(order, [(0, CoeffPoly::one()), (e, c.clone())])
    }

    pub fn to_json(&self) -> SeriesJson {
        SeriesJson {
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermJson {
                    q: *e,
                    coeff: c.to_json_terms(),
                })
                .collect(),
        }
    }

    pub fn from_json(j: &SeriesJson) -> Option<Self> {
        let mut s = Self::zero(j.order);
        for t in &j.terms {
            s.add_term(t.q, &CoeffPoly::from_json_terms(&t.coeff)?);
        }
        Some(s)
    }

    /// First exponent `<= order` at which the two series differ, comparing
    /// up to the smaller of the two orders.
    pub fn first_difference(&self, other: &TruncSeries) -> Option<i64> {
        let order = self.order.min(other.order);
        let keys: std::collections::BTreeSet<i64> = self
            .terms
            .range(..=order)
            .chain(other.terms.range(..=order))
            .map(|(e, _)| *e)
            .collect();
        keys.into_iter().find(|e| self.coeff(*e) != other.coeff(*e))
    }
}

impl Add for &TruncSeries {
    type Output = TruncSeries;
    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        let mut out = self.truncate(self.order.min(rhs.order));
        for (e, c) in &rhs.terms {
            out.add_term(*e, c);
        }
        out
    }
}

impl Sub for &TruncSeries {
    type Output = TruncSeries;
    fn sub(self, rhs: &TruncSeries) -> TruncSeries {
        self + &(-rhs)
    }
}

impl Neg for &TruncSeries {
    type Output = TruncSeries;
    fn neg(self) -> TruncSeries {
        TruncSeries {
            order: self.order,
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &TruncSeries {
    type Output = TruncSeries;
    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        // A factor with negative valuation costs precision in the other one.
        let vx = self.valuation().unwrap_or(0).min(0);
        let vy = rhs.valuation().unwrap_or(0).min(0);
        let order = (self.order + vy).min(rhs.order + vx).min(EXACT);
        let mut acc: BTreeMap<i64, CoeffPoly> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e = e1 + e2;
                if e > order {
                    break;
                }
                acc.entry(e).or_default().add_product(c1, c2);
            }
        }
        TruncSeries::from_terms(order, acc)
    }
}

fn q_part(e: i64) -> String {
    match e {
        0 => String::new(),
        1 => "q".to_string(),
        _ => format!("q^{e}"),
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let body = if c.num_terms() == 1 {
                let (a, t, k) = c.terms().next().unwrap();
                let mono = CoeffPoly::monomial(k.clone(), a, t).to_string();
                if *e != 0 && a == 0 && t == 0 && k.abs().is_one() {
                    let sign = if k.is_negative() { "-" } else { "" };
                    format!("{sign}{}", q_part(*e))
                } else {
                    format!("{mono}{}", q_part(*e))
                }
            } else if *e == 0 {
                c.to_string()
            } else {
                format!("({c}){}", q_part(*e))
            };
            if i == 0 {
                f.write_str(&body)?;
            } else if let Some(rest) = body.strip_prefix('-') {
                write!(f, " - {rest}")?;
            } else {
                write!(f, " + {body}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TermJson {
    pub q: i64,
    pub coeff: Vec<MonomialJson>,
}

/// JSON form of a series: terms in increasing `q`, monomials in increasing
/// `(a, t)`, matching the text rendering order.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SeriesJson {
    pub order: i64,
    pub terms: Vec<TermJson>,
}

/// `Σ_k c_k q^k` from plain integer coefficients, handy in tests.
pub fn from_integers(order: i64, coeffs: &[i64]) -> TruncSeries {
    TruncSeries::from_terms(
        order,
        coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| (k as i64, CoeffPoly::constant(BigInt::from(*c)))),
    )
}

/// `1 / (1 - c q^e)` truncated at `order`, computed as a geometric series.
pub fn geometric(c: &CoeffPoly, e: i64, order: i64) -> TruncSeries {
    assert!(e > 0, "geometric series needs a positive exponent");
    let mut out = TruncSeries::zero(order);
    let mut power = CoeffPoly::one();
    let mut k = 0i64;
    while k * e <= order {
        out.add_term(k * e, &power);
        power = &power * c;
        k += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn a() -> CoeffPoly {
        CoeffPoly::a()
    }

    #[test]
    fn product_expands() {
        let x = TruncSeries::from_terms(5, [(0, CoeffPoly::one()), (1, a())]);
        let y = from_integers(5, &[1, -1]);
        let p = &x * &y;
        assert_eq!(p.coeff(1), &a() - &CoeffPoly::one());
        assert_eq!(p.coeff(2), -&a());
        assert_eq!(p.to_string(), "1 + (-1+a)q - aq^2");
    }

    #[test]
    fn negation_cancels() {
        let x = TruncSeries::from_terms(4, [(0, CoeffPoly::one()), (3, CoeffPoly::t())]);
        assert!((&x + &-&x).is_zero());
    }

    #[test]
    fn geometric_inverse() {
        let inv = from_integers(3, &[1, -1]).invert().unwrap();
        assert_eq!(inv, from_integers(3, &[1, 1, 1, 1]));
        let inv = from_integers(3, &[1, 1]).invert().unwrap();
        assert_eq!(inv, from_integers(3, &[1, -1, 1, -1]));
    }

    #[test]
    fn one_minus_tq_over_one_minus_q() {
        let num = TruncSeries::from_terms(4, [(0, CoeffPoly::one()), (1, -&CoeffPoly::t())]);
        let s = num.div(&from_integers(4, &[1, -1])).unwrap();
        assert_eq!(s.coeff(1), &CoeffPoly::one() - &CoeffPoly::t());
    }

    #[test]
    fn invert_rejects_non_units() {
        let x = from_integers(3, &[2, 1]);
        assert!(matches!(x.invert(), Err(SeriesError::NonUnit(_))));
        let y = TruncSeries::from_terms(3, [(0, a())]);
        assert!(y.invert().is_err());
    }

    #[test]
    fn pochhammer_small_cases() {
        let n = 6;
        let q1 = TruncSeries::pochhammer(&CoeffPoly::one(), 1, Some(1), n);
        assert_eq!(q1, from_integers(n, &[1, -1]));
        let mq2 = TruncSeries::pochhammer(&CoeffPoly::constant(-1), 1, Some(2), n);
        assert_eq!(mq2, from_integers(n, &[1, 1, 1, 1]));
        // (-aq;q)_2 / (q;q)_2 at q^1 is 1 + a
        let num = TruncSeries::pochhammer(&-&a(), 1, Some(2), n);
        let den = TruncSeries::pochhammer(&CoeffPoly::one(), 1, Some(2), n);
        let r = num.div(&den).unwrap();
        assert_eq!(r.coeff(1), &CoeffPoly::one() + &a());
    }

    #[test]
    fn coefficient_above_order_is_an_error() {
        let x = from_integers(2, &[1, 1]);
        assert_eq!(x.coefficient_at(1).unwrap(), CoeffPoly::one());
        assert!(matches!(
            x.coefficient_at(3),
            Err(SeriesError::AboveOrder { .. })
        ));
    }

    #[test]
    fn laurent_factor_lowers_precision() {
        let x = TruncSeries::exact([(-2, CoeffPoly::one())]);
        let y = from_integers(5, &[1, 1, 1, 1, 1, 1]);
        let p = &x * &y;
        assert_eq!(p.order(), 3);
        let p = &y * &TruncSeries::from_terms(5, [(-2, CoeffPoly::one())]);
        assert_eq!(p.order(), 3);
        assert!(p.clone().ensure_laurent_free().is_err());
        assert!(p.shift(2).ensure_laurent_free().is_ok());
    }

    #[test]
    fn overpartitions_weight_two_count() {
        // coefficient of q^2 in ∏_{n<=2} ((1+q^n)/(1-q^n))^n
        let n = 2;
        let mut acc = TruncSeries::one(n);
        for k in 1..=2 {
            let f = TruncSeries::binomial(&CoeffPoly::one(), k, n)
                .div(&TruncSeries::binomial(&CoeffPoly::constant(-1), k, n))
                .unwrap();
            acc = &acc * &f.pow(k as u32);
        }
        assert_eq!(acc.coefficient_at(2).unwrap(), CoeffPoly::constant(6));
    }

    #[test]
    fn json_round_trip() {
        let x = TruncSeries::from_terms(3, [(0, CoeffPoly::one()), (2, &a() + &CoeffPoly::t())]);
        let j = serde_json::to_string(&x.to_json()).unwrap();
        assert_eq!(
            j,
            r#"{"order":3,"terms":[{"q":0,"coeff":[{"a":0,"t":0,"c":"1"}]},{"q":2,"coeff":[{"a":0,"t":1,"c":"1"},{"a":1,"t":0,"c":"1"}]}]}"#
        );
        let back = TruncSeries::from_json(&serde_json::from_str(&j).unwrap()).unwrap();
        assert_eq!(back, x);
    }

    fn arb_coeff() -> impl Strategy<Value = CoeffPoly> {
        prop::collection::vec((0u32..3, 0u32..3, -3i64..4), 0..4).prop_map(|v| {
            let mut c = CoeffPoly::zero();
            for (a, t, k) in v {
                c.add_term(a, t, &BigInt::from(k));
            }
            c
        })
    }

    fn arb_series() -> impl Strategy<Value = TruncSeries> {
        prop::collection::vec((0i64..8, arb_coeff()), 0..5)
            .prop_map(|v| TruncSeries::from_terms(7, v))
    }

    proptest! {
        #[test]
        fn ring_axioms(x in arb_series(), y in arb_series(), z in arb_series()) {
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        }

        #[test]
        fn truncation_is_a_homomorphism(x in arb_series(), y in arb_series(), n in 0i64..7) {
            prop_assert_eq!((&x * &y).truncate(n), &x.truncate(n) * &y.truncate(n));
            prop_assert_eq!((&x + &y).truncate(n), &x.truncate(n) + &y.truncate(n));
        }

        #[test]
        fn inverse_is_exact(x in arb_series(), sign in prop::bool::ANY) {
            let mut x = x;
            let c0 = if sign { 1 } else { -1 };
            x = &(&x - &TruncSeries::from_terms(7, [(0, x.coeff(0))]))
                + &from_integers(7, &[c0]);
            let inv = x.invert().unwrap();
            prop_assert_eq!(&inv * &x, TruncSeries::one(7));
        }
    }
}
