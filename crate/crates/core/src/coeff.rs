//! Exact polynomials in the bookkeeping variables `a` and `t`.
//!
//! `CoeffPoly` is the coefficient ring of every generating function in this
//! crate. `TPoly` is the dense univariate specialisation used for the
//! Hall-Littlewood weights (`A_Π(t)`, `b_λ(t)`, `φ`, `ψ`, `Φ`).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Sparse polynomial in `a` and `t` with arbitrary precision integer
/// coefficients. Keys are `(a_exponent, t_exponent)`; zero coefficients are
/// never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CoeffPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl CoeffPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// `c · a^a_exp · t^t_exp`
    pub fn monomial(c: impl Into<BigInt>, a_exp: u32, t_exp: u32) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((a_exp, t_exp), c);
        }
        Self { terms }
    }

    pub fn a() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().map_or(false, |c| c.is_one())
    }

    /// Returns the integer value if the polynomial is constant.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &BigInt)> {
        self.terms.iter().map(|(&(a, t), c)| (a, t, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, a_exp: u32, t_exp: u32) -> BigInt {
        self.terms.get(&(a_exp, t_exp)).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, a_exp: u32, t_exp: u32, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let key = (a_exp, t_exp);
        let slot = self.terms.entry(key).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add_assign_ref(&mut self, other: &CoeffPoly) {
        for (&(a, t), c) in &other.terms {
            self.add_term(a, t, c);
        }
    }

    /// `self += x * y`
    pub fn add_product(&mut self, x: &CoeffPoly, y: &CoeffPoly) {
        for (&(a1, t1), c1) in &x.terms {
            for (&(a2, t2), c2) in &y.terms {
                self.add_term(a1 + a2, t1 + t2, &(c1 * c2));
            }
        }
    }

    pub fn scale(&self, k: &BigInt) -> CoeffPoly {
        let mut out = CoeffPoly::zero();
        for (&(a, t), c) in &self.terms {
            out.add_term(a, t, &(c * k));
        }
        out
    }

    /// Substitutes an integer for `t`.
    pub fn eval_t(&self, value: i64) -> CoeffPoly {
        let v = BigInt::from(value);
        let mut out = CoeffPoly::zero();
        for (&(a, t), c) in &self.terms {
            out.add_term(a, 0, &(c * num_traits::pow(v.clone(), t as usize)));
        }
        out
    }

    /// Substitutes an integer for `a`.
    pub fn eval_a(&self, value: i64) -> CoeffPoly {
        let v = BigInt::from(value);
        let mut out = CoeffPoly::zero();
        for (&(a, t), c) in &self.terms {
            out.add_term(0, t, &(c * num_traits::pow(v.clone(), a as usize)));
        }
        out
    }

    pub fn max_a_degree(&self) -> u32 {
        self.terms.keys().map(|k| k.0).max().unwrap_or(0)
    }

    pub fn max_t_degree(&self) -> u32 {
        self.terms.keys().map(|k| k.1).max().unwrap_or(0)
    }

    /// Sum of the absolute values of all coefficients, i.e. the value at
    /// `a = t = 1` when every coefficient is nonnegative.
    pub fn total(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn has_negative_coefficient(&self) -> bool {
        self.terms.values().any(|c| c.is_negative())
    }
}

impl From<i64> for CoeffPoly {
    fn from(c: i64) -> Self {
        CoeffPoly::constant(c)
    }
}

impl From<&TPoly> for CoeffPoly {
    fn from(p: &TPoly) -> Self {
        let mut out = CoeffPoly::zero();
        for (t, c) in p.coeffs.iter().enumerate() {
            out.add_term(0, t as u32, c);
        }
        out
    }
}

impl Add for &CoeffPoly {
    type Output = CoeffPoly;
    fn add(self, rhs: &CoeffPoly) -> CoeffPoly {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Sub for &CoeffPoly {
    type Output = CoeffPoly;
    fn sub(self, rhs: &CoeffPoly) -> CoeffPoly {
        let mut out = self.clone();
        out.add_assign_ref(&-rhs);
        out
    }
}

impl Neg for &CoeffPoly {
    type Output = CoeffPoly;
    fn neg(self) -> CoeffPoly {
        CoeffPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Mul for &CoeffPoly {
    type Output = CoeffPoly;
    fn mul(self, rhs: &CoeffPoly) -> CoeffPoly {
        let mut out = CoeffPoly::zero();
        out.add_product(self, rhs);
        out
    }
}

fn fmt_monomial(c: &BigInt, a: u32, t: u32) -> String {
    let mut vars = String::new();
    match a {
        0 => {}
        1 => vars.push('a'),
        _ => vars.push_str(&format!("a^{a}")),
    }
    match t {
        0 => {}
        1 => vars.push('t'),
        _ => vars.push_str(&format!("t^{t}")),
    }
    if vars.is_empty() {
        c.to_string()
    } else if c.is_one() {
        vars
    } else if *c == -BigInt::one() {
        format!("-{vars}")
    } else {
        format!("{c}{vars}")
    }
}

impl fmt::Display for CoeffPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (&(a, t), c)) in self.terms.iter().enumerate() {
            let m = fmt_monomial(c, a, t);
            if i > 0 && !m.starts_with('-') {
                f.write_str("+")?;
            }
            f.write_str(&m)?;
        }
        Ok(())
    }
}

/// One `{a, t, c}` entry of the JSON rendering of a coefficient.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct MonomialJson {
    pub a: u32,
    pub t: u32,
    pub c: String,
}

impl CoeffPoly {
    pub fn to_json_terms(&self) -> Vec<MonomialJson> {
        self.terms
            .iter()
            .map(|(&(a, t), c)| MonomialJson {
                a,
                t,
                c: c.to_string(),
            })
            .collect()
    }

    pub fn from_json_terms(terms: &[MonomialJson]) -> Option<Self> {
        let mut out = CoeffPoly::zero();
        for m in terms {
            let c: BigInt = m.c.parse().ok()?;
            out.add_term(m.a, m.t, &c);
        }
        Some(out)
    }
}

/// Dense polynomial in `t` with integer coefficients; `coeffs[k]` is the
/// coefficient of `t^k`. Trailing zeros are trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TPoly {
    coeffs: Vec<BigInt>,
}

impl TPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_coeffs(vec![BigInt::one()])
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `1 - t^k`; for `k = 0` this is the zero polynomial.
    pub fn one_minus_t_pow(k: u32) -> Self {
        if k == 0 {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k as usize + 1];
        coeffs[0] = BigInt::one();
        coeffs[k as usize] = -BigInt::one();
        Self::from_coeffs(coeffs)
    }

    /// `φ_r(t) = (1-t)(1-t^2)···(1-t^r)`.
    pub fn phi(r: u32) -> Self {
        (1..=r).fold(Self::one(), |acc, k| &acc * &Self::one_minus_t_pow(k))
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coefficient(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn eval(&self, t: i64) -> BigInt {
        let t = BigInt::from(t);
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * &t + c)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Exact division. Returns `None` unless `divisor` divides `self` over
    /// the integers.
    pub fn div_exact(&self, divisor: &TPoly) -> Option<TPoly> {
        let dd = divisor.degree()?;
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        if rem.len() < dd + 1 {
            return if self.is_zero() {
                Some(TPoly::zero())
            } else {
                None
            };
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd];
            if c.is_zero() {
                continue;
            }
            if !(c % lead).is_zero() {
                return None;
            }
            let q = c / lead;
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * dc;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(TPoly::from_coeffs(quot))
    }
}

impl Add for &TPoly {
    type Output = TPoly;
    fn add(self, rhs: &TPoly) -> TPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        TPoly::from_coeffs(
            (0..n)
                .map(|k| self.coefficient(k) + rhs.coefficient(k))
                .collect(),
        )
    }
}

impl Mul for &TPoly {
    type Output = TPoly;
    fn mul(self, rhs: &TPoly) -> TPoly {
        if self.is_zero() || rhs.is_zero() {
            return TPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            for (j, y) in rhs.coeffs.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        TPoly::from_coeffs(out)
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&CoeffPoly::from(self), f)
    }
}
