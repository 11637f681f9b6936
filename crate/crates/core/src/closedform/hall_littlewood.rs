//! Polynomials in `t` attached to partitions, horizontal strips and
//! interlacing sequences, and a brute-force Hall–Littlewood `Q`.

use std::collections::BTreeMap;

use crate::coeff::TPoly;
use crate::enumerate::enum_column_strict;
use crate::interlacing::InterlacingSequence;
use crate::partition::Partition;

/// Polynomials in `t` with integer coefficients.
pub type HLPoly = TPoly;

/// `b_λ(t) = ∏_i φ_{m_i(λ)}(t)`.
pub fn b_lambda(lambda: &Partition) -> HLPoly {
    lambda
        .multiplicities()
        .into_iter()
        .fold(TPoly::one(), |acc, (_, m)| &acc * &TPoly::phi(m))
}

fn column_lengths(p: &Partition, upto: u32) -> Vec<u32> {
    let c = p.conjugate();
    (1..=upto as usize + 1).map(|i| c.part(i)).collect()
}

/// `(φ_{λ/μ}, ψ_{λ/μ})`. With `θ = λ/μ` a horizontal strip,
/// `φ = ∏ (1 - t^{m_i(λ)})` over `i` with `θ'_i = 1, θ'_{i+1} = 0` and
/// `ψ = ∏ (1 - t^{m_j(μ)})` over `j` with `θ'_j = 0, θ'_{j+1} = 1`.
/// Both are zero when `λ/μ` is not a horizontal strip.
pub fn hl_strip_polys(lambda: &Partition, mu: &Partition) -> (HLPoly, HLPoly) {
    if !lambda.is_horizontal_strip_over(mu) {
        return (TPoly::zero(), TPoly::zero());
    }
    let top = lambda.largest().max(mu.largest()) + 1;
    let lc = column_lengths(lambda, top);
    let mc = column_lengths(mu, top);
    let theta: Vec<u32> = lc.iter().zip(&mc).map(|(a, b)| a - b).collect();
    let mut phi = TPoly::one();
    let mut psi = TPoly::one();
    for i in 0..theta.len() - 1 {
        let col = i as u32 + 1;
        if theta[i] == 1 && theta[i + 1] == 0 {
            phi = &phi * &TPoly::one_minus_t_pow(lambda.multiplicity(col));
        }
        if theta[i] == 0 && theta[i + 1] == 1 {
            psi = &psi * &TPoly::one_minus_t_pow(mu.multiplicity(col));
        }
    }
    (phi, psi)
}

/// `Φ_Λ(t)`: the product over steps of `φ_{λ^{k+1}/λ^k}` (bit 0) or
/// `ψ_{λ^k/λ^{k+1}}` (bit 1).
pub fn phi_sequence(seq: &InterlacingSequence) -> HLPoly {
    let ps = seq.partitions();
    let mut acc = TPoly::one();
    for k in 0..seq.profile().len() {
        let f = if seq.profile().bit(k) == 0 {
            hl_strip_polys(&ps[k + 1], &ps[k]).0
        } else {
            hl_strip_polys(&ps[k], &ps[k + 1]).1
        };
        acc = &acc * &f;
    }
    acc
}

/// A polynomial in commuting variables with coefficients in `t`, keyed by
/// exponent vectors.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MultiPoly {
    pub vars: usize,
    pub terms: BTreeMap<Vec<u32>, TPoly>,
}

impl MultiPoly {
    pub fn zero(vars: usize) -> Self {
        Self {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: usize) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(vec![0; vars], &TPoly::one());
        p
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: &TPoly) {
        let e = self.terms.entry(exps).or_default();
        *e = &*e + c;
        self.terms.retain(|_, v| !v.is_zero());
    }

    pub fn degree_of(exps: &[u32]) -> u32 {
        exps.iter().sum()
    }

    pub fn truncate(&self, max_degree: u32) -> Self {
        Self {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| Self::degree_of(e) <= max_degree)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn mul_truncated(&self, other: &Self, max_degree: u32) -> Self {
        assert_eq!(self.vars, other.vars);
        let mut out = Self::zero(self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                if Self::degree_of(&e) <= max_degree {
                    out.add_term(e, &(c1 * c2));
                }
            }
        }
        out
    }

    /// Places the variables of `self` first and those of `other` after.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.vars + other.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let mut e = e1.clone();
                e.extend(e2);
                out.add_term(e, &(c1 * c2));
            }
        }
        out
    }

    pub fn map_coeffs(&self, f: impl Fn(&TPoly) -> Option<TPoly>) -> Option<Self> {
        let mut out = Self::zero(self.vars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), &f(c)?);
        }
        Some(out)
    }
}

/// `Q_λ(x_1, …, x_m; t)` as a sum over column-strict fillings of `λ` with
/// entries at most `m`, each weighted by `∏_k φ_{λ^{(k)}/λ^{(k-1)}}` where
/// `λ^{(k)}` holds the cells with entry `> m - k`. Entry `v` contributes to
/// `x_{m+1-v}`.
pub fn hl_q_bruteforce(lambda: &Partition, m: usize) -> MultiPoly {
    let mut out = MultiPoly::zero(m);
    if lambda.is_empty() {
        return MultiPoly::one(m);
    }
    for pp in enum_column_strict(lambda, m as u32) {
        let mut chain = vec![Partition::empty()];
        for k in 1..=m as u32 {
            let parts: Vec<u32> = pp
                .rows()
                .iter()
                .map(|row| row.iter().filter(|&&v| v > m as u32 - k).count() as u32)
                .filter(|&c| c > 0)
                .collect();
            chain.push(Partition::new(parts));
        }
        let mut w = TPoly::one();
        let mut exps = vec![0u32; m];
        for k in 1..=m {
            w = &w * &hl_strip_polys(&chain[k], &chain[k - 1]).0;
            exps[k - 1] = (chain[k].weight() - chain[k - 1].weight()) as u32;
        }
        out.add_term(exps, &w);
    }
    out
}

/// `∏_{i,j} (1 - t x_i y_j) / (1 - x_i y_j)` in `m + n` variables, up to
/// total degree `2d` (degree `d` in the `x` variables).
pub fn cauchy_product(m: usize, n: usize, d: u32) -> MultiPoly {
    let vars = m + n;
    let one_minus_t = TPoly::one_minus_t_pow(1);
    let mut acc = MultiPoly::one(vars);
    for i in 0..m {
        for j in 0..n {
            // 1 + (1 - t) Σ_{k≥1} (x_i y_j)^k
            let mut f = MultiPoly::one(vars);
            for k in 1..=d {
                let mut e = vec![0; vars];
                e[i] = k;
                e[m + j] = k;
                f.add_term(e, &one_minus_t);
            }
            acc = acc.mul_truncated(&f, 2 * d);
        }
    }
    acc
}

/// `Σ_{|λ| ≤ d} Q_λ(x) Q_λ(y) / b_λ` with `m` and `n` variables.
pub fn cauchy_sum(m: usize, n: usize, d: u32) -> MultiPoly {
    let mut acc = MultiPoly::zero(m + n);
    for lambda in Partition::all_up_to(d) {
        if lambda.len() > m.min(n) {
            continue;
        }
        let b = b_lambda(&lambda);
        let p = hl_q_bruteforce(&lambda, n)
            .map_coeffs(|c| c.div_exact(&b))
            .expect("Q_λ is divisible by b_λ");
        let term = hl_q_bruteforce(&lambda, m).tensor(&p);
        for (e, c) in term.terms {
            acc.add_term(e, &c);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interlacing::Profile;
    use crate::plane::PlanePartition;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn b_of_small_partitions() {
        assert_eq!(b_lambda(&p(&[])), TPoly::one());
        assert_eq!(b_lambda(&p(&[2, 1])), TPoly::one_minus_t_pow(1).pow(2));
        assert_eq!(b_lambda(&p(&[1, 1])), TPoly::phi(2));
    }

    #[test]
    fn phi_r_degree() {
        for r in 0..6u32 {
            assert_eq!(TPoly::phi(r).degree(), Some((r * (r + 1) / 2) as usize));
        }
    }

    #[test]
    fn strip_polys_trivial_and_single() {
        assert_eq!(
            hl_strip_polys(&p(&[2, 1]), &p(&[2, 1])),
            (TPoly::one(), TPoly::one())
        );
        assert_eq!(
            hl_strip_polys(&p(&[1]), &p(&[])),
            (TPoly::one_minus_t_pow(1), TPoly::one())
        );
    }

    #[test]
    fn strip_polys_two_one_over_two() {
        let (phi, psi) = hl_strip_polys(&p(&[2, 1]), &p(&[2]));
        assert_eq!(phi, TPoly::one_minus_t_pow(1));
        // φ b_μ = ψ b_λ
        assert_eq!(&phi * &b_lambda(&p(&[2])), &psi * &b_lambda(&p(&[2, 1])));
    }

    #[test]
    fn non_strip_gives_zero() {
        assert_eq!(
            hl_strip_polys(&p(&[2, 2]), &p(&[1])),
            (TPoly::zero(), TPoly::zero())
        );
    }

    #[test]
    fn truncation_chain_gives_b() {
        for l in [p(&[3, 3, 1]), p(&[2, 2, 2]), p(&[4, 2, 2, 1, 1])] {
            let seq = InterlacingSequence::truncations(&l);
            assert_eq!(phi_sequence(&seq), b_lambda(&l));
        }
    }

    #[test]
    fn worked_plane_partition() {
        let pp = PlanePartition::parse("4 4 4 4/4 4 3/4 4 3/2 2").unwrap();
        let seq = InterlacingSequence::from_plane_partition(&pp, 4, 4);
        let expected = &TPoly::one_minus_t_pow(1).pow(3) * &TPoly::one_minus_t_pow(2);
        assert_eq!(phi_sequence(&seq), expected);
    }

    #[test]
    fn cylindric_period_two() {
        let seq = InterlacingSequence::cylindric(
            vec![p(&[1]), p(&[1, 1])],
            Profile::new(vec![0, 1]).unwrap(),
        )
        .unwrap();
        assert_eq!(phi_sequence(&seq), TPoly::one_minus_t_pow(2));
    }

    #[test]
    fn q_of_single_box() {
        let q = hl_q_bruteforce(&p(&[1]), 2);
        let mut expected = MultiPoly::zero(2);
        expected.add_term(vec![1, 0], &TPoly::one_minus_t_pow(1));
        expected.add_term(vec![0, 1], &TPoly::one_minus_t_pow(1));
        assert_eq!(q, expected);
        assert_eq!(hl_q_bruteforce(&p(&[]), 3), MultiPoly::one(3));
    }

    #[test]
    fn q_in_one_variable_is_phi_of_strip() {
        for l in [p(&[3]), p(&[2, 2]), p(&[1, 1, 1])] {
            let q = hl_q_bruteforce(&l, 1);
            if l.len() > 1 {
                assert!(q.terms.is_empty());
            } else {
                let (phi, _) = hl_strip_polys(&l, &p(&[]));
                assert_eq!(q.terms.get(&vec![l.weight() as u32]), Some(&phi));
            }
        }
    }

    #[test]
    fn cauchy_two_by_two() {
        assert_eq!(cauchy_sum(2, 2, 3).truncate(6), cauchy_product(2, 2, 3));
    }
}
