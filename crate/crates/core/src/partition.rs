//! Partitions and overpartitions.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::validate::{Validate, Violation};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros. Panics on increasing input;
    /// use [`Partition::try_new`] for untrusted data.
    pub fn new(parts: impl Into<Vec<u32>>) -> Self {
        Self::try_new(parts).expect("parts must be weakly decreasing")
    }

    pub fn try_new(parts: impl Into<Vec<u32>>) -> Result<Self, Vec<Violation>> {
        let mut parts = parts.into();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        let p = Self { parts };
        let v = p.violations();
        if v.is_empty() {
            Ok(p)
        } else {
            Err(v)
        }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn rectangle(rows: u32, cols: u32) -> Self {
        if cols == 0 {
            return Self::empty();
        }
        Self {
            parts: vec![cols; rows as usize],
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Part `i` (1-based); zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn largest(&self) -> u32 {
        self.part(1)
    }

    pub fn conjugate(&self) -> Self {
        let cols = self.largest() as usize;
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p as usize >= j).count() as u32)
            .collect();
        Self { parts }
    }

    /// `m_i(λ)`, the number of parts equal to `i`.
    pub fn multiplicity(&self, i: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == i).count() as u32
    }

    /// Distinct part sizes with their multiplicities, largest first.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn contains_cell(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && self.part(i) as usize >= j
    }

    /// Cells `(i, j)`, 1-based, in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p as usize).map(move |j| (i + 1, j)))
    }

    /// `λ ⊇ μ` as diagrams.
    pub fn contains(&self, mu: &Partition) -> bool {
        mu.len() <= self.len() && mu.parts.iter().zip(&self.parts).all(|(m, l)| m <= l)
    }

    /// True if `self / mu` is a horizontal strip (interlacing `λ_1 ≥ μ_1 ≥ λ_2 ≥ …`).
    pub fn is_horizontal_strip_over(&self, mu: &Partition) -> bool {
        if !self.contains(mu) {
            return false;
        }
        (1..=self.len()).all(|i| mu.part(i) >= self.part(i + 1))
    }

    pub fn hook(&self, i: usize, j: usize) -> u32 {
        let conj = self.conjugate();
        self.part(i) + conj.part(j) + 1 - i as u32 - j as u32
    }

    /// Hook length and content `j - i` for every cell, row by row.
    pub fn hooks_and_contents(&self) -> Vec<Vec<(u32, i64)>> {
        let conj = self.conjugate();
        self.parts
            .iter()
            .enumerate()
            .map(|(i0, &p)| {
                let i = i0 + 1;
                (1..=p as usize)
                    .map(|j| {
                        let h = self.part(i) + conj.part(j) + 1 - i as u32 - j as u32;
                        (h, j as i64 - i as i64)
                    })
                    .collect()
            })
            .collect()
    }

    /// `Σ_i (i-1) λ_i`.
    pub fn n_statistic(&self) -> u64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| i as u64 * p as u64)
            .sum()
    }

    /// 0/1 word of the boundary read from the bottom-left corner:
    /// east steps are 0, north steps are 1.
    pub fn profile_bits(&self) -> Vec<u8> {
        let mut bits = Vec::new();
        for i in (1..=self.len()).rev() {
            for _ in 0..(self.part(i) - self.part(i + 1)) {
                bits.push(0);
            }
            bits.push(1);
        }
        bits
    }

    /// Inverse of [`Partition::profile_bits`]; leading 1s and trailing 0s
    /// are ignored since they do not touch the diagram.
    pub fn from_profile_bits(bits: &[u8]) -> Self {
        let mut parts = Vec::new();
        let mut east = 0u32;
        for &b in bits {
            if b == 0 {
                east += 1;
            } else if east > 0 {
                parts.push(east);
            }
        }
        parts.reverse();
        Self { parts }
    }

    /// Partitions of `n`, in reverse lexicographic order.
    pub fn all_of(n: u32) -> Vec<Partition> {
        fn rec(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=n.min(max)).rev() {
                cur.push(p);
                rec(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions with weight at most `n`.
    pub fn all_up_to(n: u32) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all_of).collect()
    }

    /// All partitions contained in the `rows × cols` rectangle.
    pub fn all_in_box(rows: u32, cols: u32) -> Vec<Partition> {
        fn rec(rows: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            out.push(Partition { parts: cur.clone() });
            if rows == 0 {
                return;
            }
            for p in 1..=max {
                cur.push(p);
                rec(rows - 1, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(rows, cols, &mut Vec::new(), &mut out);
        out
    }
}

impl Validate for Partition {
    fn violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for (i, w) in self.parts.windows(2).enumerate() {
            if w[0] < w[1] {
                out.push(Violation::at_index(
                    i + 2,
                    "part larger than its predecessor",
                ));
            }
        }
        for (i, &p) in self.parts.iter().enumerate() {
            if p == 0 {
                out.push(Violation::at_index(i + 1, "zero part"));
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<u32>> for Partition {
    fn from(v: Vec<u32>) -> Self {
        Partition::new(v)
    }
}

/// A possibly overlined value. JSON form `{"v": 3, "o": true}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Entry {
    #[serde(rename = "v")]
    pub value: u32,
    #[serde(rename = "o")]
    pub overlined: bool,
}

impl Entry {
    pub const ZERO: Entry = Entry {
        value: 0,
        overlined: false,
    };

    pub fn plain(value: u32) -> Self {
        Self {
            value,
            overlined: false,
        }
    }

    pub fn over(value: u32) -> Self {
        Self {
            value,
            overlined: true,
        }
    }

    /// Sort key for the order `1̄ < 1 < 2̄ < 2 < …`.
    pub fn key(self) -> (u32, u8) {
        (self.value, if self.overlined { 0 } else { 1 })
    }

    pub fn toggled(self) -> Self {
        Self {
            value: self.value,
            overlined: !self.overlined,
        }
    }
}

impl PartialOrd for Entry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Overlined entries sit just below the plain entry of the same value.
impl Ord for Entry {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.overlined {
            write!(f, "{}\u{0304}", self.value)
        } else {
            write!(f, "{}", self.value)
        }
    }
}

/// Parses `3` or `3'` (primed means overlined).
impl std::str::FromStr for Entry {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (body, over) = match s.strip_suffix('\'') {
            Some(b) => (b, true),
            None => (s, false),
        };
        let value = body
            .parse::<u32>()
            .map_err(|e| format!("bad entry {s:?}: {e}"))?;
        Ok(Entry {
            value,
            overlined: over,
        })
    }
}

/// A partition in which the last occurrence of each value may be overlined.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Overpartition {
    entries: Vec<Entry>,
}

impl Overpartition {
    pub fn new(entries: Vec<Entry>) -> Result<Self, Vec<Violation>> {
        let o = Self { entries };
        let v = o.violations();
        if v.is_empty() {
            Ok(o)
        } else {
            Err(v)
        }
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.entries.iter().map(|e| e.value as u64).sum()
    }

    /// `o(λ)`, the number of overlined parts.
    pub fn overlined_count(&self) -> u32 {
        self.entries.iter().filter(|e| e.overlined).count() as u32
    }

    pub fn underlying(&self) -> Partition {
        Partition {
            parts: self.entries.iter().map(|e| e.value).collect(),
        }
    }

    /// All overpartitions with at most `k` parts, each at most `x`, weight at most `n`.
    pub fn all_bounded(k: usize, x: u32, n: u64) -> Vec<Overpartition> {
        let mut out = Vec::new();
        for p in Partition::all_in_box(k as u32, x) {
            if p.weight() > n {
                continue;
            }
            let distinct = p.multiplicities();
            for mask in 0u32..(1 << distinct.len()) {
                let mut entries = Vec::with_capacity(p.len());
                for (idx, (v, m)) in distinct.iter().enumerate() {
                    for r in 0..*m {
                        let over = mask >> idx & 1 == 1 && r + 1 == *m;
                        entries.push(Entry {
                            value: *v,
                            overlined: over,
                        });
                    }
                }
                out.push(Overpartition { entries });
            }
        }
        out
    }
}

impl Validate for Overpartition {
    fn violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for (i, e) in self.entries.iter().enumerate() {
            if e.value == 0 {
                out.push(Violation::at_index(i + 1, "zero part"));
            }
            if let Some(next) = self.entries.get(i + 1) {
                if next.value > e.value {
                    out.push(Violation::at_index(
                        i + 2,
                        "part larger than its predecessor",
                    ));
                }
                if e.overlined && next.value == e.value {
                    out.push(Violation::at_index(
                        i + 1,
                        "overlined entry not last occurrence of its value",
                    ));
                }
            }
        }
        out
    }
}

impl fmt::Display for Overpartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn hooks_of_two_one() {
        let hc = Partition::new(vec![2, 1]).hooks_and_contents();
        assert_eq!(hc, vec![vec![(3, 0), (1, 1)], vec![(1, -1)]]);
    }

    #[test]
    fn hook_of_corner_cell() {
        let l = Partition::new(vec![4, 4, 2]);
        assert_eq!(l.hooks_and_contents()[0][0], (6, 0));
        assert_eq!(l.hook(1, 1), 6);
    }

    #[test]
    fn single_cell() {
        assert_eq!(
            Partition::new(vec![1]).hooks_and_contents(),
            vec![vec![(1, 0)]]
        );
    }

    #[test]
    fn rejects_increasing_parts() {
        assert!(Partition::try_new(vec![1, 2]).is_err());
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).parts(), &[2, 1]);
    }

    #[test]
    fn rectangle_profile() {
        assert_eq!(
            Partition::rectangle(2, 3).profile_bits(),
            vec![0, 0, 0, 1, 1]
        );
        assert_eq!(Partition::new(vec![2, 1]).profile_bits(), vec![0, 1, 0, 1]);
    }

    #[test]
    fn horizontal_strips() {
        let l = Partition::new(vec![3, 1]);
        assert!(l.is_horizontal_strip_over(&Partition::new(vec![1])));
        assert!(l.is_horizontal_strip_over(&Partition::new(vec![1, 1])));
        assert!(!Partition::new(vec![2, 2]).is_horizontal_strip_over(&Partition::new(vec![1, 1])));
        assert!(!Partition::new(vec![1, 1]).is_horizontal_strip_over(&Partition::empty()));
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..8).map(|n| Partition::all_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
    }

    #[test]
    fn overline_must_be_last() {
        let bad = Overpartition::new(vec![Entry::over(1), Entry::plain(1)]);
        let v = bad.unwrap_err();
        assert_eq!(v.len(), 1);
        assert!(v[0].rule.contains("not last occurrence"));
        assert!(Overpartition::new(vec![Entry::plain(1), Entry::over(1)]).is_ok());
    }

    #[test]
    fn entry_order() {
        let mut v = vec![
            Entry::plain(2),
            Entry::over(1),
            Entry::over(2),
            Entry::plain(1),
        ];
        v.sort();
        assert_eq!(
            v,
            vec![
                Entry::over(1),
                Entry::plain(1),
                Entry::over(2),
                Entry::plain(2)
            ]
        );
        assert_eq!("3'".parse::<Entry>().unwrap(), Entry::over(3));
    }

    #[test]
    fn overpartition_counts() {
        // (-q;q)_inf/(q;q)_inf = 1 + 2q + 4q^2 + 8q^3 + 14q^4
        let all = Overpartition::all_bounded(10, 10, 4);
        let mut by_weight = [0usize; 5];
        for o in &all {
            assert!(o.is_valid());
            by_weight[o.weight() as usize] += 1;
        }
        assert_eq!(by_weight, [1, 2, 4, 8, 14]);
    }

    #[test]
    fn entry_json() {
        let s = serde_json::to_string(&Entry::over(4)).unwrap();
        assert_eq!(s, r#"{"v":4,"o":true}"#);
    }

    fn arb_partition() -> impl Strategy<Value = Partition> {
        prop::collection::vec(1u32..8, 0..7).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            Partition::new(v)
        })
    }

    proptest! {
        #[test]
        fn conjugation_is_an_involution(p in arb_partition()) {
            prop_assert_eq!(p.conjugate().conjugate(), p.clone());
            prop_assert_eq!(p.conjugate().weight(), p.weight());
        }

        #[test]
        fn cell_count_is_weight(p in arb_partition()) {
            let n: usize = p.hooks_and_contents().iter().map(Vec::len).sum();
            prop_assert_eq!(n as u64, p.weight());
        }

        #[test]
        fn profile_round_trip(p in arb_partition()) {
            prop_assert_eq!(Partition::from_profile_bits(&p.profile_bits()), p);
        }

        #[test]
        fn hooks_from_profile(p in arb_partition()) {
            let bits = p.profile_bits();
            let mut from_bits = Vec::new();
            for i in 0..bits.len() {
                for j in i + 1..bits.len() {
                    if bits[i] == 0 && bits[j] == 1 {
                        from_bits.push((j - i) as u32);
                    }
                }
            }
            let mut direct: Vec<u32> = p.hooks_and_contents().into_iter().flatten().map(|c| c.0).collect();
            from_bits.sort_unstable();
            direct.sort_unstable();
            prop_assert_eq!(from_bits, direct);
        }
    }
}
