//! Profiles, interlacing sequences and their diagrams.
//!
//! A sequence `(λ^0, …, λ^T)` is stored in full. Bit `k` of the profile
//! governs the step `λ^k → λ^{k+1}`: bit 1 means `λ^k / λ^{k+1}` is a
//! horizontal strip, bit 0 means `λ^{k+1} / λ^k` is. Skew plane partitions
//! carry the empty partition at both ends; cylindric partitions repeat
//! `λ^0` at the end.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partition::Partition;
use crate::plane::PlanePartition;
use crate::validate::{Validate, Violation};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Profile {
    bits: Vec<u8>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ProfileError {
    #[error("profile bit {0} is neither 0 nor 1")]
    BadBit(u8),
    #[error("skew profiles must start with 0 and end with 1")]
    BadEndpoints,
    #[error("profile is empty")]
    Empty,
}

impl Profile {
    pub fn new(bits: Vec<u8>) -> Result<Self, ProfileError> {
        if let Some(&b) = bits.iter().find(|&&b| b > 1) {
            return Err(ProfileError::BadBit(b));
        }
        Ok(Self { bits })
    }

    /// A profile `(A_0, …, A_T)` with `A_0 = 0` and `A_T = 1`.
    pub fn skew(bits: Vec<u8>) -> Result<Self, ProfileError> {
        let p = Self::new(bits)?;
        match (p.bits.first(), p.bits.last()) {
            (None, _) => Err(ProfileError::Empty),
            (Some(0), Some(1)) => Ok(p),
            _ => Err(ProfileError::BadEndpoints),
        }
    }

    /// `0^r 1^c`, the profile of plane partitions in an `r × c` box.
    pub fn rectangle(rows: u32, cols: u32) -> Self {
        let mut bits = vec![0; rows as usize];
        bits.extend(std::iter::repeat(1).take(cols as usize));
        Self { bits }
    }

    /// Boundary word of `λ`; see [`Partition::profile_bits`].
    pub fn of_shape(shape: &Partition) -> Self {
        Self {
            bits: shape.profile_bits(),
        }
    }

    pub fn shape(&self) -> Partition {
        Partition::from_profile_bits(&self.bits)
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bit(&self, k: usize) -> u8 {
        self.bits[k]
    }

    /// Every 0/1 word of length `len`.
    pub fn all_words(len: usize) -> Vec<Profile> {
        (0u32..(1 << len))
            .map(|m| Profile {
                bits: (0..len).map(|i| (m >> (len - 1 - i) & 1) as u8).collect(),
            })
            .collect()
    }

    /// Reversed and complemented, the profile of the reversed sequence.
    pub fn reversed(&self) -> Self {
        Self {
            bits: self.bits.iter().rev().map(|b| 1 - b).collect(),
        }
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.bits {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Topology {
    Planar,
    Cylindric,
}

/// True if the step `from → to` is allowed by profile bit `bit`.
pub fn step_allowed(from: &Partition, to: &Partition, bit: u8) -> bool {
    if bit == 1 {
        from.is_horizontal_strip_over(to)
    } else {
        to.is_horizontal_strip_over(from)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InterlacingSequence {
    partitions: Vec<Partition>,
    profile: Profile,
    topology: Topology,
}

impl InterlacingSequence {
    pub fn new(
        partitions: Vec<Partition>,
        profile: Profile,
        topology: Topology,
    ) -> Result<Self, Vec<Violation>> {
        let s = Self {
            partitions,
            profile,
            topology,
        };
        let v = s.violations();
        if v.is_empty() {
            Ok(s)
        } else {
            Err(v)
        }
    }

    pub(crate) fn new_unchecked(
        partitions: Vec<Partition>,
        profile: Profile,
        topology: Topology,
    ) -> Self {
        Self {
            partitions,
            profile,
            topology,
        }
    }

    /// A skew plane partition `(∅, λ^1, …, λ^T, ∅)`.
    pub fn skew(inner: Vec<Partition>, profile: Profile) -> Result<Self, Vec<Violation>> {
        let mut partitions = Vec::with_capacity(inner.len() + 2);
        partitions.push(Partition::empty());
        partitions.extend(inner);
        partitions.push(Partition::empty());
        Self::new(partitions, profile, Topology::Planar)
    }

    /// A cylindric partition `(λ^0, …, λ^{T-1}, λ^0)` of period `T`.
    pub fn cylindric(rays: Vec<Partition>, profile: Profile) -> Result<Self, Vec<Violation>> {
        let mut partitions = rays;
        if let Some(first) = partitions.first().cloned() {
            partitions.push(first);
        }
        Self::new(partitions, profile, Topology::Cylindric)
    }

    /// The diagonals of `π` inside an `rows × cols` box, padded with empty
    /// partitions at both ends.
    pub fn from_plane_partition(pp: &PlanePartition, rows: u32, cols: u32) -> Self {
        let mut partitions = vec![Partition::empty()];
        for x in -(rows as i64 - 1)..=(cols as i64 - 1) {
            partitions.push(pp.diagonal_partition(x));
        }
        partitions.push(Partition::empty());
        Self {
            partitions,
            profile: Profile::rectangle(rows, cols),
            topology: Topology::Planar,
        }
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn profile(&self) -> &Profile {
        &self.profile
    }

    pub fn topology(&self) -> Topology {
        self.topology
    }

    /// Number of distinct rays in the diagram; the repeated end of a
    /// cylindric sequence is not counted.
    pub fn ray_count(&self) -> usize {
        match self.topology {
            Topology::Planar => self.partitions.len(),
            Topology::Cylindric => self.partitions.len().saturating_sub(1),
        }
    }

    /// `Σ |λ^k|`, counting the repeated end of a cylindric sequence once.
    pub fn weight(&self) -> u64 {
        self.partitions[..self.ray_count()]
            .iter()
            .map(Partition::weight)
            .sum()
    }

    pub fn reversed(&self) -> Self {
        Self {
            partitions: self.partitions.iter().rev().cloned().collect(),
            profile: self.profile.reversed(),
            topology: self.topology,
        }
    }

    /// `Λ · M`, gluing on the shared partition.
    pub fn concat(&self, other: &Self) -> Option<Self> {
        if self.partitions.last() != other.partitions.first() || self.topology != Topology::Planar {
            return None;
        }
        let mut partitions = self.partitions.clone();
        partitions.extend(other.partitions[1..].iter().cloned());
        let mut bits = self.profile.bits.clone();
        bits.extend(&other.profile.bits);
        Some(Self {
            partitions,
            profile: Profile { bits },
            topology: Topology::Planar,
        })
    }

    /// `⟨λ⟩ = (∅, λ^1, …, λ)` where `λ^i` keeps the first `i` parts.
    pub fn truncations(lambda: &Partition) -> Self {
        let partitions: Vec<Partition> = (0..=lambda.len())
            .map(|i| Partition::new(lambda.parts()[..i].to_vec()))
            .collect();
        let bits = vec![0; lambda.len()];
        Self {
            partitions,
            profile: Profile { bits },
            topology: Topology::Planar,
        }
    }

    /// Cells `(ray, index)` of the diagram with their values, ray by ray,
    /// largest part first.
    pub fn cells(&self) -> Vec<(usize, usize, u32)> {
        let mut out = Vec::new();
        for (k, p) in self.partitions[..self.ray_count()].iter().enumerate() {
            for (m, &v) in p.parts().iter().enumerate() {
                out.push((k, m + 1, v));
            }
        }
        out
    }

    /// Rook neighbours on ray `k + 1` of cell `(k, m)`. Bit 0 lines the
    /// cell up with indices `m, m+1`; bit 1 with `m-1, m`.
    pub fn forward_neighbours(&self, k: usize, m: usize) -> [Option<usize>; 2] {
        if self.profile.bit(k) == 0 {
            [Some(m), Some(m + 1)]
        } else {
            [Some(m), m.checked_sub(1).filter(|&x| x >= 1)]
        }
    }
}

impl Validate for InterlacingSequence {
    fn violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.partitions.len() != self.profile.len() + 1 {
            out.push(Violation::at_index(
                0,
                format!(
                    "profile of length {} for {} partitions",
                    self.profile.len(),
                    self.partitions.len()
                ),
            ));
            return out;
        }
        for (k, p) in self.partitions.iter().enumerate() {
            for v in p.violations() {
                out.push(Violation::at_index(k, format!("partition: {}", v)));
            }
        }
        for k in 0..self.profile.len() {
            let (a, b) = (&self.partitions[k], &self.partitions[k + 1]);
            if !step_allowed(a, b, self.profile.bit(k)) {
                out.push(Violation::at_index(
                    k,
                    format!(
                        "step {a} -> {b} is not a horizontal strip in direction {}",
                        self.profile.bit(k)
                    ),
                ));
            }
        }
        if self.topology == Topology::Cylindric && self.partitions.first() != self.partitions.last()
        {
            out.push(Violation::at_index(
                0,
                "cylindric sequence must end where it starts",
            ));
        }
        out
    }
}

impl fmt::Display for InterlacingSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.partitions.iter().enumerate() {
            if i > 0 {
                let sym = if self.profile.bit(i - 1) == 0 {
                    "<"
                } else {
                    ">"
                };
                write!(f, " {sym} ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}
