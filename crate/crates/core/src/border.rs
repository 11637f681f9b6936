//! Connected components, levels and border components.
//!
//! Both plane partitions and interlacing diagrams are reduced to a small
//! cell graph: rook adjacency (with a winding number for edges that cross
//! the seam of a cylinder) and the successor of each cell along its
//! diagonal. Everything else is computed on that graph.

use std::collections::VecDeque;

use serde::Serialize;
use thiserror::Error;

use crate::coeff::TPoly;
use crate::interlacing::{InterlacingSequence, Topology};
use crate::plane::PlanePartition;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BorderError {
    #[error("cylindric topology requested for a planar object")]
    NotCylindric,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BorderComponent {
    /// Cell coordinates: `(i, j)` for plane partitions, `(ray, index)` for
    /// interlacing diagrams.
    pub cells: Vec<(usize, usize)>,
    pub value: u32,
    pub level: u32,
    /// Index of the connected component this border component lies in.
    pub parent: usize,
    /// Set when the component winds around the cylinder; such components
    /// carry no weight.
    pub wraps: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BorderDecomposition {
    pub components: Vec<BorderComponent>,
    pub connected_components: usize,
}

struct CellGraph {
    coords: Vec<(usize, usize)>,
    values: Vec<u32>,
    /// `(neighbour, winding)`; the reverse edge carries `-winding`.
    adj: Vec<Vec<(usize, i32)>>,
    diag_next: Vec<Option<usize>>,
}

impl CellGraph {
    fn new(coords: Vec<(usize, usize)>, values: Vec<u32>) -> Self {
        let n = coords.len();
        Self {
            coords,
            values,
            adj: vec![Vec::new(); n],
            diag_next: vec![None; n],
        }
    }

    fn link(&mut self, a: usize, b: usize, winding: i32) {
        self.adj[a].push((b, winding));
        self.adj[b].push((a, -winding));
    }

    fn decompose(&self) -> BorderDecomposition {
        let n = self.values.len();
        // connected components of equal values
        let mut comp = vec![usize::MAX; n];
        let mut ncomp = 0;
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = ncomp;
            let mut queue = VecDeque::from([s]);
            while let Some(c) = queue.pop_front() {
                for &(d, _) in &self.adj[c] {
                    if comp[d] == usize::MAX && self.values[d] == self.values[c] {
                        comp[d] = ncomp;
                        queue.push_back(d);
                    }
                }
            }
            ncomp += 1;
        }
        let level: Vec<u32> = (0..n)
            .map(|c| {
                let mut h = 1;
                let mut cur = self.diag_next[c];
                while let Some(d) = cur {
                    if comp[d] != comp[c] {
                        break;
                    }
                    h += 1;
                    cur = self.diag_next[d];
                }
                h
            })
            .collect();
        let mut seen = vec![false; n];
        let mut lift = vec![0i64; n];
        let mut components = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut cells = vec![s];
            let mut wraps = false;
            let mut queue = VecDeque::from([s]);
            while let Some(c) = queue.pop_front() {
                for &(d, w) in &self.adj[c] {
                    if comp[d] != comp[c] || level[d] != level[c] {
                        continue;
                    }
                    let l = lift[c] + w as i64;
                    if seen[d] {
                        wraps |= lift[d] != l;
                    } else {
                        seen[d] = true;
                        lift[d] = l;
                        cells.push(d);
                        queue.push_back(d);
                    }
                }
            }
            cells.sort_unstable();
            components.push(BorderComponent {
                cells: cells.iter().map(|&c| self.coords[c]).collect(),
                value: self.values[s],
                level: level[s],
                parent: comp[s],
                wraps,
            });
        }
        BorderDecomposition {
            components,
            connected_components: ncomp,
        }
    }
}

/// Border components of a plane partition, cells indexed by `(i, j)`.
pub fn plane_border_decomposition(pp: &PlanePartition) -> BorderDecomposition {
    let mut coords = Vec::new();
    let mut values = Vec::new();
    let mut index = Vec::new();
    for (i, row) in pp.rows().iter().enumerate() {
        let mut r = Vec::with_capacity(row.len());
        for (j, &v) in row.iter().enumerate() {
            r.push(coords.len());
            coords.push((i + 1, j + 1));
            values.push(v);
        }
        index.push(r);
    }
    let mut g = CellGraph::new(coords, values);
    for i in 0..index.len() {
        for j in 0..index[i].len() {
            let c = index[i][j];
            if j + 1 < index[i].len() {
                g.link(c, index[i][j + 1], 0);
            }
            if let Some(&d) = index.get(i + 1).and_then(|r| r.get(j)) {
                g.link(c, d, 0);
            }
            g.diag_next[c] = index.get(i + 1).and_then(|r| r.get(j + 1)).copied();
        }
    }
    g.decompose()
}

/// Border components of an interlacing diagram, cells indexed by
/// `(ray, index)`. Cylindric topology identifies the last ray with the
/// first and tracks winding around the seam.
pub fn border_decomposition(
    seq: &InterlacingSequence,
    topology: Topology,
) -> Result<BorderDecomposition, BorderError> {
    if topology == Topology::Cylindric && seq.topology() != Topology::Cylindric {
        return Err(BorderError::NotCylindric);
    }
    let cells = seq.cells();
    let rays = seq.ray_count();
    let mut index: Vec<Vec<usize>> = vec![Vec::new(); rays];
    let mut coords = Vec::with_capacity(cells.len());
    let mut values = Vec::with_capacity(cells.len());
    for (n, &(k, m, v)) in cells.iter().enumerate() {
        index[k].push(n);
        coords.push((k, m));
        values.push(v);
    }
    let mut g = CellGraph::new(coords, values);
    let cyl = topology == Topology::Cylindric;
    let transitions = if cyl { rays } else { rays.saturating_sub(1) };
    for k in 0..transitions {
        let (next, winding) = if k + 1 == rays { (0, 1) } else { (k + 1, 0) };
        for m in 1..=index[k].len() {
            let c = index[k][m - 1];
            for nm in seq.forward_neighbours(k, m).into_iter().flatten() {
                if let Some(&d) = index[next].get(nm - 1) {
                    g.link(c, d, winding);
                }
            }
        }
    }
    for ray in &index {
        for w in ray.windows(2) {
            g.diag_next[w[0]] = Some(w[1]);
        }
    }
    Ok(g.decompose())
}

impl BorderDecomposition {
    /// Counts `n_h` of non-wrapping border components of each level `h`.
    pub fn level_census(&self) -> Vec<(u32, u32)> {
        let mut counts = std::collections::BTreeMap::new();
        for c in self.components.iter().filter(|c| !c.wraps) {
            *counts.entry(c.level).or_insert(0u32) += 1;
        }
        counts.into_iter().collect()
    }

    /// True if the levels in each connected component form `{1, …, max}`.
    pub fn levels_gap_free(&self) -> bool {
        let mut per: std::collections::BTreeMap<usize, std::collections::BTreeSet<u32>> =
            Default::default();
        for c in &self.components {
            per.entry(c.parent).or_default().insert(c.level);
        }
        per.values()
            .all(|s| s.iter().copied().eq(1..=s.len() as u32))
    }
}

/// `∏_h (1 - t^h)^{n_h}` over the non-wrapping border components.
pub fn a_poly(dec: &BorderDecomposition) -> TPoly {
    let mut acc = TPoly::one();
    for (h, n) in dec.level_census() {
        acc = &acc * &TPoly::one_minus_t_pow(h).pow(n);
    }
    acc
}

/// `A_Π(t)` of a plane partition.
pub fn plane_a_poly(pp: &PlanePartition) -> TPoly {
    a_poly(&plane_border_decomposition(pp))
}

/// `A_Λ(t)` (planar) or `A^cyl_Λ(t)` (cylindric).
pub fn sequence_a_poly(seq: &InterlacingSequence) -> TPoly {
    a_poly(&border_decomposition(seq, seq.topology()).expect("topology matches the sequence"))
}
