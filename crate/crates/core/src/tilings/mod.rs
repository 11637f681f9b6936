//! Domino tilings of the plane built from the nonintersecting paths of a
//! plane overpartition, local moves, and a boundary check for a fixed shape
//! and bound.
//!
//! Coordinates are `(t, x)`: `t` indexes diagonals and `x` values. Every
//! integer point `(t, x)` is the midpoint of the side shared by a white
//! square centred at `(t + 1/4, x - 1/4)` and a black square centred at
//! `(t - 1/4, x + 1/4)`. A domino is named by its white square and its type.

mod render;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partition::{Entry, Partition};
use crate::plane::PlaneOverpartition;

pub use render::{render, RenderFormat};

/// Direction from the white to the black square.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DominoType {
    /// `(1, 1)`, covers a horizontal edge.
    #[serde(rename = "(1,1)")]
    PlusPlus,
    /// `(-1, -1)`, covers a vertical edge.
    #[serde(rename = "(-1,-1)")]
    MinusMinus,
    /// `(1, -1)`, covers a diagonal edge.
    #[serde(rename = "(1,-1)")]
    PlusMinus,
    /// `(-1, 1)`, away from every path.
    #[serde(rename = "(-1,1)")]
    MinusPlus,
}

impl DominoType {
    pub const ALL: [DominoType; 4] = [
        Self::PlusPlus,
        Self::MinusMinus,
        Self::PlusMinus,
        Self::MinusPlus,
    ];

    pub fn vector(self) -> (i8, i8) {
        match self {
            Self::PlusPlus => (1, 1),
            Self::MinusMinus => (-1, -1),
            Self::PlusMinus => (1, -1),
            Self::MinusPlus => (-1, 1),
        }
    }

    /// Label of the black square paired with the white square at `(t, x)`.
    pub fn black_of(self, (t, x): (i64, i64)) -> (i64, i64) {
        match self {
            Self::PlusPlus => (t + 1, x),
            Self::MinusMinus => (t, x - 1),
            Self::PlusMinus => (t + 1, x - 1),
            Self::MinusPlus => (t, x),
        }
    }
}

impl fmt::Display for DominoType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.vector();
        write!(f, "({a},{b})")
    }
}

/// Integer points `t_min..=t_max` by `x_min..=x_max`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Window {
    pub t_min: i64,
    pub t_max: i64,
    pub x_min: i64,
    pub x_max: i64,
}

impl Window {
    /// `[-ℓ(λ) - 1, λ_1 + 1] × [-1, n + 1]`.
    pub fn for_shape(shape: &Partition, n: u32) -> Self {
        Self {
            t_min: -(shape.len() as i64) - 1,
            t_max: shape.part(1) as i64 + 1,
            x_min: -1,
            x_max: n as i64 + 1,
        }
    }

    /// The smallest window that holds `pop`.
    pub fn fitting(pop: &PlaneOverpartition) -> Self {
        Self::for_shape(&pop.shape(), pop.largest())
    }

    pub fn contains(&self, (t, x): (i64, i64)) -> bool {
        (self.t_min..=self.t_max).contains(&t) && (self.x_min..=self.x_max).contains(&x)
    }

    pub fn is_empty(&self) -> bool {
        self.t_min > self.t_max || self.x_min > self.x_max
    }

    /// Points in `t`-major order.
    pub fn points(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        (self.t_min..=self.t_max).flat_map(move |t| (self.x_min..=self.x_max).map(move |x| (t, x)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Domino {
    pub anchor: (i64, i64),
    pub kind: DominoType,
}

/// One domino for each white square of the window, sorted by anchor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DominoTiling {
    window: Window,
    dominoes: Vec<Domino>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TilingError {
    #[error("window {0:?} does not hold the paths with a margin of one")]
    WindowTooSmall(Window),
    #[error("white square {0:?} has no domino or more than one")]
    WhiteSquare((i64, i64)),
    #[error("black square {0:?} is covered twice")]
    BlackSquare((i64, i64)),
    #[error("tiling is not the image of a plane overpartition")]
    NotInImage,
    #[error("move {0:?} is not legal here")]
    IllegalMove(Move),
}

impl DominoTiling {
    pub fn new(window: Window, mut dominoes: Vec<Domino>) -> Result<Self, TilingError> {
        dominoes.sort();
        let mut it = dominoes.iter();
        for p in window.points() {
            match it.next() {
                Some(d) if d.anchor == p => {}
                _ => return Err(TilingError::WhiteSquare(p)),
            }
        }
        if let Some(d) = it.next() {
            return Err(TilingError::WhiteSquare(d.anchor));
        }
        let mut black = std::collections::HashSet::new();
        for d in &dominoes {
            let b = d.kind.black_of(d.anchor);
            if !black.insert(b) {
                return Err(TilingError::BlackSquare(b));
            }
        }
        Ok(Self { window, dominoes })
    }

    pub fn window(&self) -> Window {
        self.window
    }

    pub fn dominoes(&self) -> &[Domino] {
        &self.dominoes
    }

    fn index(&self, (t, x): (i64, i64)) -> Option<usize> {
        let w = &self.window;
        w.contains((t, x))
            .then(|| ((t - w.t_min) * (w.x_max - w.x_min + 1) + (x - w.x_min)) as usize)
    }

    /// Type of the domino on the white square at `p`.
    pub fn get(&self, p: (i64, i64)) -> Option<DominoType> {
        self.index(p).map(|i| self.dominoes[i].kind)
    }

    /// Type of the domino on the black square at `p`, if its white square
    /// lies in the window.
    pub fn get_black(&self, (t, x): (i64, i64)) -> Option<DominoType> {
        DominoType::ALL.into_iter().find(|&k| {
            let anchor = match k {
                DominoType::PlusPlus => (t - 1, x),
                DominoType::MinusMinus => (t, x + 1),
                DominoType::PlusMinus => (t - 1, x + 1),
                DominoType::MinusPlus => (t, x),
            };
            self.get(anchor) == Some(k)
        })
    }

    /// Anchors whose domino differs between the two tilings.
    pub fn diff(&self, other: &Self) -> Vec<(i64, i64)> {
        if self.window != other.window {
            return self.dominoes.iter().map(|d| d.anchor).collect();
        }
        self.dominoes
            .iter()
            .zip(&other.dominoes)
            .filter(|(a, b)| a != b)
            .map(|(a, _)| a.anchor)
            .collect()
    }

    fn set(&mut self, p: (i64, i64), kind: DominoType) {
        let i = self.index(p).expect("inside the window");
        self.dominoes[i].kind = kind;
    }
}

/// Tiles the window along the paths of `pop`: row `i` comes down the line
/// `t = 1 - i` from above, takes a horizontal edge `(t, v) → (t + 1, v)` for
/// a plain part `v` on diagonal `t` or a diagonal edge `(t, v) → (t + 1,
/// v - 1)` for an overlined one, and leaves downwards on `t = λ_i - i + 1`.
pub fn pop_to_tiling(
    pop: &PlaneOverpartition,
    window: Window,
) -> Result<DominoTiling, TilingError> {
    let need = Window::fitting(pop);
    if window.t_min > need.t_min
        || window.t_max < need.t_max
        || window.x_min > need.x_min
        || window.x_max < need.x_max
    {
        return Err(TilingError::WindowTooSmall(window));
    }
    let mut kinds: BTreeMap<(i64, i64), DominoType> = BTreeMap::new();
    let mut put = |p: (i64, i64), k: DominoType| {
        if window.contains(p) {
            let old = kinds.insert(p, k);
            debug_assert!(old.is_none(), "paths meet at {p:?}");
        }
    };
    for i in 1..=(1 - window.t_min) {
        let row: &[Entry] = pop.rows().get(i as usize - 1).map_or(&[], Vec::as_slice);
        let mut t = 1 - i;
        let mut y = window.x_max;
        for e in row {
            let v = e.value as i64;
            for yy in (v + 1..=y).rev() {
                put((t, yy), DominoType::MinusMinus);
            }
            if e.overlined {
                put((t, v), DominoType::PlusMinus);
                y = v - 1;
            } else {
                put((t, v), DominoType::PlusPlus);
                y = v;
            }
            t += 1;
        }
        for yy in (window.x_min..=y).rev() {
            put((t, yy), DominoType::MinusMinus);
        }
    }
    let dominoes = window
        .points()
        .map(|p| Domino {
            anchor: p,
            kind: kinds.get(&p).copied().unwrap_or(DominoType::MinusPlus),
        })
        .collect();
    DominoTiling::new(window, dominoes)
}

/// Reads plain parts off `(1,1)` dominoes and overlined parts off `(1,-1)`
/// dominoes, then checks that the result tiles back to `tiling`.
pub fn tiling_to_pop(tiling: &DominoTiling) -> Result<PlaneOverpartition, TilingError> {
    let mut diagonals: BTreeMap<i64, Vec<Entry>> = BTreeMap::new();
    for d in tiling.dominoes() {
        let (t, v) = d.anchor;
        let e = match d.kind {
            DominoType::PlusPlus if v >= 1 => Entry::plain(v as u32),
            DominoType::PlusMinus if v >= 1 => Entry::over(v as u32),
            DominoType::PlusPlus | DominoType::PlusMinus => return Err(TilingError::NotInImage),
            _ => continue,
        };
        diagonals.entry(t).or_default().push(e);
    }
    let mut cells: BTreeMap<(usize, usize), Entry> = BTreeMap::new();
    for (t, mut parts) in diagonals {
        parts.sort_by(|a, b| b.cmp(a));
        for (k, e) in parts.into_iter().enumerate() {
            let cell = if t >= 0 {
                (k, k + t as usize)
            } else {
                (k + (-t) as usize, k)
            };
            cells.insert(cell, e);
        }
    }
    let mut rows: Vec<Vec<Entry>> = Vec::new();
    for ((i, j), e) in cells {
        if rows.len() <= i {
            rows.resize(i + 1, Vec::new());
        }
        if rows[i].len() != j {
            return Err(TilingError::NotInImage);
        }
        rows[i].push(e);
    }
    let pop = PlaneOverpartition::new(rows).map_err(|_| TilingError::NotInImage)?;
    match pop_to_tiling(&pop, tiling.window()) {
        Ok(t) if &t == tiling => Ok(pop),
        _ => Err(TilingError::NotInImage),
    }
}

/// Squares whose domino type breaks the boundary conditions for shape `λ`
/// and largest part at most `n`: `(-1,-1)` left of the shape, above `n`
/// on `-ℓ(λ) < t ≤ 0` and below `0` where a path leaves; `(-1,1)` right of
/// the shape, above `n + 1/2` on `0 < t ≤ λ_1` and below `-1/2` elsewhere.
/// Each entry is `(t, x, is_black)`.
pub fn boundary_violations(
    tiling: &DominoTiling,
    shape: &Partition,
    n: u32,
) -> Vec<(i64, i64, bool)> {
    let l = shape.len() as i64;
    let l1 = shape.part(1) as i64;
    let n2 = 2 * n as i64;
    let exits: Vec<i64> = (1..=l + 1)
        .map(|i| shape.part(i as usize) as i64 - i + 1)
        .collect();
    let required = |t: i64, lo: i64, hi: i64| -> Option<DominoType> {
        let exit = t <= -l || exits.contains(&t);
        if t <= -l || (t > -l && t <= 0 && lo >= n2) || (exit && hi <= 0) {
            Some(DominoType::MinusMinus)
        } else if t > l1 || (t > 0 && t <= l1 && lo >= n2 + 1) || (!exit && hi <= -1) {
            Some(DominoType::MinusPlus)
        } else {
            None
        }
    };
    let mut out = Vec::new();
    for (t, x) in tiling.window().points() {
        // the white square meets the line `t` in `(x - 1/2, x)`, the black one in `(x, x + 1/2)`
        for (black, lo, hi, kind) in [
            (false, 2 * x - 1, 2 * x, tiling.get((t, x))),
            (true, 2 * x, 2 * x + 1, tiling.get_black((t, x))),
        ] {
            if let (Some(want), Some(have)) = (required(t, lo, hi), kind) {
                if want != have {
                    out.push((t, x, black));
                }
            }
        }
    }
    out
}

/// Edits at a point `(t, x)` of the 2-dimensional diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "move", rename_all = "snake_case")]
pub enum Move {
    /// Plain `x` on diagonal `t` becomes `x̄`.
    AddOverline { t: i64, x: i64 },
    /// `x̄` on diagonal `t` becomes `x`.
    RemoveOverline { t: i64, x: i64 },
    /// `x̄` on diagonal `t` becomes plain `x - 1`, for `x ≥ 2`.
    RemoveBox { t: i64, x: i64 },
    /// Plain `x - 1` on diagonal `t` becomes `x̄`, for `x ≥ 2`.
    AddBox { t: i64, x: i64 },
}

impl Move {
    pub fn all_at(t: i64, x: i64) -> [Move; 4] {
        [
            Move::AddOverline { t, x },
            Move::RemoveOverline { t, x },
            Move::RemoveBox { t, x },
            Move::AddBox { t, x },
        ]
    }

    /// `(anchor, before, after)` for the two dominoes that change.
    fn pattern(self) -> [((i64, i64), DominoType, DominoType); 2] {
        use DominoType::*;
        match self {
            Move::AddOverline { t, x } => [
                ((t, x), PlusPlus, PlusMinus),
                ((t + 1, x), MinusMinus, MinusPlus),
            ],
            Move::RemoveOverline { t, x } => [
                ((t, x), PlusMinus, PlusPlus),
                ((t + 1, x), MinusPlus, MinusMinus),
            ],
            Move::RemoveBox { t, x } => [
                ((t, x), PlusMinus, MinusMinus),
                ((t, x - 1), MinusPlus, PlusPlus),
            ],
            Move::AddBox { t, x } => [
                ((t, x), MinusMinus, PlusMinus),
                ((t, x - 1), PlusPlus, MinusPlus),
            ],
        }
    }
}

/// Swaps the two dominoes of `mv`. A move that would put a part on the
/// top row of the window is rejected along with box moves at `x < 2`.
pub fn local_move(tiling: &DominoTiling, mv: Move) -> Result<DominoTiling, TilingError> {
    let illegal = Err(TilingError::IllegalMove(mv));
    match mv {
        Move::RemoveBox { x, .. } if x < 2 => return illegal,
        Move::AddBox { x, .. } if x < 2 || x >= tiling.window().x_max => return illegal,
        _ => {}
    }
    let pat = mv.pattern();
    if pat
        .iter()
        .any(|&(p, before, _)| tiling.get(p) != Some(before))
    {
        return illegal;
    }
    let mut out = tiling.clone();
    for (p, _, after) in pat {
        out.set(p, after);
    }
    Ok(out)
}

/// The same edit applied to the plane overpartition.
pub fn apply_move_to_pop(pop: &PlaneOverpartition, mv: Move) -> Option<PlaneOverpartition> {
    let (t, x, from, to) = match mv {
        Move::AddOverline { t, x } => (t, x, Entry::plain(x as u32), Entry::over(x as u32)),
        Move::RemoveOverline { t, x } => (t, x, Entry::over(x as u32), Entry::plain(x as u32)),
        Move::RemoveBox { t, x } if x >= 2 => {
            (t, x, Entry::over(x as u32), Entry::plain(x as u32 - 1))
        }
        Move::AddBox { t, x } if x >= 2 => {
            (t, x, Entry::plain(x as u32 - 1), Entry::over(x as u32))
        }
        _ => return None,
    };
    if x < 1 {
        return None;
    }
    let rows = pop.rows();
    for (i, row) in rows.iter().enumerate() {
        let j = i as i64 + t;
        if j < 0 {
            continue;
        }
        if row.get(j as usize) == Some(&from) {
            let mut new = rows.to_vec();
            new[i][j as usize] = to;
            return PlaneOverpartition::new(new).ok();
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pop(s: &str) -> PlaneOverpartition {
        PlaneOverpartition::parse(s).unwrap()
    }

    #[test]
    fn empty_pop_has_only_lines_and_fill() {
        let w = Window::for_shape(&Partition::empty(), 2);
        let t = pop_to_tiling(&PlaneOverpartition::empty(), w).unwrap();
        for d in t.dominoes() {
            let expected = if d.anchor.0 <= 0 {
                DominoType::MinusMinus
            } else {
                DominoType::MinusPlus
            };
            assert_eq!(d.kind, expected, "{:?}", d.anchor);
        }
        assert_eq!(tiling_to_pop(&t).unwrap(), PlaneOverpartition::empty());
    }

    #[test]
    fn single_cell() {
        let p = pop("2");
        let t = pop_to_tiling(&p, Window::fitting(&p)).unwrap();
        assert_eq!(t.get((0, 2)), Some(DominoType::PlusPlus));
        assert_eq!(t.get((1, 2)), Some(DominoType::MinusMinus));
        assert_eq!(t.get((0, 3)), Some(DominoType::MinusMinus));
        assert_eq!(t.get((0, 1)), Some(DominoType::MinusPlus));
        let q = pop("2'");
        let tq = pop_to_tiling(&q, Window::fitting(&p)).unwrap();
        assert_eq!(tq.get((0, 2)), Some(DominoType::PlusMinus));
        assert_eq!(tq.get((1, 2)), Some(DominoType::MinusPlus));
        assert_eq!(t.diff(&tq), vec![(0, 2), (1, 2)]);
    }

    #[test]
    fn window_too_small() {
        let p = pop("3 1");
        let mut w = Window::fitting(&p);
        w.x_max -= 1;
        assert_eq!(pop_to_tiling(&p, w), Err(TilingError::WindowTooSmall(w)));
    }

    #[test]
    fn worked_instance_meets_boundary() {
        let p = pop("7 4 3' 2 2'/3 3 3' 2'/3' 2 1'/2");
        let shape = p.shape();
        let t = pop_to_tiling(&p, Window::for_shape(&shape, 7)).unwrap();
        assert!(boundary_violations(&t, &shape, 7).is_empty());
        assert!(!boundary_violations(&t, &shape, 6).is_empty());
        assert_eq!(tiling_to_pop(&t).unwrap(), p);
    }

    #[test]
    fn overline_moves_invert() {
        let p = pop("3 1/2");
        let w = Window::fitting(&p);
        let t = pop_to_tiling(&p, w).unwrap();
        let mv = Move::AddOverline { t: 0, x: 3 };
        let t2 = local_move(&t, mv).unwrap();
        assert_eq!(t2, pop_to_tiling(&pop("3' 1/2"), w).unwrap());
        assert_eq!(
            local_move(&t2, Move::RemoveOverline { t: 0, x: 3 }).unwrap(),
            t
        );
        assert!(local_move(&t, Move::RemoveOverline { t: 0, x: 3 }).is_err());
    }

    #[test]
    fn rejects_foreign_tiling() {
        let p = pop("2");
        let mut t = pop_to_tiling(&p, Window::fitting(&p)).unwrap();
        t.set((0, 2), DominoType::MinusPlus);
        assert!(tiling_to_pop(&t).is_err());
    }
}
