//! Exactly-uniform random generation of standard tableaux.
//!
//! Labels `size, size-1, ..., 1` are placed by repeatedly deleting a
//! removable corner `u` of the current shape with probability
//! `count(shape \ u) / count(shape)`; the product of those ratios telescopes
//! to `1 / count(shape)` for every filling, so the output is exactly uniform
//! no matter how the ratios are evaluated.
//!
//! The ratio for a corner is a short product of hook quotients
//! `h / (h - 1)` over the cells whose hook shrinks when the corner goes: the
//! rest of the corner's row and column and, for shifted diagrams, the column
//! `row - 1` whose cells count the removed row in their hooks. Shapes up to
//! [`EXACT_SIZE_LIMIT`] cells evaluate these weights as exact rationals from
//! scratch at every step. Larger shapes keep all corner weights as `f64` and
//! update them incrementally: deleting corner `v` changes at most two hook
//! factors inside the weight of any other corner, so a step costs O(corners)
//! instead of O(corners * perimeter).

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, ToPrimitive};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::count::BigRatio;
use crate::error::{Error, Result};
use crate::partition::{Cell, DiagramKind, Partition};
use crate::tableau::Tableau;

/// Largest shape sampled with exact rational corner weights.
pub const EXACT_SIZE_LIMIT: u64 = 400;

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e3779b97f4a7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d049bb133111eb);
    x ^ (x >> 31)
}

/// Seeded random stream with a reproducibility contract: the same seed
/// always yields the same sample sequence.
#[derive(Debug, Clone)]
pub struct RngState {
    seed: u64,
    draws: u64,
    rng: ChaCha8Rng,
}

impl RngState {
    pub fn new(seed: u64) -> Self {
        RngState {
            seed,
            draws: 0,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Per-sample stream `hash(master_seed, index)`, so parallel harnesses
    /// produce output independent of worker count and schedule.
    pub fn derive(master_seed: u64, index: u64) -> Self {
        RngState::new(splitmix64(splitmix64(master_seed) ^ splitmix64(index.wrapping_add(1))))
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Number of variates drawn so far.
    pub fn position(&self) -> u64 {
        self.draws
    }

    /// Uniform draw from `[0, 1)` with 53 random bits.
    pub fn next_unit(&mut self) -> f64 {
        self.draws += 1;
        (self.rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

/// Mutable shape during corner removal. Column counts are maintained so
/// hooks evaluate in O(1): both diagram kinds are top-justified, so column
/// `j` always consists of rows `1 ..= col[j]`.
struct ShapeState {
    kind: DiagramKind,
    parts: Vec<u32>,
    col: Vec<u32>,
    size: u64,
}

impl ShapeState {
    fn new(p: &Partition, kind: DiagramKind) -> Self {
        let max_col = p.row_end(kind, 1);
        let col = (1..=max_col).map(|j| p.column_height(kind, j)).collect();
        ShapeState {
            kind,
            parts: p.parts().to_vec(),
            col,
            size: p.size(),
        }
    }

    fn part(&self, i: u32) -> u32 {
        if i == 0 {
            return 0;
        }
        self.parts.get(i as usize - 1).copied().unwrap_or(0)
    }

    fn colcount(&self, j: u32) -> u32 {
        self.col.get(j as usize - 1).copied().unwrap_or(0)
    }

    fn rows(&self) -> u32 {
        self.parts.len() as u32
    }

    fn hook(&self, i: u32, j: u32) -> u64 {
        let p = self.part(i) as u64;
        let k = self.colcount(j) as u64;
        match self.kind {
            DiagramKind::Ordinary => p - j as u64 + k - i as u64 + 1,
            DiagramKind::Shifted => p - (j - i) as u64 + k - i as u64 + self.part(j + 1) as u64,
        }
    }

    fn corner_col(&self, r: u32) -> u32 {
        match self.kind {
            DiagramKind::Ordinary => self.part(r),
            DiagramKind::Shifted => r + self.part(r) - 1,
        }
    }

    fn is_removable(&self, r: u32) -> bool {
        let p = self.part(r);
        if p == 0 {
            return false;
        }
        match self.kind {
            DiagramKind::Ordinary => p > self.part(r + 1),
            // The last row of a shifted diagram is always removable; an inner
            // row needs a gap of two to stay strict.
            DiagramKind::Shifted => r == self.rows() || p >= self.part(r + 1) + 2,
        }
    }

    /// Cells whose hook drops by one when the corner of row `r` (column `c`)
    /// is deleted.
    fn affected_cells(&self, r: u32, c: u32) -> Vec<Cell> {
        let row_first = match self.kind {
            DiagramKind::Ordinary => 1,
            DiagramKind::Shifted => r,
        };
        let mut cells = Vec::with_capacity((c - row_first) as usize + 2 * r as usize);
        for j in row_first..c {
            cells.push(Cell::new(r, j));
        }
        for i in 1..r {
            cells.push(Cell::new(i, c));
        }
        if self.kind == DiagramKind::Shifted && r >= 2 {
            for i in 1..r {
                cells.push(Cell::new(i, r - 1));
            }
        }
        cells
    }

    fn weight_f64(&self, r: u32, c: u32) -> f64 {
        let mut w = 1.0;
        for cell in self.affected_cells(r, c) {
            let h = self.hook(cell.row, cell.col);
            w *= h as f64 / (h - 1) as f64;
        }
        w
    }

    fn weight_exact(&self, r: u32, c: u32) -> BigRatio {
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for cell in self.affected_cells(r, c) {
            let h = self.hook(cell.row, cell.col);
            num *= BigInt::from(h);
            den *= BigInt::from(h - 1);
        }
        Ratio::new(num, den)
    }

    /// Deletes the corner cell of row `r`, keeping parts and column counts
    /// consistent. Returns the deleted cell.
    fn remove_corner(&mut self, r: u32) -> Cell {
        debug_assert!(self.is_removable(r));
        let c = self.corner_col(r);
        self.parts[r as usize - 1] -= 1;
        if self.parts[r as usize - 1] == 0 {
            debug_assert_eq!(r, self.rows());
            self.parts.pop();
        }
        self.col[c as usize - 1] -= 1;
        self.size -= 1;
        Cell::new(r, c)
    }

    fn removable_rows(&self) -> Vec<u32> {
        (1..=self.rows()).filter(|&r| self.is_removable(r)).collect()
    }
}

/// Exact removal probabilities for every removable corner, in row-major
/// order. The probabilities sum to 1 exactly.
pub fn corner_probabilities(p: &Partition, kind: DiagramKind) -> Result<Vec<(Cell, BigRatio)>> {
    if kind == DiagramKind::Shifted && !p.is_strict() {
        return Err(Error::ShiftedOfNonStrict);
    }
    if p.is_empty() {
        return Err(Error::EmptyShape);
    }
    let state = ShapeState::new(p, kind);
    let size = BigRatio::from_integer(BigInt::from(state.size));
    let out: Vec<(Cell, BigRatio)> = state
        .removable_rows()
        .into_iter()
        .map(|r| {
            let c = state.corner_col(r);
            (Cell::new(r, c), state.weight_exact(r, c) / &size)
        })
        .collect();
    debug_assert_eq!(
        out.iter().map(|(_, p)| p.clone()).sum::<BigRatio>(),
        BigRatio::one(),
        "corner probabilities sum to one"
    );
    Ok(out)
}

/// Floating-point corner probabilities computed the same way the large-shape
/// sampler seeds its weights; exposed for the exact-versus-float validation.
pub fn corner_probabilities_f64(p: &Partition, kind: DiagramKind) -> Result<Vec<(Cell, f64)>> {
    if kind == DiagramKind::Shifted && !p.is_strict() {
        return Err(Error::ShiftedOfNonStrict);
    }
    if p.is_empty() {
        return Err(Error::EmptyShape);
    }
    let state = ShapeState::new(p, kind);
    let weights: Vec<(Cell, f64)> = state
        .removable_rows()
        .into_iter()
        .map(|r| {
            let c = state.corner_col(r);
            (Cell::new(r, c), state.weight_f64(r, c))
        })
        .collect();
    let total: f64 = weights.iter().map(|(_, w)| w).sum();
    Ok(weights.into_iter().map(|(cell, w)| (cell, w / total)).collect())
}

fn build_tableau(shape: &Partition, kind: DiagramKind, placements: &[(u32, Cell)]) -> Tableau {
    let mut rows: Vec<Vec<u32>> = (1..=shape.length())
        .map(|i| vec![0; shape.part(i) as usize])
        .collect();
    for &(label, cell) in placements {
        let off = (cell.col - shape.row_start(kind, cell.row)) as usize;
        rows[cell.row as usize - 1][off] = label;
    }
    if cfg!(debug_assertions) {
        Tableau::from_rows(kind, rows).expect("sampled filling is standard")
    } else {
        Tableau::from_rows_unchecked(kind, rows)
    }
}

fn sample_exact(shape: &Partition, kind: DiagramKind, rng: &mut RngState) -> Tableau {
    let mut state = ShapeState::new(shape, kind);
    let mut placements = Vec::with_capacity(state.size as usize);
    while state.size > 0 {
        let rows = state.removable_rows();
        let weights: Vec<BigRatio> = rows
            .iter()
            .map(|&r| state.weight_exact(r, state.corner_col(r)))
            .collect();
        let total: BigRatio = weights.iter().cloned().sum();
        debug_assert_eq!(total, BigRatio::from_integer(BigInt::from(state.size)));
        let x = rng.next_unit();
        let total_f = total.to_f64().unwrap_or(state.size as f64);
        let mut chosen = rows.len() - 1;
        let mut cum = 0.0;
        for (idx, w) in weights.iter().enumerate() {
            cum += w.to_f64().unwrap_or(0.0) / total_f;
            if x < cum {
                chosen = idx;
                break;
            }
        }
        let label = state.size as u32;
        let cell = state.remove_corner(rows[chosen]);
        placements.push((label, cell));
    }
    build_tableau(shape, kind, &placements)
}

#[derive(Clone, Copy)]
struct Corner {
    row: u32,
    col: u32,
    weight: f64,
}

/// One incremental update pass after corner `v` has been deleted from
/// `state`: every surviving corner's weight picks up the changed hook
/// factors, then rows `v.row` and `v.row - 1` are re-examined for corners
/// born by the deletion.
fn refresh_corners(state: &ShapeState, corners: &mut Vec<Corner>, v: Corner) {
    let shifted = state.kind == DiagramKind::Shifted;
    for u in corners.iter_mut() {
        let (a, b) = if u.row < v.row {
            (Cell::new(u.row, v.col), Cell::new(u.row, v.row - 1))
        } else {
            (Cell::new(v.row, u.col), Cell::new(v.row, u.row - 1))
        };
        let h = state.hook(a.row, a.col);
        u.weight *= (h * h) as f64 / ((h + 1) * (h - 1)) as f64;
        if shifted {
            let h = state.hook(b.row, b.col);
            u.weight *= (h * h) as f64 / ((h + 1) * (h - 1)) as f64;
        }
    }
    for r in [v.row, v.row.wrapping_sub(1)] {
        if r == 0 || r > state.rows() || !state.is_removable(r) {
            continue;
        }
        if corners.iter().any(|c| c.row == r) {
            continue;
        }
        let c = state.corner_col(r);
        let corner = Corner { row: r, col: c, weight: state.weight_f64(r, c) };
        let pos = corners.partition_point(|x| x.row < r);
        corners.insert(pos, corner);
    }
}

fn sample_float(shape: &Partition, kind: DiagramKind, rng: &mut RngState) -> Tableau {
    let mut state = ShapeState::new(shape, kind);
    let mut corners: Vec<Corner> = state
        .removable_rows()
        .into_iter()
        .map(|r| {
            let c = state.corner_col(r);
            Corner { row: r, col: c, weight: state.weight_f64(r, c) }
        })
        .collect();
    let mut placements = Vec::with_capacity(state.size as usize);

    while state.size > 0 {
        let total: f64 = corners.iter().map(|c| c.weight).sum();
        debug_assert!(
            (total - state.size as f64).abs() <= state.size as f64 * 1e-6,
            "corner weights drifted: total={total} size={}",
            state.size
        );
        let x = rng.next_unit() * total;
        let mut chosen = corners.len() - 1;
        let mut cum = 0.0;
        for (idx, c) in corners.iter().enumerate() {
            cum += c.weight;
            if x < cum {
                chosen = idx;
                break;
            }
        }
        let v = corners[chosen];
        let label = state.size as u32;
        let cell = state.remove_corner(v.row);
        placements.push((label, cell));
        corners.remove(chosen);
        refresh_corners(&state, &mut corners, v);
    }
    build_tableau(shape, kind, &placements)
}

/// Draws a tableau exactly uniformly among all standard fillings of the
/// shape. Deterministic in the seed; the empty shape yields the empty
/// tableau.
pub fn sample_tableau(p: &Partition, kind: DiagramKind, rng: &mut RngState) -> Result<Tableau> {
    if kind == DiagramKind::Shifted && !p.is_strict() {
        return Err(Error::ShiftedOfNonStrict);
    }
    if p.is_empty() {
        return Ok(Tableau::empty(kind));
    }
    Ok(if p.size() <= EXACT_SIZE_LIMIT {
        sample_exact(p, kind, rng)
    } else {
        sample_float(p, kind, rng)
    })
}

/// Uniform shifted staircase tableau of order `n`.
pub fn sample_staircase_tableau(n: u32, rng: &mut RngState) -> Tableau {
    sample_tableau(&Partition::staircase(n), DiagramKind::Shifted, rng).expect("staircase is strict")
}
