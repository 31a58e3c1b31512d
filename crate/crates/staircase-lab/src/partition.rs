//! Partitions, Young diagrams and shifted Young diagrams.
//!
//! Cells use 1-based matrix (English) convention: `(row, col)` with row 1 on
//! top. Cells of a shifted diagram are stored at their true shifted column,
//! so row `i` of a strict partition occupies columns `i ..= i + part_i - 1`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Selects between the ordinary Young diagram and the shifted one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DiagramKind {
    Ordinary,
    Shifted,
}

impl fmt::Display for DiagramKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagramKind::Ordinary => write!(f, "ordinary"),
            DiagramKind::Shifted => write!(f, "shifted"),
        }
    }
}

/// A cell of a diagram, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: u32,
    pub col: u32,
}

impl Cell {
    pub fn new(row: u32, col: u32) -> Self {
        debug_assert!(row >= 1 && col >= 1);
        Cell { row, col }
    }

    pub fn north(self) -> Option<Cell> {
        (self.row > 1).then(|| Cell::new(self.row - 1, self.col))
    }

    pub fn west(self) -> Option<Cell> {
        (self.col > 1).then(|| Cell::new(self.row, self.col - 1))
    }

    pub fn east(self) -> Cell {
        Cell::new(self.row, self.col + 1)
    }

    pub fn south(self) -> Cell {
        Cell::new(self.row + 1, self.col)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A weakly decreasing sequence of positive integers.
///
/// The empty partition is a first-class value; it shows up as the base case
/// of complements and of sums over sub-diagrams.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::InvalidPartition(format!("{:?}", parts)));
            }
        }
        if parts.last().is_some_and(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!("{:?}", parts)));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// The staircase `(n-1, n-2, ..., 1)`.
    pub fn staircase(n: u32) -> Self {
        Partition {
            parts: (1..n).rev().collect(),
        }
    }

    /// The rectangle `(width^height)`, i.e. `height` rows of length `width`.
    pub fn rectangle(height: u32, width: u32) -> Self {
        if height == 0 || width == 0 {
            return Partition::empty();
        }
        Partition {
            parts: vec![width; height as usize],
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// `part(i)` for 1-based `i`, zero beyond the length.
    pub fn part(&self, i: u32) -> u32 {
        if i == 0 {
            return 0;
        }
        self.parts.get(i as usize - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Number of parts, the paper's `l(lambda)`.
    pub fn length(&self) -> u32 {
        self.parts.len() as u32
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn is_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    pub fn is_rectangle(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] == w[1])
    }

    /// Returns `n` when this partition equals the staircase of order `n`.
    pub fn staircase_order(&self) -> Option<u32> {
        let n = self.length() + 1;
        (*self == Partition::staircase(n)).then_some(n)
    }

    /// First column of row `i` in the given kind.
    pub fn row_start(&self, kind: DiagramKind, i: u32) -> u32 {
        match kind {
            DiagramKind::Ordinary => 1,
            DiagramKind::Shifted => i,
        }
    }

    /// Last column of row `i`, or 0 if the row is absent.
    pub fn row_end(&self, kind: DiagramKind, i: u32) -> u32 {
        let p = self.part(i);
        if p == 0 {
            0
        } else {
            self.row_start(kind, i) + p - 1
        }
    }

    pub fn contains_cell(&self, kind: DiagramKind, cell: Cell) -> bool {
        let p = self.part(cell.row);
        p > 0 && cell.col >= self.row_start(kind, cell.row) && cell.col <= self.row_end(kind, cell.row)
    }

    /// Number of cells in column `j`. Both diagram kinds are top-justified,
    /// so column `j` consists of rows `1 ..= column_height(j)`.
    pub fn column_height(&self, kind: DiagramKind, j: u32) -> u32 {
        match kind {
            DiagramKind::Ordinary => self.parts.iter().take_while(|&&p| p >= j).count() as u32,
            DiagramKind::Shifted => self
                .parts
                .iter()
                .enumerate()
                .take_while(|&(i, &p)| {
                    let row = i as u32 + 1;
                    row <= j && row + p - 1 >= j
                })
                .count() as u32,
        }
    }

    /// The conjugate partition; an involution.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(1);
        let parts = (1..=cols)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// All cells of the diagram in row-major order.
    pub fn cells(&self, kind: DiagramKind) -> Result<Vec<Cell>> {
        if kind == DiagramKind::Shifted && !self.is_strict() {
            return Err(Error::ShiftedOfNonStrict);
        }
        let mut out = Vec::with_capacity(self.size() as usize);
        for i in 1..=self.length() {
            for j in self.row_start(kind, i)..=self.row_end(kind, i) {
                out.push(Cell::new(i, j));
            }
        }
        Ok(out)
    }

    /// Hook length of `cell`.
    ///
    /// Ordinary: arm + leg + 1. Shifted: arm + cells weakly below in the
    /// column + the length of row `col + 1` (zero when that row is absent),
    /// which reproduces the standard shifted hook lengths.
    pub fn hook_length(&self, kind: DiagramKind, cell: Cell) -> Result<u64> {
        if kind == DiagramKind::Shifted && !self.is_strict() {
            return Err(Error::ShiftedOfNonStrict);
        }
        if !self.contains_cell(kind, cell) {
            return Err(Error::CellOutOfShape(cell.row, cell.col));
        }
        let (i, j) = (cell.row, cell.col);
        let arm = (self.row_end(kind, i) - j) as u64;
        let height = self.column_height(kind, j) as u64;
        let below_weak = height - i as u64 + 1;
        Ok(match kind {
            DiagramKind::Ordinary => arm + below_weak,
            DiagramKind::Shifted => arm + below_weak + self.part(j + 1) as u64,
        })
    }

    /// Diagram containment; the condition is the same rowwise test for both
    /// kinds since shifted rows of both diagrams start at the same column.
    pub fn contains(&self, inner: &Partition) -> bool {
        (1..=inner.length()).all(|i| inner.part(i) <= self.part(i))
    }

    pub fn into_strict(self) -> Result<StrictPartition> {
        StrictPartition::new(self.parts)
    }
}

impl fmt::Display for Partition {
    /// Comma-separated parts; the empty partition is the empty string.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// A strictly decreasing partition, the shapes that carry shifted diagrams.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StrictPartition(Partition);

impl StrictPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let p = Partition::new(parts)?;
        if !p.is_strict() {
            return Err(Error::ShiftedOfNonStrict);
        }
        Ok(StrictPartition(p))
    }

    pub fn staircase(n: u32) -> Self {
        StrictPartition(Partition::staircase(n))
    }

    pub fn as_partition(&self) -> &Partition {
        &self.0
    }

    pub fn parts(&self) -> &[u32] {
        self.0.parts()
    }

    pub fn part(&self, i: u32) -> u32 {
        self.0.part(i)
    }

    pub fn size(&self) -> u64 {
        self.0.size()
    }

    pub fn length(&self) -> u32 {
        self.0.length()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for StrictPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.parse::<Partition>()?.into_strict()
    }
}

impl From<StrictPartition> for Partition {
    fn from(p: StrictPartition) -> Partition {
        p.0
    }
}

/// The shift-symmetric partition of a strict partition: the union of the
/// shifted diagram pushed one column right with its transpose.
///
/// Row `r` comes out as `part_r + r` while the shifted diagram still has a
/// row `r`, and as the height of column `r` of the shifted diagram after
/// that; `|result| = 2 |input|`.
pub fn shift_symmetric(p: &StrictPartition) -> Partition {
    let ell = p.length();
    let max_col = p.part(1); // shifted row 1 ends at column part(1)
    let mut parts = Vec::new();
    for r in 1..=ell {
        parts.push(p.part(r) + r);
    }
    for r in ell + 1..=max_col {
        parts.push(p.as_partition().column_height(DiagramKind::Shifted, r));
    }
    while parts.last() == Some(&0) {
        parts.pop();
    }
    Partition { parts }
}

/// All partitions of exactly `k`, parts bounded by `max_part` (0 = no bound).
pub fn partitions_of_size(k: u64, max_part: u32) -> Vec<Partition> {
    let bound = if max_part == 0 { k as u32 } else { max_part.min(k as u32) };
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fn rec(out: &mut Vec<Partition>, stack: &mut Vec<u32>, remaining: u64, max: u32) {
        if remaining == 0 {
            out.push(Partition { parts: stack.clone() });
            return;
        }
        for p in (1..=max.min(remaining as u32)).rev() {
            stack.push(p);
            rec(out, stack, remaining - p as u64, p);
            stack.pop();
        }
    }
    rec(&mut out, &mut stack, k, bound);
    out
}

/// All partitions whose diagram fits inside the `height x width` box.
pub fn partitions_in_box(height: u32, width: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fn rec(out: &mut Vec<Partition>, stack: &mut Vec<u32>, rows_left: u32, max: u32) {
        out.push(Partition { parts: stack.clone() });
        if rows_left == 0 {
            return;
        }
        for p in (1..=max).rev() {
            stack.push(p);
            rec(out, stack, rows_left - 1, p);
            stack.pop();
        }
    }
    rec(&mut out, &mut stack, height, width);
    out.sort_unstable();
    out.dedup();
    out
}

/// All strict partitions of exactly `k`.
pub fn strict_partitions_of_size(k: u64) -> Vec<StrictPartition> {
    partitions_of_size(k, 0)
        .into_iter()
        .filter(Partition::is_strict)
        .map(StrictPartition)
        .collect()
}

/// All strict partitions whose shifted diagram sits inside the shifted
/// staircase of order `n`; there are `2^(n-1)` of them.
pub fn strict_partitions_in_staircase(n: u32) -> Vec<StrictPartition> {
    fn gen(out: &mut Vec<StrictPartition>, stack: &mut Vec<u32>, row: u32, n: u32) {
        out.push(StrictPartition(Partition { parts: stack.clone() }));
        if row > n {
            return;
        }
        let upper = if row == 1 { n.saturating_sub(1) } else { stack[row as usize - 2] - 1 };
        let upper = upper.min(n - row);
        for p in (1..=upper).rev() {
            stack.push(p);
            gen(out, stack, row + 1, n);
            stack.pop();
        }
    }
    let mut out = Vec::new();
    gen(&mut out, &mut Vec::new(), 1, n);
    out.sort_unstable();
    out
}

/// `complement(container, inner, kind)` of the spec.
///
/// Ordinary: the container must be a rectangle; the set difference rotated by
/// 180 degrees. Shifted: the container must be a staircase; the set
/// difference reflected about the anti-diagonal `(i, j) -> (n - j, n - i)`.
pub fn complement(container: &Partition, inner: &Partition, kind: DiagramKind) -> Result<Partition> {
    if !container.contains(inner) {
        return Err(Error::NotContained);
    }
    match kind {
        DiagramKind::Ordinary => {
            if !container.is_rectangle() {
                return Err(Error::UnsupportedContainer);
            }
            let m = container.length();
            let w = container.part(1);
            let mut parts: Vec<u32> = (1..=m).rev().map(|r| w - inner.part(r)).collect();
            while parts.last() == Some(&0) {
                parts.pop();
            }
            Partition::new(parts)
        }
        DiagramKind::Shifted => {
            let n = container.staircase_order().ok_or(Error::UnsupportedContainer)?;
            if !inner.is_strict() {
                return Err(Error::ShiftedOfNonStrict);
            }
            staircase_complement(n, &StrictPartition(inner.clone())).map(|s| s.0)
        }
    }
}

/// The strict partition whose shifted diagram is the anti-diagonal reflection
/// of the complement of `inner` inside the shifted staircase of order `n`.
pub fn staircase_complement(n: u32, inner: &StrictPartition) -> Result<StrictPartition> {
    let staircase = Partition::staircase(n);
    if !staircase.contains(inner.as_partition()) {
        return Err(Error::NotContained);
    }
    // Build the reflected cell set row by row and read off part lengths.
    let mut row_cells: Vec<Vec<u32>> = vec![Vec::new(); n as usize];
    for i in 1..n {
        let end = staircase.row_end(DiagramKind::Shifted, i);
        for j in i..=end {
            if !inner.as_partition().contains_cell(DiagramKind::Shifted, Cell::new(i, j)) {
                let (ri, rj) = (n - j, n - i);
                row_cells[ri as usize - 1].push(rj);
            }
        }
    }
    let mut parts = Vec::new();
    for (r0, cols) in row_cells.iter_mut().enumerate() {
        if cols.is_empty() {
            break;
        }
        cols.sort_unstable();
        let r = r0 as u32 + 1;
        // Reflected rows must be contiguous starting at the diagonal.
        if cols[0] != r || cols[cols.len() - 1] != r + cols.len() as u32 - 1 {
            return Err(Error::InternalMismatch(format!(
                "staircase complement row {r} is not a shifted row: {cols:?}"
            )));
        }
        parts.push(cols.len() as u32);
    }
    StrictPartition::new(parts)
}
