//! Reduced words, 132-avoiding sorting networks and the Edelman-Greene
//! transcoding to shifted staircase tableaux.
//!
//! Conventions are pinned by the worked examples: composition is from the
//! left and `s_i` swaps positions `i, i+1` of the one-line notation, so the
//! word `1231` in `S_4` yields `(3,2,4,1)` and the trajectory of a value is
//! its position over time.

use std::fmt;

use crate::error::{Error, Result};
use crate::partition::{Cell, DiagramKind, Partition};
use crate::tableau::Tableau;

/// A word in the alphabet `1 ..= n-1`; a sorting network when it has length
/// `n(n-1)/2` and composes to the reverse permutation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReducedWord {
    n: u32,
    letters: Vec<u32>,
}

impl ReducedWord {
    pub fn new(n: u32, letters: Vec<u32>) -> Result<Self> {
        if n < 2 {
            return Err(Error::OutOfRange(format!("n={n} must be at least 2")));
        }
        if let Some(&bad) = letters.iter().find(|&&l| l == 0 || l >= n) {
            return Err(Error::OutOfRange(format!("letter {bad} outside 1..={}", n - 1)));
        }
        Ok(ReducedWord { n, letters })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `N = n(n-1)/2`, the length of a sorting network.
    pub fn full_length(&self) -> usize {
        (self.n as usize * (self.n as usize - 1)) / 2
    }

    pub fn is_sorting_network(&self) -> bool {
        self.len() == self.full_length()
            && apply_prefix(self, self.len()).expect("k in range") == Permutation::reverse(self.n)
    }

    /// Parses a comma-separated letter list, e.g. `"1,2,1,3,2,1"`.
    pub fn parse(n: u32, s: &str) -> Result<Self> {
        let s = s.trim();
        let letters = if s.is_empty() {
            Vec::new()
        } else {
            s.split(',')
                .map(|t| t.trim().parse::<u32>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
                .collect::<Result<Vec<_>>>()?
        };
        ReducedWord::new(n, letters)
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in &self.letters {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
            first = false;
        }
        Ok(())
    }
}

/// A permutation of `[n]` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    one_line: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: u32) -> Self {
        Permutation { one_line: (1..=n).collect() }
    }

    /// The reverse permutation `(n, n-1, ..., 1)`.
    pub fn reverse(n: u32) -> Self {
        Permutation { one_line: (1..=n).rev().collect() }
    }

    pub fn from_one_line(values: Vec<u32>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n];
        for &v in &values {
            if v == 0 || v as usize > n || seen[v as usize - 1] {
                return Err(Error::Parse(format!("{values:?} is not a permutation")));
            }
            seen[v as usize - 1] = true;
        }
        Ok(Permutation { one_line: values })
    }

    pub fn n(&self) -> u32 {
        self.one_line.len() as u32
    }

    pub fn one_line(&self) -> &[u32] {
        &self.one_line
    }

    /// `sigma(pos)` for a 1-based position.
    pub fn value_at(&self, pos: u32) -> u32 {
        self.one_line[pos as usize - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.one_line.len()];
        for (i, &v) in self.one_line.iter().enumerate() {
            inv[v as usize - 1] = i as u32 + 1;
        }
        Permutation { one_line: inv }
    }

    /// Right multiplication by the adjacent transposition of positions
    /// `p, p+1`.
    pub fn swap_positions(&mut self, p: u32) {
        self.one_line.swap(p as usize - 1, p as usize);
    }

    /// Stack scan, O(n): looks for positions `i < j < k` with
    /// `sigma(i) < sigma(k) < sigma(j)`.
    pub fn is_132_avoiding(&self) -> bool {
        let mut stack: Vec<u32> = Vec::new();
        let mut third = 0u32;
        for &v in self.one_line.iter().rev() {
            if v < third {
                return false;
            }
            while stack.last().is_some_and(|&top| top < v) {
                third = stack.pop().unwrap();
            }
            stack.push(v);
        }
        true
    }

    /// A permutation contains 312 exactly when its complement contains 132.
    pub fn is_312_avoiding(&self) -> bool {
        let n = self.n();
        let complemented: Vec<u32> = self.one_line.iter().map(|&v| n + 1 - v).collect();
        Permutation { one_line: complemented }.is_132_avoiding()
    }
}

/// The intermediate permutation after `k` letters, composed from the left.
pub fn apply_prefix(w: &ReducedWord, k: usize) -> Result<Permutation> {
    if k > w.len() {
        return Err(Error::OutOfRange(format!("prefix {k} longer than the word")));
    }
    let mut perm = Permutation::identity(w.n);
    for &l in &w.letters[..k] {
        perm.swap_positions(l);
    }
    Ok(perm)
}

/// True iff `w` is a sorting network all of whose prefixes avoid 132.
pub fn is_132_network(w: &ReducedWord) -> bool {
    if w.len() != w.full_length() {
        return false;
    }
    let mut perm = Permutation::identity(w.n);
    for &l in &w.letters {
        perm.swap_positions(l);
        if !perm.is_132_avoiding() {
            return false;
        }
    }
    perm == Permutation::reverse(w.n)
}

/// The Edelman-Greene image of a 132-avoiding sorting network (or prefix):
/// letter `m` lands in the lowest open cell of column `w_m`. Returns the
/// recording tableau and its row-shifted version.
///
/// Fails fast at the first placement that breaks standardness, which is
/// exactly how non-networks reveal themselves.
pub fn eg_forward(w: &ReducedWord) -> Result<(Tableau, Tableau)> {
    let mut heights = vec![0u32; w.n as usize - 1];
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for (m, &letter) in w.letters.iter().enumerate() {
        let j = letter as usize;
        let r = heights[j - 1] as usize + 1;
        if r > rows.len() {
            rows.push(Vec::new());
        }
        if rows[r - 1].len() != j - 1 {
            return Err(Error::NotA132Network);
        }
        rows[r - 1].push(m as u32 + 1);
        heights[j - 1] = r as u32;
    }
    let q = Tableau::from_rows(DiagramKind::Ordinary, rows.clone()).map_err(|_| Error::NotA132Network)?;
    let q_arrow = Tableau::from_rows(DiagramKind::Shifted, rows).map_err(|_| Error::NotA132Network)?;
    Ok((q, q_arrow))
}

/// Inverse transcoding: reads the letter of each label as the unshifted
/// column of its cell. Requires a shifted staircase tableau.
pub fn eg_inverse(t: &Tableau) -> Result<ReducedWord> {
    let n = t.shape().length() + 1;
    if t.kind() != DiagramKind::Shifted || t.shape().staircase_order() != Some(n) {
        return Err(Error::WrongShape);
    }
    let mut letters = vec![0u32; t.size() as usize];
    for (i, row) in t.rows().iter().enumerate() {
        let r = i as u32 + 1;
        for (off, &label) in row.iter().enumerate() {
            let col = r + off as u32;
            letters[label as usize - 1] = col - r + 1;
        }
    }
    ReducedWord::new(n, letters)
}

/// Reversal preserves 132-avoidance; the image tableau is the anti-diagonal
/// flip with labels complemented.
pub fn reverse_network(w: &ReducedWord) -> Result<ReducedWord> {
    if !is_132_network(w) {
        return Err(Error::NotA132Network);
    }
    let letters = w.letters.iter().rev().copied().collect();
    ReducedWord::new(w.n, letters)
}

/// Anti-diagonal flip of a shifted staircase tableau with every label `k`
/// replaced by `size + 1 - k`; the tableau-side picture of word reversal.
pub fn flip_antidiagonal(t: &Tableau) -> Result<Tableau> {
    let n = t.shape().length() + 1;
    if t.kind() != DiagramKind::Shifted || t.shape().staircase_order() != Some(n) {
        return Err(Error::WrongShape);
    }
    let size = t.size();
    let mut rows: Vec<Vec<u32>> = (1..n).map(|i| vec![0; (n - i) as usize]).collect();
    for (i, row) in t.rows().iter().enumerate() {
        let r = i as u32 + 1;
        for (off, &label) in row.iter().enumerate() {
            let c = r + off as u32;
            let (fr, fc) = (n - c, n - r);
            rows[fr as usize - 1][(fc - fr) as usize] = size + 1 - label;
        }
    }
    Tableau::from_rows(DiagramKind::Shifted, rows)
}

/// Cells strictly north-west of every 1 in the permutation matrix, with the
/// matrix convention `M[sigma(j), j] = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotheDiagram {
    cells: Vec<Cell>,
}

impl RotheDiagram {
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    /// Row lengths, provided the rows are left-justified (they are for
    /// 132-avoiding permutations).
    pub fn shape(&self) -> Result<Partition> {
        let mut counts: Vec<u32> = Vec::new();
        for cell in &self.cells {
            let idx = cell.row as usize - 1;
            if counts.len() <= idx {
                counts.resize(idx + 1, 0);
            }
            counts[idx] += 1;
        }
        for cell in &self.cells {
            if cell.col > counts[cell.row as usize - 1] {
                return Err(Error::InternalMismatch(format!(
                    "Rothe diagram row {} is not left-justified",
                    cell.row
                )));
            }
        }
        Partition::new(counts)
    }
}

/// `D(sigma)`: cell `(i, j)` survives when the 1 of column `j` sits strictly
/// below row `i` and the 1 of row `i` sits strictly right of column `j`.
pub fn rothe_diagram(p: &Permutation) -> RotheDiagram {
    let n = p.n();
    let inv = p.inverse();
    let mut cells = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if p.value_at(j) > i && inv.value_at(i) > j {
                cells.push(Cell::new(i, j));
            }
        }
    }
    RotheDiagram { cells }
}

/// Positions of the value `i` after each prefix: a sequence of length
/// `len + 1` starting at `i`.
pub fn trajectory(w: &ReducedWord, i: u32) -> Result<Vec<u32>> {
    if i == 0 || i > w.n {
        return Err(Error::OutOfRange(format!("element {i} outside 1..={}", w.n)));
    }
    let mut pos = i;
    let mut out = Vec::with_capacity(w.len() + 1);
    out.push(pos);
    for &l in &w.letters {
        if pos == l {
            pos = l + 1;
        } else if pos == l + 1 {
            pos = l;
        }
        out.push(pos);
    }
    Ok(out)
}

/// Reads the trajectory of element `m` off the tableau alone: the element
/// moves left at the labels in column `m - 1` (row `i` sending it to
/// position `m - i`) and right at the labels in row `m` (column `j` sending
/// it to position `j - m + 2`). Agrees pointwise with simulating the word.
pub fn trajectory_from_tableau(t: &Tableau, m: u32) -> Result<Vec<u32>> {
    let n = t.shape().length() + 1;
    if t.kind() != DiagramKind::Shifted || t.shape().staircase_order() != Some(n) {
        return Err(Error::WrongShape);
    }
    if m == 0 || m > n {
        return Err(Error::OutOfRange(format!("element {m} outside 1..={n}")));
    }
    let mut events: Vec<(u32, u32)> = Vec::new(); // (label, position after it)
    if m >= 2 {
        for i in 1..m {
            let label = t.entry(Cell::new(i, m - 1)).expect("column m-1 has rows 1..m-1");
            events.push((label, m - i));
        }
    }
    if m < n {
        for j in m..n {
            let label = t.entry(Cell::new(m, j)).expect("row m has columns m..n-1");
            events.push((label, j - m + 2));
        }
    }
    events.sort_unstable();
    let size = t.size();
    let mut out = Vec::with_capacity(size as usize + 1);
    let mut pos = m;
    let mut next = 0usize;
    for k in 0..=size {
        if next < events.len() && events[next].0 == k {
            pos = events[next].1;
            next += 1;
        }
        out.push(pos);
    }
    Ok(out)
}

/// The letter at the unique step where values `i < j` change places; always
/// `j - i` in a 132-avoiding sorting network.
pub fn swap_letter(w: &ReducedWord, i: u32, j: u32) -> Result<u32> {
    if i == 0 || j <= i || j > w.n {
        return Err(Error::OutOfRange(format!("need 1 <= i < j <= {}", w.n)));
    }
    let mut perm = Permutation::identity(w.n);
    for &l in &w.letters {
        let (a, b) = (perm.value_at(l), perm.value_at(l + 1));
        if (a == i && b == j) || (a == j && b == i) {
            return Ok(l);
        }
        perm.swap_positions(l);
    }
    Err(Error::OutOfRange(format!("values {i} and {j} never swap")))
}

/// Runs `f` on every reduced word of the reverse permutation in `S_n`.
pub fn for_each_reduced_word<F: FnMut(&ReducedWord)>(n: u32, mut f: F) {
    fn rec<F: FnMut(&ReducedWord)>(perm: &mut Permutation, word: &mut Vec<u32>, full: usize, n: u32, f: &mut F) {
        if word.len() == full {
            f(&ReducedWord { n, letters: word.clone() });
            return;
        }
        for p in 1..n {
            if perm.value_at(p) < perm.value_at(p + 1) {
                perm.swap_positions(p);
                word.push(p);
                rec(perm, word, full, n, f);
                word.pop();
                perm.swap_positions(p);
            }
        }
    }
    let full = (n as usize * (n as usize - 1)) / 2;
    rec(&mut Permutation::identity(n), &mut Vec::new(), full, n, &mut f);
}

/// All reduced words of the reverse permutation; exhaustive, so keep `n`
/// small (292864 words already at n = 6).
pub fn all_reduced_words(n: u32) -> Vec<ReducedWord> {
    let mut out = Vec::new();
    for_each_reduced_word(n, |w| out.push(w.clone()));
    out
}

/// All 132-avoiding sorting networks in `S_n` by exhaustive filtering.
pub fn all_132_networks(n: u32) -> Vec<ReducedWord> {
    let mut out = Vec::new();
    for_each_reduced_word(n, |w| {
        if is_132_network(w) {
            out.push(w.clone());
        }
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate;

    fn word(n: u32, s: &str) -> ReducedWord {
        ReducedWord::parse(n, s).unwrap()
    }

    #[test]
    fn prefix_orientation_is_pinned() {
        // 1231 composed from the left with position swaps gives (3,2,4,1).
        let w = word(4, "1,2,3,1");
        assert_eq!(apply_prefix(&w, 4).unwrap().one_line(), &[3, 2, 4, 1]);
        assert_eq!(apply_prefix(&w, 0).unwrap(), Permutation::identity(4));
        let w = word(4, "1,2,1,3,2,1");
        assert_eq!(apply_prefix(&w, 3).unwrap().one_line(), &[3, 2, 1, 4]);
        assert!(apply_prefix(&w, 7).is_err());
    }

    #[test]
    fn network_detection() {
        assert!(is_132_network(&word(4, "1,2,1,3,2,1")));
        assert!(is_132_network(&word(4, "1,2,3,1,2,1")));
        assert!(is_132_network(&word(5, "1,2,1,3,4,2,3,1,2,1")));
        assert!(!is_132_network(&word(4, "1,2,1,3,2"))); // too short
        assert!(!is_132_network(&word(4, "2,1,3,2,1,2")));
    }

    #[test]
    fn exactly_two_networks_at_n_four() {
        let words = all_reduced_words(4);
        assert_eq!(words.len(), 16);
        let nets: Vec<String> = words
            .iter()
            .filter(|w| is_132_network(w))
            .map(|w| w.to_string())
            .collect();
        assert_eq!(nets, vec!["1,2,1,3,2,1", "1,2,3,1,2,1"]);
    }

    #[test]
    fn eg_forward_matches_figure() {
        let w = word(5, "1,2,1,3,4,2,3,1,2,1");
        let (q, qa) = eg_forward(&w).unwrap();
        assert_eq!(q.kind(), DiagramKind::Ordinary);
        assert_eq!(qa.rows(), &[vec![1, 2, 4, 5], vec![3, 6, 7], vec![8, 9], vec![10]]);
        let (_, qa) = eg_forward(&word(4, "1,2,1,3,2,1")).unwrap();
        assert_eq!(qa.rows(), &[vec![1, 2, 4], vec![3, 5], vec![6]]);
        let (_, qa) = eg_forward(&word(2, "1")).unwrap();
        assert_eq!(qa.rows(), &[vec![1]]);
        // the first letter of a network is forced to be 1
        assert_eq!(eg_forward(&word(3, "2,1,2")).unwrap_err(), Error::NotA132Network);
    }

    #[test]
    fn eg_inverse_examples_and_round_trip() {
        let t = Tableau::from_rows(
            DiagramKind::Shifted,
            vec![vec![1, 2, 4, 5], vec![3, 6, 7], vec![8, 9], vec![10]],
        )
        .unwrap();
        assert_eq!(eg_inverse(&t).unwrap(), word(5, "1,2,1,3,4,2,3,1,2,1"));
        let t = Tableau::from_rows(DiagramKind::Shifted, vec![vec![1, 2, 3], vec![4, 5], vec![6]]).unwrap();
        assert_eq!(eg_inverse(&t).unwrap(), word(4, "1,2,3,1,2,1"));
        let t = Tableau::from_rows(DiagramKind::Shifted, vec![vec![1]]).unwrap();
        assert_eq!(eg_inverse(&t).unwrap(), word(2, "1"));

        for w in all_132_networks(5) {
            let (_, qa) = eg_forward(&w).unwrap();
            assert_eq!(eg_inverse(&qa).unwrap(), w);
        }
        let bad = Tableau::from_rows(DiagramKind::Shifted, vec![vec![1, 2, 3], vec![4]]).unwrap();
        assert_eq!(eg_inverse(&bad).unwrap_err(), Error::WrongShape);
    }

    #[test]
    fn reversal_and_flip_agree() {
        let w = word(4, "1,2,1,3,2,1");
        let rev = reverse_network(&w).unwrap();
        assert_eq!(rev, word(4, "1,2,3,1,2,1"));
        for w in all_132_networks(5) {
            let rev = reverse_network(&w).unwrap();
            assert!(is_132_network(&rev));
            assert_eq!(reverse_network(&rev).unwrap(), w);
            let (_, qa) = eg_forward(&w).unwrap();
            let (_, qa_rev) = eg_forward(&rev).unwrap();
            assert_eq!(flip_antidiagonal(&qa).unwrap(), qa_rev);
        }
    }

    #[test]
    fn rothe_diagram_examples() {
        assert!(rothe_diagram(&Permutation::identity(5)).cells().is_empty());
        assert_eq!(
            rothe_diagram(&Permutation::reverse(5)).shape().unwrap(),
            Partition::staircase(5)
        );
        let sigma = Permutation::from_one_line(vec![3, 2, 1, 4]).unwrap();
        let d = rothe_diagram(&sigma);
        assert_eq!(d.cells(), &[Cell::new(1, 1), Cell::new(1, 2), Cell::new(2, 1)]);
        assert_eq!(d.shape().unwrap(), Partition::new(vec![2, 1]).unwrap());
    }

    #[test]
    fn prefix_shapes_match_rothe_diagrams() {
        for n in [4u32, 5] {
            for w in all_132_networks(n) {
                for k in 0..=w.len() {
                    let prefix = ReducedWord::new(n, w.letters()[..k].to_vec()).unwrap();
                    let (q, _) = eg_forward(&prefix).unwrap();
                    let sigma = apply_prefix(&w, k).unwrap();
                    assert_eq!(rothe_diagram(&sigma).shape().unwrap(), *q.shape());
                }
            }
        }
    }

    #[test]
    fn trajectories_match_figure_and_tableau_reading() {
        let w = word(4, "1,2,1,3,2,1");
        assert_eq!(trajectory(&w, 3).unwrap(), vec![3, 3, 2, 1, 1, 1, 2]);
        assert_eq!(trajectory(&word(2, "1"), 1).unwrap(), vec![1, 2]);

        for n in [4u32, 5] {
            enumerate::for_each_tableau(&Partition::staircase(n), DiagramKind::Shifted, |t| {
                let w = eg_inverse(t).unwrap();
                for m in 1..=n {
                    assert_eq!(
                        trajectory_from_tableau(t, m).unwrap(),
                        trajectory(&w, m).unwrap(),
                        "n={n} m={m}"
                    );
                }
            })
            .unwrap();
        }
    }

    #[test]
    fn swap_letters_are_value_distances() {
        let w = word(4, "1,2,1,3,2,1");
        assert_eq!(swap_letter(&w, 1, 4).unwrap(), 3);
        assert_eq!(swap_letter(&w, 2, 3).unwrap(), 1);
        for w in all_132_networks(5) {
            for i in 1..=4 {
                for j in i + 1..=5 {
                    assert_eq!(swap_letter(&w, i, j).unwrap(), j - i);
                }
            }
        }
        assert!(swap_letter(&w, 2, 2).is_err());
    }

    #[test]
    fn pattern_avoidance_scans() {
        assert!(Permutation::from_one_line(vec![3, 1, 2, 4]).unwrap().is_132_avoiding());
        assert!(!Permutation::from_one_line(vec![1, 3, 2, 4]).unwrap().is_132_avoiding());
        assert!(!Permutation::from_one_line(vec![3, 1, 2, 4]).unwrap().is_312_avoiding());
        assert!(Permutation::from_one_line(vec![1, 3, 2, 4]).unwrap().is_312_avoiding());
    }
}
