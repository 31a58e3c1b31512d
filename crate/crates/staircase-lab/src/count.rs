//! Arbitrary-precision tableau counting and the exact identity suite.
//!
//! Everything here is integer or rational arithmetic; no floating point
//! enters any identity check. Square roots are eliminated by comparing the
//! squares of both sides.

use std::collections::HashMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::enumerate;
use crate::error::{Error, Result};
use crate::partition::{
    complement, shift_symmetric, staircase_complement, strict_partitions_in_staircase, DiagramKind,
    Partition, StrictPartition,
};

/// Exact non-negative count.
pub type BigCount = BigUint;
/// Exact rational in lowest terms.
pub type BigRatio = Ratio<BigInt>;

pub fn factorial(n: u64) -> BigUint {
    let mut acc = BigUint::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn ratio(num: BigUint) -> BigRatio {
    Ratio::from_integer(BigInt::from(num))
}

/// Product of the (shifted) hook lengths over the whole diagram.
pub fn hook_product(p: &Partition, kind: DiagramKind) -> Result<BigUint> {
    let mut acc = BigUint::one();
    for cell in p.cells(kind)? {
        acc *= p.hook_length(kind, cell)?;
    }
    Ok(acc)
}

/// The number of standard tableaux of the shape: `size! / prod(hooks)`.
/// The division is exact; a non-zero remainder would expose a hook bug.
pub fn count_tableaux(p: &Partition, kind: DiagramKind) -> Result<BigUint> {
    let hooks = hook_product(p, kind)?;
    let (q, r) = factorial(p.size()).div_rem(&hooks);
    assert!(r.is_zero(), "hook product must divide size! exactly");
    Ok(q)
}

/// Memoizing wrapper around [`count_tableaux`] for identity sweeps.
#[derive(Default)]
pub struct CountCache {
    map: HashMap<(Vec<u32>, DiagramKind), BigUint>,
}

impl CountCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn count(&mut self, p: &Partition, kind: DiagramKind) -> Result<BigUint> {
        let key = (p.parts().to_vec(), kind);
        if let Some(v) = self.map.get(&key) {
            return Ok(v.clone());
        }
        let v = count_tableaux(p, kind)?;
        self.map.insert(key, v.clone());
        Ok(v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IdentityKind {
    ShiftSymmetricCount,
    HookProduct,
    PrefixProbability,
    CellTransfer,
    ExpectedInequality,
    SumTrivialCell,
    SumDomino,
    SumTromino,
    AdjacencyColumnMean,
    AdjacencyRowMean,
    WordAdjacencyMean,
}

impl fmt::Display for IdentityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            IdentityKind::ShiftSymmetricCount => "shift_symmetric_count",
            IdentityKind::HookProduct => "hook_product",
            IdentityKind::PrefixProbability => "prefix_probability",
            IdentityKind::CellTransfer => "cell_transfer",
            IdentityKind::ExpectedInequality => "expected_inequality",
            IdentityKind::SumTrivialCell => "sum_trivial_cell",
            IdentityKind::SumDomino => "sum_domino",
            IdentityKind::SumTromino => "sum_tromino",
            IdentityKind::AdjacencyColumnMean => "adjacency_column_mean",
            IdentityKind::AdjacencyRowMean => "adjacency_row_mean",
            IdentityKind::WordAdjacencyMean => "word_adjacency_mean",
        };
        f.write_str(s)
    }
}

/// Most identities assert equality; the expectation lemma asserts a strict
/// inequality, so the relation is carried explicitly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Equal,
    StrictlyLess,
}

/// Outcome of one exact check: `holds` iff `lhs relation rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub identity: IdentityKind,
    pub params: String,
    pub lhs: BigRatio,
    pub rhs: BigRatio,
    pub relation: Relation,
    pub holds: bool,
}

impl IdentityReport {
    pub fn equal(identity: IdentityKind, params: String, lhs: BigRatio, rhs: BigRatio) -> Self {
        let holds = lhs == rhs;
        IdentityReport {
            identity,
            params,
            lhs,
            rhs,
            relation: Relation::Equal,
            holds,
        }
    }

    pub fn strictly_less(identity: IdentityKind, params: String, lhs: BigRatio, rhs: BigRatio) -> Self {
        let holds = lhs < rhs;
        IdentityReport {
            identity,
            params,
            lhs,
            rhs,
            relation: Relation::StrictlyLess,
            holds,
        }
    }

    /// The TSV row used by the `verify` subcommand.
    pub fn tsv_line(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}",
            self.identity, self.params, self.lhs, self.rhs, self.holds
        )
    }
}

impl Serialize for IdentityReport {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            identity: IdentityKind,
            params: &'a str,
            lhs: String,
            rhs: String,
            relation: Relation,
            holds: bool,
        }
        Repr {
            identity: self.identity,
            params: &self.params,
            lhs: self.lhs.to_string(),
            rhs: self.rhs.to_string(),
            relation: self.relation,
            holds: self.holds,
        }
        .serialize(ser)
    }
}

/// Checks `f_Lambda = (g^lambda)^2 * C(2k, k) / 2^(l(lambda))` where `Lambda`
/// is the shift-symmetric partition of `lambda` and `k = |lambda|`.
pub fn verify_fl(lam: &StrictPartition) -> IdentityReport {
    let big = shift_symmetric(lam);
    let lhs = ratio(count_tableaux(&big, DiagramKind::Ordinary).expect("valid shape"));
    let g = count_tableaux(lam.as_partition(), DiagramKind::Shifted).expect("strict shape");
    let k = lam.size();
    let num = BigInt::from(&g * &g * binomial(2 * k, k));
    let den = BigInt::from(BigUint::one() << lam.length());
    let rhs = Ratio::new(num, den);
    IdentityReport::equal(IdentityKind::ShiftSymmetricCount, format!("lambda={lam}"), lhs, rhs)
}

/// Checks that the hook product over the shift-symmetric diagram equals
/// `2^(l(lambda))` times the square of the shifted hook product.
pub fn verify_hook_product(lam: &StrictPartition) -> IdentityReport {
    let big = shift_symmetric(lam);
    let lhs = ratio(hook_product(&big, DiagramKind::Ordinary).expect("valid shape"));
    let sh = hook_product(lam.as_partition(), DiagramKind::Shifted).expect("strict shape");
    let rhs = ratio((BigUint::one() << lam.length()) * &sh * &sh);
    IdentityReport::equal(IdentityKind::HookProduct, format!("lambda={lam}"), lhs, rhs)
}

/// Probability that a uniform shifted staircase tableau of order `n` has its
/// smallest `|lambda|` entries exactly on the shifted diagram of `lambda`.
///
/// Computed two ways: the quotient `g^lambda g^(complement) / g^(staircase)`
/// and, squared, the binomial-and-rectangle form obtained through
/// shift-symmetric partitions. The two must agree exactly.
pub fn prefix_probability(n: u32, lam: &StrictPartition) -> Result<BigRatio> {
    let staircase = Partition::staircase(n);
    if !staircase.contains(lam.as_partition()) {
        return Err(Error::NotContained);
    }
    let k = lam.size();
    let cells = staircase.size();

    let g_lam = count_tableaux(lam.as_partition(), DiagramKind::Shifted)?;
    let comp = staircase_complement(n, lam)?;
    let g_comp = count_tableaux(comp.as_partition(), DiagramKind::Shifted)?;
    let g_all = count_tableaux(&staircase, DiagramKind::Shifted)?;
    let direct = Ratio::new(BigInt::from(g_lam * g_comp), BigInt::from(g_all));

    // Squared binomial form via the shift-symmetric rectangle.
    let boxed = Partition::rectangle(n - 1, n);
    let big = shift_symmetric(lam);
    let big_comp = complement(&boxed, &big, DiagramKind::Ordinary)?;
    let f_big = count_tableaux(&big, DiagramKind::Ordinary)?;
    let f_big_comp = count_tableaux(&big_comp, DiagramKind::Ordinary)?;
    let f_box = count_tableaux(&boxed, DiagramKind::Ordinary)?;
    let choose_n_k = binomial(cells, k);
    let squared = Ratio::new(
        BigInt::from(binomial(2 * cells, 2 * k) * f_big * f_big_comp),
        BigInt::from(&choose_n_k * &choose_n_k * f_box),
    );

    if &direct * &direct != squared {
        return Err(Error::InternalMismatch(format!(
            "prefix probability forms differ for n={n}, lambda={lam}"
        )));
    }
    Ok(direct)
}

/// The cell-transfer identity behind the first-row estimate: adding one cell
/// to the first row inside an `m x n` box satisfies
/// `f_lam f_(box \ lam+) / (f_lam+ f_(box \ lam)) =
///  (m + lam_1)(n - lam_1) / ((k + 1)(mn - k))`.
pub fn verify_amusing(m: u32, n: u32, lam: &Partition) -> Result<IdentityReport> {
    let boxed = Partition::rectangle(m, n);
    let mut plus_parts = lam.parts().to_vec();
    if plus_parts.is_empty() {
        plus_parts.push(1);
    } else {
        plus_parts[0] += 1;
    }
    let plus = Partition::new(plus_parts).expect("adding to the first row keeps a partition");
    if !boxed.contains(&plus) {
        return Err(Error::NotContained);
    }
    let k = lam.size();
    let f_lam = count_tableaux(lam, DiagramKind::Ordinary)?;
    let f_plus = count_tableaux(&plus, DiagramKind::Ordinary)?;
    let f_comp = count_tableaux(&complement(&boxed, lam, DiagramKind::Ordinary)?, DiagramKind::Ordinary)?;
    let f_comp_plus = count_tableaux(&complement(&boxed, &plus, DiagramKind::Ordinary)?, DiagramKind::Ordinary)?;
    let lhs = Ratio::new(BigInt::from(f_lam * f_comp_plus), BigInt::from(f_plus * f_comp));
    let l1 = lam.part(1) as u64;
    let rhs = Ratio::new(
        BigInt::from((m as u64 + l1) * (n as u64 - l1)),
        BigInt::from((k + 1) * (m as u64 * n as u64 - k)),
    );
    Ok(IdentityReport::equal(
        IdentityKind::CellTransfer,
        format!("m={m} n={n} lambda={lam}"),
        lhs,
        rhs,
    ))
}

/// Exhaustive check of the strict inequality
/// `E[I_(n,k)]^2 < E[(2N - J_(n,k)^2) / (k (N - k + 1))]`
/// over all shifted staircase tableaux of order `n`.
pub fn verify_expected_inequality(n: u32, k: u64) -> Result<IdentityReport> {
    if !(2..=7).contains(&n) {
        return Err(Error::OutOfRange(format!("n={n} not in 2..=7")));
    }
    let staircase = Partition::staircase(n);
    let cells = staircase.size();
    if k == 0 || k >= cells {
        return Err(Error::OutOfRange(format!("k={k} not in 1..{cells}")));
    }
    let mut tableaux = 0u64;
    let mut hits = 0u64; // entry k in the first row
    let mut rhs_num = BigInt::zero(); // sum of 2N - J^2
    enumerate::for_each_tableau(&staircase, DiagramKind::Shifted, |t| {
        tableaux += 1;
        let first = &t.rows()[0];
        if first.iter().any(|&v| v as u64 == k) {
            hits += 1;
        }
        let j = first.iter().filter(|&&v| v as u64 <= k).count() as u64;
        rhs_num += BigInt::from(2 * cells) - BigInt::from(j * j);
    })?;
    let lhs = Ratio::new(BigInt::from(hits * hits), BigInt::from(tableaux * tableaux));
    let rhs = Ratio::new(rhs_num, BigInt::from(tableaux * k * (cells - k + 1)));
    Ok(IdentityReport::strictly_less(
        IdentityKind::ExpectedInequality,
        format!("n={n} k={k}"),
        lhs,
        rhs,
    ))
}

/// The cell pattern a summand adds to the smaller diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumPattern {
    /// one cell `u`
    TrivialCell,
    /// a horizontal domino `u, e(u)`
    Domino,
    /// the hook `u, e(u), e(s(u))`
    Tromino,
}

impl SumPattern {
    fn identity(self) -> IdentityKind {
        match self {
            SumPattern::TrivialCell => IdentityKind::SumTrivialCell,
            SumPattern::Domino => IdentityKind::SumDomino,
            SumPattern::Tromino => IdentityKind::SumTromino,
        }
    }

    /// All valid larger diagrams `nu` obtained by attaching the pattern to
    /// `mu` inside the shifted staircase of order `n`.
    fn attachments(self, mu: &StrictPartition, n: u32) -> Vec<StrictPartition> {
        let ell = mu.length();
        let mut out = Vec::new();
        let grow = |row: u32, by: u32| -> Option<StrictPartition> {
            let mut parts = mu.as_partition().parts().to_vec();
            if row == ell + 1 {
                parts.push(by);
            } else {
                parts[row as usize - 1] += by;
            }
            if parts[row as usize - 1] > n - row {
                return None;
            }
            StrictPartition::new(parts).ok()
        };
        match self {
            SumPattern::TrivialCell | SumPattern::Domino => {
                let by = if self == SumPattern::TrivialCell { 1 } else { 2 };
                for row in 1..=(ell + 1).min(n.saturating_sub(1)) {
                    if let Some(nu) = grow(row, by) {
                        out.push(nu);
                    }
                }
            }
            SumPattern::Tromino => {
                // The hook only attaches at the diagonal frontier, appending
                // rows of lengths 2 and 1.
                let mut parts = mu.as_partition().parts().to_vec();
                parts.push(2);
                parts.push(1);
                if ell + 2 <= n.saturating_sub(1) && parts[ell as usize] <= n - (ell + 1) {
                    if let Ok(nu) = StrictPartition::new(parts) {
                        out.push(nu);
                    }
                }
            }
        }
        out
    }
}

/// Checks one of the three sum identities over pairs `mu` inside `nu` inside
/// the shifted staircase: the sum of `g^mu * g^(staircase \ nu)` over all
/// pattern attachments equals `C(n,2)`, `n - 2` or `1` times `g^(staircase)`.
pub fn verify_sum_identity(n: u32, which: SumPattern) -> Result<IdentityReport> {
    if !(2..=9).contains(&n) {
        return Err(Error::OutOfRange(format!("n={n} not in 2..=9")));
    }
    let mut cache = CountCache::new();
    let mut total = BigUint::zero();
    for mu in strict_partitions_in_staircase(n) {
        let g_mu = cache.count(mu.as_partition(), DiagramKind::Shifted)?;
        for nu in which.attachments(&mu, n) {
            let comp = staircase_complement(n, &nu)?;
            total += &g_mu * cache.count(comp.as_partition(), DiagramKind::Shifted)?;
        }
    }
    let g_all = count_tableaux(&Partition::staircase(n), DiagramKind::Shifted)?;
    let factor = match which {
        SumPattern::TrivialCell => BigUint::from(n as u64 * (n as u64 - 1) / 2),
        SumPattern::Domino => BigUint::from(n as u64 - 2),
        SumPattern::Tromino => BigUint::one(),
    };
    Ok(IdentityReport::equal(
        which.identity(),
        format!("n={n}"),
        ratio(total),
        ratio(factor * g_all),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{partitions_of_size, strict_partitions_of_size};

    fn sp(parts: &[u32]) -> StrictPartition {
        StrictPartition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn counts_match_frozen_oracle_values() {
        // Frozen from the DFS enumeration oracle.
        let rect = Partition::new(vec![4, 4, 4]).unwrap();
        assert_eq!(count_tableaux(&rect, DiagramKind::Ordinary).unwrap(), 462u32.into());
        let d5 = Partition::staircase(5);
        assert_eq!(count_tableaux(&d5, DiagramKind::Shifted).unwrap(), 12u32.into());
        let single = Partition::new(vec![1]).unwrap();
        assert_eq!(count_tableaux(&single, DiagramKind::Ordinary).unwrap(), 1u32.into());
        assert_eq!(count_tableaux(&single, DiagramKind::Shifted).unwrap(), 1u32.into());
        assert_eq!(count_tableaux(&Partition::empty(), DiagramKind::Ordinary).unwrap(), 1u32.into());
    }

    #[test]
    fn hook_formula_agrees_with_enumeration_medium_sizes() {
        // The full size <= 12 sweep runs in the acceptance suite; keep a
        // representative slice in unit tests.
        for k in 0..=8u64 {
            for lam in partitions_of_size(k, 0) {
                let fast = count_tableaux(&lam, DiagramKind::Ordinary).unwrap();
                let slow = enumerate::count_by_enumeration(&lam, DiagramKind::Ordinary).unwrap();
                assert_eq!(fast, slow.into(), "ordinary {lam}");
            }
            for lam in strict_partitions_of_size(k) {
                let fast = count_tableaux(lam.as_partition(), DiagramKind::Shifted).unwrap();
                let slow = enumerate::count_by_enumeration(lam.as_partition(), DiagramKind::Shifted).unwrap();
                assert_eq!(fast, slow.into(), "shifted {lam}");
            }
        }
    }

    #[test]
    fn fl_identity_examples() {
        // staircase of order 4: f_(4,4,4) = 462 = 4 * 924 / 8
        let r = verify_fl(&sp(&[3, 2, 1]));
        assert!(r.holds, "{r:?}");
        assert_eq!(r.lhs, ratio(462u32.into()));
        let r = verify_fl(&StrictPartition::default());
        assert!(r.holds);
        assert_eq!(r.lhs, ratio(BigUint::one()));
        // lambda = (2,1): f_(3,3) = 5 against g = 1, C(6,3)/4
        let r = verify_fl(&sp(&[2, 1]));
        assert!(r.holds);
        assert_eq!(r.lhs, ratio(5u32.into()));
    }

    #[test]
    fn fl_and_hook_product_hold_up_to_size_twelve() {
        for k in 0..=12u64 {
            for lam in strict_partitions_of_size(k) {
                assert!(verify_fl(&lam).holds, "fl {lam}");
                assert!(verify_hook_product(&lam).holds, "hook {lam}");
            }
        }
    }

    #[test]
    fn hook_product_examples() {
        assert!(verify_hook_product(&sp(&[6, 4, 2, 1])).holds);
        let r = verify_hook_product(&sp(&[1]));
        assert_eq!(r.lhs, ratio(2u32.into()));
        assert!(r.holds);
        assert!(verify_hook_product(&sp(&[5, 4, 3, 2, 1])).holds);
    }

    #[test]
    fn prefix_probability_examples() {
        let half = prefix_probability(4, &sp(&[2, 1])).unwrap();
        assert_eq!(half, Ratio::new(BigInt::one(), BigInt::from(2)));
        for n in 2..=6 {
            let full = prefix_probability(n, &StrictPartition::staircase(n)).unwrap();
            assert_eq!(full, Ratio::from_integer(BigInt::one()));
        }
        let one = prefix_probability(5, &sp(&[1])).unwrap();
        assert_eq!(one, Ratio::from_integer(BigInt::one()));
        assert_eq!(
            prefix_probability(3, &sp(&[4, 1])).unwrap_err(),
            Error::NotContained
        );
    }

    #[test]
    fn prefix_probabilities_sum_to_one_per_level() {
        for n in 2..=6u32 {
            let cells = Partition::staircase(n).size();
            let mut by_size: HashMap<u64, BigRatio> = HashMap::new();
            for lam in strict_partitions_in_staircase(n) {
                let p = prefix_probability(n, &lam).unwrap();
                *by_size.entry(lam.size()).or_insert_with(BigRatio::zero) += p;
            }
            for k in 0..=cells {
                assert_eq!(
                    by_size.get(&k),
                    Some(&Ratio::from_integer(BigInt::one())),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn amusing_examples() {
        let r = verify_amusing(2, 2, &Partition::empty()).unwrap();
        assert!(r.holds);
        assert_eq!(r.rhs, Ratio::from_integer(BigInt::one()));
        let lam = Partition::new(vec![2, 1]).unwrap();
        assert!(verify_amusing(3, 4, &lam).unwrap().holds);
        // cell cannot be added: lam_1 = n
        let full = Partition::new(vec![4]).unwrap();
        assert_eq!(verify_amusing(3, 4, &full).unwrap_err(), Error::NotContained);
    }

    #[test]
    fn expected_inequality_small_cases() {
        let r = verify_expected_inequality(4, 1).unwrap();
        assert!(r.holds, "{r:?}");
        assert_eq!(r.lhs, Ratio::from_integer(BigInt::one()));
        assert!(verify_expected_inequality(5, 3).unwrap().holds);
        assert!(verify_expected_inequality(4, 6).is_err());
    }

    #[test]
    fn sum_identities_small_cases() {
        let r = verify_sum_identity(4, SumPattern::TrivialCell).unwrap();
        assert!(r.holds, "{r:?}");
        assert_eq!(r.lhs, ratio(12u32.into()));
        let r = verify_sum_identity(4, SumPattern::Domino).unwrap();
        assert!(r.holds, "{r:?}");
        assert_eq!(r.lhs, ratio(4u32.into()));
        let r = verify_sum_identity(4, SumPattern::Tromino).unwrap();
        assert!(r.holds, "{r:?}");
        assert_eq!(r.lhs, ratio(2u32.into()));
    }

    #[test]
    fn report_tsv_shape() {
        let r = verify_fl(&sp(&[2, 1]));
        let line = r.tsv_line();
        assert!(line.starts_with("shift_symmetric_count\tlambda=2,1\t5\t5\ttrue"), "{line}");
    }
}
