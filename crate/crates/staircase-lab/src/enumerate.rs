//! Exhaustive enumeration of standard fillings by depth-first search.
//!
//! This walks the linear extensions of the diagram poset directly, placing
//! labels `1, 2, ...` into cells whose west and north neighbours are already
//! filled. It never touches the hook-length formula, which makes it the
//! independent oracle the counting layer is tested against.

use crate::error::{Error, Result};
use crate::partition::{DiagramKind, Partition};
use crate::tableau::Tableau;

/// Calls `f` with every standard tableau of the given shape.
pub fn for_each_tableau<F: FnMut(&Tableau)>(shape: &Partition, kind: DiagramKind, mut f: F) -> Result<()> {
    if kind == DiagramKind::Shifted && !shape.is_strict() {
        return Err(Error::ShiftedOfNonStrict);
    }
    let size = shape.size() as u32;
    let ell = shape.length() as usize;
    let mut rows: Vec<Vec<u32>> = (1..=shape.length())
        .map(|i| Vec::with_capacity(shape.part(i) as usize))
        .collect();

    fn rec<F: FnMut(&Tableau)>(
        shape: &Partition,
        kind: DiagramKind,
        rows: &mut Vec<Vec<u32>>,
        next: u32,
        size: u32,
        ell: usize,
        f: &mut F,
    ) {
        if next > size {
            f(&Tableau::from_rows_unchecked(kind, rows.clone()));
            return;
        }
        for i in 0..ell {
            let filled = rows[i].len() as u32;
            if filled >= shape.part(i as u32 + 1) {
                continue;
            }
            // Next open cell of row i+1; its north neighbour must be filled.
            let col = shape.row_start(kind, i as u32 + 1) + filled;
            if i > 0 {
                let above_filled = rows[i - 1].len() as u32;
                if col >= shape.row_start(kind, i as u32) + above_filled {
                    continue;
                }
            }
            rows[i].push(next);
            rec(shape, kind, rows, next + 1, size, ell, f);
            rows[i].pop();
        }
    }

    rec(shape, kind, &mut rows, 1, size, ell, &mut f);
    Ok(())
}

/// All standard tableaux of the shape. Intended for desk-scale shapes.
pub fn enumerate_tableaux(shape: &Partition, kind: DiagramKind) -> Result<Vec<Tableau>> {
    let mut out = Vec::new();
    for_each_tableau(shape, kind, |t| out.push(t.clone()))?;
    Ok(out)
}

/// Number of standard tableaux by brute force.
pub fn count_by_enumeration(shape: &Partition, kind: DiagramKind) -> Result<u64> {
    let mut n = 0u64;
    for_each_tableau(shape, kind, |_| n += 1)?;
    Ok(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn staircase_counts() {
        let d4 = Partition::staircase(4);
        assert_eq!(count_by_enumeration(&d4, DiagramKind::Shifted).unwrap(), 2);
        let d5 = Partition::staircase(5);
        assert_eq!(count_by_enumeration(&d5, DiagramKind::Shifted).unwrap(), 12);
    }

    #[test]
    fn rectangle_count() {
        let r = Partition::new(vec![4, 4, 4]).unwrap();
        assert_eq!(count_by_enumeration(&r, DiagramKind::Ordinary).unwrap(), 462);
    }

    #[test]
    fn shifted_staircase_tableaux_of_order_four() {
        let ts = enumerate_tableaux(&Partition::staircase(4), DiagramKind::Shifted).unwrap();
        let rows: Vec<_> = ts.iter().map(|t| t.rows().to_vec()).collect();
        assert!(rows.contains(&vec![vec![1, 2, 3], vec![4, 5], vec![6]]));
        assert!(rows.contains(&vec![vec![1, 2, 4], vec![3, 5], vec![6]]));
    }

    #[test]
    fn empty_shape_has_one_filling() {
        let e = Partition::empty();
        assert_eq!(count_by_enumeration(&e, DiagramKind::Ordinary).unwrap(), 1);
        assert_eq!(count_by_enumeration(&e, DiagramKind::Shifted).unwrap(), 1);
    }
}
