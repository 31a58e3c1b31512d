//! Standard Young tableaux on ordinary and shifted diagrams.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Cell, DiagramKind, Partition};

/// A standard filling of a (possibly shifted) diagram by `1 ..= size`.
///
/// `rows[i]` lists the entries of row `i + 1` left to right at the actual
/// diagram cells, so for shifted shapes `rows[i][k]` sits at column
/// `(i + 1) + k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: Partition,
    kind: DiagramKind,
    rows: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
struct TableauRepr {
    shape: String,
    kind: DiagramKind,
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    /// Builds a tableau from its rows, validating shape and standardness.
    pub fn from_rows(kind: DiagramKind, rows: Vec<Vec<u32>>) -> Result<Self> {
        let parts: Vec<u32> = rows.iter().map(|r| r.len() as u32).collect();
        let shape = Partition::new(parts).map_err(|_| Error::NotStandard("row lengths do not form a partition".into()))?;
        if kind == DiagramKind::Shifted && !shape.is_strict() {
            return Err(Error::ShiftedOfNonStrict);
        }
        let t = Tableau { shape, kind, rows };
        t.validate()?;
        Ok(t)
    }

    /// Internal constructor for callers that guarantee standardness.
    pub(crate) fn from_rows_unchecked(kind: DiagramKind, rows: Vec<Vec<u32>>) -> Self {
        let parts: Vec<u32> = rows.iter().map(|r| r.len() as u32).collect();
        let t = Tableau {
            shape: Partition::new(parts).expect("row lengths form a partition"),
            kind,
            rows,
        };
        debug_assert!(t.validate().is_ok(), "constructed tableau is standard");
        t
    }

    pub fn empty(kind: DiagramKind) -> Self {
        Tableau {
            shape: Partition::empty(),
            kind,
            rows: Vec::new(),
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn kind(&self) -> DiagramKind {
        self.kind
    }

    pub fn size(&self) -> u32 {
        self.shape.size() as u32
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn row_start(&self, i: u32) -> u32 {
        self.shape.row_start(self.kind, i)
    }

    /// Entry at `cell`, or `None` outside the diagram.
    pub fn entry(&self, cell: Cell) -> Option<u32> {
        if !self.shape.contains_cell(self.kind, cell) {
            return None;
        }
        let off = (cell.col - self.row_start(cell.row)) as usize;
        Some(self.rows[cell.row as usize - 1][off])
    }

    /// Cell of each label: `positions()[m - 1]` holds label `m`.
    pub fn positions(&self) -> Vec<Cell> {
        let mut pos = vec![Cell::new(1, 1); self.size() as usize];
        for (i, row) in self.rows.iter().enumerate() {
            let r = i as u32 + 1;
            let start = self.row_start(r);
            for (k, &label) in row.iter().enumerate() {
                pos[label as usize - 1] = Cell::new(r, start + k as u32);
            }
        }
        pos
    }

    /// Cell holding `label`.
    pub fn position_of(&self, label: u32) -> Option<Cell> {
        if label == 0 || label > self.size() {
            return None;
        }
        for (i, row) in self.rows.iter().enumerate() {
            if let Some(k) = row.iter().position(|&v| v == label) {
                let r = i as u32 + 1;
                return Some(Cell::new(r, self.row_start(r) + k as u32));
            }
        }
        None
    }

    /// Checks that entries are a bijection onto `1..=size` increasing along
    /// rows and columns.
    pub fn validate(&self) -> Result<()> {
        let size = self.size() as usize;
        let mut seen = vec![false; size];
        for row in &self.rows {
            for &v in row {
                if v == 0 || v as usize > size {
                    return Err(Error::NotStandard(format!("entry {v} outside 1..={size}")));
                }
                if seen[v as usize - 1] {
                    return Err(Error::NotStandard(format!("entry {v} repeated")));
                }
                seen[v as usize - 1] = true;
            }
        }
        for (i, row) in self.rows.iter().enumerate() {
            let r = i as u32 + 1;
            for (k, &v) in row.iter().enumerate() {
                if k + 1 < row.len() && row[k + 1] <= v {
                    return Err(Error::NotStandard(format!("row {r} not increasing")));
                }
                let cell = Cell::new(r, self.row_start(r) + k as u32);
                if let Some(below) = self.entry(cell.south()) {
                    if below <= v {
                        return Err(Error::NotStandard(format!("column {} not increasing", cell.col)));
                    }
                }
            }
        }
        Ok(())
    }

    /// The JSON fixture encoding, e.g.
    /// `{"shape":"4,3,2,1","kind":"shifted","rows":[[1,2,4,5],[3,6,7],[8,9],[10]]}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&TableauRepr {
            shape: self.shape.to_string(),
            kind: self.kind,
            rows: self.rows.clone(),
        })
        .expect("tableau serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let repr: TableauRepr = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let shape: Partition = repr.shape.parse()?;
        let t = Tableau::from_rows(repr.kind, repr.rows)?;
        if t.shape != shape {
            return Err(Error::Parse("shape field disagrees with rows".into()));
        }
        Ok(t)
    }
}

impl Serialize for Tableau {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        TableauRepr {
            shape: self.shape.to_string(),
            kind: self.kind,
            rows: self.rows.clone(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let repr = TableauRepr::deserialize(de)?;
        Tableau::from_rows(repr.kind, repr.rows).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            let r = i as u32 + 1;
            let indent = (self.row_start(r) - 1) as usize;
            write!(f, "{}", "    ".repeat(indent))?;
            for &v in row {
                write!(f, "{v:>3} ")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig1a() -> Tableau {
        Tableau::from_rows(
            DiagramKind::Shifted,
            vec![vec![1, 2, 4, 5], vec![3, 6, 7], vec![8, 9], vec![10]],
        )
        .unwrap()
    }

    #[test]
    fn entries_and_positions() {
        let t = fig1a();
        assert_eq!(t.size(), 10);
        assert_eq!(t.entry(Cell::new(2, 2)), Some(3));
        assert_eq!(t.entry(Cell::new(2, 1)), None);
        assert_eq!(t.position_of(3), Some(Cell::new(2, 2)));
        assert_eq!(t.positions()[9], Cell::new(4, 4));
    }

    #[test]
    fn standardness_is_enforced() {
        assert!(Tableau::from_rows(DiagramKind::Ordinary, vec![vec![1, 3], vec![2]]).is_ok());
        assert!(Tableau::from_rows(DiagramKind::Ordinary, vec![vec![2, 3], vec![1]]).is_err());
        assert!(Tableau::from_rows(DiagramKind::Ordinary, vec![vec![1, 2], vec![2]]).is_err());
        // shifted column constraint: (2,2) must exceed (1,2)
        assert!(Tableau::from_rows(DiagramKind::Shifted, vec![vec![1, 3], vec![2]]).is_err());
        assert!(Tableau::from_rows(DiagramKind::Shifted, vec![vec![1, 2], vec![3]]).is_ok());
        assert!(Tableau::from_rows(DiagramKind::Shifted, vec![vec![1, 2], vec![3, 4]]).is_err());
    }

    #[test]
    fn json_fixture_round_trip() {
        let t = fig1a();
        let json = t.to_json();
        assert_eq!(
            json,
            r#"{"shape":"4,3,2,1","kind":"shifted","rows":[[1,2,4,5],[3,6,7],[8,9],[10]]}"#
        );
        assert_eq!(Tableau::from_json(&json).unwrap(), t);
        assert!(Tableau::from_json(r#"{"shape":"2","kind":"ordinary","rows":[[1],[2]]}"#).is_err());
    }
}
