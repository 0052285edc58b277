//! Partitions, skew shapes and standard Young tableaux.
//!
//! Cells are addressed by [`Cell`] with rows and columns counted from 1.
//! Entries of a standard tableau with `N` cells are exactly `1..=N`.

mod jdt;
mod ops;

pub use jdt::{promote, promote_bounded, promote_bounded_inverse, promote_inverse, rectify, rectify_with, slide};
pub use ops::{
    complement, evacuate, fold, is_domino, is_rotationally_symmetric, partial_fold, rotate180_complement,
    unfold,
};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A box of a diagram, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    /// Edge-adjacent (sharing a side).
    pub fn is_adjacent(&self, other: &Cell) -> bool {
        (self.row == other.row && self.col.abs_diff(other.col) == 1)
            || (self.col == other.col && self.row.abs_diff(other.row) == 1)
    }
}

/// A skew shape `outer / inner`; a straight shape has an empty `inner`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Shape {
    outer: Vec<usize>,
    inner: Vec<usize>,
}

impl Shape {
    /// Builds and validates a skew shape. Trailing zero parts are dropped.
    pub fn new(outer: Vec<usize>, inner: Vec<usize>) -> Result<Self> {
        let outer = trim(outer);
        let inner = trim(inner);
        if outer.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(format!("outer {outer:?} is not weakly decreasing")));
        }
        if inner.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(format!("inner {inner:?} is not weakly decreasing")));
        }
        if inner.len() > outer.len() || inner.iter().zip(&outer).any(|(i, o)| i > o) {
            return Err(Error::InvalidShape(format!("inner {inner:?} does not fit in outer {outer:?}")));
        }
        Ok(Shape { outer, inner })
    }

    pub fn straight(outer: Vec<usize>) -> Result<Self> {
        Shape::new(outer, Vec::new())
    }

    /// The `rows × cols` rectangle.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        Shape {
            outer: if cols == 0 { Vec::new() } else { vec![cols; rows] },
            inner: Vec::new(),
        }
    }

    pub fn outer(&self) -> &[usize] {
        &self.outer
    }

    pub fn inner(&self) -> &[usize] {
        &self.inner
    }

    pub fn num_rows(&self) -> usize {
        self.outer.len()
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn is_rectangle(&self) -> bool {
        self.is_straight() && self.outer.windows(2).all(|w| w[0] == w[1])
    }

    /// `|λ/μ|`.
    pub fn size(&self) -> usize {
        self.outer.iter().sum::<usize>() - self.inner.iter().sum::<usize>()
    }

    pub(crate) fn inner_len(&self, row0: usize) -> usize {
        self.inner.get(row0).copied().unwrap_or(0)
    }

    pub(crate) fn outer_len(&self, row0: usize) -> usize {
        self.outer.get(row0).copied().unwrap_or(0)
    }

    /// Whether `cell` lies in `λ/μ`.
    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1
            && cell.col >= 1
            && cell.col <= self.outer_len(cell.row - 1)
            && cell.col > self.inner_len(cell.row - 1)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (0..self.outer.len()).flat_map(move |r| {
            (self.inner_len(r)..self.outer[r]).map(move |c| Cell::new(r + 1, c + 1))
        })
    }

    /// Removable corners of the inner shape: cells of `μ` with no cell of `μ`
    /// to the right or below.
    pub fn inner_corners(&self) -> Vec<Cell> {
        (0..self.inner.len())
            .filter(|&r| self.inner[r] > 0 && self.inner_len(r + 1) < self.inner[r])
            .map(|r| Cell::new(r + 1, self.inner[r]))
            .collect()
    }
}

fn trim(mut parts: Vec<usize>) -> Vec<usize> {
    while parts.last() == Some(&0) {
        parts.pop();
    }
    parts
}

/// A standard Young tableau of a possibly skew shape.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: Shape,
    /// `rows[r][c]`, 0-based; cells of the inner shape hold 0.
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    /// Builds a straight-shape tableau from its rows.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        let shape = Shape::straight(rows.iter().map(Vec::len).collect())?;
        if shape.num_rows() != rows.iter().filter(|r| !r.is_empty()).count() {
            return Err(Error::InvalidShape("empty row before a non-empty row".into()));
        }
        let rows = rows.into_iter().filter(|r| !r.is_empty()).collect();
        Tableau::from_parts(shape, rows)
    }

    /// Builds a tableau from a shape and full-width rows (inner cells ignored).
    pub fn from_parts(shape: Shape, mut rows: Vec<Vec<u32>>) -> Result<Self> {
        if rows.len() != shape.num_rows() {
            return Err(Error::NotStandard(format!(
                "{} rows given for a shape with {} rows",
                rows.len(),
                shape.num_rows()
            )));
        }
        for (r, row) in rows.iter_mut().enumerate() {
            if row.len() != shape.outer[r] {
                return Err(Error::NotStandard(format!("row {} has the wrong length", r + 1)));
            }
            for v in row.iter_mut().take(shape.inner_len(r)) {
                *v = 0;
            }
        }
        let t = Tableau { shape, rows };
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<()> {
        let n = self.shape.size();
        let mut seen = vec![false; n + 1];
        for cell in self.shape.cells() {
            let v = self.at(cell) as usize;
            if v == 0 || v > n || seen[v] {
                return Err(Error::NotStandard(format!("entry {v} at ({}, {})", cell.row, cell.col)));
            }
            seen[v] = true;
            let right = Cell::new(cell.row, cell.col + 1);
            if self.shape.contains(right) && self.at(right) <= v as u32 {
                return Err(Error::NotStandard(format!("row {} does not increase", cell.row)));
            }
            let below = Cell::new(cell.row + 1, cell.col);
            if self.shape.contains(below) && self.at(below) <= v as u32 {
                return Err(Error::NotStandard(format!("column {} does not increase", cell.col)));
            }
        }
        Ok(())
    }

    /// Decodes a straight-shape row-index word, inferring the shape from the
    /// letter multiplicities.
    pub fn from_word(word: &str) -> Result<Self> {
        let letters = parse_word(word)?;
        check_lattice(&letters)?;
        let rows = letters.iter().copied().max().unwrap_or(0) as usize;
        let mut out: Vec<Vec<u32>> = vec![Vec::new(); rows];
        for (i, &r) in letters.iter().enumerate() {
            out[r as usize - 1].push(i as u32 + 1);
        }
        Tableau::from_rows(out)
    }

    /// Decodes a row-index word on an explicit (possibly skew) shape.
    pub fn from_shape_word(shape: Shape, word: &str) -> Result<Self> {
        let letters = parse_word(word)?;
        if letters.len() != shape.size() {
            return Err(Error::MalformedWord(format!(
                "word has {} letters but the shape has {} cells",
                letters.len(),
                shape.size()
            )));
        }
        let mut rows: Vec<Vec<u32>> = shape.outer.iter().map(|&len| vec![0; len]).collect();
        let mut next: Vec<usize> = (0..shape.num_rows()).map(|r| shape.inner_len(r)).collect();
        for (i, &r) in letters.iter().enumerate() {
            let r = r as usize - 1;
            if r >= rows.len() || next[r] >= shape.outer[r] {
                return Err(Error::MalformedWord(format!("row {} overflows at letter {}", r + 1, i + 1)));
            }
            rows[r][next[r]] = i as u32 + 1;
            next[r] += 1;
        }
        Tableau::from_parts(shape, rows)
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    /// Number of cells `N`.
    pub fn size(&self) -> usize {
        self.shape.size()
    }

    /// Entry at `cell`; 0 for cells outside `λ/μ`.
    pub fn at(&self, cell: Cell) -> u32 {
        if !self.shape.contains(cell) {
            return 0;
        }
        self.rows[cell.row - 1][cell.col - 1]
    }

    /// Where `value` sits, if present.
    pub fn find(&self, value: u32) -> Option<Cell> {
        self.shape.cells().find(|&c| self.at(c) == value)
    }

    /// Cell of every entry, indexed by value (index 0 unused).
    pub fn positions(&self) -> Vec<Cell> {
        let mut pos = vec![Cell::new(0, 0); self.size() + 1];
        for cell in self.shape.cells() {
            pos[self.at(cell) as usize] = cell;
        }
        pos
    }

    /// Entries of row `row` (1-based), skipping inner cells.
    pub fn row(&self, row: usize) -> &[u32] {
        match self.rows.get(row - 1) {
            Some(r) => &r[self.shape.inner_len(row - 1)..],
            None => &[],
        }
    }

    /// Full-width rows with 0 in inner cells.
    pub fn raw_rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// The row-index word `w_1 … w_N` as row numbers.
    pub fn row_letters(&self) -> Vec<u8> {
        let mut word = vec![0u8; self.size()];
        for cell in self.shape.cells() {
            word[self.at(cell) as usize - 1] = cell.row as u8;
        }
        word
    }

    /// The row-index word as an ASCII digit string.
    pub fn word(&self) -> String {
        self.row_letters().iter().map(|&r| char::from(b'0' + r)).collect()
    }

    /// `T_{≤k}`: the subtableau of entries at most `k`, on the shape
    /// `(μ ∪ cells ≤ k) / μ`.
    pub fn at_most(&self, k: usize) -> Result<Tableau> {
        let n = self.size();
        if k > n {
            return Err(Error::OutOfRange { what: "k", value: k as i64, lo: 0, hi: n as i64 });
        }
        let outer: Vec<usize> = (0..self.shape.num_rows())
            .map(|r| {
                let start = self.shape.inner_len(r);
                start + self.rows[r][start..].iter().filter(|&&v| v as usize <= k).count()
            })
            .collect();
        let shape = Shape::new(outer, self.shape.inner.clone())?;
        let rows = shape.outer.iter().enumerate().map(|(r, &len)| self.rows[r][..len].to_vec()).collect();
        Tableau::from_parts(shape, rows)
    }

    /// `T_{>k} − k`: entries above `k`, relabelled down by `k`, on the shape
    /// `λ / (μ ∪ cells ≤ k)`.
    pub fn above(&self, k: usize) -> Result<Tableau> {
        let n = self.size();
        if k > n {
            return Err(Error::OutOfRange { what: "k", value: k as i64, lo: 0, hi: n as i64 });
        }
        let inner: Vec<usize> = (0..self.shape.num_rows())
            .map(|r| {
                let start = self.shape.inner_len(r);
                start + self.rows[r][start..].iter().filter(|&&v| v as usize <= k).count()
            })
            .collect();
        let shape = Shape::new(self.shape.outer.clone(), inner)?;
        let rows = self
            .rows
            .iter()
            .map(|row| row.iter().map(|&v| if v as usize > k { v - k as u32 } else { 0 }).collect())
            .collect();
        Tableau::from_parts(shape, rows)
    }

    pub(crate) fn from_parts_unchecked(shape: Shape, rows: Vec<Vec<u32>>) -> Tableau {
        Tableau { shape, rows }
    }

    pub(crate) fn rows_mut(&mut self) -> &mut Vec<Vec<u32>> {
        &mut self.rows
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.size().to_string().len();
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row
                .iter()
                .enumerate()
                .map(|(c, v)| {
                    if c < self.shape.inner_len(r) {
                        format!("{:>width$}", ".")
                    } else {
                        format!("{v:>width$}")
                    }
                })
                .collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

fn parse_word(word: &str) -> Result<Vec<u8>> {
    word.trim()
        .bytes()
        .enumerate()
        .map(|(i, b)| match b {
            b'1'..=b'9' => Ok(b - b'0'),
            _ => Err(Error::MalformedWord(format!("letter {} is not a digit 1-9", i + 1))),
        })
        .collect()
}

/// Every prefix contains at least as many `r`s as `(r+1)`s.
pub fn check_lattice(letters: &[u8]) -> Result<()> {
    let mut counts = [0usize; 10];
    for (i, &r) in letters.iter().enumerate() {
        let r = r as usize;
        if r == 0 || r > 9 {
            return Err(Error::MalformedWord(format!("letter {r} out of range")));
        }
        counts[r] += 1;
        if r > 1 && counts[r] > counts[r - 1] {
            return Err(Error::NonLatticeWord { position: i + 1 });
        }
    }
    Ok(())
}

/// Serialized form: `{"outer":[…],"inner":[…],"word":"…"}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TableauJson {
    pub outer: Vec<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub inner: Vec<usize>,
    pub word: String,
}

impl From<&Tableau> for TableauJson {
    fn from(t: &Tableau) -> Self {
        TableauJson { outer: t.shape.outer.clone(), inner: t.shape.inner.clone(), word: t.word() }
    }
}

impl TryFrom<TableauJson> for Tableau {
    type Error = Error;

    fn try_from(j: TableauJson) -> Result<Tableau> {
        Tableau::from_shape_word(Shape::new(j.outer, j.inner)?, &j.word)
    }
}

impl Serialize for Tableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TableauJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = TableauJson::deserialize(d)?;
        Tableau::try_from(j).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_round_trip() {
        let t = Tableau::from_word("111122213132223333").unwrap();
        assert_eq!(t.row(1), &[1, 2, 3, 4, 8, 10]);
        assert_eq!(t.row(2), &[5, 6, 7, 12, 13, 14]);
        assert_eq!(t.row(3), &[9, 11, 15, 16, 17, 18]);
        assert_eq!(t.word(), "111122213132223333");
    }

    #[test]
    fn lattice_violation_is_rejected() {
        assert_eq!(Tableau::from_word("1213322").unwrap_err(), Error::NonLatticeWord { position: 5 });
        assert!(matches!(Tableau::from_word("21"), Err(Error::NonLatticeWord { position: 1 })));
    }

    #[test]
    fn non_partition_multiplicities_fail() {
        // ballot-valid words always give partitions; a bad letter does not parse
        assert!(matches!(Tableau::from_word("1a"), Err(Error::MalformedWord(_))));
    }

    #[test]
    fn from_rows_rejects_non_standard() {
        assert!(Tableau::from_rows(vec![vec![1, 3], vec![2, 4]]).is_ok());
        assert!(matches!(Tableau::from_rows(vec![vec![1, 2], vec![4, 3]]), Err(Error::NotStandard(_))));
        assert!(matches!(Tableau::from_rows(vec![vec![2, 3], vec![1, 4]]), Err(Error::NotStandard(_))));
        assert!(matches!(Tableau::from_rows(vec![vec![1], vec![2, 3]]), Err(Error::InvalidShape(_))));
    }

    #[test]
    fn skew_word_decoding() {
        let shape = Shape::new(vec![2, 2, 2], vec![1, 1]).unwrap();
        let c = Tableau::from_shape_word(shape, "1323").unwrap();
        assert_eq!(c.row(1), &[1]);
        assert_eq!(c.row(2), &[3]);
        assert_eq!(c.row(3), &[2, 4]);
        assert_eq!(c.word(), "1323");
    }

    #[test]
    fn restriction_and_shift() {
        let t = Tableau::from_rows(vec![vec![1, 2, 5], vec![3, 4, 8], vec![6, 7, 9]]).unwrap();
        let low = t.at_most(4).unwrap();
        assert_eq!(low.shape().outer(), &[2, 2]);
        let high = t.above(1).unwrap();
        assert_eq!(high.shape().inner(), &[1]);
        assert_eq!(high.row(1), &[1, 4]);
        assert_eq!(high.at(Cell::new(3, 3)), 8);
        assert!(t.above(10).is_err());
    }

    #[test]
    fn json_round_trip() {
        let t = Tableau::from_shape_word(Shape::new(vec![2, 2, 2], vec![1, 1]).unwrap(), "1323").unwrap();
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(s, r#"{"outer":[2,2,2],"inner":[1,1],"word":"1323"}"#);
        let back: Tableau = serde_json::from_str(&s).unwrap();
        assert_eq!(back, t);
        let straight: Tableau = serde_json::from_str(r#"{"outer":[2,2],"word":"1212"}"#).unwrap();
        assert_eq!(straight.row(2), &[2, 4]);
    }

    #[test]
    fn corners_of_inner_shape() {
        let s = Shape::new(vec![5, 5, 4, 4], vec![3, 1]).unwrap();
        assert_eq!(s.inner_corners(), vec![Cell::new(1, 3), Cell::new(2, 1)]);
        assert_eq!(s.size(), 14);
        assert!(Shape::new(vec![2, 3], vec![]).is_err());
        assert!(Shape::new(vec![2, 2], vec![3]).is_err());
    }
}
