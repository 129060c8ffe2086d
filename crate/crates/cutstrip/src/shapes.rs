//! Partitions, skew diagrams, box geometry, contents, diagonals and
//! connectivity.
//!
//! English convention throughout: rows grow downward, columns rightward,
//! both 1-based; the content of a box is `column - row`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// One box of a diagram.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Pos {
    pub row: i32,
    pub col: i32,
}

impl Pos {
    pub fn new(row: i32, col: i32) -> Self {
        Pos { row, col }
    }

    pub fn content(&self) -> i32 {
        self.col - self.row
    }

    pub fn up(&self) -> Pos {
        Pos::new(self.row - 1, self.col)
    }

    pub fn down(&self) -> Pos {
        Pos::new(self.row + 1, self.col)
    }

    pub fn left(&self) -> Pos {
        Pos::new(self.row, self.col - 1)
    }

    pub fn right(&self) -> Pos {
        Pos::new(self.row, self.col + 1)
    }
}

/// A partition: weakly decreasing positive parts, no trailing zeros stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Trailing zeros are stripped; an increase anywhere is rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must be weakly decreasing: {parts:?}"
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The i-th part (0-based), zero beyond the stored length.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn sum(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.len()).all(|i| self.part(i) >= other.part(i))
    }

    pub fn conjugate(&self) -> Partition {
        let max = self.part(0) as usize;
        let parts = (1..=max)
            .map(|c| self.parts.iter().filter(|&&p| p as usize >= c).count() as u32)
            .collect();
        Partition { parts }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "[]");
        }
        if self.parts.iter().all(|&p| p <= 9) {
            for p in &self.parts {
                write!(f, "{p}")?;
            }
            Ok(())
        } else {
            write!(f, "[")?;
            for (i, p) in self.parts.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, "]")
        }
    }
}

fn parse_partition(text: &str, offset: usize, original: &str) -> Result<Partition> {
    let err = |pos: usize, msg: &str| Error::Parse {
        input: original.to_string(),
        pos: offset + pos,
        msg: msg.to_string(),
    };
    let t = text.trim();
    if t.is_empty() || t == "[]" {
        return Ok(Partition::empty());
    }
    let parts: Vec<u32> = if let Some(inner) = t.strip_prefix('[') {
        let inner = inner
            .strip_suffix(']')
            .ok_or_else(|| err(text.len(), "expected closing ']'"))?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let mut out = Vec::new();
        for piece in inner.split(',') {
            let p: u32 = piece
                .trim()
                .parse()
                .map_err(|_| err(0, "expected a positive integer part"))?;
            if p == 0 {
                return Err(err(0, "zero parts are not allowed"));
            }
            out.push(p);
        }
        out
    } else {
        // Compact digit form: one digit per part, 1-9 only.
        let mut out = Vec::new();
        for (i, ch) in t.char_indices() {
            match ch.to_digit(10) {
                Some(d) if d >= 1 => out.push(d),
                Some(_) => return Err(err(i, "digit 0 not allowed in compact form")),
                None => return Err(err(i, "expected a digit 1-9")),
            }
        }
        out
    };
    Partition::new(parts).map_err(|e| err(0, &e.to_string()))
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_partition(s, 0, s)
    }
}

/// Skew diagram λ/μ. The box set is `{(i,j) : μ_i < j ≤ λ_i}` with μ padded
/// internally by zeros to the length of λ.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

/// All boxes of one content, sorted top to bottom (increasing row).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Diagonal {
    pub content: i32,
    pub boxes: Vec<Pos>,
}

impl Diagonal {
    pub fn size(&self) -> usize {
        self.boxes.len()
    }

    /// Topmost box (smallest row).
    pub fn top_box(&self) -> Pos {
        self.boxes[0]
    }

    /// Bottommost box (largest row).
    pub fn bottom_box(&self) -> Pos {
        *self.boxes.last().unwrap()
    }
}

/// Diagonal classification for the twist transformation, read off two facts:
/// does the top box of the diagonal have a box above it, and does the bottom
/// box have a box to its right.
///
/// Type 1 = (yes, no), Type 2 = (no, yes), Type 3 = (no, no),
/// Type 4 = (yes, yes). Types 1 and 2 change the determinant order under a
/// twist; Types 3 and 4 preserve it.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DiagonalType {
    Type1,
    Type2,
    Type3,
    Type4,
}

impl DiagonalType {
    pub fn from_flags(top_of_top: bool, right_of_bottom: bool) -> Self {
        match (top_of_top, right_of_bottom) {
            (true, false) => DiagonalType::Type1,
            (false, true) => DiagonalType::Type2,
            (false, false) => DiagonalType::Type3,
            (true, true) => DiagonalType::Type4,
        }
    }

    pub fn number(&self) -> u8 {
        match self {
            DiagonalType::Type1 => 1,
            DiagonalType::Type2 => 2,
            DiagonalType::Type3 => 3,
            DiagonalType::Type4 => 4,
        }
    }

    /// Whether a twist at a diagonal of this type changes the matrix order.
    pub fn order_changing(&self) -> bool {
        matches!(self, DiagonalType::Type1 | DiagonalType::Type2)
    }
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InnerNotContained(format!("{inner} inside {outer}")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn empty() -> Self {
        SkewShape {
            outer: Partition::empty(),
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// Number of rows of λ.
    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    pub fn num_boxes(&self) -> u64 {
        (0..self.rows())
            .map(|i| (self.outer.part(i) - self.inner.part(i)) as u64)
            .sum()
    }

    pub fn is_empty(&self) -> bool {
        self.num_boxes() == 0
    }

    pub fn contains(&self, p: Pos) -> bool {
        if p.row < 1 || p.row as usize > self.rows() || p.col < 1 {
            return false;
        }
        let i = (p.row - 1) as usize;
        (p.col as u32) > self.inner.part(i) && (p.col as u32) <= self.outer.part(i)
    }

    /// Boxes in row-major order.
    pub fn boxes(&self) -> Vec<Pos> {
        let mut out = Vec::new();
        for i in 0..self.rows() {
            for c in self.inner.part(i) + 1..=self.outer.part(i) {
                out.push(Pos::new(i as i32 + 1, c as i32));
            }
        }
        out
    }

    pub fn conjugate(&self) -> SkewShape {
        SkewShape {
            outer: self.outer.conjugate(),
            inner: self.inner.conjugate(),
        }
    }

    /// Smallest and largest occupied content, if nonempty.
    pub fn content_range(&self) -> Option<(i32, i32)> {
        let mut lo = i32::MAX;
        let mut hi = i32::MIN;
        for i in 0..self.rows() {
            let inner = self.inner.part(i);
            let outer = self.outer.part(i);
            if outer > inner {
                lo = lo.min(inner as i32 + 1 - (i as i32 + 1));
                hi = hi.max(outer as i32 - (i as i32 + 1));
            }
        }
        (lo <= hi).then_some((lo, hi))
    }

    pub fn diagonal_boxes(&self, content: i32) -> Vec<Pos> {
        let mut out = Vec::new();
        for i in 0..self.rows() {
            let row = i as i32 + 1;
            let col = row + content;
            let p = Pos::new(row, col);
            if self.contains(p) {
                out.push(p);
            }
        }
        out
    }

    /// One `Diagonal` per occupied content, ordered by increasing content.
    pub fn diagonals(&self) -> Vec<Diagonal> {
        let Some((lo, hi)) = self.content_range() else {
            return Vec::new();
        };
        (lo..=hi)
            .filter_map(|content| {
                let boxes = self.diagonal_boxes(content);
                (!boxes.is_empty()).then_some(Diagonal { content, boxes })
            })
            .collect()
    }

    /// d = number of occupied contents.
    pub fn diagonal_count(&self) -> usize {
        self.diagonals().len()
    }

    pub fn is_connected(&self) -> bool {
        self.blocks().len() <= 1
    }

    /// Maximal edgewise-connected components, top to bottom, each
    /// renormalized so its minimal row and column are 1.
    pub fn blocks(&self) -> Vec<SkewShape> {
        self.blocks_with_offsets()
            .into_iter()
            .map(|(b, _, _)| b)
            .collect()
    }

    /// Blocks with the (row, col) offsets mapping block coordinates back to
    /// the original diagram: original = block + offset.
    pub fn blocks_with_offsets(&self) -> Vec<(SkewShape, i32, i32)> {
        // Rows of a skew diagram are contiguous, so components are maximal
        // runs of nonempty rows where consecutive rows overlap in a column.
        let mut runs: Vec<Vec<usize>> = Vec::new();
        for i in 0..self.rows() {
            if self.outer.part(i) == self.inner.part(i) {
                continue; // empty row splits everything adjacent to it
            }
            let touches_prev = match runs.last().and_then(|r| r.last()) {
                Some(&j) if j + 1 == i => {
                    // share a column: row i spans (μ_i, λ_i], row j spans (μ_j, λ_j]
                    self.outer.part(i) > self.inner.part(j)
                        && self.outer.part(j) > self.inner.part(i)
                }
                _ => false,
            };
            if touches_prev {
                runs.last_mut().unwrap().push(i);
            } else {
                runs.push(vec![i]);
            }
        }
        runs.into_iter()
            .map(|rows| {
                let min_col = rows.iter().map(|&i| self.inner.part(i) + 1).min().unwrap();
                let row_off = rows[0] as i32;
                let col_off = min_col as i32 - 1;
                let outer = rows
                    .iter()
                    .map(|&i| self.outer.part(i) - (min_col - 1))
                    .collect();
                let inner = rows
                    .iter()
                    .map(|&i| self.inner.part(i) - (min_col - 1))
                    .collect();
                let block = SkewShape {
                    outer: Partition::new(outer).expect("block outer is a partition"),
                    inner: Partition::new(inner).expect("block inner is a partition"),
                };
                (block, row_off, col_off)
            })
            .collect()
    }

    /// The two classification flags of a diagonal: (top box has a box above,
    /// bottom box has a box to its right).
    pub fn diagonal_flags(&self, content: i32) -> Result<(bool, bool)> {
        let boxes = self.diagonal_boxes(content);
        if boxes.is_empty() {
            return Err(Error::NoSuchDiagonal(content));
        }
        let top = boxes[0];
        let bottom = *boxes.last().unwrap();
        Ok((self.contains(top.up()), self.contains(bottom.right())))
    }

    pub fn diagonal_type(&self, content: i32) -> Result<DiagonalType> {
        let (a, b) = self.diagonal_flags(content)?;
        Ok(DiagonalType::from_flags(a, b))
    }

    /// Rebuild a normalized skew shape from a box set. The set must form a
    /// valid skew diagram: contiguous rows and row segments whose left and
    /// right ends weakly decrease downward.
    pub fn from_boxes(boxes: &[Pos]) -> Result<SkewShape> {
        if boxes.is_empty() {
            return Ok(SkewShape::empty());
        }
        let set: BTreeSet<Pos> = boxes.iter().copied().collect();
        let min_row = set.iter().map(|p| p.row).min().unwrap();
        let max_row = set.iter().map(|p| p.row).max().unwrap();
        let min_col = set.iter().map(|p| p.col).min().unwrap();
        let mut outer = Vec::new();
        let mut inner = Vec::new();
        for row in min_row..=max_row {
            let cols: Vec<i32> = set
                .iter()
                .filter(|p| p.row == row)
                .map(|p| p.col)
                .collect();
            if cols.is_empty() {
                return Err(Error::NotSkew(format!("row {row} is empty")));
            }
            let lo = *cols.first().unwrap();
            let hi = *cols.last().unwrap();
            if (hi - lo + 1) as usize != cols.len() {
                return Err(Error::NotSkew(format!("row {row} is not contiguous")));
            }
            outer.push((hi - min_col + 1) as u32);
            inner.push((lo - min_col) as u32);
        }
        let outer = Partition::new(outer)
            .map_err(|_| Error::NotSkew("row ends must weakly decrease downward".into()))?;
        let inner = Partition::new(inner)
            .map_err(|_| Error::NotSkew("row starts must weakly decrease downward".into()))?;
        SkewShape::new(outer, inner)
    }

    /// Translation-canonical form of the box set (empty rows are rejected,
    /// so this is defined for shapes without gap rows; every connected shape
    /// qualifies).
    pub fn normalized(&self) -> Result<SkewShape> {
        if self.is_empty() {
            return Ok(SkewShape::empty());
        }
        SkewShape::from_boxes(&self.boxes())
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let compact = self.outer.parts().iter().all(|&p| p <= 9)
            && self.inner.parts().iter().all(|&p| p <= 9)
            && !self.outer.is_empty();
        let one = |p: &Partition| -> String {
            if compact {
                p.parts().iter().map(|v| v.to_string()).collect()
            } else {
                format!(
                    "[{}]",
                    p.parts()
                        .iter()
                        .map(|v| v.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                )
            }
        };
        if self.outer.is_empty() {
            return write!(f, "[]");
        }
        write!(f, "{}", one(&self.outer))?;
        if !self.inner.is_empty() {
            write!(f, "/{}", one(&self.inner))?;
        }
        Ok(())
    }
}

impl FromStr for SkewShape {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        match t.find('/') {
            Some(pos) => {
                let outer = parse_partition(&t[..pos], 0, s)?;
                let inner = parse_partition(&t[pos + 1..], pos + 1, s)?;
                SkewShape::new(outer, inner)
            }
            None => Ok(SkewShape::straight(parse_partition(t, 0, s)?)),
        }
    }
}
