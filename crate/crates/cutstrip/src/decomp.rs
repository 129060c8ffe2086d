//! Outside decompositions: validation, the cutting-strip bijection in both
//! directions, enumeration, canonical ordering and inversion numbers.
//!
//! An outside decomposition is a partition of a skew shape into border
//! strips, each starting on the left or bottom perimeter and ending on the
//! top or right perimeter. Within one diagonal all boxes go the same way,
//! so the whole decomposition is encoded by one direction per diagonal: the
//! cutting strip. Conversely any d-box strip over the shape's content range
//! reconstructs the decomposition, which is where the 2^(d-1) count comes
//! from.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::shapes::{Pos, SkewShape};
use crate::strips::{BorderStrip, Direction};

/// A border strip placed inside a shape, kept as its traversal path from the
/// lower-left box upward; box t has content `p + t`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PlacedStrip {
    boxes: Vec<Pos>,
}

impl PlacedStrip {
    /// Build from an unordered box set. The set must have exactly one box
    /// per content over a contiguous range, with consecutive boxes adjacent
    /// by a right or up step.
    pub fn from_box_set(boxes: &[Pos]) -> Result<Self> {
        if boxes.is_empty() {
            return Err(Error::NotBorderStrip("no boxes".into()));
        }
        let set: BTreeSet<Pos> = boxes.iter().copied().collect();
        if set.len() != boxes.len() {
            return Err(Error::NotBorderStrip("duplicate boxes".into()));
        }
        let mut sorted: Vec<Pos> = set.into_iter().collect();
        sorted.sort_by_key(|p| p.content());
        for w in sorted.windows(2) {
            if w[1].content() != w[0].content() + 1 {
                return Err(Error::NotBorderStrip(format!(
                    "contents are not one box per consecutive content near {:?}",
                    w[0]
                )));
            }
            if w[1] != w[0].right() && w[1] != w[0].up() {
                return Err(Error::NotBorderStrip(format!(
                    "boxes {:?} and {:?} are not joined by a right or up step",
                    w[0], w[1]
                )));
            }
        }
        Ok(PlacedStrip { boxes: sorted })
    }

    pub fn boxes(&self) -> &[Pos] {
        &self.boxes
    }

    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn start_box(&self) -> Pos {
        self.boxes[0]
    }

    pub fn end_box(&self) -> Pos {
        *self.boxes.last().unwrap()
    }

    /// Content of the starting box.
    pub fn p(&self) -> i32 {
        self.start_box().content()
    }

    /// Content of the ending box.
    pub fn q(&self) -> i32 {
        self.end_box().content()
    }

    pub fn word(&self) -> Vec<Direction> {
        self.boxes
            .windows(2)
            .map(|w| {
                if w[1] == w[0].right() {
                    Direction::Right
                } else {
                    Direction::Up
                }
            })
            .collect()
    }

    pub fn to_border_strip(&self) -> BorderStrip {
        BorderStrip::new(self.p(), self.word())
    }

    /// Normalized λ/μ of the strip's box set.
    pub fn shape(&self) -> SkewShape {
        SkewShape::from_boxes(&self.boxes).expect("a strip path is a skew diagram")
    }

    fn translate(&self, drow: i32, dcol: i32) -> PlacedStrip {
        PlacedStrip {
            boxes: self
                .boxes
                .iter()
                .map(|b| Pos::new(b.row + drow, b.col + dcol))
                .collect(),
        }
    }

    /// Transpose; the traversal order reverses.
    pub fn conjugate(&self) -> PlacedStrip {
        PlacedStrip {
            boxes: self
                .boxes
                .iter()
                .rev()
                .map(|b| Pos::new(b.col, b.row))
                .collect(),
        }
    }
}

/// An outside decomposition, strips in canonical order: strictly decreasing
/// ending content.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OutsideDecomposition {
    shape: SkewShape,
    strips: Vec<PlacedStrip>,
}

/// Direction of an ending box by its perimeter position: up when on the top
/// perimeter (a corner counts as top), right when on the right perimeter.
fn ending_direction(shape: &SkewShape, b: Pos) -> Result<Direction> {
    if !shape.contains(b.up()) {
        Ok(Direction::Up)
    } else if !shape.contains(b.right()) {
        Ok(Direction::Right)
    } else {
        Err(Error::NotOutside(format!(
            "ending box {b:?} is on neither the top nor the right perimeter"
        )))
    }
}

impl OutsideDecomposition {
    /// Check a claimed decomposition and return it in canonical order.
    pub fn validate(shape: &SkewShape, strips: Vec<Vec<Pos>>) -> Result<Self> {
        let mut placed = Vec::with_capacity(strips.len());
        for s in strips {
            placed.push(PlacedStrip::from_box_set(&s)?);
        }

        // exact partition of the box set
        let mut covered = BTreeSet::new();
        for s in &placed {
            for &b in s.boxes() {
                if !shape.contains(b) {
                    return Err(Error::NotOutside(format!("box {b:?} is outside {shape}")));
                }
                if !covered.insert(b) {
                    return Err(Error::NotOutside(format!("box {b:?} covered twice")));
                }
            }
        }
        if covered.len() as u64 != shape.num_boxes() {
            return Err(Error::NotOutside(format!(
                "strips cover {} of {} boxes",
                covered.len(),
                shape.num_boxes()
            )));
        }

        // perimeter conditions
        for s in &placed {
            let st = s.start_box();
            if shape.contains(st.left()) && shape.contains(st.down()) {
                return Err(Error::NotOutside(format!(
                    "strip {} starts at {st:?}, which is on neither the left nor the bottom perimeter",
                    s.shape()
                )));
            }
            let en = s.end_box();
            ending_direction(shape, en).map_err(|_| {
                Error::NotOutside(format!(
                    "strip {} ends at {en:?}, which is on neither the top nor the right perimeter",
                    s.shape()
                ))
            })?;
        }

        // nested property: per diagonal, every box goes the same way
        let mut dirs: Vec<(i32, Direction)> = Vec::new();
        for s in &placed {
            let word = s.word();
            for (t, &b) in s.boxes().iter().enumerate() {
                let dir = if t < word.len() {
                    word[t]
                } else {
                    ending_direction(shape, b)?
                };
                dirs.push((b.content(), dir));
            }
        }
        dirs.sort_by_key(|&(c, _)| c);
        for w in dirs.windows(2) {
            if w[0].0 == w[1].0 && w[0].1 != w[1].1 {
                return Err(Error::NotOutside(format!(
                    "nested property violated on the diagonal with content {}",
                    w[0].0
                )));
            }
        }

        let mut out = OutsideDecomposition {
            shape: shape.clone(),
            strips: placed,
        };
        out.sort_canonical()?;
        Ok(out)
    }

    fn sort_canonical(&mut self) -> Result<()> {
        self.strips.sort_by_key(|s| -s.q());
        for w in self.strips.windows(2) {
            if w[0].q() == w[1].q() {
                return Err(Error::NotOutside(format!(
                    "two strips end at content {}",
                    w[0].q()
                )));
            }
        }
        Ok(())
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn m(&self) -> usize {
        self.strips.len()
    }

    pub fn strips(&self) -> &[PlacedStrip] {
        &self.strips
    }

    pub fn strip(&self, i: usize) -> &PlacedStrip {
        &self.strips[i]
    }

    /// Starting contents in canonical (q-descending) strip order.
    pub fn ps(&self) -> Vec<i32> {
        self.strips.iter().map(|s| s.p()).collect()
    }

    /// Ending contents in canonical strip order (strictly decreasing).
    pub fn qs(&self) -> Vec<i32> {
        self.strips.iter().map(|s| s.q()).collect()
    }

    /// The common direction of the boxes in the diagonal with content `c`.
    pub fn diagonal_direction(&self, c: i32) -> Result<Direction> {
        for s in &self.strips {
            let p = s.p();
            if c >= p && c <= s.q() {
                let t = (c - p) as usize;
                let word = s.word();
                return if t < word.len() {
                    Ok(word[t])
                } else {
                    ending_direction(&self.shape, s.boxes()[t])
                };
            }
        }
        Err(Error::NoSuchDiagonal(c))
    }

    /// The cutting strip: one box per diagonal, inheriting the contents of
    /// the shape, each going the common way of its diagonal.
    pub fn cutting_strip(&self) -> Result<BorderStrip> {
        let (lo, hi) = self.shape.content_range().ok_or(Error::EmptyShape)?;
        if !self.shape.is_connected() {
            return Err(Error::NotConnected);
        }
        let dirs = (lo..hi)
            .map(|c| self.diagonal_direction(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(BorderStrip::new(lo, dirs))
    }

    /// Direction word of the cutting strip (length d-1).
    pub fn word(&self) -> Result<Vec<Direction>> {
        Ok(self.cutting_strip()?.dirs().to_vec())
    }

    /// Reconstruct the decomposition of `shape` whose cutting strip is
    /// `phi`. `phi` must have exactly d boxes spanning the shape's content
    /// range.
    pub fn from_strip(shape: &SkewShape, phi: &BorderStrip) -> Result<Self> {
        let (lo, hi) = shape.content_range().ok_or(Error::EmptyShape)?;
        if phi.start_content() != lo || phi.end_content() != hi {
            return Err(Error::StripMismatch(format!(
                "strip spans [{},{}], shape {shape} spans [{lo},{hi}]",
                phi.start_content(),
                phi.end_content()
            )));
        }
        Self::from_word(shape, phi.dirs())
    }

    /// Reconstruct from the per-diagonal direction word (length d-1, lowest
    /// content first). Connected shapes only.
    pub fn from_word(shape: &SkewShape, word: &[Direction]) -> Result<Self> {
        let Some((lo, hi)) = shape.content_range() else {
            return if word.is_empty() {
                Ok(OutsideDecomposition {
                    shape: shape.clone(),
                    strips: Vec::new(),
                })
            } else {
                Err(Error::WordLength {
                    got: word.len(),
                    expected: 0,
                })
            };
        };
        if !shape.is_connected() {
            return Err(Error::NotConnected);
        }
        let d = (hi - lo + 1) as usize;
        if word.len() != d - 1 {
            return Err(Error::WordLength {
                got: word.len(),
                expected: d - 1,
            });
        }

        let dir_at = |c: i32| -> Option<Direction> {
            (c < hi).then(|| word[(c - lo) as usize])
        };
        let successor = |b: Pos| -> Option<Pos> {
            let next = match dir_at(b.content())? {
                Direction::Right => b.right(),
                Direction::Up => b.up(),
            };
            shape.contains(next).then_some(next)
        };
        let predecessor = |b: Pos| -> Option<Pos> {
            let c = b.content();
            if c == lo {
                return None;
            }
            let prev = match word[(c - 1 - lo) as usize] {
                Direction::Right => b.left(),
                Direction::Up => b.down(),
            };
            shape.contains(prev).then_some(prev)
        };

        let mut strips = Vec::new();
        for b in shape.boxes() {
            if predecessor(b).is_some() {
                continue;
            }
            let mut path = vec![b];
            let mut cur = b;
            while let Some(next) = successor(cur) {
                path.push(next);
                cur = next;
            }
            strips.push(PlacedStrip { boxes: path });
        }
        let mut out = OutsideDecomposition {
            shape: shape.clone(),
            strips,
        };
        out.sort_canonical()?;
        debug_assert_eq!(out.word().unwrap(), word);
        Ok(out)
    }

    /// Transpose the whole decomposition onto the conjugate shape.
    pub fn conjugate(&self) -> OutsideDecomposition {
        let mut out = OutsideDecomposition {
            shape: self.shape.conjugate(),
            strips: self.strips.iter().map(PlacedStrip::conjugate).collect(),
        };
        out.sort_canonical()
            .expect("conjugate ending contents stay distinct");
        out
    }

    /// inv(Π) = number of index pairs whose starting contents and ending
    /// contents are oppositely ordered.
    pub fn inversion_number(&self) -> usize {
        let ps = self.ps();
        let qs = self.qs();
        let m = ps.len();
        let mut inv = 0;
        for i in 0..m {
            for j in 0..m {
                if ps[i] > ps[j] && qs[i] < qs[j] {
                    inv += 1;
                }
            }
        }
        inv
    }
}

/// Number of outside decompositions: the product over blocks of
/// 2^(d_block - 1).
pub fn count_decompositions(shape: &SkewShape) -> u128 {
    shape
        .blocks()
        .iter()
        .map(|b| 1u128 << (b.diagonal_count() - 1))
        .product()
}

/// Deterministic enumeration of all outside decompositions.
///
/// Words are enumerated in binary-counter order with R = 0, U = 1 and the
/// lowest content as the least significant bit; for disconnected shapes the
/// per-block words concatenate by ascending content.
pub fn enumerate_decompositions(shape: &SkewShape) -> DecompositionIter {
    // blocks are returned top to bottom; ascending content = reverse order
    let mut blocks = shape.blocks_with_offsets();
    blocks.reverse();
    let total = count_decompositions(shape);
    DecompositionIter {
        shape: shape.clone(),
        blocks,
        index: 0,
        total,
    }
}

pub struct DecompositionIter {
    shape: SkewShape,
    blocks: Vec<(SkewShape, i32, i32)>,
    index: u128,
    total: u128,
}

impl DecompositionIter {
    pub fn total(&self) -> u128 {
        self.total
    }
}

impl Iterator for DecompositionIter {
    type Item = OutsideDecomposition;

    fn next(&mut self) -> Option<Self::Item> {
        if self.index >= self.total {
            return None;
        }
        let mut bits = self.index;
        self.index += 1;

        let mut strips = Vec::new();
        for (block, drow, dcol) in &self.blocks {
            let w = block.diagonal_count() - 1;
            let local = bits & ((1u128 << w) - 1);
            bits >>= w;
            let word: Vec<Direction> = (0..w)
                .map(|t| {
                    if local >> t & 1 == 1 {
                        Direction::Up
                    } else {
                        Direction::Right
                    }
                })
                .collect();
            let dec = OutsideDecomposition::from_word(block, &word)
                .expect("block words always reconstruct");
            strips.extend(
                dec.strips
                    .into_iter()
                    .map(|s| s.translate(*drow, *dcol)),
            );
        }
        let mut out = OutsideDecomposition {
            shape: self.shape.clone(),
            strips,
        };
        out.sort_canonical().expect("enumerated q's are distinct");
        Some(out)
    }
}

/// inv(P) of a pair sequence: pairs whose first and second coordinates are
/// oppositely ordered. Both coordinate families must be duplicate-free.
pub fn pair_inversions(pairs: &[(i64, i64)]) -> Result<usize> {
    for (idx, &(a, b)) in pairs.iter().enumerate() {
        for &(a2, b2) in &pairs[idx + 1..] {
            if a == a2 || b == b2 {
                return Err(Error::DuplicatePairs(format!(
                    "({a},{b}) collides with ({a2},{b2})"
                )));
            }
        }
    }
    let mut inv = 0;
    for i in 0..pairs.len() {
        for j in 0..pairs.len() {
            if pairs[i].0 > pairs[j].0 && pairs[i].1 < pairs[j].1 {
                inv += 1;
            }
        }
    }
    Ok(inv)
}

/// Number of inversions of a permutation of 0..n-1.
pub fn permutation_inversions(perm: &[usize]) -> usize {
    let mut inv = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inv += 1;
            }
        }
    }
    inv
}
