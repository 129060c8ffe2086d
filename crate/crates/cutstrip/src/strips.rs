//! Border strips (ribbons) as content-anchored direction words, segment
//! extraction with the empty/undefined conventions, and the corner-gluing
//! operators.
//!
//! A strip is stored as its starting content plus a word over {R, U} read
//! from the lower-left box; the t-th box from the start has content
//! `start + t`, so extracting the segment between two contents is plain
//! slicing. The λ/μ view is derived.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::shapes::{Pos, SkewShape};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Direction {
    Right,
    Up,
}

impl Direction {
    pub fn flip(self) -> Direction {
        match self {
            Direction::Right => Direction::Up,
            Direction::Up => Direction::Right,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Direction::Right => 'R',
            Direction::Up => 'U',
        }
    }
}

/// A border strip anchored on the content line.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BorderStrip {
    start: i32,
    dirs: Vec<Direction>,
}

impl BorderStrip {
    pub fn new(start: i32, dirs: Vec<Direction>) -> Self {
        BorderStrip { start, dirs }
    }

    pub fn single_box(content: i32) -> Self {
        BorderStrip {
            start: content,
            dirs: Vec::new(),
        }
    }

    /// Number of boxes.
    pub fn len(&self) -> usize {
        self.dirs.len() + 1
    }

    pub fn is_single_box(&self) -> bool {
        self.dirs.is_empty()
    }

    pub fn start_content(&self) -> i32 {
        self.start
    }

    pub fn end_content(&self) -> i32 {
        self.start + self.dirs.len() as i32
    }

    pub fn dirs(&self) -> &[Direction] {
        &self.dirs
    }

    /// Direction of the box at content `c`, defined for `start ≤ c < end`.
    pub fn direction_at(&self, c: i32) -> Option<Direction> {
        if c < self.start || c >= self.end_content() {
            None
        } else {
            Some(self.dirs[(c - self.start) as usize])
        }
    }

    /// The traversal path anchored at row 0 (boxes are later normalized by
    /// `to_skew_shape`; absolute coordinates are not meaningful here).
    pub fn path_boxes(&self) -> Vec<Pos> {
        let mut out = Vec::with_capacity(self.len());
        let mut p = Pos::new(0, self.start);
        out.push(p);
        for d in &self.dirs {
            p = match d {
                Direction::Right => p.right(),
                Direction::Up => p.up(),
            };
            out.push(p);
        }
        out
    }

    /// The normalized λ/μ realizing this ribbon.
    pub fn to_skew_shape(&self) -> SkewShape {
        SkewShape::from_boxes(&self.path_boxes()).expect("a ribbon path is a skew diagram")
    }

    /// Segment φ[p,q]: a proper sub-strip when `p ≤ q` (both contents must
    /// lie in range), the empty strip when `p = q+1`, undefined when
    /// `p > q+1`.
    pub fn segment(&self, p: i32, q: i32) -> Result<Segment> {
        if p == q + 1 {
            return Ok(Segment::Empty);
        }
        if p > q + 1 {
            return Ok(Segment::Undefined);
        }
        if p < self.start || q > self.end_content() {
            return Err(Error::SegmentOutOfRange {
                p,
                q,
                lo: self.start,
                hi: self.end_content(),
            });
        }
        let lo = (p - self.start) as usize;
        let hi = (q - self.start) as usize;
        Ok(Segment::Proper(BorderStrip {
            start: p,
            dirs: self.dirs[lo..hi].to_vec(),
        }))
    }

    fn glue(&self, other: &BorderStrip, connector: Direction) -> BorderStrip {
        let mut dirs = Vec::with_capacity(self.dirs.len() + 1 + other.dirs.len());
        dirs.extend_from_slice(&self.dirs);
        dirs.push(connector);
        dirs.extend_from_slice(&other.dirs);
        BorderStrip {
            start: self.start,
            dirs,
        }
    }

    /// I ▶ J: glue the lower-left box of J to the right of the upper-right
    /// box of I. J's contents shift so that its start becomes `q(I) + 1`.
    pub fn glue_right(&self, other: &BorderStrip) -> BorderStrip {
        self.glue(other, Direction::Right)
    }

    /// I ↑ J: same gluing with the connector going up.
    pub fn glue_up(&self, other: &BorderStrip) -> BorderStrip {
        self.glue(other, Direction::Up)
    }

    /// Transpose. Contents negate, the word reverses with letters flipped.
    pub fn conjugate(&self) -> BorderStrip {
        BorderStrip {
            start: -self.end_content(),
            dirs: self.dirs.iter().rev().map(|d| d.flip()).collect(),
        }
    }

    /// The strip with the direction at content `c` flipped.
    pub fn flipped_at(&self, c: i32) -> Result<BorderStrip> {
        if c < self.start || c >= self.end_content() {
            return Err(Error::TwistOutOfRange {
                content: c,
                lo: self.start,
                hi: self.end_content(),
            });
        }
        let mut dirs = self.dirs.clone();
        let i = (c - self.start) as usize;
        dirs[i] = dirs[i].flip();
        Ok(BorderStrip {
            start: self.start,
            dirs,
        })
    }
}

impl fmt::Display for BorderStrip {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "@{}:", self.start)?;
        for d in &self.dirs {
            write!(f, "{}", d.letter())?;
        }
        Ok(())
    }
}

impl FromStr for BorderStrip {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let err = |pos: usize, msg: &str| Error::Parse {
            input: s.to_string(),
            pos,
            msg: msg.to_string(),
        };
        let t = s.trim();
        let body = t.strip_prefix('@').ok_or_else(|| err(0, "expected '@'"))?;
        let colon = body.find(':').ok_or_else(|| err(t.len(), "expected ':'"))?;
        let start: i32 = body[..colon]
            .parse()
            .map_err(|_| err(1, "expected an integer start content"))?;
        let dirs = parse_word(&body[colon + 1..]).map_err(|(i, m)| err(colon + 2 + i, m))?;
        Ok(BorderStrip::new(start, dirs))
    }
}

/// Parse a word over {R, U} (case-insensitive).
pub fn parse_word(s: &str) -> std::result::Result<Vec<Direction>, (usize, &'static str)> {
    s.trim()
        .char_indices()
        .map(|(i, ch)| match ch.to_ascii_uppercase() {
            'R' => Ok(Direction::Right),
            'U' => Ok(Direction::Up),
            _ => Err((i, "expected 'R' or 'U'")),
        })
        .collect()
}

pub fn word_string(dirs: &[Direction]) -> String {
    dirs.iter().map(|d| d.letter()).collect()
}

/// φ[p,q] with the two degenerate conventions. Empty and Undefined are kept
/// distinct because their Schur values differ (1 versus 0).
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Segment {
    Empty,
    Undefined,
    Proper(BorderStrip),
}

impl Segment {
    pub fn as_strip(&self) -> Option<&BorderStrip> {
        match self {
            Segment::Proper(s) => Some(s),
            _ => None,
        }
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Segment::Empty => write!(f, "[]"),
            Segment::Undefined => write!(f, "undef"),
            Segment::Proper(s) => write!(f, "[{},{}]", s.start_content(), s.end_content()),
        }
    }
}
