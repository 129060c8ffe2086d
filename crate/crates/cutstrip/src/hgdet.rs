//! The Hamel-Goulden determinant: matrix construction in both forms, exact
//! evaluation against the tableau oracle, and the four classical identities
//! as special cutting strips.
//!
//! For an outside decomposition Π = (θ_1, ..., θ_m) the matrix entry (i, j)
//! is the Schur value of θ_i # θ_j, which on the cutting strip is just the
//! segment [p(θ_j), q(θ_i)]. The determinant equals s_{λ/μ}. The canonical
//! form sorts columns by decreasing starting content and carries the sign
//! (-1)^inv(Π); its zero entries form a staircase in the lower-left corner.

use crate::decomp::{permutation_inversions, OutsideDecomposition};
use crate::error::{Error, Result};
use crate::poly::{det, Polynomial};
use crate::schur::{Evaluator, SchurEntry};
use crate::shapes::SkewShape;
use crate::strips::Direction;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MatrixForm {
    /// Rows and columns in canonical strip order (decreasing q), sign +1.
    Eq1,
    /// Columns re-sorted by decreasing starting content, with compensating
    /// sign (-1)^inv(Π).
    Canonical,
}

/// A Hamel-Goulden matrix together with its sign and the content data
/// indexing its rows and columns.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HGMatrix {
    pub form: MatrixForm,
    pub sign: i8,
    entries: Vec<Vec<SchurEntry>>,
    row_ends: Vec<i32>,
    col_starts: Vec<i32>,
}

impl HGMatrix {
    pub fn order(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<SchurEntry>] {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> &SchurEntry {
        &self.entries[i][j]
    }

    /// q contents indexing the rows.
    pub fn row_ends(&self) -> &[i32] {
        &self.row_ends
    }

    /// p contents indexing the columns.
    pub fn col_starts(&self) -> &[i32] {
        &self.col_starts
    }

    /// Entry descriptors: "1" for empty, "0" for undefined, otherwise the
    /// normalized shape string.
    pub fn shape_strings(&self) -> Vec<Vec<String>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(SchurEntry::shape_string).collect())
            .collect()
    }

    /// Structural staircase property of the canonical form: an undefined
    /// entry forces every entry below it and to its left to be undefined.
    pub fn zero_staircase_ok(&self) -> bool {
        let m = self.order();
        for l in 0..m {
            for t in 0..m {
                if self.entries[l][t].is_zero() {
                    for l2 in l..m {
                        for t2 in 0..=t {
                            if !self.entries[l2][t2].is_zero() {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }
}

/// θ_i # θ_j as a segment of the cutting strip: [p(θ_j), q(θ_i)].
/// Indices are zero-based.
pub fn sharp(pi: &OutsideDecomposition, i: usize, j: usize) -> Result<SchurEntry> {
    let phi = pi.cutting_strip()?;
    let seg = phi.segment(pi.strip(j).p(), pi.strip(i).q())?;
    Ok(SchurEntry::from_segment(seg))
}

/// Build the Hamel-Goulden matrix of a decomposition in the requested form.
pub fn hg_matrix(pi: &OutsideDecomposition, form: MatrixForm) -> Result<HGMatrix> {
    let m = pi.m();
    if m == 0 {
        return Ok(HGMatrix {
            form,
            sign: 1,
            entries: Vec::new(),
            row_ends: Vec::new(),
            col_starts: Vec::new(),
        });
    }
    let phi = pi.cutting_strip()?;
    let ps = pi.ps();
    let qs = pi.qs();

    let (col_order, sign) = match form {
        MatrixForm::Eq1 => ((0..m).collect::<Vec<_>>(), 1i8),
        MatrixForm::Canonical => {
            let mut order: Vec<usize> = (0..m).collect();
            order.sort_by_key(|&j| -ps[j]);
            // Lemma 5 self-check: the column-sort parity must reproduce
            // (-1)^inv(Π).
            let perm_parity = permutation_inversions(&order) % 2;
            let inv_parity = pi.inversion_number() % 2;
            if perm_parity != inv_parity {
                return Err(Error::Internal(format!(
                    "column permutation parity {perm_parity} != inversion parity {inv_parity}"
                )));
            }
            let sign = if inv_parity == 0 { 1 } else { -1 };
            (order, sign)
        }
    };

    let mut entries = Vec::with_capacity(m);
    for i in 0..m {
        let mut row = Vec::with_capacity(m);
        for &j in &col_order {
            row.push(SchurEntry::from_segment(phi.segment(ps[j], qs[i])?));
        }
        entries.push(row);
    }
    Ok(HGMatrix {
        form,
        sign,
        entries,
        row_ends: qs,
        col_starts: col_order.iter().map(|&j| ps[j]).collect(),
    })
}

/// sign · det of the entrywise Schur valuation.
pub fn evaluate(matrix: &HGMatrix, ev: &Evaluator) -> Result<Polynomial> {
    if matrix.order() == 0 {
        return Ok(Polynomial::one(ev.nvars()));
    }
    let valued: Vec<Vec<Polynomial>> = matrix
        .entries
        .iter()
        .map(|row| row.iter().map(|e| ev.entry(e)).collect())
        .collect();
    let d = det(&valued)?;
    Ok(if matrix.sign >= 0 { d } else { -&d })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NamedIdentity {
    JacobiTrudi,
    DualJacobiTrudi,
    Giambelli,
    LascouxPragacz,
}

impl NamedIdentity {
    pub fn parse(name: &str) -> Option<Self> {
        match name.to_ascii_lowercase().replace(['-', '_'], "").as_str() {
            "jt" | "jacobitrudi" => Some(NamedIdentity::JacobiTrudi),
            "dualjt" | "dualjacobitrudi" | "nk" => Some(NamedIdentity::DualJacobiTrudi),
            "giambelli" => Some(NamedIdentity::Giambelli),
            "lp" | "lascouxpragacz" | "rim" => Some(NamedIdentity::LascouxPragacz),
            _ => None,
        }
    }
}

/// The cutting-strip direction word of a named identity.
///
/// Jacobi-Trudi is the horizontal strip, its dual the vertical strip,
/// Giambelli the maximal hook (up to content 0, then right; straight shapes
/// only), and Lascoux-Pragacz the outer rim of the shape read onto the
/// content line.
pub fn named_word(shape: &SkewShape, which: NamedIdentity) -> Result<Vec<Direction>> {
    let (lo, hi) = shape.content_range().ok_or(Error::EmptyShape)?;
    if !shape.is_connected() {
        return Err(Error::NotConnected);
    }
    let word = match which {
        NamedIdentity::JacobiTrudi => vec![Direction::Right; (hi - lo) as usize],
        NamedIdentity::DualJacobiTrudi => vec![Direction::Up; (hi - lo) as usize],
        NamedIdentity::Giambelli => {
            if !shape.inner().is_empty() {
                return Err(Error::GiambelliSkew);
            }
            (lo..hi)
                .map(|c| if c < 0 { Direction::Up } else { Direction::Right })
                .collect()
        }
        NamedIdentity::LascouxPragacz => (lo..hi)
            .map(|c| {
                let bottom = *shape.diagonal_boxes(c).last().expect("content occupied");
                if shape.contains(bottom.right()) {
                    Direction::Right
                } else {
                    Direction::Up
                }
            })
            .collect(),
    };
    Ok(word)
}

pub fn named_identity(shape: &SkewShape, which: NamedIdentity) -> Result<OutsideDecomposition> {
    OutsideDecomposition::from_word(shape, &named_word(shape, which)?)
}
