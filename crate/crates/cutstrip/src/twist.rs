//! The twist transformation ω_i on outside decompositions, its parity laws,
//! and verified elementary-operation traces between the canonical
//! determinant forms of Π and ω_i(Π).
//!
//! ω_i flips the cutting-strip direction at content i. At the matrix level
//! the two canonical forms are linked by a short chain of elementary
//! operations: an optional bordering by a unit row/column pair, one
//! row combination per affected row (the product rule
//! s_{α▶β} = s_α s_β − s_{α↑β} turns an up-gluing into a right-gluing), and
//! a batch of row/column negations. Diagonals whose top box has a box above
//! and whose bottom box lacks a right neighbor (and the mirrored kind)
//! change the matrix order; the other two kinds preserve it. Mirrored kinds
//! run through the conjugate shape; when the diagonal boxes go right the
//! chain is built backwards and reversed.
//!
//! Every step is checked twice: the declared operation must map each matrix
//! to the next entry-by-entry, and every signed determinant must equal the
//! skew Schur value exactly.

use std::fmt;

use crate::decomp::OutsideDecomposition;
use crate::error::{Error, Result};
use crate::hgdet::{hg_matrix, HGMatrix, MatrixForm};
use crate::poly::{det, Polynomial};
use crate::schur::{Evaluator, SchurEntry};
use crate::shapes::DiagonalType;
use crate::strips::{BorderStrip, Direction};

/// ω_i: flip the cutting-strip direction at content `i`.
pub fn twist(pi: &OutsideDecomposition, i: i32) -> Result<OutsideDecomposition> {
    let phi = pi.cutting_strip()?;
    let flipped = phi.flipped_at(i)?;
    OutsideDecomposition::from_strip(pi.shape(), &flipped)
}

/// Classification data of one legal twist.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TwistClass {
    pub content: i32,
    pub diagonal_type: DiagonalType,
    /// Boxes in the diagonal at `content`.
    pub r: usize,
    /// 1-based pivot index driving the trace, always computed on the
    /// decomposition whose diagonal boxes go up: for Type 1 the unique k
    /// with p_k < i+1 < p_{k-1} (p_0 = ∞), for Type 3 the k with q_k = i.
    /// For Types 2 and 4 this is the k of the conjugated Type 1/3 problem.
    pub k: usize,
    pub order_changing: bool,
    /// Direction of the diagonal boxes in the given decomposition.
    pub boxes_go_up: bool,
}

/// Pivot index for a Type 1 or Type 3 twist on a decomposition whose
/// diagonal boxes go up.
fn pivot_index(up_pi: &OutsideDecomposition, i: i32, ty: DiagonalType, r: usize) -> Result<usize> {
    let m = up_pi.m();
    let qs = up_pi.qs();
    let mut ps = up_pi.ps();
    ps.sort_unstable_by_key(|&p| -p);
    match ty {
        DiagonalType::Type1 => {
            if ps.iter().any(|&p| p == i + 1) {
                return Err(Error::Internal(format!(
                    "unexpected strip starting at content {}",
                    i + 1
                )));
            }
            let k = ps.iter().filter(|&&p| p > i + 1).count() + 1;
            if k + r > m + 1 {
                return Err(Error::Internal(format!("pivot {k}+{r} exceeds order {m}+1")));
            }
            if qs[k + r - 2] <= i || (k + r - 1 < m && qs[k + r - 1] >= i) {
                return Err(Error::Internal(
                    "ending contents do not split at the twisted diagonal".into(),
                ));
            }
            Ok(k)
        }
        DiagonalType::Type3 => {
            let k = qs
                .iter()
                .position(|&q| q == i)
                .ok_or_else(|| Error::Internal(format!("no strip ends at content {i}")))?
                + 1;
            if k < r {
                return Err(Error::Internal(format!("pivot {k} smaller than diagonal size {r}")));
            }
            if (k > r && ps[k - r - 1] <= i + 1) || ps[k - r] >= i + 1 {
                return Err(Error::Internal(
                    "starting contents do not split at the twisted diagonal".into(),
                ));
            }
            Ok(k)
        }
        _ => Err(Error::Internal("pivot index is defined for Types 1 and 3".into())),
    }
}

/// Classify the twist at content `i`: diagonal type, diagonal size, pivot
/// index, and whether the matrix order changes.
pub fn classify_twist(pi: &OutsideDecomposition, i: i32) -> Result<TwistClass> {
    let phi = pi.cutting_strip()?;
    let Some(dir) = phi.direction_at(i) else {
        return Err(Error::TwistOutOfRange {
            content: i,
            lo: phi.start_content(),
            hi: phi.end_content(),
        });
    };
    let ty = pi.shape().diagonal_type(i)?;
    let r = pi.shape().diagonal_boxes(i).len();
    let k = match ty {
        DiagonalType::Type1 | DiagonalType::Type3 => {
            let up_pi = if dir == Direction::Up {
                pi.clone()
            } else {
                twist(pi, i)?
            };
            pivot_index(&up_pi, i, ty, r)?
        }
        DiagonalType::Type2 | DiagonalType::Type4 => {
            // mirrored kinds run through the conjugate shape
            let cpi = pi.conjugate();
            let ci = -i - 1;
            let cty = cpi.shape().diagonal_type(ci)?;
            if cty.order_changing() != ty.order_changing() {
                return Err(Error::Internal(
                    "conjugate twist changed order-changing status".into(),
                ));
            }
            let cr = cpi.shape().diagonal_boxes(ci).len();
            let cdir = cpi
                .cutting_strip()?
                .direction_at(ci)
                .ok_or_else(|| Error::Internal("conjugate twist out of range".into()))?;
            let up_cpi = if cdir == Direction::Up {
                cpi.clone()
            } else {
                twist(&cpi, ci)?
            };
            pivot_index(&up_cpi, ci, cty, cr)?
        }
    };
    Ok(TwistClass {
        content: i,
        diagonal_type: ty,
        r,
        k,
        order_changing: ty.order_changing(),
        boxes_go_up: dir == Direction::Up,
    })
}

/// Parity law of ω_i on inversion numbers.
#[derive(Clone, Debug)]
pub struct ParityReport {
    pub content: i32,
    pub diagonal_type: DiagonalType,
    pub r: usize,
    pub inv_before: usize,
    pub inv_after: usize,
    /// Predicted shift mod 2: zero for the order-changing kinds; r-1 when a
    /// strip ends at the diagonal in both directions; r when none does (the
    /// conjugate diagonal there has r+1 boxes).
    pub predicted_shift: usize,
    pub ok: bool,
}

pub fn parity_check(pi: &OutsideDecomposition, i: i32) -> Result<ParityReport> {
    let phi = pi.cutting_strip()?;
    if phi.direction_at(i).is_none() {
        return Err(Error::TwistOutOfRange {
            content: i,
            lo: phi.start_content(),
            hi: phi.end_content(),
        });
    }
    let ty = pi.shape().diagonal_type(i)?;
    let r = pi.shape().diagonal_boxes(i).len();
    let after = twist(pi, i)?;
    let inv_before = pi.inversion_number();
    let inv_after = after.inversion_number();
    let predicted_shift = match ty {
        DiagonalType::Type1 | DiagonalType::Type2 => 0,
        DiagonalType::Type3 => (r - 1) % 2,
        DiagonalType::Type4 => r % 2,
    };
    Ok(ParityReport {
        content: i,
        diagonal_type: ty,
        r,
        inv_before,
        inv_after,
        predicted_shift,
        ok: (inv_before + predicted_shift) % 2 == inv_after % 2,
    })
}

/// One matrix cell inside a trace: a Schur entry with an optional sign.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TraceEntry {
    pub negated: bool,
    pub entry: SchurEntry,
}

impl TraceEntry {
    fn plain(entry: SchurEntry) -> Self {
        TraceEntry {
            negated: false,
            entry,
        }
    }

    fn negate(mut self) -> Self {
        if !self.entry.is_zero() {
            self.negated = !self.negated;
        }
        self
    }

    pub fn display_string(&self) -> String {
        let base = self.entry.shape_string();
        if self.negated {
            format!("-{base}")
        } else {
            base
        }
    }
}

/// One declared elementary determinantal operation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TraceOp {
    Initial,
    /// Insert a unit row/column pair crossing at the given 0-based position
    /// of the resulting matrix.
    Border { pivot_row: usize, pivot_col: usize },
    /// Remove a unit row/column pair at the given 0-based position of the
    /// source matrix.
    Strike { pivot_row: usize, pivot_col: usize },
    /// row[target] ← row[target] ∓ s_mult · row[pivot].
    RowCombine {
        target: usize,
        pivot: usize,
        mult: BorderStrip,
        subtract: bool,
    },
    /// col[target] ← col[target] ∓ s_mult · col[pivot].
    ColCombine {
        target: usize,
        pivot: usize,
        mult: BorderStrip,
        subtract: bool,
    },
    NegateRow(usize),
    NegateCol(usize),
}

impl TraceOp {
    fn inverse(&self) -> TraceOp {
        match self {
            TraceOp::Initial => TraceOp::Initial,
            TraceOp::Border {
                pivot_row,
                pivot_col,
            } => TraceOp::Strike {
                pivot_row: *pivot_row,
                pivot_col: *pivot_col,
            },
            TraceOp::Strike {
                pivot_row,
                pivot_col,
            } => TraceOp::Border {
                pivot_row: *pivot_row,
                pivot_col: *pivot_col,
            },
            TraceOp::RowCombine {
                target,
                pivot,
                mult,
                subtract,
            } => TraceOp::RowCombine {
                target: *target,
                pivot: *pivot,
                mult: mult.clone(),
                subtract: !subtract,
            },
            TraceOp::ColCombine {
                target,
                pivot,
                mult,
                subtract,
            } => TraceOp::ColCombine {
                target: *target,
                pivot: *pivot,
                mult: mult.clone(),
                subtract: !subtract,
            },
            TraceOp::NegateRow(r) => TraceOp::NegateRow(*r),
            TraceOp::NegateCol(c) => TraceOp::NegateCol(*c),
        }
    }
}

impl fmt::Display for TraceOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceOp::Initial => write!(f, "initial canonical form"),
            TraceOp::Border {
                pivot_row,
                pivot_col,
            } => write!(
                f,
                "insert unit row {} and unit column {}",
                pivot_row + 1,
                pivot_col + 1
            ),
            TraceOp::Strike {
                pivot_row,
                pivot_col,
            } => write!(
                f,
                "remove unit row {} and unit column {}",
                pivot_row + 1,
                pivot_col + 1
            ),
            TraceOp::RowCombine {
                target,
                pivot,
                mult,
                subtract,
            } => write!(
                f,
                "row {} <- row {} {} s[{},{}] * row {}",
                target + 1,
                target + 1,
                if *subtract { "-" } else { "+" },
                mult.start_content(),
                mult.end_content(),
                pivot + 1
            ),
            TraceOp::ColCombine {
                target,
                pivot,
                mult,
                subtract,
            } => write!(
                f,
                "column {} <- column {} {} s[{},{}] * column {}",
                target + 1,
                target + 1,
                if *subtract { "-" } else { "+" },
                mult.start_content(),
                mult.end_content(),
                pivot + 1
            ),
            TraceOp::NegateRow(r) => write!(f, "negate row {}", r + 1),
            TraceOp::NegateCol(c) => write!(f, "negate column {}", c + 1),
        }
    }
}

/// One stage of a trace: the operation that produced the matrix, the sign in
/// front of the determinant, and the matrix itself.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TraceStep {
    pub op: TraceOp,
    pub sign: i8,
    pub matrix: Vec<Vec<TraceEntry>>,
}

/// A verified chain of elementary operations from the canonical form of Π
/// to the canonical form of ω_i(Π).
#[derive(Clone, Debug)]
pub struct TwistTrace {
    pub content: i32,
    pub diagonal_type: DiagonalType,
    pub r: usize,
    pub k: usize,
    pub steps: Vec<TraceStep>,
}

impl TwistTrace {
    pub fn initial(&self) -> &TraceStep {
        self.steps.first().expect("traces are nonempty")
    }

    pub fn final_step(&self) -> &TraceStep {
        self.steps.last().expect("traces are nonempty")
    }
}

fn grid_from_hg(matrix: &HGMatrix) -> Vec<Vec<TraceEntry>> {
    matrix
        .entries()
        .iter()
        .map(|row| row.iter().cloned().map(TraceEntry::plain).collect())
        .collect()
}

fn seg_entry(strip: &BorderStrip, a: i32, b: i32) -> Result<SchurEntry> {
    Ok(SchurEntry::from_segment(strip.segment(a, b)?))
}

fn seg_strip(strip: &BorderStrip, a: i32, b: i32) -> Result<BorderStrip> {
    match strip.segment(a, b)? {
        crate::strips::Segment::Proper(s) => Ok(s),
        other => Err(Error::Internal(format!(
            "expected a proper segment [{a},{b}], got {other}"
        ))),
    }
}

/// Build and fully verify the trace. The step list starts at the canonical
/// form of `pi` and ends at the canonical form of `twist(pi, i)`; every
/// consecutive pair differs by one elementary operation, checked entry by
/// entry, and every signed determinant is checked against the oracle.
pub fn twist_trace(pi: &OutsideDecomposition, i: i32, ev: &Evaluator) -> Result<TwistTrace> {
    let trace = build_trace(pi, i)?;
    verify_trace(&trace, pi, i, ev)?;
    Ok(trace)
}

fn build_trace(pi: &OutsideDecomposition, i: i32) -> Result<TwistTrace> {
    let class = classify_twist(pi, i)?;
    match class.diagonal_type {
        DiagonalType::Type1 | DiagonalType::Type3 => build_oriented(pi, i, &class),
        DiagonalType::Type2 | DiagonalType::Type4 => {
            let cpi = pi.conjugate();
            let ci = -i - 1;
            let inner = build_trace(&cpi, ci)?;
            if inner.diagonal_type.order_changing() != class.order_changing {
                return Err(Error::Internal(
                    "conjugate trace changed order-changing status".into(),
                ));
            }
            Ok(transport_conjugate(inner, &class))
        }
    }
}

fn build_oriented(
    pi: &OutsideDecomposition,
    i: i32,
    class: &TwistClass,
) -> Result<TwistTrace> {
    if class.boxes_go_up {
        build_up(pi, i, class)
    } else {
        // The diagonal boxes go right: build the chain from ω_i(Π), whose
        // boxes go up, and play it backwards.
        let psi = twist(pi, i)?;
        let up_class = classify_twist(&psi, i)?;
        let forward = build_up(&psi, i, &up_class)?;
        Ok(reverse_trace(forward))
    }
}

/// Direct construction for a Type 1 or Type 3 diagonal whose boxes go up.
fn build_up(pi: &OutsideDecomposition, i: i32, class: &TwistClass) -> Result<TwistTrace> {
    let m = pi.m();
    let r = class.r;
    let k = class.k;
    let phi = pi.cutting_strip()?;
    let phit = phi.flipped_at(i)?;
    let canon = hg_matrix(pi, MatrixForm::Canonical)?;
    let ps = canon.col_starts().to_vec();
    let qs = canon.row_ends().to_vec();
    let mut sign = canon.sign;
    let mut grid = grid_from_hg(&canon);
    let mut steps = vec![TraceStep {
        op: TraceOp::Initial,
        sign,
        matrix: grid.clone(),
    }];
    let mut push = |op: TraceOp, sign: i8, grid: &Vec<Vec<TraceEntry>>| {
        steps.push(TraceStep {
            op,
            sign,
            matrix: grid.clone(),
        });
    };

    match class.diagonal_type {
        DiagonalType::Type1 => {
            let pr = k + r - 1; // 0-based pivot row after insertion
            let pc = k - 1; // 0-based pivot column after insertion
            let size = m + 1;

            // bordering by a unit row/column pair
            let mut ng: Vec<Vec<TraceEntry>> = Vec::with_capacity(size);
            for l in 0..size {
                let mut row = Vec::with_capacity(size);
                for t in 0..size {
                    let cell = if l == pr && t == pc {
                        TraceEntry::plain(SchurEntry::Empty)
                    } else if l == pr {
                        let p = if t < pc { ps[t] } else { ps[t - 1] };
                        TraceEntry::plain(seg_entry(&phi, p, i)?)
                    } else if t == pc {
                        TraceEntry::plain(SchurEntry::Undefined)
                    } else {
                        let ol = if l < pr { l } else { l - 1 };
                        let ot = if t < pc { t } else { t - 1 };
                        grid[ol][ot].clone()
                    };
                    row.push(cell);
                }
                ng.push(row);
            }
            grid = ng;
            sign *= border_sign(pr, pc);
            push(
                TraceOp::Border {
                    pivot_row: pr,
                    pivot_col: pc,
                },
                sign,
                &grid,
            );

            // product-rule row combinations: B turns into -B'
            for l in 0..pr {
                let mult = seg_strip(&phi, i + 1, qs[l])?;
                grid[l][pc] = TraceEntry {
                    negated: true,
                    entry: SchurEntry::Ribbon(mult.clone()),
                };
                for t in pc + 1..size {
                    grid[l][t] = TraceEntry {
                        negated: true,
                        entry: seg_entry(&phit, ps[t - 1], qs[l])?,
                    };
                }
                push(
                    TraceOp::RowCombine {
                        target: l,
                        pivot: pr,
                        mult,
                        subtract: true,
                    },
                    sign,
                    &grid,
                );
            }

            // sign renormalization of the trailing columns and rows
            for c in pc..size {
                for row in grid.iter_mut() {
                    row[c] = row[c].clone().negate();
                }
                sign = -sign;
                push(TraceOp::NegateCol(c), sign, &grid);
            }
            for rw in pr..size {
                for cell in grid[rw].iter_mut() {
                    *cell = cell.clone().negate();
                }
                sign = -sign;
                push(TraceOp::NegateRow(rw), sign, &grid);
            }
        }
        DiagonalType::Type3 => {
            let pr = k - 1; // 0-based row with q = i
            let fcol = k - r; // 0-based first column of the crossing block

            for l in 0..pr {
                let mult = seg_strip(&phi, i + 1, qs[l])?;
                for t in fcol..m {
                    grid[l][t] = TraceEntry {
                        negated: true,
                        entry: seg_entry(&phit, ps[t], qs[l])?,
                    };
                }
                push(
                    TraceOp::RowCombine {
                        target: l,
                        pivot: pr,
                        mult,
                        subtract: true,
                    },
                    sign,
                    &grid,
                );
            }
            for c in fcol..m {
                for row in grid.iter_mut() {
                    row[c] = row[c].clone().negate();
                }
                sign = -sign;
                push(TraceOp::NegateCol(c), sign, &grid);
            }
            for rw in pr..m {
                for cell in grid[rw].iter_mut() {
                    *cell = cell.clone().negate();
                }
                sign = -sign;
                push(TraceOp::NegateRow(rw), sign, &grid);
            }
        }
        _ => {
            return Err(Error::Internal(
                "direct construction handles Types 1 and 3 only".into(),
            ))
        }
    }

    Ok(TwistTrace {
        content: i,
        diagonal_type: class.diagonal_type,
        r,
        k,
        steps,
    })
}

fn border_sign(pivot_row: usize, pivot_col: usize) -> i8 {
    if (pivot_row + pivot_col) % 2 == 0 {
        1
    } else {
        -1
    }
}

fn reverse_trace(trace: TwistTrace) -> TwistTrace {
    let n = trace.steps.len();
    let steps = (0..n)
        .map(|t| {
            let src = &trace.steps[n - 1 - t];
            let op = if t == 0 {
                TraceOp::Initial
            } else {
                trace.steps[n - t].op.inverse()
            };
            TraceStep {
                op,
                sign: src.sign,
                matrix: src.matrix.clone(),
            }
        })
        .collect();
    TwistTrace {
        steps,
        ..trace
    }
}

fn conjugate_entry(e: &TraceEntry) -> TraceEntry {
    TraceEntry {
        negated: e.negated,
        entry: match &e.entry {
            SchurEntry::Empty => SchurEntry::Empty,
            SchurEntry::Undefined => SchurEntry::Undefined,
            SchurEntry::Ribbon(s) => SchurEntry::Ribbon(s.conjugate()),
        },
    }
}

/// Entrywise conjugation plus anti-transposition: new[l][t] = conj of
/// old[s-1-t][s-1-l]. This carries the canonical form over the conjugate
/// shape to the canonical form over the original one, preserving both the
/// determinant and the sign.
fn antitranspose_grid(grid: &[Vec<TraceEntry>]) -> Vec<Vec<TraceEntry>> {
    let s = grid.len();
    (0..s)
        .map(|l| {
            (0..s)
                .map(|t| conjugate_entry(&grid[s - 1 - t][s - 1 - l]))
                .collect()
        })
        .collect()
}

fn transport_conjugate(inner: TwistTrace, class: &TwistClass) -> TwistTrace {
    let steps = inner
        .steps
        .iter()
        .enumerate()
        .map(|(idx, step)| {
            let result_size = step.matrix.len();
            let source_size = if idx == 0 {
                result_size
            } else {
                inner.steps[idx - 1].matrix.len()
            };
            let op = match &step.op {
                TraceOp::Initial => TraceOp::Initial,
                TraceOp::Border {
                    pivot_row,
                    pivot_col,
                } => TraceOp::Border {
                    pivot_row: result_size - 1 - pivot_col,
                    pivot_col: result_size - 1 - pivot_row,
                },
                TraceOp::Strike {
                    pivot_row,
                    pivot_col,
                } => TraceOp::Strike {
                    pivot_row: source_size - 1 - pivot_col,
                    pivot_col: source_size - 1 - pivot_row,
                },
                TraceOp::RowCombine {
                    target,
                    pivot,
                    mult,
                    subtract,
                } => TraceOp::ColCombine {
                    target: result_size - 1 - target,
                    pivot: result_size - 1 - pivot,
                    mult: mult.conjugate(),
                    subtract: *subtract,
                },
                TraceOp::ColCombine {
                    target,
                    pivot,
                    mult,
                    subtract,
                } => TraceOp::RowCombine {
                    target: result_size - 1 - target,
                    pivot: result_size - 1 - pivot,
                    mult: mult.conjugate(),
                    subtract: *subtract,
                },
                TraceOp::NegateRow(rw) => TraceOp::NegateCol(result_size - 1 - rw),
                TraceOp::NegateCol(c) => TraceOp::NegateRow(result_size - 1 - c),
            };
            TraceStep {
                op,
                sign: step.sign,
                matrix: antitranspose_grid(&step.matrix),
            }
        })
        .collect();
    TwistTrace {
        content: class.content,
        diagonal_type: class.diagonal_type,
        r: class.r,
        k: inner.k,
        steps,
    }
}

fn entry_value(ev: &Evaluator, cell: &TraceEntry) -> Polynomial {
    let v = ev.entry(&cell.entry);
    if cell.negated {
        -&v
    } else {
        v
    }
}

fn grid_det(ev: &Evaluator, grid: &[Vec<TraceEntry>]) -> Result<Polynomial> {
    let values: Vec<Vec<Polynomial>> = grid
        .iter()
        .map(|row| row.iter().map(|c| entry_value(ev, c)).collect())
        .collect();
    det(&values)
}

fn grids_equal(a: &[Vec<TraceEntry>], b: &[Vec<TraceEntry>]) -> bool {
    a == b
}

fn grid_matches_canonical(grid: &[Vec<TraceEntry>], canon: &HGMatrix) -> bool {
    grids_equal(grid, &grid_from_hg(canon))
}

/// Check that `to` is exactly `from` after the declared operation. Entry
/// identities (the product rule in particular) are checked at the
/// polynomial level.
fn check_op(
    ev: &Evaluator,
    from: &TraceStep,
    to: &TraceStep,
) -> std::result::Result<(), String> {
    let expected_sign = |factor: i8| from.sign * factor;
    match &to.op {
        TraceOp::Initial => return Err("initial step cannot follow another step".into()),
        TraceOp::Border {
            pivot_row,
            pivot_col,
        } => {
            let s = to.matrix.len();
            if from.matrix.len() + 1 != s {
                return Err("bordered matrix must grow by one".into());
            }
            if to.sign != expected_sign(border_sign(*pivot_row, *pivot_col)) {
                return Err("bordering sign mismatch".into());
            }
            check_unit_cross(ev, &to.matrix, *pivot_row, *pivot_col)?;
            let minor = strike_grid(&to.matrix, *pivot_row, *pivot_col);
            if !grids_equal(&minor, &from.matrix) {
                return Err("bordered matrix does not contain the original as its minor".into());
            }
        }
        TraceOp::Strike {
            pivot_row,
            pivot_col,
        } => {
            if from.matrix.len() != to.matrix.len() + 1 {
                return Err("struck matrix must shrink by one".into());
            }
            if to.sign != expected_sign(border_sign(*pivot_row, *pivot_col)) {
                return Err("striking sign mismatch".into());
            }
            check_unit_cross(ev, &from.matrix, *pivot_row, *pivot_col)?;
            let minor = strike_grid(&from.matrix, *pivot_row, *pivot_col);
            if !grids_equal(&minor, &to.matrix) {
                return Err("minor after striking does not match".into());
            }
        }
        TraceOp::RowCombine {
            target,
            pivot,
            mult,
            subtract,
        } => {
            if to.sign != from.sign {
                return Err("row combination must not change the sign".into());
            }
            let s = to.matrix.len();
            if from.matrix.len() != s || *target >= s || *pivot >= s || target == pivot {
                return Err("bad row combination indices".into());
            }
            let mv = ev.strip(mult);
            for c in 0..s {
                let old = entry_value(ev, &from.matrix[*target][c]);
                let piv = entry_value(ev, &from.matrix[*pivot][c]);
                let new = entry_value(ev, &to.matrix[*target][c]);
                let scaled = &mv * &piv;
                let expect = if *subtract { &old - &scaled } else { &old + &scaled };
                if new != expect {
                    return Err(format!("row combination wrong in column {}", c + 1));
                }
            }
            for rw in 0..s {
                if rw != *target && to.matrix[rw] != from.matrix[rw] {
                    return Err(format!("row {} changed unexpectedly", rw + 1));
                }
            }
        }
        TraceOp::ColCombine {
            target,
            pivot,
            mult,
            subtract,
        } => {
            if to.sign != from.sign {
                return Err("column combination must not change the sign".into());
            }
            let s = to.matrix.len();
            if from.matrix.len() != s || *target >= s || *pivot >= s || target == pivot {
                return Err("bad column combination indices".into());
            }
            let mv = ev.strip(mult);
            for rw in 0..s {
                let old = entry_value(ev, &from.matrix[rw][*target]);
                let piv = entry_value(ev, &from.matrix[rw][*pivot]);
                let new = entry_value(ev, &to.matrix[rw][*target]);
                let scaled = &mv * &piv;
                let expect = if *subtract { &old - &scaled } else { &old + &scaled };
                if new != expect {
                    return Err(format!("column combination wrong in row {}", rw + 1));
                }
                for c in 0..s {
                    if c != *target && to.matrix[rw][c] != from.matrix[rw][c] {
                        return Err(format!("column {} changed unexpectedly", c + 1));
                    }
                }
            }
        }
        TraceOp::NegateRow(rw) => {
            if to.sign != -from.sign {
                return Err("negation must flip the sign".into());
            }
            for (l, (fa, ta)) in from.matrix.iter().zip(&to.matrix).enumerate() {
                for c in 0..fa.len() {
                    let expect = if l == *rw {
                        fa[c].clone().negate()
                    } else {
                        fa[c].clone()
                    };
                    if ta[c] != expect {
                        return Err(format!("negate row wrong at ({},{})", l + 1, c + 1));
                    }
                }
            }
        }
        TraceOp::NegateCol(col) => {
            if to.sign != -from.sign {
                return Err("negation must flip the sign".into());
            }
            for (l, (fa, ta)) in from.matrix.iter().zip(&to.matrix).enumerate() {
                for c in 0..fa.len() {
                    let expect = if c == *col {
                        fa[c].clone().negate()
                    } else {
                        fa[c].clone()
                    };
                    if ta[c] != expect {
                        return Err(format!("negate column wrong at ({},{})", l + 1, c + 1));
                    }
                }
            }
        }
    }
    Ok(())
}

/// The bordering pair needs a pivot of value 1 whose row or column is zero
/// elsewhere: expanding the determinant along that line gives the
/// (-1)^(row+col) factor. Direct traces make the column unit; conjugated
/// ones make the row unit.
fn check_unit_cross(
    ev: &Evaluator,
    grid: &[Vec<TraceEntry>],
    pr: usize,
    pc: usize,
) -> std::result::Result<(), String> {
    let pivot = entry_value(ev, &grid[pr][pc]);
    if !pivot.is_one() {
        return Err("pivot of the unit cross is not 1".into());
    }
    let col_unit = grid
        .iter()
        .enumerate()
        .all(|(l, row)| l == pr || entry_value(ev, &row[pc]).is_zero());
    let row_unit = (0..grid.len())
        .all(|c| c == pc || entry_value(ev, &grid[pr][c]).is_zero());
    if !col_unit && !row_unit {
        return Err("neither the pivot row nor the pivot column is unit".into());
    }
    Ok(())
}

fn strike_grid(grid: &[Vec<TraceEntry>], pr: usize, pc: usize) -> Vec<Vec<TraceEntry>> {
    grid.iter()
        .enumerate()
        .filter(|&(l, _)| l != pr)
        .map(|(_, row)| {
            row.iter()
                .enumerate()
                .filter(|&(c, _)| c != pc)
                .map(|(_, e)| e.clone())
                .collect()
        })
        .collect()
}

fn verify_trace(
    trace: &TwistTrace,
    pi: &OutsideDecomposition,
    i: i32,
    ev: &Evaluator,
) -> Result<()> {
    let fail = |step: usize, op: &TraceOp, msg: String| Error::TraceVerification {
        step,
        op: op.to_string(),
        msg,
    };

    let target = ev.schur(pi.shape());
    let start = hg_matrix(pi, MatrixForm::Canonical)?;
    let end = hg_matrix(&twist(pi, i)?, MatrixForm::Canonical)?;

    let first = trace.initial();
    if !grid_matches_canonical(&first.matrix, &start) || first.sign != start.sign {
        return Err(fail(0, &first.op, "trace does not start at the canonical form".into()));
    }
    let last = trace.final_step();
    if !grid_matches_canonical(&last.matrix, &end) || last.sign != end.sign {
        return Err(fail(
            trace.steps.len() - 1,
            &last.op,
            "trace does not end at the canonical form of the twisted decomposition".into(),
        ));
    }

    for (idx, step) in trace.steps.iter().enumerate() {
        let d = grid_det(ev, &step.matrix)?;
        let signed = if step.sign < 0 { -&d } else { d };
        if signed != target {
            return Err(fail(
                idx,
                &step.op,
                "signed determinant differs from the skew Schur value".into(),
            ));
        }
        if idx > 0 {
            check_op(ev, &trace.steps[idx - 1], step)
                .map_err(|msg| fail(idx, &step.op, msg))?;
        } else if step.op != TraceOp::Initial {
            return Err(fail(idx, &step.op, "first step must be the initial form".into()));
        }
    }
    Ok(())
}
