//! Ground-truth evaluation of skew Schur functions in n variables.
//!
//! The oracle is plain semistandard-tableau enumeration by backtracking in
//! row-major order. It is deliberately simple: it referees every
//! determinant in the crate. Desk-scale shapes only.

use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial};
use crate::shapes::{Pos, SkewShape};
use crate::strips::{BorderStrip, Segment};

/// One entry of a Hamel-Goulden matrix: the empty strip (value 1), an
/// undefined strip (value 0), or a ribbon.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SchurEntry {
    Empty,
    Undefined,
    Ribbon(BorderStrip),
}

impl SchurEntry {
    pub fn from_segment(seg: Segment) -> Self {
        match seg {
            Segment::Empty => SchurEntry::Empty,
            Segment::Undefined => SchurEntry::Undefined,
            Segment::Proper(s) => SchurEntry::Ribbon(s),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, SchurEntry::Undefined)
    }

    /// Entry descriptor for display and JSON: "1", "0", or the normalized
    /// shape string of the ribbon.
    pub fn shape_string(&self) -> String {
        match self {
            SchurEntry::Empty => "1".to_string(),
            SchurEntry::Undefined => "0".to_string(),
            SchurEntry::Ribbon(s) => s.to_skew_shape().to_string(),
        }
    }
}

/// A filling of a skew shape with positive integers.
#[derive(Clone, Debug)]
pub struct Tableau {
    shape: SkewShape,
    entries: Vec<(Pos, u32)>,
}

impl Tableau {
    /// Entries must cover the boxes of the shape exactly.
    pub fn new(shape: SkewShape, mut entries: Vec<(Pos, u32)>) -> Result<Self> {
        entries.sort();
        let boxes: Vec<Pos> = entries.iter().map(|&(p, _)| p).collect();
        if boxes != shape.boxes() {
            return Err(Error::Internal(
                "tableau entries do not match the box set".into(),
            ));
        }
        Ok(Tableau { shape, entries })
    }

    pub fn entry(&self, p: Pos) -> Option<u32> {
        self.entries
            .iter()
            .find(|&&(q, _)| q == p)
            .map(|&(_, v)| v)
    }

    /// Rows weakly increase left to right, columns strictly increase top to
    /// bottom.
    pub fn is_semistandard(&self) -> bool {
        self.entries.iter().all(|&(p, v)| {
            let row_ok = match self.entry(p.left()) {
                Some(w) => w <= v,
                None => true,
            };
            let col_ok = match self.entry(p.up()) {
                Some(w) => w < v,
                None => true,
            };
            row_ok && col_ok && v >= 1
        })
    }

    /// The monomial Π x_{entry} in n variables; entries must be ≤ n.
    pub fn weight(&self, n: usize) -> Result<Monomial> {
        let mut exps = vec![0u16; n];
        for &(_, v) in &self.entries {
            if v == 0 || v as usize > n {
                return Err(Error::Internal(format!("entry {v} outside 1..={n}")));
            }
            exps[v as usize - 1] += 1;
        }
        Ok(Monomial(exps))
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }
}

/// Brute-force SSYT enumeration: the sum over all semistandard fillings with
/// entries in 1..=n of the corresponding monomial.
pub fn schur_oracle(shape: &SkewShape, n: usize) -> Polynomial {
    let boxes = shape.boxes();
    let mut exps = vec![0u16; n];
    let mut values: Vec<u32> = vec![0; boxes.len()];
    let mut acc: HashMap<Vec<u16>, BigInt> = HashMap::new();

    // index of the box directly left / above within `boxes` (row-major)
    let find = |p: Pos| boxes.iter().position(|&q| q == p);
    let lefts: Vec<Option<usize>> = boxes.iter().map(|b| find(b.left())).collect();
    let ups: Vec<Option<usize>> = boxes.iter().map(|b| find(b.up())).collect();

    fn rec(
        i: usize,
        boxes: &[Pos],
        lefts: &[Option<usize>],
        ups: &[Option<usize>],
        n: usize,
        values: &mut Vec<u32>,
        exps: &mut Vec<u16>,
        acc: &mut HashMap<Vec<u16>, BigInt>,
    ) {
        if i == boxes.len() {
            let entry = acc.entry(exps.clone()).or_default();
            *entry += 1;
            return;
        }
        let lo = match (lefts[i], ups[i]) {
            (Some(l), Some(u)) => values[l].max(values[u] + 1),
            (Some(l), None) => values[l],
            (None, Some(u)) => values[u] + 1,
            (None, None) => 1,
        };
        for v in lo..=n as u32 {
            values[i] = v;
            exps[v as usize - 1] += 1;
            rec(i + 1, boxes, lefts, ups, n, values, exps, acc);
            exps[v as usize - 1] -= 1;
        }
    }

    rec(0, &boxes, &lefts, &ups, n, &mut values, &mut exps, &mut acc);
    Polynomial::from_terms(n, acc.into_iter().map(|(e, c)| (Monomial(e), c)))
}

/// Complete homogeneous symmetric polynomial h_k: the sum of all degree-k
/// monomials in n variables. h_0 = 1.
pub fn h_complete(k: i64, n: usize) -> Result<Polynomial> {
    if k < 0 {
        return Err(Error::NegativeArgument(format!("h_{k}")));
    }
    let mut terms = Vec::new();
    let mut exps = vec![0u16; n];
    fn rec(var: usize, left: u16, exps: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if var + 1 == exps.len() {
            exps[var] = left;
            out.push(Monomial(exps.clone()));
            return;
        }
        for e in 0..=left {
            exps[var] = e;
            rec(var + 1, left - e, exps, out);
        }
        exps[var] = 0;
    }
    if n == 0 {
        return Ok(if k == 0 {
            Polynomial::one(0)
        } else {
            Polynomial::zero(0)
        });
    }
    let mut monos = Vec::new();
    rec(0, k as u16, &mut exps, &mut monos);
    terms.extend(monos.into_iter().map(|m| (m, BigInt::one())));
    Ok(Polynomial::from_terms(n, terms))
}

/// Elementary symmetric polynomial e_k: the sum of all squarefree degree-k
/// monomials. e_0 = 1, e_k = 0 for k > n.
pub fn e_elementary(k: i64, n: usize) -> Result<Polynomial> {
    if k < 0 {
        return Err(Error::NegativeArgument(format!("e_{k}")));
    }
    let k = k as usize;
    if k > n {
        return Ok(Polynomial::zero(n));
    }
    let mut terms = Vec::new();
    let mut pick = Vec::new();
    fn rec(start: usize, left: usize, n: usize, pick: &mut Vec<usize>, out: &mut Vec<Monomial>) {
        if left == 0 {
            let mut exps = vec![0u16; n];
            for &i in pick.iter() {
                exps[i] = 1;
            }
            out.push(Monomial(exps));
            return;
        }
        for i in start..=n - left {
            pick.push(i);
            rec(i + 1, left - 1, n, pick, out);
            pick.pop();
        }
    }
    let mut monos = Vec::new();
    rec(0, k, n, &mut pick, &mut monos);
    terms.extend(monos.into_iter().map(|m| (m, BigInt::one())));
    Ok(Polynomial::from_terms(n, terms))
}

/// Uncached valuation of a matrix entry.
pub fn value(entry: &SchurEntry, n: usize) -> Polynomial {
    match entry {
        SchurEntry::Empty => Polynomial::one(n),
        SchurEntry::Undefined => Polynomial::zero(n),
        SchurEntry::Ribbon(s) => schur_oracle(&s.to_skew_shape(), n),
    }
}

/// Memoizing valuation context for a fixed variable count. Results are keyed
/// by the translation-normalized shape, so equal ribbons in different
/// positions share one oracle run. Guarded by a mutex; safe to share across
/// threads.
pub struct Evaluator {
    n: usize,
    cache: Mutex<HashMap<SkewShape, Polynomial>>,
}

impl Evaluator {
    pub fn new(n: usize) -> Self {
        Evaluator {
            n,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn schur(&self, shape: &SkewShape) -> Polynomial {
        let key = shape.normalized().unwrap_or_else(|_| shape.clone());
        if let Some(hit) = self.cache.lock().unwrap().get(&key) {
            return hit.clone();
        }
        let val = schur_oracle(&key, self.n);
        self.cache.lock().unwrap().insert(key, val.clone());
        val
    }

    pub fn strip(&self, strip: &BorderStrip) -> Polynomial {
        self.schur(&strip.to_skew_shape())
    }

    pub fn entry(&self, entry: &SchurEntry) -> Polynomial {
        match entry {
            SchurEntry::Empty => Polynomial::one(self.n),
            SchurEntry::Undefined => Polynomial::zero(self.n),
            SchurEntry::Ribbon(s) => self.strip(s),
        }
    }
}
