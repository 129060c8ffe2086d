//! Shared helpers for the integration test suites: the desk-scale shape
//! sweep, a brute-force outside-decomposition counter, and an independent
//! permutation-sum determinant.

use std::collections::{BTreeSet, HashSet};

use cutstrip::{Partition, Polynomial, Pos, SkewShape};

pub fn shape(s: &str) -> SkewShape {
    s.parse().unwrap()
}

/// All partitions with at most `max_parts` parts, each at most `max_part`,
/// including the empty one.
pub fn partitions_in_box(max_parts: usize, max_part: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    fn rec(prefix: &mut Vec<u32>, max_parts: usize, cap: u32, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == max_parts {
            return;
        }
        for p in (1..=cap).rev() {
            prefix.push(p);
            out.push(prefix.clone());
            rec(prefix, max_parts, p, out);
            prefix.pop();
        }
    }
    let mut prefix = Vec::new();
    rec(&mut prefix, max_parts, max_part, &mut out);
    out
}

/// All sub-partitions μ ⊆ λ.
pub fn sub_partitions(lambda: &[u32]) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    fn rec(lambda: &[u32], i: usize, cap: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == lambda.len() {
            out.push(prefix.clone());
            return;
        }
        for p in 0..=cap.min(lambda[i]) {
            prefix.push(p);
            rec(lambda, i + 1, p, prefix, out);
            prefix.pop();
        }
    }
    // descending choice order does not matter for completeness; we cap each
    // μ_i by min(μ_{i-1}, λ_i)
    let mut prefix = Vec::new();
    rec(lambda, 0, u32::MAX, &mut prefix, &mut out);
    out
}

/// Every connected skew shape with λ ⊆ (4,4,4,4) and at most `max_boxes`
/// boxes, deduplicated up to translation.
pub fn sweep_shapes(max_boxes: u64) -> Vec<SkewShape> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for la in partitions_in_box(4, 4) {
        if la.is_empty() {
            continue;
        }
        let lam = Partition::new(la.clone()).unwrap();
        for mu in sub_partitions(&la) {
            let inner = Partition::new(mu).unwrap();
            let sh = SkewShape::new(lam.clone(), inner).unwrap();
            if sh.is_empty() || sh.num_boxes() > max_boxes || !sh.is_connected() {
                continue;
            }
            let norm = sh.normalized().unwrap();
            if seen.insert(norm.clone()) {
                out.push(norm);
            }
        }
    }
    out
}

fn ribbon_extensions(
    remaining: &BTreeSet<Pos>,
    from: Pos,
    step: impl Fn(Pos) -> [Pos; 2] + Copy,
) -> Vec<Vec<Pos>> {
    let mut out = vec![vec![]];
    for next in step(from) {
        if remaining.contains(&next) {
            for mut tail in ribbon_extensions(remaining, next, step) {
                let mut path = vec![next];
                path.append(&mut tail);
                out.push(path);
            }
        }
    }
    out
}

/// All ribbons inside `remaining` that contain `seed`, each as a box list in
/// traversal order.
fn ribbons_through(remaining: &BTreeSet<Pos>, seed: Pos) -> Vec<Vec<Pos>> {
    let downs = ribbon_extensions(remaining, seed, |p| [p.left(), p.down()]);
    let ups = ribbon_extensions(remaining, seed, |p| [p.right(), p.up()]);
    let mut out = Vec::new();
    for d in &downs {
        for u in &ups {
            let mut ribbon: Vec<Pos> = d.iter().rev().copied().collect();
            ribbon.push(seed);
            ribbon.extend(u.iter().copied());
            out.push(ribbon);
        }
    }
    out
}

fn strip_is_outside(sh: &SkewShape, ribbon: &[Pos]) -> bool {
    let start = ribbon[0];
    let end = *ribbon.last().unwrap();
    let start_ok = !sh.contains(start.left()) || !sh.contains(start.down());
    let end_ok = !sh.contains(end.up()) || !sh.contains(end.right());
    start_ok && end_ok
}

/// Count all partitions of the box set into border strips that satisfy the
/// outside definition (perimeter conditions only), by direct search. This
/// is the independent referee for the 2^(d-1) count.
pub fn brute_force_outside_count(sh: &SkewShape) -> usize {
    let mut remaining: BTreeSet<Pos> = sh.boxes().into_iter().collect();
    fn rec(sh: &SkewShape, remaining: &mut BTreeSet<Pos>) -> usize {
        let Some(&seed) = remaining.iter().next() else {
            return 1;
        };
        let mut total = 0;
        for ribbon in ribbons_through(remaining, seed) {
            if !strip_is_outside(sh, &ribbon) {
                continue;
            }
            for b in &ribbon {
                remaining.remove(b);
            }
            total += rec(sh, remaining);
            for b in &ribbon {
                remaining.insert(*b);
            }
        }
        total
    }
    rec(sh, &mut remaining)
}

/// Independent determinant: the full permutation sum, sign by inversion
/// count. Only used as an oracle against the subset-expansion determinant.
pub fn det_permutation_sum(matrix: &[Vec<Polynomial>]) -> Polynomial {
    let m = matrix.len();
    if m == 0 {
        return Polynomial::one(0);
    }
    let n = matrix[0][0].nvars();
    fn rec(
        matrix: &[Vec<Polynomial>],
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        acc: &mut Polynomial,
    ) {
        let m = matrix.len();
        if perm.len() == m {
            let n = acc.nvars();
            let mut prod = Polynomial::one(n);
            for (i, &j) in perm.iter().enumerate() {
                prod = &prod * &matrix[i][j];
            }
            *acc = if cutstrip::permutation_inversions(perm) % 2 == 0 {
                &*acc + &prod
            } else {
                &*acc - &prod
            };
            return;
        }
        for j in 0..m {
            if !used[j] {
                used[j] = true;
                perm.push(j);
                rec(matrix, perm, used, acc);
                perm.pop();
                used[j] = false;
            }
        }
    }
    let mut acc = Polynomial::zero(n);
    rec(matrix, &mut Vec::new(), &mut vec![false; m], &mut acc);
    acc
}

/// Small deterministic PRNG for randomized-but-reproducible checks.
pub struct XorShift(pub u64);

impl XorShift {
    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }

    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            items.swap(i, j);
        }
    }
}
