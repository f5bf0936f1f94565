//! Independent oracles shared by the integration tests. Nothing here calls
//! the algorithm it is used to check.
#![allow(dead_code)]

use std::collections::HashMap;

use depthzero::{Multisegment, Partition, Segment};

/// Every multisegment of total size `n` with minimum start 0.
pub fn multisegments(n: usize) -> Vec<Multisegment> {
    let mut segs = Vec::new();
    for s in 0..n as i64 {
        for e in s..n as i64 {
            segs.push(Segment::new(s, e).unwrap());
        }
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(segs: &[Segment], from: usize, left: usize, cur: &mut Vec<Segment>, out: &mut Vec<Multisegment>) {
        if left == 0 {
            if cur.iter().any(|s| s.start() == 0) {
                out.push(Multisegment::new(cur.clone()));
            }
            return;
        }
        for i in from..segs.len() {
            if segs[i].len() <= left {
                cur.push(segs[i]);
                go(segs, i, left - segs[i].len(), cur, out);
                cur.pop();
            }
        }
    }
    go(&segs, 0, n, &mut cur, &mut out);
    out
}

/// Every multisegment of size at most `n`.
pub fn multisegments_up_to(n: usize) -> Vec<Multisegment> {
    (1..=n).flat_map(multisegments).collect()
}

/// Every length tuple (composition) of `n`.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Counts fillings of the diagram with labels `1..` used `content[i]` times,
/// rows weakly increasing, columns strictly increasing, cell by cell.
pub fn brute_ssyt(shape: &[usize], content: &[usize]) -> u64 {
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    if cells.len() != content.iter().sum::<usize>() {
        return 0;
    }
    // 0 marks an unfilled cell
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&l| vec![0; l]).collect();
    let mut left = content.to_vec();
    fn rec(k: usize, cells: &[(usize, usize)], grid: &mut [Vec<usize>], left: &mut [usize]) -> u64 {
        if k == cells.len() {
            return 1;
        }
        let (r, c) = cells[k];
        let mut total = 0;
        for v in 1..=left.len() {
            if left[v - 1] == 0 {
                continue;
            }
            if c > 0 && grid[r][c - 1] > v {
                continue;
            }
            if r > 0 && grid[r - 1][c] >= v {
                continue;
            }
            grid[r][c] = v;
            left[v - 1] -= 1;
            total += rec(k + 1, cells, grid, left);
            left[v - 1] += 1;
            grid[r][c] = 0;
        }
        total
    }
    rec(0, &cells, &mut grid, &mut left)
}

/// Conjugate by transposing the cell set.
pub fn brute_conjugate(parts: &[usize]) -> Vec<usize> {
    let cells: Vec<(usize, usize)> = parts
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (c, r)))
        .collect();
    let rows = cells.iter().map(|&(r, _)| r + 1).max().unwrap_or(0);
    (0..rows)
        .map(|r| cells.iter().filter(|&&(rr, _)| rr == r).count())
        .collect()
}

/// Rank profile order: `b ≤ a` iff every `r_{ij}(a) ≤ r_{ij}(b)`, where
/// `r_{ij}` counts segments containing `[i, j]`.
pub fn rank_leq(b: &Multisegment, a: &Multisegment) -> bool {
    let pts: Vec<i64> = a.support().keys().copied().collect();
    let (lo, hi) = (pts[0], pts[pts.len() - 1]);
    let r = |m: &Multisegment, i: i64, j: i64| {
        m.segments()
            .iter()
            .filter(|s| s.start() <= i && j <= s.end())
            .count()
    };
    (lo..=hi).all(|i| (i..=hi).all(|j| r(a, i, j) <= r(b, i, j)))
}

pub fn partitions(n: usize) -> Vec<Partition> {
    Partition::all(n)
}

// ---- permutations as plain 0-based vectors ----

pub fn perms(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in perms(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

pub fn inversions(p: &[usize]) -> usize {
    let mut c = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                c += 1;
            }
        }
    }
    c
}

/// Tableau criterion for the Bruhat order.
pub fn tableau_leq(x: &[usize], w: &[usize]) -> bool {
    let n = x.len();
    (0..n).all(|i| {
        (0..n).all(|k| {
            let cx = x[..=i].iter().filter(|&&v| v >= k).count();
            let cw = w[..=i].iter().filter(|&&v| v >= k).count();
            cx <= cw
        })
    })
}

/// Swap the values `s, s+1` (left multiplication by a simple reflection).
fn left_swap(p: &[usize], s: usize) -> Vec<usize> {
    p.iter()
        .map(|&v| if v == s { s + 1 } else if v == s + 1 { s } else { v })
        .collect()
}

fn left_descent(p: &[usize]) -> Option<usize> {
    let pos: Vec<usize> = {
        let mut inv = vec![0; p.len()];
        for (i, &v) in p.iter().enumerate() {
            inv[v] = i;
        }
        inv
    };
    (0..p.len().saturating_sub(1)).find(|&s| pos[s] > pos[s + 1])
}

type Poly = Vec<i64>;

fn padd(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, v) in a.iter().enumerate() {
        out[i] += v;
    }
    for (i, v) in b.iter().enumerate() {
        out[i] += v;
    }
    out
}

fn pmul(a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

pub fn trim(mut p: Poly) -> Poly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

/// KL polynomials through R-polynomials and the inversion formula
/// `q^{ℓ(w)-ℓ(x)} P_{x,w}(1/q) = Σ_{x ≤ y ≤ w} R_{x,y} P_{y,w}`.
pub struct RKl {
    r: HashMap<(Vec<usize>, Vec<usize>), Poly>,
}

impl RKl {
    pub fn new() -> Self {
        RKl { r: HashMap::new() }
    }

    pub fn r(&mut self, x: &[usize], w: &[usize]) -> Poly {
        if !tableau_leq(x, w) {
            return vec![];
        }
        if x == w {
            return vec![1];
        }
        let key = (x.to_vec(), w.to_vec());
        if let Some(v) = self.r.get(&key) {
            return v.clone();
        }
        let s = left_descent(w).expect("w is not the identity");
        let sw = left_swap(w, s);
        let sx = left_swap(x, s);
        let out = if inversions(&sx) < inversions(x) {
            self.r(&sx, &sw)
        } else {
            let a = pmul(&vec![-1, 1], &self.r(x, &sw));
            let b = pmul(&vec![0, 1], &self.r(&sx, &sw));
            trim(padd(&a, &b))
        };
        self.r.insert(key, out.clone());
        out
    }

    /// `x ↦ P_{x,w}` for every `x ≤ w`.
    pub fn column(&mut self, w: &[usize]) -> HashMap<Vec<usize>, Poly> {
        let mut below: Vec<Vec<usize>> = perms(w.len()).into_iter().filter(|x| tableau_leq(x, w)).collect();
        below.sort_by_key(|x| std::cmp::Reverse(inversions(x)));
        let lw = inversions(w);
        let mut col: HashMap<Vec<usize>, Poly> = HashMap::new();
        for x in below {
            if x == w {
                col.insert(x, vec![1]);
                continue;
            }
            let mut rhs: Poly = vec![];
            for (y, p) in &col {
                if tableau_leq(&x, y) {
                    rhs = padd(&rhs, &pmul(&self.r(&x, y), p));
                }
            }
            let d = lw - inversions(&x);
            let top = (d - 1) / 2;
            let p: Poly = (0..=top).map(|k| -rhs.get(k).copied().unwrap_or(0)).collect();
            col.insert(x, trim(p));
        }
        col
    }
}
