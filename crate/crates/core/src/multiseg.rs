//! Zelevinsky multisegments on the unramified cuspidal line.
//!
//! The line is identified with `ℤ` through exponents of `ν`, so the segment
//! `[b,e]` stands for `{ν^b, …, ν^e}`. Everything downstream depends only on
//! differences and lengths, so a global shift changes nothing.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hecke::{KlTable, WeylElement};
use crate::partition::Partition;

/// Default bound on the number of points of a support handed to [`poset`].
pub const DEFAULT_POSET_CAP: usize = 12;

/// The integer interval `[start, end]`, never empty.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Segment {
    start: i64,
    end: i64,
}

impl Segment {
    pub fn new(start: i64, end: i64) -> Result<Self> {
        if start > end {
            return Err(Error::parse(
                format!("[{start},{end}]"),
                "segment start exceeds its end",
            ));
        }
        Ok(Segment { start, end })
    }

    pub fn point(k: i64) -> Self {
        Segment { start: k, end: k }
    }

    pub fn start(&self) -> i64 {
        self.start
    }

    pub fn end(&self) -> i64 {
        self.end
    }

    pub fn len(&self) -> usize {
        (self.end - self.start + 1) as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains_segment(&self, other: &Segment) -> bool {
        self.start <= other.start && other.end <= self.end
    }

    pub fn contains(&self, k: i64) -> bool {
        self.start <= k && k <= self.end
    }

    /// Neither contains the other and the union is again a segment.
    pub fn linked(&self, other: &Segment) -> bool {
        let (lo, hi) = if self.start <= other.start {
            (self, other)
        } else {
            (other, self)
        };
        lo.start < hi.start && lo.end < hi.end && hi.start <= lo.end + 1
    }

    pub fn union(&self, other: &Segment) -> Segment {
        Segment {
            start: self.start.min(other.start),
            end: self.end.max(other.end),
        }
    }

    /// `None` when the segments do not overlap.
    pub fn intersection(&self, other: &Segment) -> Option<Segment> {
        let start = self.start.max(other.start);
        let end = self.end.min(other.end);
        (start <= end).then_some(Segment { start, end })
    }
}

/// Linked-pair test on two segments.
pub fn linked(a: &Segment, b: &Segment) -> bool {
    a.linked(b)
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.start, self.end)
    }
}

impl FromStr for Segment {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::parse(t, "expected `[b,e]` or `[k]`"))?;
        let nums = inner
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::parse(t, format!("`{}` is not an integer", x.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        match nums[..] {
            [k] => Ok(Segment::point(k)),
            [b, e] => Segment::new(b, e).map_err(|_| Error::parse(t, "segment start exceeds its end")),
            _ => Err(Error::parse(t, "expected `[b,e]` or `[k]`")),
        }
    }
}

/// A finite multiset of segments, kept sorted descending by `(start, end)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<Segment>", into = "Vec<Segment>")]
pub struct Multisegment {
    segments: Vec<Segment>,
}

impl From<Vec<Segment>> for Multisegment {
    fn from(segments: Vec<Segment>) -> Self {
        Multisegment::new(segments)
    }
}

impl From<Multisegment> for Vec<Segment> {
    fn from(m: Multisegment) -> Self {
        m.segments
    }
}

impl Multisegment {
    pub fn new(mut segments: Vec<Segment>) -> Self {
        segments.sort_unstable_by(|a, b| b.cmp(a));
        Multisegment { segments }
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    /// Total number of points, the `n` of `GL_n`.
    pub fn degree(&self) -> usize {
        self.segments.iter().map(Segment::len).sum()
    }

    /// Segment lengths, weakly decreasing.
    pub fn lengths(&self) -> Vec<usize> {
        let mut l: Vec<usize> = self.segments.iter().map(Segment::len).collect();
        l.sort_unstable_by(|a, b| b.cmp(a));
        l
    }

    /// Cuspidal support: each point with its multiplicity.
    pub fn support(&self) -> BTreeMap<i64, usize> {
        let mut out = BTreeMap::new();
        for seg in &self.segments {
            for k in seg.start..=seg.end {
                *out.entry(k).or_insert(0) += 1;
            }
        }
        out
    }

    /// `Σ len²`, which every elementary operation strictly increases.
    pub fn energy(&self) -> usize {
        self.segments.iter().map(|s| s.len() * s.len()).sum()
    }

    /// No two segments are linked.
    pub fn is_unlinked(&self) -> bool {
        self.segments
            .iter()
            .tuple_combinations()
            .all(|(a, b)| !a.linked(b))
    }

    /// Number of segments containing `[i, j]`; this is the rank of the
    /// composite map from degree `i` to degree `j` in the quiver picture.
    pub fn rank(&self, i: i64, j: i64) -> usize {
        self.segments
            .iter()
            .filter(|s| s.start <= i && j <= s.end)
            .count()
    }

    pub fn shifted(&self, by: i64) -> Multisegment {
        Multisegment::new(
            self.segments
                .iter()
                .map(|s| Segment {
                    start: s.start + by,
                    end: s.end + by,
                })
                .collect(),
        )
    }
}

impl fmt::Display for Multisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.segments.is_empty() {
            write!(f, "-")
        } else {
            write!(f, "{}", self.segments.iter().join("+"))
        }
    }
}

impl FromStr for Multisegment {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t == "-" {
            return Ok(Multisegment::default());
        }
        let segments = t
            .split('+')
            .map(str::parse::<Segment>)
            .collect::<Result<Vec<_>>>()
            .map_err(|e| match e {
                Error::Parse { token, reason } => Error::parse(t, format!("{reason} in `{token}`")),
                other => other,
            })?;
        Ok(Multisegment::new(segments))
    }
}

/// Every multisegment reachable from `a` by one elementary operation:
/// a linked pair is replaced by its union and (when nonempty) intersection.
pub fn elementary_ops(a: &Multisegment) -> BTreeSet<Multisegment> {
    let segs = a.segments();
    let mut out = BTreeSet::new();
    for (i, j) in (0..segs.len()).tuple_combinations() {
        if !segs[i].linked(&segs[j]) {
            continue;
        }
        let mut next: Vec<Segment> = segs
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i && k != j)
            .map(|(_, s)| *s)
            .collect();
        next.push(segs[i].union(&segs[j]));
        next.extend(segs[i].intersection(&segs[j]));
        out.insert(Multisegment::new(next));
    }
    out
}

fn check_same_support(b: &Multisegment, a: &Multisegment) -> Result<()> {
    if b.support() != a.support() {
        Err(Error::DifferentSupport)
    } else {
        Ok(())
    }
}

/// `b ≤ a`: `b` is reachable from `a` by elementary operations.
pub fn leq(b: &Multisegment, a: &Multisegment) -> Result<bool> {
    check_same_support(b, a)?;
    let target = b.energy();
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::from([a.clone()]);
    while let Some(c) = queue.pop_front() {
        if &c == b {
            return Ok(true);
        }
        for d in elementary_ops(&c) {
            // energy only grows along operations
            if d.energy() <= target && seen.insert(d.clone()) {
                queue.push_back(d);
            }
        }
    }
    Ok(false)
}

/// The interval `{b : b ≤ a}` with one edge per elementary operation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Poset {
    /// Sorted by increasing energy, then canonical order; `nodes[0]` is the
    /// maximum and every edge goes from a lower to a higher index.
    pub nodes: Vec<Multisegment>,
    pub edges: Vec<(usize, usize)>,
}

impl Poset {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn index_of(&self, m: &Multisegment) -> Option<usize> {
        self.nodes.iter().position(|x| x == m)
    }

    /// Nodes without outgoing edges.
    pub fn minimal(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| !self.edges.iter().any(|&(from, _)| from == i))
            .collect()
    }
}

/// Materializes every `b ≤ a` by breadth-first search over elementary
/// operations, refusing supports with more than `cap` points.
pub fn poset(a: &Multisegment, cap: usize) -> Result<Poset> {
    let points = a.degree();
    if points > cap {
        return Err(Error::PosetCap { points, cap });
    }
    let mut seen: BTreeSet<Multisegment> = BTreeSet::from([a.clone()]);
    let mut succ: Vec<(Multisegment, Multisegment)> = Vec::new();
    let mut queue = VecDeque::from([a.clone()]);
    while let Some(c) = queue.pop_front() {
        for d in elementary_ops(&c) {
            debug_assert!(d.energy() > c.energy());
            succ.push((c.clone(), d.clone()));
            if seen.insert(d.clone()) {
                queue.push_back(d);
            }
        }
    }
    let mut nodes: Vec<Multisegment> = seen.into_iter().collect();
    nodes.sort_by(|x, y| x.energy().cmp(&y.energy()).then_with(|| y.cmp(x)));
    let index: HashMap<&Multisegment, usize> = nodes.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut edges: Vec<(usize, usize)> = succ.iter().map(|(c, d)| (index[c], index[d])).collect();
    edges.sort_unstable();
    edges.dedup();
    Ok(Poset { nodes, edges })
}

/// `P(a)`: the conjugate of the partition of segment lengths.
pub fn partition_p(a: &Multisegment) -> Result<Partition> {
    if a.is_empty() {
        return Err(Error::EmptyMultisegment);
    }
    Ok(Partition::from_lengths(&a.lengths()).conjugate())
}

/// Permutation attached to the orbit of `a` in the space of graded nilpotent
/// representations with the same support.
///
/// The support `lo..=hi` gives vertices `V_k` with `dim V_k` equal to the
/// multiplicity of `k`; a segment contributes one basis vector at each of its
/// points, and the arrow `V_k → V_{k+1}` moves it one step along the segment.
/// The block matrix with block rows `lo..=hi`, block columns `hi..=lo`, an
/// identity in block `(k, k)` and the arrow in block `(k, k+1)` has
/// north-west block ranks `Σ_{k=j}^{i} dim V_k + rank(V_{j-1} → V_{i+1})`,
/// so its orbit under block lower × block upper triangular matrices records
/// the isomorphism class of the representation. That orbit is a union of
/// `B₋ × B₊` orbits, and its dense one carries the minimal-length
/// permutation `u` in the corresponding double coset. The returned element is
/// `w₀·u` (rows reversed), whose Schubert variety has the same singularities
/// as the orbit closure of `a`, so `m(b;a) = P_{σ(a),σ(b)}(1)`.
pub fn kl_encoding(a: &Multisegment) -> WeylElement {
    let support = a.support();
    let (Some((&lo, _)), Some((&hi, _))) = (support.first_key_value(), support.last_key_value()) else {
        return WeylElement::identity(0);
    };
    let dim = |k: i64| support.get(&k).copied().unwrap_or(0);
    let verts: Vec<i64> = (lo..=hi).collect();
    let mut row_off = HashMap::new();
    let mut acc = 0;
    for &k in &verts {
        row_off.insert(k, acc);
        acc += dim(k);
    }
    let d = acc;
    let mut col_off = HashMap::new();
    let mut acc = 0;
    for &k in verts.iter().rev() {
        col_off.insert(k, acc);
        acc += dim(k);
    }
    // local index of segment `idx` at vertex k
    let mut local: HashMap<(usize, i64), usize> = HashMap::new();
    let mut fill = HashMap::new();
    for (idx, seg) in a.segments().iter().enumerate() {
        for k in seg.start..=seg.end {
            let slot = fill.entry(k).or_insert(0usize);
            local.insert((idx, k), *slot);
            *slot += 1;
        }
    }
    let mut z = vec![vec![0u64; d]; d];
    for (idx, seg) in a.segments().iter().enumerate() {
        for k in seg.start..=seg.end {
            let i = local[&(idx, k)];
            z[row_off[&k] + i][col_off[&k] + i] = 1;
            if k < seg.end {
                let j = local[&(idx, k + 1)];
                z[row_off[&k] + i][col_off[&(k + 1)] + j] = 1;
            }
        }
    }
    let u = orbit_permutation(z);

    // block counts of u, then the minimal representative of its double coset
    let row_block: Vec<usize> = verts
        .iter()
        .enumerate()
        .flat_map(|(b, &k)| std::iter::repeat_n(b, dim(k)))
        .collect();
    let col_block: Vec<usize> = verts
        .iter()
        .rev()
        .enumerate()
        .flat_map(|(b, &k)| std::iter::repeat_n(b, dim(k)))
        .collect();
    let nb = verts.len();
    let mut counts = vec![vec![0usize; nb]; nb];
    for (p, &c) in u.iter().enumerate() {
        counts[row_block[p]][col_block[c]] += 1;
    }
    let mut col_start = vec![0usize; nb];
    for b in 1..nb {
        col_start[b] = col_start[b - 1] + dim(verts[nb - b]);
    }
    let mut next_col = col_start.clone();
    let mut minimal = vec![0u8; d];
    let mut p = 0;
    for rb in 0..nb {
        for cb in 0..nb {
            for _ in 0..counts[rb][cb] {
                minimal[p] = next_col[cb] as u8;
                next_col[cb] += 1;
                p += 1;
            }
        }
    }
    minimal.reverse();
    WeylElement::from_zero_based(minimal)
}

const PRIME: u64 = (1 << 61) - 1;

fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn inv_mod(a: u64) -> u64 {
    let mut result = 1;
    let mut base = a;
    let mut e = PRIME - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = mul_mod(result, base);
        }
        base = mul_mod(base, base);
        e >>= 1;
    }
    result
}

/// Reduces an invertible 0/1 matrix by adding multiples of upper rows to
/// lower rows and of left columns to right columns, and returns the pivot
/// permutation `row ↦ column`. Arithmetic is modulo a 61-bit prime; minors
/// of 0/1 matrices of the sizes admitted by the poset cap are far below it,
/// so ranks agree with those over ℚ.
fn orbit_permutation(mut z: Vec<Vec<u64>>) -> Vec<usize> {
    let d = z.len();
    let mut perm = vec![0; d];
    for r in 0..d {
        let c = (0..d).find(|&c| z[r][c] != 0).expect("matrix is invertible");
        perm[r] = c;
        let inv = inv_mod(z[r][c]);
        for r2 in r + 1..d {
            if z[r2][c] != 0 {
                let f = mul_mod(z[r2][c], inv);
                for c2 in c..d {
                    let sub = mul_mod(f, z[r][c2]);
                    z[r2][c2] = (z[r2][c2] + PRIME - sub) % PRIME;
                }
            }
        }
        for c2 in c + 1..d {
            z[r][c2] = 0;
        }
    }
    perm
}

/// Decomposition numbers `m(b;a)`, the multiplicity of `⟨b⟩` in
/// `π(a) = ⟨Δ_1⟩ × ⋯ × ⟨Δ_r⟩`, read off Kazhdan–Lusztig polynomials at
/// `q = 1` through [`kl_encoding`]. KL columns are cached per rank.
#[derive(Debug, Default)]
pub struct DecompositionNumbers {
    tables: HashMap<usize, KlTable>,
    encodings: HashMap<Multisegment, WeylElement>,
}

impl DecompositionNumbers {
    pub fn new() -> Self {
        Self::default()
    }

    fn encode(&mut self, a: &Multisegment) -> WeylElement {
        // the encoding only sees differences, so cache on the shifted form
        let lo = a.segments().iter().map(Segment::start).min().unwrap_or(0);
        let key = a.shifted(-lo);
        self.encodings
            .entry(key)
            .or_insert_with_key(kl_encoding)
            .clone()
    }

    pub fn m(&mut self, b: &Multisegment, a: &Multisegment) -> Result<u64> {
        check_same_support(b, a)?;
        let x = self.encode(a);
        let w = self.encode(b);
        let table = self
            .tables
            .entry(x.rank())
            .or_insert_with(|| KlTable::new(x.rank()));
        let value = table.polynomial(&x, &w)?.eval(1);
        u64::try_from(value).map_err(|_| Error::BackendInconsistency)
    }
}

/// One-shot `m(b;a)`.
pub fn decomposition_number(b: &Multisegment, a: &Multisegment) -> Result<u64> {
    DecompositionNumbers::new().m(b, a)
}

/// The Zelevinsky involution on multisegments, by the Mœglin–Waldspurger
/// algorithm.
///
/// Repeatedly: start from the largest end `e` and the shortest segment
/// ending there, then walk down one end at a time, each step taking the
/// shortest segment ending at the next lower point whose start lies strictly
/// below the previous start. If the chain reaches ends `e, e-1, …, e-t+1`,
/// the dual gains `[e-t+1, e]` and every chain segment loses its last point.
pub fn zelevinsky_dual(a: &Multisegment) -> Multisegment {
    let mut rest: Vec<Segment> = a.segments().to_vec();
    let mut dual = Vec::new();
    while !rest.is_empty() {
        let e = rest.iter().map(Segment::end).max().expect("nonempty");
        let mut chain: Vec<usize> = Vec::new();
        let mut end = e;
        let mut bound = i64::MAX;
        loop {
            let pick = rest
                .iter()
                .enumerate()
                .filter(|(i, s)| s.end == end && s.start < bound && !chain.contains(i))
                .max_by_key(|(_, s)| s.start)
                .map(|(i, _)| i);
            match pick {
                Some(i) => {
                    bound = rest[i].start;
                    chain.push(i);
                    end -= 1;
                }
                None => break,
            }
        }
        dual.push(Segment {
            start: e - chain.len() as i64 + 1,
            end: e,
        });
        let mut next = Vec::with_capacity(rest.len());
        for (i, s) in rest.iter().enumerate() {
            if chain.contains(&i) {
                if s.start < s.end {
                    next.push(Segment {
                        start: s.start,
                        end: s.end - 1,
                    });
                }
            } else {
                next.push(*s);
            }
        }
        rest = next;
    }
    Multisegment::new(dual)
}
