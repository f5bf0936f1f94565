//! Integer partitions, dominance order and Kostka numbers.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Trailing zeros are stripped on construction so that every partition has a
/// single canonical representation; the empty partition is the unique
/// partition of 0.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
    n: usize,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotPartition(parts));
        }
        let n = parts.iter().sum();
        Ok(Partition { parts, n })
    }

    /// Sorts arbitrary positive lengths into a partition.
    pub fn from_lengths(lengths: &[usize]) -> Self {
        let mut parts: Vec<usize> = lengths.iter().copied().filter(|&l| l > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let n = parts.iter().sum();
        Partition { parts, n }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// The single-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        Partition::from_lengths(&[n])
    }

    /// The single-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition::from_lengths(&vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts, n: self.n }
    }

    /// `self ⊵ other`: every prefix sum of `self` is at least the matching
    /// prefix sum of `other`.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::IncomparableSizes(self.n, other.n));
        }
        let rows = self.len().max(other.len());
        let mut lhs = 0;
        let mut rhs = 0;
        for i in 0..rows {
            lhs += self.part(i);
            rhs += other.part(i);
            if lhs < rhs {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Multiplicity of each part size, indexed by size (index 0 unused).
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.part(0) + 1];
        for &p in &self.parts {
            m[p] += 1;
        }
        m
    }

    /// All partitions of `n` in descending lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition::from_lengths(prefix));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                prefix.push(p);
                go(rest - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            write!(f, "-")
        } else {
            write!(f, "{}", self.parts.iter().join(","))
        }
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                let t = t.trim();
                match t.parse::<usize>() {
                    Ok(v) if v > 0 => Ok(v),
                    _ => Err(Error::parse(s, format!("`{t}` is not a positive integer"))),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts).map_err(|_| Error::parse(s, "parts must be weakly decreasing"))
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// A virtual sum `Σ c_μ π_μ` over partitions of a fixed `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionVector {
    n: usize,
    entries: BTreeMap<Partition, i64>,
}

impl PartitionVector {
    pub fn zero(n: usize) -> Self {
        PartitionVector {
            n,
            entries: BTreeMap::new(),
        }
    }

    pub fn singleton(p: Partition, coeff: i64) -> Self {
        let mut v = PartitionVector::zero(p.size());
        v.add(p, coeff);
        v
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Adds `coeff` to the entry at `p`, dropping the key if it cancels.
    ///
    /// Panics if `p` is not a partition of `n`.
    pub fn add(&mut self, p: Partition, coeff: i64) {
        assert_eq!(p.size(), self.n, "partition {p} does not have size {}", self.n);
        if coeff == 0 {
            return;
        }
        match self.entries.entry(p) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if *e.get() == 0 {
                    e.remove();
                }
            }
        }
    }

    pub fn get(&self, p: &Partition) -> i64 {
        self.entries.get(p).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Entries in descending lexicographic order, which refines dominance.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, i64)> {
        self.entries.iter().rev().map(|(p, &c)| (p, c))
    }

    pub fn support(&self) -> impl Iterator<Item = &Partition> {
        self.entries.keys().rev()
    }

    pub fn scaled(&self, k: i64) -> PartitionVector {
        let mut out = PartitionVector::zero(self.n);
        for (p, c) in self.iter() {
            out.add(p.clone(), c * k);
        }
        out
    }

    pub fn add_vector(&mut self, other: &PartitionVector) {
        for (p, c) in other.iter() {
            self.add(p.clone(), c);
        }
    }
}

#[derive(Serialize, Deserialize)]
struct VectorEntry {
    partition: Partition,
    coeff: i64,
}

#[derive(Serialize, Deserialize)]
struct VectorForm {
    n: usize,
    entries: Vec<VectorEntry>,
}

impl Serialize for PartitionVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        VectorForm {
            n: self.n,
            entries: self
                .iter()
                .map(|(p, c)| VectorEntry {
                    partition: p.clone(),
                    coeff: c,
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PartitionVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let form = VectorForm::deserialize(d)?;
        let mut out = PartitionVector::zero(form.n);
        for e in form.entries {
            if e.partition.size() != form.n {
                return Err(serde::de::Error::custom(format!(
                    "partition {} does not have size {}",
                    e.partition, form.n
                )));
            }
            out.add(e.partition, e.coeff);
        }
        Ok(out)
    }
}

/// Number of semistandard tableaux of the given shape and content.
///
/// Entries equal to the largest label occupy a horizontal strip; peeling
/// strips off one label at a time enumerates every tableau exactly once.
pub fn kostka_ssyt(shape: &Partition, content: &Partition) -> Result<u64> {
    if shape.size() != content.size() {
        return Err(Error::IncomparableSizes(shape.size(), content.size()));
    }
    let mut memo = HashMap::new();
    Ok(count_ssyt(shape.parts(), content.parts(), &mut memo))
}

fn count_ssyt(
    shape: &[usize],
    content: &[usize],
    memo: &mut HashMap<(Vec<usize>, usize), u64>,
) -> u64 {
    let Some((&last, rest)) = content.split_last() else {
        return u64::from(shape.iter().all(|&p| p == 0));
    };
    // Column strictness puts the labels 1..=k in the first k rows.
    if shape.iter().filter(|&&p| p > 0).count() > content.len() {
        return 0;
    }
    let key = (shape.to_vec(), content.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut total = 0;
    for inner in horizontal_strip_removals(shape, last) {
        total += count_ssyt(&inner, rest, memo);
    }
    memo.insert(key, total);
    total
}

/// Shapes `ν ⊆ λ` such that `λ/ν` is a horizontal strip of `size` boxes.
fn horizontal_strip_removals(shape: &[usize], size: usize) -> Vec<Vec<usize>> {
    fn go(shape: &[usize], row: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if row == shape.len() {
            if left == 0 {
                let mut v = cur.clone();
                while v.last() == Some(&0) {
                    v.pop();
                }
                out.push(v);
            }
            return;
        }
        let below = shape.get(row + 1).copied().unwrap_or(0);
        let max_take = (shape[row] - below).min(left);
        for take in 0..=max_take {
            cur.push(shape[row] - take);
            go(shape, row + 1, left - take, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(shape, 0, size, &mut Vec::new(), &mut out);
    out
}

/// Every partition obtained from `shape` by adding a vertical strip of `l`
/// boxes, in the order produced by choosing the receiving rows top to bottom.
pub fn vertical_strips(shape: &Partition, l: usize) -> Vec<Partition> {
    let rows = shape.len() + l;
    let mut out = Vec::new();
    for chosen in (0..rows).combinations(l) {
        let mut parts: Vec<usize> = (0..rows).map(|i| shape.part(i)).collect();
        for &r in &chosen {
            parts[r] += 1;
        }
        if let Ok(p) = Partition::new(parts) {
            out.push(p);
        }
    }
    out
}

/// One application of the sign Pieri rule, extended linearly.
pub fn pieri_sign_step(acc: &PartitionVector, l: usize) -> PartitionVector {
    let mut out = PartitionVector::zero(acc.n() + l);
    for (shape, c) in acc.iter() {
        for nu in vertical_strips(shape, l) {
            out.add(nu, c);
        }
    }
    out
}

/// Multiplicities of `ρ_τ` in the `S_n` representation induced from the sign
/// characters of `S_{l_1} × ⋯ × S_{l_r}`, by folding the sign Pieri rule.
pub fn sign_induction_multiplicities(lengths: &[usize]) -> PartitionVector {
    lengths
        .iter()
        .fold(PartitionVector::singleton(Partition::empty(), 1), |acc, &l| {
            pieri_sign_step(&acc, l)
        })
}

/// The same multiplicities read off Kostka numbers: `τ ↦ K_{τ', lengths}`.
pub fn kostka_sign_multiplicities(lengths: &[usize]) -> PartitionVector {
    let content = Partition::from_lengths(lengths);
    let mut out = PartitionVector::zero(content.size());
    for tau in Partition::all(content.size()) {
        let k = kostka_ssyt(&tau.conjugate(), &content).expect("sizes agree");
        out.add(tau, k as i64);
    }
    out
}
