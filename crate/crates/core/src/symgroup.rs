//! Characters of the symmetric group, kept independent of the Pieri and
//! Kostka code so that it can serve as an oracle for it.
//!
//! Irreducible characters come from the Murnaghan–Nakayama rule on beta-sets
//! (rim hooks of length `r` are beads moved down by `r`), induced characters
//! from Young subgroups from the induced-character formula written in terms
//! of centralizer orders.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{Partition, PartitionVector};

/// A class function on `S_n`, one value per cycle type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    n: usize,
    values: BTreeMap<Partition, i64>,
}

/// The one-dimensional characters of a Young subgroup factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Factor {
    Trivial,
    Sign,
}

impl ClassFunction {
    /// Builds a class function by evaluating `f` on every cycle type of `S_n`.
    pub fn from_fn(n: usize, mut f: impl FnMut(&Partition) -> i64) -> Self {
        let values = Partition::all(n)
            .into_iter()
            .map(|mu| {
                let v = f(&mu);
                (mu, v)
            })
            .collect();
        ClassFunction { n, values }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn value(&self, cycle_type: &Partition) -> i64 {
        self.values.get(cycle_type).copied().unwrap_or(0)
    }

    pub fn values(&self) -> impl Iterator<Item = (&Partition, i64)> {
        self.values.iter().rev().map(|(p, &v)| (p, v))
    }

    /// Value at the identity class, i.e. the degree.
    pub fn degree(&self) -> i64 {
        self.value(&Partition::column(self.n))
    }
}

pub fn factorial(n: usize) -> i128 {
    (1..=n as i128).product()
}

/// Centralizer order `z_μ = Π_k k^{m_k} m_k!`.
pub fn centralizer_order(cycle_type: &Partition) -> i128 {
    cycle_type
        .multiplicities()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, &m)| (k as i128).pow(m as u32) * factorial(m))
        .product()
}

pub fn class_size(cycle_type: &Partition) -> i128 {
    factorial(cycle_type.size()) / centralizer_order(cycle_type)
}

/// Number of standard tableaux of shape `λ`, by the hook length formula.
pub fn standard_tableaux(shape: &Partition) -> i128 {
    let conj = shape.conjugate();
    let mut hooks: i128 = 1;
    for (i, &row) in shape.parts().iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = conj.part(j) - i - 1;
            hooks *= (arm + leg + 1) as i128;
        }
    }
    factorial(shape.size()) / hooks
}

/// Beta-set of `λ` with exactly `len(λ)` beads.
fn beta_set(shape: &[usize]) -> Vec<usize> {
    let k = shape.len();
    shape.iter().enumerate().map(|(i, &p)| p + k - 1 - i).collect()
}

fn shape_from_beta(beta: &[usize]) -> Vec<usize> {
    let mut b = beta.to_vec();
    b.sort_unstable_by(|x, y| y.cmp(x));
    let k = b.len();
    let mut parts: Vec<usize> = b.iter().enumerate().map(|(i, &x)| x - (k - 1 - i)).collect();
    while parts.last() == Some(&0) {
        parts.pop();
    }
    parts
}

type MnMemo = HashMap<(Vec<usize>, Vec<usize>), i64>;

/// `χ^λ(μ)` for `λ` given by `shape` and `μ` given by `cycles`; the first
/// cycle is peeled off as a rim hook.
fn murnaghan_nakayama(shape: &[usize], cycles: &[usize], memo: &mut MnMemo) -> i64 {
    let Some((&r, rest)) = cycles.split_first() else {
        return i64::from(shape.is_empty());
    };
    let key = (shape.to_vec(), cycles.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let beta = beta_set(shape);
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let height = beta.iter().filter(|&&x| x > b - r && x < b).count();
        let mut moved = beta.clone();
        moved[idx] = b - r;
        let inner = shape_from_beta(&moved);
        let sign = if height % 2 == 0 { 1 } else { -1 };
        total += sign * murnaghan_nakayama(&inner, rest, memo);
    }
    memo.insert(key, total);
    total
}

/// The irreducible character `χ^λ` of `S_{|λ|}`.
pub fn irreducible_character(shape: &Partition) -> ClassFunction {
    let mut memo = MnMemo::new();
    ClassFunction::from_fn(shape.size(), |mu| {
        murnaghan_nakayama(shape.parts(), mu.parts(), &mut memo)
    })
}

/// Character table of `S_n`: rows indexed by irreducibles, columns by cycle
/// types, both in descending lexicographic order.
#[derive(Clone, Debug, Serialize)]
pub struct CharacterTable {
    pub n: usize,
    pub classes: Vec<Partition>,
    pub class_sizes: Vec<i128>,
    pub irreducibles: Vec<Partition>,
    pub values: Vec<Vec<i64>>,
}

pub fn character_table(n: usize) -> CharacterTable {
    let classes = Partition::all(n);
    let mut memo = MnMemo::new();
    let values = classes
        .iter()
        .map(|lam| {
            classes
                .iter()
                .map(|mu| murnaghan_nakayama(lam.parts(), mu.parts(), &mut memo))
                .collect()
        })
        .collect();
    CharacterTable {
        n,
        class_sizes: classes.iter().map(class_size).collect(),
        irreducibles: classes.clone(),
        classes,
        values,
    }
}

/// Cycle-type splittings `(ν^(1), …, ν^(r))` with `ν^(i) ⊢ lengths[i]`
/// whose union is `target`.
fn splittings(target: &Partition, lengths: &[usize]) -> Vec<Vec<Partition>> {
    fn go(
        remaining: &[usize],
        lengths: &[usize],
        acc: &mut Vec<Partition>,
        out: &mut Vec<Vec<Partition>>,
    ) {
        let Some((&l, rest)) = lengths.split_first() else {
            if remaining.is_empty() {
                out.push(acc.clone());
            }
            return;
        };
        // choose a sub-multiset of `remaining` summing to l, as a partition
        let mut choices = Vec::new();
        pick(remaining, 0, l, &mut Vec::new(), &mut choices);
        for nu in choices {
            let mut left = remaining.to_vec();
            for p in &nu {
                let pos = left.iter().position(|x| x == p).expect("part present");
                left.remove(pos);
            }
            acc.push(Partition::from_lengths(&nu));
            go(&left, rest, acc, out);
            acc.pop();
        }
    }
    // distinct sub-multisets of a decreasing list, taken in decreasing order
    fn pick(pool: &[usize], start: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        let mut prev = None;
        for i in start..pool.len() {
            if prev == Some(pool[i]) || pool[i] > left {
                continue;
            }
            prev = Some(pool[i]);
            cur.push(pool[i]);
            pick(pool, i + 1, left - pool[i], cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(target.parts(), lengths, &mut Vec::new(), &mut out);
    out
}

fn multinomial(total: usize, parts: &[usize]) -> i128 {
    let mut out = factorial(total);
    for &p in parts {
        out /= factorial(p);
    }
    out
}

/// Character of `Ind_{S_{l_1} × ⋯ × S_{l_r}}^{S_n}(χ_1 ⊗ ⋯ ⊗ χ_r)` where each
/// `χ_i` is trivial or sign.
///
/// At a class `μ` the value is `z_μ Σ Π_i χ_i(ν^(i)) / z_{ν^(i)}`, summed over
/// the ways of distributing the cycles of `μ` among the factors. The ratio
/// `z_μ / Π z_{ν^(i)}` is a product of multinomials in the cycle
/// multiplicities, so everything stays integral.
pub fn induce_from_young(lengths: &[usize], factors: &[Factor]) -> ClassFunction {
    assert_eq!(lengths.len(), factors.len(), "one factor per block");
    let n = lengths.iter().sum();
    ClassFunction::from_fn(n, |mu| {
        let mut total: i128 = 0;
        for split in splittings(mu, lengths) {
            let mut sign = 1;
            for ((nu, &l), f) in split.iter().zip(lengths).zip(factors) {
                if *f == Factor::Sign && (l - nu.len()) % 2 == 1 {
                    sign = -sign;
                }
            }
            let mu_mult = mu.multiplicities();
            let mut weight: i128 = 1;
            for (k, &m) in mu_mult.iter().enumerate().skip(1) {
                let per_factor: Vec<usize> = split
                    .iter()
                    .map(|nu| nu.multiplicities().get(k).copied().unwrap_or(0))
                    .collect();
                weight *= multinomial(m, &per_factor);
            }
            total += sign * weight;
        }
        total as i64
    })
}

/// Multiplicities `⟨χ, χ^λ⟩` of every irreducible in `χ`.
pub fn decompose(chi: &ClassFunction) -> Result<PartitionVector> {
    let n = chi.n();
    let table = character_table(n);
    let order = factorial(n);
    let mut out = PartitionVector::zero(n);
    for (row, lam) in table.irreducibles.iter().enumerate() {
        let mut acc: i128 = 0;
        for (col, mu) in table.classes.iter().enumerate() {
            acc += table.class_sizes[col] * chi.value(mu) as i128 * table.values[row][col] as i128;
        }
        if acc % order != 0 {
            return Err(Error::NotVirtualCharacter);
        }
        out.add(lam.clone(), (acc / order) as i64);
    }
    // the table is square, so an exact inner product decomposition must
    // reconstruct χ; anything else means χ was not a class function on S_n
    for (col, mu) in table.classes.iter().enumerate() {
        let rebuilt: i64 = table
            .irreducibles
            .iter()
            .enumerate()
            .map(|(row, lam)| out.get(lam) * table.values[row][col])
            .sum();
        if rebuilt != chi.value(mu) {
            return Err(Error::NotVirtualCharacter);
        }
    }
    Ok(out)
}
