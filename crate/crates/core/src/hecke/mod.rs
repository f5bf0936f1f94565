//! Type-A Coxeter combinatorics and the Iwahori–Hecke algebra.
//!
//! Permutations are stored in one-line notation and composed as functions,
//! `(u·v)(k) = u(v(k))`. Simple reflections are indexed from 1, so `s_i`
//! exchanges `i` and `i+1`. Right multiplication by `s_i` swaps the entries
//! in positions `i, i+1`; left multiplication swaps the values `i, i+1`.

mod algebra;
mod induced;
mod kl;

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use algebra::{hecke_multiply, HeckeElement};
pub use induced::{block_lengths, InducedModule, InducedModuleElement};
pub use kl::{kl_polynomial, KlTable};

/// An element of the symmetric group `S_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct WeylElement {
    perm: Vec<u8>,
}

impl WeylElement {
    pub fn identity(n: usize) -> Self {
        WeylElement {
            perm: (0..n as u8).collect(),
        }
    }

    /// The simple reflection `s_i`, `1 ≤ i < n`.
    pub fn simple(n: usize, i: usize) -> Result<Self> {
        check_simple(n, i)?;
        let mut w = WeylElement::identity(n);
        w.perm.swap(i - 1, i);
        Ok(w)
    }

    /// The longest element `w_0 = (n, n-1, …, 1)`.
    pub fn longest(n: usize) -> Self {
        WeylElement {
            perm: (0..n as u8).rev().collect(),
        }
    }

    /// From 1-based one-line notation.
    pub fn from_one_line(values: &[usize]) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n];
        for &v in values {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::parse(
                    values.iter().join(","),
                    format!("not a permutation of 1..{n}"),
                ));
            }
            seen[v - 1] = true;
        }
        Ok(WeylElement {
            perm: values.iter().map(|&v| (v - 1) as u8).collect(),
        })
    }

    /// From 0-based one-line notation; panics if it is not a permutation.
    pub(crate) fn from_zero_based(perm: Vec<u8>) -> Self {
        debug_assert!({
            let mut s = perm.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &v)| i == v as usize)
        });
        WeylElement { perm }
    }

    /// Builds `s_{i_1} s_{i_2} ⋯ s_{i_k}`.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Self> {
        let mut w = WeylElement::identity(n);
        for &i in word {
            check_simple(n, i)?;
            w = w.right_mul_simple(i);
        }
        Ok(w)
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    /// 1-based one-line notation.
    pub fn one_line(&self) -> Vec<usize> {
        self.perm.iter().map(|&v| v as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    /// Inversion count.
    pub fn length(&self) -> usize {
        let p = &self.perm;
        (0..p.len())
            .map(|i| p[i + 1..].iter().filter(|&&v| v < p[i]).count())
            .sum()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.perm.len()];
        for (i, &v) in self.perm.iter().enumerate() {
            inv[v as usize] = i as u8;
        }
        WeylElement { perm: inv }
    }

    /// `self · other`, i.e. `k ↦ self(other(k))`.
    pub fn compose(&self, other: &WeylElement) -> Result<Self> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch(self.rank(), other.rank()));
        }
        Ok(WeylElement {
            perm: other.perm.iter().map(|&k| self.perm[k as usize]).collect(),
        })
    }

    /// `s_i · self`: swaps the values `i` and `i+1`.
    pub fn left_mul_simple(&self, i: usize) -> Self {
        let (a, b) = ((i - 1) as u8, i as u8);
        WeylElement {
            perm: self
                .perm
                .iter()
                .map(|&v| if v == a { b } else if v == b { a } else { v })
                .collect(),
        }
    }

    /// `self · s_i`: swaps the entries in positions `i` and `i+1`.
    pub fn right_mul_simple(&self, i: usize) -> Self {
        let mut perm = self.perm.clone();
        perm.swap(i - 1, i);
        WeylElement { perm }
    }

    /// `ℓ(s_i w) < ℓ(w)`: the value `i+1` appears before `i`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let pos = |v: u8| self.perm.iter().position(|&x| x == v).expect("value present");
        pos(i as u8) < pos((i - 1) as u8)
    }

    /// `ℓ(w s_i) < ℓ(w)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.perm[i - 1] > self.perm[i]
    }

    pub fn first_left_descent(&self) -> Option<usize> {
        (1..self.rank()).find(|&i| self.has_left_descent(i))
    }

    /// A reduced word chosen by repeatedly stripping the leftmost (smallest
    /// index) left descent, so `self = s_{w[0]} s_{w[1]} ⋯`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length());
        let mut w = self.clone();
        while let Some(i) = w.first_left_descent() {
            word.push(i);
            w = w.left_mul_simple(i);
        }
        word
    }

    /// All of `S_n` in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<WeylElement> {
        (0..n as u8)
            .permutations(n)
            .map(|perm| WeylElement { perm })
            .collect()
    }

    /// Whether `self` lies in the parabolic subgroup `W_J`.
    pub fn in_parabolic(&self, j: &[usize]) -> bool {
        self.reduced_word().iter().all(|i| j.contains(i))
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.one_line().iter().join(","))
    }
}

impl FromStr for WeylElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let values = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::parse(s, format!("`{}` is not an integer", t.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        WeylElement::from_one_line(&values)
    }
}

impl TryFrom<Vec<usize>> for WeylElement {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        WeylElement::from_one_line(&v)
    }
}

impl From<WeylElement> for Vec<usize> {
    fn from(w: WeylElement) -> Self {
        w.one_line()
    }
}

pub(crate) fn check_simple(n: usize, i: usize) -> Result<()> {
    if i == 0 || i >= n {
        Err(Error::SimpleIndexOutOfRange { index: i, n })
    } else {
        Ok(())
    }
}

fn check_subset(n: usize, j: &[usize]) -> Result<()> {
    j.iter().try_for_each(|&i| check_simple(n, i))
}

/// Bruhat order by the subword property: walking a reduced word of `w` from
/// the left and stripping each letter that is a left descent of `x` reduces
/// `x` to the identity exactly when `x` is a subword product.
pub fn bruhat_leq(x: &WeylElement, w: &WeylElement) -> Result<bool> {
    if x.rank() != w.rank() {
        return Err(Error::RankMismatch(x.rank(), w.rank()));
    }
    if x.length() > w.length() {
        return Ok(false);
    }
    let mut y = x.clone();
    for i in w.reduced_word() {
        if y.has_left_descent(i) {
            y = y.left_mul_simple(i);
        }
    }
    Ok(y.is_identity())
}

/// Membership in `Y_J`: `ℓ(xs) > ℓ(x)` for every `s ∈ J`.
pub fn is_distinguished(x: &WeylElement, j: &[usize]) -> bool {
    j.iter().all(|&i| !x.has_right_descent(i))
}

/// The distinguished left coset representatives `Y_J` of `W_J` in `S_n`,
/// sorted by length and then one-line notation.
pub fn distinguished_reps(n: usize, j: &[usize]) -> Result<Vec<WeylElement>> {
    check_subset(n, j)?;
    let mut reps: Vec<_> = WeylElement::all(n)
        .into_iter()
        .filter(|x| is_distinguished(x, j))
        .collect();
    reps.sort_by_cached_key(|x| (x.length(), x.clone()));
    Ok(reps)
}

/// Maximal runs of consecutive positions joined by generators in `J`.
pub fn blocks(n: usize, j: &[usize]) -> Vec<std::ops::Range<usize>> {
    let mut out = Vec::new();
    let mut start = 0;
    for pos in 1..=n {
        if pos == n || !j.contains(&pos) {
            out.push(start..pos);
            start = pos;
        }
    }
    out
}

/// The factorization `w = x·v` with `x ∈ Y_J` and `v ∈ W_J`.
///
/// `x` is obtained by sorting the entries of `w` inside each block of
/// positions, which is the unique minimal element of `w W_J`.
pub fn parabolic_factorization(w: &WeylElement, j: &[usize]) -> Result<(WeylElement, WeylElement)> {
    check_subset(w.rank(), j)?;
    let mut perm = w.perm.clone();
    for b in blocks(w.rank(), j) {
        perm[b].sort_unstable();
    }
    let x = WeylElement { perm };
    let v = x.inverse().compose(w)?;
    Ok((x, v))
}

/// Outcome of left-multiplying a distinguished representative by `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DeodharCase {
    /// `sx ∈ Y_J` and `ℓ(sx) = ℓ(x) + 1`.
    Up(WeylElement),
    /// `sx ∈ Y_J` and `ℓ(sx) = ℓ(x) - 1`.
    Down(WeylElement),
    /// `sx = x·s_u` with `u ∈ J`.
    Fold(usize),
}

pub fn deodhar_case(x: &WeylElement, s: usize, j: &[usize]) -> Result<DeodharCase> {
    check_simple(x.rank(), s)?;
    check_subset(x.rank(), j)?;
    if !is_distinguished(x, j) {
        return Err(Error::NotDistinguished(x.to_string()));
    }
    let sx = x.left_mul_simple(s);
    if is_distinguished(&sx, j) {
        return Ok(if x.has_left_descent(s) {
            DeodharCase::Down(sx)
        } else {
            DeodharCase::Up(sx)
        });
    }
    // x⁻¹ s x is the transposition of the positions holding s and s+1
    let pos = |v: usize| x.perm.iter().position(|&p| p as usize == v).expect("value present");
    let (a, b) = (pos(s - 1), pos(s));
    let u = a.min(b) + 1;
    debug_assert_eq!(a.abs_diff(b), 1);
    debug_assert!(j.contains(&u));
    Ok(DeodharCase::Fold(u))
}
