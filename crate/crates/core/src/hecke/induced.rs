//! Modules `H ⊗_{H_J} V` induced from one-dimensional characters of a
//! parabolic subalgebra.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::partition::{Partition, PartitionVector};
use crate::poly::IntPolynomial;
use crate::symgroup::{self, ClassFunction, Factor};

use super::{blocks, check_simple, deodhar_case, distinguished_reps, is_distinguished, DeodharCase, WeylElement};

/// `Σ_{x ∈ Y_J} T_x ⊗ c_x v` for the one-dimensional `V = ℤ[q] v`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct InducedModuleElement {
    terms: BTreeMap<WeylElement, IntPolynomial>,
}

impl InducedModuleElement {
    pub fn basis(x: WeylElement) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(x, IntPolynomial::one());
        InducedModuleElement { terms }
    }

    pub fn coeff(&self, x: &WeylElement) -> IntPolynomial {
        self.terms.get(x).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&WeylElement, &IntPolynomial)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, x: WeylElement, c: &IntPolynomial) {
        let slot = self.terms.entry(x.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&x);
        }
    }

    pub fn add(&mut self, other: &InducedModuleElement) {
        for (x, c) in &other.terms {
            self.add_term(x.clone(), c);
        }
    }

    pub fn scale(&self, c: &IntPolynomial) -> Self {
        let mut out = InducedModuleElement::default();
        for (x, d) in &self.terms {
            out.add_term(x.clone(), &(c * d));
        }
        out
    }
}

/// `Ind_J^S(V)` for a one-dimensional `H_J`-module `V` on which every
/// `T_s`, `s ∈ J`, acts by `-1` (sign) or `q` (trivial).
#[derive(Clone, Debug)]
pub struct InducedModule {
    n: usize,
    eigenvalues: BTreeMap<usize, IntPolynomial>,
    basis: Vec<WeylElement>,
    index: HashMap<WeylElement, usize>,
}

impl InducedModule {
    /// `generators` lists `(s, value of T_s on V)` for every `s ∈ J`.
    pub fn new(n: usize, generators: &[(usize, IntPolynomial)]) -> Result<Self> {
        let sign = IntPolynomial::constant(-1);
        let q = IntPolynomial::q();
        let mut eigenvalues = BTreeMap::new();
        for (s, value) in generators {
            check_simple(n, *s)?;
            if *value != sign && *value != q {
                return Err(Error::InvalidEigenvalue {
                    generator: *s,
                    value: value.to_string(),
                });
            }
            if eigenvalues.insert(*s, value.clone()).is_some() {
                return Err(Error::DuplicateGenerator(*s));
            }
        }
        // adjacent generators are conjugate in H_J, so a character must agree on them
        for (s, value) in &eigenvalues {
            if let Some(next) = eigenvalues.get(&(s + 1)) {
                if next != value {
                    return Err(Error::InconsistentBlock(*s, s + 1));
                }
            }
        }
        let j: Vec<usize> = eigenvalues.keys().copied().collect();
        let basis = distinguished_reps(n, &j)?;
        let index = basis.iter().enumerate().map(|(i, x)| (x.clone(), i)).collect();
        Ok(InducedModule {
            n,
            eigenvalues,
            basis,
            index,
        })
    }

    /// Induction from `S_{l_1} × ⋯ × S_{l_r}` (consecutive blocks) with a
    /// sign or trivial character on each block.
    pub fn from_blocks(lengths: &[usize], factors: &[Factor]) -> Result<Self> {
        assert_eq!(lengths.len(), factors.len(), "one factor per block");
        let n = lengths.iter().sum();
        let mut generators = Vec::new();
        let mut start = 0;
        for (&l, f) in lengths.iter().zip(factors) {
            let value = match f {
                Factor::Sign => IntPolynomial::constant(-1),
                Factor::Trivial => IntPolynomial::q(),
            };
            for s in start + 1..start + l {
                generators.push((s, value.clone()));
            }
            start += l;
        }
        InducedModule::new(n, &generators)
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn parabolic(&self) -> Vec<usize> {
        self.eigenvalues.keys().copied().collect()
    }

    /// Eigenvalue of `T_s` on `V` for `s ∈ J`.
    pub fn eigenvalue(&self, s: usize) -> Option<&IntPolynomial> {
        self.eigenvalues.get(&s)
    }

    /// The basis `Y_J` of `T_x ⊗ v`.
    pub fn basis(&self) -> &[WeylElement] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `T_s` acting on `T_x ⊗ v`, split by Deodhar's trichotomy.
    pub fn act_on_basis(&self, s: usize, x: &WeylElement) -> Result<InducedModuleElement> {
        let j = self.parabolic();
        let mut out = InducedModuleElement::default();
        match deodhar_case(x, s, &j)? {
            DeodharCase::Up(sx) => out.add_term(sx, &IntPolynomial::one()),
            DeodharCase::Fold(u) => out.add_term(x.clone(), &self.eigenvalues[&u]),
            DeodharCase::Down(sx) => {
                out.add_term(sx, &IntPolynomial::q());
                out.add_term(x.clone(), &IntPolynomial::new(vec![-1, 1]));
            }
        }
        Ok(out)
    }

    pub fn act_on_induced(&self, s: usize, elt: &InducedModuleElement) -> Result<InducedModuleElement> {
        check_simple(self.n, s)?;
        let j = self.parabolic();
        let mut out = InducedModuleElement::default();
        for (x, c) in elt.terms() {
            if !is_distinguished(x, &j) {
                return Err(Error::NotDistinguished(x.to_string()));
            }
            out.add(&self.act_on_basis(s, x)?.scale(c));
        }
        Ok(out)
    }

    /// Matrix of `T_s` in the basis `Y_J`; column `k` is the image of the
    /// `k`-th basis vector.
    pub fn generator_matrix(&self, s: usize) -> Result<Vec<Vec<IntPolynomial>>> {
        check_simple(self.n, s)?;
        let d = self.dim();
        let mut m = vec![vec![IntPolynomial::zero(); d]; d];
        for (col, x) in self.basis.iter().enumerate() {
            for (y, c) in self.act_on_basis(s, x)?.terms() {
                m[self.index[y]][col] = c.clone();
            }
        }
        Ok(m)
    }

    /// Whether `(T_s - q)(T_s + 1)` vanishes on every basis vector.
    pub fn quadratic_relation_holds(&self, s: usize) -> Result<bool> {
        let q = IntPolynomial::q();
        for x in &self.basis {
            let v = InducedModuleElement::basis(x.clone());
            let tv = self.act_on_induced(s, &v)?;
            let ttv = self.act_on_induced(s, &tv)?;
            // T_s² - (q-1) T_s - q
            let mut r = ttv;
            r.add(&tv.scale(&IntPolynomial::new(vec![1, -1])));
            r.add(&v.scale(&-&q));
            if !r.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether the braid relation between `T_s` and `T_t` holds on every
    /// basis vector (`m_st = 3` for adjacent generators, `2` otherwise).
    pub fn braid_relation_holds(&self, s: usize, t: usize) -> Result<bool> {
        let m = if s.abs_diff(t) == 1 { 3 } else { 2 };
        for x in &self.basis {
            let mut lhs = InducedModuleElement::basis(x.clone());
            let mut rhs = lhs.clone();
            for k in 0..m {
                let (a, b) = if k % 2 == 0 { (s, t) } else { (t, s) };
                lhs = self.act_on_induced(a, &lhs)?;
                rhs = self.act_on_induced(b, &rhs)?;
            }
            if lhs != rhs {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Checks the quadratic relation for every generator and the braid
    /// relation for every pair of generators.
    pub fn relations_hold(&self) -> Result<bool> {
        for s in 1..self.n {
            if !self.quadratic_relation_holds(s)? {
                return Ok(false);
            }
            for t in s + 1..self.n {
                if !self.braid_relation_holds(s, t)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Sets `q = 1`, reads the resulting `S_n`-representation off the
    /// generator matrices and decomposes its character.
    pub fn specialize_q1_decompose(&self) -> Result<PartitionVector> {
        let n = self.n;
        let d = self.dim();
        let mats: Vec<Vec<Vec<i64>>> = (1..n)
            .map(|s| {
                self.generator_matrix(s).map(|m| {
                    m.iter()
                        .map(|row| row.iter().map(|c| c.eval(1)).collect())
                        .collect()
                })
            })
            .collect::<Result<_>>()?;
        let chi = ClassFunction::from_fn(n, |cycle_type| {
            // a k-cycle on consecutive points is s_a s_{a+1} ⋯ s_{a+k-2}
            let mut word = Vec::new();
            let mut start = 1;
            for &k in cycle_type.parts() {
                word.extend(start..start + k - 1);
                start += k;
            }
            let mut prod = identity(d);
            for &s in &word {
                prod = mat_mul(&prod, &mats[s - 1]);
            }
            (0..d).map(|i| prod[i][i]).sum()
        });
        symgroup::decompose(&chi)
    }
}

fn identity(d: usize) -> Vec<Vec<i64>> {
    (0..d)
        .map(|i| (0..d).map(|j| i64::from(i == j)).collect())
        .collect()
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let d = a.len();
    let mut out = vec![vec![0; d]; d];
    for i in 0..d {
        for k in 0..d {
            if a[i][k] == 0 {
                continue;
            }
            for j in 0..d {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}

/// Block lengths of the parabolic subgroup `W_J` of `S_n`.
pub fn block_lengths(n: usize, j: &[usize]) -> Partition {
    Partition::from_lengths(&blocks(n, j).iter().map(|b| b.len()).collect::<Vec<_>>())
}
