//! Kazhdan–Lusztig polynomials of `S_n`.
//!
//! For a left descent `s` of `w` and `v = sw`, the classical recursion reads
//!
//! ```text
//! P_{x,w} = q^{1-c} P_{sx,v} + q^c P_{x,v}
//!           - Σ_{z < v, sz < z} μ(z,v) q^{(ℓ(w)-ℓ(z))/2} P_{x,z}
//! ```
//!
//! with `c = 1` when `sx < x` and `c = 0` otherwise, where `μ(z,v)` is the
//! coefficient of `q^{(ℓ(v)-ℓ(z)-1)/2}` in `P_{z,v}`. Columns `x ↦ P_{x,w}` are
//! memoized per `w`; `s` is always the leftmost left descent.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

use super::WeylElement;

type Column = HashMap<WeylElement, IntPolynomial>;

/// Memo table of KL columns for one rank. Not shared between threads; build
/// one per computation.
#[derive(Debug, Default)]
pub struct KlTable {
    n: usize,
    columns: HashMap<WeylElement, Column>,
}

impl KlTable {
    pub fn new(n: usize) -> Self {
        KlTable {
            n,
            columns: HashMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// `P_{x,w}`; zero unless `x ≤ w` in the Bruhat order.
    pub fn polynomial(&mut self, x: &WeylElement, w: &WeylElement) -> Result<IntPolynomial> {
        for e in [x, w] {
            if e.rank() != self.n {
                return Err(Error::RankMismatch(e.rank(), self.n));
            }
        }
        self.ensure(w);
        Ok(self.columns[w].get(x).cloned().unwrap_or_default())
    }

    /// `μ(x,w)`, the coefficient of degree `(ℓ(w)-ℓ(x)-1)/2` in `P_{x,w}`
    /// (zero when the length difference is even or `x ≮ w`).
    pub fn mu(&mut self, x: &WeylElement, w: &WeylElement) -> Result<i64> {
        let (lx, lw) = (x.length(), w.length());
        if lw <= lx || (lw - lx) % 2 == 0 {
            return Ok(0);
        }
        Ok(self.polynomial(x, w)?.coeff((lw - lx - 1) / 2))
    }

    /// Elements `x ≤ w` together with `P_{x,w}`.
    pub fn column(&mut self, w: &WeylElement) -> &HashMap<WeylElement, IntPolynomial> {
        self.ensure(w);
        &self.columns[w]
    }

    fn ensure(&mut self, w: &WeylElement) {
        if self.columns.contains_key(w) {
            return;
        }
        let Some(s) = w.first_left_descent() else {
            let mut col = Column::new();
            col.insert(w.clone(), IntPolynomial::one());
            self.columns.insert(w.clone(), col);
            return;
        };
        let v = w.left_mul_simple(s);
        self.ensure(&v);

        let lv = v.length();
        let lw = lv + 1;
        let corrections: Vec<(WeylElement, i64)> = self.columns[&v]
            .iter()
            .filter(|(z, _)| *z != &v && z.has_left_descent(s))
            .filter_map(|(z, p)| {
                let lz = z.length();
                if (lv - lz) % 2 == 0 {
                    return None;
                }
                let mu = p.coeff((lv - lz - 1) / 2);
                (mu != 0).then(|| (z.clone(), mu))
            })
            .collect();
        for (z, _) in &corrections {
            self.ensure(z);
        }

        let col_v = &self.columns[&v];
        let mut interval: Vec<WeylElement> = Vec::with_capacity(2 * col_v.len());
        for x in col_v.keys() {
            interval.push(x.clone());
            let sx = x.left_mul_simple(s);
            if !col_v.contains_key(&sx) {
                interval.push(sx);
            }
        }

        let mut col = Column::with_capacity(interval.len());
        for x in interval {
            let sx = x.left_mul_simple(s);
            let p_sx = col_v.get(&sx).cloned().unwrap_or_default();
            let p_x = col_v.get(&x).cloned().unwrap_or_default();
            let mut p = if x.has_left_descent(s) {
                p_sx + p_x.shift(1)
            } else {
                p_sx.shift(1) + p_x
            };
            for (z, mu) in &corrections {
                if let Some(pxz) = self.columns[z].get(&x) {
                    let lz = z.length();
                    p -= &pxz.shift((lw - lz) / 2).scale(*mu);
                }
            }
            if !p.is_zero() {
                col.insert(x, p);
            }
        }
        self.columns.insert(w.clone(), col);
    }
}

/// One-shot `P_{x,w}` with a fresh table.
pub fn kl_polynomial(x: &WeylElement, w: &WeylElement) -> Result<IntPolynomial> {
    if x.rank() != w.rank() {
        return Err(Error::RankMismatch(x.rank(), w.rank()));
    }
    KlTable::new(w.rank()).polynomial(x, w)
}
