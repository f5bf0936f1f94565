//! The depth-zero branching law.
//!
//! For a multisegment `a`, write `⟨a⟩ = Σ_{b ≤ a} c_b π(b)` in the basis of
//! standard products. The Zelevinsky involution sends `π(b)` to the product
//! of the Steinberg representations of the segments of `b`, whose `K_+`-fixed
//! vectors form the `GL_n(F_q)` module induced from sign characters. Hence
//!
//! ```text
//! mult(π_μ, St(⟨a⟩)^{K_+}) = Σ_b c_b · K_{μ', lengths(b)}.
//! ```

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multiseg::{
    partition_p, poset, zelevinsky_dual, DecompositionNumbers, Multisegment, Poset,
};
use crate::partition::{
    kostka_sign_multiplicities, kostka_ssyt, sign_induction_multiplicities, Partition,
    PartitionVector,
};
use crate::symgroup::{factorial, standard_tableaux};

/// Properties verified on a result before it is returned.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertifiedBounds {
    pub nonnegative: bool,
    pub top_multiplicity_one: bool,
    pub support_dominated: bool,
    pub dimension_balanced: bool,
    /// Pieri folding and Kostka counting agree on every generic term.
    pub pieri_kostka_agree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchingResult {
    pub n: usize,
    pub multiplicities: PartitionVector,
    /// `P(a)`, the dominance-maximal constituent.
    pub top: Partition,
    pub certified_bounds: CertifiedBounds,
}

fn generic_terms(lengths: &[usize]) -> Result<PartitionVector> {
    let pieri = sign_induction_multiplicities(lengths);
    let kostka = kostka_sign_multiplicities(lengths);
    if pieri != kostka {
        return Err(Error::BackendInconsistency);
    }
    Ok(pieri)
}

/// `μ ↦ K_{μ'λ'}` with `λ = lengths'`, the decomposition when no two
/// segments are linked.
pub fn generic_branching(lengths: &[usize]) -> Result<BranchingResult> {
    let mut sorted = lengths.to_vec();
    sorted.retain(|&l| l > 0);
    if sorted.is_empty() {
        return Err(Error::EmptyMultisegment);
    }
    let multiplicities = generic_terms(&sorted)?;
    let top = Partition::from_lengths(&sorted).conjugate();
    let certified_bounds = certify(&multiplicities, &top, &[(sorted, 1)])?;
    Ok(BranchingResult {
        n: top.size(),
        multiplicities,
        top,
        certified_bounds,
    })
}

/// Exact inverse of a unit upper triangular integer matrix.
fn invert_unitriangular(m: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    let n = m.len();
    for (i, row) in m.iter().enumerate() {
        if row[i] != 1 || row[..i].iter().any(|&x| x != 0) {
            return Err(Error::BackendInconsistency);
        }
    }
    let mut inv = vec![vec![0i64; n]; n];
    for i in 0..n {
        inv[i][i] = 1;
        for j in i + 1..n {
            let s: i64 = (i..j).map(|k| inv[i][k] * m[k][j]).sum();
            inv[i][j] = -s;
        }
    }
    Ok(inv)
}

/// Decomposition data on the interval below `a`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StandardExpansion {
    pub poset: Poset,
    /// `m_matrix[i][j] = m(nodes[j]; nodes[i])`, unit upper triangular.
    pub m_matrix: Vec<Vec<u64>>,
    /// `c_matrix = m_matrix⁻¹`; row `i` expands `⟨nodes[i]⟩` in standard products.
    pub c_matrix: Vec<Vec<i64>>,
}

impl StandardExpansion {
    pub fn compute(a: &Multisegment, cap: usize) -> Result<Self> {
        let poset = poset(a, cap)?;
        let nodes = &poset.nodes;
        let mut dn = DecompositionNumbers::new();
        let mut m_matrix = vec![vec![0u64; nodes.len()]; nodes.len()];
        for (i, c) in nodes.iter().enumerate() {
            for (j, b) in nodes.iter().enumerate() {
                m_matrix[i][j] = dn.m(b, c)?;
            }
        }
        let signed: Vec<Vec<i64>> = m_matrix
            .iter()
            .map(|r| r.iter().map(|&x| x as i64).collect())
            .collect();
        let c_matrix = invert_unitriangular(&signed)?;
        Ok(StandardExpansion {
            poset,
            m_matrix,
            c_matrix,
        })
    }

    /// `(b, c_b)` with `c_b ≠ 0` for the maximum of the poset.
    pub fn coefficients(&self) -> Vec<(Multisegment, i64)> {
        self.poset
            .nodes
            .iter()
            .zip(&self.c_matrix[0])
            .filter(|(_, &c)| c != 0)
            .map(|(b, &c)| (b.clone(), c))
            .collect()
    }
}

/// The integers `c_b` with `⟨a⟩ = Σ_{b ≤ a} c_b π(b)`; `c_a = 1`.
pub fn expand_in_standard_basis(a: &Multisegment, cap: usize) -> Result<Vec<(Multisegment, i64)>> {
    Ok(StandardExpansion::compute(a, cap)?.coefficients())
}

fn certify(
    mult: &PartitionVector,
    top: &Partition,
    terms: &[(Vec<usize>, i64)],
) -> Result<CertifiedBounds> {
    if mult.iter().any(|(_, c)| c < 0) {
        return Err(Error::BackendInconsistency);
    }
    if mult.get(top) != 1 {
        return Err(Error::BackendInconsistency);
    }
    for mu in mult.support() {
        if !top.dominates(mu)? {
            return Err(Error::BackendInconsistency);
        }
    }
    let n = top.size();
    let lhs: i128 = mult
        .iter()
        .map(|(mu, c)| c as i128 * standard_tableaux(mu))
        .sum();
    let rhs: i128 = terms
        .iter()
        .map(|(lengths, c)| {
            let denom: i128 = lengths.iter().map(|&l| factorial(l)).product();
            *c as i128 * (factorial(n) / denom)
        })
        .sum();
    if lhs != rhs {
        return Err(Error::BackendInconsistency);
    }
    Ok(CertifiedBounds {
        nonnegative: true,
        top_multiplicity_one: true,
        support_dominated: true,
        dimension_balanced: true,
        pieri_kostka_agree: true,
    })
}

fn branch_from(a: &Multisegment, expansion: &StandardExpansion) -> Result<BranchingResult> {
    let top = partition_p(a)?;
    let n = top.size();
    let terms: Vec<(Vec<usize>, i64)> = expansion
        .coefficients()
        .into_iter()
        .map(|(b, c)| (b.lengths(), c))
        .collect();
    let mut mult = PartitionVector::zero(n);
    for (lengths, c) in &terms {
        let content = Partition::from_lengths(lengths);
        let generic = generic_terms(lengths)?;
        for mu in Partition::all(n) {
            let k = kostka_ssyt(&mu.conjugate(), &content)?;
            if k as i64 != generic.get(&mu) {
                return Err(Error::BackendInconsistency);
            }
            mult.add(mu, c * k as i64);
        }
    }
    let certified_bounds = certify(&mult, &top, &terms)?;
    Ok(BranchingResult {
        n,
        multiplicities: mult,
        top,
        certified_bounds,
    })
}

/// Multiplicity of every `π_μ` in `St(⟨a⟩)^{K_+}`.
///
/// Fails with [`Error::BackendInconsistency`] if any multiplicity comes out
/// negative or any of the certified bounds is violated.
pub fn branch(a: &Multisegment, cap: usize) -> Result<BranchingResult> {
    if a.is_empty() {
        return Err(Error::EmptyMultisegment);
    }
    branch_from(a, &StandardExpansion::compute(a, cap)?)
}

const NECESSARY_CONDITION_NOTE: &str = "occurrence of pi_mu requires mu <= P(a) in dominance; \
    the multiplicities shown are computed values conditional on the decomposition-number backend";

/// Everything behind one branching computation, in one serializable record.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchReport {
    pub multisegment: Multisegment,
    pub branch: BranchingResult,
    pub poset: Poset,
    pub m_matrix: Vec<Vec<u64>>,
    pub c_coefficients: Vec<(Multisegment, i64)>,
    pub top: Partition,
    pub dual: Multisegment,
    /// `P(dual(a))'`.
    pub dual_partition: Partition,
    pub dual_partition_multiplicity: i64,
    /// Dominance-minimal elements of the support.
    pub minimal_constituents: Vec<Partition>,
    /// `P(dual(a))'` is below every constituent.
    pub dual_is_minimum: bool,
    pub note: String,
}

pub fn branch_report(a: &Multisegment, cap: usize) -> Result<BranchReport> {
    if a.is_empty() {
        return Err(Error::EmptyMultisegment);
    }
    let expansion = StandardExpansion::compute(a, cap)?;
    let result = branch_from(a, &expansion)?;
    let dual = zelevinsky_dual(a);
    let dual_partition = partition_p(&dual)?.conjugate();
    let support: Vec<&Partition> = result.multiplicities.support().collect();
    let mut minimal_constituents = Vec::new();
    for &mu in &support {
        let mut is_min = true;
        for &nu in &support {
            if nu != mu && mu.dominates(nu)? {
                is_min = false;
                break;
            }
        }
        if is_min {
            minimal_constituents.push(mu.clone());
        }
    }
    let mut dual_is_minimum = true;
    for &mu in &support {
        dual_is_minimum &= mu.dominates(&dual_partition)?;
    }
    Ok(BranchReport {
        multisegment: a.clone(),
        dual_partition_multiplicity: result.multiplicities.get(&dual_partition),
        top: result.top.clone(),
        branch: result,
        c_coefficients: expansion.coefficients(),
        poset: expansion.poset,
        m_matrix: expansion.m_matrix,
        dual,
        dual_partition,
        minimal_constituents,
        dual_is_minimum,
        note: NECESSARY_CONDITION_NOTE.to_string(),
    })
}
