use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_traits::Zero;

use crate::derivation::ProblemInstance;
use crate::dill_gb::OrderVariant;
use crate::linalg;
use crate::presentation::GeneratorTable;
use crate::ring::{AMonomial, APoly, PMonomial, Rational};

use super::{enumerate_normal_words, lead_of_image, DegreeMeasure, KernelError};

/// Largest number of monomials the dense linear algebra will accept.
pub const DEFAULT_MONOMIAL_BUDGET: usize = 5000;

/// Total degree of the expanded image `π(v)`.
pub fn image_degree(table: &GeneratorTable, v: &PMonomial) -> u32 {
    table.pi_monomial(v).total_degree().expect("images of monomials are nonzero")
}

fn binomial_saturating(n: u64, k: u64) -> u64 {
    let mut acc: u128 = 1;
    for t in 0..k {
        acc = acc * (n - t) as u128 / (t + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// All monomials of `K[X_d, Y_d]` of total degree at most `max`.
fn a_monomials_up_to(d: usize, max: u32) -> Vec<AMonomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; 2 * d];
    fn rec(pos: usize, left: u32, exps: &mut Vec<u32>, out: &mut Vec<AMonomial>) {
        if pos == exps.len() {
            let x: Vec<u32> = exps.iter().step_by(2).copied().collect();
            let y: Vec<u32> = exps.iter().skip(1).step_by(2).copied().collect();
            out.push(AMonomial::new(&x, &y));
            return;
        }
        for e in 0..=left {
            exps[pos] = e;
            rec(pos + 1, left - e, exps, out);
        }
        exps[pos] = 0;
    }
    rec(0, max, &mut exps, &mut out);
    out
}

/// The constants of degree at most `max_degree`, computed directly as the
/// nullspace of `Δ` on that slice.
#[derive(Debug, Clone)]
pub struct KernelSlice {
    pub max_degree: u32,
    pub dim: usize,
    pub basis: Vec<APoly>,
    /// Size of the degree-`<= max_degree` slice of `K[X_d, Y_d]`.
    pub source_monomials: usize,
}

/// Exact nullspace of `Δ` from the degree-`<= N` slice of `K[X_d, Y_d]`.
///
/// `Δ` lowers the `y`-degree by exactly one, so the matrix is block
/// diagonal in the `y`-degree of the source and each block is solved on
/// its own.
pub fn kernel_dim_oracle(
    instance: &ProblemInstance,
    max_degree: u32,
    budget: usize,
) -> Result<KernelSlice, KernelError> {
    let d = instance.d();
    let count = binomial_saturating(max_degree as u64 + 2 * d as u64, 2 * d as u64);
    if count > budget as u64 {
        return Err(KernelError::BudgetExceeded { count: count.min(usize::MAX as u64) as usize, budget });
    }
    let monomials = a_monomials_up_to(d, max_degree);
    let mut blocks: BTreeMap<u32, Vec<AMonomial>> = BTreeMap::new();
    for m in &monomials {
        blocks.entry(m.y_degree()).or_default().push(m.clone());
    }
    let delta = instance.derivation();
    let mut basis = Vec::new();
    for (ydeg, cols) in blocks {
        if ydeg == 0 {
            basis.extend(cols.into_iter().map(APoly::monomial));
            continue;
        }
        let images: Vec<APoly> = cols
            .iter()
            .map(|m| delta.apply(&APoly::monomial(m.clone())))
            .collect::<Result<_, _>>()?;
        let targets: BTreeSet<&AMonomial> = images.iter().flat_map(|p| p.monomials()).collect();
        let rows: Vec<Vec<Rational>> = targets
            .iter()
            .map(|t| images.iter().map(|p| p.coeff(t)).collect())
            .collect();
        for v in linalg::nullspace(&rows, cols.len()) {
            basis.push(APoly::from_terms(
                d,
                cols.iter().zip(v).filter(|(_, c)| !c.is_zero()).map(|(m, c)| (m.clone(), c)),
            ));
        }
    }
    Ok(KernelSlice { max_degree, dim: basis.len(), basis, source_monomials: monomials.len() })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependenceReport {
    pub max_degree: u32,
    pub words: usize,
    pub rank: usize,
    pub leads_distinct: bool,
}

impl IndependenceReport {
    pub fn passed(&self) -> bool {
        self.rank == self.words && self.leads_distinct
    }
}

/// Exact rank of `{π(v) : v normal, deg π(v) <= N}` against the number of
/// such words, plus pairwise distinctness of their leading monomials.
///
/// `π(v)` is homogeneous of `y`-degree `deg_U(v)`, so the rank is summed
/// over `u`-degree blocks.
pub fn independence_check(
    table: &GeneratorTable,
    max_degree: u32,
    budget: usize,
) -> Result<IndependenceReport, KernelError> {
    let instance = table.instance();
    let words = enumerate_normal_words(table, max_degree, DegreeMeasure::Image, OrderVariant::Corrected);
    if words.len() > budget {
        return Err(KernelError::BudgetExceeded { count: words.len(), budget });
    }
    let mut leads = HashSet::new();
    let mut leads_distinct = true;
    let mut blocks: BTreeMap<u32, Vec<APoly>> = BTreeMap::new();
    for w in &words {
        let (lead, _) = lead_of_image(instance, w.monomial())?;
        leads_distinct &= leads.insert(lead);
        blocks.entry(w.monomial().u_degree()).or_default().push(table.pi_monomial(w.monomial()));
    }
    let mut rank = 0;
    for images in blocks.values() {
        let cols: Vec<&AMonomial> =
            images.iter().flat_map(|p| p.monomials()).collect::<BTreeSet<_>>().into_iter().collect();
        if cols.len() > budget {
            return Err(KernelError::BudgetExceeded { count: cols.len(), budget });
        }
        let rows: Vec<Vec<Rational>> =
            images.iter().map(|p| cols.iter().map(|m| p.coeff(m)).collect()).collect();
        rank += linalg::rank(&rows, cols.len());
    }
    Ok(IndependenceReport { max_degree, words: words.len(), rank, leads_distinct })
}
