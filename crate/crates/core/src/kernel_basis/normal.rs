use crate::derivation::ProblemInstance;
use crate::dill_gb::{DillOrder, OrderVariant};
use crate::presentation::GeneratorTable;
use crate::ring::{pair_count, pairs, MonomialOrder, PMonomial, Polynomial};

use super::KernelError;

/// A monomial of `K[X_d, U_d]` certified normal for its instance.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalWord(PMonomial);

impl NormalWord {
    pub fn new(instance: &ProblemInstance, m: PMonomial) -> Result<Self, KernelError> {
        if !is_normal_word(instance, &m) {
            return Err(KernelError::NotNormal { word: Polynomial::monomial(m).to_string() });
        }
        Ok(NormalWord(m))
    }

    pub fn monomial(&self) -> &PMonomial {
        &self.0
    }

    pub fn into_inner(self) -> PMonomial {
        self.0
    }
}

impl std::fmt::Display for NormalWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        Polynomial::monomial(self.0.clone()).fmt(f)
    }
}

/// Conditions (1) nested-or-disjoint intervals and (2) capped inner `x`
/// exponents.
pub fn is_normal_word(instance: &ProblemInstance, v: &PMonomial) -> bool {
    let factors: Vec<(usize, usize)> = v.u_factors().map(|(j, k, _)| (j, k)).collect();
    for (n, &(jb, kb)) in factors.iter().enumerate() {
        for &(jc, kc) in &factors[n + 1..] {
            if (jb < jc && jc < kb && kb < kc) || (jc < jb && jb < kc && kc < kb) {
                return false;
            }
        }
    }
    (1..=instance.d()).all(|i| {
        let inside = factors.iter().any(|&(j, k)| j < i && i < k);
        !inside || v.x(i) < instance.degree(i)
    })
}

/// Normality as "no claimed leading monomial of `R ∪ S` divides `v`":
/// `u_{ik} u_{jl}` for `i<j<k<l` and `x_j^{m_j} u_{ik}` for `i<j<k`.
pub fn is_normal_by_divisibility(instance: &ProblemInstance, v: &PMonomial) -> bool {
    let d = instance.d();
    for (i, k) in pairs(d) {
        if v.u(i, k) == 0 {
            continue;
        }
        for j in i + 1..k {
            if v.x(j) >= instance.degree(j) {
                return false;
            }
            for l in k + 1..=d {
                if v.u(j, l) > 0 {
                    return false;
                }
            }
        }
    }
    true
}

/// How the degree bound of [`enumerate_normal_words`] is measured.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DegreeMeasure {
    /// Total degree of the expanded image `π(v)` in `K[X_d, Y_d]`.
    #[default]
    Image,
    /// Total degree of `v` itself in the variables `x_i`, `u_{jk}`.
    Internal,
}

/// Every monomial of `K[X_d, U_d]` with internal degree at most `max`.
pub(crate) fn monomials_up_to(d: usize, max: u32) -> Vec<PMonomial> {
    let nvars = d + pair_count(d);
    let mut out = Vec::new();
    let mut exps = vec![0u32; nvars];
    fn rec(pos: usize, left: u32, exps: &mut Vec<u32>, d: usize, out: &mut Vec<PMonomial>) {
        if pos == exps.len() {
            let x = exps[..d].to_vec();
            let mut m = PMonomial::new(x, &[]).expect("valid exponents");
            for ((j, k), &e) in pairs(d).zip(&exps[d..]) {
                if e > 0 {
                    m = m.with_u(j, k, e);
                }
            }
            out.push(m);
            return;
        }
        for e in 0..=left {
            exps[pos] = e;
            rec(pos + 1, left - e, exps, d, out);
        }
        exps[pos] = 0;
    }
    rec(0, max, &mut exps, d, &mut out);
    out
}

/// All normal words whose degree (per `measure`) is at most `bound`, sorted
/// ascending in the given DILL variant.
///
/// Every generator image has degree at least one, so internal degree never
/// exceeds image degree and the internal-degree sweep finds all candidates.
pub fn enumerate_normal_words(
    table: &GeneratorTable,
    bound: u32,
    measure: DegreeMeasure,
    variant: OrderVariant,
) -> Vec<NormalWord> {
    let instance = table.instance();
    let mut words: Vec<PMonomial> = monomials_up_to(instance.d(), bound)
        .into_iter()
        .filter(|m| is_normal_word(instance, m))
        .filter(|m| match measure {
            DegreeMeasure::Internal => true,
            DegreeMeasure::Image => {
                table.pi_monomial(m).total_degree().is_some_and(|deg| deg <= bound)
            }
        })
        .collect();
    let order = DillOrder::new(variant);
    words.sort_by(|a, b| order.compare(a, b));
    words.into_iter().map(NormalWord).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{parse_poly, PPoly};

    fn m(s: &str, d: usize) -> PMonomial {
        let p: PPoly = parse_poly(s, d).unwrap();
        let m = p.monomials().next().unwrap().clone();
        m
    }

    #[test]
    fn crossing_intervals_are_not_normal() {
        let inst = ProblemInstance::monomial(&[1, 1, 1, 1]).unwrap();
        assert!(!is_normal_word(&inst, &m("u1_3*u2_4", 4)));
        assert!(is_normal_word(&inst, &m("u1_4*u2_3", 4)));
        assert!(is_normal_word(&inst, &m("u1_2*u3_4", 4)));
        assert!(is_normal_word(&inst, &m("u1_3*u3_4", 4)));
    }

    #[test]
    fn inner_x_exponent_is_capped() {
        let inst = ProblemInstance::monomial(&[2, 3, 1]).unwrap();
        assert!(!is_normal_word(&inst, &m("x2^3*u1_3", 3)));
        assert!(is_normal_word(&inst, &m("x2^2*u1_3*u2_3", 3)));
        assert!(is_normal_word(&inst, &m("x1^9*x3^9*u1_3", 3)));
    }

    #[test]
    fn d2_everything_is_normal() {
        let inst = ProblemInstance::monomial(&[3, 1]).unwrap();
        for v in monomials_up_to(2, 4) {
            assert!(is_normal_word(&inst, &v));
        }
    }

    #[test]
    fn normal_word_constructor() {
        let inst = ProblemInstance::monomial(&[1, 1, 1, 1]).unwrap();
        assert!(NormalWord::new(&inst, m("u1_3*u2_4", 4)).is_err());
        assert_eq!(NormalWord::new(&inst, m("x4*u1_2", 4)).unwrap().to_string(), "x4*u1_2");
    }

    #[test]
    fn image_degree_enumeration_small() {
        let inst = ProblemInstance::monomial(&[1, 1]).unwrap();
        let t = GeneratorTable::build(&inst);
        let words: Vec<String> = enumerate_normal_words(&t, 1, DegreeMeasure::Image, OrderVariant::Corrected)
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(words, vec!["1", "x2", "x1"]);
        let two = enumerate_normal_words(&t, 2, DegreeMeasure::Image, OrderVariant::Corrected);
        assert_eq!(two.len(), 7);
        assert_eq!(two.last().unwrap().to_string(), "u1_2");
    }

    #[test]
    fn internal_degree_count_d3() {
        // 28 monomials of degree <= 2 in 6 variables; only x2*u1_3 is excluded
        let inst = ProblemInstance::monomial(&[1, 1, 1]).unwrap();
        let t = GeneratorTable::build(&inst);
        assert_eq!(monomials_up_to(3, 2).len(), 28);
        let words = enumerate_normal_words(&t, 2, DegreeMeasure::Internal, OrderVariant::Corrected);
        assert_eq!(words.len(), 27);
        assert!(!words.iter().any(|w| w.to_string() == "x2*u1_3"));
    }

    #[test]
    fn enumeration_is_sorted_and_distinct() {
        let inst = ProblemInstance::monomial(&[1, 2, 2]).unwrap();
        let t = GeneratorTable::build(&inst);
        let words = enumerate_normal_words(&t, 5, DegreeMeasure::Image, OrderVariant::Corrected);
        for w in words.windows(2) {
            assert!(w[0] < w[1]);
        }
    }
}
