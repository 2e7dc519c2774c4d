use rayon::prelude::*;
use serde::Serialize;

use super::{reduce, reduce_with_steps, s_polynomial, DillOrder, OrderVariant};
use crate::derivation::ProblemInstance;
use crate::presentation::{build_relations, RelationLabel, RelationSet};
use crate::ring::{Monomial, MonomialOrder, PMonomial, PPoly, Polynomial};

/// The leading monomial the relation is claimed to have:
/// `u_{ik} u_{jl}` for `r(i,j,k,l)`, `x_j^{m_j} u_{ik}` for `s(i,j,k)`.
pub fn expected_lead(instance: &ProblemInstance, label: RelationLabel) -> PMonomial {
    let d = instance.d();
    match label {
        RelationLabel::R(i, j, k, l) => PMonomial::one(d).with_u(i, k, 1).with_u(j, l, 1),
        RelationLabel::S(i, j, k) => {
            let mut m = PMonomial::one(d).with_u(i, k, 1);
            m.set_x(j, instance.degree(j));
            m
        }
    }
}

fn show(m: &PMonomial) -> String {
    Polynomial::monomial(m.clone()).to_string()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LeadEntry {
    pub relation: String,
    pub expected: String,
    pub actual: String,
    pub conforms: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LeadReport {
    pub variant: OrderVariant,
    pub entries: Vec<LeadEntry>,
}

impl LeadReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.conforms)
    }

    pub fn violations(&self) -> impl Iterator<Item = &LeadEntry> + '_ {
        self.entries.iter().filter(|e| !e.conforms)
    }
}

pub fn verify_lead_conformance(
    instance: &ProblemInstance,
    relations: &RelationSet,
    variant: OrderVariant,
) -> LeadReport {
    let order = DillOrder::new(variant);
    let entries = relations
        .iter()
        .map(|rel| {
            let expected = expected_lead(instance, rel.label);
            let actual = rel.poly.leading_monomial(&order).expect("relations are nonzero");
            LeadEntry {
                relation: rel.label.to_string(),
                expected: show(&expected),
                actual: show(actual),
                conforms: *actual == expected,
            }
        })
        .collect();
    LeadReport { variant, entries }
}

/// Outcome of reducing one S-polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairOutcome {
    pub first: String,
    pub second: String,
    /// Leading monomials share no variable (first criterion applies).
    pub coprime_leads: bool,
    pub steps: usize,
    pub reduces_to_zero: bool,
    pub remainder: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReducednessReport {
    pub violations: Vec<String>,
}

impl ReducednessReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A basis is reduced when, after making every element monic, no leading
/// monomial of one element divides any monomial of another.
pub fn verify_reduced<O: MonomialOrder<PMonomial>>(
    labels: &[String],
    basis: &[PPoly],
    order: &O,
) -> ReducednessReport {
    let monic: Vec<PPoly> = basis.iter().map(|g| g.make_monic(order)).collect();
    let mut violations = Vec::new();
    for (a, g) in monic.iter().enumerate() {
        match g.leading_term(order) {
            Ok((_, c)) if c.is_integer() && *c.numer() == 1.into() => {}
            _ => violations.push(format!("{} is zero or not monic", labels[a])),
        }
    }
    for (b, h) in monic.iter().enumerate() {
        let Ok(lead) = h.leading_monomial(order) else { continue };
        for (a, g) in monic.iter().enumerate() {
            if a == b {
                continue;
            }
            if let Some(m) = g.monomials().find(|m| lead.divides(m)) {
                violations.push(format!(
                    "lead {} of {} divides {} in {}",
                    show(lead),
                    labels[b],
                    show(m),
                    labels[a]
                ));
            }
        }
    }
    ReducednessReport { violations }
}

/// Everything [`verify_groebner`] established.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroebnerReport {
    pub variant: OrderVariant,
    pub lead_conformance: LeadReport,
    pub pairs: Vec<PairOutcome>,
    pub reducedness: Option<ReducednessReport>,
    pub verdict: bool,
    pub failure: Option<String>,
}

impl GroebnerReport {
    pub fn first_failing_pair(&self) -> Option<&PairOutcome> {
        self.pairs.iter().find(|p| !p.reduces_to_zero)
    }
}

/// Checks that `R ∪ S` is a reduced Gröbner basis under the given variant.
///
/// Lead conformance is a gate: if any relation has an unexpected leading
/// monomial no pairs are examined. Every S-pair is reduced (also those with
/// coprime leads). With `jobs > 1` pairs are reduced on a thread pool; the
/// report does not depend on `jobs`.
pub fn verify_groebner(instance: &ProblemInstance, variant: OrderVariant, jobs: usize) -> GroebnerReport {
    let relations = build_relations(instance);
    let lead_conformance = verify_lead_conformance(instance, &relations, variant);
    if !lead_conformance.passed() {
        let first = lead_conformance.violations().next().expect("a violation");
        let failure = format!(
            "lead conformance: {} has lead {}, expected {}",
            first.relation, first.actual, first.expected
        );
        return GroebnerReport {
            variant,
            lead_conformance,
            pairs: Vec::new(),
            reducedness: None,
            verdict: false,
            failure: Some(failure),
        };
    }

    let order = DillOrder::new(variant);
    let labels: Vec<String> = relations.labels().iter().map(ToString::to_string).collect();
    let basis = relations.polys();
    let index_pairs: Vec<(usize, usize)> =
        (0..basis.len()).flat_map(|a| (a + 1..basis.len()).map(move |b| (a, b))).collect();
    let check = |&(a, b): &(usize, usize)| {
        let s = s_polynomial(&basis[a], &basis[b], &order).expect("relations are nonzero");
        let red = reduce_with_steps(&s, &basis, &order);
        let la = basis[a].leading_monomial(&order).unwrap();
        let lb = basis[b].leading_monomial(&order).unwrap();
        PairOutcome {
            first: labels[a].clone(),
            second: labels[b].clone(),
            coprime_leads: la.gcd_is_one(lb),
            steps: red.steps,
            reduces_to_zero: red.remainder.is_zero(),
            remainder: red.remainder.to_string(),
        }
    };
    let pairs: Vec<PairOutcome> = if jobs > 1 {
        match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
            Ok(pool) => pool.install(|| index_pairs.par_iter().map(check).collect()),
            Err(_) => index_pairs.iter().map(check).collect(),
        }
    } else {
        index_pairs.iter().map(check).collect()
    };

    let reducedness = verify_reduced(&labels, &basis, &order);
    let failure = if let Some(p) = pairs.iter().find(|p| !p.reduces_to_zero) {
        Some(format!("S({}, {}) reduces to {}", p.first, p.second, p.remainder))
    } else {
        reducedness.violations.first().map(|v| format!("not reduced: {v}"))
    };
    GroebnerReport {
        variant,
        lead_conformance,
        pairs,
        verdict: failure.is_none(),
        reducedness: Some(reducedness),
        failure,
    }
}

/// Normal form modulo `R ∪ S` under the corrected order.
pub fn normal_form(relations: &RelationSet, p: &PPoly) -> PPoly {
    reduce(p, &relations.polys(), &DillOrder::corrected())
}
