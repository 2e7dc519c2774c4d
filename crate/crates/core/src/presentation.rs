//! Generators `u_{jk} = f_j(x_j) y_k - f_k(x_k) y_j`, the substitution
//! homomorphism `π : K[X_d, U_d] → K[X_d, Y_d]`, and the relation families
//! `R` (Plücker-type quadrics) and `S` (mixed cubics in `x` and `u`).

use std::collections::HashMap;
use std::fmt;

use crate::derivation::ProblemInstance;
use crate::ring::{pair_count, pair_index, pairs, AMonomial, APoly, Monomial, PMonomial, PPoly, RingError};

/// All `u_{jk}` as elements of `K[X_d, Y_d]`, indexed by pair.
#[derive(Debug, Clone)]
pub struct GeneratorTable {
    instance: ProblemInstance,
    u: Vec<APoly>,
}

impl GeneratorTable {
    pub fn build(instance: &ProblemInstance) -> Self {
        let d = instance.d();
        let y = |i: usize| {
            let mut m = AMonomial::one(d);
            m.set_y(i, 1);
            m
        };
        let one = crate::ring::int(1);
        let u = pairs(d)
            .map(|(j, k)| {
                let left = instance.f_in_a(j).mul_term(&y(k), &one);
                let right = instance.f_in_a(k).mul_term(&y(j), &one);
                &left - &right
            })
            .collect();
        GeneratorTable { instance: instance.clone(), u }
    }

    pub fn instance(&self) -> &ProblemInstance {
        &self.instance
    }

    pub fn len(&self) -> usize {
        self.u.len()
    }

    pub fn is_empty(&self) -> bool {
        self.u.is_empty()
    }

    pub fn u(&self, j: usize, k: usize) -> &APoly {
        &self.u[pair_index(self.instance.d(), j, k)]
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), &APoly)> + '_ {
        pairs(self.instance.d()).zip(&self.u)
    }

    /// `π(p)`: `x_i ↦ x_i`, `u_{jk} ↦ f_j(x_j) y_k - f_k(x_k) y_j`.
    pub fn pi(&self, p: &PPoly) -> Result<APoly, RingError> {
        let d = self.instance.d();
        if p.dim() != d {
            return Err(RingError::DimensionMismatch { left: d, right: p.dim() });
        }
        let mut powers = PowerCache::default();
        let mut out = APoly::zero(d);
        for (m, c) in p.terms() {
            let image = self.pi_u_part(m, &mut powers);
            out.add_scaled(&image, &x_part(m), c);
        }
        Ok(out)
    }

    /// `π` of a single monomial.
    pub fn pi_monomial(&self, m: &PMonomial) -> APoly {
        let image = self.pi_u_part(m, &mut PowerCache::default());
        image.mul_term(&x_part(m), &crate::ring::int(1))
    }

    fn pi_u_part(&self, m: &PMonomial, powers: &mut PowerCache) -> APoly {
        let d = self.instance.d();
        let mut acc = APoly::one(d);
        for (j, k, e) in m.u_factors() {
            let idx = pair_index(d, j, k);
            let pw = powers
                .entry((idx, e))
                .or_insert_with(|| self.u[idx].pow(e));
            acc = &acc * pw;
        }
        acc
    }
}

type PowerCache = HashMap<(usize, u32), APoly>;

fn x_part(m: &PMonomial) -> AMonomial {
    let d = m.dim();
    AMonomial::new(m.x_exponents(), &vec![0; d])
}

/// Which relation a polynomial is, with its 1-based indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RelationLabel {
    R(usize, usize, usize, usize),
    S(usize, usize, usize),
}

impl fmt::Display for RelationLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RelationLabel::R(i, j, k, l) => write!(f, "R({i},{j},{k},{l})"),
            RelationLabel::S(i, j, k) => write!(f, "S({i},{j},{k})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub label: RelationLabel,
    pub poly: PPoly,
}

/// `R = {r(i,j,k,l)}` and `S = {s(i,j,k)}`, each in lexicographic index order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationSet {
    pub r: Vec<Relation>,
    pub s: Vec<Relation>,
}

impl RelationSet {
    /// `R` followed by `S`.
    pub fn iter(&self) -> impl Iterator<Item = &Relation> + '_ {
        self.r.iter().chain(&self.s)
    }

    pub fn polys(&self) -> Vec<PPoly> {
        self.iter().map(|r| r.poly.clone()).collect()
    }

    pub fn labels(&self) -> Vec<RelationLabel> {
        self.iter().map(|r| r.label).collect()
    }

    pub fn len(&self) -> usize {
        self.r.len() + self.s.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn u_var(d: usize, j: usize, k: usize) -> PPoly {
    PPoly::monomial(PMonomial::one(d).with_u(j, k, 1))
}

/// `r(i,j,k,l) = u_{ij} u_{kl} - u_{ik} u_{jl} + u_{il} u_{jk}`.
pub fn r_relation(d: usize, i: usize, j: usize, k: usize, l: usize) -> PPoly {
    let u = |a, b| u_var(d, a, b);
    &(&(&u(i, j) * &u(k, l)) - &(&u(i, k) * &u(j, l))) + &(&u(i, l) * &u(j, k))
}

/// `s(i,j,k) = f_i(x_i) u_{jk} - f_j(x_j) u_{ik} + f_k(x_k) u_{ij}`, with the
/// full coefficient vectors of the `f`'s.
pub fn s_relation(instance: &ProblemInstance, i: usize, j: usize, k: usize) -> PPoly {
    let d = instance.d();
    let u = |a, b| u_var(d, a, b);
    &(&(&instance.f_in_p(i) * &u(j, k)) - &(&instance.f_in_p(j) * &u(i, k)))
        + &(&instance.f_in_p(k) * &u(i, j))
}

pub fn build_relations(instance: &ProblemInstance) -> RelationSet {
    let d = instance.d();
    let mut r = Vec::new();
    let mut s = Vec::new();
    for i in 1..=d {
        for j in i + 1..=d {
            for k in j + 1..=d {
                s.push(Relation { label: RelationLabel::S(i, j, k), poly: s_relation(instance, i, j, k) });
                for l in k + 1..=d {
                    r.push(Relation { label: RelationLabel::R(i, j, k, l), poly: r_relation(d, i, j, k, l) });
                }
            }
        }
    }
    debug_assert_eq!(s.len(), binomial(d, 3));
    debug_assert_eq!(r.len(), binomial(d, 4));
    debug_assert!(pair_count(d) == binomial(d, 2));
    RelationSet { r, s }
}

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, t| acc * (n - t) / (t + 1))
}
