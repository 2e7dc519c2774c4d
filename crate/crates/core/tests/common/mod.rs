#![allow(dead_code)]

use kerdelta::ring::{int, pair_count, pairs};
use kerdelta::{AMonomial, APoly, PMonomial, PPoly, ProblemInstance};
use proptest::prelude::*;

pub fn a_monomial(d: usize, max_exp: u32) -> impl Strategy<Value = AMonomial> {
    (prop::collection::vec(0..=max_exp, d), prop::collection::vec(0..=max_exp, d))
        .prop_map(|(x, y)| AMonomial::new(&x, &y))
}

pub fn p_monomial(d: usize, max_x: u32, max_u: u32) -> impl Strategy<Value = PMonomial> {
    (prop::collection::vec(0..=max_x, d), prop::collection::vec(0..=max_u, pair_count(d))).prop_map(
        move |(x, u)| {
            let us: Vec<((usize, usize), u32)> = pairs(d).zip(u).collect();
            PMonomial::new(x, &us).unwrap()
        },
    )
}

pub fn a_poly(d: usize, max_exp: u32, max_terms: usize) -> impl Strategy<Value = APoly> {
    prop::collection::vec((a_monomial(d, max_exp), -5i64..=5), 0..=max_terms)
        .prop_map(move |ts| APoly::from_terms(d, ts.into_iter().map(|(m, c)| (m, int(c)))))
}

pub fn p_poly(d: usize, max_x: u32, max_u: u32, max_terms: usize) -> impl Strategy<Value = PPoly> {
    prop::collection::vec((p_monomial(d, max_x, max_u), -5i64..=5), 0..=max_terms)
        .prop_map(move |ts| PPoly::from_terms(d, ts.into_iter().map(|(m, c)| (m, int(c)))))
}

/// Random instance with `d` polynomials of degree `1..=max_deg`, integer
/// coefficients in `[-5, 5]` and nonzero leading coefficient.
pub fn instance(d: usize, max_deg: usize) -> impl Strategy<Value = ProblemInstance> {
    prop::collection::vec(
        (1..=max_deg).prop_flat_map(|deg| {
            (prop::collection::vec(-5i64..=5, deg), prop_oneof![-5i64..=-1, 1i64..=5])
        }),
        d,
    )
    .prop_map(|fs| {
        let coeffs: Vec<Vec<i64>> = fs
            .into_iter()
            .map(|(mut low, lc)| {
                low.push(lc);
                low
            })
            .collect();
        let refs: Vec<&[i64]> = coeffs.iter().map(|c| c.as_slice()).collect();
        ProblemInstance::from_ints(&refs).unwrap()
    })
}

pub fn nonzero<M: kerdelta::Monomial + 'static>(
    s: impl Strategy<Value = kerdelta::Polynomial<M>>,
) -> impl Strategy<Value = kerdelta::Polynomial<M>> {
    s.prop_filter("nonzero", |p| !p.is_zero())
}

/// Monomial of internal degree at most `max_deg`, as a product of randomly
/// chosen variables.
pub fn p_monomial_deg(d: usize, max_deg: usize) -> impl Strategy<Value = PMonomial> {
    let nvars = d + pair_count(d);
    prop::collection::vec(0..nvars, 0..=max_deg).prop_map(move |vars| {
        let all: Vec<(usize, usize)> = pairs(d).collect();
        let mut m = PMonomial::new(vec![0; d], &[]).unwrap();
        for v in vars {
            if v < d {
                let e = m.x(v + 1);
                m.set_x(v + 1, e + 1);
            } else {
                let (j, k) = all[v - d];
                m = m.with_u(j, k, 1);
            }
        }
        m
    })
}

pub fn p_poly_deg(d: usize, max_deg: usize, max_terms: usize) -> impl Strategy<Value = PPoly> {
    prop::collection::vec((p_monomial_deg(d, max_deg), -5i64..=5), 0..=max_terms)
        .prop_map(move |ts| PPoly::from_terms(d, ts.into_iter().map(|(m, c)| (m, int(c)))))
}
