mod common;

use std::cmp::Ordering;

use common::{instance, p_poly_deg};
use kerdelta::kernel_basis::{
    image_degree, is_normal_by_divisibility, DegreeMeasure, DEFAULT_MONOMIAL_BUDGET,
};
use kerdelta::{
    enumerate_normal_words, independence_check, is_normal_word, kernel_dim_oracle, lead_of_image,
    recover_word_from_lead, rewrite_constant, ALexOrder, AMonomial, GeneratorTable, Monomial,
    MonomialOrder, OrderVariant, PMonomial, ProblemInstance,
};
use proptest::prelude::*;

fn all_p_monomials(d: usize, max: u32) -> Vec<PMonomial> {
    let nvars = d + kerdelta::ring::pair_count(d);
    let pairs: Vec<(usize, usize)> = kerdelta::ring::pairs(d).collect();
    let mut out = vec![PMonomial::one(d)];
    let mut frontier = vec![(PMonomial::one(d), 0usize)];
    for _ in 0..max {
        let mut next = Vec::new();
        for (m, start) in &frontier {
            for v in *start..nvars {
                let mut n = m.clone();
                if v < d {
                    n.set_x(v + 1, n.x(v + 1) + 1);
                } else {
                    n = n.with_u(pairs[v - d].0, pairs[v - d].1, 1);
                }
                next.push((n, v));
            }
        }
        out.extend(next.iter().map(|(m, _)| m.clone()));
        frontier = next;
    }
    out
}

#[test]
fn normality_matches_divisibility_exhaustively() {
    let degree_sets: &[&[usize]] = &[
        &[1, 1, 1],
        &[2, 1, 3],
        &[1, 1, 1, 1],
        &[3, 2, 1, 2],
        &[1, 1, 1, 1, 1],
        &[2, 3, 1, 2, 4],
    ];
    for m in degree_sets {
        let inst = ProblemInstance::monomial(m).unwrap();
        let monomials = all_p_monomials(m.len(), 4);
        for v in &monomials {
            assert_eq!(
                is_normal_word(&inst, v),
                is_normal_by_divisibility(&inst, v),
                "disagreement on {v:?} for m={m:?}"
            );
        }
    }
}

#[test]
fn exhaustive_monomial_count() {
    // C(6 + 2, 2) monomials of degree <= 2 in 6 variables
    assert_eq!(all_p_monomials(3, 2).len(), 28);
}

#[test]
fn key_inequality_of_generator_leads() {
    for d in 2..=5 {
        for mj in 1..=6u32 {
            for mk in 1..=6u32 {
                for j in 1..=d {
                    for k in j + 1..=d {
                        let mut left = AMonomial::one(d);
                        left.set_x(j, mj);
                        left.set_y(k, 1);
                        let mut right = AMonomial::one(d);
                        right.set_y(j, 1);
                        right.set_x(k, mk);
                        assert_eq!(ALexOrder.compare(&left, &right), Ordering::Greater);
                    }
                }
            }
        }
    }
}

fn sample_instances() -> Vec<ProblemInstance> {
    vec![
        ProblemInstance::monomial(&[1, 1, 1, 1]).unwrap(),
        ProblemInstance::from_ints(&[&[0, 1], &[1, 0, 1], &[2, 0, 1]]).unwrap(),
        ProblemInstance::from_ints(&[&[1, -2, 3], &[0, 4], &[5, -3, 0, 1], &[-2, 1, 1]]).unwrap(),
        ProblemInstance::from_ints(&[&[1, 1], &[0, 0, 2], &[3, 1], &[0, 1, 1], &[1, 0, 1]]).unwrap(),
    ]
}

#[test]
fn enumerated_words_round_trip_through_their_leads() {
    for inst in sample_instances() {
        let t = GeneratorTable::build(&inst);
        let words = enumerate_normal_words(&t, 6, DegreeMeasure::Image, OrderVariant::Corrected);
        assert!(!words.is_empty());
        for w in &words {
            let (lead, coeff) = lead_of_image(&inst, w.monomial()).unwrap();
            let image = t.pi_monomial(w.monomial());
            let (direct, direct_c) = image.leading_term(&ALexOrder).unwrap();
            assert_eq!((&lead, &coeff), (direct, direct_c), "lead mismatch for {w}");
            assert_eq!(&recover_word_from_lead(&inst, &lead).unwrap(), w);
            assert!(image_degree(&t, w.monomial()) <= 6);
        }
    }
}

#[test]
fn independence_for_mixed_degrees() {
    let inst = ProblemInstance::monomial(&[1, 2, 2]).unwrap();
    let t = GeneratorTable::build(&inst);
    let rep = independence_check(&t, 5, DEFAULT_MONOMIAL_BUDGET).unwrap();
    assert!(rep.passed(), "{rep:?}");
    assert!(rep.words > 50);
}

#[test]
fn nullspace_basis_rewrites() {
    for inst in sample_instances().into_iter().take(2) {
        let t = GeneratorTable::build(&inst);
        let slice = kernel_dim_oracle(&inst, 4, DEFAULT_MONOMIAL_BUDGET).unwrap();
        for g in &slice.basis {
            let h = rewrite_constant(&t, g).unwrap();
            assert_eq!(&t.pi(&h).unwrap(), g);
            assert!(h.monomials().all(|m| is_normal_word(&inst, m)));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn rewrite_round_trips_random_constants(
        (inst, p) in (2usize..=5).prop_flat_map(|d| (instance(d, 3), p_poly_deg(d, 3, 4))),
    ) {
        let t = GeneratorTable::build(&inst);
        let g = t.pi(&p).unwrap();
        let h = rewrite_constant(&t, &g).unwrap();
        prop_assert_eq!(t.pi(&h).unwrap(), g);
        for m in h.monomials() {
            prop_assert!(is_normal_word(&inst, m));
        }
    }
}
