mod common;

use common::{a_poly, instance, p_poly_deg};
use kerdelta::derivation::f_adic_digits;
use kerdelta::ring::int;
use kerdelta::{f_adic_expand, parse_poly, APoly, GeneratorTable, ProblemInstance, Rational};
use num_traits::Zero;
use proptest::prelude::*;

fn reassemble(f: &APoly, digits: &[APoly]) -> APoly {
    let mut acc = APoly::zero(f.dim());
    let mut power = APoly::one(f.dim());
    for q in digits {
        acc = &acc + &(q * &power);
        power = &power * f;
    }
    acc
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1_000))]

    #[test]
    fn leibniz(inst in instance(3, 3), g in a_poly(3, 2, 4), h in a_poly(3, 2, 4)) {
        let delta = inst.derivation();
        let lhs = delta.apply(&(&g * &h)).unwrap();
        let rhs = &(&delta.apply(&g).unwrap() * &h) + &(&g * &delta.apply(&h).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn linearity(inst in instance(2, 3), g in a_poly(2, 3, 4), h in a_poly(2, 3, 4), a in -4i64..=4, b in -4i64..=4) {
        let delta = inst.derivation();
        let combo = &g.scale(&int(a)) + &h.scale(&int(b));
        let lhs = delta.apply(&combo).unwrap();
        let rhs = &delta.apply(&g).unwrap().scale(&int(a)) + &delta.apply(&h).unwrap().scale(&int(b));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn f_adic_round_trip(
        inst in instance(1, 5),
        g in prop::collection::vec(-9i64..=9, 0..=13),
    ) {
        let g = APoly::from_terms(1, g.iter().enumerate().map(|(e, &c)| {
            (parse_poly::<kerdelta::AMonomial>(&format!("x1^{e}"), 1).unwrap().monomials().next().unwrap().clone(), int(c))
        }));
        let digits = f_adic_expand(&inst, 1, &g).unwrap();
        let m = inst.degree(1);
        for q in &digits {
            prop_assert!(q.total_degree().is_none_or(|deg| deg < m));
        }
        prop_assert_eq!(reassemble(&inst.f_in_a(1), &digits), g);
    }

    #[test]
    fn generators_and_images_are_constants(inst in instance(4, 3), p in p_poly_deg(4, 3, 3)) {
        let table = GeneratorTable::build(&inst);
        let delta = inst.derivation();
        for (_, u) in table.iter() {
            prop_assert!(delta.is_constant(u).unwrap());
        }
        prop_assert!(delta.is_constant(&table.pi(&p).unwrap()).unwrap());
    }

    #[test]
    fn pi_is_a_homomorphism(inst in instance(4, 2), p in p_poly_deg(4, 3, 3), q in p_poly_deg(4, 3, 3)) {
        let t = GeneratorTable::build(&inst);
        prop_assert_eq!(t.pi(&(&p + &q)).unwrap(), &t.pi(&p).unwrap() + &t.pi(&q).unwrap());
        prop_assert_eq!(t.pi(&(&p * &q)).unwrap(), &t.pi(&p).unwrap() * &t.pi(&q).unwrap());
    }
}

#[test]
fn crossing_product_image_is_constant() {
    let inst = ProblemInstance::from_ints(&[&[1, 2], &[0, 0, 1], &[-3, 1], &[0, 1, 1]]).unwrap();
    let table = GeneratorTable::build(&inst);
    let g = table.pi(&parse_poly("u1_2*u3_4", 4).unwrap()).unwrap();
    assert!(inst.derivation().is_constant(&g).unwrap());
    assert!(!g.is_zero());
}

#[test]
fn f_adic_digits_dense() {
    // f = x^2 + 1, g = x^3: digits (-x, x)
    let f: Vec<Rational> = [1, 0, 1].iter().map(|&v| int(v)).collect();
    let g: Vec<Rational> = [0, 0, 0, 1].iter().map(|&v| int(v)).collect();
    let digits = f_adic_digits(&f, &g);
    assert_eq!(digits, vec![vec![int(0), int(-1)], vec![int(0), int(1)]]);
    assert!(digits[0][0].is_zero());
}
