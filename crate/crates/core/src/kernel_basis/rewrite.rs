use crate::presentation::GeneratorTable;
use crate::ring::{ALexOrder, APoly, PPoly, Polynomial};

use super::{lead_of_image, recover_word_from_lead, KernelError};

/// Writes a constant `g ∈ K[X_d, Y_d]^Δ` as a combination `h` of normal
/// words with `π(h) = g`.
///
/// Repeatedly reads the ALex-leading monomial `w` of `g`, recovers the
/// normal word `v` with that lead, and subtracts the matching multiple of
/// `π(v)`.
pub fn rewrite_constant(table: &GeneratorTable, g: &APoly) -> Result<PPoly, KernelError> {
    let instance = table.instance();
    if !instance.derivation().is_constant(g)? {
        return Err(KernelError::NotConstant);
    }
    let mut rest = g.clone();
    let mut out = PPoly::zero(instance.d());
    while let Ok((w, c)) = rest.leading_term(&ALexOrder) {
        let v = recover_word_from_lead(instance, w)?;
        let (_, lc) = lead_of_image(instance, v.monomial())?;
        let factor = c / &lc;
        let image = table.pi_monomial(v.monomial());
        rest = &rest - &image.scale(&factor);
        out = &out + &Polynomial::term(v.into_inner(), factor);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derivation::ProblemInstance;
    use crate::kernel_basis::is_normal_word;
    use crate::ring::parse_poly;

    fn a(s: &str, d: usize) -> APoly {
        parse_poly(s, d).unwrap()
    }

    fn p(s: &str, d: usize) -> PPoly {
        parse_poly(s, d).unwrap()
    }

    #[test]
    fn pure_x_is_fixed() {
        let inst = ProblemInstance::monomial(&[1, 1]).unwrap();
        let t = GeneratorTable::build(&inst);
        assert_eq!(rewrite_constant(&t, &a("x1^3", 2)).unwrap(), p("x1^3", 2));
    }

    #[test]
    fn generator_rewrites_to_itself() {
        let inst = ProblemInstance::monomial(&[1, 1]).unwrap();
        let t = GeneratorTable::build(&inst);
        assert_eq!(rewrite_constant(&t, &a("x1*y2 - x2*y1", 2)).unwrap(), p("u1_2", 2));
    }

    #[test]
    fn non_constant_is_rejected() {
        let inst = ProblemInstance::monomial(&[1, 1]).unwrap();
        let t = GeneratorTable::build(&inst);
        assert_eq!(rewrite_constant(&t, &a("y1", 2)), Err(KernelError::NotConstant));
    }

    #[test]
    fn non_normal_input_round_trips() {
        let inst = ProblemInstance::from_ints(&[&[1, 1], &[0, 0, 2], &[0, 1], &[-1, 0, 1]]).unwrap();
        let t = GeneratorTable::build(&inst);
        let q = p("u1_2*u3_4 + 5*x1*u2_3 + u1_3*u2_4 - x2^2*u1_3", 4);
        let g = t.pi(&q).unwrap();
        let h = rewrite_constant(&t, &g).unwrap();
        assert_eq!(t.pi(&h).unwrap(), g);
        for m in h.monomials() {
            assert!(is_normal_word(&inst, m));
        }
    }

    #[test]
    fn zero_rewrites_to_zero() {
        let inst = ProblemInstance::monomial(&[2, 1, 1]).unwrap();
        let t = GeneratorTable::build(&inst);
        assert!(rewrite_constant(&t, &APoly::zero(3)).unwrap().is_zero());
    }
}
