use num_traits::One;

use crate::derivation::ProblemInstance;
use crate::ring::{AMonomial, Monomial, PMonomial, Polynomial, Rational};

use super::{is_normal_word, KernelError, NormalWord};

/// ALex-leading monomial and coefficient of `π(v)` without expanding it:
/// `x^a · Π_b x_{j_b}^{m_{j_b}} y_{k_b}` with coefficient `Π_b lc_{j_b}`.
pub fn lead_of_image(
    instance: &ProblemInstance,
    v: &PMonomial,
) -> Result<(AMonomial, Rational), KernelError> {
    if !is_normal_word(instance, v) {
        return Err(KernelError::NotNormal { word: Polynomial::monomial(v.clone()).to_string() });
    }
    let d = instance.d();
    let mut w = AMonomial::new(v.x_exponents(), &vec![0; d]);
    let mut coeff = Rational::one();
    for (j, k, e) in v.u_factors() {
        w.set_x(j, w.x(j) + e * instance.degree(j));
        w.set_y(k, w.y(k) + e);
        for _ in 0..e {
            coeff *= instance.leading_coeff(j);
        }
    }
    Ok((w, coeff))
}

fn show(w: &AMonomial) -> String {
    Polynomial::monomial(w.clone()).to_string()
}

/// Inverts [`lead_of_image`] by peeling: take the smallest `k` with a
/// positive `y_k` exponent, the largest `i < k` with `x_i` exponent at least
/// `m_i`, emit `u_{ik}` and divide by `x_i^{m_i} y_k`. The pure-`x` rest is
/// the `x^a` part.
pub fn recover_word_from_lead(
    instance: &ProblemInstance,
    w: &AMonomial,
) -> Result<NormalWord, KernelError> {
    let d = instance.d();
    assert_eq!(w.dim(), d, "monomial dimension differs from the instance");
    let mut rest = w.clone();
    let mut word = PMonomial::one(d);
    while let Some(k) = (1..=d).find(|&k| rest.y(k) > 0) {
        let Some(i) = (1..k).rev().find(|&i| rest.x(i) >= instance.degree(i)) else {
            return Err(KernelError::PeelingFailure { at: show(&rest), k });
        };
        rest.set_x(i, rest.x(i) - instance.degree(i));
        rest.set_y(k, rest.y(k) - 1);
        word = word.with_u(i, k, 1);
    }
    for i in 1..=d {
        word.set_x(i, rest.x(i));
    }
    let not_a_lead = || KernelError::NotALead { monomial: show(w) };
    let normal = NormalWord::new(instance, word).map_err(|_| not_a_lead())?;
    match lead_of_image(instance, normal.monomial()) {
        Ok((back, _)) if back == *w => Ok(normal),
        _ => Err(not_a_lead()),
    }
}
