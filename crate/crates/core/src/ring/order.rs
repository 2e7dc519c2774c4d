use std::cmp::Ordering;

use super::{AMonomial, Monomial, PMonomial};

/// A total admissible comparison on monomials of one ring flavor.
pub trait MonomialOrder<M>: Sync {
    fn compare(&self, a: &M, b: &M) -> Ordering;

    /// True when this order coincides with the monomial's own `Ord`, which
    /// lets leading terms be read off the sorted term map.
    fn is_native(&self) -> bool {
        false
    }
}

impl<M, O: MonomialOrder<M> + ?Sized> MonomialOrder<M> for &O {
    fn compare(&self, a: &M, b: &M) -> Ordering {
        (**self).compare(a, b)
    }

    fn is_native(&self) -> bool {
        (**self).is_native()
    }
}

/// The monomial type's own `Ord`.
#[derive(Debug, Clone, Copy, Default)]
pub struct NativeOrder;

impl<M: Monomial> MonomialOrder<M> for NativeOrder {
    fn compare(&self, a: &M, b: &M) -> Ordering {
        a.cmp(b)
    }

    fn is_native(&self) -> bool {
        true
    }
}

/// Lexicographic order on `K[X_d, Y_d]` comparing `(a_1, b_1, ..., a_d, b_d)`.
#[derive(Debug, Clone, Copy, Default)]
pub struct ALexOrder;

impl MonomialOrder<AMonomial> for ALexOrder {
    fn compare(&self, a: &AMonomial, b: &AMonomial) -> Ordering {
        a.exponents().cmp(b.exponents())
    }

    fn is_native(&self) -> bool {
        true
    }
}

/// Plain lexicographic order on `K[X_d, U_d]` with precedence
/// `u_{1,2} > u_{1,3} > ... > u_{d-1,d} > x_1 > ... > x_d`.
#[derive(Debug, Clone, Copy, Default)]
pub struct PLexOrder;

impl MonomialOrder<PMonomial> for PLexOrder {
    fn compare(&self, a: &PMonomial, b: &PMonomial) -> Ordering {
        a.u_exponents()
            .cmp(b.u_exponents())
            .then_with(|| a.x_exponents().cmp(b.x_exponents()))
    }
}
