//! The degree / interval-length / lexicographic (DILL) order on
//! `K[X_d, U_d]`, polynomial reduction, S-polynomials, and the machine
//! check that `R ∪ S` is a reduced Gröbner basis.
//!
//! Each `u_{jk}` is associated with the open interval `(j, k)`. Two order
//! variants exist:
//!
//! * [`OrderVariant::Corrected`] (default): `deg_U`, then total interval
//!   length, then `deg_X`, then lexicographic on exponents with precedence
//!   `u_{1,2} > u_{1,3} > ... > u_{d-1,d} > x_1 > ... > x_d`. Under it the
//!   leading monomials are `u_{ik} u_{jl}` for `r(i,j,k,l)` and
//!   `x_j^{m_j} u_{ik}` for `s(i,j,k)`.
//! * [`OrderVariant::PaperLiteral`]: `deg_X`, then `deg_U`, then interval
//!   length, then the index tuple `ω = (i_1..i_p, j_1..j_q, k_1..k_q)` with the
//!   larger tuple winning. This reading picks different leading monomials and
//!   is kept for experiments; [`verify_lead_conformance`] flags it.

mod groebner;
mod order;
mod verify;

pub use groebner::{
    buchberger_complete, interreduce, reduce, reduce_with_steps, s_polynomial, Completion,
    GbError, Reduction, DEFAULT_PAIR_BUDGET,
};
pub(crate) use order::compare_corrected;
pub use order::{dill_compare, DillKey, DillOrder, OrderVariant};
pub use verify::{
    expected_lead, normal_form, verify_groebner, verify_lead_conformance, verify_reduced, GroebnerReport,
    LeadEntry, LeadReport, PairOutcome, ReducednessReport,
};
