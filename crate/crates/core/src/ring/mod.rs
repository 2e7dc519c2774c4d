//! Exact sparse multivariate polynomials over the rationals.
//!
//! Two ring flavors share one generic [`Polynomial`] container:
//!
//! * `A = K[x_1..x_d, y_1..y_d]`, monomials [`AMonomial`];
//! * `P = K[x_1..x_d, u_{jk} : 1 <= j < k <= d]`, monomials [`PMonomial`].
//!
//! Terms are stored in a `BTreeMap` keyed by the monomial's native order
//! (ALex for `A`, corrected DILL for `P`), so iteration and printing are
//! reproducible. Leading terms under any other admissible order are
//! available through [`MonomialOrder`].

mod monomial;
mod order;
mod parse;
mod poly;

pub use monomial::{pair_count, pair_index, pairs, AMonomial, Monomial, PMonomial, Var};
pub use order::{ALexOrder, MonomialOrder, NativeOrder, PLexOrder};
pub use parse::parse_poly;
pub use poly::Polynomial;

/// Exact rational scalar; the coefficient field `K`.
pub type Rational = num_rational::BigRational;

/// Polynomial over `K[X_d, Y_d]`.
pub type APoly = Polynomial<AMonomial>;
/// Polynomial over `K[X_d, U_d]`.
pub type PPoly = Polynomial<PMonomial>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RingError {
    #[error("dimension mismatch: d={left} vs d={right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("variable {var} out of range for d={d}")]
    IndexOutOfRange { var: String, d: usize },
    #[error("u-variable u{j}_{k} must have j < k")]
    PairNotAscending { j: usize, k: usize },
    #[error("variable {var} does not belong to this ring")]
    ForeignVariable { var: String },
}

/// Builds a rational from an integer.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
