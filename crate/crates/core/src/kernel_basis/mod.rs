//! The vector-space basis of the algebra of constants and the constructive
//! rewriting of constants in terms of `x_i` and `u_{jk}`.
//!
//! A monomial of `K[X_d, U_d]` is a *normal word* when
//!
//! 1. no two of its `u`-factors have crossing intervals
//!    (`j_b < j_c < k_b < k_c`), and
//! 2. every `x_i` with `i` strictly inside some factor interval has
//!    exponent below `m_i`.
//!
//! Their images under `π` form a basis, and the ALex-leading monomial of an
//! image determines the word. [`rewrite_constant`] runs this backwards.

mod lead;
mod normal;
mod oracle;
mod rewrite;

pub use lead::{lead_of_image, recover_word_from_lead};
pub use normal::{
    enumerate_normal_words, is_normal_by_divisibility, is_normal_word, DegreeMeasure, NormalWord,
};
pub use oracle::{
    image_degree, independence_check, kernel_dim_oracle, IndependenceReport, KernelSlice,
    DEFAULT_MONOMIAL_BUDGET,
};
pub use rewrite::rewrite_constant;

use crate::derivation::DerivationError;
use crate::ring::RingError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KernelError {
    #[error("{word} is not a normal word")]
    NotNormal { word: String },
    #[error("peeling failed at {at}: no index i < {k} with x{k}-side exponent >= m_i")]
    PeelingFailure { at: String, k: usize },
    #[error("{monomial} is not the leading monomial of any normal image")]
    NotALead { monomial: String },
    #[error("not a constant")]
    NotConstant,
    #[error("{count} monomials exceed the budget of {budget}")]
    BudgetExceeded { count: usize, budget: usize },
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Derivation(#[from] DerivationError),
}
