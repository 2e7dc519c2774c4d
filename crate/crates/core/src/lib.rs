//! Constants of the derivation `Δ = Σ f_i(x_i) ∂/∂y_i` on `K[x_1..x_d, y_1..y_d]`.
//!
//! Given nonconstant univariate `f_1, ..., f_d` over the rationals, this
//! crate builds the generators `x_i` and `u_{jk} = f_j(x_j) y_k - f_k(x_k) y_j`,
//! the defining relations `R ∪ S`, checks that they form a reduced Gröbner
//! basis under the DILL order, enumerates the normal-word basis of the
//! algebra of constants, and rewrites any constant in terms of the generators.
//!
//! ```
//! use kerdelta::{GeneratorTable, ProblemInstance, parse_poly, rewrite_constant};
//!
//! let inst = ProblemInstance::monomial(&[1, 1]).unwrap();
//! let table = GeneratorTable::build(&inst);
//! let g = parse_poly("x1*y2 - x2*y1", 2).unwrap();
//! assert_eq!(rewrite_constant(&table, &g).unwrap().to_string(), "u1_2");
//! ```

pub mod derivation;
pub mod dill_gb;
pub mod kernel_basis;
pub mod linalg;
pub mod presentation;
pub mod ring;

pub use derivation::{f_adic_expand, Derivation, DerivationError, InstanceError, InstanceFile, ProblemInstance};
pub use dill_gb::{
    buchberger_complete, dill_compare, reduce, s_polynomial, verify_groebner,
    verify_lead_conformance, DillKey, DillOrder, GbError, GroebnerReport, OrderVariant,
};
pub use kernel_basis::{
    enumerate_normal_words, independence_check, is_normal_word, kernel_dim_oracle, lead_of_image,
    recover_word_from_lead, rewrite_constant, DegreeMeasure, KernelError, NormalWord,
};
pub use presentation::{build_relations, GeneratorTable, Relation, RelationLabel, RelationSet};
pub use ring::{
    parse_poly, ALexOrder, AMonomial, APoly, Monomial, MonomialOrder, PMonomial, PPoly,
    Polynomial, Rational, RingError, Var,
};
