//! Independent polynomial computations used to check the counting rules:
//! tableau sums, Hecke-algebra products, divided differences, Schur
//! transitions and basis expansions.

mod hecke;
mod plactic;
mod poly;
mod schubert;
mod sums;

pub use hecke::{demazure_product, hecke_grothendieck, HeckeElement, HeckeSide};
pub use plactic::plactic_equivalent;
pub use poly::{Exponents, TruncatedPolynomial, MAX_VARS};
pub use schubert::{
    alpha_w, divided_difference_double, divided_difference_grothendieck, double_g, expand_in_stable_basis,
    g_w_lambda, grothendieck_basis_expand, schur_g_transition, stable_limit, SchurExpansion, SchurGTransition,
    StableExpansion,
};
pub use sums::{classical_lr, g_lambda_mu, schur_polynomial, svt_polynomial};
