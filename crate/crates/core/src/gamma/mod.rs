//! The ring spanned by stable Grothendieck polynomials: structure constants
//! for products, coproducts and skew functions, and arithmetic on elements.

mod coeffs;
mod element;
mod ops;

pub use coeffs::{alpha_skew, c_coeff, d_coeff, multi_coeff};
pub use element::{GammaElement, TensorElement, TruncatedGammaSeries};
pub use ops::{
    antipode, basis_coproduct, basis_product, conjugate_element, coproduct, multiply, multiply_truncated, phi_p,
    pieri_coproduct, pieri_product, skew_expansion, sslash_element, t_inverse_mult, tensor_multiply,
};
