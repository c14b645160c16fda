//! Stable Grothendieck polynomials and their K-theoretic Littlewood-Richardson
//! coefficients, computed by counting set-valued tableaux and checked against
//! independent polynomial computations.

pub mod error;
pub mod gamma;
pub mod grassmann;
pub mod insertion;
pub mod oracle;
pub mod shapes;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
