//! Column bumping for set-valued tableaux and its inverse.

mod bump;
mod product;

pub use bump::{
    insert_set, insert_single, is_valid_column, reverse_set, reverse_single, reverse_star, BumpOutcome, BumpRule,
    Column, Guard, ReverseRule,
};
pub use product::{factorize, multiply_box, multiply_column, reverse_strip, MarkedProduct};
