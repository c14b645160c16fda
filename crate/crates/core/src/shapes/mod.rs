//! Partitions, skew shapes, strips and the permutations attached to them.

mod partition;
mod permutation;
mod skew;

pub use partition::{partitions_in_box, partitions_of, partitions_up_to, subpartitions, superpartitions, Partition};
pub use permutation::{all_permutations, grassmannian_permutation, skew_to_permutation, Permutation};
pub use skew::{
    rook_strip_additions, rook_strip_removals, skew_shapes_in_box, star, vertical_strip_additions, SkewShape,
    StripKind,
};
