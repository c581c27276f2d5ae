//! Partitions, permutations, cycle types and conjugacy classes.

mod partition;
mod permutation;

pub use partition::{enumerate_partitions, partitions_up_to, Partition};
pub use permutation::{
    all_permutations, centralizer_order, conjugacy_class_size, cycle_type, reflection_length,
    CycleType, Permutation,
};
