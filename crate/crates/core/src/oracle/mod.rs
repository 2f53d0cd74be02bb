//! Brute-force element orders of small concrete groups.

mod matrix;
mod partitions;
mod perm;

pub use matrix::{
    matrix_group_spectrum, GaloisField, MatrixOverGf, MatrixVariant, MAX_FIELD_ORDER,
    MAX_MATRIX_SPACE,
};
pub use partitions::{an_spectrum, for_each_partition, sn_spectrum, MAX_PARTITION_DEGREE};
pub use perm::{
    alternating_generators, centralizer_spectrum, direct_product_generators, perm_group_elements,
    perm_group_spectrum, product_spectrum, swap_extension_generators, symmetric_generators,
    Permutation, DEFAULT_ORDER_CAP,
};
