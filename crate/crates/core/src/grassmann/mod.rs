//! Cohomology rings of real and oriented Grassmannians `G_{n,k}`,
//! `G~_{n,k}` for `k <= 3`, as presented graded GF(2)-algebras.

mod families;
mod gysin;
mod maps;
mod rings;

pub use families::{fukaya_family, g_poly, wbar, wbar_closed, wbar_sequence};
pub use gysin::{gysin_dims, gysin_dims_with};
pub use maps::{
    kernel_intersection, mult_w1, multiplication_map, restriction_map, ring_hom, GradedLinearMap,
    MapKind, RestrictionKind,
};
pub use rings::{
    borel_ring, image_ring, oriented_ring, oriented_ring_k2, Case, DirectCompute, GbProvider,
    GrassmannParams, RingKey, T_MAX, T_MIN,
};

/// `2^t`.
pub fn pow2(t: u32) -> u32 {
    1 << t
}
