use alloc::vec::Vec;

use super::maps::mult_w1;
use super::rings::{DirectCompute, GbProvider, RingKey};
use crate::error::Error;

/// Mod-2 Betti numbers of `G~_{n,k}` predicted from the Gysin sequence of
/// the double cover `G~_{n,k} -> G_{n,k}`:
///
/// `dim H^r(G~) = dim H^r(G) - rank(w1: H^{r-1} -> H^r) + dim ker(w1: H^r -> H^{r+1})`.
///
/// Uses only the Borel ring, never a presentation of the oriented ring.
pub fn gysin_dims(n: u32, k: u32, up_to: u32) -> Result<Vec<usize>, Error> {
    gysin_dims_with(&DirectCompute, n, k, up_to)
}

pub fn gysin_dims_with(
    provider: &dyn GbProvider,
    n: u32,
    k: u32,
    up_to: u32,
) -> Result<Vec<usize>, Error> {
    let mut ring = provider.quotient(&RingKey::Borel { n, k })?;
    ring.seal_to(up_to + 1)?;
    let mut w1 = mult_w1(&ring)?;
    let mut ranks = Vec::with_capacity(up_to as usize + 1);
    for r in 0..=up_to {
        ranks.push(w1.matrix(r)?.rank());
    }
    (0..=up_to)
        .map(|r| {
            let dim = ring.dim(r)?;
            let incoming = if r == 0 { 0 } else { ranks[r as usize - 1] };
            let kernel = dim - ranks[r as usize];
            Ok(dim - incoming + kernel)
        })
        .collect()
}
