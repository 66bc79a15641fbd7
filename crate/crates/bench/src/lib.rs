//! Fixtures shared by the benchmarks.

use signix_core::{FamilySpec, SignedCompleteGraph};

/// `U_1` with `k` edges inside `K_n`.
pub fn u1(n: usize, k: usize) -> SignedCompleteGraph {
    let h = FamilySpec::U1 { k }.build().expect("valid family");
    SignedCompleteGraph::new(n, &h).expect("fits in K_n")
}
