//! Shared inputs for the criterion benches.

use burau_atlas::{parse_poly, RingDescriptor, RingElem};

/// `ξ = t mod f` over `F_p`.
pub fn xi(p: u64, f: &str) -> RingElem {
    RingElem::generator(&RingDescriptor::new(p, &parse_poly(f).expect("poly")).expect("ring"))
}

/// Enumeration inputs of increasing index: 14, 52, 1484 classes.
pub const ENUMERATION_CASES: [(u64, &str); 3] = [(13, "t+2"), (5, "t^2+2t+4"), (211, "t+150")];
