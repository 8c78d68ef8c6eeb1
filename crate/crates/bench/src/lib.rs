//! Fixture groups shared by the benchmarks.

use normlattice::{build_from_spec, Group};

/// Groups spanning the supported range: small, mid-sized with many
/// subgroups, and the largest orders the sweeps reach.
pub const SPECS: &[&str] = &["A4", "S4", "ZM(7,6,3)", "A5", "Q16 x Z3", "D64 x Z2", "S5"];

pub fn fixture(spec: &str) -> Group {
    build_from_spec(spec).expect("fixture specs are valid")
}
