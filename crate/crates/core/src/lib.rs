//! Subgroup lattices and normalizer sets of small finite groups.
//!
//! Groups are materialized as Cayley tables (at most [`MAX_ORDER`]
//! elements). From a group the crate enumerates every subgroup, computes
//! `N_G(H)` for each of them, the set `N_G` of subgroups that occur as
//! normalizers, the deficiency `k = |L(G)| - |N_G|`, and whether the
//! normalizers are dense in the lattice. The [`zm`] module implements the
//! closed-form subgroup description of the metacyclic groups `ZM(m,n,r)`.
//!
//! ```
//! use normlattice::{analyze, build_from_spec};
//!
//! let a4 = build_from_spec("A4").unwrap();
//! let record = analyze(&a4);
//! assert_eq!(record.lattice_size, 10);
//! assert_eq!(record.deficiency, 4);
//! ```

pub mod analysis;
pub mod arith;
pub mod catalog;
pub mod cayley;
pub mod classify;
pub mod constructors;
pub mod elements;
pub mod group;
pub mod lattice;
pub mod normalizers;
pub mod spec;
pub mod sweep;
pub mod zm;

/// Largest supported group order.
pub const MAX_ORDER: usize = 512;

pub use analysis::{analyze, Analysis, AnalysisRecord};
pub use arith::{multiplicative_order, tau};
pub use cayley::{load_cayley_table, CayleyError};
pub use constructors::{
    direct_product, make_alternating, make_cyclic, make_dihedral, make_quaternion, make_symmetric,
    make_zm, ConstructError,
};
pub use elements::ElementSet;
pub use group::{Group, GroupError, Subgroup};
pub use lattice::{enumerate_subgroups, LatticeError, SubgroupLattice};
pub use normalizers::{
    has_dense_normalizers, normalizer, normalizer_report, unique_subgroup_of_order_p,
    DensityVerdict, NormalizerReport,
};
pub use spec::{build_from_spec, parse_group_spec, GroupSpec, SpecError};
pub use zm::{
    enumerate_l, subgroup_from_triple, validate_zm_triple, verify_bijection, zm_search,
    BijectionReport, ZmError, ZmHit, ZmSubgroupTriple, ZmTriple,
};
