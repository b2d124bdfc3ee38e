//! Equivariant endomorphism monoids of finite group actions.
//!
//! Given a finite group acting on a finite set, this crate computes the full
//! orbit/stabilizer classification, the relative rank of the equivariant
//! endomorphism monoid modulo its automorphism group via a closed formula,
//! explicit generating sets realizing that rank, and cross-checks everything
//! against an independent brute-force enumeration oracle.

pub mod action;
pub mod cli;
pub mod equivariant;
pub mod group;
pub mod io;
pub mod oracle;
pub mod rank;

pub use action::{ActionError, Classification, GAction, StabilizerClass};
pub use equivariant::{
    classify_elementary_collapsing, collapsing, extend_by_identity, is_equivariant, orbit_swap,
    translation, CollapsingType, GMap, KernelRelation, MapError,
};
pub use group::{FiniteGroup, GroupError, Subgroup, SubgroupClass};
pub use oracle::{
    all_subgroups, aut_generators, check_invariant_suite, collapsing_types, enumerate_aut,
    enumerate_end, generates_modulo_aut, min_generating_size, monoid_closure, verify_lower_bound,
    MapSet, OracleError,
};
pub use rank::{
    aut_order, end_order, generating_set_v, generating_set_w, kappa, rank_report, relative_rank,
    u_set, RankError, RankReport, TypedGenerator,
};
