//! Exact-arithmetic toolkit for matchings of graphs and of tree complements.
//!
//! The crate computes matching count vectors `m(G,k)`, matching polynomials,
//! Hosoya indices and matching energies with exact integer arithmetic, moves
//! between a graph and its complement analytically (no recursion on dense
//! graphs), enumerates all non-isomorphic free trees of a given order, builds
//! the named extremal tree families, applies six matching-count-monotone tree
//! transformations with their exact difference identities, and re-verifies
//! the extremal statements exhaustively at desk scale.
//!
//! Everything is a pure function over immutable values; sweeps parallelize
//! over trees with results independent of the schedule.

pub mod canon;
pub mod codec;
pub mod complement;
pub mod energy;
pub mod enumerate;
mod error;
pub mod families;
pub mod graph;
pub mod matchpoly;
pub mod oracle;
mod sturm;
pub mod transforms;
pub mod verify;

pub use canon::{canonical_code, TreeCode};
pub use complement::{double_factorial, lovasz_transform};
pub use energy::{
    matching_energy, matching_energy_integral, matching_roots, quasi_compare, EnergyValue,
    QuasiOrderResult, Root,
};
pub use error::Error;
pub use families::{build_family, Family, FamilySpec};
pub use graph::Graph;
pub use matchpoly::{
    disjoint_union_counts, hosoya_index, matching_counts, matching_polynomial, path_counts,
    MatchingPolynomial, MatchingVector,
};

/// Convenient result alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;
