//! Borel orbits in two settings and the bridge between them.
//!
//! * Square-zero strictly upper-triangular matrices: orbits are labelled by
//!   [`Involution`]s, ordered by [`melnikov_leq`].
//! * Products of two Grassmannians: orbits inside a product of Schubert cells
//!   are labelled by [`ConsistentInvolution`]s, ordered by [`restricted_leq`].
//!
//! The [`linalg`] and [`realize`] modules realize every orbit representative
//! with exact rational matrices, and [`verify`] runs the exhaustive checks
//! that tie the two settings together.
//!
//! Indices are 1-based throughout the public interface.

pub mod bruhat;
pub mod error;
pub mod export;
pub mod grassmann;
pub mod involution;
pub mod linalg;
pub mod poset;
pub mod realize;
pub mod render;
pub mod verify;

pub use bruhat::{bruhat_leq, compare_orders, OrderComparison, Permutation};
pub use error::{Error, Result};
pub use grassmann::{
    codimension_d, consistent_involutions, covering_comparison, enumerate_consistent,
    max_orbit_involution, min_orbit_involution, restricted_leq, restricted_rank_table,
    verify_restriction_theorem, BitString, Color, Coloring, ConsistentInvolution, Partition,
};
pub use involution::{
    arc_diagram, crossing_count, enumerate_involutions, involution_from_rank_table, melnikov_leq,
    orbit_dimension, rank_table, ArcDiagram, HalflinePolicy, Involution, RankTable,
};
pub use linalg::{RationalMatrix, Subspace};
pub use poset::{hasse, Poset};
pub use realize::{
    canonical_pair, conjugate, identify_orbit, is_square_zero, random_borel, schubert_profile,
    slice_embed, slice_subspaces, southwest_rank_table, strict_upper_from_involution, SlicePoint,
};
