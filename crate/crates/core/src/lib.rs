//! Brauer configurations and the Cartan matrices of their algebras.
//!
//! A [`BrauerConfiguration`] determines a quiver with relations, hence a
//! finite-dimensional algebra Λ. This crate builds the quiver
//! ([`quiver`]), cuts the closed walks of each vertex into intervals
//! ([`intervals`]), and computes every Cartan number of Λ straight from the
//! configuration ([`cartan`]). The [`oracle`] recounts the same numbers by
//! listing basis paths, for cross-checking.
//!
//! ```
//! use brauer_core::{cartan_matrix, fixtures::example_configuration};
//!
//! let config = example_configuration();
//! let m = cartan_matrix::<u64>(&config).unwrap();
//! assert_eq!(m.row(2), &[4, 4, 10, 2]);
//! assert_eq!(m.entry_sum().unwrap(), 48);
//! ```

pub mod cartan;
pub mod document;
pub mod error;
pub mod export;
pub mod fixtures;
pub mod generator;
pub mod intervals;
pub mod model;
pub mod oracle;
pub mod quiver;
pub mod scalar;

pub use cartan::{
    algebra_dimension, cartan_diagonal, cartan_matrix, cartan_off_diagonal, hom_nonzero,
    CartanMatrix,
};
pub use error::{Error, Result};
pub use intervals::{build_diagram, interval_occurrences, IntervalDiagram};
pub use model::{
    is_truncated, occ, polygons_containing, val, validate, vertex_set, BrauerConfiguration,
    Multiset, Polygon, PolygonId, SuccessorSequence, VertexId, Violation, ViolationKind,
};
pub use oracle::{enumerate_basis, oracle_cartan_matrix, BasisKind, BasisPath};
pub use quiver::{
    build_quiver, first_arrow, generate_relations, special_cycles, special_cycles_at, Arrow,
    ArrowIx, Quiver, QuiverVertex, RelationSet, SpecialCycle,
};
pub use scalar::Count;

/// Cartan matrix over machine words; overflow is reported, not wrapped.
pub type CartanMatrix64 = CartanMatrix<u64>;

/// Arbitrary-precision Cartan matrix.
pub type ExactCartanMatrix = CartanMatrix<num_bigint::BigUint>;

/// Arbitrary-precision count.
pub type ExactCount = num_bigint::BigUint;
