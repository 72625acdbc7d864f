//! Bounds on the chromatic number of the plane with an interval of
//! forbidden distances `[1, d]`.
//!
//! The crate computes and verifies both sides of the bound:
//!
//! * lower bounds on `d(chi)` from colored tilings of the plane and of
//!   annuli ([`tilings`]),
//! * upper bounds from finite graphs on the hexagonal lattice (e-graphs)
//!   and on concentric circles (w-graphs) that are shown non-colorable by
//!   a SAT solver ([`graphs`], [`colorsat`]),
//! * upper bounds from point packings of q-cliques ([`packing`]),
//!
//! and assembles them into a per-chi ledger from which "islands of
//! certainty" (ranges of `d` where `chi(d)` is known exactly) are derived
//! ([`bounds`]).
//!
//! See the `examples/` directory for one runnable example per capability,
//! and the `chi` binary for the batch command-line front end.

pub mod bounds;
pub mod colorsat;
pub mod data;
pub mod geometry;
pub mod graphs;
pub mod hunt;
pub mod lattice;
pub mod packing;
pub mod store;
pub mod tilings;

pub use bounds::{BoundsLedger, BoundsRecord, IslandRow, IslandStatus};
pub use colorsat::{CnfInstance, SolveOutcome, SolveStatus};
pub use graphs::{ColoringInstance, EGraphSpec, WGraphSpec};
pub use lattice::{LatticeVector, LoeschianTable};
pub use packing::PackingResult;
pub use tilings::{TilingReport, TilingSpec};

/// Schema version stamped into every JSON payload the tools emit.
pub const SCHEMA_VERSION: u32 = 1;
