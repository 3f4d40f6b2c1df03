//! Sheets, target-map monodromy and component genera for Hurwitz spaces of
//! fully-marked admissible covers of a genus-0 curve.
//!
//! The pipeline for a space with four marked fibers:
//!
//! 1. [`enumerate_sheets`] lists one canonical [`MarkedTuple`] per
//!    simultaneous-conjugacy class of fully-marked monodromy representations.
//! 2. [`build_sheet_graph`] applies the moves around `0`, `1` and `∞` to every
//!    sheet and records the induced permutations of the sheet set.
//! 3. [`components`] splits the sheets into orbits and computes, per
//!    component, the degree of the target map, its ramification over the
//!    boundary and its genus.

pub mod braid;
pub mod error;
pub mod golden;
pub mod marked;
pub mod perm;
pub mod sheets;
pub mod space;

pub use braid::{
    apply_move, build_sheet_graph, components, move_infty, move_one, move_zero, report,
    ComponentReport, PerBoundary, SheetGraph, SpaceReport,
};
pub use error::{Error, Result};
pub use golden::{parse_goldens, verify_all, verify_row, Expectation, GoldenRow, Summary, Verdict};
pub use marked::{
    canonicalize, component_signature, enumerate_markings, node_product, transport_marking,
    Boundary, MarkedTuple, Marking,
};
pub use perm::{
    compose, conjugate, cycle_type, inverse, orbits, CycleDecomposition, Partition, Permutation,
};
pub use sheets::{count_sheets, enumerate_sheets, enumerate_sheets_with, EnumerationOptions};
pub use space::{ComponentSignature, HurwitzSpec};
