//! Computational dynamics of the McMullen family f(z) = z^n + λ/z^n, n ≥ 3.
//!
//! The crate is organized around five layers:
//!
//! * [`angle`] — exact rational arithmetic on circle angles: the sector
//!   partition, the multiply-by-n shift, itinerary coding and the coding
//!   map κ back to angles.
//! * [`dynamics`] — numerics of the map itself: critical data, Green
//!   function, Böttcher coordinate, sector coding of points, the 2n inverse
//!   branches, repelling periodic points, and the escape-trichotomy
//!   classifier with its parameter-plane survey.
//! * [`rays`] — external-ray tracing by Böttcher Newton steps plus
//!   inverse-branch pullback, cut-ray approximants with grid contouring,
//!   preimage cut rays and intersection counting.
//! * [`puzzle`] — graphs of cut rays, pixel-labelled puzzle pieces,
//!   tableaux with the (T1)–(T3) rules, renormalization detection, the
//!   admissible-graph case engine, and boundary regularity diagnostics.
//! * [`render`] — deterministic PPM imaging, survey rasters and CSV/JSON
//!   reports behind the `mcm` command-line tool.
//!
//! Run `cargo run --example <name>` for a guided tour of each capability;
//! see the crate README for the list.

pub mod angle;
pub mod dynamics;
pub mod error;
pub mod puzzle;
pub mod raster;
pub mod rays;
pub mod render;
pub mod report;

pub use angle::{Angle, AngleClass, Itinerary, Symbol};
pub use dynamics::{EscapeClass, EscapeTag, ParamContext, SectorId};
pub use error::{McmError, Result};
