//! Transparent rectangle visibility graphs.
//!
//! Each vertex is an axis-parallel rectangle; two vertices are adjacent iff
//! a horizontal or vertical line passes through both interiors. Rectangles
//! are transparent, so nothing blocks a sight line. In the classical
//! setting interiors are disjoint; the *intersecting* variant drops that
//! requirement.
//!
//! The crate provides exact geometry ([`geometry`]), graph families
//! ([`graph`]), interval graph machinery ([`interval`]), visibility
//! extraction and the exhaustive decision search ([`represent`]),
//! classifiers, bounds and constructions ([`families`]), brute-force
//! cross-checks ([`oracle`]), JSON and SVG output ([`io`], [`svg`]), and
//! the command line and HTTP front ends ([`cli`], [`service`]).

pub mod cli;
pub mod coord;
pub mod error;
pub mod families;
pub mod geometry;
pub mod graph;
pub mod interval;
pub mod io;
pub mod oracle;
pub mod represent;
pub mod service;
pub mod svg;

pub use coord::Coord;
pub use error::{Error, Result};
pub use geometry::{Axis, Layout, Mode, Rect};
pub use graph::{Graph, PartList};
pub use represent::{
    decide_itrvg, decide_trvg, extract, verify, Budget, Decision, Evidence, Mapping, Screens, Verdict,
};
