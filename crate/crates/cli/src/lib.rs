//! Sweep configuration, evaluation, CSV output and SVG charts for the
//! `horizon` binary.

// `!(x > 0.0)` also rejects NaN, which is the point of every such check.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod config;
pub mod presets;
pub mod svg;
pub mod sweep;
