//! Text formats, JSON helpers and the polynomial cache.

pub mod cache;
pub mod graph6;
pub mod json;
pub mod spec_string;

pub use spec_string::{parse_graph_spec, SpecError};
