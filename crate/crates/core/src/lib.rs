//! Exact spectral graph theory for small graphs.

pub mod audit;
pub mod bounds;
pub mod closed_forms;
pub mod ds;
pub mod graph;
pub mod io;
pub mod poly;
pub mod spectra;
