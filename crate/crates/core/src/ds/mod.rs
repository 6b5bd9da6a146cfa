//! Deciding whether a graph is determined by its spectrum, within an
//! explicit finite scope.

mod constraints;
mod enumerate;
mod sequences;
mod verify;

use thiserror::Error;

use crate::graph::DegreeSequence;
use crate::spectra::{MatrixKind, SpectraError};

pub use constraints::{
    moment_constraints, CubicRelation, DegreeBound, MomentConstraints, SquareSum,
};
pub use enumerate::{
    census, enumerate_graphs, graphic_sequences, CensusMethod, Enumeration, EnumerationOptions,
    VertexOrder, CENSUS_MAX_ORDER,
};
pub use sequences::{feasible_degree_sequences, DegreeSequenceCandidate};
pub use verify::{
    ds_verify, DSVerdict, Scope, SequenceReport, SplitReport, VerifyOptions, VerifyStats,
    DEGREE_SCOPE_MAX_ORDER,
};

#[derive(Debug, Error)]
pub enum DsError {
    #[error(transparent)]
    Spectra(#[from] SpectraError),

    #[error("characteristic polynomial has degree zero")]
    EmptyPolynomial,

    #[error("{0}-moments are not those of any graph")]
    InconsistentMoments(MatrixKind),

    #[error("{scope} scope is limited to {limit} vertices, target has {n}")]
    ScopeTooLarge {
        scope: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("degree sequence {sequence} has length {found}, target has {expected} vertices")]
    SequenceLength {
        sequence: DegreeSequence,
        expected: usize,
        found: usize,
    },

    #[error("could not certify a factorisation of {0}")]
    Unfactored(String),

    #[error("realizations of {sequence}: {high_first} placing high degrees first, {low_first} placing low degrees first")]
    OrderMismatch {
        sequence: DegreeSequence,
        high_first: usize,
        low_first: usize,
    },

    #[error("reported mate {0} is not cospectral with the target")]
    NotCospectral(String),
}

impl DsError {
    /// Whether the error is a refusal to search beyond the supported scope.
    pub fn is_scope_refusal(&self) -> bool {
        matches!(self, DsError::ScopeTooLarge { .. })
    }

    /// Whether the error means an internal cross-check disagreed.
    pub fn is_verification_failure(&self) -> bool {
        matches!(self, DsError::OrderMismatch { .. } | DsError::NotCospectral(_))
    }
}

pub type Result<T> = std::result::Result<T, DsError>;
