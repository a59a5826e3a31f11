//! Error objects written to stderr as `{"error": {"kind", "message"}}`.

use serde::Serialize;
use thiserror::Error;

use sdp::assoc::AssocError;
use sdp::hom::HomError;
use sdp::internal::InternalError;
use sdp::symbolic::ParseError;
use sdp::{GroupError, SystemError};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("{path}: {message}")]
    Json { path: String, message: String },
    #[error("{0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    System(#[from] SystemError),
    #[error("system is not normalized: {0} violation(s)")]
    NotNormalized(usize),
    #[error("group of order {size} exceeds the cap {cap}")]
    SizeCapExceeded { size: usize, cap: usize },
    #[error(transparent)]
    Assoc(AssocError),
    #[error(transparent)]
    Internal(InternalError),
    #[error(transparent)]
    Hom(HomError),
    #[error("reference table: {0}")]
    Reference(#[from] ParseError),
    #[error("{0}")]
    Mismatch(String),
    #[error("{0}")]
    Disagreement(String),
}

impl From<AssocError> for CliError {
    fn from(e: AssocError) -> Self {
        match e {
            AssocError::SizeCapExceeded { size, cap } => CliError::SizeCapExceeded { size, cap },
            e => CliError::Assoc(e),
        }
    }
}

impl From<InternalError> for CliError {
    fn from(e: InternalError) -> Self {
        match e {
            InternalError::Assoc(e) => e.into(),
            e => CliError::Internal(e),
        }
    }
}

impl From<HomError> for CliError {
    fn from(e: HomError) -> Self {
        match e {
            HomError::SizeCapExceeded { size, cap } => CliError::SizeCapExceeded { size, cap },
            e => CliError::Hom(e),
        }
    }
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Io { .. } => "io",
            CliError::Json { .. } => "json",
            CliError::InvalidArgument(_) => "invalid_argument",
            CliError::Group(_) => "invalid_group",
            CliError::System(_) => "invalid_system",
            CliError::NotNormalized(_) => "not_normalized",
            CliError::SizeCapExceeded { .. } => "size_cap_exceeded",
            CliError::Assoc(_) => "assoc",
            CliError::Internal(_) => "decomposition",
            CliError::Hom(_) => "hom",
            CliError::Reference(_) => "reference_parse",
            CliError::Mismatch(_) => "reference_mismatch",
            CliError::Disagreement(_) => "disagreement",
        }
    }

    /// Usage errors exit with 2, everything else with 1.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Body<'a> {
            kind: &'a str,
            message: String,
        }
        #[derive(Serialize)]
        struct Envelope<'a> {
            error: Body<'a>,
        }
        serde_json::to_string(&Envelope { error: Body { kind: self.kind(), message: self.to_string() } })
            .expect("error objects serialize")
    }
}
