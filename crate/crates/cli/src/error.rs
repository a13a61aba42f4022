use eqminors::cluster::ClusterError;
use eqminors::construct::ConstructError;
use eqminors::minors::MinorsError;
use eqminors::plabic::PlabicError;
use eqminors::NumError;
use thiserror::Error;

/// Failure of a command, carrying its exit status.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Malformed(String),
    #[error("{0}")]
    Undecided(String),
    #[error("{0}")]
    Verification(String),
    #[error("{0}")]
    Failure(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 64,
            CliError::Malformed(_) => 65,
            CliError::Undecided(_) => 3,
            CliError::Verification(_) => 2,
            CliError::Failure(_) => 1,
        }
    }
}

impl From<NumError> for CliError {
    fn from(e: NumError) -> Self {
        match e {
            NumError::PrecisionExhausted(_) => CliError::Undecided(e.to_string()),
            NumError::Parse(_) | NumError::BadRadicand(_) | NumError::MixedRadicand(..) => CliError::Malformed(e.to_string()),
            e => CliError::Failure(e.to_string()),
        }
    }
}

impl From<MinorsError> for CliError {
    fn from(e: MinorsError) -> Self {
        match e {
            MinorsError::Undecided(_) => CliError::Undecided(e.to_string()),
            MinorsError::Num(e) => e.into(),
            e => CliError::Malformed(e.to_string()),
        }
    }
}

impl From<ConstructError> for CliError {
    fn from(e: ConstructError) -> Self {
        match e {
            ConstructError::PrecisionExhausted => CliError::Undecided(e.to_string()),
            ConstructError::VerificationFailed(_) | ConstructError::CapExceeded(_) => CliError::Verification(e.to_string()),
            ConstructError::Minors(e) => e.into(),
            ConstructError::Num(e) => e.into(),
            e => CliError::Malformed(e.to_string()),
        }
    }
}

impl From<PlabicError> for CliError {
    fn from(e: PlabicError) -> Self {
        CliError::Malformed(e.to_string())
    }
}

impl From<ClusterError> for CliError {
    fn from(e: ClusterError) -> Self {
        match e {
            ClusterError::InvalidSeed(_) | ClusterError::NotApplicable(_) => CliError::Malformed(e.to_string()),
            ClusterError::Minors(e) => e.into(),
            ClusterError::Plabic(e) => e.into(),
            ClusterError::Num(e) => e.into(),
            e => CliError::Failure(e.to_string()),
        }
    }
}
