//! Crate-wide error type.

use thiserror::Error;

/// Everything that can go wrong across the crate's public API.
///
/// The CLI maps these onto process exit codes: I/O failures exit with 3,
/// every other variant (bad arguments, unknown names, malformed config)
/// exits with 2.
#[derive(Debug, Error)]
pub enum StaError {
    /// A sampling request with an empty or inverted domain.
    #[error("invalid sampling range: {0}")]
    InvalidRange(String),

    /// Rotation requires an incumbent with nonzero norm; the direction of a
    /// zero vector is undefined.
    #[error("rotation is undefined for a zero-norm state")]
    DegenerateState,

    /// Translation requires two distinct states; a zero displacement carries
    /// no direction to walk along.
    #[error("translation is undefined for coincident states")]
    DegenerateDirection,

    /// A run, experiment, or CLI configuration that fails validation.
    #[error("invalid configuration: {0}")]
    Config(String),

    /// Lookup of a name the benchmark registry does not contain.
    #[error("no benchmark named '{0}' in the registry")]
    NotFound(String),

    /// Failure reading or writing report artifacts.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}
