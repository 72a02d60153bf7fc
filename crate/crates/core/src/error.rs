use thiserror::Error;

use crate::engine::Telemetry;

/// Failures while reading a link stream.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("line {line}: self-loop on node `{label}`")]
    SelfLoop { line: usize, label: String },
    #[error("line {line}: time `{value}` is not an integer after scaling by {scale}")]
    NonIntegralTime { line: usize, value: String, scale: i64 },
    #[error("line {line}: time {time} lies outside the span [{start},{end}]")]
    OutsideSpan {
        line: usize,
        time: i64,
        start: i64,
        end: i64,
    },
    #[error("invalid parse options: {0}")]
    InvalidOptions(String),
    #[error("stream contains no links")]
    Empty,
}

#[derive(Debug, Error)]
pub enum EngineError {
    /// The state cap was reached; partial results are withheld since the
    /// output would not be the complete set of maximal cliques.
    #[error("search truncated after {} states (cap {cap})", telemetry.states_seen)]
    Truncated { cap: usize, telemetry: Box<Telemetry> },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("stream too large for brute force: n={nodes} (max {max_nodes}), m={links} (max {max_links})")]
    TooLarge {
        nodes: usize,
        links: usize,
        max_nodes: usize,
        max_links: usize,
    },
}

#[derive(Debug, Error, PartialEq)]
pub enum AnalyticsError {
    #[error("cannot build a distribution from an empty sample")]
    EmptySample,
    #[error("discovery logging was disabled for this run")]
    DiscoveryNotLogged,
    #[error("node {0} has no class label")]
    MissingClass(String),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenerateError {
    #[error("invalid generator parameters: {0}")]
    InvalidParams(String),
}
