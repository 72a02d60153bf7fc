//! Enumeration of maximal Δ-cliques in link streams.
//!
//! A link stream is a set of timestamped undirected interactions `(t, u, v)`.
//! A Δ-clique is a node set `X` with an interval `[b, e]` such that every
//! pair of `X` interacts at least once in every window of length Δ within
//! `[b, e]`. [`enumerate_maximal`] lists all Δ-cliques that are included in
//! no other one.
//!
//! ```
//! use dclique::{enumerate_maximal, Duration, EngineConfig, LinkStream};
//!
//! let stream = LinkStream::parse("3 a b\n4 b c\n5 a c\n6 a b\n").unwrap();
//! let delta = Duration::new(3).unwrap();
//! let found = enumerate_maximal(&stream, delta, &EngineConfig::default()).unwrap();
//! let shown: Vec<String> = found.cliques.iter().map(|c| c.display(&stream).to_string()).collect();
//! assert_eq!(shown, ["({a,b},[0,9])", "({b,c},[1,7])", "({a,b,c},[2,7])", "({a,c},[2,8])"]);
//! ```

pub mod analytics;
pub mod cli;
pub mod clique;
pub mod engine;
pub mod error;
pub mod generate;
pub mod graph;
pub mod oracle;
pub mod stream;
pub mod time;

pub use clique::{canonical_key, CliqueKey, DeltaClique};
pub use engine::{enumerate_maximal, EngineConfig, Enumeration, Order, Telemetry};
pub use error::{AnalyticsError, EngineError, GenerateError, OracleError, ParseError};
pub use graph::StaticGraph;
pub use stream::{parse_link_stream, LinkStream, NodeId, ParseOptions};
pub use time::{Duration, TimeInterval, Timestamp};
