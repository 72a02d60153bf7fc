//! Configuration-space search for maximal Δ-cliques.
//!
//! Every link `(t, u, v)` seeds the trivial clique `({u,v}, [t,t])`. Each
//! state taken from the work container is grown in three ways: by one node,
//! by moving `b` left to `f - Δ` where `f` is the latest first occurrence of
//! a pair, and by moving `e` right to `l + Δ` where `l` is the earliest last
//! occurrence. A state that cannot grow in any way is maximal. Newly built
//! states enter the container only if their key has never been seen.

use std::collections::{HashSet, VecDeque};
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::clique::{CliqueKey, DeltaClique};
use crate::error::EngineError;
use crate::stream::{LinkStream, NodeId};
use crate::time::{Duration, TimeInterval, Timestamp};

/// Which end of the work container states are taken from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Order {
    /// FIFO: breadth-first over the configuration space.
    Bfs,
    /// LIFO: depth-first. Finds large maximal cliques early.
    #[default]
    Dfs,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EngineConfig {
    pub order: Order,
    /// Look for `f` in `[b, min(e, b+Δ)]` and `l` in `[max(b, e-Δ), e]` by
    /// binary search instead of scanning every link of the clique.
    pub use_interval_narrowing: bool,
    /// Carry a candidate node set on each state instead of trying `V \ X`.
    pub use_candidate_sets: bool,
    /// Abort with [`EngineError::Truncated`] once more states than this are seen.
    pub max_states: Option<usize>,
    pub log_discovery: bool,
    /// Re-check the Δ-clique predicate on every state entering the container.
    pub check_soundness: bool,
    /// Test hook: never attempt right extensions. Breaks completeness.
    #[doc(hidden)]
    pub skip_right_extension: bool,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            order: Order::Dfs,
            use_interval_narrowing: true,
            use_candidate_sets: true,
            max_states: None,
            log_discovery: false,
            check_soundness: false,
            skip_right_extension: false,
        }
    }
}

/// A clique awaiting expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchState {
    pub clique: DeltaClique,
    /// Sorted nodes still eligible for node extension, disjoint from the
    /// clique. `None` stands for the full complement `V \ X`.
    pub candidates: Option<Vec<NodeId>>,
}

/// Keys of every clique ever put in the work container.
#[derive(Debug, Default, Clone)]
pub struct SeenSet {
    keys: HashSet<CliqueKey>,
}

impl SeenSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns `true` if the clique was not seen before.
    pub fn insert(&mut self, clique: &DeltaClique) -> bool {
        self.keys.insert(clique.key())
    }

    pub fn contains(&self, clique: &DeltaClique) -> bool {
        self.keys.contains(&clique.key())
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscoveryPoint {
    pub iteration: u64,
    pub maximal_count: u64,
    /// Running maximum of `|X| * (e - b)` over maximal cliques found so far.
    pub max_size: i64,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Telemetry {
    pub iterations: u64,
    pub states_seen: usize,
    pub maximal_found: usize,
    pub discovery_log: Vec<DiscoveryPoint>,
    pub wall_time: std::time::Duration,
    /// Interval extensions cut short by an explicit span.
    pub clamped_extensions: u64,
}

#[derive(Debug, Clone)]
pub struct Enumeration {
    /// Maximal Δ-cliques sorted by `(b, e, nodes)`.
    pub cliques: Vec<DeltaClique>,
    pub telemetry: Telemetry,
}

/// Initial states: one trivial clique per link, all already recorded as seen.
pub fn seed(stream: &LinkStream, use_candidate_sets: bool) -> (VecDeque<SearchState>, SeenSet) {
    let graph = use_candidate_sets.then(|| stream.induced_graph());
    let mut pending = VecDeque::with_capacity(stream.link_count());
    let mut seen = SeenSet::new();
    for link in stream.links() {
        let clique = DeltaClique::from_sorted(vec![link.u, link.v], TimeInterval::point(link.time));
        // a node joining {u, v} must interact with both
        let candidates = graph.as_ref().map(|g| {
            let (nu, nv) = (g.neighbors(link.u), g.neighbors(link.v));
            nu.iter().copied().filter(|w| nv.binary_search(w).is_ok()).collect()
        });
        if seen.insert(&clique) {
            pending.push_back(SearchState { clique, candidates });
        }
    }
    (pending, seen)
}

fn joins(stream: &LinkStream, clique: &DeltaClique, v: NodeId, delta: Duration) -> bool {
    clique
        .nodes()
        .iter()
        .all(|&u| stream.pair_covers(u, v, clique.interval(), delta))
}

/// All one-node extensions `(X ∪ {v}, [b, e])` that are Δ-cliques.
///
/// With candidate sets, each child inherits the passing nodes other than
/// itself. An empty result means the state cannot grow by a node.
pub fn node_extensions(
    stream: &LinkStream,
    state: &SearchState,
    delta: Duration,
    use_candidate_sets: bool,
) -> Vec<SearchState> {
    let clique = &state.clique;
    let passing: Vec<NodeId> = match &state.candidates {
        Some(cands) => cands.iter().copied().filter(|&v| joins(stream, clique, v, delta)).collect(),
        None => stream
            .nodes()
            .filter(|v| clique.nodes().binary_search(v).is_err())
            .filter(|&v| joins(stream, clique, v, delta))
            .collect(),
    };
    passing
        .iter()
        .map(|&v| SearchState {
            clique: clique.with_node(v),
            candidates: use_candidate_sets.then(|| passing.iter().copied().filter(|&w| w != v).collect()),
        })
        .collect()
}

struct Extension {
    bound: Timestamp,
    clamped: bool,
}

fn left_bound(stream: &LinkStream, clique: &DeltaClique, delta: Duration, span: TimeInterval, narrowing: bool) -> Extension {
    let (b, e) = (clique.start(), clique.end());
    let window = if narrowing {
        TimeInterval::new(b, e.min(b + delta)).expect("b <= e")
    } else {
        clique.interval()
    };
    let nodes = clique.nodes();
    let mut latest_first: Option<Timestamp> = None;
    for (i, &u) in nodes.iter().enumerate() {
        for &v in &nodes[i + 1..] {
            let first = if narrowing {
                stream.first_occurrence(u, v, b).filter(|&t| t <= window.end())
            } else {
                stream.times_within(u, v, window).iter().copied().min()
            };
            // every pair of a Δ-clique has a link in the window
            let Some(first) = first else {
                debug_assert!(false, "pair without link in {window}");
                return Extension { bound: b, clamped: false };
            };
            latest_first = Some(latest_first.map_or(first, |f| f.max(first)));
        }
    }
    let f = latest_first.expect("clique has at least one pair");
    let natural = f - delta;
    let clamped = natural < span.start();
    let candidate = natural.max(span.start());
    Extension {
        bound: if candidate < b { candidate } else { b },
        clamped,
    }
}

fn right_bound(stream: &LinkStream, clique: &DeltaClique, delta: Duration, span: TimeInterval, narrowing: bool) -> Extension {
    let (b, e) = (clique.start(), clique.end());
    let window = if narrowing {
        TimeInterval::new(b.max(e - delta), e).expect("b <= e")
    } else {
        clique.interval()
    };
    let nodes = clique.nodes();
    let mut earliest_last: Option<Timestamp> = None;
    for (i, &u) in nodes.iter().enumerate() {
        for &v in &nodes[i + 1..] {
            let last = if narrowing {
                stream.last_occurrence(u, v, e).filter(|&t| t >= window.start())
            } else {
                stream.times_within(u, v, window).iter().copied().max()
            };
            let Some(last) = last else {
                debug_assert!(false, "pair without link in {window}");
                return Extension { bound: e, clamped: false };
            };
            earliest_last = Some(earliest_last.map_or(last, |l| l.min(last)));
        }
    }
    let l = earliest_last.expect("clique has at least one pair");
    let natural = l + delta;
    let clamped = natural > span.end();
    let candidate = natural.min(span.end());
    Extension {
        bound: if candidate > e { candidate } else { e },
        clamped,
    }
}

/// Earliest start `b' = max(f - Δ, α)` certified for the clique, where `f`
/// is the latest first occurrence of a pair at or after `b`. Returns `b`
/// when no strictly earlier start is certified.
pub fn left_extension(
    stream: &LinkStream,
    clique: &DeltaClique,
    delta: Duration,
    span: TimeInterval,
    narrowing: bool,
) -> Timestamp {
    left_bound(stream, clique, delta, span, narrowing).bound
}

/// Latest end `e' = min(l + Δ, ω)` certified for the clique, where `l` is
/// the earliest last occurrence of a pair at or before `e`. Returns `e`
/// when no strictly later end is certified.
pub fn right_extension(
    stream: &LinkStream,
    clique: &DeltaClique,
    delta: Duration,
    span: TimeInterval,
    narrowing: bool,
) -> Timestamp {
    right_bound(stream, clique, delta, span, narrowing).bound
}

struct Search<'a> {
    stream: &'a LinkStream,
    delta: Duration,
    span: TimeInterval,
    config: &'a EngineConfig,
    pending: VecDeque<SearchState>,
    seen: SeenSet,
    telemetry: Telemetry,
}

impl Search<'_> {
    fn push(&mut self, state: SearchState) -> Result<(), EngineError> {
        if !self.seen.insert(&state.clique) {
            return Ok(());
        }
        if self.config.check_soundness {
            assert!(
                self.stream.is_delta_clique(&state.clique, self.delta),
                "unsound state {}",
                state.clique.display(self.stream)
            );
        }
        if let Some(cap) = self.config.max_states {
            if self.seen.len() > cap {
                self.telemetry.states_seen = self.seen.len();
                return Err(EngineError::Truncated {
                    cap,
                    telemetry: Box::new(self.telemetry.clone()),
                });
            }
        }
        self.pending.push_back(state);
        Ok(())
    }

    fn take(&mut self) -> Option<SearchState> {
        match self.config.order {
            Order::Bfs => self.pending.pop_front(),
            Order::Dfs => self.pending.pop_back(),
        }
    }
}

/// Enumerates every maximal Δ-clique of the stream.
pub fn enumerate_maximal(stream: &LinkStream, delta: Duration, config: &EngineConfig) -> Result<Enumeration, EngineError> {
    let started = Instant::now();
    let (pending, seen) = seed(stream, config.use_candidate_sets);
    let mut search = Search {
        stream,
        delta,
        span: stream.effective_span(delta),
        config,
        pending,
        seen,
        telemetry: Telemetry::default(),
    };
    if let Some(cap) = config.max_states {
        if search.seen.len() > cap {
            search.telemetry.states_seen = search.seen.len();
            return Err(EngineError::Truncated {
                cap,
                telemetry: Box::new(search.telemetry),
            });
        }
    }

    let narrowing = config.use_interval_narrowing;
    let mut maximal = Vec::new();
    let mut max_size = 0i64;

    while let Some(state) = search.take() {
        search.telemetry.iterations += 1;
        let mut is_max = true;

        let children = node_extensions(stream, &state, delta, config.use_candidate_sets);
        // a passing node disqualifies the state even if its child was seen
        if !children.is_empty() {
            is_max = false;
        }
        for child in children {
            search.push(child)?;
        }

        let (b, e) = (state.clique.start(), state.clique.end());
        let left = left_bound(stream, &state.clique, delta, search.span, narrowing);
        search.telemetry.clamped_extensions += u64::from(left.clamped);
        if left.bound != b {
            is_max = false;
            let interval = state.clique.interval().with_start(left.bound).expect("b' <= e");
            search.push(SearchState {
                clique: state.clique.with_interval(interval),
                candidates: state.candidates.clone(),
            })?;
        }

        if !config.skip_right_extension {
            let right = right_bound(stream, &state.clique, delta, search.span, narrowing);
            search.telemetry.clamped_extensions += u64::from(right.clamped);
            if right.bound != e {
                is_max = false;
                let interval = state.clique.interval().with_end(right.bound).expect("b <= e'");
                search.push(SearchState {
                    clique: state.clique.with_interval(interval),
                    candidates: state.candidates.clone(),
                })?;
            }
        }

        if is_max {
            let size = (state.clique.nodes().len() as i64).saturating_mul(state.clique.duration());
            max_size = max_size.max(size);
            maximal.push(state.clique);
            if config.log_discovery {
                search.telemetry.discovery_log.push(DiscoveryPoint {
                    iteration: search.telemetry.iterations,
                    maximal_count: maximal.len() as u64,
                    max_size,
                });
            }
        }
    }

    if config.log_discovery {
        let last = search.telemetry.discovery_log.last().map(|p| p.iteration);
        if last != Some(search.telemetry.iterations) {
            search.telemetry.discovery_log.push(DiscoveryPoint {
                iteration: search.telemetry.iterations,
                maximal_count: maximal.len() as u64,
                max_size,
            });
        }
    }

    maximal.sort_unstable();
    let mut telemetry = search.telemetry;
    telemetry.states_seen = search.seen.len();
    telemetry.maximal_found = maximal.len();
    telemetry.wall_time = started.elapsed();
    Ok(Enumeration {
        cliques: maximal,
        telemetry,
    })
}
