//! Link streams: parsing, per-pair timelines and the Δ-clique predicate.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::clique::DeltaClique;
use crate::error::ParseError;
use crate::graph::StaticGraph;
use crate::time::{Duration, TimeInterval, Timestamp};

/// Dense node identifier, assigned in order of first appearance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NodeId(pub u32);

impl NodeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// One undirected link, stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Link {
    pub time: Timestamp,
    pub u: NodeId,
    pub v: NodeId,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseOptions {
    /// Factor applied to every time field; the product must be an integer.
    pub time_scale: i64,
    /// Explicit span `T`, in scaled ticks.
    pub explicit_span: Option<TimeInterval>,
}

impl Default for ParseOptions {
    fn default() -> Self {
        ParseOptions {
            time_scale: 1,
            explicit_span: None,
        }
    }
}

fn ordered(u: NodeId, v: NodeId) -> (NodeId, NodeId) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// An immutable link stream `(T, V, E)`.
#[derive(Debug, Clone)]
pub struct LinkStream {
    labels: Vec<String>,
    label_ids: HashMap<String, NodeId>,
    classes: Vec<Option<String>>,
    links: Vec<Link>,
    pair_ids: HashMap<(NodeId, NodeId), usize>,
    pairs: Vec<(NodeId, NodeId)>,
    timelines: Vec<Vec<Timestamp>>,
    explicit_span: Option<TimeInterval>,
    collapsed_duplicates: usize,
}

/// Incremental construction used by the parser and the generators.
#[derive(Debug, Default)]
pub struct LinkStreamBuilder {
    labels: Vec<String>,
    label_ids: HashMap<String, NodeId>,
    classes: Vec<Option<String>>,
    links: Vec<Link>,
    explicit_span: Option<TimeInterval>,
}

impl LinkStreamBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_span(mut self, span: Option<TimeInterval>) -> Self {
        self.explicit_span = span;
        self
    }

    pub fn intern(&mut self, label: &str) -> NodeId {
        if let Some(&id) = self.label_ids.get(label) {
            return id;
        }
        let id = NodeId(self.labels.len() as u32);
        self.labels.push(label.to_owned());
        self.label_ids.insert(label.to_owned(), id);
        self.classes.push(None);
        id
    }

    /// Assigns a class label unless the node already carries one.
    pub fn set_class(&mut self, node: NodeId, class: &str) {
        let slot = &mut self.classes[node.index()];
        if slot.is_none() {
            *slot = Some(class.to_owned());
        }
    }

    /// Adds the link `(time, u, v)`. `line` is only used for error reports.
    pub fn add(&mut self, line: usize, time: i64, u: &str, v: &str) -> Result<(NodeId, NodeId), ParseError> {
        if u == v {
            return Err(ParseError::SelfLoop {
                line,
                label: u.to_owned(),
            });
        }
        if let Some(span) = self.explicit_span {
            if !span.contains_time(Timestamp(time)) {
                return Err(ParseError::OutsideSpan {
                    line,
                    time,
                    start: span.start().0,
                    end: span.end().0,
                });
            }
        }
        let iu = self.intern(u);
        let iv = self.intern(v);
        let (a, b) = ordered(iu, iv);
        self.links.push(Link {
            time: Timestamp(time),
            u: a,
            v: b,
        });
        Ok((iu, iv))
    }

    pub fn build(mut self) -> Result<LinkStream, ParseError> {
        if self.links.is_empty() {
            return Err(ParseError::Empty);
        }
        let raw = self.links.len();
        self.links.sort_unstable();
        self.links.dedup();
        let collapsed_duplicates = raw - self.links.len();

        let mut pair_ids = HashMap::new();
        let mut pairs = Vec::new();
        let mut timelines: Vec<Vec<Timestamp>> = Vec::new();
        // links are sorted by time first, so every timeline comes out increasing
        for link in &self.links {
            let idx = *pair_ids.entry((link.u, link.v)).or_insert_with(|| {
                pairs.push((link.u, link.v));
                timelines.push(Vec::new());
                pairs.len() - 1
            });
            timelines[idx].push(link.time);
        }

        Ok(LinkStream {
            labels: self.labels,
            label_ids: self.label_ids,
            classes: self.classes,
            links: self.links,
            pair_ids,
            pairs,
            timelines,
            explicit_span: self.explicit_span,
            collapsed_duplicates,
        })
    }
}

/// Parses an exact decimal and multiplies it by `scale`.
/// `Ok(None)` means the value is well-formed but not integral after scaling.
fn parse_scaled_time(field: &str, scale: i64) -> Result<Option<i64>, ()> {
    let (negative, body) = match field.as_bytes().first() {
        Some(b'-') => (true, &field[1..]),
        Some(b'+') => (false, &field[1..]),
        _ => (false, field),
    };
    let (int_part, frac_part) = match body.split_once('.') {
        Some((i, f)) => (i, f),
        None => (body, ""),
    };
    let all_digits = |s: &str| s.bytes().all(|c| c.is_ascii_digit());
    if (int_part.is_empty() && frac_part.is_empty()) || !all_digits(int_part) || !all_digits(frac_part) {
        return Err(());
    }
    // at most 18 fractional digits keeps 10^k inside i128 with room to spare
    if frac_part.len() > 18 || int_part.len() > 30 {
        return Err(());
    }
    let int_val: i128 = if int_part.is_empty() { 0 } else { int_part.parse().map_err(|_| ())? };
    let frac_val: i128 = if frac_part.is_empty() { 0 } else { frac_part.parse().map_err(|_| ())? };
    let denom = 10i128.pow(frac_part.len() as u32);
    let numer = (int_val * denom + frac_val).checked_mul(scale as i128).ok_or(())?;
    if numer % denom != 0 {
        return Ok(None);
    }
    let mut value = numer / denom;
    if negative {
        value = -value;
    }
    i64::try_from(value).map(Some).map_err(|_| ())
}

/// Parses whitespace-separated `time u v [class_u class_v ...]` lines.
///
/// `#` lines and blank lines are skipped. Duplicate links, including
/// reversed duplicates, collapse to one.
pub fn parse_link_stream(text: &str, options: &ParseOptions) -> Result<LinkStream, ParseError> {
    if options.time_scale < 1 {
        return Err(ParseError::InvalidOptions(format!(
            "time scale must be positive, got {}",
            options.time_scale
        )));
    }
    let mut builder = LinkStreamBuilder::new().with_span(options.explicit_span);
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        if fields.len() < 3 {
            return Err(ParseError::Malformed {
                line,
                reason: format!("expected at least 3 fields, found {}", fields.len()),
            });
        }
        let time = match parse_scaled_time(fields[0], options.time_scale) {
            Ok(Some(t)) => t,
            Ok(None) => {
                return Err(ParseError::NonIntegralTime {
                    line,
                    value: fields[0].to_owned(),
                    scale: options.time_scale,
                })
            }
            Err(()) => {
                return Err(ParseError::Malformed {
                    line,
                    reason: format!("unparsable time `{}`", fields[0]),
                })
            }
        };
        let (u, v) = builder.add(line, time, fields[1], fields[2])?;
        if fields.len() >= 5 {
            builder.set_class(u, fields[3]);
            builder.set_class(v, fields[4]);
        }
    }
    builder.build()
}

impl LinkStream {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        parse_link_stream(text, &ParseOptions::default())
    }

    /// Number of nodes `n`.
    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    /// Number of distinct links `m`.
    pub fn link_count(&self) -> usize {
        self.links.len()
    }

    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }

    /// Input lines that duplicated an already-seen link.
    pub fn collapsed_duplicates(&self) -> usize {
        self.collapsed_duplicates
    }

    pub fn links(&self) -> &[Link] {
        &self.links
    }

    pub fn nodes(&self) -> impl Iterator<Item = NodeId> + '_ {
        (0..self.labels.len() as u32).map(NodeId)
    }

    pub fn label(&self, node: NodeId) -> &str {
        &self.labels[node.index()]
    }

    pub fn node(&self, label: &str) -> Option<NodeId> {
        self.label_ids.get(label).copied()
    }

    pub fn class(&self, node: NodeId) -> Option<&str> {
        self.classes[node.index()].as_deref()
    }

    pub fn has_classes(&self) -> bool {
        self.classes.iter().any(Option::is_some)
    }

    pub fn explicit_span(&self) -> Option<TimeInterval> {
        self.explicit_span
    }

    pub fn earliest(&self) -> Timestamp {
        self.links[0].time
    }

    pub fn latest(&self) -> Timestamp {
        self.links[self.links.len() - 1].time
    }

    /// Distinct interacting pairs, `u < v`, in order of first link.
    pub fn pairs(&self) -> &[(NodeId, NodeId)] {
        &self.pairs
    }

    /// Sorted link times of the pair, in either orientation.
    pub fn timeline(&self, u: NodeId, v: NodeId) -> Option<&[Timestamp]> {
        self.pair_ids.get(&ordered(u, v)).map(|&i| self.timelines[i].as_slice())
    }

    /// Time span `T`: the explicit span, or `[t_min - Δ, t_max + Δ]`.
    pub fn effective_span(&self, delta: Duration) -> TimeInterval {
        self.explicit_span.unwrap_or_else(|| {
            TimeInterval::new(self.earliest() - delta, self.latest() + delta)
                .expect("earliest link precedes latest")
        })
    }

    /// Smallest link time `t >= b` of the pair.
    pub fn first_occurrence(&self, u: NodeId, v: NodeId, b: Timestamp) -> Option<Timestamp> {
        let times = self.timeline(u, v)?;
        times.get(times.partition_point(|&t| t < b)).copied()
    }

    /// Largest link time `t <= e` of the pair.
    pub fn last_occurrence(&self, u: NodeId, v: NodeId, e: Timestamp) -> Option<Timestamp> {
        let times = self.timeline(u, v)?;
        times.partition_point(|&t| t <= e).checked_sub(1).map(|i| times[i])
    }

    /// Link times of the pair falling inside `window`.
    pub fn times_within(&self, u: NodeId, v: NodeId, window: TimeInterval) -> &[Timestamp] {
        match self.timeline(u, v) {
            Some(times) => {
                let lo = times.partition_point(|&t| t < window.start());
                let hi = times.partition_point(|&t| t <= window.end());
                &times[lo..hi]
            }
            None => &[],
        }
    }

    /// Whether `u` and `v` interact at least once in every window of length
    /// `delta` within `interval`.
    ///
    /// The quantifier over real `τ` reduces to the link times `t_1 < … < t_k`
    /// inside `[b, e]`: at least one exists, and when `e - b > Δ` also
    /// `t_1 <= b + Δ`, every gap is at most `Δ`, and `t_k >= e - Δ`.
    pub fn pair_covers(&self, u: NodeId, v: NodeId, interval: TimeInterval, delta: Duration) -> bool {
        let times = self.times_within(u, v, interval);
        covers_sorted(times, interval, delta)
    }

    pub fn is_delta_clique(&self, clique: &DeltaClique, delta: Duration) -> bool {
        let nodes = clique.nodes();
        nodes.len() >= 2
            && nodes.iter().enumerate().all(|(i, &u)| {
                nodes[i + 1..]
                    .iter()
                    .all(|&v| self.pair_covers(u, v, clique.interval(), delta))
            })
    }

    /// Earliest and latest link times among the clique's pairs inside its
    /// interval. `None` when the clique holds no link at all.
    pub fn span_bounds(&self, clique: &DeltaClique) -> Option<(Timestamp, Timestamp)> {
        let nodes = clique.nodes();
        let mut bounds: Option<(Timestamp, Timestamp)> = None;
        for (i, &u) in nodes.iter().enumerate() {
            for &v in &nodes[i + 1..] {
                let times = self.times_within(u, v, clique.interval());
                if let (Some(&first), Some(&last)) = (times.first(), times.last()) {
                    bounds = Some(match bounds {
                        Some((lo, hi)) => (lo.min(first), hi.max(last)),
                        None => (first, last),
                    });
                }
            }
        }
        bounds
    }

    /// The static graph with one edge per interacting pair.
    pub fn induced_graph(&self) -> StaticGraph {
        StaticGraph::from_edges(self.node_count(), self.pairs.iter().copied())
    }
}

/// The finite coverage test on the sorted link times inside `[b, e]`.
pub(crate) fn covers_sorted(times: &[Timestamp], interval: TimeInterval, delta: Duration) -> bool {
    let (first, last) = match (times.first(), times.last()) {
        (Some(&f), Some(&l)) => (f, l),
        _ => return false,
    };
    if interval.length() <= delta.ticks() {
        return true;
    }
    first <= interval.start() + delta
        && last >= interval.end() - delta
        && times.windows(2).all(|w| w[1] - w[0] <= delta.ticks())
}
