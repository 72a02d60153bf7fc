use std::cmp::Ordering;
use std::fmt;

use crate::stream::{LinkStream, NodeId};
use crate::time::{TimeInterval, Timestamp};

/// A node set `X` together with a closed interval `[b, e]`.
///
/// Nodes are kept sorted and deduplicated, so structural equality is set
/// equality. Ordering is by `(b, e, nodes)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DeltaClique {
    nodes: Vec<NodeId>,
    interval: TimeInterval,
}

impl DeltaClique {
    pub fn new(mut nodes: Vec<NodeId>, interval: TimeInterval) -> Self {
        nodes.sort_unstable();
        nodes.dedup();
        DeltaClique { nodes, interval }
    }

    pub(crate) fn from_sorted(nodes: Vec<NodeId>, interval: TimeInterval) -> Self {
        debug_assert!(nodes.windows(2).all(|w| w[0] < w[1]));
        DeltaClique { nodes, interval }
    }

    /// Builds a clique from node labels of `stream`; `None` if a label is unknown.
    pub fn from_labels(stream: &LinkStream, labels: &[&str], b: i64, e: i64) -> Option<Self> {
        let nodes = labels.iter().map(|l| stream.node(l)).collect::<Option<Vec<_>>>()?;
        Some(Self::new(nodes, TimeInterval::new(Timestamp(b), Timestamp(e))?))
    }

    pub fn nodes(&self) -> &[NodeId] {
        &self.nodes
    }

    pub fn interval(&self) -> TimeInterval {
        self.interval
    }

    pub fn start(&self) -> Timestamp {
        self.interval.start()
    }

    pub fn end(&self) -> Timestamp {
        self.interval.end()
    }

    pub fn duration(&self) -> i64 {
        self.interval.length()
    }

    pub fn with_interval(&self, interval: TimeInterval) -> Self {
        DeltaClique {
            nodes: self.nodes.clone(),
            interval,
        }
    }

    /// Adds one node outside the set.
    pub fn with_node(&self, v: NodeId) -> Self {
        let mut nodes = Vec::with_capacity(self.nodes.len() + 1);
        let at = self.nodes.partition_point(|&u| u < v);
        nodes.extend_from_slice(&self.nodes[..at]);
        nodes.push(v);
        nodes.extend_from_slice(&self.nodes[at..]);
        DeltaClique::from_sorted(nodes, self.interval)
    }

    pub fn key(&self) -> CliqueKey {
        canonical_key(self)
    }

    /// Containment: `other`'s nodes are a subset and its interval is nested.
    pub fn contains(&self, other: &DeltaClique) -> bool {
        self.interval.contains(&other.interval) && is_sorted_subset(&other.nodes, &self.nodes)
    }

    /// Renders as `({a,b},[3,6])` using the stream's labels.
    pub fn display<'a>(&'a self, stream: &'a LinkStream) -> impl fmt::Display + 'a {
        LabeledClique { clique: self, stream }
    }
}

impl Ord for DeltaClique {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.start(), self.end(), &self.nodes).cmp(&(other.start(), other.end(), &other.nodes))
    }
}

impl PartialOrd for DeltaClique {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn is_sorted_subset(small: &[NodeId], large: &[NodeId]) -> bool {
    let mut it = large.iter();
    small.iter().all(|x| it.any(|y| y == x))
}

struct LabeledClique<'a> {
    clique: &'a DeltaClique,
    stream: &'a LinkStream,
}

impl fmt::Display for LabeledClique<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut labels: Vec<&str> = self.clique.nodes.iter().map(|&v| self.stream.label(v)).collect();
        labels.sort_unstable();
        write!(f, "({{{}}},{})", labels.join(","), self.clique.interval)
    }
}

/// Exact identity of a clique: sorted node ids and both interval ends.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CliqueKey {
    b: i64,
    e: i64,
    nodes: Box<[u32]>,
}

pub fn canonical_key(clique: &DeltaClique) -> CliqueKey {
    CliqueKey {
        b: clique.start().0,
        e: clique.end().0,
        nodes: clique.nodes.iter().map(|v| v.0).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(b: i64, e: i64) -> TimeInterval {
        TimeInterval::from_ticks(b, e)
    }

    const A: NodeId = NodeId(0);
    const B: NodeId = NodeId(1);
    const C: NodeId = NodeId(2);

    #[test]
    fn key_ignores_node_order() {
        assert_eq!(
            DeltaClique::new(vec![B, A], iv(3, 6)).key(),
            DeltaClique::new(vec![A, B], iv(3, 6)).key()
        );
    }

    #[test]
    fn key_separates_intervals_and_nodes() {
        let ab = DeltaClique::new(vec![A, B], iv(3, 6));
        assert_ne!(ab.key(), DeltaClique::new(vec![A, B], iv(3, 7)).key());
        assert_ne!(ab.key(), DeltaClique::new(vec![A, C], iv(3, 6)).key());
    }

    #[test]
    fn with_node_keeps_order() {
        let c = DeltaClique::new(vec![A, C], iv(0, 1)).with_node(B);
        assert_eq!(c.nodes(), &[A, B, C]);
    }

    #[test]
    fn containment() {
        let big = DeltaClique::new(vec![A, B], iv(0, 9));
        assert!(big.contains(&DeltaClique::new(vec![A, B], iv(1, 9))));
        assert!(big.contains(&big));
        let abc = DeltaClique::new(vec![A, B, C], iv(3, 6));
        assert!(!abc.contains(&DeltaClique::new(vec![B, C], iv(2, 6))));
        assert!(abc.contains(&DeltaClique::new(vec![A, C], iv(4, 5))));
    }

    #[test]
    fn ordering_is_by_interval_then_nodes() {
        let mut v = [
            DeltaClique::new(vec![A, C], iv(2, 8)),
            DeltaClique::new(vec![A, B], iv(0, 9)),
            DeltaClique::new(vec![A, B, C], iv(2, 7)),
            DeltaClique::new(vec![B, C], iv(1, 7)),
        ];
        v.sort();
        let starts: Vec<_> = v.iter().map(|c| (c.start().0, c.end().0)).collect();
        assert_eq!(starts, vec![(0, 9), (1, 7), (2, 7), (2, 8)]);
    }
}
