//! Brute-force reference enumerators.
//!
//! `brute_force_maximal` does not share any search logic with the engine: it
//! tests every node subset against every pair of boundary candidates and
//! keeps the containment-maximal survivors. A maximal Δ-clique starts at
//! `α` or at `t - Δ` for some link time `t` and ends at `ω` or `t + Δ`, so
//! the grids below cover every answer; raw link times are added for margin.

use std::collections::BTreeSet;

use crate::clique::DeltaClique;
use crate::error::OracleError;
use crate::graph::StaticGraph;
use crate::stream::{LinkStream, NodeId};
use crate::time::{Duration, TimeInterval, Timestamp};

pub const MAX_ORACLE_NODES: usize = 8;
pub const MAX_ORACLE_LINKS: usize = 30;

/// True iff `inner` is included in `outer` (reflexive).
pub fn contains(outer: &DeltaClique, inner: &DeltaClique) -> bool {
    outer.contains(inner)
}

/// Every maximal Δ-clique, by exhaustive search. Sorted by `(b, e, nodes)`.
pub fn brute_force_maximal(stream: &LinkStream, delta: Duration) -> Result<Vec<DeltaClique>, OracleError> {
    brute_force_maximal_widened(stream, delta, 0)
}

/// Same as [`brute_force_maximal`], with every boundary candidate also tried
/// at `±1..=widen` ticks. Used to check that the candidate grids suffice.
pub fn brute_force_maximal_widened(
    stream: &LinkStream,
    delta: Duration,
    widen: i64,
) -> Result<Vec<DeltaClique>, OracleError> {
    let n = stream.node_count();
    let m = stream.link_count();
    if n > MAX_ORACLE_NODES || m > MAX_ORACLE_LINKS {
        return Err(OracleError::TooLarge {
            nodes: n,
            links: m,
            max_nodes: MAX_ORACLE_NODES,
            max_links: MAX_ORACLE_LINKS,
        });
    }

    let span = stream.effective_span(delta);
    let times: BTreeSet<Timestamp> = stream.links().iter().map(|l| l.time).collect();
    let grid = |anchor: Timestamp, shifted: &dyn Fn(Timestamp) -> Timestamp| {
        let mut raw: Vec<Timestamp> = vec![anchor];
        for &t in &times {
            raw.push(t);
            raw.push(shifted(t));
        }
        let mut out = BTreeSet::new();
        for t in raw {
            for w in -widen..=widen {
                let c = Timestamp(t.0 + w);
                out.insert(c.max(span.start()).min(span.end()));
            }
        }
        out.into_iter().collect::<Vec<_>>()
    };
    let starts = grid(span.start(), &|t| t - delta);
    let ends = grid(span.end(), &|t| t + delta);

    let mut pair_index = vec![vec![usize::MAX; n]; n];
    let mut pairs = Vec::new();
    for (u, row) in pair_index.iter_mut().enumerate() {
        for (v, slot) in row.iter_mut().enumerate().skip(u + 1) {
            *slot = pairs.len();
            pairs.push((NodeId(u as u32), NodeId(v as u32)));
        }
    }
    let subsets: Vec<(Vec<NodeId>, u64)> = (0u32..1 << n)
        .filter(|s| s.count_ones() >= 2)
        .map(|s| {
            let nodes: Vec<NodeId> = (0..n).filter(|&i| s >> i & 1 == 1).map(|i| NodeId(i as u32)).collect();
            let mut mask = 0u64;
            for (i, u) in nodes.iter().enumerate() {
                for v in &nodes[i + 1..] {
                    mask |= 1 << pair_index[u.index()][v.index()];
                }
            }
            (nodes, mask)
        })
        .collect();

    let mut found = Vec::new();
    for &b in &starts {
        for &e in ends.iter().filter(|&&e| e >= b) {
            let interval = TimeInterval::new(b, e).expect("filtered b <= e");
            let covered = pairs
                .iter()
                .enumerate()
                .filter(|(_, &(u, v))| stream.pair_covers(u, v, interval, delta))
                .fold(0u64, |acc, (i, _)| acc | 1 << i);
            for (nodes, mask) in &subsets {
                if covered & mask == *mask {
                    found.push(DeltaClique::new(nodes.clone(), interval));
                }
            }
        }
    }
    found.sort_unstable();
    found.dedup();

    let maximal = found
        .iter()
        .filter(|c| !found.iter().any(|o| o != *c && contains(o, c)))
        .cloned()
        .collect();
    Ok(maximal)
}

/// All maximal cliques of a static graph (Bron–Kerbosch with Tomita
/// pivoting). Each clique is sorted; the list is sorted lexicographically.
pub fn static_maximal_cliques(graph: &StaticGraph) -> Vec<Vec<NodeId>> {
    let mut out = Vec::new();
    let candidates: Vec<NodeId> = graph.vertices().collect();
    let mut current = Vec::new();
    bron_kerbosch(graph, &mut current, candidates, Vec::new(), &mut out);
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort_unstable();
    out
}

fn intersect_sorted(a: &[NodeId], b: &[NodeId]) -> Vec<NodeId> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

// `candidates` and `excluded` are kept sorted.
fn bron_kerbosch(
    graph: &StaticGraph,
    current: &mut Vec<NodeId>,
    mut candidates: Vec<NodeId>,
    mut excluded: Vec<NodeId>,
    out: &mut Vec<Vec<NodeId>>,
) {
    if candidates.is_empty() {
        if excluded.is_empty() {
            out.push(current.clone());
        }
        return;
    }
    // pivot maximizing |N(p) ∩ candidates|
    let pivot = candidates
        .iter()
        .chain(excluded.iter())
        .copied()
        .max_by_key(|&p| intersect_sorted(graph.neighbors(p), &candidates).len())
        .expect("candidates non-empty");
    let todo: Vec<NodeId> = candidates
        .iter()
        .copied()
        .filter(|&v| !graph.has_edge(pivot, v))
        .collect();
    for v in todo {
        let neighbors = graph.neighbors(v);
        current.push(v);
        bron_kerbosch(
            graph,
            current,
            intersect_sorted(&candidates, neighbors),
            intersect_sorted(&excluded, neighbors),
            out,
        );
        current.pop();
        let at = candidates.binary_search(&v).expect("v is a candidate");
        candidates.remove(at);
        let at = excluded.binary_search(&v).unwrap_err();
        excluded.insert(at, v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TRIANGLE: &str = "3 a b\n4 b c\n5 a c\n6 a b\n";

    fn d(t: i64) -> Duration {
        Duration::new(t).unwrap()
    }

    fn rendered(s: &LinkStream, cliques: &[DeltaClique]) -> Vec<String> {
        cliques.iter().map(|c| c.display(s).to_string()).collect()
    }

    #[test]
    fn triangle_delta3() {
        let s = LinkStream::parse(TRIANGLE).unwrap();
        let out = brute_force_maximal(&s, d(3)).unwrap();
        assert_eq!(
            rendered(&s, &out),
            vec!["({a,b},[0,9])", "({b,c},[1,7])", "({a,b,c},[2,7])", "({a,c},[2,8])"]
        );
    }

    #[test]
    fn triangle_delta1() {
        let s = LinkStream::parse(TRIANGLE).unwrap();
        let out = brute_force_maximal(&s, d(1)).unwrap();
        assert_eq!(
            rendered(&s, &out),
            vec!["({a,b},[2,4])", "({b,c},[3,5])", "({a,c},[4,6])", "({a,b},[5,7])"]
        );
    }

    #[test]
    fn single_link() {
        let s = LinkStream::parse("0 a b").unwrap();
        let out = brute_force_maximal(&s, d(5)).unwrap();
        assert_eq!(rendered(&s, &out), vec!["({a,b},[-5,5])"]);
    }

    #[test]
    fn size_guard() {
        let text: String = (0..9).map(|i| format!("0 n{i} n{}\n", i + 1)).collect();
        let s = LinkStream::parse(&text).unwrap();
        assert!(matches!(
            brute_force_maximal(&s, d(1)),
            Err(OracleError::TooLarge { nodes: 10, .. })
        ));
    }

    #[test]
    fn containment_cases() {
        let s = LinkStream::parse(TRIANGLE).unwrap();
        let c = |l: &[&str], b, e| DeltaClique::from_labels(&s, l, b, e).unwrap();
        assert!(contains(&c(&["a", "b"], 0, 9), &c(&["a", "b"], 1, 9)));
        assert!(contains(&c(&["a", "b"], 0, 9), &c(&["a", "b"], 0, 9)));
        assert!(!contains(&c(&["a", "b", "c"], 3, 6), &c(&["b", "c"], 2, 6)));
    }

    fn graph(n: usize, edges: &[(u32, u32)]) -> StaticGraph {
        StaticGraph::from_edges(n, edges.iter().map(|&(u, v)| (NodeId(u), NodeId(v))))
    }

    fn ids(v: &[u32]) -> Vec<NodeId> {
        v.iter().copied().map(NodeId).collect()
    }

    #[test]
    fn static_triangle_and_path() {
        assert_eq!(static_maximal_cliques(&graph(3, &[(0, 1), (1, 2), (0, 2)])), vec![ids(&[0, 1, 2])]);
        assert_eq!(
            static_maximal_cliques(&graph(3, &[(0, 1), (1, 2)])),
            vec![ids(&[0, 1]), ids(&[1, 2])]
        );
    }

    #[test]
    fn static_isolated_vertex_is_its_own_clique() {
        assert_eq!(
            static_maximal_cliques(&graph(3, &[(0, 1)])),
            vec![ids(&[0, 1]), ids(&[2])]
        );
    }
}
