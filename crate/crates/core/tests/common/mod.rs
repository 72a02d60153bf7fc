#![allow(dead_code)]

use dclique::engine::{left_extension, node_extensions, right_extension, SearchState};
use dclique::generate;
use dclique::oracle::contains;
use dclique::{DeltaClique, Duration, LinkStream, NodeId, StaticGraph, TimeInterval, Timestamp};

pub const TRIANGLE: &str = "3 a b\n4 b c\n5 a c\n6 a b\n";

pub fn triangle() -> LinkStream {
    LinkStream::parse(TRIANGLE).unwrap()
}

pub fn d(t: i64) -> Duration {
    Duration::new(t).unwrap()
}

/// Direct evaluation of "for every real τ in [b, max(e-Δ, b)] some link lies
/// in [τ, min(τ+Δ, e)]". Times are doubled so midpoints stay integral; the
/// truth value can only change at b, e-Δ, t_i and t_i-Δ, so testing those
/// points and the midpoints between them is exhaustive.
pub fn tau_scan_covers(times: &[i64], b: i64, e: i64, delta: i64) -> bool {
    let (b2, e2, d2) = (2 * b, 2 * e, 2 * delta);
    let hi = (e2 - d2).max(b2);
    let mut points = vec![b2, hi];
    for &t in times {
        points.push(2 * t);
        points.push(2 * t - d2);
    }
    points.retain(|&p| b2 <= p && p <= hi);
    points.sort_unstable();
    points.dedup();
    let mids: Vec<i64> = points.windows(2).map(|w| (w[0] + w[1]) / 2).collect();
    points.extend(mids);
    points.iter().all(|&tau| {
        let top = (tau + d2).min(e2);
        times.iter().any(|&t| tau <= 2 * t && 2 * t <= top)
    })
}

/// Maximal cliques by checking every vertex subset.
pub fn naive_static_cliques(graph: &StaticGraph) -> Vec<Vec<NodeId>> {
    let n = graph.vertex_count();
    let cliques: Vec<u32> = (1u32..1 << n)
        .filter(|&s| {
            let nodes: Vec<NodeId> = (0..n).filter(|&i| s >> i & 1 == 1).map(|i| NodeId(i as u32)).collect();
            graph.is_clique(&nodes)
        })
        .collect();
    let mut out: Vec<Vec<NodeId>> = cliques
        .iter()
        .filter(|&&s| !cliques.iter().any(|&o| o != s && o & s == s))
        .map(|&s| (0..n).filter(|&i| s >> i & 1 == 1).map(|i| NodeId(i as u32)).collect())
        .collect();
    out.sort();
    out
}

/// Random-stream recipe shared by the oracle-equivalence checks:
/// n in 2..=5, m in ceil(n/2)..=12, integer times in [0, 20].
pub fn small_random_stream(seed: u64) -> LinkStream {
    let n = 2 + (seed % 4) as usize;
    let lo = n.div_ceil(2);
    let cap = (n * (n - 1) / 2 * 21).min(12);
    let m = lo + ((seed / 4) as usize % (cap - lo + 1));
    generate::random(n, m, 20, seed).unwrap()
}

/// Stream with every edge of the graph at time 0.
pub fn graph_stream(edges: &[(usize, usize)]) -> LinkStream {
    let text: String = edges.iter().map(|(u, v)| format!("0 v{u} v{v}\n")).collect();
    LinkStream::parse(&text).unwrap()
}

/// Distinct values among `t`, `t - Δ` and `t + Δ` over all link times.
pub fn boundary_candidates(stream: &LinkStream, delta: Duration) -> usize {
    let mut set = std::collections::BTreeSet::new();
    for l in stream.links() {
        set.insert(l.time.0);
        set.insert(l.time.0 - delta.ticks());
        set.insert(l.time.0 + delta.ticks());
    }
    set.len()
}

/// Every output invariant of the engine; returns one message per violation.
/// `default_span` enables the checks that only hold without an explicit span.
pub fn invariant_violations(stream: &LinkStream, delta: Duration, cliques: &[DeltaClique], default_span: bool) -> Vec<String> {
    let mut bad = Vec::new();
    let span = stream.effective_span(delta);
    let graph = stream.induced_graph();
    for c in cliques {
        let name = c.display(stream).to_string();
        if !stream.is_delta_clique(c, delta) {
            bad.push(format!("{name}: not a Δ-clique"));
        }
        if !span.contains(&c.interval()) {
            bad.push(format!("{name}: outside span {span}"));
        }
        let state = SearchState {
            clique: c.clone(),
            candidates: None,
        };
        if !node_extensions(stream, &state, delta, false).is_empty() {
            bad.push(format!("{name}: admits a node extension"));
        }
        for narrowing in [false, true] {
            if left_extension(stream, c, delta, span, narrowing) != c.start() {
                bad.push(format!("{name}: extends left (narrowing={narrowing})"));
            }
            if right_extension(stream, c, delta, span, narrowing) != c.end() {
                bad.push(format!("{name}: extends right (narrowing={narrowing})"));
            }
        }
        if !graph.is_clique(c.nodes()) {
            bad.push(format!("{name}: not a clique of the induced graph"));
        }
        if default_span {
            if c.duration() < delta.ticks() {
                bad.push(format!("{name}: shorter than Δ"));
            }
            let nodes = c.nodes();
            let mut f = None::<Timestamp>;
            let mut l = None::<Timestamp>;
            for (i, &u) in nodes.iter().enumerate() {
                for &v in &nodes[i + 1..] {
                    let first = stream.first_occurrence(u, v, c.start()).unwrap();
                    let last = stream.last_occurrence(u, v, c.end()).unwrap();
                    f = Some(f.map_or(first, |x| x.max(first)));
                    l = Some(l.map_or(last, |x| x.min(last)));
                }
            }
            if f.unwrap() - delta != c.start() || l.unwrap() + delta != c.end() {
                bad.push(format!("{name}: boundaries are not f-Δ / l+Δ"));
            }
        }
    }
    for (i, a) in cliques.iter().enumerate() {
        for (j, b) in cliques.iter().enumerate() {
            if i != j && contains(a, b) {
                bad.push(format!(
                    "{} contains {}",
                    a.display(stream),
                    b.display(stream)
                ));
            }
        }
    }
    bad
}

pub fn interval(b: i64, e: i64) -> TimeInterval {
    TimeInterval::from_ticks(b, e)
}
