//! Synthetic link streams, including the two worst cases of the search:
//! a pair linked once per Δ (quadratically many intervals) and a complete
//! graph at one instant (every node subset).

use std::collections::BTreeSet;
use std::io::{self, Write};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::GenerateError;
use crate::stream::{LinkStream, LinkStreamBuilder};

fn label(i: usize) -> String {
    format!("n{i}")
}

fn finish(links: impl IntoIterator<Item = (i64, usize, usize)>) -> LinkStream {
    let mut builder = LinkStreamBuilder::new();
    for (line, (t, u, v)) in links.into_iter().enumerate() {
        builder
            .add(line + 1, t, &label(u), &label(v))
            .expect("generated links are loop-free");
    }
    builder.build().expect("generated streams are non-empty")
}

/// `pairs` disjoint node pairs, each linked at `0, spacing, 2·spacing, …`
/// (`links_per_pair` times).
pub fn chain(pairs: usize, links_per_pair: usize, spacing: i64) -> Result<LinkStream, GenerateError> {
    if pairs == 0 || links_per_pair == 0 {
        return Err(GenerateError::InvalidParams("chain needs at least one pair and one link".into()));
    }
    if spacing < 1 {
        return Err(GenerateError::InvalidParams(format!("chain spacing must be positive, got {spacing}")));
    }
    Ok(finish((0..pairs).flat_map(|p| {
        (0..links_per_pair).map(move |k| (k as i64 * spacing, 2 * p, 2 * p + 1))
    })))
}

/// Every pair of `nodes` linked once at time 0.
pub fn burst(nodes: usize) -> Result<LinkStream, GenerateError> {
    if nodes < 2 {
        return Err(GenerateError::InvalidParams(format!("burst needs at least 2 nodes, got {nodes}")));
    }
    Ok(finish((0..nodes).flat_map(|u| (u + 1..nodes).map(move |v| (0, u, v)))))
}

/// `links` distinct links over exactly `nodes` nodes, times uniform in
/// `[0, max_time]`. The same seed always yields the same stream.
pub fn random(nodes: usize, links: usize, max_time: i64, seed: u64) -> Result<LinkStream, GenerateError> {
    if nodes < 2 {
        return Err(GenerateError::InvalidParams(format!("random needs at least 2 nodes, got {nodes}")));
    }
    if max_time < 0 {
        return Err(GenerateError::InvalidParams("max time must be non-negative".into()));
    }
    let cover = nodes.div_ceil(2);
    let capacity = (nodes * (nodes - 1) / 2) as u128 * (max_time as u128 + 1);
    if links < cover || links as u128 > capacity {
        return Err(GenerateError::InvalidParams(format!(
            "{links} links cannot cover {nodes} nodes with distinct links in [0,{max_time}]"
        )));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut chosen: BTreeSet<(i64, usize, usize)> = BTreeSet::new();
    let key = |t: i64, u: usize, v: usize| (t, u.min(v), u.max(v));

    // pair up a random permutation so that no node is isolated
    let mut perm: Vec<usize> = (0..nodes).collect();
    perm.shuffle(&mut rng);
    for chunk in perm.chunks(2) {
        let u = chunk[0];
        let v = if chunk.len() == 2 {
            chunk[1]
        } else {
            loop {
                let w = rng.gen_range(0..nodes);
                if w != u {
                    break w;
                }
            }
        };
        while !chosen.insert(key(rng.gen_range(0..=max_time), u, v)) {}
    }
    while chosen.len() < links {
        let u = rng.gen_range(0..nodes);
        let v = rng.gen_range(0..nodes);
        if u != v {
            chosen.insert(key(rng.gen_range(0..=max_time), u, v));
        }
    }
    Ok(finish(chosen))
}

/// Writes the stream as `time u v` lines in link order.
pub fn write_stream<W: Write>(stream: &LinkStream, mut out: W) -> io::Result<()> {
    for link in stream.links() {
        writeln!(out, "{} {} {}", link.time, stream.label(link.u), stream.label(link.v))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::time::Timestamp;

    #[test]
    fn chain_links_are_spaced() {
        let s = chain(1, 3, 1).unwrap();
        assert_eq!(s.node_count(), 2);
        let (u, v) = s.pairs()[0];
        assert_eq!(s.timeline(u, v).unwrap(), &[Timestamp(0), Timestamp(1), Timestamp(2)]);
        assert_eq!(chain(3, 4, 10).unwrap().link_count(), 12);
        assert!(chain(1, 3, 0).is_err());
        assert!(chain(0, 3, 1).is_err());
    }

    #[test]
    fn burst_is_complete_at_zero() {
        let s = burst(5).unwrap();
        assert_eq!(s.link_count(), 10);
        assert!(s.links().iter().all(|l| l.time == Timestamp(0)));
        assert!(burst(1).is_err());
    }

    #[test]
    fn random_is_reproducible_and_exact() {
        let a = random(5, 12, 20, 42).unwrap();
        let b = random(5, 12, 20, 42).unwrap();
        assert_eq!(a.links(), b.links());
        assert_eq!(a.node_count(), 5);
        assert_eq!(a.link_count(), 12);
        assert!(a.links().iter().all(|l| (0..=20).contains(&l.time.0)));
        assert_ne!(random(5, 12, 20, 43).unwrap().links(), a.links());
    }

    #[test]
    fn random_rejects_impossible_params() {
        assert!(random(6, 2, 10, 0).is_err());
        assert!(random(2, 3, 1, 0).is_err());
        assert!(random(1, 1, 1, 0).is_err());
        assert!(random(2, 2, 1, 0).is_ok());
    }
}
