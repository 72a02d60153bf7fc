//! When every link happens at the same instant, maximal Δ-cliques are exactly
//! the maximal cliques of the underlying graph, for any Δ.
//!
//! ```bash
//! cargo run --example graph_reduction
//! ```

use std::collections::BTreeSet;

use dclique::oracle::static_maximal_cliques;
use dclique::{enumerate_maximal, Duration, EngineConfig, LinkStream};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // two triangles sharing an edge, plus a pendant vertex
    let edges = [("a", "b"), ("a", "c"), ("b", "c"), ("b", "d"), ("c", "d"), ("d", "e")];
    let text: String = edges.iter().map(|(u, v)| format!("0 {u} {v}\n")).collect();
    let stream = LinkStream::parse(&text)?;

    let graph = stream.induced_graph();
    let expected: BTreeSet<Vec<&str>> = static_maximal_cliques(&graph)
        .iter()
        .map(|c| c.iter().map(|&v| stream.label(v)).collect())
        .collect();
    println!("graph cliques: {expected:?}");

    for delta in [0, 1, 5] {
        let out = enumerate_maximal(&stream, Duration::new(delta).unwrap(), &EngineConfig::default())?;
        let got: BTreeSet<Vec<&str>> = out
            .cliques
            .iter()
            .map(|c| c.nodes().iter().map(|&v| stream.label(v)).collect())
            .collect();
        println!("Δ = {delta}:");
        for clique in &out.cliques {
            println!("  {}", clique.display(&stream));
        }
        assert_eq!(got, expected);
    }
    Ok(())
}
