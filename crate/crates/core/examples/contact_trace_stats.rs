//! Loads a class-labelled contact trace, enumerates at several Δ, and prints
//! summary rows, size/duration distributions, and how often static cliques
//! stay within a single class.
//!
//! ```bash
//! cargo run --release --example contact_trace_stats [trace.tsv]
//! ```

use std::collections::HashMap;

use dclique::analytics::{ccdf, class_homogeneity, durations, sizes, summarize};
use dclique::oracle::static_maximal_cliques;
use dclique::{enumerate_maximal, Duration, EngineConfig, LinkStream, NodeId};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/classroom.tsv").to_owned());
    let stream = LinkStream::parse(&std::fs::read_to_string(&path)?)?;
    println!("{path}: {} nodes, {} links", stream.node_count(), stream.link_count());

    println!("\n{:>6} {:>8} {:>6} {:>10} {:>10}", "Δ", "cliques", "max|X|", "max e-b", "seconds");
    for delta in [20, 60, 300, 900] {
        let delta = Duration::new(delta).expect("non-negative");
        let out = enumerate_maximal(&stream, delta, &EngineConfig::default())?;
        let row = summarize(delta, &out.cliques, &out.telemetry);
        println!(
            "{:>6} {:>8} {:>6} {:>10} {:>10.4}",
            row.delta, row.result_count, row.max_nodes, row.max_duration, row.runtime_seconds
        );
        if delta.ticks() == 60 {
            let by_size = ccdf(&sizes(&out.cliques))?;
            let by_duration = ccdf(&durations(&out.cliques))?;
            println!("         P(|X| >= 3) = {:.3}", by_size.at(3));
            println!("         P(e-b >= 2Δ) = {:.3}", by_duration.at(2 * delta.ticks()));
        }
    }

    let graph = stream.induced_graph();
    let cliques = static_maximal_cliques(&graph);
    let classes: HashMap<NodeId, String> = stream
        .nodes()
        .filter_map(|v| stream.class(v).map(|c| (v, c.to_owned())))
        .collect();
    println!(
        "\ninduced graph: {} edges, {} maximal cliques, largest {}",
        graph.edge_count(),
        cliques.len(),
        cliques.iter().map(Vec::len).max().unwrap_or(0)
    );
    if !classes.is_empty() {
        let fraction = class_homogeneity(cliques.iter().map(Vec::as_slice), &classes)?;
        println!("single-class cliques: {:.1}%", 100.0 * fraction);
    }
    Ok(())
}
