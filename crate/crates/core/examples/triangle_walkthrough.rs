//! Enumerates the maximal Δ-cliques of a four-link stream and shows how the
//! result changes with Δ.
//!
//! ```bash
//! cargo run --example triangle_walkthrough
//! ```

use dclique::{enumerate_maximal, Duration, EngineConfig, LinkStream};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/triangle.txt"))?;
    let stream = LinkStream::parse(&text)?;
    println!(
        "{} nodes, {} links, times {}..{}",
        stream.node_count(),
        stream.link_count(),
        stream.earliest(),
        stream.latest()
    );

    for delta in 1..=3 {
        let delta = Duration::new(delta).expect("non-negative");
        let out = enumerate_maximal(&stream, delta, &EngineConfig::default())?;
        println!("\nΔ = {}: {} maximal cliques", delta.ticks(), out.cliques.len());
        for clique in &out.cliques {
            println!("  {}", clique.display(&stream));
        }
    }
    Ok(())
}
