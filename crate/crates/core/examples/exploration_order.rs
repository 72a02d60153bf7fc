//! Compares breadth-first and depth-first exploration: same answer, different
//! order of discovery and peak clique size |X|·(e-b) over time.
//!
//! ```bash
//! cargo run --release --example exploration_order
//! ```

use dclique::analytics::discovery_curve;
use dclique::{enumerate_maximal, generate, Duration, EngineConfig, Order};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let stream = generate::random(10, 80, 200, 42)?;
    let delta = Duration::new(15).expect("non-negative");

    let mut results = Vec::new();
    for order in [Order::Bfs, Order::Dfs] {
        let config = EngineConfig {
            order,
            log_discovery: true,
            ..EngineConfig::default()
        };
        let out = enumerate_maximal(&stream, delta, &config)?;
        let curve = discovery_curve(&out.telemetry)?;
        println!("{order:?}: {} iterations, {} maximal cliques", out.telemetry.iterations, out.cliques.len());
        let step = (curve.len() / 8).max(1);
        for point in curve.iter().step_by(step).chain(curve.last()) {
            println!(
                "  iteration {:>6}: {:>4} found, largest |X|·(e-b) {}",
                point.iteration, point.maximal_count, point.max_size
            );
        }
        results.push(out.cliques);
    }
    assert_eq!(results[0], results[1], "exploration order must not change the result");
    println!("\nboth orders produced the same {} cliques", results[0].len());
    Ok(())
}
