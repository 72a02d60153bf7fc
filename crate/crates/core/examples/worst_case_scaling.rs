//! Measures how the number of explored states grows on the two adversarial
//! families: a burst of all pairs at one instant (exponential in nodes) and a
//! long chain of links spaced exactly Δ apart (quadratic in links).
//!
//! ```bash
//! cargo run --release --example worst_case_scaling
//! ```

use dclique::{enumerate_maximal, generate, Duration, EngineConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let config = EngineConfig::default();

    println!("burst (Δ = 1)");
    println!("{:>6} {:>10} {:>8}", "nodes", "states", "ratio");
    let mut previous = None;
    for nodes in [6, 8, 10, 12] {
        let out = enumerate_maximal(&generate::burst(nodes)?, Duration::new(1).unwrap(), &config)?;
        let states = out.telemetry.states_seen;
        let ratio = previous.map_or(String::from("-"), |p: usize| format!("{:.2}", states as f64 / p as f64));
        println!("{nodes:>6} {states:>10} {ratio:>8}");
        previous = Some(states);
    }

    println!("\nchain (Δ = spacing = 10)");
    println!("{:>6} {:>10} {:>8}", "links", "states", "ratio");
    let mut previous = None;
    for links in [25, 50, 100, 200] {
        let out = enumerate_maximal(&generate::chain(1, links, 10)?, Duration::new(10).unwrap(), &config)?;
        let states = out.telemetry.states_seen;
        let ratio = previous.map_or(String::from("-"), |p: usize| format!("{:.2}", states as f64 / p as f64));
        println!("{links:>6} {states:>10} {ratio:>8}");
        previous = Some(states);
    }
    Ok(())
}
