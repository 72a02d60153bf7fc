//! Cross-checks the enumerator against the exhaustive reference on a batch of
//! small random streams.
//!
//! ```bash
//! cargo run --release --example oracle_compare -- 500
//! ```

use dclique::oracle::brute_force_maximal;
use dclique::{enumerate_maximal, generate, Duration, EngineConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let count: u64 = std::env::args().nth(1).map_or(Ok(100), |s| s.parse())?;
    let mut mismatches = 0;
    for seed in 0..count {
        let nodes = 2 + (seed % 5) as usize;
        let stream = generate::random(nodes, 4 + (seed % 9) as usize, 20, seed)?;
        for delta in 0..=4 {
            let delta = Duration::new(delta).expect("non-negative");
            let fast = enumerate_maximal(&stream, delta, &EngineConfig::default())?.cliques;
            let slow = brute_force_maximal(&stream, delta)?;
            if fast != slow {
                mismatches += 1;
                println!("seed {seed}, Δ = {}: enumerator and reference disagree", delta.ticks());
            }
        }
    }
    println!("{} streams × 5 values of Δ, {mismatches} mismatches", count);
    if mismatches > 0 {
        std::process::exit(1);
    }
    Ok(())
}
