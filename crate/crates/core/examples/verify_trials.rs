//! The seeded verification harness, run directly from the library.
//!
//! `cargo run --example verify_trials -- 12 5` runs 5 trials from seed 12.

use abel_geometry::cli::run_seeded_trial;

fn main() {
    let mut args = std::env::args().skip(1);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(7);
    let trials = args.next().and_then(|s| s.parse().ok()).unwrap_or(3);
    for i in 0..trials {
        let results = run_seeded_trial(None, seed, i, 10, 3).expect("random trials are well posed");
        let failed: Vec<_> = results.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect();
        println!("trial {i}: {} checks, failed {:?}", results.len(), failed);
    }
}
