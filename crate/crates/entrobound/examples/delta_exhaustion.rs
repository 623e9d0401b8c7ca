//! Walk a state to the completely mixed state in delta-sized hops: each hop
//! merges at least one more eigenvalue into an extreme block, so the walk
//! ends in well under 4d steps.
//!
//! ```bash
//! cargo run --example delta_exhaustion
//! ```

use entrobound::minimizer::{delta_step, mmm};
use entrobound::oracle::exhaustion_trace;
use entrobound::spectrum::Spectrum;

fn main() {
    let mut state = Spectrum::new(&[0.32, 0.26, 0.19, 0.13, 0.10]).unwrap();
    println!("start: {:?}\n", state.values());

    let mut step = 0;
    while state.distinct_groups().len() >= 2 {
        step += 1;
        let delta = delta_step(&state).unwrap().value;
        let result = mmm(&state, delta).unwrap();
        let m = result.output.multiplicity_extremes();
        println!(
            "step {step}: delta = {delta:.6}  ->  {:?}  (k+ = {}, k- = {})",
            result.output.values(),
            m.k_plus,
            m.k_minus
        );
        state = result.output;
    }
    println!("\nreached the completely mixed state in {step} steps (4d = 20)");

    // Same walk, recorded by the library helper over a batch of states.
    let trace = exhaustion_trace(&Spectrum::new(&[0.4, 0.3, 0.2, 0.06, 0.04]).unwrap()).unwrap();
    println!(
        "second state: {} steps, multiplicity path {:?}",
        trace.steps(),
        trace
            .path
            .iter()
            .map(|s| (s.k_plus, s.k_minus))
            .collect::<Vec<_>>()
    );
}
