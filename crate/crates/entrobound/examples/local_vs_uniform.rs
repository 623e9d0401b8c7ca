//! State-dependent local bounds scatter strictly below the uniform bound
//! curve; only pure states touch it. A text miniature of the bound
//! comparison figure.
//!
//! ```bash
//! cargo run --example local_vs_uniform
//! ```

use entrobound::bounds::{local_bound, uniform_bound};
use entrobound::entropy::EntropyFamily;
use entrobound::oracle::{sample_spectrum, RngSeed};
use entrobound::spectrum::Spectrum;

fn main() {
    let family = EntropyFamily::renyi(0.5).unwrap();
    let d = 5;
    let eps = 0.1;
    let uniform = uniform_bound(&family, d, eps).unwrap().bound;

    let mut rng = RngSeed(2024).rng();
    let mut worst: f64 = 0.0;
    println!("uniform bound at eps = {eps}: {uniform:.12}\n");
    println!("{:>4} {:>16} {:>10}", "k", "local gap", "fraction");
    for k in 0..15 {
        let state = sample_spectrum(d, &mut rng);
        let local = local_bound(&family, &state, eps).unwrap();
        worst = worst.max(local);
        println!("{k:>4} {local:>16.12} {:>9.1}%", 100.0 * local / uniform);
        assert!(local <= uniform + 1e-12);
    }
    println!("\nlargest sampled local gap: {worst:.12}");

    let at_pure = local_bound(&family, &Spectrum::pure(d), eps).unwrap();
    println!("local gap at a pure state: {at_pure:.12} (meets the uniform bound)");
}
