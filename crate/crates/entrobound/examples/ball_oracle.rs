//! Brute-force check that M_eps(x) really is the entropy maximizer and
//! majorization minimum of the ball: sample the ball hard and watch the
//! Monte-Carlo maximum creep up to H(M_eps(x)) without ever crossing it.
//!
//! ```bash
//! cargo run --release --example ball_oracle
//! ```

use entrobound::entropy::EntropyFamily;
use entrobound::minimizer::mmm;
use entrobound::oracle::{brute_force_max_entropy, sample_ball, RngSeed};
use entrobound::spectrum::{majorizes, Spectrum};

fn main() {
    let x = Spectrum::new(&[0.6, 0.25, 0.15]).unwrap();
    let eps = 0.12;
    let family = EntropyFamily::von_neumann();

    let minimal = mmm(&x, eps).unwrap().output;
    let cap = family.evaluate(&minimal).unwrap();
    println!("center x       = {:?}", x.values());
    println!("M_eps(x)       = {:?}", minimal.values());
    println!("H(M_eps(x))    = {cap:.12}\n");

    println!("{:>9} {:>18} {:>12}", "samples", "sampled max", "shortfall");
    for &samples in &[100, 1_000, 10_000, 100_000] {
        let best = brute_force_max_entropy(&family, &x, eps, samples, RngSeed(9)).unwrap();
        println!("{samples:>9} {best:>18.12} {:>12.3e}", cap - best);
        assert!(best <= cap + 1e-12);
    }

    // And the order-theoretic half: every ball member majorizes M_eps(x).
    let mut rng = RngSeed(10).rng();
    let trials = 50_000;
    for _ in 0..trials {
        let omega = sample_ball(&x, eps, &mut rng);
        assert!(majorizes(&omega, &minimal).unwrap().left_majorizes());
    }
    println!("\n{trials} ball samples, every one majorizes M_eps(x)");
}
