//! Equality in the continuity bound is achieved exactly by (pure state,
//! witness) pairs, and by nothing else: nudge the witness and equality is
//! gone.
//!
//! ```bash
//! cargo run --example tight_witness
//! ```

use entrobound::bounds::{bound_gap, uniform_bound};
use entrobound::entropy::EntropyFamily;
use entrobound::spectrum::Spectrum;

fn main() {
    let family = EntropyFamily::renyi(0.5).unwrap();
    let d = 4;
    let eps = 0.3;

    let pure = Spectrum::pure(d);
    let witness = uniform_bound(&family, d, eps)
        .unwrap()
        .tight_witness
        .expect("bound carries its witness");
    println!("witness spectrum: {:?}", witness.values());

    let gap = bound_gap(&family, &pure, &witness, eps).unwrap();
    println!(
        "on the witness pair:  |H(x)-H(y)| = {:.15}, bound = {:.15}, tight = {}",
        gap.lhs, gap.rhs, gap.tight
    );

    let mut nudged = witness.values().to_vec();
    nudged[0] += 1e-3;
    nudged[1] -= 1e-3;
    let nudged = Spectrum::new(&nudged).unwrap();
    let off = bound_gap(&family, &pure, &nudged, eps).unwrap();
    println!(
        "after a 1e-3 nudge:   |H(x)-H(y)| = {:.15}, bound = {:.15}, tight = {}",
        off.lhs, off.rhs, off.tight
    );
    println!("slack opened up: {:.3e}", off.rhs - off.lhs);
}
