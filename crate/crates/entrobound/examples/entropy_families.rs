//! Evaluate the three built-in (h, phi)-entropies on a few states and show
//! which family qualifies for the tight continuity bound.
//!
//! ```bash
//! cargo run --example entropy_families
//! ```

use entrobound::entropy::EntropyFamily;
use entrobound::spectrum::Spectrum;

fn main() {
    let states = [
        ("pure(4)", Spectrum::pure(4)),
        ("uniform(4)", Spectrum::uniform(4)),
        (
            "diag(0.5, 0.3, 0.15, 0.05)",
            Spectrum::new(&[0.5, 0.3, 0.15, 0.05]).unwrap(),
        ),
    ];
    let families = [
        EntropyFamily::von_neumann(),
        EntropyFamily::renyi(0.5).unwrap(),
        EntropyFamily::renyi(2.0).unwrap(),
        EntropyFamily::tsallis(0.5).unwrap(),
        EntropyFamily::tsallis(2.0).unwrap(),
    ];

    println!(
        "{:<28} {:>14} {:>10}",
        "state / family", "entropy", "eligible"
    );
    for (name, state) in &states {
        println!("{name}");
        for family in &families {
            let value = family.evaluate(state).unwrap();
            let eligible = family.eligibility().eligible;
            println!("  {:<26} {value:>14.10} {eligible:>10}", family.label());
        }
    }

    // Eligibility is a statement about curvature: Renyi above 1 keeps being
    // a fine entropy, it just has no tight uniform bound of this form.
    let reason = EntropyFamily::renyi(2.0).unwrap().eligibility().reason;
    println!("\nwhy renyi(2) is out: {reason}");
}
