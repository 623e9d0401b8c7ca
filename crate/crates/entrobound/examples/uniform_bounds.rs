//! The tight uniform continuity bound across its two branches, and the
//! classical Audenaert-Fannes bound as its von Neumann instance.
//!
//! ```bash
//! cargo run --example uniform_bounds
//! ```

use entrobound::bounds::{audenaert_fannes, uniform_bound, BoundBranch};
use entrobound::entropy::EntropyFamily;

fn main() {
    let d = 5;
    let vn = EntropyFamily::von_neumann();
    let renyi_half = EntropyFamily::renyi(0.5).unwrap();
    let tsallis_two = EntropyFamily::tsallis(2.0).unwrap();

    println!(
        "{:>5} {:>18} {:>18} {:>18} {:>12}",
        "eps", "von_neumann", "renyi(0.5)", "tsallis(2)", "branch"
    );
    for k in 1..=10 {
        let eps = f64::from(k) * 0.1;
        let b_vn = uniform_bound(&vn, d, eps).unwrap();
        let b_r = uniform_bound(&renyi_half, d, eps).unwrap();
        let b_t = uniform_bound(&tsallis_two, d, eps).unwrap();
        let branch = match b_vn.branch {
            BoundBranch::SubCritical => "sub-critical",
            BoundBranch::Saturated => "saturated",
        };
        println!(
            "{eps:>5.1} {:>18.12} {:>18.12} {:>18.12} {:>12}",
            b_vn.bound, b_r.bound, b_t.bound, branch
        );

        // The von Neumann instance *is* the Audenaert-Fannes bound.
        let af = audenaert_fannes(d, eps).unwrap();
        assert!((af - b_vn.bound).abs() < 1e-12);
    }
    println!("\nvon Neumann column = eps*log2(d-1) + binary_entropy(eps), capped at log2(d)");
}
