//! The strictness counterexample: two comparable, non-equivalent states
//! whose von Neumann entropy gaps coincide for every eps up to 0.05, while
//! Renyi-2 separates them (and in the wrong direction for Schur convexity).
//!
//! ```bash
//! cargo run --example counterexample
//! ```

use entrobound::bounds::delta_eps;
use entrobound::entropy::EntropyFamily;
use entrobound::minimizer::delta_pair;
use entrobound::spectrum::{majorizes, Spectrum};

fn main() {
    let rho = Spectrum::new(&[0.1, 0.2, 0.2, 0.5]).unwrap();
    let sigma = Spectrum::new(&[0.1, 0.15, 0.25, 0.5]).unwrap();

    let verdict = majorizes(&sigma, &rho).unwrap();
    println!("rho ≺ sigma: {}", verdict.left_majorizes());
    println!(
        "delta(rho, sigma) = {}\n",
        delta_pair(&rho, &sigma).unwrap().value
    );

    let vn = EntropyFamily::von_neumann();
    let renyi2 = EntropyFamily::renyi(2.0).unwrap();

    println!(
        "{:>5} {:>22} {:>22}",
        "eps", "vN gap difference", "Renyi-2 gap difference"
    );
    for &eps in &[0.01, 0.02, 0.03, 0.04, 0.05] {
        let vn_diff =
            delta_eps(&vn, &rho, eps).unwrap().value - delta_eps(&vn, &sigma, eps).unwrap().value;
        let r2_diff = delta_eps(&renyi2, &rho, eps).unwrap().value
            - delta_eps(&renyi2, &sigma, eps).unwrap().value;
        println!("{eps:>5.2} {vn_diff:>22.3e} {r2_diff:>22.6e}");
    }
    println!(
        "\nvon Neumann: equal gaps on a non-equivalent pair, so the gap is \
         Schur convex but not strictly.\nRenyi-2: the smaller state wins, so \
         the gap is not Schur convex at all."
    );
}
