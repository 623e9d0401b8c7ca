//! Trace the spectrum of the majorization-minimal state M_eps(sigma) as the
//! ball radius grows: eigenvalues merge at delta-step kinks until every
//! level reaches 1/d.
//!
//! ```bash
//! cargo run --example minimizer_flow
//! ```

use entrobound::minimizer::{delta_step, mmm};
use entrobound::spectrum::Spectrum;

fn main() {
    let sigma = Spectrum::new(&[0.32, 0.26, 0.19, 0.13, 0.10]).unwrap();
    println!("sigma = {:?}", sigma.values());
    println!(
        "first kink at delta(sigma) = {}\n",
        delta_step(&sigma).unwrap().value
    );

    println!(
        "{:>5} {:>3} {:>3} {:>8} {:>8}   spectrum",
        "eps", "m+", "m-", "gamma+", "gamma-"
    );
    for k in 1..=20 {
        let eps = f64::from(k) * 0.01;
        let r = mmm(&sigma, eps).unwrap();
        let spectrum: Vec<String> = r
            .output
            .values()
            .iter()
            .map(|v| format!("{v:.4}"))
            .collect();
        println!(
            "{eps:>5.2} {:>3} {:>3} {:>8.4} {:>8.4}   [{}]",
            r.m_plus,
            r.m_minus,
            r.gamma_plus,
            r.gamma_minus,
            spectrum.join(", ")
        );
    }
    println!("\nfrom eps = 0.18 the whole ball contains the completely mixed state");
}
