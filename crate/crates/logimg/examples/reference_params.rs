//! Re-derive the enhancement parameters of the four bundled reference
//! image fixtures from their channel statistics, for both algorithms, and
//! cross-check the closed-form solution against the brute-force grid
//! oracle on one of them.
//!
//! Run with: `cargo run --example reference_params`

use logimg::{mmse_oracle, reference, solve_mmse};

fn main() {
    println!("{:<9} {:>10} {:>10}   {:>10} {:>10}", "image", "alpha_A", "beta_A", "alpha_B", "beta_B");
    for case in reference::cases() {
        let (aa, ba) = solve_mmse(&case.system_a()).expect("fixture systems are solvable");
        let (ab, bb) = solve_mmse(&case.system_b().expect("fixture means are off-centre"))
            .expect("fixture systems are solvable");
        println!("{:<9} {aa:>10.6} {ba:>10.6}   {ab:>10.6} {bb:>10.6}", case.name);
        assert!((aa - case.params_a.0).abs() < 1e-9);
        assert!((bb - case.params_b.1).abs() < 1e-9);
    }

    let case = reference::cases()[0];
    let system = case.system_a();
    let (alpha, beta) = solve_mmse(&system).unwrap();
    println!("\nbrute-force cross-check on '{}', algorithm A:", case.name);
    let (oa, ob) = mmse_oracle(&system, 2.0, 0.001);
    println!("  closed form: ({alpha:.6}, {beta:.6})");
    println!("  grid oracle: ({oa:.3}, {ob:.3})  (step 0.001)");
    assert!((alpha - oa).abs() <= 0.001 + 1e-12);
    assert!((beta - ob).abs() <= 0.001 + 1e-12);
    println!("  agreement within one grid step");
}
