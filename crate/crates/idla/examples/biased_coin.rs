//! The biased game: tosses land right with probability p. The state law is
//! then the major-index q-analog of the Eulerian distribution, evaluated at
//! the odds ratio rho = p/(1-p) and normalized by the q-factorial [n]!.
//!
//! Nothing here assumes that identity: the lattice transitions come from
//! exact linear solves, and the q-analog is built by enumerating
//! permutations. The example shows the two routes coincide and that the
//! reciprocal orientation 1/rho does not.
//!
//! ```bash
//! cargo run -p idla --example biased_coin
//! ```

use idla::algebra::Rational;
use idla::chain::{exact_distribution_biased, Bias};
use idla::eulerian::{q_eulerian_row, q_factorial};

fn main() {
    let p_right = Rational::ratio(2, 3);
    let bias = Bias::new(p_right.clone()).expect("valid bias");
    let rho = bias.rho();
    println!("p_right = {p_right}, so rho = p/(1-p) = {rho}\n");

    println!("q-Eulerian rows (entries are polynomials in rho):");
    for n in 2..=4 {
        let row = q_eulerian_row(n);
        for (k, entry) in row.entries().iter().enumerate() {
            println!("  n={n} k={k}: {}", entry.format_with("rho"));
        }
    }

    println!("\nState law from linear solves vs q-analog at rho = {rho}:");
    println!(
        "{:>3} {:>3} {:>12} {:>12} {:>12}",
        "n", "k", "chain", "q-analog", "mirror"
    );
    let mirror = rho.recip();
    for n in 2..=6u64 {
        let law = exact_distribution_biased(n, &bias);
        let row = q_eulerian_row(n as usize);
        let denom = q_factorial(n, &rho);
        let mirror_denom = q_factorial(n, &mirror);
        for (k, entry) in row.entries().iter().enumerate() {
            let from_chain = law.prob(k as u64);
            let from_q = entry.eval(&rho) / &denom;
            let from_mirror = entry.eval(&mirror) / &mirror_denom;
            println!(
                "{n:>3} {k:>3} {:>12} {:>12} {:>12}",
                from_chain.to_string(),
                from_q.to_string(),
                from_mirror.to_string()
            );
            assert_eq!(from_chain, from_q);
        }
    }
    println!("\nThe chain and q-analog columns match; the mirror column (1/rho) does not.");

    println!(
        "\nq-factorials at rho = 2: {}",
        (1..=5)
            .map(|n| q_factorial(n, &Rational::integer(2)).to_string())
            .collect::<Vec<_>>()
            .join(", ")
    );
}
