//! Exact law of the final shape: with n sites occupied, the probability
//! that k of them sit right of the origin is an Eulerian number over n!.
//!
//! ```bash
//! cargo run -p idla --example exact_distribution
//! ```

use idla::algebra::{factorial, Rational};
use idla::chain::exact_distribution;
use idla::eulerian::eulerian_row;

fn main() {
    println!("P(n, k) for 1 <= n <= 7:\n");
    println!("{:>3} {:>3} {:>12} {:>10}", "n", "k", "exact", "decimal");
    for n in 1..=7u64 {
        let law = exact_distribution(n);
        for (k, p) in law.iter() {
            println!("{n:>3} {k:>3} {:>12} {:>10.5}", p.to_string(), p.to_f64());
        }
    }

    println!("\nScaled by n! these are the triangle entries:");
    for n in 1..=7u64 {
        let law = exact_distribution(n);
        let scale = Rational::from_bigint(factorial(n));
        let scaled: Vec<String> = (0..n).map(|k| (law.prob(k) * &scale).to_string()).collect();
        let row = eulerian_row(n as usize);
        println!("  n={n}: [{}]", scaled.join(", "));
        for (k, entry) in row.entries().iter().enumerate() {
            assert_eq!(
                law.prob(k as u64) * &scale,
                Rational::from_bigint(entry.clone())
            );
        }
    }
    println!("\nEvery row checked against the recurrence-built triangle.");
}
