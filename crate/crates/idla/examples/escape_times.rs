//! Escape times for the walking particle: from a state with barriers at
//! distances a (right) and b (left), the expected number of fair tosses to
//! settle is exactly a*b — solved here from the first-step equations, not
//! assumed.
//!
//! ```bash
//! cargo run -p idla --example escape_times
//! ```

use idla::algebra::Rational;
use idla::chain::{escape_time, exact_distribution, gambler_win_prob, Bias};

fn main() {
    println!("States with five occupied sites (k sites right of the origin):\n");
    println!("{:>8} {:>3} {:>3} {:>14}", "state", "a", "b", "escape time");
    for k in 0..5u64 {
        // From (5, k) the right barrier is k+1 away, the left 5-k away.
        let (a, b) = (k + 1, 5 - k);
        println!(
            "{:>8} {a:>3} {b:>3} {:>14}",
            format!("(5; {k})"),
            escape_time(a, b).to_string()
        );
    }

    // Weighting the escape times by the exact state law gives the expected
    // cost of the sixth particle.
    let law = exact_distribution(5);
    let delta: Rational = law.iter().map(|(k, p)| p * escape_time(k + 1, 5 - k)).sum();
    println!("\nExpected tosses for the sixth particle: {delta} (= 17/2)");
    assert_eq!(delta, Rational::ratio(17, 2));

    println!("\nescape_time(a, b) == a*b on a 10x10 grid:");
    let mut all = true;
    for a in 1..=10u64 {
        for b in 1..=10u64 {
            all &= escape_time(a, b) == Rational::integer((a * b) as i64);
        }
    }
    println!("  verified: {all}");

    // The companion ruin probabilities, same solver.
    println!("\nGambler's ruin win probabilities (fair coin):");
    for (k, l) in [(4u64, 3u64), (1, 1), (2, 5)] {
        println!(
            "  A with {k} vs B with {l}: {}",
            gambler_win_prob(k, l, &Bias::fair())
        );
    }
}
