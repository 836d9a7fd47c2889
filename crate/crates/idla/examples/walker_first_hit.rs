//! Bridge between the two exact engines: run the toss-by-toss walker for a
//! fixed budget, accumulate the settlement events that first reach n
//! occupied sites, and resolve the still-walking remainder with exact
//! absorption probabilities. The result equals the macro-chain law for
//! every budget — even a budget of zero, where everything is resolved
//! analytically.
//!
//! ```bash
//! cargo run -p idla --example walker_first_hit
//! ```

use idla::algebra::Rational;
use idla::chain::{exact_distribution, exact_distribution_biased, first_hit_distribution, Bias};

fn main() {
    let n = 5u64;
    let expected = exact_distribution(n);
    println!("Law of the first hit of {n} occupied sites (fair coin):");
    for budget in [0u32, 1, 4, 10] {
        let law = first_hit_distribution(n, budget, &Bias::fair());
        let cells: Vec<String> = law.iter().map(|(k, p)| format!("{k}: {p}")).collect();
        println!("  budget {budget:>2} tosses -> {}", cells.join(", "));
        assert_eq!(law, expected);
    }
    println!("Identical at every budget, as it must be.");

    let bias = Bias::new(Rational::ratio(1, 4)).expect("valid bias");
    let law = first_hit_distribution(4, 3, &bias);
    assert_eq!(law, exact_distribution_biased(4, &bias));
    println!("\nSame story under a leftward bias (p_right = 1/4), n = 4, budget = 3:");
    for (k, p) in law.iter() {
        println!("  k = {k}: {p}");
    }
}
