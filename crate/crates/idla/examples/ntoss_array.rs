//! Fix the number of coin tosses instead of the number of particles: after
//! exactly N fair tosses (with a large particle queue), how many sites are
//! occupied? The exact law has denominator 2^(N-1); scaled by that, the
//! probabilities form an integer array whose column-n entries first turn
//! positive at N = ceil(n/2) * floor(n/2).
//!
//! ```bash
//! cargo run -p idla --example ntoss_array
//! ```

use num_bigint::BigInt;
use num_traits::One;

use idla::algebra::Rational;
use idla::chain::{ntoss_distribution, Bias};

fn main() {
    let max_tosses = 12u32;
    let cap = 16;
    let fair = Bias::fair();

    println!("Occupied-site law after N tosses, scaled by 2^(N-1):\n");
    print!("{:>4} |", "N");
    for n in 2..=8 {
        print!("{n:>6}");
    }
    println!();
    println!("-----+{}", "-".repeat(6 * 7));
    for tosses in 1..=max_tosses {
        let law = ntoss_distribution(tosses, &fair, cap).expect("within cap");
        let scale = Rational::from_bigint(BigInt::one() << (tosses - 1));
        print!("{tosses:>4} |");
        for sites in 2..=8u64 {
            let scaled = law.prob(sites) * &scale;
            if scaled.is_zero() {
                print!("{:>6}", "");
            } else {
                print!("{:>6}", scaled.to_string());
            }
        }
        println!();
    }

    println!("\nFirst N with any mass on n sites:");
    for sites in 2..=8u64 {
        let expected = sites.div_ceil(2) * (sites / 2);
        let first = (0..=16u32)
            .find(|&tosses| {
                !ntoss_distribution(tosses, &fair, cap)
                    .unwrap()
                    .prob(sites)
                    .is_zero()
            })
            .unwrap();
        println!("  n={sites}: N = {first} (ceil(n/2)*floor(n/2) = {expected})");
        assert_eq!(first as u64, expected);
    }
}
