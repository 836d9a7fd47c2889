//! The Eulerian triangle two ways: the additive recurrence and direct
//! enumeration of permutations by descent count.
//!
//! ```bash
//! cargo run -p idla --example eulerian_triangle
//! ```

use idla::eulerian::{eulerian_row, eulerian_row_brute, permutations};

fn main() {
    println!("Eulerian triangle by recurrence (rows 1..=8):");
    for n in 1..=8 {
        let row = eulerian_row(n);
        let cells: Vec<String> = row.entries().iter().map(|e| e.to_string()).collect();
        println!("  n={n}: [{}]", cells.join(", "));
    }

    println!("\nCross-check against permutation enumeration:");
    for n in 1..=8 {
        let matches = eulerian_row(n) == eulerian_row_brute(n);
        println!("  n={n}: recurrence == enumeration? {matches}");
        assert!(matches);
    }

    // A peek at the raw statistic for n = 4.
    println!("\nPermutations of 4 elements, grouped by descents:");
    let mut by_descents = vec![Vec::new(); 4];
    for w in permutations(4) {
        by_descents[w.descent_count()].push(format!("{:?}", w.values()));
    }
    for (k, group) in by_descents.iter().enumerate() {
        println!(
            "  {k} descents ({:2} permutations): {}",
            group.len(),
            group.join(" ")
        );
    }
}
