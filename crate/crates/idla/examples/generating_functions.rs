//! Generating-function checks done with exact truncated series.
//!
//! Two pipelines run here. The Eulerian EGF
//! `G(x, z) = x(1 - e^{z(x-1)}) / (e^{z(x-1)} - x)` is expanded with series
//! arithmetic and compared against triangle polynomials. Then the increment
//! generating function `(z^4 - 4z^3 + 6z^2 - 6z) / (6(z-1)^3)` is expanded
//! and compared against the quadratic `n^2/4 - n/12`.
//!
//! ```bash
//! cargo run -p idla --example generating_functions
//! ```

use idla::algebra::{factorial, Rational, TruncatedSeries};
use idla::eulerian::univariate_polynomial;
use idla::runtime::{delta_series, delta_series_check, univariate_egf_check};

fn main() {
    // Expand G(x, z) at x = 2 and read off A_n(2) / n!.
    let x = Rational::integer(2);
    let order = 8;
    let rate = &x - Rational::one();
    let exp = TruncatedSeries::exp_linear(&rate, order);
    let g = TruncatedSeries::one(order)
        .sub(&exp)
        .scale(&x)
        .checked_div(&exp.sub(&TruncatedSeries::constant(x.clone(), order)))
        .expect("denominator constant term 1 - x is nonzero");

    println!("Coefficients of G(2, z) against A_n(2)/n!:");
    println!("{:>3} {:>14} {:>14}", "n", "series", "polynomial");
    for n in 1..=order {
        let from_series = g.coeff(n).clone();
        let from_polynomial =
            univariate_polynomial(n).eval(&x) / Rational::from_bigint(factorial(n as u64));
        println!(
            "{n:>3} {:>14} {:>14}",
            from_series.to_string(),
            from_polynomial.to_string()
        );
        assert_eq!(from_series, from_polynomial);
    }
    for x in [
        Rational::zero(),
        Rational::ratio(1, 2),
        Rational::integer(-1),
    ] {
        assert!(univariate_egf_check(&x, 10));
    }
    println!("EGF expansion also verified at x = 0, 1/2, -1 to order 10.\n");

    let series = delta_series(12);
    println!("Increment generating function, coefficients of z^n:");
    let cells: Vec<String> = (1..=12).map(|n| series.coeff(n).to_string()).collect();
    println!("  {}", cells.join(", "));
    println!("  (z^1 is the true first increment 1; from z^2 on these are n^2/4 - n/12 at n+1)");
    assert!(delta_series_check(30));
    println!("Full expansion check passes to order 30.");
}
