//! Exact arithmetic substrate: arbitrary-precision rationals, dense
//! univariate and sparse bivariate polynomials, and truncated formal power
//! series.
//!
//! Every value is immutable after construction and all operations are pure,
//! so everything here can be shared freely across threads. Floating point
//! never enters these types; callers that want decimals convert at the edge
//! with [`Rational::to_f64`].

mod polynomial;
mod rational;
mod series;

pub use polynomial::{BivariatePolynomial, Polynomial};
pub use rational::{ParseRationalError, Rational};
pub use series::TruncatedSeries;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// n! as a big integer.
pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Binomial coefficient C(n, k), exactly; zero when k > n.
///
/// Negative arguments are unrepresentable by construction.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut result = BigInt::one();
    for i in 1..=k {
        // The running product is C(n-k+i, i), so the division is exact.
        result = result * (n - k + i) / i;
    }
    result
}
