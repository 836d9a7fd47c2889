//! Eulerian numbers and their permutation-statistic refinements.
//!
//! The triangle entry `E(n, k)` counts permutations of `{1, ..., n}` with
//! exactly `k` descents (positions `i` with `w(i) > w(i+1)`). Rows are
//! produced two independent ways: the additive recurrence
//! `E(n, k) = (n - k) E(n-1, k-1) + (k + 1) E(n-1, k)`, and direct
//! enumeration of permutations. The enumeration route also computes the
//! q-analog, where each permutation is weighted by `rho^maj(w)` with `maj`
//! the sum of its descent positions.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{BivariatePolynomial, Polynomial, Rational};

/// Largest `n` the enumeration-based constructors accept; `9! = 362880`
/// permutations keeps them comfortably under a second.
pub const ENUMERATION_LIMIT: usize = 9;

/// Row `n` of the Eulerian triangle: entries indexed by descent count
/// `k` in `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerianRow {
    n: usize,
    entries: Vec<BigInt>,
}

impl EulerianRow {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn entry(&self, k: usize) -> &BigInt {
        &self.entries[k]
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Row `n` computed by the recurrence, with boundary entries fixed at 1.
pub fn eulerian_row(n: usize) -> EulerianRow {
    assert!(n >= 1, "row index must be at least 1");
    let mut row = vec![BigInt::one()];
    for m in 2..=n {
        let mut next = vec![BigInt::zero(); m];
        for (k, slot) in next.iter_mut().enumerate() {
            let mut value = BigInt::zero();
            if k >= 1 {
                value += BigInt::from(m - k) * &row[k - 1];
            }
            if k < row.len() {
                value += BigInt::from(k + 1) * &row[k];
            }
            *slot = value;
        }
        row = next;
    }
    EulerianRow { n, entries: row }
}

/// Row `n` by enumerating all of `S_n` and counting descents; the
/// deliberately small-scale oracle for [`eulerian_row`].
pub fn eulerian_row_brute(n: usize) -> EulerianRow {
    assert!(
        (1..=ENUMERATION_LIMIT).contains(&n),
        "enumeration supports 1 <= n <= {ENUMERATION_LIMIT}"
    );
    let mut entries = vec![BigInt::zero(); n];
    for w in permutations(n) {
        entries[w.descent_count()] += 1;
    }
    EulerianRow { n, entries }
}

/// Single-variable Eulerian polynomial `A_n(x) = sum_k E(n, k-1) x^k`,
/// indexed so the lowest term is `x^1`.
pub fn univariate_polynomial(n: usize) -> Polynomial {
    let row = eulerian_row(n);
    let mut coeffs = vec![Rational::zero()];
    coeffs.extend(
        row.entries()
            .iter()
            .map(|e| Rational::from_bigint(e.clone())),
    );
    Polynomial::from_coeffs(coeffs)
}

/// Homogeneous bivariate Eulerian polynomial
/// `A_n(s, t) = sum_{k=1..n} E(n, k-1) s^k t^{n+1-k}`.
///
/// Satisfies `A_n(s, t) = t^{n+1} A_n(s/t)` with the univariate polynomial.
pub fn bivariate_polynomial(n: usize) -> BivariatePolynomial {
    assert!(n >= 1, "row index must be at least 1");
    let row = eulerian_row(n);
    let mut poly = BivariatePolynomial::new();
    for k in 1..=n {
        poly.add_term(
            k as u32,
            (n + 1 - k) as u32,
            Rational::from_bigint(row.entry(k - 1).clone()),
        );
    }
    poly
}

/// A permutation of `{1, ..., n}`, stored one-line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation {
    values: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            values: (1..=n as u32).collect(),
        }
    }

    /// Validates that `values` is a bijection on `{1, ..., n}`.
    pub fn new(values: Vec<u32>) -> Option<Self> {
        let n = values.len();
        let mut seen = vec![false; n];
        for &v in &values {
            if v == 0 || v as usize > n || seen[v as usize - 1] {
                return None;
            }
            seen[v as usize - 1] = true;
        }
        Some(Permutation { values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// Number of positions `i` (1-indexed) with `w(i) > w(i+1)`.
    pub fn descent_count(&self) -> usize {
        self.values.windows(2).filter(|w| w[0] > w[1]).count()
    }

    /// Major index: the sum of the 1-indexed descent positions.
    pub fn major_index(&self) -> u64 {
        self.values
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i as u64 + 1)
            .sum()
    }

    /// Advances to the lexicographic successor in place; `false` once the
    /// last permutation has been reached.
    fn advance(&mut self) -> bool {
        let v = &mut self.values;
        if v.len() < 2 {
            return false;
        }
        let Some(pivot) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
            return false;
        };
        let swap = (pivot + 1..v.len())
            .rev()
            .find(|&j| v[j] > v[pivot])
            .unwrap();
        v.swap(pivot, swap);
        v[pivot + 1..].reverse();
        true
    }
}

/// Iterates all of `S_n` in lexicographic order without recursion.
pub fn permutations(n: usize) -> Permutations {
    Permutations {
        current: Permutation::identity(n),
        done: false,
    }
}

pub struct Permutations {
    current: Permutation,
    done: bool,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        self.done = !self.current.advance();
        Some(out)
    }
}

/// Row `n` of the q-Eulerian triangle: entry `k` is the polynomial in `rho`
/// `sum rho^maj(w)` over permutations `w` with `k` descents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QEulerianRow {
    n: usize,
    entries: Vec<Polynomial>,
}

impl QEulerianRow {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    pub fn entry(&self, k: usize) -> &Polynomial {
        &self.entries[k]
    }

    /// Specializes every entry at a rational `rho`.
    pub fn evaluate(&self, rho: &Rational) -> Vec<Rational> {
        self.entries.iter().map(|p| p.eval(rho)).collect()
    }
}

/// Builds [`QEulerianRow`] `n` by enumeration; no q-recurrence is used.
pub fn q_eulerian_row(n: usize) -> QEulerianRow {
    assert!(
        (1..=ENUMERATION_LIMIT).contains(&n),
        "enumeration supports 1 <= n <= {ENUMERATION_LIMIT}"
    );
    // maj is at most n(n-1)/2
    let max_maj = n * (n - 1) / 2;
    let mut buckets = vec![vec![BigInt::zero(); max_maj + 1]; n];
    for w in permutations(n) {
        buckets[w.descent_count()][w.major_index() as usize] += 1;
    }
    let entries = buckets
        .into_iter()
        .map(|counts| {
            Polynomial::from_coeffs(counts.into_iter().map(Rational::from_bigint).collect())
        })
        .collect();
    QEulerianRow { n, entries }
}

/// q-integer `[m] = 1 + rho + ... + rho^{m-1}`, as an explicit sum so that
/// `rho = 1` needs no special case.
pub fn q_integer(m: u64, rho: &Rational) -> Rational {
    let mut acc = Rational::zero();
    let mut power = Rational::one();
    for _ in 0..m {
        acc = acc + &power;
        power = power * rho;
    }
    acc
}

/// q-factorial `[n]! = [n][n-1]...[1]`; equals `n!` at `rho = 1`.
pub fn q_factorial(n: u64, rho: &Rational) -> Rational {
    (1..=n).fold(Rational::one(), |acc, m| acc * q_integer(m, rho))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::factorial;

    #[test]
    fn triangle_rows() {
        let expected: [&[i64]; 6] = [
            &[1],
            &[1, 1],
            &[1, 4, 1],
            &[1, 11, 11, 1],
            &[1, 26, 66, 26, 1],
            &[1, 57, 302, 302, 57, 1],
        ];
        for (i, want) in expected.iter().enumerate() {
            let row = eulerian_row(i + 1);
            let got: Vec<BigInt> = want.iter().map(|&v| BigInt::from(v)).collect();
            assert_eq!(row.entries(), got.as_slice(), "row {}", i + 1);
        }
    }

    #[test]
    fn recurrence_matches_enumeration() {
        for n in 1..=8 {
            assert_eq!(eulerian_row(n), eulerian_row_brute(n), "n = {n}");
        }
    }

    #[test]
    fn rows_are_symmetric_and_sum_to_factorials() {
        for n in 1..=25 {
            let row = eulerian_row(n);
            assert_eq!(row.entry(0), &BigInt::one());
            assert_eq!(row.entry(n - 1), &BigInt::one());
            for k in 0..n {
                assert_eq!(row.entry(k), row.entry(n - 1 - k), "n = {n}, k = {k}");
            }
            let sum: BigInt = row.entries().iter().sum();
            assert_eq!(sum, factorial(n as u64), "n = {n}");
        }
    }

    #[test]
    #[should_panic(expected = "at least 1")]
    fn rejects_row_zero() {
        let _ = eulerian_row(0);
    }

    #[test]
    #[should_panic(expected = "enumeration supports")]
    fn brute_force_rejects_large_n() {
        let _ = eulerian_row_brute(ENUMERATION_LIMIT + 1);
    }

    #[test]
    fn major_index_examples() {
        let w = Permutation::new(vec![1, 2, 3]).unwrap();
        assert_eq!(w.major_index(), 0);
        assert_eq!(w.descent_count(), 0);

        let w = Permutation::new(vec![3, 2, 1]).unwrap();
        assert_eq!(w.major_index(), 3);
        assert_eq!(w.descent_count(), 2);

        let w = Permutation::new(vec![1, 3, 2]).unwrap();
        assert_eq!(w.major_index(), 2);
        assert_eq!(w.descent_count(), 1);
    }

    #[test]
    fn permutation_validation() {
        assert!(Permutation::new(vec![2, 3, 1]).is_some());
        assert!(Permutation::new(vec![1, 1, 3]).is_none());
        assert!(Permutation::new(vec![0, 1]).is_none());
        assert!(Permutation::new(vec![1, 4, 2]).is_none());
    }

    #[test]
    fn lexicographic_enumeration_is_complete() {
        let all: Vec<_> = permutations(4).collect();
        assert_eq!(all.len(), 24);
        assert_eq!(all[0].values(), &[1, 2, 3, 4]);
        assert_eq!(all[23].values(), &[4, 3, 2, 1]);
        for pair in all.windows(2) {
            assert!(pair[0].values() < pair[1].values(), "ascending order");
        }
    }

    #[test]
    fn bivariate_polynomial_rows() {
        // A_2 = s^2 t + s t^2
        let a2 = bivariate_polynomial(2);
        assert_eq!(a2.term_count(), 2);
        assert_eq!(a2.coeff(2, 1), Rational::one());
        assert_eq!(a2.coeff(1, 2), Rational::one());

        // A_1 = s t
        let a1 = bivariate_polynomial(1);
        assert_eq!(a1.term_count(), 1);
        assert_eq!(a1.coeff(1, 1), Rational::one());

        // The symmetric triangle row dictates coefficient 26 on s^4 t^2.
        let a5 = bivariate_polynomial(5);
        assert_eq!(a5.coeff(1, 5), Rational::one());
        assert_eq!(a5.coeff(2, 4), Rational::integer(26));
        assert_eq!(a5.coeff(3, 3), Rational::integer(66));
        assert_eq!(a5.coeff(4, 2), Rational::integer(26));
        assert_eq!(a5.coeff(5, 1), Rational::one());
    }

    #[test]
    fn bivariate_reduces_to_univariate() {
        // A_n(s, t) = t^{n+1} A_n(s/t) at sampled rational points
        let samples = [
            (Rational::ratio(2, 3), Rational::ratio(5, 4)),
            (Rational::integer(-2), Rational::ratio(1, 3)),
            (Rational::ratio(7, 2), Rational::integer(-1)),
            (Rational::zero(), Rational::ratio(9, 7)),
        ];
        for n in 1..=7 {
            let biv = bivariate_polynomial(n);
            let uni = univariate_polynomial(n);
            for (s, t) in &samples {
                let lhs = biv.eval(s, t);
                let rhs = t.pow(n as i32 + 1) * uni.eval(&(s / t));
                assert_eq!(lhs, rhs, "n = {n}, s = {s}, t = {t}");
            }
        }
    }

    #[test]
    fn q_row_small_cases() {
        let row = q_eulerian_row(3);
        // identity permutation only
        assert_eq!(row.entry(0), &Polynomial::constant(Rational::one()));
        // 213 and 312 have maj 1; 132 and 231 have maj 2
        let expected = Polynomial::from_coeffs(vec![
            Rational::zero(),
            Rational::integer(2),
            Rational::integer(2),
        ]);
        assert_eq!(row.entry(1), &expected);
        // 321 has maj 3
        assert_eq!(row.entry(2), &Polynomial::monomial(Rational::one(), 3));
    }

    #[test]
    fn q_row_specializes_to_plain_row_at_one() {
        for n in 1..=7 {
            let plain = eulerian_row(n);
            let values = q_eulerian_row(n).evaluate(&Rational::one());
            for (k, v) in values.iter().enumerate() {
                assert_eq!(v, &Rational::from_bigint(plain.entry(k).clone()));
            }
        }
    }

    #[test]
    fn q_factorial_examples() {
        assert_eq!(q_factorial(3, &Rational::one()), Rational::integer(6));
        assert_eq!(q_factorial(3, &Rational::integer(2)), Rational::integer(21));
        assert_eq!(q_factorial(1, &Rational::ratio(-7, 3)), Rational::one());
    }

    #[test]
    fn q_row_sums_are_q_factorials() {
        let rhos = [
            Rational::one(),
            Rational::integer(2),
            Rational::ratio(1, 2),
            Rational::ratio(3, 5),
        ];
        for n in 1..=7 {
            for rho in &rhos {
                let total: Rational = q_eulerian_row(n).evaluate(rho).into_iter().sum();
                assert_eq!(total, q_factorial(n as u64, rho), "n = {n}, rho = {rho}");
            }
        }
    }
}
