//! Exact first-step solves for absorbing-barrier walks.
//!
//! Both quantities of interest — the probability of exiting through the left
//! barrier and the expected number of steps to exit at all — satisfy
//! tridiagonal linear systems over the interior positions, solved here by
//! exact Gaussian elimination on [`Rational`] values.

use crate::algebra::Rational;

use super::Bias;

/// Thomas algorithm. `sub` and `sup` are the bands below and above the
/// diagonal, each one shorter than `diag`.
///
/// Panics on a zero pivot; the walk systems are strictly diagonally
/// dominant, so valid callers never hit this.
fn solve_tridiagonal(
    sub: &[Rational],
    diag: &[Rational],
    sup: &[Rational],
    rhs: &[Rational],
) -> Vec<Rational> {
    let n = diag.len();
    assert!(n >= 1);
    assert_eq!(sub.len(), n - 1);
    assert_eq!(sup.len(), n - 1);
    assert_eq!(rhs.len(), n);

    let mut diag = diag.to_vec();
    let mut rhs = rhs.to_vec();
    for i in 1..n {
        assert!(!diag[i - 1].is_zero(), "zero pivot in tridiagonal solve");
        let w = &sub[i - 1] / &diag[i - 1];
        diag[i] = &diag[i] - &w * &sup[i - 1];
        rhs[i] = &rhs[i] - &w * &rhs[i - 1];
    }
    let mut x = vec![Rational::zero(); n];
    x[n - 1] = &rhs[n - 1] / &diag[n - 1];
    for i in (0..n - 1).rev() {
        x[i] = (&rhs[i] - &sup[i] * &x[i + 1]) / &diag[i];
    }
    x
}

/// Probability of reaching `left` before `right` for a walker stepping +1
/// with probability `bias.p_right()`, one entry per interior start position
/// `left+1 ..= right-1`, in that order.
pub(crate) fn hit_left_profile(left: i64, right: i64, bias: &Bias) -> Vec<Rational> {
    assert!(right - left >= 2, "need at least one interior position");
    let m = (right - left - 1) as usize;
    let p = bias.p_right().clone();
    let q = bias.p_left();
    // h(x) = q h(x-1) + p h(x+1), h(left) = 1, h(right) = 0
    let sub = vec![-&q; m - 1];
    let diag = vec![Rational::one(); m];
    let sup = vec![-&p; m - 1];
    let mut rhs = vec![Rational::zero(); m];
    rhs[0] = q;
    solve_tridiagonal(&sub, &diag, &sup, &rhs)
}

/// Expected number of fair steps to leave the open interval
/// `(left, right)`, one entry per interior start position.
pub(crate) fn exit_time_profile(left: i64, right: i64) -> Vec<Rational> {
    assert!(right - left >= 2, "need at least one interior position");
    let m = (right - left - 1) as usize;
    let half = Rational::ratio(1, 2);
    // E(x) = 1 + (E(x-1) + E(x+1)) / 2, E(left) = E(right) = 0
    let sub = vec![-&half; m - 1];
    let diag = vec![Rational::one(); m];
    let sup = vec![-half; m - 1];
    let rhs = vec![Rational::one(); m];
    solve_tridiagonal(&sub, &diag, &sup, &rhs)
}
