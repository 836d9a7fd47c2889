//! Exact Markov analysis of the one-dimensional IDLA coin-tossing game.
//!
//! Particles drop one at a time onto the origin of the integer line and
//! random-walk until they reach an unoccupied site, which they then occupy.
//! The occupied sites always form an interval around the origin, so a game
//! state is the pair `(n, k)`: `n` occupied sites, `k` of them strictly to
//! the right of the origin. This module computes the law of `k` exactly —
//! by dynamic programming over the state lattice for the fair coin, by
//! first-step linear solves for a biased coin — together with escape times,
//! expected total toss counts, and a toss-by-toss engine for the law of the
//! occupied-site count after a fixed number of tosses.

mod solve;
mod walker;

pub use walker::{first_hit_distribution, ntoss_distribution, WalkerState, DEFAULT_TOSS_CAP};

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::Rational;

/// Errors from invalid chain parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChainError {
    /// Coin bias outside the open interval (0, 1).
    InvalidBias(Rational),
    /// Requested toss count above the configured cap for the exact engine.
    TossBudgetAboveCap { requested: u32, cap: u32 },
}

impl fmt::Display for ChainError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChainError::InvalidBias(p) => {
                write!(f, "bias must lie strictly between 0 and 1, got {p}")
            }
            ChainError::TossBudgetAboveCap { requested, cap } => {
                write!(f, "toss count {requested} exceeds the cap of {cap}")
            }
        }
    }
}

impl std::error::Error for ChainError {}

/// Probability of a single toss moving the particle right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bias {
    p_right: Rational,
}

impl Bias {
    pub fn new(p_right: Rational) -> Result<Self, ChainError> {
        if p_right <= Rational::zero() || p_right >= Rational::one() {
            return Err(ChainError::InvalidBias(p_right));
        }
        Ok(Bias { p_right })
    }

    pub fn fair() -> Self {
        Bias {
            p_right: Rational::ratio(1, 2),
        }
    }

    pub fn p_right(&self) -> &Rational {
        &self.p_right
    }

    pub fn p_left(&self) -> Rational {
        Rational::one() - &self.p_right
    }

    /// Odds ratio `rho = p_right / p_left`; the variable of the q-analog.
    pub fn rho(&self) -> Rational {
        &self.p_right / self.p_left()
    }

    pub fn is_fair(&self) -> bool {
        self.p_right == Rational::ratio(1, 2)
    }
}

/// Game state: `sites` occupied sites, `right` of them strictly right of
/// the origin. The remaining `sites - right` are at or left of the origin.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MacroState {
    sites: u64,
    right: u64,
}

impl MacroState {
    pub fn new(sites: u64, right: u64) -> Self {
        assert!(sites >= 1 && right < sites, "need 0 <= right < sites");
        MacroState { sites, right }
    }

    pub fn sites(&self) -> u64 {
        self.sites
    }

    pub fn right_of_origin(&self) -> u64 {
        self.right
    }

    pub fn at_or_left_of_origin(&self) -> u64 {
        self.sites - self.right
    }

    /// Incoming transition probabilities, as `(p, q)` from
    /// [`transition_probs`].
    pub fn incoming_probs(&self) -> (Rational, Rational) {
        transition_probs(self.sites, self.right)
    }
}

/// Incoming transition probabilities of state `(n, k)` under the fair coin:
/// `p` is the probability of arriving from `(n-1, k)` (the new site settles
/// left), `q` of arriving from `(n-1, k-1)` (it settles right).
///
/// Gambler's ruin gives `p = (k+1)/n` and `q = (n-k)/n`; a transition whose
/// source state does not exist has probability zero. Panics when `k` is out
/// of range.
pub fn transition_probs(n: u64, k: u64) -> (Rational, Rational) {
    assert!(n >= 1 && k < n, "state ({n}, {k}) is out of range");
    let p = if k + 2 <= n {
        Rational::ratio(k as i64 + 1, n as i64)
    } else {
        Rational::zero()
    };
    let q = if k >= 1 {
        Rational::ratio((n - k) as i64, n as i64)
    } else {
        Rational::zero()
    };
    (p, q)
}

/// Exact probability vector over the support of a distribution whose states
/// are labelled by small integers (right-of-origin counts or occupied-site
/// counts). Probabilities are nonnegative rationals summing to exactly 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateDistribution {
    support: BTreeMap<u64, Rational>,
}

impl StateDistribution {
    pub(crate) fn from_map(support: BTreeMap<u64, Rational>) -> Self {
        let total: Rational = support.values().sum();
        assert!(total.is_one(), "probabilities must sum to 1, got {total}");
        assert!(
            support.values().all(|p| !p.is_negative()),
            "probabilities must be nonnegative"
        );
        StateDistribution { support }
    }

    /// Distribution concentrated on a single label.
    pub fn point(label: u64) -> Self {
        Self::from_map(BTreeMap::from([(label, Rational::one())]))
    }

    /// Probability of `label`; zero outside the support.
    pub fn prob(&self, label: u64) -> Rational {
        self.support
            .get(&label)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, &Rational)> + '_ {
        self.support.iter().map(|(&k, p)| (k, p))
    }

    pub fn min_label(&self) -> Option<u64> {
        self.support.keys().next().copied()
    }

    pub fn max_label(&self) -> Option<u64> {
        self.support.keys().next_back().copied()
    }

    /// Dense probability vector for labels `0..len`.
    pub fn dense(&self, len: usize) -> Vec<Rational> {
        (0..len as u64).map(|k| self.prob(k)).collect()
    }

    pub fn total(&self) -> Rational {
        self.support.values().sum()
    }
}

/// Law of the right-of-origin count once `n_sites` sites are occupied,
/// under the fair coin, by dynamic programming down the state lattice.
pub fn exact_distribution(n_sites: u64) -> StateDistribution {
    assert!(n_sites >= 1, "need at least the origin occupied");
    let mut probs = vec![Rational::one()];
    for m in 2..=n_sites {
        let mut next = vec![Rational::zero(); m as usize];
        for (k, slot) in next.iter_mut().enumerate() {
            let (p, q) = transition_probs(m, k as u64);
            let mut value = Rational::zero();
            if (k as u64) + 2 <= m {
                value = value + p * &probs[k];
            }
            if k >= 1 {
                value = value + q * &probs[k - 1];
            }
            *slot = value;
        }
        probs = next;
    }
    let support = probs
        .into_iter()
        .enumerate()
        .map(|(k, p)| (k as u64, p))
        .collect();
    StateDistribution::from_map(support)
}

/// Win probability in gambler's ruin: players A and B hold `a_fortune` and
/// `b_fortune` dollars and A loses a dollar whenever the coin lands right.
/// Returns the probability that A wins, i.e. the walker started between the
/// barriers reaches the left one (distance `b_fortune`) first.
///
/// Solved from the first-step equations, never from the closed form; the
/// fair case must come out to `a / (a + b)`.
pub fn gambler_win_prob(a_fortune: u64, b_fortune: u64, bias: &Bias) -> Rational {
    assert!(
        a_fortune >= 1 && b_fortune >= 1,
        "both fortunes must be positive"
    );
    let profile = solve::hit_left_profile(-(b_fortune as i64), a_fortune as i64, bias);
    profile[b_fortune as usize - 1].clone()
}

/// Expected number of fair tosses for a walker started at the origin to
/// exit the open interval `(-left_distance, right_distance)`; equals the
/// product of the two distances.
pub fn escape_time(right_distance: u64, left_distance: u64) -> Rational {
    assert!(
        right_distance >= 1 && left_distance >= 1,
        "barriers must be away from the origin"
    );
    let profile = solve::exit_time_profile(-(left_distance as i64), right_distance as i64);
    profile[left_distance as usize - 1].clone()
}

/// Law of the right-of-origin count for a biased coin. Every lattice
/// transition probability comes from [`gambler_win_prob`]'s linear solve;
/// no q-analog identity is assumed. At the fair bias this reproduces
/// [`exact_distribution`].
pub fn exact_distribution_biased(n_sites: u64, bias: &Bias) -> StateDistribution {
    assert!(n_sites >= 1, "need at least the origin occupied");
    let mut probs = vec![Rational::one()];
    for m in 2..=n_sites {
        let mut next = vec![Rational::zero(); m as usize];
        for (j, mass) in probs.iter().enumerate() {
            // From state (m-1, j): the walker's side of the ruin game holds
            // j+1 dollars, the opponent m-1-j; A winning settles the new
            // site on the left, keeping the right count at j.
            let w_left = gambler_win_prob(j as u64 + 1, m - 1 - j as u64, bias);
            let w_right = Rational::one() - &w_left;
            next[j] = &next[j] + mass * w_left;
            next[j + 1] = &next[j + 1] + mass * w_right;
        }
        probs = next;
    }
    let support = probs
        .into_iter()
        .enumerate()
        .map(|(k, p)| (k as u64, p))
        .collect();
    StateDistribution::from_map(support)
}

/// Expected total number of tosses until `n_sites` sites are occupied,
/// built from per-particle settle times: the particle that turns `m-1`
/// occupied sites into `m` needs `k(m-k)` expected tosses from state
/// `(m-1, k-1)`, weighted by the exact state law. The first walking
/// particle always needs exactly one toss.
///
/// Agrees with the closed form `(n^3 + n^2) / 12` for every `n >= 2`; the
/// closed form does not extend to `n = 1`, where the answer is 0.
pub fn expected_total_tosses(n_sites: u64) -> Rational {
    if n_sites <= 1 {
        return Rational::zero();
    }
    let mut total = Rational::one();
    for m in 3..=n_sites {
        let law = exact_distribution(m - 1);
        let delta: Rational = law
            .iter()
            .map(|(j, mass)| {
                let factor = Rational::integer(((j + 1) * (m - 1 - j)) as i64);
                mass * factor
            })
            .sum();
        total = total + delta;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::factorial;
    use crate::eulerian::{eulerian_row, q_eulerian_row, q_factorial};

    #[test]
    fn transition_boundaries() {
        for n in 2..=9u64 {
            let (p, _) = transition_probs(n, 0);
            assert_eq!(p, Rational::ratio(1, n as i64));
            let (_, q) = transition_probs(n, n - 1);
            assert_eq!(q, Rational::ratio(1, n as i64));
        }
    }

    #[test]
    fn first_toss_is_even() {
        let (p0, _) = transition_probs(2, 0);
        let (_, q1) = transition_probs(2, 1);
        assert_eq!(p0, Rational::ratio(1, 2));
        assert_eq!(q1, Rational::ratio(1, 2));
    }

    #[test]
    fn outgoing_probabilities_sum_to_one() {
        for n in 2..=10u64 {
            for k in 1..n {
                let (p, _) = transition_probs(n, k - 1);
                let (_, q) = transition_probs(n, k);
                assert_eq!(p + q, Rational::one(), "source ({}, {})", n - 1, k - 1);
            }
        }
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn transition_rejects_out_of_range() {
        let _ = transition_probs(3, 3);
    }

    #[test]
    fn distribution_small_cases() {
        let d1 = exact_distribution(1);
        assert_eq!(d1.prob(0), Rational::one());

        let d3 = exact_distribution(3);
        assert_eq!(d3.prob(0), Rational::ratio(1, 6));
        assert_eq!(d3.prob(1), Rational::ratio(4, 6));
        assert_eq!(d3.prob(2), Rational::ratio(1, 6));

        assert_eq!(exact_distribution(7).prob(0), Rational::ratio(1, 5040));
    }

    #[test]
    fn distribution_is_eulerian() {
        for n in 1..=10u64 {
            let law = exact_distribution(n);
            let row = eulerian_row(n as usize);
            let scale = Rational::from_bigint(factorial(n));
            for k in 0..n {
                assert_eq!(
                    law.prob(k) * &scale,
                    Rational::from_bigint(row.entry(k as usize).clone()),
                    "n = {n}, k = {k}"
                );
            }
        }
    }

    #[test]
    fn gambler_examples() {
        assert_eq!(gambler_win_prob(4, 3, &Bias::fair()), Rational::ratio(4, 7));
        assert_eq!(gambler_win_prob(1, 1, &Bias::fair()), Rational::ratio(1, 2));
        // Hand-solved two-interior-state system at p_right = 2/3.
        let bias = Bias::new(Rational::ratio(2, 3)).unwrap();
        assert_eq!(gambler_win_prob(2, 1, &bias), Rational::ratio(3, 7));
        // ... which matches [2]/[3] at rho = p/q = 2: 3/7.
    }

    #[test]
    fn gambler_fair_closed_form_grid() {
        for k in 1..=8u64 {
            for l in 1..=8u64 {
                assert_eq!(
                    gambler_win_prob(k, l, &Bias::fair()),
                    Rational::ratio(k as i64, (k + l) as i64),
                    "k = {k}, l = {l}"
                );
            }
        }
    }

    #[test]
    fn escape_time_chart() {
        // The five states with five occupied sites.
        for (k, l, expect) in [(1, 5, 5), (2, 4, 8), (3, 3, 9), (4, 2, 8), (5, 1, 5)] {
            assert_eq!(escape_time(k, l), Rational::integer(expect));
        }
        assert_eq!(escape_time(1, 1), Rational::one());
        for a in 1..=8u64 {
            for b in 1..=8u64 {
                assert_eq!(escape_time(a, b), Rational::integer((a * b) as i64));
            }
        }
    }

    #[test]
    fn biased_single_toss() {
        let bias = Bias::new(Rational::ratio(2, 3)).unwrap();
        let law = exact_distribution_biased(2, &bias);
        assert_eq!(law.prob(0), Rational::ratio(1, 3));
        assert_eq!(law.prob(1), Rational::ratio(2, 3));
    }

    #[test]
    fn biased_fair_specialization() {
        for n in 1..=8u64 {
            assert_eq!(
                exact_distribution_biased(n, &Bias::fair()),
                exact_distribution(n),
                "n = {n}"
            );
        }
    }

    #[test]
    fn biased_matches_q_eulerian_at_odds_ratio() {
        // rho = p_right / p_left, right counts indexing descents.
        let bias = Bias::new(Rational::ratio(2, 3)).unwrap();
        let rho = bias.rho();
        assert_eq!(rho, Rational::integer(2));
        for n in 2..=6u64 {
            let law = exact_distribution_biased(n, &bias);
            let row = q_eulerian_row(n as usize).evaluate(&rho);
            let denom = q_factorial(n, &rho);
            for (k, value) in row.iter().enumerate() {
                assert_eq!(law.prob(k as u64), value / &denom, "n = {n}, k = {k}");
            }
        }
    }

    #[test]
    fn invalid_bias_rejected() {
        assert!(Bias::new(Rational::zero()).is_err());
        assert!(Bias::new(Rational::one()).is_err());
        assert!(Bias::new(Rational::ratio(5, 3)).is_err());
        assert!(Bias::new(Rational::ratio(-1, 3)).is_err());
    }

    #[test]
    fn expected_tosses_small_values() {
        assert_eq!(expected_total_tosses(1), Rational::zero());
        assert_eq!(expected_total_tosses(2), Rational::one());
        assert_eq!(expected_total_tosses(3), Rational::integer(3));
        assert_eq!(expected_total_tosses(4), Rational::ratio(20, 3));
    }

    #[test]
    fn macro_state_accessors() {
        let s = MacroState::new(7, 4);
        assert_eq!(s.sites(), 7);
        assert_eq!(s.right_of_origin(), 4);
        assert_eq!(s.at_or_left_of_origin(), 3);
        let (p, q) = s.incoming_probs();
        assert_eq!(p, Rational::ratio(5, 7));
        assert_eq!(q, Rational::ratio(3, 7));
    }

    #[test]
    fn point_distribution() {
        let d = StateDistribution::point(3);
        assert_eq!(d.prob(3), Rational::one());
        assert_eq!(d.prob(0), Rational::zero());
        assert_eq!(d.total(), Rational::one());
    }
}
