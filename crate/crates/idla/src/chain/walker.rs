//! Toss-by-toss evolution of the walker-refined state space.
//!
//! A [`WalkerState`] records the occupied interval `[-left, right]` together
//! with the current particle's position inside it. Settling on a boundary
//! site extends the interval and respawns the next particle at the origin
//! without consuming a toss, so a state's toss clock counts coin flips only.

use std::collections::BTreeMap;

use crate::algebra::Rational;

use super::{solve, Bias, ChainError, StateDistribution};

/// Default upper bound on the toss count accepted by
/// [`ntoss_distribution`]; the reachable state space grows cubically in the
/// number of tosses.
pub const DEFAULT_TOSS_CAP: u32 = 16;

/// Occupied interval `[-left, right]` (always containing the origin) plus
/// the position of the particle currently walking.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WalkerState {
    left: u32,
    right: u32,
    pos: i64,
}

impl WalkerState {
    /// Only the origin occupied, next particle waiting on it.
    pub fn initial() -> Self {
        WalkerState {
            left: 0,
            right: 0,
            pos: 0,
        }
    }

    pub fn occupied_sites(&self) -> u64 {
        self.left as u64 + self.right as u64 + 1
    }

    pub fn sites_right_of_origin(&self) -> u64 {
        self.right as u64
    }

    pub fn position(&self) -> i64 {
        self.pos
    }
}

/// One coin toss applied to every state in `states`. `on_settle` fires with
/// the post-settlement state and the arriving mass whenever a move lands on
/// an unoccupied boundary site.
fn step<F>(
    states: &BTreeMap<WalkerState, Rational>,
    bias: &Bias,
    mut on_settle: F,
) -> BTreeMap<WalkerState, Rational>
where
    F: FnMut(&WalkerState, &Rational),
{
    let p = bias.p_right().clone();
    let q = bias.p_left();
    let mut next: BTreeMap<WalkerState, Rational> = BTreeMap::new();
    let mut push = |state: WalkerState, mass: Rational| {
        let entry = next.entry(state).or_insert_with(Rational::zero);
        *entry = &*entry + mass;
    };
    for (s, mass) in states {
        // right move
        let m = mass * &p;
        if !m.is_zero() {
            if s.pos + 1 > s.right as i64 {
                let settled = WalkerState {
                    left: s.left,
                    right: s.right + 1,
                    pos: 0,
                };
                on_settle(&settled, &m);
                push(settled, m);
            } else {
                push(
                    WalkerState {
                        pos: s.pos + 1,
                        ..*s
                    },
                    m,
                );
            }
        }
        // left move
        let m = mass * &q;
        if !m.is_zero() {
            if s.pos - 1 < -(s.left as i64) {
                let settled = WalkerState {
                    left: s.left + 1,
                    right: s.right,
                    pos: 0,
                };
                on_settle(&settled, &m);
                push(settled, m);
            } else {
                push(
                    WalkerState {
                        pos: s.pos - 1,
                        ..*s
                    },
                    m,
                );
            }
        }
    }
    next
}

fn evolve<F>(tosses: u32, bias: &Bias, mut on_settle: F) -> BTreeMap<WalkerState, Rational>
where
    F: FnMut(&WalkerState, &Rational),
{
    let mut states = BTreeMap::from([(WalkerState::initial(), Rational::one())]);
    for _ in 0..tosses {
        states = step(&states, bias, &mut on_settle);
    }
    states
}

/// Exact law of the occupied-site count after exactly `tosses` coin flips,
/// starting from a bare origin with an unlimited particle queue.
///
/// Rejects toss counts above `cap` to bound the enumerated state space.
pub fn ntoss_distribution(
    tosses: u32,
    bias: &Bias,
    cap: u32,
) -> Result<StateDistribution, ChainError> {
    if tosses > cap {
        return Err(ChainError::TossBudgetAboveCap {
            requested: tosses,
            cap,
        });
    }
    let states = evolve(tosses, bias, |_, _| {});
    let mut marginal: BTreeMap<u64, Rational> = BTreeMap::new();
    for (s, mass) in states {
        let entry = marginal
            .entry(s.occupied_sites())
            .or_insert_with(Rational::zero);
        *entry = &*entry + mass;
    }
    Ok(StateDistribution::from_map(marginal))
}

/// Law of the right-of-origin count at the first moment `n_sites` sites are
/// occupied, computed through the walker engine: settlement events within
/// `toss_budget` tosses are accumulated directly, and walks still pending at
/// the end are resolved analytically with the exact absorption
/// probabilities of their current interval.
///
/// Exact for every budget, including zero; must agree with the macro-state
/// dynamic programming for any bias.
pub fn first_hit_distribution(n_sites: u64, toss_budget: u32, bias: &Bias) -> StateDistribution {
    assert!(n_sites >= 1, "need at least the origin occupied");
    if n_sites == 1 {
        return StateDistribution::point(0);
    }
    let mut arrived: BTreeMap<u64, Rational> = BTreeMap::new();
    let final_states = evolve(toss_budget, bias, |settled, mass| {
        if settled.occupied_sites() == n_sites {
            let entry = arrived
                .entry(settled.sites_right_of_origin())
                .or_insert_with(Rational::zero);
            *entry = &*entry + mass;
        }
    });

    // Resolve pending walks: settle the in-flight particle from its current
    // position, then follow the settlement jump chain up to the target level.
    let mut pending: Vec<(u32, u32, i64, Rational)> = final_states
        .into_iter()
        .filter(|(s, _)| s.occupied_sites() < n_sites)
        .map(|(s, mass)| (s.left, s.right, s.pos, mass))
        .collect();
    while let Some((left, right, pos, mass)) = pending.pop() {
        let lo = -(left as i64) - 1;
        let hi = right as i64 + 1;
        let profile = solve::hit_left_profile(lo, hi, bias);
        let w_left = profile[(pos - lo - 1) as usize].clone();
        let w_right = Rational::one() - &w_left;
        for (next_left, next_right, w) in [(left + 1, right, w_left), (left, right + 1, w_right)] {
            let mass = &mass * w;
            if next_left as u64 + next_right as u64 + 1 == n_sites {
                let entry = arrived
                    .entry(next_right as u64)
                    .or_insert_with(Rational::zero);
                *entry = &*entry + mass;
            } else {
                pending.push((next_left, next_right, 0, mass));
            }
        }
    }
    StateDistribution::from_map(arrived)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::{exact_distribution, exact_distribution_biased};
    use num_bigint::BigInt;
    use num_traits::One;

    fn fair_row(tosses: u32) -> StateDistribution {
        ntoss_distribution(tosses, &Bias::fair(), DEFAULT_TOSS_CAP).unwrap()
    }

    #[test]
    fn zero_and_one_toss() {
        let d0 = fair_row(0);
        assert_eq!(d0.prob(1), Rational::one());

        let d1 = fair_row(1);
        assert_eq!(d1.prob(2), Rational::one());
    }

    #[test]
    fn six_tosses() {
        let d = fair_row(6);
        assert_eq!(d.prob(2), Rational::ratio(1, 32));
        assert_eq!(d.prob(3), Rational::ratio(10, 32));
        assert_eq!(d.prob(4), Rational::ratio(18, 32));
        assert_eq!(d.prob(5), Rational::ratio(3, 32));
    }

    #[test]
    fn cap_is_enforced() {
        let err = ntoss_distribution(17, &Bias::fair(), DEFAULT_TOSS_CAP).unwrap_err();
        assert_eq!(
            err,
            ChainError::TossBudgetAboveCap {
                requested: 17,
                cap: DEFAULT_TOSS_CAP
            }
        );
        assert!(ntoss_distribution(17, &Bias::fair(), 17).is_ok());
    }

    #[test]
    fn fair_denominators_divide_power_of_two() {
        for tosses in 1..=10u32 {
            let d = fair_row(tosses);
            let scale = BigInt::one() << (tosses - 1);
            for (n, p) in d.iter() {
                let den = p.denom();
                assert!(
                    (&scale % den) == BigInt::from(0),
                    "tosses = {tosses}, n = {n}, denom = {den}"
                );
            }
        }
    }

    #[test]
    fn first_hit_matches_exact_distribution() {
        for n in 2..=5u64 {
            let expect = exact_distribution(n);
            for budget in [0u32, 1, 3, 8] {
                let got = first_hit_distribution(n, budget, &Bias::fair());
                assert_eq!(got, expect, "n = {n}, budget = {budget}");
            }
        }
    }

    #[test]
    fn first_hit_matches_biased_distribution() {
        let bias = Bias::new(Rational::ratio(1, 4)).unwrap();
        for n in 2..=4u64 {
            let expect = exact_distribution_biased(n, &bias);
            for budget in [0u32, 5] {
                let got = first_hit_distribution(n, budget, &bias);
                assert_eq!(got, expect, "n = {n}, budget = {budget}");
            }
        }
    }

    #[test]
    fn trivial_first_hit() {
        assert_eq!(
            first_hit_distribution(1, 4, &Bias::fair()),
            StateDistribution::point(0)
        );
    }
}
