//! Seeded Monte Carlo simulation of the coin-tossing game.
//!
//! Reproducibility is a product feature here: a batch's results are a pure
//! function of `(sites, trials, bias, master_seed)`. Every trial draws its
//! coin flips from its own SplitMix64 substream, derived from the master
//! seed and the trial index alone, and aggregation uses exact integer
//! accumulators, so the worker count changes wall-clock time and nothing
//! else — not even the last bit of a reported mean.

use std::collections::BTreeMap;
use std::thread;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::chain::Bias;

const GOLDEN_GAMMA: u64 = 0x9e37_79b9_7f4a_7c15;

/// SplitMix64: Steele, Lea and Flood's tiny splittable generator. Fixed
/// here for cross-platform stability of seeded runs.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN_GAMMA);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }
}

/// Seed for a trial's private stream: the `trial_index`-th output of a
/// SplitMix64 stream seeded with the master seed.
pub fn substream_seed(master_seed: u64, trial_index: u64) -> u64 {
    let mut z = master_seed.wrapping_add(trial_index.wrapping_add(1).wrapping_mul(GOLDEN_GAMMA));
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// A coin with the bias folded into a 64-bit comparison threshold
/// (resolution 2^-64, exact for dyadic biases such as 1/2).
#[derive(Clone, Copy, Debug)]
struct Coin {
    threshold: u64,
}

impl Coin {
    fn new(bias: &Bias) -> Self {
        let p = bias.p_right();
        let scaled: BigInt = (p.numer() << 64u32) / p.denom();
        Coin {
            threshold: scaled.to_u64().expect("bias in (0,1) scales below 2^64"),
        }
    }

    fn lands_right(&self, rng: &mut SplitMix64) -> bool {
        rng.next_u64() < self.threshold
    }
}

/// Full description of a simulation batch. Results are independent of
/// `workers`.
#[derive(Clone, Debug)]
pub struct SimConfig {
    pub sites: u64,
    pub trials: u64,
    pub bias: Bias,
    pub master_seed: u64,
    pub workers: usize,
}

/// Outcome of one complete game.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GameResult {
    /// Sites strictly right of the origin at the end.
    pub final_right: u64,
    pub total_tosses: u64,
    /// Leftmost position reached (= leftmost occupied site).
    pub min_pos: i64,
    /// Rightmost position reached.
    pub max_pos: i64,
}

/// Plays one game to `sites` occupied sites. The first particle occupies
/// the origin for free; each later one walks from the origin until it
/// steps past an end of the occupied interval.
pub fn run_single_game(sites: u64, bias: &Bias, rng: &mut SplitMix64) -> GameResult {
    let coin = Coin::new(bias);
    let mut left: i64 = 0;
    let mut right: i64 = 0;
    let mut tosses: u64 = 0;
    for _ in 1..sites {
        let mut pos: i64 = 0;
        loop {
            tosses += 1;
            if coin.lands_right(rng) {
                pos += 1;
                if pos > right {
                    right = pos;
                    break;
                }
            } else {
                pos -= 1;
                if pos < -left {
                    left = -pos;
                    break;
                }
            }
            // the walker never leaves the occupied interval mid-walk
            debug_assert!(-left <= pos && pos <= right);
        }
    }
    GameResult {
        final_right: right as u64,
        total_tosses: tosses,
        min_pos: -left,
        max_pos: right,
    }
}

/// Aggregated results of a batch. Toss statistics are kept as exact integer
/// sums internally; the floating-point moments are derived once at the end,
/// so they do not depend on aggregation order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrialBatchSummary {
    counts_by_k: Vec<u64>,
    trials: u64,
    sum_tosses: u128,
    sum_sq_tosses: u128,
    min_tosses: u64,
    max_tosses: u64,
}

impl TrialBatchSummary {
    /// Histogram of final right-of-origin counts, indexed by `k` in
    /// `0..sites`.
    pub fn counts_by_k(&self) -> &[u64] {
        &self.counts_by_k
    }

    pub fn trials(&self) -> u64 {
        self.trials
    }

    /// Counts normalized to frequencies.
    pub fn frequencies(&self) -> Vec<f64> {
        self.counts_by_k
            .iter()
            .map(|&c| c as f64 / self.trials as f64)
            .collect()
    }

    pub fn mean_tosses(&self) -> f64 {
        self.sum_tosses as f64 / self.trials as f64
    }

    /// Unbiased sample variance, from the exact sums.
    pub fn variance_tosses(&self) -> f64 {
        if self.trials < 2 {
            return 0.0;
        }
        let trials = self.trials as u128;
        let numerator = trials
            .checked_mul(self.sum_sq_tosses)
            .expect("toss statistics overflow")
            - self.sum_tosses * self.sum_tosses;
        numerator as f64 / (trials * (trials - 1)) as f64
    }

    /// Standard error of the mean estimate.
    pub fn std_error_mean(&self) -> f64 {
        (self.variance_tosses() / self.trials as f64).sqrt()
    }

    pub fn min_tosses(&self) -> u64 {
        self.min_tosses
    }

    pub fn max_tosses(&self) -> u64 {
        self.max_tosses
    }

    fn empty(sites: u64) -> Self {
        TrialBatchSummary {
            counts_by_k: vec![0; sites as usize],
            trials: 0,
            sum_tosses: 0,
            sum_sq_tosses: 0,
            min_tosses: u64::MAX,
            max_tosses: 0,
        }
    }

    fn record(&mut self, game: &GameResult) {
        self.counts_by_k[game.final_right as usize] += 1;
        self.trials += 1;
        self.sum_tosses += game.total_tosses as u128;
        self.sum_sq_tosses += (game.total_tosses as u128) * (game.total_tosses as u128);
        self.min_tosses = self.min_tosses.min(game.total_tosses);
        self.max_tosses = self.max_tosses.max(game.total_tosses);
    }

    fn merge(&mut self, other: &TrialBatchSummary) {
        for (a, b) in self.counts_by_k.iter_mut().zip(&other.counts_by_k) {
            *a += b;
        }
        self.trials += other.trials;
        self.sum_tosses += other.sum_tosses;
        self.sum_sq_tosses += other.sum_sq_tosses;
        self.min_tosses = self.min_tosses.min(other.min_tosses);
        self.max_tosses = self.max_tosses.max(other.max_tosses);
    }
}

/// Runs `config.trials` independent games, split across `config.workers`
/// threads in contiguous trial ranges. Trial `t` always uses the substream
/// seeded by `substream_seed(master_seed, t)`, so the partition is
/// unobservable in the output.
pub fn run_trials(config: &SimConfig) -> TrialBatchSummary {
    assert!(config.sites >= 1, "need at least the origin");
    assert!(config.trials >= 1, "need at least one trial");
    assert!(config.workers >= 1, "need at least one worker");

    let workers = config.workers.min(config.trials as usize).max(1) as u64;
    let chunk = config.trials.div_ceil(workers);
    let mut partials: Vec<TrialBatchSummary> = Vec::with_capacity(workers as usize);
    thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let start = w * chunk;
                let end = ((w + 1) * chunk).min(config.trials);
                scope.spawn(move || {
                    let mut partial = TrialBatchSummary::empty(config.sites);
                    for trial in start..end {
                        let mut rng = SplitMix64::new(substream_seed(config.master_seed, trial));
                        let game = run_single_game(config.sites, &config.bias, &mut rng);
                        partial.record(&game);
                    }
                    partial
                })
            })
            .collect();
        for handle in handles {
            partials.push(handle.join().expect("worker panicked"));
        }
    });
    let mut total = TrialBatchSummary::empty(config.sites);
    for partial in &partials {
        total.merge(partial);
    }
    total
}

/// Empirical counterpart of the exact N-toss law: plays `trials` rounds of
/// exactly `tosses` coin flips each (settlements respawn for free) and
/// histograms the occupied-site count.
pub fn empirical_ntoss(
    tosses: u32,
    trials: u64,
    bias: &Bias,
    master_seed: u64,
) -> BTreeMap<u64, u64> {
    assert!(trials >= 1, "need at least one trial");
    let coin = Coin::new(bias);
    let mut histogram = BTreeMap::new();
    for trial in 0..trials {
        let mut rng = SplitMix64::new(substream_seed(master_seed, trial));
        let mut left: i64 = 0;
        let mut right: i64 = 0;
        let mut pos: i64 = 0;
        for _ in 0..tosses {
            if coin.lands_right(&mut rng) {
                pos += 1;
                if pos > right {
                    right = pos;
                    pos = 0;
                }
            } else {
                pos -= 1;
                if pos < -left {
                    left = -pos;
                    pos = 0;
                }
            }
        }
        *histogram.entry((left + right + 1) as u64).or_insert(0) += 1;
    }
    histogram
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Rational;

    fn fair_config(sites: u64, trials: u64, seed: u64, workers: usize) -> SimConfig {
        SimConfig {
            sites,
            trials,
            bias: Bias::fair(),
            master_seed: seed,
            workers,
        }
    }

    #[test]
    fn single_site_needs_no_tosses() {
        let mut rng = SplitMix64::new(7);
        let game = run_single_game(1, &Bias::fair(), &mut rng);
        assert_eq!(game.total_tosses, 0);
        assert_eq!(game.final_right, 0);
        assert_eq!((game.min_pos, game.max_pos), (0, 0));
    }

    #[test]
    fn two_sites_take_exactly_one_toss() {
        for seed in 0..32 {
            let mut rng = SplitMix64::new(seed);
            let game = run_single_game(2, &Bias::fair(), &mut rng);
            assert_eq!(game.total_tosses, 1);
            assert!(game.final_right == 0 || game.final_right == 1);
        }
    }

    #[test]
    fn interval_invariant_holds_at_game_end() {
        let mut rng = SplitMix64::new(99);
        for sites in [3u64, 5, 9] {
            let game = run_single_game(sites, &Bias::fair(), &mut rng);
            assert_eq!(game.max_pos, game.final_right as i64);
            assert_eq!(game.min_pos, -((sites - 1 - game.final_right) as i64));
            assert!(game.total_tosses >= sites - 1);
        }
    }

    #[test]
    fn summary_of_single_trial() {
        let summary = run_trials(&fair_config(4, 1, 11, 1));
        assert_eq!(summary.trials(), 1);
        assert_eq!(summary.counts_by_k().iter().sum::<u64>(), 1);
        assert_eq!(summary.variance_tosses(), 0.0);
        assert_eq!(summary.min_tosses(), summary.max_tosses());
    }

    #[test]
    fn worker_count_is_unobservable() {
        for workers in [1usize, 2, 3, 8] {
            let summary = run_trials(&fair_config(5, 2000, 42, workers));
            let baseline = run_trials(&fair_config(5, 2000, 42, 1));
            assert_eq!(summary, baseline, "workers = {workers}");
        }
    }

    #[test]
    fn two_site_frequencies_are_balanced() {
        let summary = run_trials(&fair_config(2, 20_000, 3, 4));
        assert_eq!(summary.mean_tosses(), 1.0);
        let freq = summary.frequencies();
        assert!((freq[0] - 0.5).abs() < 0.02, "freq = {freq:?}");
    }

    #[test]
    fn three_site_toss_mean_is_near_three() {
        // E_3 = 3: one toss for the first walker, then an escape time of
        // 1*2 = 2 for the third particle from either two-site state.
        let summary = run_trials(&fair_config(3, 50_000, 17, 4));
        let dev = (summary.mean_tosses() - 3.0).abs();
        assert!(
            dev <= 4.0 * summary.std_error_mean(),
            "mean = {}",
            summary.mean_tosses()
        );
    }

    #[test]
    fn biased_coin_threshold_is_exact_for_half() {
        let coin = Coin::new(&Bias::fair());
        assert_eq!(coin.threshold, 1u64 << 63);
        let third = Coin::new(&Bias::new(Rational::ratio(1, 3)).unwrap());
        // floor(2^64 / 3)
        assert_eq!(third.threshold, u64::MAX / 3);
    }

    #[test]
    fn empirical_ntoss_support() {
        let h1 = empirical_ntoss(1, 500, &Bias::fair(), 5);
        assert_eq!(h1.len(), 1);
        assert_eq!(h1[&2], 500);

        let h2 = empirical_ntoss(2, 4000, &Bias::fair(), 5);
        assert_eq!(h2.keys().copied().collect::<Vec<_>>(), vec![2, 3]);
        let near_half = h2[&2] as f64 / 4000.0;
        assert!((near_half - 0.5).abs() < 0.05);
    }

    #[test]
    fn empirical_ntoss_matches_exact_row_six() {
        let trials = 40_000u64;
        let histogram = empirical_ntoss(6, trials, &Bias::fair(), 8);
        let expected = [(2u64, 1.0), (3, 10.0), (4, 18.0), (5, 3.0)];
        for (sites, numerator) in expected {
            let freq = *histogram.get(&sites).unwrap_or(&0) as f64 / trials as f64;
            let p = numerator / 32.0;
            assert!(
                (freq - p).abs() < 5.0 * (p * (1.0 - p) / trials as f64).sqrt(),
                "sites = {sites}: freq {freq} vs {p}"
            );
        }
    }

    #[test]
    fn substreams_differ() {
        let a = substream_seed(42, 0);
        let b = substream_seed(42, 1);
        let c = substream_seed(43, 0);
        assert_ne!(a, b);
        assert_ne!(a, c);
    }
}
