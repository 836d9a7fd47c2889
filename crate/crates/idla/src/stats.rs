//! Goodness-of-fit metrics comparing empirical counts to exact laws.
//!
//! The one module that computes in 64-bit floats: statistics over 10^5
//! trials do not need exact arithmetic, and the exact modules never import
//! from here.

/// Sum of squared errors between two probability vectors of equal length.
pub fn sse(empirical: &[f64], exact: &[f64]) -> f64 {
    assert_eq!(
        empirical.len(),
        exact.len(),
        "vectors must have equal length"
    );
    empirical
        .iter()
        .zip(exact)
        .map(|(e, x)| (e - x) * (e - x))
        .sum()
}

/// Everything a chi-square comparison produces.
#[derive(Clone, Debug, PartialEq)]
pub struct FitReport {
    pub sse: f64,
    /// Pearson statistic over the pooled cells.
    pub chi_square_statistic: f64,
    /// Pooled cell count minus one.
    pub degrees_of_freedom: usize,
    pub max_abs_deviation: f64,
    /// Per original (unpooled) cell: `(observed - expected) / sqrt(expected (1-p))`.
    pub per_cell_z_scores: Vec<f64>,
    /// Wilson-Hilferty critical value at significance 10^-3 for the pooled
    /// degrees of freedom.
    pub chi_square_threshold: f64,
}

impl FitReport {
    /// Statistic below the 10^-3 critical value.
    pub fn chi_square_ok(&self) -> bool {
        self.chi_square_statistic <= self.chi_square_threshold
    }
}

const POOL_MIN_EXPECTED: f64 = 5.0;

/// Standard normal quantile at 1 - 10^-3.
const Z_QUANTILE_999: f64 = 3.090_232_306_167_813;

/// Wilson-Hilferty cube-root approximation to the chi-square quantile at
/// significance 10^-3. Adequate for the dozen-or-so degrees of freedom seen
/// here; degenerate inputs (zero dof) get a zero threshold.
pub fn chi_square_critical_1e3(degrees_of_freedom: usize) -> f64 {
    if degrees_of_freedom == 0 {
        return 0.0;
    }
    let df = degrees_of_freedom as f64;
    let base = 1.0 - 2.0 / (9.0 * df) + Z_QUANTILE_999 * (2.0 / (9.0 * df)).sqrt();
    df * base.powi(3)
}

/// Adjacent cells pooled left to right until each group's expected count
/// reaches [`POOL_MIN_EXPECTED`]; a small trailing group merges into the
/// last complete one. Totals are preserved exactly.
fn pool_cells(counts: &[u64], expected: &[f64]) -> Vec<(u64, f64)> {
    let mut pooled: Vec<(u64, f64)> = Vec::new();
    let mut acc_count = 0u64;
    let mut acc_expected = 0.0f64;
    for (&c, &e) in counts.iter().zip(expected) {
        acc_count += c;
        acc_expected += e;
        if acc_expected >= POOL_MIN_EXPECTED {
            pooled.push((acc_count, acc_expected));
            acc_count = 0;
            acc_expected = 0.0;
        }
    }
    if acc_count > 0 || acc_expected > 0.0 {
        if let Some(last) = pooled.last_mut() {
            last.0 += acc_count;
            last.1 += acc_expected;
        } else {
            pooled.push((acc_count, acc_expected));
        }
    }
    pooled
}

/// Pearson chi-square comparison of observed `counts` against the exact
/// probability vector, with small-expectation cells pooled into neighbors.
///
/// Panics when the counts do not sum to `trials`, when `trials` is zero, or
/// when the probabilities do not sum to 1.
pub fn chi_square(counts: &[u64], exact: &[f64], trials: u64) -> FitReport {
    assert!(trials > 0, "need at least one trial");
    assert_eq!(counts.len(), exact.len(), "vectors must have equal length");
    assert_eq!(
        counts.iter().sum::<u64>(),
        trials,
        "counts must sum to the trial count"
    );
    let prob_total: f64 = exact.iter().sum();
    assert!(
        (prob_total - 1.0).abs() < 1e-9,
        "exact probabilities must sum to 1"
    );

    let trials_f = trials as f64;
    let empirical: Vec<f64> = counts.iter().map(|&c| c as f64 / trials_f).collect();
    let sse_value = sse(&empirical, exact);
    let max_abs_deviation = empirical
        .iter()
        .zip(exact)
        .map(|(e, x)| (e - x).abs())
        .fold(0.0, f64::max);
    let per_cell_z_scores = counts
        .iter()
        .zip(exact)
        .map(|(&c, &p)| {
            let spread = trials_f * p * (1.0 - p);
            if spread <= 0.0 {
                0.0
            } else {
                (c as f64 - trials_f * p) / spread.sqrt()
            }
        })
        .collect();

    let expected: Vec<f64> = exact.iter().map(|&p| p * trials_f).collect();
    let pooled = pool_cells(counts, &expected);
    let chi_square_statistic = pooled
        .iter()
        .filter(|(_, e)| *e > 0.0)
        .map(|(c, e)| {
            let diff = *c as f64 - e;
            diff * diff / e
        })
        .sum();
    let degrees_of_freedom = pooled.len().saturating_sub(1);

    FitReport {
        sse: sse_value,
        chi_square_statistic,
        degrees_of_freedom,
        max_abs_deviation,
        per_cell_z_scores,
        chi_square_threshold: chi_square_critical_1e3(degrees_of_freedom),
    }
}
