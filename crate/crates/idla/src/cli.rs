//! Stable machine-readable output for the `idla` binary.
//!
//! Every command produces an [`OutputEnvelope`]: command name, parameters,
//! scalar summary values, and a rectangular table. The CSV rendering puts
//! the scalars on `#`-prefixed metadata lines above the header row (readers
//! that understand `#` comments parse the table directly); the JSON
//! rendering is a single object. Both carry exactly the same values, and
//! both are byte-deterministic for a given run.
//!
//! Exact probabilities are serialized as `numerator/denominator` strings,
//! never floats; a parallel `*_approx` decimal column is provided for human
//! reading.

use std::collections::BTreeMap;
use std::env;

use num_bigint::BigInt;
use num_traits::One;

use serde::Serialize;

use crate::algebra::Rational;
use crate::chain::{self, Bias, ChainError, StateDistribution};
use crate::montecarlo::{self, SimConfig};
use crate::stats;
use crate::verify::{self, Suite};

/// Environment variable that raises the toss cap of `idla ntoss`.
pub const NTOSS_CAP_ENV: &str = "IDLA_NTOSS_CAP";

/// Schema version stamped into every envelope.
pub const FORMAT_VERSION: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

/// One command's complete output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OutputEnvelope {
    pub format_version: String,
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub summary: BTreeMap<String, String>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl OutputEnvelope {
    fn new(command: &str) -> Self {
        OutputEnvelope {
            format_version: FORMAT_VERSION.to_string(),
            command: command.to_string(),
            parameters: BTreeMap::new(),
            summary: BTreeMap::new(),
            columns: Vec::new(),
            rows: Vec::new(),
        }
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Csv => self.to_csv(),
            OutputFormat::Json => self.to_json(),
        }
    }

    /// `#` metadata lines, a header row, then one line per table row.
    /// Cells never contain commas (slashes and semicolons stand in), so no
    /// quoting is needed.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("# format_version={}\n", self.format_version));
        out.push_str(&format!("# command={}\n", self.command));
        for (key, value) in &self.parameters {
            out.push_str(&format!("# {}={}\n", key, csv_cell(value)));
        }
        for (key, value) in &self.summary {
            out.push_str(&format!("# {}={}\n", key, csv_cell(value)));
        }
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|c| csv_cell(c)).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    /// Compact single-object JSON, keys in fixed order, trailing newline.
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string(self).expect("envelope serializes");
        out.push('\n');
        out
    }
}

fn csv_cell(value: &str) -> String {
    debug_assert!(!value.contains('\n'), "cell with newline: {value}");
    value.replace(',', ";")
}

fn approx(value: &Rational) -> String {
    value.to_f64().to_string()
}

fn law_for(n: u64, bias: &Bias) -> StateDistribution {
    if bias.is_fair() {
        chain::exact_distribution(n)
    } else {
        chain::exact_distribution_biased(n, bias)
    }
}

/// `exact-dist`: the law of the right-of-origin count at `n` occupied
/// sites, exact plus decimal.
pub fn exact_dist(n: u64, bias: &Bias) -> OutputEnvelope {
    let mut envelope = OutputEnvelope::new("exact-dist");
    envelope.parameters.insert("n".into(), n.to_string());
    envelope
        .parameters
        .insert("bias".into(), bias.p_right().to_string());
    envelope.columns = vec!["k".into(), "p_exact".into(), "p_approx".into()];
    let law = law_for(n, bias);
    for (k, p) in law.iter() {
        envelope
            .rows
            .push(vec![k.to_string(), p.to_string(), approx(p)]);
    }
    envelope
}

/// `simulate`: a seeded batch against the exact reference law, with fit
/// metrics. The worker count is deliberately absent from the envelope; it
/// cannot influence any value.
pub fn simulate(config: &SimConfig) -> OutputEnvelope {
    let mut envelope = OutputEnvelope::new("simulate");
    envelope
        .parameters
        .insert("n".into(), config.sites.to_string());
    envelope
        .parameters
        .insert("trials".into(), config.trials.to_string());
    envelope
        .parameters
        .insert("seed".into(), config.master_seed.to_string());
    envelope
        .parameters
        .insert("bias".into(), config.bias.p_right().to_string());

    let summary = montecarlo::run_trials(config);
    let law = law_for(config.sites, &config.bias);
    let exact = law.dense(config.sites as usize);
    let exact_f64: Vec<f64> = exact.iter().map(Rational::to_f64).collect();
    let report = stats::chi_square(summary.counts_by_k(), &exact_f64, config.trials);
    let freqs = summary.frequencies();

    envelope.columns = vec![
        "k".into(),
        "count".into(),
        "freq".into(),
        "p_exact".into(),
        "p_approx".into(),
        "z_score".into(),
    ];
    for k in 0..config.sites as usize {
        envelope.rows.push(vec![
            k.to_string(),
            summary.counts_by_k()[k].to_string(),
            freqs[k].to_string(),
            exact[k].to_string(),
            exact_f64[k].to_string(),
            report.per_cell_z_scores[k].to_string(),
        ]);
    }
    envelope
        .summary
        .insert("mean_tosses".into(), summary.mean_tosses().to_string());
    envelope.summary.insert(
        "variance_tosses".into(),
        summary.variance_tosses().to_string(),
    );
    envelope
        .summary
        .insert("min_tosses".into(), summary.min_tosses().to_string());
    envelope
        .summary
        .insert("max_tosses".into(), summary.max_tosses().to_string());
    envelope
        .summary
        .insert("sse".into(), report.sse.to_string());
    envelope
        .summary
        .insert("chi_square".into(), report.chi_square_statistic.to_string());
    envelope
        .summary
        .insert("dof".into(), report.degrees_of_freedom.to_string());
    envelope.summary.insert(
        "chi_square_threshold".into(),
        report.chi_square_threshold.to_string(),
    );
    envelope.summary.insert(
        "max_abs_deviation".into(),
        report.max_abs_deviation.to_string(),
    );
    envelope
}

/// `runtime`: per-`n` comparison of the cubic closed form against the
/// chain's per-particle construction, with increments. The increment
/// columns are blank below `n = 3`, where the quadratic does not apply.
pub fn runtime(max_n: u64) -> OutputEnvelope {
    let mut envelope = OutputEnvelope::new("runtime");
    envelope
        .parameters
        .insert("max_n".into(), max_n.to_string());
    envelope.columns = vec![
        "n".into(),
        "e_closed".into(),
        "e_closed_approx".into(),
        "e_chain".into(),
        "delta".into(),
        "delta_closed".into(),
        "weighted_sum".into(),
        "agreement".into(),
    ];
    let mut all_agree = true;
    for n in 1..=max_n {
        let report = crate::runtime::runtime_report(n);
        all_agree &= report.agreement;
        envelope.rows.push(vec![
            n.to_string(),
            report.e_closed.to_string(),
            approx(&report.e_closed),
            report.e_chain.to_string(),
            report.delta.to_string(),
            report
                .delta_closed
                .as_ref()
                .map(Rational::to_string)
                .unwrap_or_default(),
            report
                .weighted_sum
                .as_ref()
                .map(Rational::to_string)
                .unwrap_or_default(),
            report.agreement.to_string(),
        ]);
    }
    envelope
        .summary
        .insert("all_agree".into(), all_agree.to_string());
    envelope
}

/// `ntoss`: the exact law of the occupied-site count after `N` tosses for
/// `N = 1..=max_tosses`, with each probability also scaled by `2^(N-1)`
/// (an integer for the fair coin).
pub fn ntoss(max_tosses: u32, bias: &Bias, cap: u32) -> Result<OutputEnvelope, ChainError> {
    let mut envelope = OutputEnvelope::new("ntoss");
    envelope
        .parameters
        .insert("max_tosses".into(), max_tosses.to_string());
    envelope
        .parameters
        .insert("bias".into(), bias.p_right().to_string());
    envelope.parameters.insert("cap".into(), cap.to_string());
    envelope.columns = vec![
        "tosses".into(),
        "sites".into(),
        "p_exact".into(),
        "p_approx".into(),
        "scaled_2pow".into(),
    ];
    for tosses in 1..=max_tosses {
        let law = chain::ntoss_distribution(tosses, bias, cap)?;
        let scale = Rational::from_bigint(BigInt::one() << (tosses - 1));
        for (sites, p) in law.iter() {
            envelope.rows.push(vec![
                tosses.to_string(),
                sites.to_string(),
                p.to_string(),
                approx(p),
                (p * &scale).to_string(),
            ]);
        }
    }
    Ok(envelope)
}

/// `verify`: one row per identity check. The boolean result is returned
/// alongside so the binary can exit nonzero on failure.
pub fn verify(suite: Suite) -> (OutputEnvelope, bool) {
    let mut envelope = OutputEnvelope::new("verify");
    envelope
        .parameters
        .insert("suite".into(), suite.name().to_string());
    envelope.columns = vec!["check".into(), "status".into(), "detail".into()];
    let results = verify::run_suite(suite);
    let mut passed = 0usize;
    for result in &results {
        envelope.rows.push(vec![
            result.name.to_string(),
            if result.passed { "pass" } else { "fail" }.to_string(),
            result.detail.clone(),
        ]);
        passed += usize::from(result.passed);
    }
    envelope
        .summary
        .insert("checks".into(), results.len().to_string());
    envelope.summary.insert("passed".into(), passed.to_string());
    envelope
        .summary
        .insert("failed".into(), (results.len() - passed).to_string());
    let all_passed = passed == results.len();
    (envelope, all_passed)
}

/// Toss cap for `ntoss`: [`chain::DEFAULT_TOSS_CAP`] unless the
/// `IDLA_NTOSS_CAP` environment variable overrides it.
pub fn ntoss_cap() -> Result<u32, String> {
    match env::var(NTOSS_CAP_ENV) {
        Ok(raw) => raw
            .trim()
            .parse::<u32>()
            .map_err(|_| format!("{NTOSS_CAP_ENV} must be an unsigned integer, got '{raw}'")),
        Err(env::VarError::NotPresent) => Ok(chain::DEFAULT_TOSS_CAP),
        Err(e) => Err(format!("cannot read {NTOSS_CAP_ENV}: {e}")),
    }
}
