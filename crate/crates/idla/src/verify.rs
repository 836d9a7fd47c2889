//! One-shot verification suites.
//!
//! Every identity the crate relies on is checked here from at least two
//! independent routes: triangle recurrence against permutation enumeration,
//! lattice dynamic programming against linear solves, closed forms against
//! series expansions, and the walker engine against the macro chain. The
//! CLI surfaces these as `idla verify --suite <name>`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{binomial, factorial, Rational, TruncatedSeries};
use crate::chain::{self, Bias};
use crate::eulerian;
use crate::montecarlo::SplitMix64;
use crate::runtime;

/// Named groups of checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Eulerian,
    Genfun,
    Chain,
    Biased,
}

impl Suite {
    pub fn name(&self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Eulerian => "eulerian",
            Suite::Genfun => "genfun",
            Suite::Chain => "chain",
            Suite::Biased => "biased",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all" => Ok(Suite::All),
            "eulerian" => Ok(Suite::Eulerian),
            "genfun" => Ok(Suite::Genfun),
            "chain" => Ok(Suite::Chain),
            "biased" => Ok(Suite::Biased),
            other => Err(format!(
                "unknown suite '{other}' (expected all, eulerian, genfun, chain or biased)"
            )),
        }
    }
}

/// Outcome of one named check: either a short summary of what was covered
/// or the first counterexample found.
#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &'static str, body: impl FnOnce() -> Result<String, String>) -> CheckResult {
    match body() {
        Ok(detail) => CheckResult {
            name,
            passed: true,
            detail,
        },
        Err(detail) => CheckResult {
            name,
            passed: false,
            detail,
        },
    }
}

/// Runs the requested suite; `all` concatenates the four in a fixed order.
pub fn run_suite(suite: Suite) -> Vec<CheckResult> {
    match suite {
        Suite::All => {
            let mut results = eulerian_suite();
            results.extend(genfun_suite());
            results.extend(chain_suite());
            results.extend(biased_suite());
            results
        }
        Suite::Eulerian => eulerian_suite(),
        Suite::Genfun => genfun_suite(),
        Suite::Chain => chain_suite(),
        Suite::Biased => biased_suite(),
    }
}

fn seeded_rational(rng: &mut SplitMix64, span: u64) -> Rational {
    let numer = (rng.next_u64() % (2 * span + 1)) as i64 - span as i64;
    let denom = (rng.next_u64() % span) as i64 + 1;
    Rational::ratio(numer, denom)
}

fn eulerian_suite() -> Vec<CheckResult> {
    vec![
        check("eulerian recurrence vs enumeration", || {
            for n in 1..=8 {
                let rec = eulerian::eulerian_row(n);
                let brute = eulerian::eulerian_row_brute(n);
                if rec != brute {
                    return Err(format!(
                        "n = {n}: recurrence {:?} != enumeration {:?}",
                        rec.entries(),
                        brute.entries()
                    ));
                }
            }
            Ok("rows agree for n <= 8".into())
        }),
        check("eulerian row symmetry and factorial sums", || {
            for n in 1..=25usize {
                let row = eulerian::eulerian_row(n);
                for k in 0..n {
                    if row.entry(k) != row.entry(n - 1 - k) {
                        return Err(format!("asymmetry at n = {n}; k = {k}"));
                    }
                }
                let total: BigInt = row.entries().iter().sum();
                if total != factorial(n as u64) {
                    return Err(format!("row {n} sums to {total}; expected {n}!"));
                }
            }
            Ok("symmetric with sum n! for n <= 25".into())
        }),
        check("bivariate polynomial reduces to univariate", || {
            let mut rng = SplitMix64::new(0x1d1a_0001);
            for n in 1..=8usize {
                let biv = eulerian::bivariate_polynomial(n);
                let uni = eulerian::univariate_polynomial(n);
                let mut sampled = 0;
                while sampled < 10 {
                    let s = seeded_rational(&mut rng, 9);
                    let t = seeded_rational(&mut rng, 9);
                    if t.is_zero() {
                        continue;
                    }
                    sampled += 1;
                    let lhs = biv.eval(&s, &t);
                    let rhs = t.pow(n as i32 + 1) * uni.eval(&(&s / &t));
                    if lhs != rhs {
                        return Err(format!("n = {n}; s = {s}; t = {t}: {lhs} != {rhs}"));
                    }
                }
            }
            Ok("A_n(s;t) = t^(n+1) A_n(s/t) at 10 sampled points per n <= 8".into())
        }),
        check("q-row sums equal q-factorials", || {
            let rhos = [
                Rational::one(),
                Rational::integer(2),
                Rational::ratio(1, 2),
                Rational::ratio(3, 5),
            ];
            for n in 1..=7usize {
                let row = eulerian::q_eulerian_row(n);
                for rho in &rhos {
                    let total: Rational = row.evaluate(rho).into_iter().sum();
                    let expected = eulerian::q_factorial(n as u64, rho);
                    if total != expected {
                        return Err(format!("n = {n}; rho = {rho}: {total} != {expected}"));
                    }
                }
            }
            Ok("row sums match [n]! for n <= 7 at four values of rho".into())
        }),
    ]
}

fn genfun_suite() -> Vec<CheckResult> {
    vec![
        check("series ring laws on random truncations", || {
            let mut rng = SplitMix64::new(0x1d1a_0002);
            let mut series = |order: usize| {
                let coeffs = (0..=order).map(|_| seeded_rational(&mut rng, 6)).collect();
                TruncatedSeries::from_coeffs(coeffs)
            };
            for round in 0..20 {
                let f = series(16);
                let g = series(16);
                let h = series(16);
                if f.mul(&g).mul(&h) != f.mul(&g.mul(&h)) {
                    return Err(format!("associativity failed on round {round}"));
                }
                let mut coeffs = f.coeffs().to_vec();
                coeffs[0] = Rational::one();
                let unit = TruncatedSeries::from_coeffs(coeffs);
                let inv = TruncatedSeries::one(16).checked_div(&unit).unwrap();
                if unit.mul(&inv) != TruncatedSeries::one(16) {
                    return Err(format!("inverse failed on round {round}"));
                }
            }
            Ok("associativity and inverses on 20 random order-16 series".into())
        }),
        check("exponential series of opposite rates cancel", || {
            let rates = [
                Rational::one(),
                Rational::integer(-2),
                Rational::ratio(1, 2),
                Rational::ratio(-3, 5),
                Rational::integer(7),
            ];
            for a in &rates {
                let product =
                    TruncatedSeries::exp_linear(a, 16).mul(&TruncatedSeries::exp_linear(&(-a), 16));
                if product != TruncatedSeries::one(16) {
                    return Err(format!("rate {a}"));
                }
            }
            Ok("exp(az) exp(-az) = 1 at order 16 for five rates".into())
        }),
        check("binomial rows sum to powers of two", || {
            for n in 0..=30u64 {
                let total: BigInt = (0..=n).map(|k| binomial(n, k)).sum();
                if total != BigInt::one() << n {
                    return Err(format!("row {n} sums to {total}"));
                }
            }
            Ok("rows 0..=30".into())
        }),
        check("Eulerian EGF expansion at rational points", || {
            let xs = [
                Rational::zero(),
                Rational::integer(2),
                Rational::ratio(1, 2),
                Rational::integer(-1),
                Rational::ratio(3, 4),
            ];
            for x in &xs {
                if !runtime::univariate_egf_check(x, 10) {
                    return Err(format!("x = {x}"));
                }
            }
            Ok("G(x;z) matches A_n(x)/n! to order 10 at five points".into())
        }),
        check("increment generating function expansion", || {
            if !runtime::delta_series_check(30) {
                return Err("order-30 expansion check failed".into());
            }
            let series = runtime::delta_series(5);
            let expected = [
                (1usize, Rational::one()),
                (2, Rational::integer(2)),
                (3, Rational::ratio(11, 3)),
                (5, Rational::ratio(17, 2)),
            ];
            for (power, value) in expected {
                if series.coeff(power) != &value {
                    return Err(format!("z^{power}: {} != {value}", series.coeff(power)));
                }
            }
            Ok("expansion matches the quadratic; the binomial split; and the displayed low-order terms to order 30".into())
        }),
        check("closed-form first differences", || {
            for n in 2..=100u64 {
                if runtime::closed_form_e(n) - runtime::closed_form_e(n - 1)
                    != runtime::closed_form_delta_e(n)
                {
                    return Err(format!("n = {n}"));
                }
            }
            Ok("E_n - E_(n-1) = dE_n for n <= 100".into())
        }),
        check("weighted escape-time sum equals quadratic", || {
            for n in 3..=25u64 {
                let sum = runtime::weighted_escape_sum(n);
                let quad = runtime::closed_form_delta_e(n);
                if sum != quad {
                    return Err(format!("n = {n}: {sum} != {quad}"));
                }
            }
            Ok("triangle-weighted sums match n^2/4 - n/12 for 3 <= n <= 25".into())
        }),
        check("mixed-partial route agrees", || {
            if runtime::mixed_partial_weighted_sum(6) != Rational::integer(1020) {
                return Err("n = 6 mixed partial is not 1020".into());
            }
            for n in 3..=12u64 {
                let via_partial = runtime::mixed_partial_weighted_sum(n);
                let via_sum =
                    runtime::weighted_escape_sum(n) * Rational::from_bigint(factorial(n - 1));
                if via_partial != via_sum {
                    return Err(format!("n = {n}: {via_partial} != {via_sum}"));
                }
            }
            Ok("bivariate mixed partials match weighted sums for 3 <= n <= 12".into())
        }),
        check("chain toss construction matches cubic", || {
            if !chain::expected_total_tosses(1).is_zero() {
                return Err("one occupied site must cost zero tosses".into());
            }
            for n in 2..=30u64 {
                let built = chain::expected_total_tosses(n);
                let closed = runtime::closed_form_e(n);
                if built != closed {
                    return Err(format!("n = {n}: {built} != {closed}"));
                }
            }
            Ok(
                "per-particle sums equal (n^3+n^2)/12 for 2 <= n <= 30; n = 1 \
                is the documented boundary (game value 0, cubic value 1/6)"
                    .into(),
            )
        }),
    ]
}

fn chain_suite() -> Vec<CheckResult> {
    vec![
        check("state law is the Eulerian distribution", || {
            for n in 1..=12u64 {
                let law = chain::exact_distribution(n);
                let row = eulerian::eulerian_row(n as usize);
                let scale = Rational::from_bigint(factorial(n));
                for k in 0..n {
                    let lhs = law.prob(k) * &scale;
                    let rhs = Rational::from_bigint(row.entry(k as usize).clone());
                    if lhs != rhs {
                        return Err(format!("n = {n}; k = {k}: {lhs} != {rhs}"));
                    }
                }
            }
            Ok("P(n;k) n! equals the triangle entries for n <= 12".into())
        }),
        check("distributions sum to one exactly", || {
            for n in 1..=12u64 {
                if !chain::exact_distribution(n).total().is_one() {
                    return Err(format!("state law at n = {n}"));
                }
            }
            for tosses in 0..=10u32 {
                let law = chain::ntoss_distribution(tosses, &Bias::fair(), chain::DEFAULT_TOSS_CAP)
                    .unwrap();
                if !law.total().is_one() {
                    return Err(format!("toss law at N = {tosses}"));
                }
            }
            Ok("state laws n <= 12 and toss laws N <= 10".into())
        }),
        check("escape times are distance products", || {
            for (a, b, expected) in [
                (1u64, 5u64, 5i64),
                (2, 4, 8),
                (3, 3, 9),
                (4, 2, 8),
                (5, 1, 5),
            ] {
                if chain::escape_time(a, b) != Rational::integer(expected) {
                    return Err(format!("chart entry ({a}; {b})"));
                }
            }
            for a in 1..=12u64 {
                for b in 1..=12u64 {
                    if chain::escape_time(a, b) != Rational::integer((a * b) as i64) {
                        return Err(format!("({a}; {b})"));
                    }
                }
            }
            Ok("escape_time(a;b) = ab on the 12x12 grid and the five-site chart".into())
        }),
        check("fair ruin probabilities match closed form", || {
            for k in 1..=12u64 {
                for l in 1..=12u64 {
                    let solved = chain::gambler_win_prob(k, l, &Bias::fair());
                    let closed = Rational::ratio(k as i64, (k + l) as i64);
                    if solved != closed {
                        return Err(format!("k = {k}; l = {l}: {solved} != {closed}"));
                    }
                }
            }
            Ok("linear solves equal k/(k+l) on the 12x12 grid".into())
        }),
        check("toss-count array rows", || {
            let rows: [&[i64]; 7] = [
                &[1],
                &[1, 1],
                &[1, 3],
                &[1, 4, 3],
                &[1, 9, 6],
                &[1, 10, 18, 3],
                &[1, 21, 32, 10],
            ];
            for (i, expected) in rows.iter().enumerate() {
                let tosses = i as u32 + 1;
                let law = chain::ntoss_distribution(tosses, &Bias::fair(), chain::DEFAULT_TOSS_CAP)
                    .unwrap();
                let scale = Rational::from_bigint(BigInt::one() << (tosses - 1));
                for (j, &value) in expected.iter().enumerate() {
                    let sites = j as u64 + 2;
                    let scaled = law.prob(sites) * &scale;
                    if scaled != Rational::integer(value) {
                        return Err(format!(
                            "N = {tosses}; n = {sites}: scaled value {scaled}; expected {value}"
                        ));
                    }
                }
                if law.min_label() != Some(2) || law.max_label() != Some(expected.len() as u64 + 1)
                {
                    return Err(format!("N = {tosses}: unexpected support"));
                }
            }
            Ok("scaled rows for N <= 7 match 1 / 1 1 / 1 3 / 1 4 3 / 1 9 6 / 1 10 18 3 / 1 21 32 10"
                .into())
        }),
        check("toss-law denominators divide 2^(N-1)", || {
            for tosses in 1..=12u32 {
                let law = chain::ntoss_distribution(tosses, &Bias::fair(), chain::DEFAULT_TOSS_CAP)
                    .unwrap();
                let scale = BigInt::one() << (tosses - 1);
                for (sites, p) in law.iter() {
                    if (&scale % p.denom()) != BigInt::zero() {
                        return Err(format!(
                            "N = {tosses}; n = {sites}: denominator {}",
                            p.denom()
                        ));
                    }
                }
            }
            Ok("all denominators divide 2^(N-1) for N <= 12".into())
        }),
        check("first toss count reaching n sites", || {
            for sites in 2..=8u64 {
                let expected = sites.div_ceil(2) * (sites / 2);
                let mut first = None;
                for tosses in 0..=16u32 {
                    let law = chain::ntoss_distribution(tosses, &Bias::fair(), 16).unwrap();
                    if !law.prob(sites).is_zero() {
                        first = Some(tosses as u64);
                        break;
                    }
                }
                if first != Some(expected) {
                    return Err(format!(
                        "n = {sites}: first positive mass at {first:?}; expected {expected}"
                    ));
                }
            }
            Ok("first nonzero mass appears at ceil(n/2) floor(n/2) for n <= 8".into())
        }),
        check("walker first-hit law matches the macro chain", || {
            for n in 2..=6u64 {
                let expected = chain::exact_distribution(n);
                for budget in [0u32, 4, 9] {
                    let got = chain::first_hit_distribution(n, budget, &Bias::fair());
                    if got != expected {
                        return Err(format!("n = {n}; budget = {budget}"));
                    }
                }
            }
            let bias = Bias::new(Rational::ratio(2, 3)).unwrap();
            for n in 2..=5u64 {
                let expected = chain::exact_distribution_biased(n, &bias);
                if chain::first_hit_distribution(n, 6, &bias) != expected {
                    return Err(format!("biased n = {n}"));
                }
            }
            Ok(
                "settlement accumulation plus analytic completion reproduces the \
                state law for n <= 6 at several toss budgets"
                    .into(),
            )
        }),
    ]
}

fn biased_suite() -> Vec<CheckResult> {
    vec![
        check("biased law specializes to fair", || {
            for n in 1..=10u64 {
                if chain::exact_distribution_biased(n, &Bias::fair())
                    != chain::exact_distribution(n)
                {
                    return Err(format!("n = {n}"));
                }
            }
            Ok("solved transitions reproduce the fair law for n <= 10".into())
        }),
        check("odds-ratio orientation of the q-analog", || {
            let biases = [
                Rational::ratio(1, 2),
                Rational::ratio(2, 3),
                Rational::ratio(1, 4),
            ];
            for p_right in &biases {
                let bias = Bias::new(p_right.clone()).unwrap();
                let rho = bias.rho();
                let mirror = rho.recip();
                for n in 2..=7u64 {
                    let law = chain::exact_distribution_biased(n, &bias);
                    let row = eulerian::q_eulerian_row(n as usize);
                    let denom = eulerian::q_factorial(n, &rho);
                    for (k, entry) in row.entries().iter().enumerate() {
                        let expected = entry.eval(&rho) / &denom;
                        if law.prob(k as u64) != expected {
                            return Err(format!(
                                "rho = p_right/p_left failed at p = {p_right}; n = {n}; k = {k}"
                            ));
                        }
                    }
                    // The reciprocal orientation must fail whenever the coin
                    // is actually biased.
                    if *p_right != Rational::ratio(1, 2) {
                        let mirror_denom = eulerian::q_factorial(n, &mirror);
                        let mirror_matches = row.entries().iter().enumerate().all(|(k, entry)| {
                            law.prob(k as u64) == entry.eval(&mirror) / &mirror_denom
                        });
                        if mirror_matches {
                            return Err(format!("orientation ambiguous at p = {p_right}; n = {n}"));
                        }
                    }
                }
            }
            Ok(
                "P(n;k) = qE(n;k)(rho) / [n]! with rho = p_right/p_left and k \
                counting right-of-origin sites; checked for n <= 7 at p in {1/2; 2/3; 1/4}; \
                the reciprocal orientation fails for every biased p"
                    .into(),
            )
        }),
    ]
}
