use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use super::Rational;

/// Dense univariate polynomial over [`Rational`], stored low degree first
/// with no trailing zero coefficient. The zero polynomial has an empty
/// coefficient list and no degree.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `coeff * x^exponent`
    pub fn monomial(coeff: Rational, exponent: usize) -> Self {
        if coeff.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); exponent + 1];
        coeffs[exponent] = coeff;
        Polynomial { coeffs }
    }

    /// Builds from coefficients indexed by exponent, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, exponent: usize) -> Rational {
        self.coeffs
            .get(exponent)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c * factor).collect())
    }

    /// Renders with an explicit variable name, low degree first.
    pub fn format_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (exp, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mag = c.abs();
            let coeff_part = if mag.is_one() && exp > 0 {
                String::new()
            } else {
                mag.to_string()
            };
            let var_part = match exp {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{exp}"),
            };
            match (coeff_part.is_empty(), var_part.is_empty()) {
                (true, _) => out.push_str(&var_part),
                (false, true) => out.push_str(&coeff_part),
                (false, false) => {
                    out.push_str(&coeff_part);
                    out.push('*');
                    out.push_str(&var_part);
                }
            }
        }
        out
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Polynomial::from_coeffs(coeffs)
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + a * b;
            }
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_with("x"))
    }
}

/// Sparse polynomial in two variables `s` and `t`: a map from exponent pairs
/// to nonzero coefficients, iterated in lexicographic exponent order.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BivariatePolynomial {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BivariatePolynomial {
    pub fn new() -> Self {
        Self::default()
    }

    /// Accumulates `coeff * s^s_exp * t^t_exp`; zero results are dropped.
    pub fn add_term(&mut self, s_exp: u32, t_exp: u32, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let key = (s_exp, t_exp);
        let updated = match self.terms.remove(&key) {
            Some(existing) => existing + coeff,
            None => coeff,
        };
        if !updated.is_zero() {
            self.terms.insert(key, updated);
        }
    }

    pub fn coeff(&self, s_exp: u32, t_exp: u32) -> Rational {
        self.terms
            .get(&(s_exp, t_exp))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &Rational)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn eval(&self, s: &Rational, t: &Rational) -> Rational {
        self.terms
            .iter()
            .map(|(&(es, et), c)| c * s.pow(es as i32) * t.pow(et as i32))
            .sum()
    }

    /// d²/ds dt evaluated at s = t = 1: the sum of `coeff * s_exp * t_exp`
    /// over all terms.
    pub fn mixed_partial_at_one(&self) -> Rational {
        self.terms
            .iter()
            .map(|(&(es, et), c)| c * Rational::integer(es as i64) * Rational::integer(et as i64))
            .sum()
    }
}

impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(es, et), c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if !c.is_one() {
                write!(f, "{c}*")?;
            }
            match es {
                0 => {}
                1 => write!(f, "s")?,
                _ => write!(f, "s^{es}")?,
            }
            if es > 0 && et > 0 {
                write!(f, "*")?;
            }
            match et {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{et}")?,
            }
        }
        Ok(())
    }
}
