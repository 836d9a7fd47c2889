use std::fmt;

use super::Rational;

/// Formal power series in one variable, truncated at a fixed order: the
/// coefficient list always has length `order + 1`.
///
/// Binary operations truncate to the smaller order of the two operands
/// rather than inventing coefficients beyond what either side knows.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    pub fn constant(value: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = value;
        s
    }

    /// Order is `coeffs.len() - 1`; the list may not be empty.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "series needs at least the constant term"
        );
        TruncatedSeries { coeffs }
    }

    /// Expansion of `exp(rate * z)`: coefficient of `z^n` is `rate^n / n!`.
    pub fn exp_linear(rate: &Rational, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        coeffs.push(Rational::one());
        for n in 1..=order {
            let prev = &coeffs[n - 1];
            coeffs.push(prev * rate / Rational::integer(n as i64));
        }
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `z^power`. Panics beyond the truncation order: the
    /// series genuinely does not know those values.
    pub fn coeff(&self, power: usize) -> &Rational {
        &self.coeffs[power]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|i| &self.coeffs[i] + &rhs.coeffs[i])
            .collect();
        TruncatedSeries { coeffs }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|i| &self.coeffs[i] - &rhs.coeffs[i])
            .collect();
        TruncatedSeries { coeffs }
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![Rational::zero(); order + 1];
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(order - i) {
                if rhs.coeffs[j].is_zero() {
                    continue;
                }
                coeffs[i + j] = &coeffs[i + j] + &self.coeffs[i] * &rhs.coeffs[j];
            }
        }
        TruncatedSeries { coeffs }
    }

    /// Division in the truncated series ring; `None` when the divisor has a
    /// zero constant term and so is not invertible.
    pub fn checked_div(&self, den: &Self) -> Option<Self> {
        if den.coeffs[0].is_zero() {
            return None;
        }
        let order = self.order().min(den.order());
        let inv0 = den.coeffs[0].recip();
        let mut coeffs = vec![Rational::zero(); order + 1];
        for n in 0..=order {
            let mut acc = self.coeffs[n].clone();
            for j in 1..=n {
                acc = acc - &den.coeffs[j] * &coeffs[n - j];
            }
            coeffs[n] = acc * &inv0;
        }
        Some(TruncatedSeries { coeffs })
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "] + O(z^{})", self.order() + 1)
    }
}
