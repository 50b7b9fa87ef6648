//! Truncated Laurent series in the chart parameter `t = (γ¹)^{-1/2}`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::algebra::{ratio, GenVar, PolyExpr, Scalar, Symbol};

/// `Σ_m a_m t^m` known modulo `t^precision`.
///
/// The derivation acts on coefficients and on `t` through
/// `∂(t^m) = −(m/2) t^{m+2} ∂γ¹`, which is exact because `∂t = −½ t³ ∂γ¹`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChartSeries {
    precision: i32,
    coeffs: BTreeMap<i32, PolyExpr>,
}

impl ChartSeries {
    pub fn zero(precision: i32) -> Self {
        ChartSeries {
            precision,
            coeffs: BTreeMap::new(),
        }
    }

    /// `coeff · t^m`.
    pub fn monomial(m: i32, coeff: PolyExpr, precision: i32) -> Self {
        let mut s = ChartSeries::zero(precision);
        s.add_at(m, &coeff);
        s
    }

    pub fn precision(&self) -> i32 {
        self.precision
    }

    pub fn coefficient(&self, m: i32) -> PolyExpr {
        self.coeffs.get(&m).cloned().unwrap_or_default()
    }

    /// Nonzero coefficients in increasing order of the exponent.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &PolyExpr)> {
        self.coeffs.iter().map(|(m, c)| (*m, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Smallest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<i32> {
        self.coeffs.keys().next().copied()
    }

    /// Whether every exponent present is odd (`true`) or even (`false`).
    pub fn has_parity(&self, odd: bool) -> bool {
        self.coeffs.keys().all(|m| (m.rem_euclid(2) == 1) == odd)
    }

    pub fn truncate(&self, precision: i32) -> Self {
        let precision = precision.min(self.precision);
        ChartSeries {
            precision,
            coeffs: self
                .coeffs
                .range(..precision)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    fn add_at(&mut self, m: i32, c: &PolyExpr) {
        if m >= self.precision || c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(m).or_default();
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&m);
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = ChartSeries::zero(self.precision);
        for (m, a) in &self.coeffs {
            out.add_at(*m, &a.scale(c));
        }
        out
    }

    /// Multiplies every coefficient by `p` on the left.
    pub fn mul_poly(&self, p: &PolyExpr) -> Self {
        let mut out = ChartSeries::zero(self.precision);
        for (m, a) in &self.coeffs {
            out.add_at(*m, &(p * a));
        }
        out
    }

    pub fn derivative(&self) -> Self {
        let dg1 = PolyExpr::var(GenVar::new(Symbol::Gamma, 1, 1));
        let mut out = ChartSeries::zero(self.precision);
        for (m, a) in &self.coeffs {
            out.add_at(*m, &a.apply_partial());
            if *m != 0 {
                out.add_at(m + 2, &(a * &dg1).scale(&ratio(-(*m as i64), 2)));
            }
        }
        out
    }

    pub fn derivative_n(&self, n: u32) -> Self {
        (0..n).fold(self.clone(), |acc, _| acc.derivative())
    }
}

impl Add for &ChartSeries {
    type Output = ChartSeries;
    fn add(self, rhs: &ChartSeries) -> ChartSeries {
        let mut out = self.truncate(rhs.precision);
        for (m, c) in &rhs.coeffs {
            out.add_at(*m, c);
        }
        out
    }
}

impl Neg for &ChartSeries {
    type Output = ChartSeries;
    fn neg(self) -> ChartSeries {
        self.scale(&-Scalar::from_integer(1.into()))
    }
}

impl Sub for &ChartSeries {
    type Output = ChartSeries;
    fn sub(self, rhs: &ChartSeries) -> ChartSeries {
        self + &-rhs
    }
}

impl Mul for &ChartSeries {
    type Output = ChartSeries;
    /// The product is known below `min(K_a + v_b, K_b + v_a)`.
    fn mul(self, rhs: &ChartSeries) -> ChartSeries {
        let precision = match (self.valuation(), rhs.valuation()) {
            (Some(va), Some(vb)) => (self.precision + vb).min(rhs.precision + va),
            (None, Some(vb)) => self.precision + vb,
            (Some(va), None) => rhs.precision + va,
            (None, None) => self.precision.min(rhs.precision),
        };
        let mut out = ChartSeries::zero(precision);
        for (ma, a) in &self.coeffs {
            for (mb, b) in &rhs.coeffs {
                out.add_at(ma + mb, &(a * b));
            }
        }
        out
    }
}

impl fmt::Display for ChartSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (m, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c}) t^{m}")?;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(t^{})", self.precision)
    }
}

/// Coefficient-wise comparison below `precision`.
pub fn agree_below(a: &ChartSeries, b: &ChartSeries, precision: i32) -> bool {
    let d = &a.truncate(precision) - &b.truncate(precision);
    d.is_zero() && d.precision() >= precision
}
