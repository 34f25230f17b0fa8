//! Truncated power series in one variable with exact rational coefficients.

use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Coefficients of `z^0..z^n` for a fixed truncation order `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries {
    coefficients: Vec<BigRational>,
}

impl PowerSeries {
    /// The series with the given leading coefficients, padded with zeros up
    /// to `z^order`.
    pub fn new(mut coefficients: Vec<BigRational>, order: usize) -> Self {
        coefficients.resize(order + 1, BigRational::zero());
        PowerSeries { coefficients }
    }

    pub fn constant(c: BigRational, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(BigRational::one(), order)
    }

    /// The variable `z`.
    pub fn z(order: usize) -> Self {
        Self::new(vec![BigRational::zero(), BigRational::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coefficients
    }

    pub fn coefficient(&self, k: usize) -> &BigRational {
        &self.coefficients[k]
    }

    /// Multiplies by an integer.
    pub fn scale(&self, c: i64) -> Self {
        let c = BigRational::from_integer(BigInt::from(c));
        PowerSeries {
            coefficients: self.coefficients.iter().map(|x| x * &c).collect(),
        }
    }

    /// Multiplies by a rational.
    pub fn scale_by(&self, c: &BigRational) -> Self {
        PowerSeries {
            coefficients: self.coefficients.iter().map(|x| x * c).collect(),
        }
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut out = Self::one(self.order());
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Multiplicative inverse; `None` if the constant term vanishes.
    pub fn inverse(&self) -> Option<Self> {
        let a0 = self.coefficients[0].clone();
        if a0.is_zero() {
            return None;
        }
        let n = self.order();
        let mut r: Vec<BigRational> = vec![BigRational::one() / &a0];
        for k in 1..=n {
            let mut acc = BigRational::zero();
            for j in 1..=k {
                acc += &self.coefficients[j] * &r[k - j];
            }
            r.push(-acc / &a0);
        }
        Some(PowerSeries { coefficients: r })
    }

    /// `self / other`, when `other` has a non-zero constant term.
    pub fn divide(&self, other: &Self) -> Option<Self> {
        other.inverse().map(|inv| self * &inv)
    }

    /// `Σ a_k f^k`: substitutes `f`, which must have no constant term.
    pub fn compose(&self, f: &Self) -> Self {
        assert!(
            f.coefficients[0].is_zero(),
            "substituted series must vanish at 0"
        );
        let mut out = Self::new(Vec::new(), f.order());
        let mut power = Self::one(f.order());
        for a in &self.coefficients {
            out = &out + &power.scale_by(a);
            power = &power * f;
        }
        out
    }

    /// Whether every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coefficients.iter().all(|c| c.is_integer())
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;

    fn add(self, other: &PowerSeries) -> PowerSeries {
        PowerSeries {
            coefficients: self
                .coefficients
                .iter()
                .zip(&other.coefficients)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;

    fn sub(self, other: &PowerSeries) -> PowerSeries {
        PowerSeries {
            coefficients: self
                .coefficients
                .iter()
                .zip(&other.coefficients)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;

    fn mul(self, other: &PowerSeries) -> PowerSeries {
        let n = self.order().min(other.order());
        let mut out = vec![BigRational::zero(); n + 1];
        for (i, a) in self.coefficients.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coefficients.iter().enumerate().take(n + 1 - i) {
                out[i + j] += a * b;
            }
        }
        PowerSeries { coefficients: out }
    }
}
