//! Generating functions of the form `G = 1 + Σ c·z^m·G^p`, solved exactly.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::EnumError;

/// One term `c·z^m·G^p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesTerm {
    pub coefficient: BigInt,
    pub z_power: usize,
    pub g_power: usize,
}

/// The equation `G = 1 + Σ terms`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesSpec {
    pub terms: Vec<SeriesTerm>,
}

impl SeriesSpec {
    /// Checks that every term carries a positive power of `z`.
    pub fn new(terms: Vec<SeriesTerm>) -> Result<Self, EnumError> {
        if let Some(t) = terms.iter().find(|t| t.z_power == 0) {
            return Err(EnumError::InconsistentSeries(format!(
                "term {t} has no power of z"
            )));
        }
        Ok(SeriesSpec { terms })
    }

    /// `G = 1 + c·z·G^p`.
    pub fn single(coefficient: i64, g_power: usize) -> Self {
        SeriesSpec {
            terms: vec![SeriesTerm {
                coefficient: BigInt::from(coefficient),
                z_power: 1,
                g_power,
            }],
        }
    }

    /// `F(z, G) = 1 + Σ c·z^m·G^p − G` at rational arguments.
    pub fn residual(&self, z: &BigRational, g: &BigRational) -> BigRational {
        let mut f = BigRational::one() - g;
        for t in &self.terms {
            f += BigRational::from_integer(t.coefficient.clone())
                * pow(z, t.z_power)
                * pow(g, t.g_power);
        }
        f
    }

    /// `∂F/∂G` at rational arguments.
    pub fn residual_dg(&self, z: &BigRational, g: &BigRational) -> BigRational {
        let mut f = -BigRational::one();
        for t in self.terms.iter().filter(|t| t.g_power > 0) {
            f += BigRational::from_integer(t.coefficient.clone() * BigInt::from(t.g_power))
                * pow(z, t.z_power)
                * pow(g, t.g_power - 1);
        }
        f
    }
}

fn pow(x: &BigRational, k: usize) -> BigRational {
    num_traits::pow(x.clone(), k)
}

impl fmt::Display for SeriesTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.coefficient.is_one() {
            write!(f, "{}", self.coefficient)?;
        }
        match self.z_power {
            0 => {}
            1 => write!(f, "z")?,
            m => write!(f, "z^{m}")?,
        }
        match self.g_power {
            0 => Ok(()),
            1 => write!(f, "G"),
            p => write!(f, "G^{p}"),
        }
    }
}

impl fmt::Display for SeriesSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "1")?;
        for t in &self.terms {
            write!(f, "+{t}")?;
        }
        Ok(())
    }
}

/// Parses a power like `^4`, defaulting to 1.
fn power(s: &str) -> Result<(usize, &str), EnumError> {
    let Some(rest) = s.strip_prefix('^') else {
        return Ok((1, s));
    };
    let end = rest
        .find(|c: char| !c.is_ascii_digit())
        .unwrap_or(rest.len());
    let p = rest[..end]
        .parse()
        .map_err(|_| EnumError::ParseSeries(format!("bad exponent in {s:?}")))?;
    Ok((p, &rest[end..]))
}

impl FromStr for SeriesTerm {
    type Err = EnumError;

    fn from_str(s: &str) -> Result<Self, EnumError> {
        let s = s.trim();
        let end = s.find(|c: char| !c.is_ascii_digit()).unwrap_or(s.len());
        let coefficient = if end == 0 {
            BigInt::one()
        } else {
            s[..end]
                .parse()
                .map_err(|_| EnumError::ParseSeries(format!("bad coefficient in {s:?}")))?
        };
        let mut rest = s[end..].trim_start_matches('*');
        let mut z_power = 0;
        let mut g_power = 0;
        if let Some(r) = rest.strip_prefix('z') {
            (z_power, rest) = power(r)?;
            rest = rest.trim_start_matches('*');
        }
        if let Some(r) = rest.strip_prefix('G') {
            (g_power, rest) = power(r)?;
        }
        if !rest.is_empty() {
            return Err(EnumError::ParseSeries(format!(
                "unexpected {rest:?} in {s:?}"
            )));
        }
        Ok(SeriesTerm {
            coefficient,
            z_power,
            g_power,
        })
    }
}

impl FromStr for SeriesSpec {
    type Err = EnumError;

    /// Parses the right-hand side, e.g. `1+3zG^4` or `1+3zG^3+3z^2G^6`.
    fn from_str(s: &str) -> Result<Self, EnumError> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let compact = compact.strip_prefix("G=").unwrap_or(&compact);
        let mut parts = compact.split('+');
        if parts.next() != Some("1") {
            return Err(EnumError::ParseSeries(format!("{s:?} must start with 1")));
        }
        let terms = parts
            .map(str::parse)
            .collect::<Result<Vec<SeriesTerm>, _>>()?;
        SeriesSpec::new(terms)
    }
}

/// The first `n + 1` coefficients of the power-series solution with
/// `G(0) = 1`. Powers of `G` follow the recurrence
/// `k·H_k = Σ_{j=1..k} ((p + 1)j − k)·g_j·H_{k−j}` for `H = G^p`.
pub fn series_solve(spec: &SeriesSpec, n: usize) -> Vec<BigInt> {
    let mut g = vec![BigInt::one()];
    let mut powers: Vec<Vec<BigInt>> = spec.terms.iter().map(|_| vec![BigInt::one()]).collect();
    for k in 1..=n {
        // extend each power up to the index needed for g_k
        for (t, h) in spec.terms.iter().zip(powers.iter_mut()) {
            if k < t.z_power {
                continue;
            }
            while h.len() <= k - t.z_power {
                let i = h.len();
                let p = BigInt::from(t.g_power);
                let mut acc = BigInt::zero();
                for j in 1..=i {
                    let w = (&p + 1u32) * BigInt::from(j) - BigInt::from(i);
                    acc += w * &g[j] * &h[i - j];
                }
                h.push(acc / BigInt::from(i));
            }
        }
        let mut gk = BigInt::zero();
        for (t, h) in spec.terms.iter().zip(&powers) {
            if k >= t.z_power {
                gk += &t.coefficient * &h[k - t.z_power];
            }
        }
        g.push(gk);
    }
    g
}

/// The dominant singularity `(z_c, G_c)` where `F = 0` and `∂F/∂G = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularPoint {
    pub z: BigRational,
    pub g: BigRational,
}

/// Closed form for `G = 1 + c·z·G^p` with `p ≥ 2`: `G_c = p/(p − 1)` and
/// `z_c = 1/(c·p·G_c^{p−1})`. Other shapes return `None`.
pub fn singular_point(spec: &SeriesSpec) -> Option<SingularPoint> {
    let [t] = spec.terms.as_slice() else {
        return None;
    };
    if t.z_power != 1 || t.g_power < 2 || t.coefficient <= BigInt::zero() {
        return None;
    }
    let p = BigInt::from(t.g_power);
    let g = BigRational::new(p.clone(), &p - 1u32);
    let z = BigRational::one()
        / (BigRational::from_integer(&t.coefficient * &p) * pow(&g, t.g_power - 1));
    Some(SingularPoint { z, g })
}

/// Exact check that both `F` and `∂F/∂G` vanish at the point.
pub fn verify_singular_point(spec: &SeriesSpec, point: &SingularPoint) -> bool {
    spec.residual(&point.z, &point.g).is_zero() && spec.residual_dg(&point.z, &point.g).is_zero()
}

/// Checks that the truncated series satisfies its equation up to `z^n`.
pub fn satisfies_equation(spec: &SeriesSpec, coefficients: &[BigInt]) -> bool {
    let n = coefficients.len();
    if n == 0 {
        return true;
    }
    let mul = |a: &[BigInt], b: &[BigInt]| -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); n];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate().take(n - i) {
                out[i + j] += x * y;
            }
        }
        out
    };
    let mut rhs = vec![BigInt::zero(); n];
    rhs[0] = BigInt::one();
    for t in &spec.terms {
        let mut h = vec![BigInt::zero(); n];
        h[0] = BigInt::one();
        for _ in 0..t.g_power {
            h = mul(&h, coefficients);
        }
        for k in t.z_power..n {
            rhs[k] += &t.coefficient * &h[k - t.z_power];
        }
    }
    rhs == coefficients
}
