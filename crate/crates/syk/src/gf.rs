//! Generating functions of chains and of rooted contributions.
//!
//! Chains are counted by their white squares (`z∘`) and colored vertices
//! (`z•`). Each chain function is `z∘^α·z•^β·R(y)` with `y = z∘·z•` and `R`
//! rational, so it is stored as the two shifts and the series of `R`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::SykError;
use crate::series::PowerSeries;

/// The eight kinds of chain-edges. `•` is a colored vertex, `∘` a white
/// square; `ii` means equal colors at both ends, `ij` different ones. The
/// starred kinds exclude the minimal realization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ChainKind {
    /// `••ii`
    ColoredColoredSame,
    /// `••ij`
    ColoredColoredOther,
    /// `∘∘ii`
    WhiteWhiteSame,
    /// `∘∘ij`
    WhiteWhiteOther,
    /// `∘•ii`
    WhiteColoredSame,
    /// `∘•ij`
    WhiteColoredOther,
    /// `∘∘ii*`
    WhiteWhiteSameNonMinimal,
    /// `∘•ii*`
    WhiteColoredSameNonMinimal,
}

impl ChainKind {
    pub const ALL: [ChainKind; 8] = [
        ChainKind::ColoredColoredSame,
        ChainKind::ColoredColoredOther,
        ChainKind::WhiteWhiteSame,
        ChainKind::WhiteWhiteOther,
        ChainKind::WhiteColoredSame,
        ChainKind::WhiteColoredOther,
        ChainKind::WhiteWhiteSameNonMinimal,
        ChainKind::WhiteColoredSameNonMinimal,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            ChainKind::ColoredColoredSame => "••ii",
            ChainKind::ColoredColoredOther => "••ij",
            ChainKind::WhiteWhiteSame => "∘∘ii",
            ChainKind::WhiteWhiteOther => "∘∘ij",
            ChainKind::WhiteColoredSame => "∘•ii",
            ChainKind::WhiteColoredOther => "∘•ij",
            ChainKind::WhiteWhiteSameNonMinimal => "∘∘ii*",
            ChainKind::WhiteColoredSameNonMinimal => "∘•ii*",
        }
    }

    /// ASCII name accepted by [`FromStr`]: `bbii`, `bbij`, `wwii`, `wwij`,
    /// `wbii`, `wbij`, `wwii*`, `wbii*`.
    pub fn ascii(self) -> &'static str {
        match self {
            ChainKind::ColoredColoredSame => "bbii",
            ChainKind::ColoredColoredOther => "bbij",
            ChainKind::WhiteWhiteSame => "wwii",
            ChainKind::WhiteWhiteOther => "wwij",
            ChainKind::WhiteColoredSame => "wbii",
            ChainKind::WhiteColoredOther => "wbij",
            ChainKind::WhiteWhiteSameNonMinimal => "wwii*",
            ChainKind::WhiteColoredSameNonMinimal => "wbii*",
        }
    }

    /// The kind of a chain from its end types (`true` for white) and the
    /// colors of its first and last edges.
    pub fn from_ends(
        first_white: bool,
        last_white: bool,
        first_color: usize,
        last_color: usize,
    ) -> Self {
        let same = first_color == last_color;
        match (first_white, last_white, same) {
            (false, false, true) => ChainKind::ColoredColoredSame,
            (false, false, false) => ChainKind::ColoredColoredOther,
            (true, true, true) => ChainKind::WhiteWhiteSame,
            (true, true, false) => ChainKind::WhiteWhiteOther,
            (_, _, true) => ChainKind::WhiteColoredSame,
            (_, _, false) => ChainKind::WhiteColoredOther,
        }
    }
}

impl fmt::Display for ChainKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for ChainKind {
    type Err = SykError;

    fn from_str(s: &str) -> Result<Self, SykError> {
        ChainKind::ALL
            .into_iter()
            .find(|k| k.ascii() == s || k.symbol() == s)
            .ok_or_else(|| SykError::UnknownSeries(s.to_string()))
    }
}

/// A chain generating function `z∘^α·z•^β·R(y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainGf {
    pub kind: ChainKind,
    pub white_shift: i64,
    pub colored_shift: i64,
    /// Series of `R` in `y`.
    pub y_series: PowerSeries,
}

impl ChainGf {
    /// Coefficient of `z∘^whites·z•^colored`.
    pub fn coefficient(&self, whites: usize, colored: usize) -> BigRational {
        let k = whites as i64 - self.white_shift;
        if k < 0 || k != colored as i64 - self.colored_shift || k as usize > self.y_series.order() {
            return BigRational::zero();
        }
        self.y_series.coefficient(k as usize).clone()
    }

    /// Non-zero terms `(whites, colored, coefficient)` in increasing order.
    pub fn terms(&self) -> Vec<(usize, usize, BigRational)> {
        (0..=self.y_series.order())
            .filter_map(|k| {
                let (w, c) = (k as i64 + self.white_shift, k as i64 + self.colored_shift);
                let coeff = self.y_series.coefficient(k);
                (w >= 0 && c >= 0 && !coeff.is_zero())
                    .then(|| (w as usize, c as usize, coeff.clone()))
            })
            .collect()
    }
}

/// `(D − 1)y² / ((1 + y)(1 − (D − 1)y))`, the series of `z•·G••ii`.
fn same_core(d: i64, n: usize) -> PowerSeries {
    let y = PowerSeries::z(n);
    let den = &(&PowerSeries::one(n) + &y) * &(&PowerSeries::one(n) - &y.scale(d - 1));
    y.pow(2)
        .scale(d - 1)
        .divide(&den)
        .expect("unit denominator")
}

/// `1 / ((1 + y)(1 − (D − 1)y))`, the series of `G••ij / z∘`.
fn other_core(d: i64, n: usize) -> PowerSeries {
    let y = PowerSeries::z(n);
    let den = &(&PowerSeries::one(n) + &y) * &(&PowerSeries::one(n) - &y.scale(d - 1));
    den.inverse().expect("unit denominator")
}

/// The chain generating function of `kind` for `D` colors, to order `y^n`.
pub fn chain_gf(kind: ChainKind, d: usize, n: usize) -> ChainGf {
    let di = d as i64;
    let same = same_core(di, n);
    let other = other_core(di, n);
    let one_plus_same = &PowerSeries::one(n) + &same;
    let (white_shift, colored_shift, y_series) = match kind {
        ChainKind::ColoredColoredSame => (0, -1, same),
        ChainKind::ColoredColoredOther => (1, 0, other),
        ChainKind::WhiteWhiteSame => (0, 1, one_plus_same),
        ChainKind::WhiteWhiteOther => (1, 2, other),
        ChainKind::WhiteColoredSame => (0, 0, one_plus_same),
        ChainKind::WhiteColoredOther => (1, 1, other),
        ChainKind::WhiteWhiteSameNonMinimal => (0, 1, same),
        ChainKind::WhiteColoredSameNonMinimal => (0, 0, same),
    };
    ChainGf {
        kind,
        white_shift,
        colored_shift,
        y_series,
    }
}

/// Named one-variable generating functions in `z`, counting white squares.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CompositeGf {
    /// Rooted stacked trees, `G_T = Σ C_k z^k` with Fuss–Catalan
    /// `C_k = binom(Dk + 1, k)/(Dk + 1)`.
    Tree,
    /// Leading order four-point function with two distinguishable roots.
    FourPointLeading,
    /// Next-to-leading two-point function as printed in closed form.
    TwoPointNextToLeading,
    /// Next-to-leading two-point function with the white and colored
    /// branching terms recounted.
    TwoPointNextToLeadingRecounted,
}

impl CompositeGf {
    pub fn name(self) -> &'static str {
        match self {
            CompositeGf::Tree => "G_T",
            CompositeGf::FourPointLeading => "G4_LO",
            CompositeGf::TwoPointNextToLeading => "G2_NLO",
            CompositeGf::TwoPointNextToLeadingRecounted => "G2_NLO_RECOUNTED",
        }
    }
}

impl FromStr for CompositeGf {
    type Err = SykError;

    fn from_str(s: &str) -> Result<Self, SykError> {
        [
            CompositeGf::Tree,
            CompositeGf::FourPointLeading,
            CompositeGf::TwoPointNextToLeading,
            CompositeGf::TwoPointNextToLeadingRecounted,
        ]
        .into_iter()
        .find(|g| g.name().eq_ignore_ascii_case(s))
        .ok_or_else(|| SykError::UnknownSeries(s.to_string()))
    }
}

fn binomial(n: u64, k: u64) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| {
        acc * BigInt::from(n - i) / BigInt::from(i + 1)
    })
}

/// `G_T` to order `z^n`.
pub fn tree_series(d: usize, n: usize) -> PowerSeries {
    let d = d as u64;
    let coefficients = (0..=n as u64)
        .map(|k| BigRational::new(binomial(d * k + 1, k), BigInt::from(d * k + 1)))
        .collect();
    PowerSeries::new(coefficients, n)
}

/// The pieces shared by the two-point functions: `G_T`, `y = zG_T^D`,
/// `1 + y` and `1 − (D − 1)y`.
struct Ingredients {
    gt: PowerSeries,
    y: PowerSeries,
    one_plus_y: PowerSeries,
    one_minus: PowerSeries,
}

fn ingredients(d: usize, n: usize) -> Ingredients {
    let gt = tree_series(d, n);
    let y = &PowerSeries::z(n) * &gt.pow(d);
    let one = PowerSeries::one(n);
    Ingredients {
        one_plus_y: &one + &y,
        one_minus: &one - &y.scale(d as i64 - 1),
        gt,
        y,
    }
}

/// The three next-to-leading two-point contributions as derived scheme by
/// scheme: the root on the cycle, a white branching vertex and a colored
/// branching vertex.
pub fn two_point_nlo_terms(d: usize, n: usize) -> [PowerSeries; 3] {
    let i = ingredients(d, n);
    let di = d as i64;
    let den1 = &i.one_plus_y * &i.one_minus;
    let den2 = &den1 * &i.one_minus;
    let y2 = i.y.pow(2);
    let t1 = (&i.gt * &y2)
        .scale(di * (di - 1))
        .divide(&den1)
        .expect("unit");
    let t2 = y2
        .scale_by(&BigRational::new(
            BigInt::from(di * (di - 1) * (di - 2)),
            BigInt::from(2),
        ))
        .divide(&den2)
        .expect("unit");
    let t3 = (&i.gt.pow(3) * &i.y.pow(3))
        .scale(di * (di - 1) * (di - 1))
        .divide(&den2)
        .expect("unit");
    [t1, t2, t3]
}

/// Coefficients `z^0..z^n` of a named generating function for `D` colors.
pub fn composite_gf(gf: CompositeGf, d: usize, n: usize) -> PowerSeries {
    let di = d as i64;
    let i = ingredients(d, n);
    match gf {
        CompositeGf::Tree => i.gt,
        CompositeGf::FourPointLeading => (&PowerSeries::z(n) * &i.gt.pow(d + 2))
            .scale(di * (di - 1))
            .divide(&i.one_minus)
            .expect("unit"),
        CompositeGf::TwoPointNextToLeading => {
            // D(D−1)/2 · y²(2G_T + D − 2 + 2yG_T(D − 1)(G_T² − 1)) / ((1 + y)(1 − (D − 1)y)²)
            let one = PowerSeries::one(n);
            let bracket = &(&i.gt.scale(2) + &one.scale(di - 2))
                + &(&(&i.y * &i.gt) * &(&i.gt.pow(2) - &one)).scale(2 * (di - 1));
            let den = &(&i.one_plus_y * &i.one_minus) * &i.one_minus;
            (&i.y.pow(2) * &bracket)
                .scale_by(&BigRational::new(
                    BigInt::from(di * (di - 1)),
                    BigInt::from(2),
                ))
                .divide(&den)
                .expect("unit")
        }
        CompositeGf::TwoPointNextToLeadingRecounted => {
            let [t1, t2, t3] = two_point_nlo_terms(d, n);
            let gt2 = i.gt.pow(2);
            &(&t1 + &(&i.gt * &t2)) + &t3.divide(&gt2).expect("unit")
        }
    }
}
