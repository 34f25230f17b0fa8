//! Scaling coefficients `ã`, `a`, `s` and `Δ` of bubbles.

use std::fmt;

use colgraph_core::{score, ColoredGraph};
use num_rational::Rational64;

use crate::contracted::lm;
use crate::error::PairingError;
use crate::optimal::{optimal_pairings, DEFAULT_CAP};
use crate::pairing::Pairing;

/// How the value of `ã` was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Evidence {
    /// `ã = Φ₀ᵒᵖᵗ − D`, valid if trees are maximal.
    TreesAssumed,
    /// Supremum of `(Φ₀ − D)/b` over all gluings of at most `b_max` copies.
    Enumerated { b_max: usize },
}

impl fmt::Display for Evidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Evidence::TreesAssumed => write!(f, "trees-assumed"),
            Evidence::Enumerated { b_max } => write!(f, "enumerated-to-{b_max}"),
        }
    }
}

/// Scaling coefficients of a bubble, all exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientReport {
    /// Number of colors.
    pub d: usize,
    /// Number of vertices.
    pub vertices: usize,
    /// Score of the bubble.
    pub phi: usize,
    /// Maximal 0-score of a covering.
    pub phi0_opt: usize,
    /// Optimal pairings in lexicographic order (empty for combined reports).
    pub optimal: Vec<Pairing>,
    pub tilde_a: Rational64,
    pub a: Rational64,
    pub s: Rational64,
    pub delta: Rational64,
    pub evidence: Evidence,
    /// Whether trees reach `ã`; `None` when not checked.
    pub trees_maximal: Option<bool>,
}

impl CoefficientReport {
    /// Builds the report from `ã` using the linear relations between the
    /// coefficients.
    #[allow(clippy::too_many_arguments)]
    pub fn from_tilde_a(
        d: usize,
        vertices: usize,
        phi: usize,
        phi0_opt: usize,
        optimal: Vec<Pairing>,
        tilde_a: Rational64,
        evidence: Evidence,
        trees_maximal: Option<bool>,
    ) -> Self {
        let (di, v) = (d as i64, vertices as i64);
        let s = Rational64::from_integer((di - 1) * (v / 2 - 1)) - tilde_a;
        let a = (tilde_a + Rational64::from_integer(phi as i64)) / Rational64::from_integer(v);
        let delta = Rational64::new(di * (di - 1), 4) - a;
        CoefficientReport {
            d,
            vertices,
            phi,
            phi0_opt,
            optimal,
            tilde_a,
            a,
            s,
            delta,
            evidence,
            trees_maximal,
        }
    }

    /// `ã` reached by trees: `Φ₀ᵒᵖᵗ − D`.
    pub fn tree_tilde_a(&self) -> Rational64 {
        Rational64::from_integer(self.phi0_opt as i64 - self.d as i64)
    }

    /// Checks the three linear relations between `ã`, `a`, `s` and `Δ`.
    pub fn relations_hold(&self) -> bool {
        let (d, v) = (self.d as i64, self.vertices as i64);
        self.s == Rational64::from_integer((d - 1) * (v / 2 - 1)) - self.tilde_a
            && self.a * Rational64::from_integer(v)
                == self.tilde_a + Rational64::from_integer(self.phi as i64)
            && self.delta == Rational64::new(d * (d - 1), 4) - self.a
    }
}

/// Coefficients of a bubble assuming trees are maximal. `s` equals `L_m`
/// of the chosen optimal pairing.
pub fn coefficients(b: &ColoredGraph) -> Result<CoefficientReport, PairingError> {
    coefficients_with_cap(b, DEFAULT_CAP)
}

/// [`coefficients`] with an explicit cap on the number of pairs.
pub fn coefficients_with_cap(
    b: &ColoredGraph,
    cap: usize,
) -> Result<CoefficientReport, PairingError> {
    let opt = optimal_pairings(b, cap)?;
    let d = b.dimension();
    let tilde_a = Rational64::from_integer(opt.zero_score as i64 - d as i64);
    let report = CoefficientReport::from_tilde_a(
        d,
        b.vertex_count(),
        score(b),
        opt.zero_score,
        opt.pairings,
        tilde_a,
        Evidence::TreesAssumed,
        None,
    );
    if b.is_connected() {
        debug_assert_eq!(
            report.s,
            Rational64::from_integer(lm(b, &report.optimal[0])? as i64)
        );
    }
    Ok(report)
}

/// Coefficients of a disjoint union of bubbles from the reports of its
/// components: `ã = (k−1)D + Σ ãⱼ`, `s = 1 − k + Σ sⱼ` and
/// `a = ((k−1)D + Σ aⱼVⱼ)/V`.
pub fn coefficients_nonconnected(
    components: &[CoefficientReport],
    d: usize,
) -> Result<CoefficientReport, PairingError> {
    match components {
        [] => Err(PairingError::NoComponents),
        [single] => Ok(single.clone()),
        _ => {
            let k = components.len() as i64;
            let shift = Rational64::from_integer((k - 1) * d as i64);
            let tilde_a = shift + components.iter().map(|r| r.tilde_a).sum::<Rational64>();
            let vertices = components.iter().map(|r| r.vertices).sum();
            let phi = components.iter().map(|r| r.phi).sum();
            let phi0_opt = components.iter().map(|r| r.phi0_opt).sum();
            let trees_maximal = components
                .iter()
                .try_fold(true, |acc, r| r.trees_maximal.map(|t| acc && t));
            let evidence = components
                .iter()
                .filter_map(|r| match r.evidence {
                    Evidence::Enumerated { b_max } => Some(b_max),
                    Evidence::TreesAssumed => None,
                })
                .min()
                .map_or(Evidence::TreesAssumed, |b_max| Evidence::Enumerated {
                    b_max,
                });
            Ok(CoefficientReport::from_tilde_a(
                d,
                vertices,
                phi,
                phi0_opt,
                Vec::new(),
                tilde_a,
                evidence,
                trees_maximal,
            ))
        }
    }
}
