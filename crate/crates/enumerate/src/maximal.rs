//! Maximal 0-scores of gluings, empirical scaling exponents and linear
//! bound certificates.

use colgraph_core::{score, zero_score, ColoredGraph};
use colgraph_pairings::{
    optimal_pairings, CoefficientReport, Evidence, Layout, OptimalPairings, DEFAULT_CAP,
};
use colgraph_stacked::psi;
use itertools::Itertools;
use num_rational::Rational64;

use crate::error::EnumError;
use crate::gluing::{dedup_canonical, fold_matchings, Gluing, GluingSpec, Placement};

/// Gluings of `b` bubbles reaching the largest `Φ₀`.
#[derive(Debug, Clone)]
pub struct MaximalLevel {
    pub b: usize,
    pub phi0_max: usize,
    /// Labeled connected matchings reaching the maximum.
    pub labeled: u64,
    /// One witness per isomorphism class.
    pub witnesses: Vec<Gluing>,
}

/// Maximal `Φ₀` per level of connected gluings.
#[derive(Debug, Clone)]
pub struct MaximalSet {
    pub d: usize,
    pub levels: Vec<MaximalLevel>,
}

/// Best score of one multiset, with every labeled matching reaching it.
fn level_of(place: &Placement) -> (usize, Vec<Vec<usize>>) {
    fold_matchings(
        place.n(),
        false,
        || (0usize, Vec::new()),
        |acc: &mut (usize, Vec<Vec<usize>>), sigma| {
            if !place.connected(sigma) {
                return;
            }
            let s = place.zero_score(sigma);
            if s > acc.0 || acc.1.is_empty() {
                *acc = (s, vec![sigma.to_vec()]);
            } else if s == acc.0 {
                acc.1.push(sigma.to_vec());
            }
        },
        |a, b| match (a.1.is_empty(), b.1.is_empty()) {
            (true, _) => b,
            (_, true) => a,
            _ if a.0 > b.0 => a,
            _ if b.0 > a.0 => b,
            _ => (a.0, a.1.into_iter().chain(b.1).collect()),
        },
    )
}

/// Connected gluings of `1..=b_max` bubbles with maximal `Φ₀`.
pub fn maximal_set(spec: &GluingSpec) -> Result<MaximalSet, EnumError> {
    spec.check_cap()?;
    let mut levels = Vec::new();
    for b in 1..=spec.b_max {
        let mut best = 0;
        let mut found: Vec<Gluing> = Vec::new();
        for copies in spec.multisets(b) {
            let place = spec.placement(&copies)?;
            let (s, sigmas) = level_of(&place);
            if sigmas.is_empty() || s < best {
                continue;
            }
            if s > best {
                best = s;
                found.clear();
            }
            found.extend(sigmas.into_iter().map(|sigma| Gluing {
                graph: place.graph(&sigma),
                copies: copies.clone(),
                zero_score: s,
                matching: sigma,
            }));
        }
        let labeled = found.len() as u64;
        levels.push(MaximalLevel {
            b,
            phi0_max: best,
            labeled,
            witnesses: dedup_canonical(found),
        });
    }
    Ok(MaximalSet {
        d: spec.dimension(),
        levels,
    })
}

/// Largest `Φ₀` of a covering of each bubble type.
pub fn optimal_scores(spec: &GluingSpec) -> Result<Vec<OptimalPairings>, EnumError> {
    Ok(spec
        .bubbles
        .iter()
        .map(|b| optimal_pairings(b, DEFAULT_CAP))
        .collect::<Result<_, _>>()?)
}

/// `Φ₀` of a tree of optimal coverings of the given copies.
fn tree_value(d: usize, optimal: &[OptimalPairings], copies: &[usize]) -> usize {
    d + copies
        .iter()
        .map(|&t| optimal[t].zero_score - d)
        .sum::<usize>()
}

/// Whether some choice of optimal pairings, one per copy, makes the gluing a
/// tree.
pub fn is_tree_gluing(spec: &GluingSpec, gluing: &Gluing) -> Result<bool, EnumError> {
    let optimal = optimal_scores(spec)?;
    let place = spec.placement(&gluing.copies)?;
    let choices: Vec<Vec<Vec<usize>>> = gluing
        .copies
        .iter()
        .map(|&t| {
            let layout: &Layout = spec.layout(t);
            let v = spec.bubbles[t].vertex_count();
            optimal[t]
                .pairings
                .iter()
                .map(|o| layout.positions(o, v))
                .collect()
        })
        .collect();
    for per_copy in choices
        .iter()
        .map(|c| c.iter().cloned())
        .multi_cartesian_product()
    {
        let omega = place.pairing(&gluing.graph, &per_copy);
        if psi(&gluing.graph, &omega)?.is_tree() {
            return Ok(true);
        }
    }
    Ok(choices.is_empty())
}

/// Empirical scaling exponent `ã` read off the maximal set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TildeAEstimate {
    /// `(Φ₀max(b) − D)/b` per level.
    pub ratios: Vec<Rational64>,
    /// Largest ratio.
    pub estimate: Rational64,
    /// First level reaching the estimate.
    pub attained_at: usize,
    /// Largest `Φ₀` of a tree of optimal coverings, per level.
    pub tree_values: Vec<usize>,
    /// Whether trees reach `Φ₀max` at every level.
    pub attained_by_tree: bool,
    /// Bound from the positivity of the degree: the largest
    /// `D(D − 1)V/4 − Φ` over the bubbles.
    pub melonic_cap: Rational64,
}

/// Estimates `ã` from gluings of at most `b_max` bubbles.
pub fn empirical_tilde_a(spec: &GluingSpec) -> Result<(MaximalSet, TildeAEstimate), EnumError> {
    let set = maximal_set(spec)?;
    let optimal = optimal_scores(spec)?;
    let d = spec.dimension();
    let mut ratios = Vec::new();
    let mut tree_values = Vec::new();
    for level in &set.levels {
        ratios.push(Rational64::new(
            level.phi0_max as i64 - d as i64,
            level.b as i64,
        ));
        let tree = spec
            .multisets(level.b)
            .iter()
            .map(|c| tree_value(d, &optimal, c))
            .max()
            .unwrap_or(d);
        tree_values.push(tree);
    }
    let estimate = *ratios.iter().max().expect("b_max >= 1");
    let attained_at = ratios.iter().position(|r| *r == estimate).expect("present") + 1;
    let attained_by_tree = set
        .levels
        .iter()
        .zip(&tree_values)
        .all(|(l, &t)| l.phi0_max == t);
    let melonic_cap = spec
        .bubbles
        .iter()
        .map(melonic_cap)
        .max()
        .expect("non-empty");
    Ok((
        set,
        TildeAEstimate {
            ratios,
            estimate,
            attained_at,
            tree_values,
            attained_by_tree,
            melonic_cap,
        },
    ))
}

/// `D(D − 1)V/4 − Φ` of a bubble: the most a bubble can add to `Φ₀` in a
/// gluing of non-negative degree.
pub fn melonic_cap(b: &ColoredGraph) -> Rational64 {
    let d = b.dimension() as i64;
    Rational64::new(d * (d - 1) * b.vertex_count() as i64, 4)
        - Rational64::from_integer(score(b) as i64)
}

/// Outcome of checking `Φ₀ ≤ D + ã·b` on all connected gluings.
#[derive(Debug, Clone)]
pub struct BoundCertificate {
    pub tilde_a: Rational64,
    pub holds: bool,
    /// Number of labeled connected gluings examined.
    pub checked: u64,
    /// Gluings (one per class) meeting the bound with equality.
    pub saturating: usize,
    /// A gluing exceeding the bound, if any.
    pub counterexample: Option<Gluing>,
}

/// Checks `Φ₀ ≤ D + ã·b` on every connected gluing of `spec`.
pub fn verify_linear_bound(
    spec: &GluingSpec,
    tilde_a: Rational64,
) -> Result<BoundCertificate, EnumError> {
    let set = maximal_set(spec)?;
    let d = spec.dimension() as i64;
    let mut checked = 0;
    for b in 1..=spec.b_max {
        for copies in spec.multisets(b) {
            let place = spec.placement(&copies)?;
            checked += fold_matchings(
                place.n(),
                false,
                || 0u64,
                |acc, sigma| *acc += u64::from(place.connected(sigma)),
                |a, b| a + b,
            );
        }
    }
    let mut saturating = 0;
    let mut counterexample = None;
    for level in &set.levels {
        let bound =
            Rational64::from_integer(d) + tilde_a * Rational64::from_integer(level.b as i64);
        let best = Rational64::from_integer(level.phi0_max as i64);
        if best > bound && counterexample.is_none() {
            counterexample = level.witnesses.first().cloned();
        } else if best == bound {
            saturating += level.witnesses.len();
        }
    }
    Ok(BoundCertificate {
        tilde_a,
        holds: counterexample.is_none(),
        checked,
        saturating,
        counterexample,
    })
}

/// Coefficients of a single bubble with `ã` read off gluings of at most
/// `b_max` copies.
pub fn coefficients_enumerated(
    bubble: &ColoredGraph,
    b_max: usize,
) -> Result<CoefficientReport, EnumError> {
    let spec = GluingSpec::new(vec![bubble.clone()], b_max)?;
    let (_, est) = empirical_tilde_a(&spec)?;
    let opt = optimal_pairings(bubble, DEFAULT_CAP)?;
    debug_assert_eq!(
        opt.zero_score,
        zero_score(&colgraph_pairings::covering(bubble, opt.chosen())?)
    );
    Ok(CoefficientReport::from_tilde_a(
        bubble.dimension(),
        bubble.vertex_count(),
        score(bubble),
        opt.zero_score,
        opt.pairings,
        est.estimate,
        Evidence::Enumerated { b_max },
        Some(est.attained_by_tree),
    ))
}
