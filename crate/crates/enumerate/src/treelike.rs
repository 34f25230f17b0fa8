//! Decomposition of maximal gluings into connected sums of known patterns
//! along separating color-0 switches.

use std::collections::{BTreeMap, BTreeSet};

use colgraph_core::{canonical_form, zero_score, ColoredGraph, EdgeId};
use colgraph_moves::{rho_switch, TopologyFlag};
use colgraph_pairings::{covering, optimal_pairings, DEFAULT_CAP};
use colgraph_stacked::psi;
use itertools::Itertools;

use crate::error::EnumError;
use crate::gluing::{Gluing, GluingSpec};
use crate::maximal::MaximalSet;

/// Canonical forms of the pieces a maximal gluing may be built from.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PatternSet {
    forms: BTreeSet<String>,
}

impl PatternSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a closed graph; returns whether it was new.
    pub fn insert(&mut self, g: &ColoredGraph) -> bool {
        self.forms.insert(canonical_form(g))
    }

    pub fn contains(&self, g: &ColoredGraph) -> bool {
        self.forms.contains(&canonical_form(g))
    }

    /// Adds every pattern of `other`.
    pub fn extend(&mut self, other: &PatternSet) {
        self.forms.extend(other.forms.iter().cloned());
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    /// The optimal coverings of every bubble of `spec`.
    pub fn optimal_coverings(spec: &GluingSpec) -> Result<Self, EnumError> {
        let mut set = Self::new();
        for b in &spec.bubbles {
            for omega in optimal_pairings(b, DEFAULT_CAP)?.pairings {
                set.insert(&covering(b, &omega)?);
            }
        }
        Ok(set)
    }
}

/// Maximal gluings of `b` bubbles that, under some choice of optimal
/// pairings, map to a theta-shaped stacked map: circuit rank 2 with one
/// independent cycle in every `(0, i)` submap.
pub fn theta_patterns(
    spec: &GluingSpec,
    set: &MaximalSet,
    b: usize,
) -> Result<PatternSet, EnumError> {
    let mut out = PatternSet::new();
    let Some(level) = set.levels.iter().find(|l| l.b == b) else {
        return Ok(out);
    };
    let optimal: Vec<_> = spec
        .bubbles
        .iter()
        .map(|bb| optimal_pairings(bb, DEFAULT_CAP))
        .collect::<Result<_, _>>()?;
    for w in &level.witnesses {
        let place = spec.placement(&w.copies)?;
        let choices: Vec<Vec<Vec<usize>>> = w
            .copies
            .iter()
            .map(|&t| {
                let v = spec.bubbles[t].vertex_count();
                optimal[t]
                    .pairings
                    .iter()
                    .map(|o| spec.layout(t).positions(o, v))
                    .collect()
            })
            .collect();
        for per_copy in choices
            .iter()
            .map(|c| c.iter().cloned())
            .multi_cartesian_product()
        {
            let map = psi(&w.graph, &place.pairing(&w.graph, &per_copy))?;
            if map.projected_rank() == 2
                && (1..=spec.dimension()).all(|i| map.zero_submap(i).circuit_rank == 1)
            {
                out.insert(&w.graph);
                break;
            }
        }
    }
    Ok(out)
}

/// A connected-sum decomposition into patterns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    /// The pieces, each a member of the pattern set.
    pub pieces: Vec<ColoredGraph>,
    /// `Φ₀ = D + Σ(Φ₀(piece) − D)`.
    pub additive: bool,
}

/// Splits `g` along separating color-0 switches until every piece is a
/// pattern. Returns `None` when no such decomposition exists.
pub fn decompose(
    g: &ColoredGraph,
    patterns: &PatternSet,
) -> Result<Option<Decomposition>, EnumError> {
    let mut memo = BTreeMap::new();
    let pieces = split(g, patterns, &mut memo)?;
    Ok(pieces.map(|pieces| {
        let d = g.dimension() as i64;
        let sum: i64 = pieces.iter().map(|p| zero_score(p) as i64 - d).sum();
        Decomposition {
            additive: zero_score(g) as i64 == d + sum,
            pieces,
        }
    }))
}

type Memo = BTreeMap<String, Option<Vec<ColoredGraph>>>;

fn split(
    g: &ColoredGraph,
    patterns: &PatternSet,
    memo: &mut Memo,
) -> Result<Option<Vec<ColoredGraph>>, EnumError> {
    let form = canonical_form(g);
    if patterns.forms.contains(&form) {
        return Ok(Some(vec![g.clone()]));
    }
    if let Some(known) = memo.get(&form) {
        return Ok(known.clone());
    }
    let zero: Vec<EdgeId> = g
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, e)| e.color == 0)
        .map(|(k, _)| EdgeId(k))
        .collect();
    let mut result = None;
    'pairs: for (i, &f1) in zero.iter().enumerate() {
        for &f2 in &zero[i + 1..] {
            let (h, record) = match rho_switch(g, f1, f2) {
                Ok(x) => x,
                Err(_) => continue,
            };
            if record.flag != TopologyFlag::ConnectedSum {
                continue;
            }
            let mut pieces = Vec::new();
            for comp in h.connected_components() {
                match split(&h.induced_subgraph(&comp), patterns, memo)? {
                    Some(p) => pieces.extend(p),
                    None => continue 'pairs,
                }
            }
            result = Some(pieces);
            break 'pairs;
        }
    }
    memo.insert(form, result.clone());
    Ok(result)
}

/// Outcome of decomposing every maximal witness.
#[derive(Debug, Clone)]
pub struct TreeLikeReport {
    pub checked: usize,
    pub decomposed: usize,
    /// Whether every decomposition is additive in `Φ₀`.
    pub additive: bool,
    /// Witnesses that did not decompose.
    pub failures: Vec<Gluing>,
}

impl TreeLikeReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.additive
    }
}

/// Decomposes every witness of the maximal set into patterns.
pub fn tree_like_check(
    set: &MaximalSet,
    patterns: &PatternSet,
) -> Result<TreeLikeReport, EnumError> {
    let mut report = TreeLikeReport {
        checked: 0,
        decomposed: 0,
        additive: true,
        failures: Vec::new(),
    };
    for w in set.levels.iter().flat_map(|l| &l.witnesses) {
        report.checked += 1;
        match decompose(&w.graph, patterns)? {
            Some(dec) => {
                report.decomposed += 1;
                report.additive &= dec.additive;
            }
            None => report.failures.push(w.clone()),
        }
    }
    Ok(report)
}
