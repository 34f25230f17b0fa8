//! Loading graphs and choosing pairings.

use std::path::Path;
use std::str::FromStr;

use anyhow::{bail, Context, Result};
use colgraph_core::{parse, validate, ColoredGraph, RegularityClass};
use colgraph_pairings::{enumerate_pairings, optimal_pairings, pairing_from_color, Pairing};

use crate::error::Invalid;

/// Reads and parses a `.gem` file.
pub fn load(path: &Path) -> Result<ColoredGraph> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse(&text).map_err(|e| Invalid(format!("{}: {e}", path.display())).into())
}

/// Whether the graph is a bubble (colors `1..=D` only).
pub fn is_bubble(g: &ColoredGraph) -> bool {
    validate(g).class == RegularityClass::Bubble
}

/// How to pick a pairing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairingChoice {
    /// The first optimal pairing of a bubble.
    Optimal,
    /// The pairs joined by one color.
    Color(usize),
    /// Position in the lexicographic enumeration of a bubble's pairings.
    Index(usize),
}

impl FromStr for PairingChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "optimal" {
            return Ok(PairingChoice::Optimal);
        }
        if let Some(c) = s.strip_prefix("color") {
            return c
                .parse()
                .map(PairingChoice::Color)
                .map_err(|_| format!("bad color in {s:?}"));
        }
        s.parse()
            .map(PairingChoice::Index)
            .map_err(|_| format!("expected optimal, color<k> or an index, got {s:?}"))
    }
}

/// Resolves a pairing choice on `g`.
pub fn choose_pairing(g: &ColoredGraph, choice: PairingChoice, cap: usize) -> Result<Pairing> {
    Ok(match choice {
        PairingChoice::Optimal => optimal_pairings(g, cap)?.chosen().clone(),
        PairingChoice::Color(c) => pairing_from_color(g, c)?,
        PairingChoice::Index(k) => match enumerate_pairings(g)?.nth(k) {
            Some(p) => p,
            None => bail!(Invalid(format!("pairing index {k} out of range"))),
        },
    })
}
