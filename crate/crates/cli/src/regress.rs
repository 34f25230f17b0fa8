//! Regression of the coefficient rows of the bundled fixtures.

use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use colgraph_pairings::coefficients;

use crate::error::CertificateFailed;
use crate::input::load;
use crate::report::Report;

/// The fixture directory shipped with the crate.
pub fn bundled_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

/// Recomputes `D V Φ Φ₀ᵒᵖᵗ ã a s Δ` for every row of `expected.txt` and
/// reports the mismatches.
pub fn run(dir: Option<PathBuf>) -> Result<()> {
    let dir = dir.unwrap_or_else(bundled_dir);
    let table = dir.join("expected.txt");
    let text =
        std::fs::read_to_string(&table).with_context(|| format!("reading {}", table.display()))?;
    let mut r = Report::new();
    let mut failures = Vec::new();
    let mut rows = 0;
    for line in text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
    {
        let mut fields = line.split_whitespace();
        let name = fields.next().expect("non-empty line");
        let expected: Vec<&str> = fields.collect();
        let g = load(&dir.join(format!("{name}.gem")))?;
        let c = coefficients(&g)?;
        let computed = [
            c.d.to_string(),
            c.vertices.to_string(),
            c.phi.to_string(),
            c.phi0_opt.to_string(),
            c.tilde_a.to_string(),
            c.a.to_string(),
            c.s.to_string(),
            c.delta.to_string(),
        ];
        let ok =
            expected.len() == computed.len() && expected.iter().zip(&computed).all(|(e, c)| e == c);
        rows += 1;
        r.push(
            name,
            format!(
                "{} {}",
                computed.join(" "),
                if ok { "ok" } else { "MISMATCH" }
            ),
        );
        if !ok {
            failures.push(format!(
                "{name}: expected {} computed {}",
                expected.join(" "),
                computed.join(" ")
            ));
        }
    }
    r.push("rows", rows).push("failures", failures.len());
    r.print();
    if !failures.is_empty() {
        bail!(CertificateFailed(failures.join("; ")));
    }
    Ok(())
}
