//! Subcommand handlers.

use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use colgraph_core::{
    degree_report, serialize, to_dot, validate as validate_graph, zero_score, ColoredGraph,
    RegularityClass,
};
use colgraph_enumerate::{
    count_gluings, empirical_tilde_a, maximal_set, series_solve, singular_point,
    verify_linear_bound, GluingSpec, SeriesSpec,
};
use colgraph_moves::{apply, Move};
use colgraph_pairings::{covering, enumerate_pairings, lm, optimal_pairings, Pairing};
use colgraph_stacked::{psi as psi_map, StackedMap};
use colgraph_syk::{
    chain_gf, classify_order, composite_gf, count_by_order, count_by_scheme, ChainKind,
    CompositeGf, SykMap,
};
use itertools::Itertools;
use num_rational::Rational64;

use crate::error::{CertificateFailed, Invalid};
use crate::input::{choose_pairing, is_bubble, load, PairingChoice};
use crate::report::{Report, Table};

/// Pairings are listed one by one up to this many pairs.
const LIST_LIMIT: usize = 7;

fn pairs_text(p: &Pairing) -> String {
    p.pairs()
        .iter()
        .map(|(b, w)| format!("{}-{}", b.0, w.0))
        .join(",")
}

fn class_name(class: RegularityClass) -> String {
    match class {
        RegularityClass::Closed => "closed".into(),
        RegularityClass::Bubble => "bubble".into(),
        RegularityClass::Boundary { q } => format!("boundary-{q}"),
        RegularityClass::Irregular => "irregular".into(),
    }
}

fn require_bubble(g: &ColoredGraph, path: &Path) -> Result<()> {
    if !is_bubble(g) {
        bail!(Invalid(format!("{} is not a bubble", path.display())));
    }
    Ok(())
}

pub fn validate(path: &Path) -> Result<()> {
    let g = load(path)?;
    let v = validate_graph(&g);
    let mut r = Report::new();
    r.push("dimension", g.dimension())
        .push("vertices", g.vertex_count())
        .push("bipartite", v.bipartite)
        .push("balanced", v.balanced)
        .push("class", class_name(v.class))
        .push("connected", v.connected)
        .push("components", v.components)
        .push("marked", v.marked)
        .push("valid", v.is_valid());
    r.print();
    if !v.is_valid() {
        bail!(Invalid(format!("{} failed validation", path.display())));
    }
    Ok(())
}

pub fn stats(path: &Path, cap: usize) -> Result<()> {
    let g = load(path)?;
    let d = degree_report(&g)?;
    let mut r = Report::new();
    r.push("dimension", g.dimension())
        .push("vertices", g.vertex_count())
        .push("class", class_name(validate_graph(&g).class))
        .push("score", d.score);
    for ((i, j), count) in &d.pair_counts {
        r.push(format!("phi_{i}_{j}"), count);
    }
    if validate_graph(&g).class == RegularityClass::Closed {
        r.push("zero_score", d.zero_score);
    }
    r.push("gurau_degree", d.gurau_degree);
    r.push_list(
        "jacket_genera",
        d.jacket_genera.iter().map(|(_, genus)| genus),
    );
    r.push(
        "planar_jacket",
        d.jacket_genera.iter().any(|(_, genus)| *genus == 0),
    );
    if is_bubble(&g) {
        let opt = optimal_pairings(&g, cap)?;
        let n = g.vertex_count() / 2;
        let total: u64 = (1..=n as u64).product();
        r.push("pairings", total)
            .push("optimal_pairings", opt.pairings.len())
            .push("phi0_opt", opt.zero_score)
            .push("forced_pairs", opt.forced);
    }
    r.print();
    Ok(())
}

pub fn pairings(path: &Path, table: bool, cap: usize) -> Result<()> {
    let g = load(path)?;
    require_bubble(&g, path)?;
    let opt = optimal_pairings(&g, cap)?;
    let n = g.vertex_count() / 2;
    let all = n <= LIST_LIMIT;
    let list: Vec<Pairing> = if all {
        enumerate_pairings(&g)?.collect()
    } else {
        opt.pairings.clone()
    };
    let mut r = Report::new();
    r.push("pairs", n)
        .push("pairings", (1..=n as u64).product::<u64>())
        .push("optimal_pairings", opt.pairings.len())
        .push("phi0_opt", opt.zero_score)
        .push("listed", if all { "all" } else { "optimal" });
    let mut t = Table::new(&["#", "pairs", "phi0", "L_m", "optimal"]);
    for (k, p) in list.iter().enumerate() {
        let phi0 = zero_score(&covering(&g, p)?);
        let l = if g.is_connected() {
            lm(&g, p)?.to_string()
        } else {
            "-".into()
        };
        let optimal = phi0 == opt.zero_score;
        r.push(
            format!("pairing_{k}"),
            format!("{} phi0={phi0} L_m={l} optimal={optimal}", pairs_text(p)),
        );
        t.row(vec![
            k.to_string(),
            pairs_text(p),
            phi0.to_string(),
            l,
            optimal.to_string(),
        ]);
    }
    r.print();
    if table {
        println!();
        t.print();
    }
    Ok(())
}

pub fn coefficients(path: &Path, enumerate: Option<usize>, table: bool, cap: usize) -> Result<()> {
    let g = load(path)?;
    require_bubble(&g, path)?;
    let report = match enumerate {
        None => colgraph_pairings::coefficients_with_cap(&g, cap)?,
        Some(b_max) => {
            GluingSpec::new(vec![g.clone()], b_max)?
                .with_cap(cap)
                .check_cap()?;
            colgraph_enumerate::coefficients_enumerated(&g, b_max)?
        }
    };
    let mut r = Report::new();
    r.push("dimension", report.d)
        .push("vertices", report.vertices)
        .push("score", report.phi)
        .push("phi0_opt", report.phi0_opt)
        .push("optimal_pairings", report.optimal.len())
        .push("tilde_a", report.tilde_a)
        .push("a", report.a)
        .push("s", report.s)
        .push("delta", report.delta)
        .push("evidence", report.evidence);
    if let Some(t) = report.trees_maximal {
        r.push("trees_maximal", t);
    }
    r.print();
    if table {
        println!();
        let mut t = Table::new(&["D", "V", "Φ", "Φ₀opt", "ã", "a", "s", "Δ"]);
        t.row(
            [
                report.d.to_string(),
                report.vertices.to_string(),
                report.phi.to_string(),
                report.phi0_opt.to_string(),
                report.tilde_a.to_string(),
                report.a.to_string(),
                report.s.to_string(),
                report.delta.to_string(),
            ]
            .to_vec(),
        );
        t.print();
    }
    Ok(())
}

/// The stacked map of a bubble (through its covering) or of a closed graph.
fn stacked(g: &ColoredGraph, choice: PairingChoice, cap: usize) -> Result<StackedMap> {
    let omega = choose_pairing(g, choice, cap)?;
    if is_bubble(g) {
        Ok(psi_map(&covering(g, &omega)?, &omega)?)
    } else {
        Ok(psi_map(g, &omega)?)
    }
}

pub fn psi_report(map: &StackedMap) -> Report {
    let rep = map.report();
    let mut r = Report::new();
    r.push("squares", map.square_count())
        .push("components", rep.components)
        .push("circuit_rank", rep.circuit_rank)
        .push("projected_rank", rep.projected_rank)
        .push("zero_score", rep.zero_score())
        .push("tree", map.is_tree());
    for z in &rep.zero {
        r.push(
            format!("submap_{}", z.color),
            format!(
                "faces={} interior={} genus={} circuit_rank={} components={}",
                z.faces, z.interior_faces, z.genus, z.circuit_rank, z.components
            ),
        );
    }
    r
}

pub fn psi(path: &Path, choice: PairingChoice, dot: bool, cap: usize) -> Result<()> {
    let g = load(path)?;
    let map = stacked(&g, choice, cap)?;
    if dot {
        print!("{}", colgraph_stacked::to_dot(&map));
    } else {
        psi_report(&map).print();
    }
    Ok(())
}

fn graph_summary(r: &mut Report, prefix: &str, g: &ColoredGraph) {
    let v = validate_graph(g);
    r.push(format!("{prefix}_vertices"), g.vertex_count())
        .push(format!("{prefix}_class"), class_name(v.class))
        .push(format!("{prefix}_components"), v.components)
        .push(format!("{prefix}_score"), colgraph_core::score(g));
    if v.class == RegularityClass::Closed {
        r.push(format!("{prefix}_zero_score"), zero_score(g));
    }
}

pub fn moves(path: &Path, script: &Path) -> Result<()> {
    let mut g = load(path)?;
    let text =
        std::fs::read_to_string(script).with_context(|| format!("reading {}", script.display()))?;
    let mut r = Report::new();
    graph_summary(&mut r, "before", &g);
    let mut step = 0;
    for (line_no, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mv: Move = line
            .parse()
            .map_err(|e| Invalid(format!("{}:{}: {e}", script.display(), line_no + 1)))?;
        let (next, record) = apply(&g, &mv).with_context(|| format!("move {step} ({mv})"))?;
        let separated = record
            .separated_colors
            .map_or("-".to_string(), |s| s.to_string());
        r.push(
            format!("move_{step}"),
            format!(
                "{mv} kind={:?} delta_phi={} delta_phi0={} topology={} separated={separated} inverse={}",
                record.kind, record.delta_phi, record.delta_phi0, record.flag, record.inverse
            ),
        );
        g = next;
        step += 1;
    }
    graph_summary(&mut r, "after", &g);
    r.print();
    Ok(())
}

/// Options of the `enumerate` subcommand.
pub struct EnumerateArgs {
    pub files: Vec<PathBuf>,
    pub b: usize,
    pub rooted: bool,
    pub maximal: bool,
    pub tilde_a: bool,
    pub verify: Option<String>,
    pub dump: Option<PathBuf>,
    pub cap: usize,
}

pub fn enumerate(args: &EnumerateArgs) -> Result<()> {
    let bubbles = args
        .files
        .iter()
        .map(|f| {
            let g = load(f)?;
            require_bubble(&g, f)?;
            Ok(g)
        })
        .collect::<Result<Vec<_>>>()?;
    let spec = GluingSpec::new(bubbles, args.b)?.with_cap(args.cap);
    spec.check_cap()?;
    let mut r = Report::new();
    r.push("dimension", spec.dimension()).push("b_max", args.b);
    let counts = count_gluings(&spec)?;
    if args.rooted {
        r.push_list("rooted", counts.iter().map(|c| c.rooted));
    } else {
        r.push_list("labeled", counts.iter().map(|c| c.labeled))
            .push_list("connected", counts.iter().map(|c| c.connected))
            .push_list("rooted", counts.iter().map(|c| c.rooted));
    }
    let mut witnesses = Vec::new();
    if args.maximal || args.tilde_a || args.dump.is_some() {
        let (set, estimate) = if args.tilde_a {
            let (set, est) = empirical_tilde_a(&spec)?;
            (set, Some(est))
        } else {
            (maximal_set(&spec)?, None)
        };
        r.push_list("phi0_max", set.levels.iter().map(|l| l.phi0_max))
            .push_list("maximal_labeled", set.levels.iter().map(|l| l.labeled))
            .push_list(
                "maximal_classes",
                set.levels.iter().map(|l| l.witnesses.len()),
            );
        if let Some(est) = estimate {
            r.push_list("ratios", &est.ratios)
                .push("tilde_a_estimate", est.estimate)
                .push("attained_at", est.attained_at)
                .push_list("tree_values", &est.tree_values)
                .push("attained_by_tree", est.attained_by_tree)
                .push("melonic_cap", est.melonic_cap);
        }
        for level in set.levels {
            for (k, w) in level.witnesses.into_iter().enumerate() {
                witnesses.push((level.b, k, w.graph));
            }
        }
    }
    if let Some(text) = &args.verify {
        let tilde_a: Rational64 = text
            .parse()
            .map_err(|_| Invalid(format!("not a rational: {text:?}")))?;
        let cert = verify_linear_bound(&spec, tilde_a)?;
        r.push("bound_tilde_a", cert.tilde_a)
            .push("bound_holds", cert.holds)
            .push("bound_checked", cert.checked)
            .push("bound_saturating", cert.saturating);
        if let Some(c) = &cert.counterexample {
            r.push("counterexample_b", c.bubble_count())
                .push("counterexample_phi0", c.zero_score);
        }
        if !cert.holds {
            r.print();
            bail!(CertificateFailed(format!("Φ₀ ≤ D + {tilde_a}·b fails")));
        }
    }
    if let Some(dir) = &args.dump {
        std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        for (b, k, g) in &witnesses {
            let file = dir.join(format!("maximal_b{b}_{k}.gem"));
            std::fs::write(&file, serialize(g))
                .with_context(|| format!("writing {}", file.display()))?;
        }
        r.push("dumped", witnesses.len());
    }
    r.print();
    Ok(())
}

pub fn series(equation: &str, order: usize) -> Result<()> {
    let spec: SeriesSpec = equation.parse()?;
    let coeffs = series_solve(&spec, order);
    let mut r = Report::new();
    r.push("equation", &spec).push_list("coefficients", &coeffs);
    if let Some(point) = singular_point(&spec) {
        r.push("singular_z", &point.z).push("singular_g", &point.g);
    }
    r.print();
    Ok(())
}

pub fn syk_classify(path: &Path, choice: PairingChoice, cap: usize) -> Result<()> {
    let g = load(path)?;
    let mut r = Report::new();
    let map = if is_bubble(&g) {
        let omega = choose_pairing(&g, choice, cap)?;
        let order = classify_order(&g, &omega)?;
        r.push("pairing", pairs_text(&omega));
        let map = SykMap::from_bubble(&g, &omega)?;
        debug_assert_eq!(map.circuit_rank(), order);
        map
    } else {
        SykMap::from_covering(&g, &[])?
    };
    r.push("dimension", map.dimension())
        .push("squares", map.square_count())
        .push("colored_vertices", map.colored_vertex_count())
        .push("components", map.component_count())
        .push("order", map.circuit_rank())
        .push("amplitude_exponent", map.amplitude_exponent());
    r.print();
    Ok(())
}

pub fn syk_count(d: usize, order: usize, marks: usize, vmax: usize, by_scheme: bool) -> Result<()> {
    let counts = if by_scheme {
        count_by_scheme(d, order, marks, vmax)?
    } else {
        count_by_order(d, order, marks, vmax)?
    };
    let mut r = Report::new();
    r.push("dimension", d)
        .push("order", order)
        .push("marks", marks)
        .push_list("rooted", counts.iter().map(|c| &c.rooted));
    if by_scheme {
        for c in &counts {
            for (shape, n) in &c.by_scheme {
                r.push(format!("pairs_{}_{shape}", c.pairs), n);
            }
        }
    }
    r.print();
    Ok(())
}

pub fn syk_gf(name: &str, d: usize, order: usize) -> Result<()> {
    let mut r = Report::new();
    r.push("name", name).push("dimension", d);
    if let Ok(kind) = name.parse::<ChainKind>() {
        let gf = chain_gf(kind, d, order);
        r.push("white_shift", gf.white_shift)
            .push("colored_shift", gf.colored_shift)
            .push_list("y_coefficients", gf.y_series.coefficients());
    } else {
        let gf: CompositeGf = name.parse()?;
        r.push_list("coefficients", composite_gf(gf, d, order).coefficients());
    }
    r.print();
    Ok(())
}

pub fn export_dot(path: &Path, pairing: Option<PairingChoice>, cap: usize) -> Result<()> {
    let g = load(path)?;
    match pairing {
        None => print!("{}", to_dot(&g)),
        Some(choice) => print!("{}", colgraph_stacked::to_dot(&stacked(&g, choice, cap)?)),
    }
    Ok(())
}
