//! End-to-end runs of the `colgraph` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_colgraph"))
        .args(args)
        .output()
        .unwrap()
}

fn run_with_threads(args: &[&str], threads: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_colgraph"))
        .env("COLGRAPH_THREADS", threads)
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn value(o: &Output, key: &str) -> String {
    stdout(o)
        .lines()
        .find_map(|l| l.strip_prefix(&format!("{key}=")).map(str::to_string))
        .unwrap_or_else(|| panic!("no {key} in {}", stdout(o)))
}

#[test]
fn stats_of_k33() {
    let o = run(&["stats", &fixture("k33.gem")]);
    assert!(o.status.success());
    assert_eq!(value(&o, "score"), "3");
    assert_eq!(value(&o, "pairings"), "6");
    assert_eq!(value(&o, "optimal_pairings"), "3");
}

#[test]
fn coefficients_of_the_octahedron() {
    let o = run(&["coefficients", &fixture("octahedron.gem")]);
    assert!(o.status.success());
    assert_eq!(value(&o, "tilde_a"), "5");
    assert_eq!(value(&o, "a"), "11/8");
    assert_eq!(value(&o, "s"), "1");
    let enumerated = run(&["coefficients", &fixture("k33.gem"), "--enumerate", "2"]);
    assert_eq!(value(&enumerated, "evidence"), "enumerated-to-2");
    assert_eq!(value(&enumerated, "tilde_a"), "3");
}

#[test]
fn series_coefficients() {
    let o = run(&["series", "1+3zG^4", "--order", "3"]);
    assert_eq!(value(&o, "coefficients"), "1 3 36 594");
    assert_eq!(value(&o, "singular_z"), "9/256");
    assert_eq!(value(&o, "singular_g"), "4/3");
}

#[test]
fn exit_statuses() {
    let bad = std::env::temp_dir().join("colgraph-cli-bad.gem");
    std::fs::write(&bad, "gem D=3 V=2\ne 0 1 1\ne 0 1 1\n").unwrap();
    assert_eq!(
        run(&["validate", bad.to_str().unwrap()]).status.code(),
        Some(1)
    );
    let capped = run(&[
        "enumerate",
        &fixture("octahedron.gem"),
        "--b",
        "2",
        "--cap",
        "6",
    ]);
    assert_eq!(capped.status.code(), Some(2));
    let cert = run(&[
        "enumerate",
        &fixture("six_color.gem"),
        &fixture("six_color_conjugate.gem"),
        "--b",
        "2",
        "--verify",
        "5",
    ]);
    assert_eq!(cert.status.code(), Some(3));
    assert_eq!(value(&cert, "counterexample_phi0"), "18");
    let ok = run(&[
        "enumerate",
        &fixture("k33.gem"),
        "--b",
        "2",
        "--verify",
        "3",
    ]);
    assert!(ok.status.success());
    assert_eq!(value(&ok, "bound_holds"), "true");
}

#[test]
fn reports_do_not_depend_on_the_thread_count() {
    let args = [
        "enumerate",
        &fixture("octahedron.gem"),
        "--b",
        "2",
        "--maximal",
        "--tilde-a",
    ];
    let one = run_with_threads(&args, "1");
    let four = run_with_threads(&args, "4");
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(value(&one, "phi0_max"), "8 13");
    assert_eq!(run_with_threads(&args, "zero").status.code(), Some(1));
}

#[test]
fn rooted_necklaces_of_melons() {
    // copies of the elementary melon glue along color 0 into a single ring
    let o = run(&["enumerate", &fixture("melon3.gem"), "--b", "4", "--rooted"]);
    assert_eq!(value(&o, "rooted"), "1 1 1 1");
}

#[test]
fn witnesses_are_dumped() {
    let dir = std::env::temp_dir().join("colgraph-cli-dump");
    let _ = std::fs::remove_dir_all(&dir);
    let o = run(&[
        "enumerate",
        &fixture("k33.gem"),
        "--b",
        "2",
        "--maximal",
        "--dump",
        dir.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let files = std::fs::read_dir(&dir).unwrap().count();
    assert_eq!(value(&o, "dumped"), files.to_string());
    assert!(files > 0);
    // dumped witnesses parse back
    for entry in std::fs::read_dir(&dir).unwrap() {
        assert!(run(&["validate", entry.unwrap().path().to_str().unwrap()])
            .status
            .success());
    }
}

#[test]
fn psi_and_dot_exports() {
    let o = run(&["psi", &fixture("k33.gem"), "--pairing", "optimal"]);
    assert_eq!(value(&o, "squares"), "3");
    assert_eq!(value(&o, "zero_score"), "6");
    assert_eq!(value(&o, "projected_rank"), "0");
    let by_index = run(&["psi", &fixture("k33.gem"), "--pairing", "0"]);
    assert_eq!(value(&by_index, "zero_score"), "5");
    let dot = run(&["export-dot", &fixture("k33.gem")]);
    assert!(stdout(&dot).starts_with("graph"));
    let map_dot = run(&["export-dot", &fixture("k33.gem"), "--pairing", "optimal"]);
    assert!(stdout(&map_dot).starts_with("graph stacked {"));
    assert_eq!(
        run(&["psi", &fixture("k33.gem"), "--pairing", "9"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn pairings_listing() {
    let o = run(&["pairings", &fixture("k33.gem"), "--table"]);
    let text = stdout(&o);
    assert_eq!(
        text.lines().filter(|l| l.starts_with("pairing_")).count(),
        6
    );
    assert_eq!(
        text.lines().filter(|l| l.contains("optimal=true")).count(),
        3
    );
    assert!(text.contains("L_m"));
}

#[test]
fn move_scripts() {
    let script = std::env::temp_dir().join("colgraph-cli-moves.txt");
    let graph = std::env::temp_dir().join("colgraph-cli-closed.gem");
    std::fs::write(&graph, "gem D=3 V=2\ne 0 1 0\ne 0 1 1\ne 0 1 2\ne 0 1 3\n").unwrap();
    std::fs::write(&script, "# grow a dipole on edges 0..3\ninsert 0,1 2,3\n").unwrap();
    let o = run(&["move", graph.to_str().unwrap(), script.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(value(&o, "before_vertices"), "2");
    assert_eq!(value(&o, "after_vertices"), "4");
    assert!(value(&o, "move_0").contains("topology="));
    std::fs::write(&script, "teleport 1\n").unwrap();
    assert_eq!(
        run(&["move", graph.to_str().unwrap(), script.to_str().unwrap()])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn syk_subcommands() {
    let o = run(&["syk", "classify", &fixture("k33.gem")]);
    assert_eq!(value(&o, "order"), "1");
    let melon = run(&["syk", "classify", &fixture("melon3.gem")]);
    assert_eq!(value(&melon, "order"), "0");
    let count = run(&[
        "syk", "count", "--order", "0", "--marks", "2", "--vmax", "3",
    ]);
    assert_eq!(value(&count, "rooted"), "6 42 270");
    let gf = run(&["syk", "gf", "G4_LO", "--order", "3"]);
    assert_eq!(value(&gf, "coefficients"), "0 6 42 270");
    assert_eq!(
        run(&["syk", "count", "--order", "0", "--vmax", "9"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["syk", "gf", "nope", "--order", "3"]).status.code(),
        Some(1)
    );
}

#[test]
fn bundled_fixtures_regress() {
    let o = run(&["regress"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert_eq!(value(&o, "failures"), "0");
    assert_eq!(value(&o, "k33"), "3 6 3 6 3 1 1 1/2 ok");
}
