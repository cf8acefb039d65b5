use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use nilorbit_cli::problem::Problem;
use nilorbit_cli::report::{Body, Method, Report};
use nilorbit_cli::{run, Cli, CliError};
use clap::Parser;

fn fixture(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("fixtures");
    p.push(name);
    p.display().to_string()
}

fn nilorbit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nilorbit")).args(args).output().unwrap()
}

fn nilorbit_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_nilorbit"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn report(args: &[&str]) -> Report {
    let mut full = vec!["nilorbit"];
    full.extend_from_slice(args);
    run(&Cli::parse_from(full)).unwrap()
}

fn parse_err(text: &str) -> CliError {
    Problem::parse(text, "t.problem").unwrap_err()
}

const HEISENBERG: &str = r#"
dimension = 3
brackets = [{ i = 1, j = 2, k = 3, c = 1 }]
lattice = [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1/2"]]
"#;

#[test]
fn exit_codes() {
    let code = |args: &[&str]| nilorbit(args).status.code().unwrap();
    assert_eq!(code(&["validate", &fixture("heisenberg.problem")]), 0);
    assert_eq!(code(&["validate", &fixture("jacobi_violation.problem")]), 1);
    assert_eq!(code(&["spectrum", &fixture("filiform4.problem")]), 3);
    assert_eq!(code(&["mult", &fixture("heisenberg.problem"), "--functional", "nope"]), 2);
    assert_eq!(code(&["validate", "/does/not/exist.problem"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["counterexample"]), 0);
}

#[test]
fn step_above_five_is_unsupported() {
    // [X1, Xi] = X(i+1) on seven generators has step 6
    let brackets: Vec<String> = (2..=6).map(|i| format!("{{ i = 1, j = {i}, k = {}, c = 1 }}", i + 1)).collect();
    let lattice: Vec<String> = (0..7)
        .map(|i| format!("[{}]", (0..7).map(|j| if i == j { "1" } else { "0" }).collect::<Vec<_>>().join(", ")))
        .collect();
    let text = format!("dimension = 7\nbrackets = [{}]\nlattice = [{}]\n", brackets.join(", "), lattice.join(", "));
    let out = nilorbit_stdin(&["validate", "-"], &text);
    assert_eq!(out.status.code(), Some(3), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn jacobi_violation_is_reported_with_position() {
    let out = nilorbit(&["validate", &fixture("jacobi_violation.problem")]);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("jacobi_violation.problem:6:3:"), "{err}");
    assert!(err.contains("Jacobi identity fails on (X1, X2, X3)"), "{err}");
}

#[test]
fn stdin_is_read_for_dash() {
    let out = nilorbit_stdin(&["--format", "structured", "mult", "-"], &format!(
        "{HEISENBERG}\n[[functional]]\nname = \"two\"\ncoords = [\"0\", \"0\", \"2\"]\n"
    ));
    assert_eq!(out.status.code(), Some(0));
    let r = Report::from_json(&String::from_utf8(out.stdout).unwrap()).unwrap();
    let Body::Mult(m) = r.body else { panic!("wrong command") };
    assert_eq!(m.functionals[0].mult.to_string(), "2");
    assert_eq!(m.functionals[0].count.to_string(), "4");

    let bad = nilorbit_stdin(&["validate", "-"], "dimension = 2\nlattice = [[\"1\", \"0\"], [\"0\", \"x\"]]\n");
    assert_eq!(bad.status.code(), Some(2));
    let col = "lattice = [[\"1\", \"0\"], [\"0\", ".len() + 1;
    assert!(String::from_utf8(bad.stderr).unwrap().contains(&format!("<stdin>:2:{col}:")));
}

#[test]
fn structured_output_round_trips() {
    let cases: Vec<Vec<String>> = vec![
        vec!["validate".into(), fixture("heisenberg.problem")],
        vec!["mult".into(), fixture("heisenberg.problem")],
        vec!["mult".into(), fixture("filiform4.problem")],
        vec!["moore-check".into(), fixture("abelian2.problem")],
        vec!["spectrum".into(), fixture("heisenberg.problem"), "--bound".into(), "2".into()],
        vec!["counterexample".into(), "--verify-action".into()],
    ];
    for args in cases {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let r = report(&args);
        let json = r.to_json();
        assert_eq!(Report::from_json(&json).unwrap(), r, "{args:?}");
        assert!(json.contains("\"formatVersion\": 1"));
    }
}

#[test]
fn heisenberg_multiplicities() {
    let Body::Mult(m) = report(&["mult", &fixture("heisenberg.problem")]).body else { panic!() };
    for (k, f) in (1..=5).zip(&m.functionals) {
        assert_eq!(f.mult.to_string(), (2 * k).to_string());
        assert_eq!(f.count.to_string(), (4 * k * k).to_string());
        assert!(f.moore_holds);
    }
    let missing = m.functionals.iter().find(|f| f.name == "X3*").unwrap();
    assert_eq!(missing.method, Method::OrbitMissesIntegralDual);
    assert_eq!(missing.mult.to_string(), "0");
    let shifted = m.functionals.iter().find(|f| f.name == "shifted").unwrap();
    assert!(shifted.orbit_point.is_some());
    assert_eq!(shifted.mult.to_string(), "2");
}

#[test]
fn filiform_fixture_fails_moore() {
    let Body::MooreCheck(m) = report(&["moore-check", &fixture("filiform4.problem")]).body else { panic!() };
    let f = &m.functionals[0];
    assert_eq!(f.method, Method::FixtureClasses);
    assert_eq!(f.count.to_string(), "18");
    assert_eq!(f.mult.to_string(), "3");
    assert!(!f.moore_holds && f.inequality_holds);
}

#[test]
fn supplied_classes_are_summed() {
    let text = std::fs::read_to_string(fixture("filiform4.problem")).unwrap()
        + "\n[[functional]]\nname = \"two\"\ncoords = [\"1\", \"0\", \"0\", \"0\"]\n\
           orbit_classes = [[\"1\", \"0\", \"0\", \"0\"], [\"1\", \"2\", \"2\", \"0\"]]\n";
    let p = Problem::parse(&text, "t.problem").unwrap();
    let check = Default::default();
    let Body::Mult(m) = nilorbit_cli::commands::mult(&p, &check, Some("two")).unwrap().body else { panic!() };
    assert_eq!(m.functionals[0].method, Method::SuppliedClasses);
    assert_eq!(m.functionals[0].mult.to_string(), "1/3");

    let wrong = std::fs::read_to_string(fixture("filiform4.problem")).unwrap()
        + "\n[[functional]]\nname = \"bad\"\ncoords = [\"1\", \"0\", \"0\", \"0\"]\n\
           orbit_classes = [[\"0\", \"0\", \"1\", \"0\"]]\n";
    let p = Problem::parse(&wrong, "t.problem").unwrap();
    assert!(matches!(nilorbit_cli::commands::mult(&p, &check, Some("bad")), Err(CliError::Invalid(_))));
}

#[test]
fn step_three_without_classes_is_unsupported() {
    let text = std::fs::read_to_string(fixture("filiform4.problem")).unwrap()
        + "\n[[functional]]\nname = \"other\"\ncoords = [\"2\", \"0\", \"0\", \"0\"]\n";
    let p = Problem::parse(&text, "t.problem").unwrap();
    let err = nilorbit_cli::commands::mult(&p, &Default::default(), Some("other")).unwrap_err();
    assert!(matches!(err, CliError::Unsupported(_)));
    assert_eq!(err.exit_code(), 3);
}

#[test]
fn parse_diagnostics_carry_positions() {
    let cases = [
        ("dimension = 2\nlattice = [[\"1\", \"0\"], [\"0\", \"1/0\"]]\n", 2),
        ("dimension = 2\nlattice = [[\"1\", \"0\"], [\"0\"]]\n", 2),
        ("dimension = 2\nlattice = [[\"1\", \"0\"], [\"0\", \"1\"]]\ncolour = 3\n", 3),
        ("dimension = 3\nbrackets = [\n  { i = 1, j = 2, k = 3, c = 1 },\n  { i = 2, j = 1, k = 3, c = 1 },\n]\n\
          lattice = [[\"1\",\"0\",\"0\"],[\"0\",\"1\",\"0\"],[\"0\",\"0\",\"1\"]]\n", 4),
        ("dimension = 2\nbrackets = [{ i = 1, j = 5, k = 2, c = 1 }]\nlattice = [[\"1\", \"0\"], [\"0\", \"1\"]]\n", 2),
        ("dimension = 2\nbrackets = [{ i = 1, j = 1, k = 2, c = 1 }]\nlattice = [[\"1\", \"0\"], [\"0\", \"1\"]]\n", 2),
    ];
    for (text, line) in cases {
        match parse_err(text) {
            CliError::Parse(d) => {
                assert_eq!(d.line, line, "{text}: {d}");
                assert!(d.column >= 1);
                assert_eq!(d.source, "t.problem");
            }
            other => panic!("{text}: expected a parse error, got {other:?}"),
        }
    }
}

#[test]
fn invalid_structures_exit_one() {
    // dependent lattice vectors
    let dependent = "dimension = 2\nlattice = [[\"1\", \"0\"], [\"2\", \"0\"]]\n";
    assert!(matches!(parse_err(dependent), CliError::Invalid(_)));
    // too few lattice vectors
    let short = "dimension = 2\nlattice = [[\"1\", \"0\"]]\n";
    assert!(matches!(parse_err(short), CliError::Invalid(_)));
    // not nilpotent: [X1, X2] = X2
    let solvable = "dimension = 2\nbrackets = [{ i = 1, j = 2, k = 2, c = 1 }]\nlattice = [[\"1\", \"0\"], [\"0\", \"1\"]]\n";
    assert!(matches!(parse_err(solvable), CliError::Invalid(_)));

    // exp(X1) exp(X2) = exp(X1 + X2 + X3/2) leaves exp(Z X1 + Z X2 + Z X3)
    let open = "dimension = 3\nbrackets = [{ i = 1, j = 2, k = 3, c = 1 }]\n\
                lattice = [[\"1\", \"0\", \"0\"], [\"0\", \"1\", \"0\"], [\"0\", \"0\", \"1\"]]\n";
    let out = nilorbit_stdin(&["validate", "-"], open);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr).unwrap().contains("not a group"));
}

#[test]
fn bracket_order_is_antisymmetric() {
    let a = Problem::parse(HEISENBERG, "a").unwrap();
    let flipped = HEISENBERG.replace("{ i = 1, j = 2, k = 3, c = 1 }", "{ i = 2, j = 1, k = 3, c = -1 }");
    let b = Problem::parse(&flipped, "b").unwrap();
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                assert_eq!(a.algebra.constant(i, j, k), b.algebra.constant(i, j, k));
            }
        }
    }
}

#[test]
fn spectrum_groups_orbits() {
    let Body::Spectrum(s) = report(&["spectrum", &fixture("abelian2.problem"), "--bound", "1"]).body else { panic!() };
    assert_eq!(s.points_scanned, 9);
    assert_eq!(s.orbits.len(), 9);

    let Body::Spectrum(s) = report(&["spectrum", &fixture("heisenberg.problem"), "--bound", "2"]).body else { panic!() };
    assert_eq!(s.points_scanned, 125);
    let total: usize = s.orbits.iter().map(|o| o.points).sum();
    assert_eq!(total, 125);
    assert!(s.orbits.iter().all(|o| o.moore_holds));
    let generic: Vec<_> = s.orbits.iter().filter(|o| o.orbit_dimension == 2).collect();
    assert_eq!(generic.len(), 4);
    for o in generic {
        let m: i64 = o.mult.to_string().parse().unwrap();
        assert_eq!(o.count.to_string(), (m * m).to_string());
    }
}

#[test]
fn table_output_mentions_the_verdict() {
    let out = nilorbit(&["counterexample"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("fails (9 != 18)"), "{text}");
    let out = nilorbit(&["mult", &fixture("heisenberg.problem"), "--functional", "2X3*"]);
    assert!(String::from_utf8(out.stdout).unwrap().contains("holds"));
}
