//! End-to-end checks of the command-line surface: values, schemas, exit
//! codes, and determinism.

use pdmwell::cli::run;

fn run_cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(
        std::iter::once("pdmwell").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn csv_cell(line: &str, idx: usize) -> f64 {
    line.split(',').nth(idx).unwrap().parse().unwrap()
}

#[test]
fn spectrum_sech_values() {
    let (code, out, _) = run_cli(&["spectrum", "--well", "sech", "--a", "1", "--v0", "48"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "n,energy,continuum_threshold,bound_count");
    let expected = [-8.75, -3.75, -0.75];
    for (n, &e) in expected.iter().enumerate() {
        let row = lines[n + 1];
        assert_eq!(csv_cell(row, 0) as usize, n);
        assert!((csv_cell(row, 1) - e).abs() < 1e-14, "{row}");
        assert_eq!(csv_cell(row, 2), 0.0);
        assert_eq!(csv_cell(row, 3) as usize, 3);
    }
}

#[test]
fn spectrum_harmonic_values() {
    let (code, out, _) = run_cli(&[
        "spectrum", "--well", "harmonic", "--omega", "1", "--a", "3",
    ]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    let expected = [0.5, 23.0 / 18.0, 11.0 / 6.0, 13.0 / 6.0];
    assert_eq!(lines.len(), 5);
    for (n, &e) in expected.iter().enumerate() {
        assert!((csv_cell(lines[n + 1], 1) - e).abs() < 1e-14);
        assert!((csv_cell(lines[n + 1], 2) - 2.25).abs() < 1e-15);
    }
}

#[test]
fn spectrum_json_schema() {
    let (code, out, _) = run_cli(&[
        "spectrum", "--well", "sech", "--a", "1", "--v0", "48", "--format", "json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["well"], "sech");
    assert_eq!(v["params"]["a"], 1.0);
    assert_eq!(v["params"]["v0"], 48.0);
    assert_eq!(v["results"]["bound_count"], 3);
    assert_eq!(v["results"]["levels"][0]["energy"], -8.75);
    // stable top-level key order: well, params, results
    let well_pos = out.find("\"well\"").unwrap();
    let params_pos = out.find("\"params\"").unwrap();
    let results_pos = out.find("\"results\"").unwrap();
    assert!(well_pos < params_pos && params_pos < results_pos);
}

#[test]
fn potential_reference_rows() {
    let (code, out, _) = run_cli(&[
        "potential", "--well", "sech", "--a", "1", "--v0", "48", "--x-min", "0", "--x-max", "9",
        "--samples", "4",
    ]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "x,v_eff,mass");
    // V(0) = −V0/4 = −12 at the minimum, M(0) = 1
    assert!((csv_cell(lines[1], 1) + 12.0).abs() < 1e-14);
    assert!((csv_cell(lines[1], 2) - 1.0).abs() < 1e-15);
    // V(9) = 48(1/101² − 1/101)
    let expected = 48.0 * (1.0 / (101.0 * 101.0) - 1.0 / 101.0);
    assert!((csv_cell(lines[4], 1) - expected).abs() < 1e-14);
}

#[test]
fn potential_harmonic_at_origin() {
    let (code, out, _) = run_cli(&[
        "potential", "--well", "harmonic", "--omega", "1", "--a", "3", "--x-min", "0", "--x-max",
        "1", "--samples", "2",
    ]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(csv_cell(lines[1], 1), 0.0);
}

#[test]
fn potential_default_range_covers_figure_window() {
    let (code, out, _) = run_cli(&["potential", "--well", "sech", "--a", "1", "--v0", "48"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 502);
    // first row is the wall itself, rendered as an infinite barrier
    assert!(lines[1].starts_with("-1."));
    assert!(lines[1].ends_with(",inf,inf"));
    let last = lines[501];
    assert!((csv_cell(last, 0) - 9.0).abs() < 1e-12);
}

#[test]
fn wavefunction_reference_values() {
    let (code, out, _) = run_cli(&[
        "wavefunctions", "--well", "sech", "--a", "1", "--v0", "48", "--levels", "0,1,2",
        "--x-min", "0", "--x-max", "1", "--samples", "2",
    ]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "x,psi_0,psi_1,psi_2");
    let row = lines[1]; // x = 0
    assert!((csv_cell(row, 1) - 0.9682458365518542).abs() < 1e-8);
    assert_eq!(csv_cell(row, 2), 0.0);
    assert!((csv_cell(row, 3) + 0.4330127018922193).abs() < 1e-8);
}

#[test]
fn wavefunctions_default_levels_are_all_bound() {
    let (code, out, _) = run_cli(&[
        "wavefunctions", "--well", "harmonic", "--omega", "1", "--a", "3", "--samples", "8",
    ]);
    assert_eq!(code, 0);
    assert!(out.lines().next().unwrap() == "x,psi_0,psi_1,psi_2,psi_3");
}

#[test]
fn verify_sech_defaults_pass() {
    let (code, out, err) = run_cli(&["verify", "--well", "sech", "--a", "1", "--v0", "48"]);
    assert_eq!(code, 0, "stderr: {err}");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["results"]["all_pass"], true);
    assert_eq!(v["results"]["levels"].as_array().unwrap().len(), 3);
    for lvl in v["results"]["levels"].as_array().unwrap() {
        assert_eq!(lvl["energy_pass"], true);
        assert_eq!(lvl["overlap_pass"], true);
    }
}

#[test]
fn verify_harmonic_with_explicit_grid_passes() {
    let (code, out, _) = run_cli(&[
        "verify", "--well", "harmonic", "--omega", "1", "--a", "3", "--k", "4", "--L", "6200",
        "--n-points", "620001",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["results"]["all_pass"], true);
}

#[test]
fn verify_failing_config_exits_one() {
    // a box short enough that the n=2 overlap cannot pass, but long enough
    // to clear the hard configuration guard
    let (code, out, _) = run_cli(&[
        "verify", "--well", "sech", "--a", "1", "--v0", "48", "--k", "3", "--L", "70",
        "--n-points", "20001",
    ]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["results"]["all_pass"], false);
}

#[test]
fn verify_inadequate_truncation_exits_two() {
    let (code, _, err) = run_cli(&[
        "verify", "--well", "sech", "--a", "1", "--v0", "48", "--k", "3", "--L", "5",
        "--n-points", "5001",
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("inadequate configuration"), "{err}");
}

#[test]
fn byte_identical_reruns() {
    for args in [
        vec!["spectrum", "--well", "sech", "--a", "1", "--v0", "48"],
        vec![
            "potential", "--well", "harmonic", "--omega", "1", "--a", "3", "--samples", "33",
        ],
        vec![
            "verify", "--well", "sech", "--a", "1", "--v0", "48", "--k", "1", "--L", "40",
            "--n-points", "8001",
        ],
    ] {
        let first = run_cli(&args);
        let second = run_cli(&args);
        assert_eq!(first, second, "args: {args:?}");
    }
}

#[test]
fn csv_floats_roundtrip() {
    let (_, out, _) = run_cli(&[
        "wavefunctions", "--well", "sech", "--a", "1", "--v0", "48", "--levels", "0", "--x-min",
        "0.1", "--x-max", "2.3", "--samples", "7",
    ]);
    let well = pdmwell::SechPdmWell::new(1.0, 48.0).unwrap();
    use pdmwell::PdmWell;
    for line in out.lines().skip(1) {
        let x = csv_cell(line, 0);
        let psi = csv_cell(line, 1);
        assert_eq!(psi, well.psi(0, x).unwrap(), "printed floats must round-trip");
    }
}
