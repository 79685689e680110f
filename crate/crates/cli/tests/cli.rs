//! End-to-end checks of the `hapnet` binary: reference rows, exit codes,
//! file outputs and byte stability.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn hapnet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hapnet"))
        .args(args)
        .output()
        .expect("failed to launch hapnet")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn tmp_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hapnet-test-{tag}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn read(path: &Path) -> String {
    std::fs::read_to_string(path).unwrap_or_else(|e| panic!("read {}: {e}", path.display()))
}

#[test]
fn optimize_prints_the_reference_row() {
    let out = hapnet(&["optimize"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let row = text.lines().nth(1).expect("data row");
    assert!(row.starts_with("37,13,16,11929"), "row was: {row}");
}

#[test]
fn optimize_lean_solar_budget_row() {
    let out = hapnet(&["optimize", "--e-solar-kwh", "42", "--v", "12", "--w", "40"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let row = text.lines().nth(1).expect("data row");
    assert!(row.starts_with("37,0,-,6691"), "row was: {row}");
}

#[test]
fn missing_config_file_is_a_usage_error() {
    let out = hapnet(&["optimize", "--config", "/no/such/file.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_config_keys_are_rejected() {
    let dir = tmp_dir("badcfg");
    let cfg = dir.join("cfg.json");
    std::fs::write(&cfg, r#"{"not_a_field": true}"#).unwrap();
    let out = hapnet(&["optimize", "--config", cfg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unreachable_receiver_floor_is_infeasible() {
    let dir = tmp_dir("greedy");
    let cfg = dir.join("cfg.json");
    std::fs::write(&cfg, r#"{"link": {"rho_rx_w": 1.0}}"#).unwrap();
    let out = hapnet(&["optimize", "--config", cfg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn starved_solar_budget_is_infeasible() {
    let out = hapnet(&["optimize", "--e-solar-kwh", "20"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn tables_reproduce_reference_cells() {
    let dir = tmp_dir("tables");
    let out = hapnet(&["tables", "--out-dir", dir.to_str().unwrap()]);
    assert!(out.status.success());

    let single = read(&dir.join("single_transceiver.csv"));
    assert!(single.contains("\n2,37,6691"), "{single}");
    assert!(single.contains("\n4,67,13237"), "{single}");

    let max_ext = read(&dir.join("max_extended_coverage.csv"));
    let m_max: Vec<&str> = max_ext
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap())
        .collect();
    assert_eq!(
        m_max,
        ["6", "16", "47", "78", "109", "140", "171", "202", "233", "264", "295", "314"]
    );

    let optimal = read(&dir.join("optimal_configs.csv"));
    assert!(optimal.contains("50,80,480,37,13,16,11929"), "{optimal}");
}

#[test]
fn tables_with_empty_axes_are_header_only() {
    let dir = tmp_dir("emptytables");
    let cfg = dir.join("cfg.json");
    std::fs::write(
        &cfg,
        r#"{"sweep": {"e_solar_kwh": [], "w": [], "r_rx_m": [], "n_nodes": []}}"#,
    )
    .unwrap();
    let out = hapnet(&[
        "tables",
        "--config",
        cfg.to_str().unwrap(),
        "--out-dir",
        dir.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let single = read(&dir.join("single_transceiver.csv"));
    assert_eq!(single.lines().count(), 1, "{single}");
    let max_ext = read(&dir.join("max_extended_coverage.csv"));
    assert_eq!(max_ext.lines().count(), 1, "{max_ext}");
}

#[test]
fn tables_are_byte_stable() {
    let a = tmp_dir("stable-a");
    let b = tmp_dir("stable-b");
    let cfg = a.join("cfg.json");
    std::fs::write(
        &cfg,
        r#"{"sweep": {"e_solar_kwh": [42, 50], "w": [40], "r_rx_m": [2], "n_nodes": [480]}}"#,
    )
    .unwrap();
    for dir in [&a, &b] {
        let out = hapnet(&[
            "tables",
            "--config",
            cfg.to_str().unwrap(),
            "--out-dir",
            dir.to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    for name in [
        "single_transceiver.csv",
        "max_extended_coverage.csv",
        "optimal_configs.csv",
    ] {
        assert_eq!(read(&a.join(name)), read(&b.join(name)), "{name} differs");
    }
}

#[test]
fn scenario_gen_then_design_round_trip() {
    let dir = tmp_dir("roundtrip");
    let scn = dir.join("scenario.json");
    let out = hapnet(&[
        "scenario-gen",
        "--n-nodes",
        "150",
        "--seed",
        "9",
        "--output",
        scn.to_str().unwrap(),
    ]);
    assert!(out.status.success());

    let out = hapnet(&[
        "design",
        "--scenario",
        scn.to_str().unwrap(),
        "--w",
        "40",
        "--out-dir",
        dir.to_str().unwrap(),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );

    let series = read(&dir.join("design_series.csv"));
    assert_eq!(series.lines().count(), 2, "{series}");
    let row: Vec<&str> = series.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(row[0], "150");
    assert_eq!(row[1], "40");

    // plan JSON parses and its cost agrees with the day-rate model
    let plan: serde_json::Value =
        serde_json::from_str(&read(&dir.join("plan_n150_w40_seed9.json"))).unwrap();
    let k = plan["cost"]["k"].as_u64().unwrap();
    let l = plan["cost"]["l_inter"].as_u64().unwrap();
    let m = plan["cost"]["m"].as_u64().unwrap();
    let total = plan["cost"]["total"].as_f64().unwrap();
    let want =
        k as f64 * (100.0 + (m as f64 + 1.0) * 10.0 + 1000.0 / 365.0) + 2.0 * l as f64 * 10.0;
    assert!((total - want).abs() < 1e-9);
    assert_eq!(plan["clusters"].as_array().unwrap().len() as u64, k);
    assert_eq!(plan["links"].as_array().unwrap().len() as u64, l);
}

#[test]
fn design_sweep_is_deterministic() {
    let a = tmp_dir("design-a");
    let b = tmp_dir("design-b");
    let cfg = a.join("cfg.json");
    std::fs::write(
        &cfg,
        r#"{"sweep": {"n_nodes": [200, 480], "w": [40, 80], "e_solar_kwh": [], "r_rx_m": []}}"#,
    )
    .unwrap();
    for dir in [&a, &b] {
        let out = hapnet(&[
            "design",
            "--config",
            cfg.to_str().unwrap(),
            "--out-dir",
            dir.to_str().unwrap(),
        ]);
        assert!(
            out.status.success(),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
    let series_a = read(&a.join("design_series.csv"));
    assert_eq!(series_a, read(&b.join("design_series.csv")));
    assert_eq!(series_a.lines().count(), 5);
    assert_eq!(
        read(&a.join("plan_n480_w80_seed2.json")),
        read(&b.join("plan_n480_w80_seed2.json"))
    );
}

#[test]
fn links_do_not_increase_with_denser_wdm() {
    // Matched scenarios: 80 wavelengths never need more inter-platform
    // links than 40.
    let dir = tmp_dir("wdm");
    let cfg = dir.join("cfg.json");
    std::fs::write(
        &cfg,
        r#"{"sweep": {"n_nodes": [480, 998], "w": [40, 80], "e_solar_kwh": [], "r_rx_m": []}}"#,
    )
    .unwrap();
    let out = hapnet(&[
        "design",
        "--config",
        cfg.to_str().unwrap(),
        "--out-dir",
        dir.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let series = read(&dir.join("design_series.csv"));
    let links: std::collections::BTreeMap<(u64, u64), u64> = series
        .lines()
        .skip(1)
        .map(|l| {
            let f: Vec<&str> = l.split(',').collect();
            (
                (f[0].parse().unwrap(), f[1].parse().unwrap()),
                f[13].parse().unwrap(),
            )
        })
        .collect();
    for n in [480u64, 998] {
        assert!(links[&(n, 80)] <= links[&(n, 40)], "n={n}: {links:?}");
    }
}
