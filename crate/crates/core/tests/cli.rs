use johan::cli::{dispatch, EXIT_HARD_FAILURE, EXIT_OK, EXIT_SCALE, EXIT_USAGE};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("johan").chain(args.iter().copied());
    let code = dispatch(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> serde_json::Value {
    let (code, out, err) = run(args);
    assert_eq!(code, EXIT_OK, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn compute_cycle_six() {
    let v = json(&["compute", "--family", "cycle", "--n", "6", "--format", "json"]);
    assert_eq!(v["j"]["j"], 3);
    assert_eq!(v["j_star"]["j"], 3);
    assert_eq!(v["chromatic_number"], 2);
    assert_eq!(v["j"]["witness"], serde_json::json!([1, 2, 3, 1, 2, 3]));
    assert_eq!(v["r_chi"]["canonical"], 6);
}

#[test]
fn compute_star_internal() {
    let v = json(&["compute", "--family", "star", "--n", "4", "--mode", "internal", "--format", "json"]);
    assert_eq!(v["j_star"]["j"], 5);
    assert!(v.get("j").is_none());
    let (_, text, _) = run(&["compute", "--family", "star", "--n", "4", "--mode", "internal"]);
    assert!(text.contains("J* = 5"), "{text}");
}

#[test]
fn compute_csv_and_inadmissible() {
    let (code, out, _) = run(&["compute", "--family", "cycle", "--n", "5", "--format", "csv"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "graph,n,p,chi,r_chi,j,j_star\nC5,5,5,3,3,none,none\n");
}

#[test]
fn compute_from_file() {
    let dir = std::env::temp_dir().join(format!("johan-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("p4.txt");
    std::fs::write(&path, "4 3\n0 1\n1 2\n2 3\n").unwrap();
    let v = json(&["compute", "--input", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!((v["j"]["j"].as_u64(), v["j_star"]["j"].as_u64()), (Some(2), Some(3)));
    let g6 = dir.join("k3.g6");
    std::fs::write(&g6, "Bw\n").unwrap();
    let v = json(&["compute", "--input", g6.to_str().unwrap(), "--input-format", "graph6", "--format", "json"]);
    assert_eq!(v["j"]["j"], 3);
    let bad = dir.join("bad.txt");
    std::fs::write(&bad, "4 2\n0 1\n").unwrap();
    let (code, _, err) = run(&["compute", "--input", bad.to_str().unwrap()]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("error"), "{err}");
}

#[test]
fn extremal_complete_four() {
    let (code, out, _) = run(&["extremal", "--family", "complete", "--n", "4", "--k", "3"]);
    assert_eq!(code, EXIT_OK);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("k,r_minus,r_plus,semantics,witness_edges"));
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(&row[..4], &["3", "1", "1", "connected_for_k_ge_2"]);
    assert_eq!(row[4], "0-1");
}

#[test]
fn extremal_plain_counterexample_and_table() {
    let (_, out, _) = run(&["extremal", "--family", "complete", "--n", "4", "--semantics", "plain"]);
    let rows: Vec<Vec<&str>> = out.lines().skip(1).map(|l| l.split(',').collect()).collect();
    let ks: Vec<&str> = rows.iter().map(|r| r[0]).collect();
    assert_eq!(ks, ["4", "3", "2", "1"]);
    assert_eq!(rows[2][2], "4");
    assert_eq!(rows[3][1..3], ["6", "6"]);
}

#[test]
fn extremal_repair() {
    let v = json(&["extremal", "--family", "cycle", "--n", "5", "--repair", "--format", "json"]);
    assert_eq!(v["removed"].as_array().unwrap().len(), 1);
    assert_eq!(v["j"], 2);
}

#[test]
fn derive_and_combine() {
    let (code, out, _) = run(&["derive", "--family", "path", "--n", "2", "--kind", "middle"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "3 2\n0 2\n1 2\n");
    let (_, out, _) = run(&["derive", "--family", "complete", "--n", "3", "--kind", "line", "--graph6"]);
    assert_eq!(out.trim(), "Bw");
    let v = json(&["combine", "--left", "path:3", "--right", "cycle:4", "--kind", "cartesian", "--format", "json"]);
    assert_eq!(v["order"], 12);
    assert_eq!(v["edges"].as_array().unwrap().len(), 3 * 4 + 4 * 2);
    let (code, _, _) = run(&["combine", "--left", "complete:1", "--right", "cycle:3", "--kind", "corona", "--format", "csv"]);
    assert_eq!(code, EXIT_OK);
}

#[test]
fn table_of_cycles() {
    let (code, out, _) = run(&["table", "--family", "cycle", "--from", "3", "--to", "6"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(
        out,
        "graph,n,p,chi,j,j_star\nC3,3,3,3,3,3\nC4,4,4,2,2,2\nC5,5,5,3,none,none\nC6,6,6,2,3,3\n"
    );
}

#[test]
fn usage_errors() {
    assert_eq!(run(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(run(&["compute", "--family", "cycle", "--n", "6", "--bogus"]).0, EXIT_USAGE);
    assert_eq!(run(&["compute", "--family", "wheel", "--n", "6"]).0, EXIT_USAGE);
    assert_eq!(run(&["compute"]).0, EXIT_USAGE);
    assert_eq!(run(&["extremal", "--family", "complete", "--n", "4", "--k", "5"]).0, EXIT_USAGE);
    assert_eq!(run(&["compute", "--family", "cycle", "--n", "2"]).0, EXIT_USAGE);
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("compute"));
}

#[test]
fn scale_refusals() {
    let (code, _, err) = run(&["compute", "--family", "cycle", "--n", "13"]);
    assert_eq!(code, EXIT_SCALE, "{err}");
    assert_eq!(run(&["extremal", "--family", "complete", "--n", "8", "--k", "7"]).0, EXIT_SCALE);
    assert_eq!(run(&["compute", "--family", "cycle", "--n", "13", "--max-order", "13"]).0, EXIT_OK);
}

#[test]
fn verify_with_config_file() {
    let dir = std::env::temp_dir().join(format!("johan-verify-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let (code, out, _) = run(&["verify", "--print-default-config"]);
    assert_eq!(code, EXIT_OK);
    let mut cfg: serde_json::Value = serde_json::from_str(&out).unwrap();

    cfg["caps"]["extremal_max_size"] = 40.into();
    let path = dir.join("too_big.json");
    std::fs::write(&path, cfg.to_string()).unwrap();
    assert_eq!(run(&["verify", "--config", path.to_str().unwrap()]).0, EXIT_SCALE);

    cfg["caps"]["extremal_max_size"] = 21.into();
    cfg["product_factors"] = serde_json::json!(["path:3", "complete:3"]);
    cfg["random_graphs"]["count"] = 10.into();
    let path = dir.join("small.json");
    std::fs::write(&path, cfg.to_string()).unwrap();
    let (code, out, err) = run(&["verify", "--config", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK, "{err}");
    let report: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["summary"]["hard_failures"], 0);
    assert!(report["claims"].as_array().unwrap().iter().all(|r| r.get("runtime_ms").is_none()));

    cfg["product_factors"] = serde_json::json!(["path:3", "cycle:4"]);
    std::fs::write(&path, cfg.to_string()).unwrap();
    let (code, out, _) = run(&["verify", "--config", path.to_str().unwrap(), "--format", "text"]);
    assert_eq!(code, EXIT_HARD_FAILURE);
    assert!(out.contains("[HARD] Thm-3.3 (P3□C4) [J]: predicted 2, computed 4"), "{out}");

    std::fs::write(&path, "{\"paths\": 3}").unwrap();
    assert_eq!(run(&["verify", "--config", path.to_str().unwrap()]).0, EXIT_USAGE);
}
