use montes_lite::cli::{run, scan, ScanParams, CSV_HEADER, EXIT_INPUT, EXIT_IO, EXIT_MAXIMAL, EXIT_NON_MONOGENIC, EXIT_UNDECIDED};
use montes_lite::monogen::Variant;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("montes-lite").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn classify_code(u: &str, v: &str, t: &str, m: &str) -> i32 {
    call(&["classify", "--u", u, "--v", v, "--t", t, "--m", m]).0
}

#[test]
fn classify_exit_codes() {
    assert_eq!(classify_code("1", "1", "1", "2"), EXIT_MAXIMAL);
    assert_eq!(classify_code("1", "1", "1", "-7"), EXIT_NON_MONOGENIC);
    assert_eq!(classify_code("1", "2", "1", "35"), EXIT_UNDECIDED);
    assert_eq!(classify_code("1", "1", "1", "4"), EXIT_INPUT);
    assert_eq!(classify_code("1", "1", "1", "1"), EXIT_INPUT);
    assert_eq!(classify_code("0", "1", "1", "2"), EXIT_INPUT);
    assert_eq!(classify_code("1", "1", "1", "two"), EXIT_INPUT);
    assert_eq!(call(&["classify", "--u", "1"]).0, EXIT_INPUT);
}

#[test]
fn classify_text_and_json() {
    let (code, out, _) = call(&["classify", "--u", "1", "--v", "1", "--t", "1", "--m", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("Z[α] is the ring of integers"));

    let (_, out, _) = call(&["classify", "--u", "1", "--v", "1", "--t", "1", "--m", "-7", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["kind"], "NonMonogenic");
    assert_eq!(v["maximal"], false);
    assert_eq!(v["variant"], "proof");
    let rule = &v["rules"][0];
    assert_eq!(rule["id"], "R1");
    assert_eq!(rule["p"], 2);
    assert_eq!(rule["f"], 2);
    assert_eq!(rule["N_f"], 1);
    assert!(rule["P_f_bound"].as_u64().unwrap() > 1);
}

#[test]
fn classify_with_supplied_factorization() {
    let (code, _, _) =
        call(&["classify", "--u", "1", "--v", "1", "--t", "1", "--m", "-35", "--m-factored", "5,7"]);
    assert_eq!(code, classify_code("1", "1", "1", "-35"));
    let (code, _, err) = call(&["classify", "--u", "1", "--v", "1", "--t", "1", "--m", "35", "--m-factored", "5,11"]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("55"));
}

#[test]
fn scan_csv_is_sorted_and_matches_classify() {
    let (code, out, err) = call(&["scan", "--m-from", "-20", "--m-to", "20", "--u", "1", "--v", "1", "--t", "1"]);
    assert_eq!(code, 0);
    assert!(err.contains("skipped"));
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some(CSV_HEADER));
    let ms: Vec<i64> = lines.map(|l| l.split(',').nth(3).unwrap().parse().unwrap()).collect();
    assert!(ms.windows(2).all(|w| w[0] < w[1]));
    assert!(!ms.contains(&4) && !ms.contains(&1) && !ms.contains(&0));
    for row in out.lines().skip(1) {
        let cols: Vec<&str> = row.split(',').collect();
        let expected = match cols[6] {
            "MaximalMonogenic" => EXIT_MAXIMAL,
            "NonMonogenic" => EXIT_NON_MONOGENIC,
            _ => EXIT_UNDECIDED,
        };
        assert_eq!(classify_code("1", "1", "1", cols[3]), expected, "{row}");
    }
}

#[test]
fn scan_empty_range_prints_header_only() {
    let (code, out, _) = call(&["scan", "--m-from", "5", "--m-to", "1", "--u", "1", "--v", "1", "--t", "1"]);
    assert_eq!(code, 0);
    assert_eq!(out, format!("{CSV_HEADER}\n"));
}

#[test]
fn scan_json_and_file_output() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rows.json");
    let (code, out, _) = call(&[
        "scan", "--m-from", "2", "--m-to", "30", "--u", "1", "--v", "1", "--t", "1", "--format", "json", "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let rows: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let rows = rows.as_array().unwrap();
    assert!(!rows.is_empty());
    assert_eq!(rows[0]["m"], 2);
    assert_eq!(rows[0]["maximal"], true);

    let bad = dir.path().join("missing").join("rows.csv");
    let (code, _, _) =
        call(&["scan", "--m-from", "2", "--m-to", "3", "--u", "1", "--v", "1", "--t", "1", "--out", bad.to_str().unwrap()]);
    assert_eq!(code, EXIT_IO);
}

#[test]
fn scan_does_not_depend_on_workers() {
    let params = |w| ScanParams { m_from: -150, m_to: 150, u: 1, v: 1, t: 1, workers: Some(w), variant: Variant::Proof };
    let one = scan(&params(1)).unwrap().csv();
    let many = scan(&params(7)).unwrap().csv();
    assert_eq!(one, many);
}

#[test]
fn polygon_text_and_svg() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("fig.svg");
    let (code, out, _) =
        call(&["polygon", "--poly", "x^30 + 7", "--p", "2", "--phi", "x^2 + x + 1", "--svg", svg.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("vertices: (0,3) (1,1) (2,0)"));
    assert!(out.contains("ind_phi = 2"));
    let picture = std::fs::read_to_string(&svg).unwrap();
    assert!(picture.starts_with("<svg") && picture.contains("(1,1)"));
}

#[test]
fn polygon_json_is_the_report() {
    let (code, out, _) = call(&["polygon", "--poly", "x^30 + 7", "--p", "2", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["p"], 2);
    assert_eq!(v["regular"], true);
    assert_eq!(v["sites"].as_array().unwrap().len(), 5);
}

#[test]
fn polygon_rejects_reducible_phi_with_hint() {
    let (code, _, err) = call(&["polygon", "--poly", "x^30 + 7", "--p", "2", "--phi", "x^2 + 1"]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("reducible"));
    assert!(err.contains("try --phi"));
    let (code, _, _) = call(&["polygon", "--poly", "x^30 + 7", "--p", "4"]);
    assert_eq!(code, EXIT_INPUT);
    let (code, _, _) = call(&["polygon", "--poly", "2x^3 + 1", "--p", "3"]);
    assert_eq!(code, EXIT_INPUT);
}

#[test]
fn factor_table() {
    let (code, out, _) = call(&["factor", "--poly", "x^6 + 2", "--p", "5"]);
    assert_eq!(code, 0);
    for q in ["x^2 + 3", "x^2 + 2x + 3", "x^2 + 3x + 3"] {
        assert!(out.lines().any(|l| l.starts_with(q) && l.trim_end().ends_with('1')), "{q}");
    }
    let (code, _, err) = call(&["factor", "--poly", "x^2 +", "--p", "5"]);
    assert_eq!(code, EXIT_INPUT);
    assert!(!err.is_empty());
}

#[test]
fn binary_runs() {
    let exe = env!("CARGO_BIN_EXE_montes-lite");
    let status = std::process::Command::new(exe)
        .args(["classify", "--u", "1", "--v", "1", "--t", "1", "--m", "-7"])
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(EXIT_NON_MONOGENIC));
}
