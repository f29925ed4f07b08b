use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

use tempfile::NamedTempFile;

fn fixture() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures/table1.problem")
}

fn hvas(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hvas"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    assert!(
        output.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn temp(contents: &str) -> NamedTempFile {
    let mut file = NamedTempFile::new().unwrap();
    file.write_all(contents.as_bytes()).unwrap();
    file
}

fn path(file: &NamedTempFile) -> &str {
    file.path().to_str().unwrap()
}

#[test]
fn rank_fixture() {
    let fixture = fixture();
    let text = stdout(&hvas(&["rank", fixture.to_str().unwrap()]));
    assert!(text.contains("| hvas | X3 > X1 > X2 |"), "{text}");
    for (name, score) in [("X1", "-0.36"), ("X2", "-0.42"), ("X3", "-0.29")] {
        assert!(text.contains(&format!("| {name} | {score} |")), "{text}");
    }
}

#[test]
fn rank_json_scores() {
    let fixture = fixture();
    let text = stdout(&hvas(&[
        "rank",
        fixture.to_str().unwrap(),
        "--format",
        "json",
    ]));
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    let scores: Vec<f64> = value["rankings"][0]["scores"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s.as_f64().unwrap())
        .collect();
    for (got, want) in scores.iter().zip([-0.36, -0.42, -0.29]) {
        assert!((got - want).abs() < 1e-12);
    }
}

#[test]
fn audit_reports_counterexample() {
    let text = stdout(&hvas(&[
        "audit",
        "--measure",
        "euclidean2",
        "--budget",
        "10000",
        "--seed",
        "7",
    ]));
    assert!(text.contains("Verdict: not robust"), "{text}");
    assert!(
        text.contains("| 1 | (0, 0.5) | (0.353553, 0.646447) |"),
        "{text}"
    );
    assert!(text.contains("robust_on_budget = false"));
}

#[test]
fn audit_hamming_is_clean() {
    let text = stdout(&hvas(&[
        "audit",
        "--measure",
        "hamming",
        "--budget",
        "20000",
        "--format",
        "csv",
    ]));
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 1);
    assert_eq!(&rows[0][0], "hamming");
    assert_eq!(&rows[0][1], "true");
}

#[test]
fn audit_with_problem_ranks_against_both_ideals() {
    let fixture = fixture();
    let text = stdout(&hvas(&[
        "audit",
        fixture.to_str().unwrap(),
        "--measure",
        "hamming",
        "--budget",
        "100",
    ]));
    assert!(text.contains("| hamming/PIS | X3 > X2 = X1 |"), "{text}");
    assert!(text.contains("| hamming/NIS | X3 > X2 = X1 |"), "{text}");
    assert!(text.contains("problem.robust = true"));
}

#[test]
fn hv_of_two_points() {
    let points = temp("# two points\n0.5,0.2\n0.2,0.5\n");
    let text = stdout(&hvas(&["hv", "--reference", "0,0", path(&points)]));
    assert!(text.contains("| 2 | 2 | (0, 0) | 0.16 |"), "{text}");
    let csv_text = stdout(&hvas(&[
        "hv",
        "--reference",
        "0,0",
        path(&points),
        "--format",
        "csv",
    ]));
    let mut reader = csv::Reader::from_reader(csv_text.as_bytes());
    let row = reader.records().next().unwrap().unwrap();
    assert!((row[3].parse::<f64>().unwrap() - 0.16).abs() < 1e-12);
}

#[test]
fn hv_monte_carlo_estimate() {
    let points = temp("0.5,0.2\n0.2,0.5\n");
    let text = stdout(&hvas(&[
        "hv",
        path(&points),
        "--samples",
        "200000",
        "--seed",
        "3",
        "--format",
        "json",
    ]));
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    let estimate = &value["estimate"];
    let gap = (estimate["value"].as_f64().unwrap() - 0.16).abs();
    assert!(gap <= 3.0 * estimate["stderr"].as_f64().unwrap());
}

#[test]
fn compare_lists_every_method() {
    let fixture = fixture();
    let text = stdout(&hvas(&[
        "compare",
        fixture.to_str().unwrap(),
        "--methods",
        "hvas,topsis,codas",
        "--tau",
        "0.05",
    ]));
    assert!(
        text.contains("| Alternative | hvas | topsis | codas |"),
        "{text}"
    );
    assert!(text.contains("topsis.config.tau = 0.05"));
    assert!(!text.contains("vikor"));
}

#[test]
fn axioms_single_measure() {
    let text = stdout(&hvas(&[
        "axioms",
        "--measure",
        "hausdorff",
        "--samples",
        "2000",
    ]));
    assert!(
        text.contains("| hausdorff | 2000 | ok | ok | ok | metric |"),
        "{text}"
    );
}

#[test]
fn invalid_cell_is_a_data_error() {
    let text = std::fs::read_to_string(fixture())
        .unwrap()
        .replace("[0.6, 0.3]", "[0.7, 0.5]");
    let file = temp(&text);
    let output = hvas(&["rank", path(&file)]);
    assert_eq!(output.status.code(), Some(3));
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert!(stderr.contains("evaluations.DM1[2][1]"), "{stderr}");
}

#[test]
fn missing_expertise_is_a_data_error() {
    let text = std::fs::read_to_string(fixture()).unwrap();
    let file = temp(&text[..text.find("[expertise]").unwrap()]);
    let output = hvas(&["rank", path(&file)]);
    assert_eq!(output.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&output.stderr).contains("expertise: missing"));
}

#[test]
fn zero_expertise_is_degenerate() {
    let text = std::fs::read_to_string(fixture())
        .unwrap()
        .replace("DM1 = [1.0, 1.0]", "DM1 = [0.0, 1.0]");
    let file = temp(&text);
    let output = hvas(&["rank", path(&file)]);
    assert_eq!(output.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&output.stderr).contains("`c1`"));
}

#[test]
fn usage_errors() {
    let fixture = fixture();
    let fixture = fixture.to_str().unwrap();
    assert_eq!(
        hvas(&["rank", fixture, "--alpha", "2"]).status.code(),
        Some(2)
    );
    assert_eq!(hvas(&["rank", fixture, "--bogus"]).status.code(), Some(2));
    assert_eq!(
        hvas(&["audit", "--measure", "cosine"]).status.code(),
        Some(2)
    );
    assert_eq!(
        hvas(&["axioms", "--measure", "hamming", "--all"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        hvas(&["compare", fixture, "--methods", "electre"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        hvas(&["rank", fixture, "--reference", "-1,-1,-1"])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn missing_file_is_a_data_error() {
    let output = hvas(&["rank", "/nonexistent/problem.toml"]);
    assert_eq!(output.status.code(), Some(3));
}

#[test]
fn output_is_deterministic() {
    let fixture = fixture();
    let fixture = fixture.to_str().unwrap();
    for format in ["md", "json", "csv"] {
        let args = ["compare", fixture, "--format", format];
        assert_eq!(hvas(&args).stdout, hvas(&args).stdout);
        let audit = ["audit", "--seed", "11", "--format", format];
        assert_eq!(hvas(&audit).stdout, hvas(&audit).stdout);
    }
}

#[test]
fn csv_round_trips() {
    let fixture = fixture();
    let text = stdout(&hvas(&[
        "compare",
        fixture.to_str().unwrap(),
        "--format",
        "csv",
    ]));
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    assert_eq!(
        reader.headers().unwrap(),
        vec!["method", "alternative", "score", "rank"]
    );
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 12);

    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record(["method", "alternative", "score", "rank"])
        .unwrap();
    for row in &rows {
        writer.write_record(row).unwrap();
    }
    assert_eq!(
        String::from_utf8(writer.into_inner().unwrap()).unwrap(),
        text
    );

    let hvas_x3 = rows
        .iter()
        .find(|r| &r[0] == "hvas" && &r[1] == "X3")
        .unwrap();
    assert_eq!(&hvas_x3[3], "1");
}
