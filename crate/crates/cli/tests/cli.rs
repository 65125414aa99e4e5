use std::process::{Command, Output};

fn msv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_msv")).args(args).env_remove("MSV_WORKERS").output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn compute_examples() {
    let out = msv(&["compute", "3412"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("complexity d = 2"));
    assert!(stdout(&msv(&["compute", "54132"])).contains("complexity d = 4"));
    assert_eq!(stdout(&msv(&["compute", "3,4,1,2"])), stdout(&out));
    assert_eq!(stdout(&msv(&["compute", "[3,4,1,2]"])), stdout(&out));
}

#[test]
fn json_and_human_agree() {
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&msv(&["compute", "54132", "--format", "json", "--rank"]))).unwrap();
    assert_eq!(json["w"], "54132");
    assert_eq!(json["complexity"], 4);
    assert_eq!(json["cone_dim_rank"], json["cone_dim"]);
    let human = stdout(&msv(&["compute", "54132"]));
    assert!(human.contains(&format!("|V| = {}, |comp| = {}", json["vertex_count"], json["component_count"])));
    assert!(human.contains(&format!("dim MSV_w = {}, dim Y_w = {}", json["dim_msv"], json["dim_y"])));
    let csv = stdout(&msv(&["compute", "3412", "--format", "csv"]));
    assert_eq!(csv.lines().nth(1), Some("\"3412\",4,2,2,1,9,8,7,6,1,5,14,7,4,2"));
}

#[test]
fn parse_errors_exit_one() {
    for args in [
        &["compute", "3413"][..],
        &["compute", "abc"],
        &["bogus"],
        &["compute"],
        &["render", "3412", "--layers", ""],
        &["render", "3412", "--layers", "dots,nope"],
        &["verify", "maximum-ish", "4..5"],
        &["verify", "max", "7..4"],
    ] {
        let out = msv(args);
        assert_eq!(code(&out), 1, "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    assert_eq!(code(&msv(&["--help"])), 0);
}

#[test]
fn render_outputs() {
    let ascii = stdout(&msv(&["render", "34512", "--layers", "dots,lasers,opposite_rothe"]));
    assert!(ascii.contains("5  # # ● - -"));
    assert!(ascii.contains("2  | | | # ●"));
    let graph = stdout(&msv(&["render", "3412", "--layers", "graph"]));
    assert_eq!(graph.matches("->").count(), 8);
    assert!(!graph.contains("4->1\u{0304}"));
    let empty = stdout(&msv(&["render", "1234", "--layers", "l"]));
    let grid: Vec<&str> = empty.lines().skip(2).take(4).collect();
    assert!(grid.iter().all(|row| row[2..].split_whitespace().all(|m| m == ".")), "{empty}");

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fig.tex");
    let args = ["render", "54132", "--target", "tikz", "--layers", "dots,lasers,l,graph", "--labels"];
    let out = msv(&[&args[..], &["-o", path.to_str().unwrap()]].concat());
    assert_eq!(code(&out), 0);
    let first = std::fs::read_to_string(&path).unwrap();
    assert!(first.contains("\\begin{tikzpicture}"));
    assert_eq!(stdout(&msv(&args)), first);
}

#[test]
fn spectrum_tables() {
    let four = stdout(&msv(&["spectrum", "4"]));
    let ds: Vec<&str> = four.lines().skip(2).take_while(|l| !l.starts_with("max")).map(|l| l.split_whitespace().next().unwrap()).collect();
    assert_eq!(ds, ["0", "2", "3"]);
    let five = stdout(&msv(&["spectrum", "5", "--serial"]));
    assert!(five.contains("max complexity 8 (54312)"));
    assert_eq!(five.lines().skip(2).take_while(|l| !l.starts_with("max")).count(), 8);

    let out = msv(&["spectrum", "12"]);
    assert_eq!(code(&out), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("exhaustive limit"));
    assert_eq!(code(&msv(&["spectrum", "12", "--sample", "200", "--seed", "3"])), 0);
}

#[test]
fn sampled_spectrum_is_reproducible() {
    let a = msv(&["spectrum", "10", "--sample", "300", "--seed", "42", "--format", "json"]);
    let b = msv(&["spectrum", "10", "--sample", "300", "--seed", "42", "--format", "json"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn workers_do_not_change_results() {
    let one = Command::new(env!("CARGO_BIN_EXE_msv"))
        .args(["spectrum", "6", "--format", "json"])
        .env("MSV_WORKERS", "1")
        .output()
        .unwrap();
    let many = msv(&["spectrum", "6", "--format", "json", "--workers", "3"]);
    assert_eq!(one.stdout, many.stdout);
}

#[test]
fn cache_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let csv = dir.path().join("r.csv");
    let first = msv(&["spectrum", "5", "--cache", cache, "--reports-csv", csv.to_str().unwrap()]);
    assert_eq!(code(&first), 0);
    assert!(dir.path().join("spectrum-n5.json").exists());
    assert_eq!(std::fs::read_to_string(&csv).unwrap().lines().count(), 121);
    let second = msv(&["spectrum", "5", "--cache", cache]);
    assert_eq!(first.stdout, second.stdout);
    assert!(String::from_utf8_lossy(&second.stderr).contains("re-verified"));

    let path = dir.path().join("spectrum-n5.json");
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::write(&path, text.replace("\"54312\"", "\"54321\"")).unwrap();
    assert_eq!(code(&msv(&["spectrum", "5", "--cache", cache])), 2);
}

#[test]
fn verify_ranges() {
    let out = msv(&["verify", "max", "4..7"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let maxima: Vec<&str> = text.lines().map(|l| l.split("d_max=").nth(1).unwrap().split(' ').next().unwrap()).collect();
    assert_eq!(maxima, ["3", "8", "15", "24"]);
    assert!(text.lines().all(|l| l.starts_with("PASS")));
    let unique = stdout(&msv(&["verify", "unique", "4..6"]));
    for w in ["[4312]", "[54312]", "[654312]"] {
        assert!(unique.contains(w));
    }
    let all = msv(&["verify", "all", "2..5"]);
    assert_eq!(code(&all), 1, "max value is not defined below n = 4");
    let ok = msv(&["verify", "all", "4..6"]);
    assert_eq!(stdout(&ok).lines().count(), 12);
    assert_eq!(code(&msv(&["verify", "no-one", "2..7"])), 0);
    assert_eq!(code(&msv(&["verify", "spectrum", "12", "--max-n", "11"])), 3);
}

#[test]
fn witness_and_compose() {
    assert_eq!(stdout(&msv(&["witness", "5", "8"])).trim(), "54312, verified d=8");
    let six = stdout(&msv(&["witness", "6", "4"]));
    assert!(six.trim().ends_with("verified d=4"));
    let w = six.split(',').next().unwrap();
    assert!(stdout(&msv(&["compute", w])).contains("complexity d = 4"));
    let refused = msv(&["witness", "6", "1"]);
    assert_eq!(code(&refused), 1);
    assert!(String::from_utf8_lossy(&refused.stderr).contains("complexity 1"));
    assert_eq!(code(&msv(&["witness", "6", "16"])), 1);

    let out = msv(&["compose", "54312", "123", "2"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("34512\n"));
    assert_eq!(code(&msv(&["compose", "3412", "1", "3"])), 1);
}
