use std::io::Write;
use std::process::{Command, Output, Stdio};

fn popcheck(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_popcheck"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    if let Some(s) = stdin {
        child.stdin.take().unwrap().write_all(s.as_bytes()).unwrap();
    }
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_passes_with_exit_zero() {
    let o = popcheck(&["verify", "--identity", "box", "--params", "r=2,c=2", "--max-q", "10"], None);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS box"));
}

#[test]
fn verify_json() {
    let o = popcheck(
        &["verify", "--identity", "det-hook", "--params", "lambda=[1,1]", "--max-q", "12", "--format", "json"],
        None,
    );
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["status"], "pass");
    assert_eq!(v[0]["truncation"], 12);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(popcheck(&["verify", "--identity", "nope"], None).status.code(), Some(2));
    assert_eq!(popcheck(&["verify", "--identity", "box", "--params", "r=2"], None).status.code(), Some(2));
    assert_eq!(popcheck(&["frobnicate"], None).status.code(), Some(2));
}

#[test]
fn suite_files() {
    let dir = std::env::temp_dir().join(format!("popcheck-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let empty = dir.join("empty.toml");
    std::fs::write(&empty, "").unwrap();
    let o = popcheck(&["suite", "--suite", empty.to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).is_empty());

    let unknown = dir.join("unknown.toml");
    std::fs::write(&unknown, "[[check]]\nid = \"nope\"\nmax_q = 3\n").unwrap();
    let o = popcheck(&["suite", "--suite", unknown.to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).starts_with("ERROR nope"));

    let two = dir.join("two.toml");
    std::fs::write(
        &two,
        "[[check]]\nid = \"odd-parts\"\nmax_q = 6\n[[check]]\nid = \"box\"\nparams = { r = 1, c = 2 }\nmax_q = 6\n",
    )
    .unwrap();
    let o = popcheck(&["suite", "--suite", two.to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(0));
    let ids: Vec<String> = stdout(&o).lines().map(|l| l.split(' ').nth(1).unwrap().to_string()).collect();
    assert_eq!(ids, ["odd-parts", "box"]);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn tile_is_deterministic() {
    let args = ["tile", "--pop", "7 4 3' 2 2'/3 3 3' 2'/3' 2 1'/2", "--format", "svg"];
    let a = popcheck(&args, None);
    let b = popcheck(&args, None);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    // window t in -5..=6, x in -1..=8, one domino per white square
    assert_eq!(stdout(&a).matches("<polygon").count(), 12 * 10);
    let ascii = popcheck(&["tile", "--pop", "1'", "--window", "-2,2,-1,2"], None);
    let body: Vec<String> = stdout(&ascii).lines().skip(2).map(String::from).collect();
    assert_eq!(body, ["|||..", "||\\..", "||.|.", "||.|."]);
}

#[test]
fn bijection_from_stdin() {
    let o = popcheck(
        &["bijection", "rsk"],
        Some(r#"{"matrix": [[0, 2, 1, 0], [2, 0, 1, 0], [1, 1, 0, 1], [0, 0, 1, 1]]}"#),
    );
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["consistent"], true);
    assert_eq!(v["before"], v["after"]);
    let bad = popcheck(&["bijection", "tiling"], Some("{"));
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn enum_lines() {
    let o = popcheck(&["enum", "--max-weight", "2"], None);
    assert_eq!(o.status.code(), Some(0));
    let weights: Vec<u64> = stdout(&o)
        .lines()
        .map(|l| {
            let rows: Vec<Vec<serde_json::Value>> = serde_json::from_str(l).unwrap();
            rows.iter().flatten().map(|e| e["v"].as_u64().unwrap()).sum()
        })
        .collect();
    assert_eq!(weights.iter().filter(|&&w| w == 2).count(), 6);
}
