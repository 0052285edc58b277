use std::io::Write;
use std::process::{Command, Output, Stdio};

fn webfold(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_webfold"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn fold_the_running_tableau() {
    let o = webfold(&["op", "--apply", "fold", "--word", "111122213132223333"], "");
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().next(), Some("112212121133332323"));
    let o = webfold(&["op", "--apply", "evacuate", "--word", "111122213132223333", "--format", "json"], "");
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["word"], "111122213132223333");
}

#[test]
fn fixture_through_the_binary() {
    let fixture = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures/running_web.json");
    let o = webfold(&["web3", "to-domino", "--in", fixture], "");
    assert_eq!(stdout(&o).trim(), "112212121133332323");
    let out = std::env::temp_dir().join(format!("webfold-running-{}.svg", std::process::id()));
    let o = webfold(&["render", "--in", fixture, "--out", out.to_str().unwrap()], "");
    assert!(o.status.success());
    let svg = std::fs::read_to_string(&out).unwrap();
    std::fs::remove_file(&out).unwrap();
    assert!(svg.starts_with("<svg"));
}

#[test]
fn exit_codes() {
    let bad_word = webfold(&["op", "--apply", "promote", "--word", "2"], "");
    assert_eq!(bad_word.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad_word.stderr).starts_with("NonLatticeWord"));
    assert_eq!(webfold(&["op", "--word", "12"], "").status.code(), Some(2));
    let garbage = webfold(&["web3", "to-tableau"], "{ not json");
    assert_eq!(garbage.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&garbage.stderr).starts_with("Parse"));
}

#[test]
fn verify_json_report() {
    let o = webfold(&["verify", "--theorem", "thm-fw2", "--max-n", "0", "--max-n-3", "4", "--format", "json"], "");
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["theorem"], "thm-fw2");
    assert_eq!(v["instances"], 40);
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
}
