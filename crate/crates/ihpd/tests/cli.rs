use std::path::Path;
use std::process::{Command, Output};

use ihpd::formats::{MessageFile, WordFile};
use ihpd::sim;

fn ihpd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ihpd"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn params_reports_radius() {
    let out = ihpd(&[
        "params", "--q", "4", "--mH", "15", "--h", "2", "--s", "2", "--l", "3",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    for line in [
        "n=64",
        "k=10",
        "g=6",
        "d*=49",
        "t_new=35",
        "t_K=32",
        "tau_max=155/2",
    ] {
        assert!(text.lines().any(|l| l == line), "missing {line} in\n{text}");
    }
    let out = ihpd(&[
        "params", "--q", "5", "--mH", "55", "--h", "1", "--s", "2", "--l", "3",
    ]);
    assert!(stdout(&out).lines().any(|l| l == "t_new=36"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(
        ihpd(&["params", "--q", "4", "--mH", "100"]).status.code(),
        Some(2)
    );
    assert_eq!(
        ihpd(&["params", "--q", "4", "--mH", "15", "--s", "3", "--l", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        ihpd(&["params", "--q", "6", "--mH", "15"]).status.code(),
        Some(2)
    );
    assert_eq!(ihpd(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(ihpd(&["compare", "--q", "8"]).status.code(), Some(2));
}

#[test]
fn compare_rows() {
    let text = stdout(&ihpd(&["compare", "--q", "32", "--k", "16384"]));
    for line in ["t_RS=9598", "t_IRS=12126", "t_IH=12844"] {
        assert!(text.lines().any(|l| l == line), "missing {line} in\n{text}");
    }
    let text = stdout(&ihpd(&["compare", "--q", "8", "--rate", "0.5"]));
    assert!(
        text.contains("t_IH=183")
            && text.contains("t_IH/t_RS=1.220")
            && text.contains("t_IH/t_IRS=0.963")
    );
}

#[test]
fn radii_lists_all_pairs() {
    let text = stdout(&ihpd(&[
        "radii", "--q", "4", "--mH", "15", "--h", "2", "--l-max", "3",
    ]));
    assert_eq!(text.lines().count(), 1 + 6);
    assert!(text.lines().any(
        |l| l.split_whitespace().collect::<Vec<_>>() == ["3", "2", "155/2", "35", "32", "true"]
    ));
}

#[test]
fn encode_corrupt_decode_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let msgs = dir.path().join("msgs.json");
    let word = dir.path().join("word.json");
    let received = dir.path().join("received.json");
    let decoded = dir.path().join("decoded.json");
    let out = ihpd(&[
        "encode",
        "--q",
        "4",
        "--mH",
        "15",
        "--h",
        "2",
        "--seed",
        "5",
        "--messages-out",
        path(&msgs),
        "--out",
        path(&word),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let out = ihpd(&[
        "corrupt",
        "--input",
        path(&word),
        "--t",
        "30",
        "--seed",
        "9",
        "--out",
        path(&received),
    ]);
    assert!(out.status.success());
    let out = ihpd(&[
        "decode",
        "--input",
        path(&received),
        "--s",
        "2",
        "--l",
        "3",
        "--out",
        path(&decoded),
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let original: MessageFile =
        serde_json::from_str(&std::fs::read_to_string(&msgs).unwrap()).unwrap();
    let recovered: MessageFile =
        serde_json::from_str(&std::fs::read_to_string(&decoded).unwrap()).unwrap();
    assert_eq!(original, recovered);

    // Re-encoding the messages file reproduces the word.
    let again = dir.path().join("again.json");
    let out = ihpd(&[
        "encode",
        "--q",
        "4",
        "--mH",
        "15",
        "--h",
        "2",
        "--messages",
        path(&msgs),
        "--out",
        path(&again),
    ]);
    assert!(out.status.success());
    let a: WordFile = serde_json::from_str(&std::fs::read_to_string(&word).unwrap()).unwrap();
    let b: WordFile = serde_json::from_str(&std::fs::read_to_string(&again).unwrap()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn decode_failure_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let word = dir.path().join("word.json");
    let received = dir.path().join("received.json");
    assert!(ihpd(&[
        "encode",
        "--q",
        "3",
        "--mH",
        "8",
        "--seed",
        "1",
        "--out",
        path(&word)
    ])
    .status
    .success());
    assert!(ihpd(&[
        "corrupt",
        "--input",
        path(&word),
        "--t",
        "27",
        "--seed",
        "2",
        "--out",
        path(&received)
    ])
    .status
    .success());
    let out = ihpd(&["decode", "--input", path(&received), "--s", "1", "--l", "1"]);
    assert_eq!(out.status.code(), Some(1));
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"q":3,"mH":8,"h":1,"rows":[[[0,0]]]}"#).unwrap();
    assert_eq!(
        ihpd(&["decode", "--input", path(&bad), "--s", "1", "--l", "1"])
            .status
            .code(),
        Some(2)
    );
    let missing = dir.path().join("missing.json");
    assert_eq!(
        ihpd(&["decode", "--input", path(&missing), "--s", "1", "--l", "1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn roundtrip_recovers_message() {
    let out = ihpd(&[
        "roundtrip",
        "--q",
        "4",
        "--mH",
        "15",
        "--h",
        "1",
        "--s",
        "2",
        "--l",
        "4",
        "--t",
        "29",
        "--seed",
        "7",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("recovered message"));
}

#[test]
fn simulate_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("rows.csv");
    let out = ihpd(&[
        "simulate",
        "--q",
        "4",
        "--mH",
        "15",
        "--h",
        "1",
        "--s",
        "1",
        "--l",
        "1",
        "--t",
        "3,64",
        "--trials",
        "20",
        "--seed",
        "4",
        "--csv",
        path(&csv),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let rows = sim::parse_csv(&std::fs::read_to_string(&csv).unwrap()).unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!((rows[0].failures, rows[1].rate), (0, 1.0));
    assert_eq!(stdout(&out).lines().count(), 3);
}

#[test]
fn simulate_from_config() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("config.json");
    let csv = dir.path().join("rows.csv");
    std::fs::write(
        &config,
        r#"{"q":4,"m_h":15,"h":2,"s":2,"ell":3,"t_values":[35],"trials":20,"seed":1}"#,
    )
    .unwrap();
    let out = ihpd(&["simulate", "--config", path(&config), "--csv", path(&csv)]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let rows = sim::parse_csv(&std::fs::read_to_string(&csv).unwrap()).unwrap();
    assert_eq!((rows[0].t, rows[0].failures), (35, 0));

    std::fs::write(
        &config,
        r#"{"q":4,"m_h":15,"h":2,"s":2,"ell":3,"t_values":[35],"trials":20,"seed":1,"x":0}"#,
    )
    .unwrap();
    assert_eq!(
        ihpd(&["simulate", "--config", path(&config)]).status.code(),
        Some(2)
    );
}
