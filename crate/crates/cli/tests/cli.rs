//! Golden-file tests of the command line. Set `UPDATE_GOLDEN=1` to rewrite
//! the expected outputs.

use std::fs;
use std::path::PathBuf;
use std::process::Command;

fn run(args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_multiseg")).args(args).output().unwrap();
    (String::from_utf8(out.stdout).unwrap(), out.status.code().unwrap())
}

/// JSON reports with the timing field zeroed.
fn normalized(stdout: &str) -> String {
    let mut v: serde_json::Value = serde_json::from_str(stdout).unwrap();
    v["elapsed_ms"] = 0.into();
    serde_json::to_string_pretty(&v).unwrap() + "\n"
}

fn golden(name: &str, args: &[&str], code: i32) {
    let (stdout, status) = run(args);
    assert_eq!(status, code, "exit status of {args:?}");
    let actual = if args.contains(&"--json") { normalized(&stdout) } else { stdout };
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        fs::write(&path, &actual).unwrap();
    }
    let expected = fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing {}", path.display()));
    assert_eq!(actual, expected, "{name}");
}

#[test]
fn socle_text() {
    golden("socle.txt", &["socle", "[1..2]", "0"], 0);
    golden("socle_zelevinsky.txt", &["socle", "--param", "zelevinsky", "[0..0]", "1"], 0);
    golden("cosocle_left.txt", &["cosocle", "--side", "left", "[0..1]", "5"], 0);
}

#[test]
fn operators() {
    golden("qc.json", &["--json", "qc", "[1..1]+[1..2]", "0"], 0);
    golden("sc.json", &["--json", "sc", "[1..2]", "0"], 0);
    golden("lprime.txt", &["lprime", "[0..2]", "0"], 0);
    golden("irreducible.txt", &["irreducible", "[1..1]", "0"], 0);
    golden("condition_c.txt", &["condition-c", "[0..1]+[0..1]+[3..4]"], 0);
}

#[test]
fn dual_trace() {
    golden("dual_trace.txt", &["dual", "--trace", "[0..1]+[1..2]"], 0);
    golden("dual_trace.json", &["--json", "dual", "--trace", "[0..2]"], 0);
}

#[test]
fn ring() {
    golden("jacquet.json", &["--json", "jacquet", "[0..1]+[2..3]", "3,1"], 0);
    golden("multiplicity.txt", &["multiplicity", "[0..0]+[1..1]+[0..0]", "[0..0]|[1..1]|[0..0]", "1,1,1"], 0);
    golden("lemme2.txt", &["lemme2", "[0..1]", "[2..3]"], 0);
    golden("lsup.txt", &["lsup", "[0..2]", "0"], 0);
}

#[test]
fn theta() {
    golden("theta.txt", &["theta", "[-1/2..1/2]", "4"], 0);
    golden("check_com.json", &["--json", "check-com", "0", "0", "0", "-1"], 0);
    golden("check_com_sweep.txt", &["check-com", "--sweep", "-1:1", "--hi", "2", "--max-segments", "2"], 0);
    golden("check_comb_sweep.txt", &["check-comb", "--sweep", "-3:3"], 0);
}

#[test]
fn corpus_and_check() {
    golden("enumerate.txt", &["enumerate", "--hi", "1", "--max-segments", "2", "--max-multiplicity", "1"], 0);
    golden(
        "check.json",
        &["--json", "check", "--suite", "involution", "--suite", "lemme2", "--hi", "2", "--max-segments", "2"],
        0,
    );
}

#[test]
fn errors_exit_with_two() {
    let (stdout, code) = run(&["qc", "[0..1", "0"]);
    assert_eq!((stdout.as_str(), code), ("", 2));
    assert_eq!(run(&["dual", "[2..0]"]).1, 2);
    assert_eq!(run(&["check", "--suite", "nonsense"]).1, 2);
    assert_eq!(run(&["theta", "[0..1]", "1"]).1, 2);
    assert_eq!(run(&["frobnicate"]).1, 2);
}

#[test]
fn reports_are_reproducible() {
    let args = ["--json", "check", "--suite", "mirror", "--hi", "2", "--max-segments", "3"];
    assert_eq!(normalized(&run(&args).0), normalized(&run(&args).0));
}
