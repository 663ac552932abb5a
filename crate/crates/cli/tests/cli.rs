//! End-to-end tests of the binary: spawn it, check stdout and exit codes.

use std::process::Command;

use braid_growth::{series_expand, Polynomial, RationalFunction};
use num::rational::BigRational;
use num::ToPrimitive;

fn run_env(args: &[&str], envs: &[(&str, &str)]) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_braidgrowth"));
    cmd.args(args);
    for (k, v) in envs {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("failed to spawn the binary");
    (
        out.status.code().expect("no exit code"),
        String::from_utf8(out.stdout).expect("stdout not utf-8"),
        String::from_utf8(out.stderr).expect("stderr not utf-8"),
    )
}

fn run(args: &[&str]) -> (i32, String, String) {
    run_env(args, &[])
}

fn ok_stdout(args: &[&str]) -> String {
    let (code, stdout, stderr) = run(args);
    assert_eq!(code, 0, "args {args:?} failed: {stderr}");
    stdout
}

#[test]
fn series_text_output() {
    let out = ok_stdout(&["series", "--n", "3", "--terms", "5", "--method", "oracle"]);
    assert_eq!(out.trim(), "1,4,14,45,142,444");

    let out = ok_stdout(&["series", "--n", "2", "--terms", "3"]);
    assert_eq!(out.trim(), "1,2,3,4");
}

#[test]
fn series_methods_agree() {
    for kind in ["singular", "classical"] {
        let runs: Vec<String> = ["genfunc", "dp", "oracle"]
            .iter()
            .map(|m| {
                ok_stdout(&["series", "--n", "3", "--kind", kind, "--terms", "6", "--method", m])
            })
            .collect();
        assert_eq!(runs[0], runs[1], "kind {kind}");
        assert_eq!(runs[0], runs[2], "kind {kind}");
    }
}

#[test]
fn series_csv_output() {
    let out = ok_stdout(&["series", "--n", "3", "--terms", "3", "--format", "csv"]);
    assert_eq!(out, "k,b_k\n0,1\n1,4\n2,14\n3,45\n");
}

#[test]
fn series_json_output() {
    let out = ok_stdout(&["series", "--n", "2", "--terms", "4", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&out).expect("well-formed json");
    assert_eq!(doc["command"], "series");
    assert_eq!(doc["n"], 2);
    assert_eq!(doc["kind"], "singular");
    assert_eq!(doc["method"], "genfunc");
    let counts: Vec<u64> =
        doc["counts"].as_array().unwrap().iter().map(|v| v.as_u64().unwrap()).collect();
    assert_eq!(counts, vec![1, 2, 3, 4, 5]);
}

#[test]
fn genfunc_json_and_round_trip() {
    let out = ok_stdout(&["genfunc", "--n", "3", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&out).expect("well-formed json");
    assert_eq!(doc["command"], "genfunc");
    assert_eq!(doc["n"], 3);
    assert_eq!(doc["kind"], "singular");
    let coeffs = |key: &str| -> Vec<i64> {
        doc[key].as_array().unwrap().iter().map(|v| v.as_i64().unwrap()).collect()
    };
    let num = coeffs("numerator");
    let den = coeffs("denominator");
    assert_eq!(num, vec![1]);
    assert_eq!(den, vec![1, -4, 2, 3, -2]);

    // Re-parse the document into a rational function and expand it: the
    // coefficients must give back exactly what `series --method genfunc` says.
    let rf = RationalFunction::new(
        Polynomial::from_integers(&num),
        Polynomial::from_integers(&den),
    )
    .unwrap();
    let expanded: Vec<String> = series_expand(&rf, 10)
        .unwrap()
        .iter()
        .map(|c: &BigRational| c.to_integer().to_u64().unwrap().to_string())
        .collect();
    let series =
        ok_stdout(&["series", "--n", "3", "--terms", "10", "--method", "genfunc"]);
    assert_eq!(series.trim(), expanded.join(","));
}

#[test]
fn growth_json_report() {
    let out = ok_stdout(&["growth", "--n", "3", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&out).expect("well-formed json");
    assert_eq!(doc["command"], "growth");
    let den: Vec<i64> =
        doc["denominator"].as_array().unwrap().iter().map(|v| v.as_i64().unwrap()).collect();
    assert_eq!(den, vec![1, -4, 2, 3, -2]);

    let roots = doc["real_roots"].as_array().unwrap();
    assert_eq!(roots.len(), 4);
    assert!(roots.iter().all(|r| r["multiplicity"] == 1));

    let residues = doc["residues"].as_array().unwrap();
    assert_eq!(residues.len(), 4);
    let at_one = residues.iter().find(|r| r["pole"].as_f64().unwrap() == 1.0).unwrap();
    assert_eq!(at_one["coefficient"].as_f64().unwrap(), -1.0);

    let rate = doc["growth_rate"].as_f64().unwrap();
    assert!((rate - 3.114907541).abs() < 1e-8);

    let rec: Vec<&str> = doc["recurrence"]["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    assert_eq!(rec, vec!["4", "-2", "-3", "2"]);
    assert_eq!(doc["recurrence"]["valid_from"], 1);
}

#[test]
fn growth_text_mentions_rate() {
    let out = ok_stdout(&["growth", "--n", "3"]);
    assert!(out.contains("growth rate: 3.11490754"), "{out}");
    assert!(out.contains("residue at 1: -1"), "{out}");
}

#[test]
fn predecessor_listing() {
    let out = ok_stdout(&["predecessors", "--n", "3"]);
    let want = "id word length predecessors\n\
                2 s1 1 2,5,7,8\n\
                3 s2 1 3,4,7,8\n\
                4 s1s2 2 2,5,7,8\n\
                5 s2s1 2 3,4,7,8\n\
                6 s1s2s1 3 2,3,4,5,6,7,8\n\
                7 x1 1 3,7,8\n\
                8 x2 1 2,7,8\n";
    assert_eq!(out, want);

    let json = ok_stdout(&["predecessors", "--n", "2", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&json).expect("well-formed json");
    let syllables = doc["syllables"].as_array().unwrap();
    assert_eq!(syllables.len(), 2);
    assert_eq!(syllables[0]["word"], "s1");
    assert_eq!(syllables[0]["predecessors"], serde_json::json!([2, 3]));
    assert_eq!(syllables[1]["word"], "x1");
    assert_eq!(syllables[1]["predecessors"], serde_json::json!([3]));
}

#[test]
fn oracle_counts_and_listing() {
    let out = ok_stdout(&["oracle", "--n", "3", "--maxlen", "4", "--list-length", "2"]);
    let mut lines = out.lines();
    assert_eq!(lines.next().unwrap(), "1,4,14,45,142");
    let reps: Vec<&str> = lines.collect();
    assert_eq!(reps.len(), 14);
    assert_eq!(reps[0], "s1s1");
    // Lexicographically least representatives, in order.
    let mut sorted = reps.clone();
    sorted.sort();
    assert_eq!(reps, sorted);

    let csv = ok_stdout(&[
        "oracle", "--n", "3", "--maxlen", "2", "--list-length", "1", "--format", "csv",
    ]);
    assert_eq!(csv, "index,word\n0,s1\n1,s2\n2,x1\n3,x2\n");
}

#[test]
fn verify_passes_where_counts_are_pinned() {
    for (n, kind, maxlen) in [("2", "singular", "8"), ("3", "singular", "6"), ("4", "singular", "5"), ("3", "classical", "7")] {
        let (code, stdout, stderr) =
            run(&["verify", "--n", n, "--kind", kind, "--maxlen", maxlen]);
        assert_eq!(code, 0, "n={n} {kind}: {stdout}{stderr}");
        assert!(stdout.lines().all(|l| l.starts_with("ok: ")), "{stdout}");
    }
}

#[test]
fn usage_and_limit_exit_codes() {
    let (code, _, _) = run(&["series", "--n", "3", "--terms", "3", "--kind", "nope"]);
    assert_eq!(code, 2);

    let (code, _, stderr) = run(&["series", "--n", "1", "--terms", "3"]);
    assert_eq!(code, 2, "{stderr}");

    let (code, _, stderr) = run(&["series", "--n", "6", "--terms", "3"]);
    assert_eq!(code, 3, "{stderr}");

    let (code, _, stderr) =
        run_env(&["oracle", "--n", "3", "--maxlen", "4"], &[("BRAIDGROWTH_WORD_BUDGET", "10")]);
    assert_eq!(code, 3, "{stderr}");
    assert!(stderr.contains("budget"), "{stderr}");

    let (code, _, stderr) =
        run_env(&["oracle", "--n", "3", "--maxlen", "4"], &[("BRAIDGROWTH_WORD_BUDGET", "lots")]);
    assert_eq!(code, 2, "{stderr}");

    let (code, _, _) = run(&["growth", "--n", "3", "--tol", "-1"]);
    assert_eq!(code, 2);
}

#[cfg(unix)]
#[test]
fn closed_stdout_pipe_ends_quietly() {
    use std::io::Read;
    use std::os::unix::process::ExitStatusExt;
    use std::process::Stdio;

    // Read one byte of a long listing, then drop the pipe as `head -1` would.
    let mut child = Command::new(env!("CARGO_BIN_EXE_braidgrowth"))
        .args(["predecessors", "--n", "4"])
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("failed to spawn the binary");
    let mut byte = [0u8; 1];
    child.stdout.take().unwrap().read_exact(&mut byte).unwrap();
    let out = child.wait_with_output().unwrap();

    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(!stderr.contains("panicked"), "{stderr}");
    assert_eq!(out.status.signal(), Some(libc::SIGPIPE));
}
