use std::path::PathBuf;
use std::process::Command;

use cyclic_mvif::cli::{run, EXIT_DECODE_FAILURE, EXIT_OK, EXIT_USAGE};
use cyclic_mvif::decoder::DecodeResult;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name).display().to_string()
}

fn cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("cyclic-mvif").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn kv(text: &str, key: &str) -> String {
    text.lines()
        .find_map(|l| l.strip_prefix(&format!("{key} = ")))
        .unwrap_or_else(|| panic!("no {key} in\n{text}"))
        .to_string()
}

#[test]
fn decode_qr31_example_with_trace() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let (code, out, _) = cli(&[
        "decode", "--code", &data("qr31.spec"), "--cache-dir", cache, "--received", "x^3+x^7+x^20", "--trace",
        "--format", "kv",
    ]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(kv(&out, "status"), "success");
    assert_eq!(kv(&out, "locations"), "3,7,20");
    assert_eq!(kv(&out, "codeword"), vec!["0"; 31].join(","));
    assert_eq!(out.lines().filter(|l| l.starts_with("trace = ")).count(), 7);
    let f = cyclic_mvif::Field::from_modulus_code(2, 5, 0x25).unwrap();
    let c: Vec<String> = [12, 16, 3, 11].iter().map(|&k| format!("{:x}", f.alpha_pow(k))).collect();
    let row = format!("trace = k=6 delta=0 C={} ", c.join(","));
    assert!(out.contains(&row), "{row}\n{out}");
    let parsed = DecodeResult::parse_kv(&out).unwrap();
    assert_eq!(parsed.to_kv(), out);
}

#[test]
fn decode_rs15_example_gelp() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out, _) = cli(&[
        "decode", "--code", &data("rs15.spec"), "--cache-dir", dir.path().to_str().unwrap(), "--pipeline", "gelp",
        "--received", "c*x^2+6*x^14", "--format", "kv",
    ]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert_eq!(kv(&out, "error"), "2:c,14:6");
    assert_eq!(kv(&out, "locator"), "1,d,2");
}

#[test]
fn decode_codeword_and_failure_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let zero = vec!["0"; 15].join(",");
    let (code, out, _) = cli(&["decode", "--preset", "bch15", "--cache-dir", cache, "--received", &zero, "--format", "kv"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(kv(&out, "error"), "");

    // three errors on a double-error-correcting code: some such words fail
    let failing = (0..15u32)
        .flat_map(|a| (a + 1..15).flat_map(move |b| (b + 1..15).map(move |c| format!("x^{a}+x^{b}+x^{c}"))))
        .find(|w| cli(&["decode", "--preset", "bch15", "--cache-dir", cache, "--received", w]).0 == EXIT_DECODE_FAILURE);
    assert!(failing.is_some());
}

#[test]
fn usage_errors_exit_two() {
    let (code, _, err) = cli(&["build", "--code", "/nonexistent/x.spec", "--kind", "gelp"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("cannot read spec file"), "{err}");
    assert_eq!(cli(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(cli(&["code-info"]).0, EXIT_USAGE);
    assert_eq!(cli(&["decode", "--preset", "qr31", "--received", "1,2"]).0, EXIT_USAGE);
    let (code, out, _) = cli(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("verify-table"));
}

#[test]
fn build_reports_structure_and_caches() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let args = ["build", "--code", &data("qr31.spec"), "--kind", "unknown-syndrome", "--target", "3", "--cache-dir", cache, "--format", "kv"];
    let (code, out, _) = cli(&args);
    assert_eq!(code, EXIT_OK);
    assert_eq!(kv(&out, "unknown-syndrome-3.source"), "built");
    assert_eq!(kv(&out, "unknown-syndrome-3.terms"), "307");
    assert_eq!(kv(&out, "unknown-syndrome-3.coefficients_in_subfield"), "true");
    assert_eq!(kv(&out, "unknown-syndrome-3.congruence_clean"), "true");
    assert_eq!(kv(&cli(&args).1, "unknown-syndrome-3.source"), "cache");
    let mut forced = args.to_vec();
    forced.push("--force");
    assert_eq!(kv(&cli(&forced).1, "unknown-syndrome-3.source"), "built");

    let (code, out, _) = cli(&["build", "--preset", "rs15", "--kind", "gelp", "--cache-dir", cache, "--format", "kv"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(kv(&out, "artifacts"), "2");
    assert_eq!(kv(&out, "gelp-1.terms"), "79");
    assert_eq!(kv(&out, "gelp-2.terms"), "190");

    let (code, _, err) = cli(&["build", "--preset", "qr31", "--kind", "unknown-syndrome", "--target", "5", "--cache-dir", cache]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("defining set"));
}

#[test]
fn verify_tables() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let (code, out, _) = cli(&[
        "verify-table", "--preset", "rs15", "--table", &data("rs15_sigma2_terms.txt"), "--kind", "gelp", "--index", "2",
        "--cache-dir", cache, "--format", "kv",
    ]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(kv(&out, "rows"), "190");
    assert_eq!(kv(&out, "table.congruence_violations"), "0");
    assert_eq!(kv(&out, "agreement"), "23850/23850");

    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "0,2,1E\n0,3,10\n0,G,2\n").unwrap();
    let (code, _, err) = cli(&[
        "verify-table", "--preset", "qr31", "--table", bad.to_str().unwrap(), "--kind", "unknown-syndrome", "--target", "3",
        "--cache-dir", cache,
    ]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn sweep_and_info() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let (code, out, _) = cli(&["sweep", "--preset", "rs15", "--pipeline", "gelp", "--cache-dir", cache, "--format", "kv"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(kv(&out, "corrected"), "23850");
    assert_eq!(kv(&out, "failed"), "0");

    let (_, out, _) = cli(&["code-info", "--field", "2,4,0x13", "--n", "15", "--q", "2", "--base-set", "1,3", "--t", "2", "--format", "kv", "--distance"]);
    assert_eq!(kv(&out, "k"), "7");
    assert_eq!(kv(&out, "minimum_distance"), "5");

    let (_, out, _) = cli(&["field-info", "--field", "2,5,0x25", "--tables", "--format", "kv"]);
    assert_eq!(kv(&out, "order"), "32");
    assert!(kv(&out, "antilog").starts_with("1,2,4,8,10,5,"));
}

#[test]
fn selftest_prints_seed() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out, _) =
        cli(&["selftest", "--seed", "42", "--cases", "10", "--cache-dir", dir.path().to_str().unwrap(), "--format", "kv"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert_eq!(kv(&out, "seed"), "42");
    assert_eq!(kv(&out, "result"), "pass");
}

#[test]
fn binary_exit_codes_and_cache_env() {
    let dir = tempfile::tempdir().unwrap();
    let bin = env!("CARGO_BIN_EXE_cyclic-mvif");
    let status = Command::new(bin)
        .args(["decode", "--preset", "qr31", "--received", "x^3+x^7+x^20"])
        .env("CYCLIC_MVIF_CACHE", dir.path())
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(0));
    assert!(std::fs::read_dir(dir.path()).unwrap().next().is_some(), "cache directory unused");
    let status = Command::new(bin).args(["decode"]).output().unwrap();
    assert_eq!(status.status.code(), Some(2));
}
