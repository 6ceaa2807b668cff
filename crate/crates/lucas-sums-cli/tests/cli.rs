//! Process-level tests of the `lucas-sums` binary: flag handling, output
//! shapes, golden table bytes, exit codes, and agreement with the library.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_lucas-sums"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr_of(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("stderr is UTF-8")
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("process not killed by signal")
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

// ====================== term ======================

#[test]
fn term_examples() {
    let out = run(&["term", "--p", "1", "--q", "-1", "--kind", "U", "--n", "9"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_of(&out).trim(), "34");

    let out = run(&["term", "--p", "3", "--q", "2", "--kind", "V", "--n", "0"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_of(&out).trim(), "2");

    let out = run(&[
        "term", "--p", "6", "--q", "1", "--kind", "V", "--n", "5", "--method", "fast",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_of(&out).trim(), "6726");
}

#[test]
fn term_methods_agree() {
    for method in ["iter", "fast", "binet"] {
        let out = run(&[
            "term", "--p", "3", "--q", "-5", "--kind", "V", "--n", "40", "--method", method,
        ]);
        assert_eq!(code(&out), 0, "method {method}");
        assert_eq!(
            stdout_of(&out).trim(),
            "7929837541227238808666351",
            "method {method}"
        );
    }
}

#[test]
fn term_binet_rejects_degenerate_pair() {
    let out = run(&[
        "term", "--p", "2", "--q", "1", "--kind", "U", "--n", "5", "--method", "binet",
    ]);
    assert_eq!(code(&out), 2);
    assert!(stderr_of(&out).contains("unsupported case"));
}

#[test]
fn term_json_shape() {
    let out = run(&[
        "term", "--p", "1", "--q", "-1", "--kind", "U", "--n", "9", "--format", "json",
    ]);
    assert_eq!(code(&out), 0);
    let row: serde_json::Value = serde_json::from_str(stdout_of(&out).trim()).unwrap();
    assert_eq!(row["command"], "term");
    assert_eq!(row["params"]["p"], 1);
    assert_eq!(row["params"]["q"], -1);
    assert_eq!(row["kind"], "U");
    assert_eq!(row["n"], 9);
    assert_eq!(row["method"], "fast");
    assert_eq!(row["value"], "34");
    assert_eq!(row["status"], "ok");
}

#[test]
fn json_big_integers_are_decimal_strings() {
    let out = run(&[
        "term", "--p", "1", "--q", "-1", "--kind", "U", "--n", "300", "--format", "json",
    ]);
    let row: serde_json::Value = serde_json::from_str(stdout_of(&out).trim()).unwrap();
    let value = row["value"].as_str().expect("value is a JSON string");
    assert_eq!(
        value,
        "222232244629420445529739893461909967206666939096499764990979600"
    );
}

// ====================== sum ======================

#[test]
fn sum_examples() {
    let out = run(&[
        "sum", "--p", "1", "--q", "-1", "--kind", "U", "--n", "5", "--mode", "weighted",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_of(&out).trim(), "46");

    let out = run(&[
        "sum", "--p", "1", "--q", "-1", "--kind", "V", "--n", "3", "--mode", "stride", "--r", "2",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_of(&out).trim(), "28");

    let out = run(&[
        "sum",
        "--p",
        "2",
        "--q",
        "1",
        "--kind",
        "U",
        "--n",
        "5",
        "--mode",
        "consecutive",
    ]);
    assert_eq!(code(&out), 2);
    assert!(
        stderr_of(&out).contains("q != 1"),
        "diagnostic names the hypothesis"
    );
}

#[test]
fn sum_verbose_prints_witness_and_branch() {
    let out = run(&[
        "sum",
        "--p",
        "1",
        "--q",
        "-1",
        "--kind",
        "V",
        "--n",
        "3",
        "--mode",
        "stride",
        "--r",
        "2",
        "--verbose",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("branch: p-q!=1"));
    assert!(text.contains("witness: -28 / -1"));
    assert!(text.contains("remainder checked zero: true"));
}

#[test]
fn sum_json_includes_r_and_witness() {
    let out = run(&[
        "sum",
        "--p",
        "1",
        "--q",
        "-1",
        "--kind",
        "V",
        "--n",
        "3",
        "--mode",
        "stride",
        "--r",
        "2",
        "--verbose",
        "--format",
        "json",
    ]);
    let row: serde_json::Value = serde_json::from_str(stdout_of(&out).trim()).unwrap();
    assert_eq!(row["mode"], "stride");
    assert_eq!(row["r"], 2);
    assert_eq!(row["value"], "28");
    assert_eq!(row["witness"]["numerator"], "-28");
    assert_eq!(row["witness"]["denominator"], "-1");
    assert_eq!(row["witness"]["remainder_zero"], true);
}

#[test]
fn sum_flag_validation() {
    // stride without --r
    let out = run(&[
        "sum", "--p", "1", "--q", "-1", "--kind", "U", "--n", "5", "--mode", "stride",
    ]);
    assert_eq!(code(&out), 2);
    assert!(stderr_of(&out).contains("requires --r"));

    // --r outside stride mode
    let out = run(&[
        "sum", "--p", "1", "--q", "-1", "--kind", "U", "--n", "5", "--mode", "weighted", "--r", "2",
    ]);
    assert_eq!(code(&out), 2);
    assert!(stderr_of(&out).contains("only to --mode stride"));

    // weighted sums start at n = 1
    let out = run(&[
        "sum", "--p", "1", "--q", "-1", "--kind", "U", "--n", "0", "--mode", "weighted",
    ]);
    assert_eq!(code(&out), 2);
    assert!(stderr_of(&out).contains("n >= 1"));

    // the (1, -1)-only modes reject other pairs
    let out = run(&[
        "sum",
        "--p",
        "3",
        "--q",
        "2",
        "--kind",
        "U",
        "--n",
        "5",
        "--mode",
        "weighted-square",
    ]);
    assert_eq!(code(&out), 2);
    assert!(stderr_of(&out).contains("(p, q) = (1, -1)"));

    // consecutive n = 0 is fine (empty sum)
    let out = run(&[
        "sum",
        "--p",
        "3",
        "--q",
        "2",
        "--kind",
        "U",
        "--n",
        "0",
        "--mode",
        "consecutive",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_of(&out).trim(), "0");
}

#[test]
fn sum_stride_zero_denominator_is_a_precondition_error() {
    // p - q = 1 makes the stride denominator vanish for every r.
    let out = run(&[
        "sum", "--p", "4", "--q", "3", "--kind", "U", "--n", "5", "--mode", "stride", "--r", "3",
    ]);
    assert_eq!(code(&out), 2);
    assert!(stderr_of(&out).contains("zero denominator"));
}

/// Randomized flag sets: the CLI's answer equals the library's.
#[test]
fn sum_matches_library_on_random_flag_sets() {
    use lucas_sums::{
        consecutive_sum, fib_luc_weighted_square, fib_luc_weighted_stride2, make_params,
        reverse_weighted_sum, stride_sum, weighted_sum, weighted_sum_powerform, Kind, StrideQuery,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(0x5ca1ab1e);
    let modes = [
        "consecutive",
        "weighted",
        "weighted-power",
        "stride",
        "reverse",
        "weighted-stride2",
        "weighted-square",
    ];
    for trial in 0..60 {
        let mode = modes[rng.random_range(0..modes.len())];
        let fib_only = matches!(mode, "weighted-stride2" | "weighted-square");
        let (p, q) = if fib_only {
            (1, -1)
        } else {
            (rng.random_range(-5..=5), rng.random_range(-5..=5))
        };
        let kind_flag = if rng.random_range(0..2) == 0 {
            "U"
        } else {
            "V"
        };
        let kind = if kind_flag == "U" {
            Kind::FirstKind
        } else {
            Kind::SecondKind
        };
        let n: u64 = rng.random_range(1..=30);
        let r: u64 = rng.random_range(1..=6);
        let params = make_params(p, q);

        let expected: Result<lucas_sums::ExactInt, lucas_sums::Error> = match mode {
            "consecutive" => consecutive_sum(params, kind, n).map(|s| s.value),
            "weighted" => weighted_sum(params, kind, n).map(|s| s.value),
            "weighted-power" => weighted_sum_powerform(params, kind, n).map(|s| s.value),
            "stride" => stride_sum(&StrideQuery { params, kind, n, r }).map(|s| s.value),
            "reverse" => reverse_weighted_sum(params, kind, n),
            "weighted-stride2" => Ok(fib_luc_weighted_stride2(kind, n)),
            "weighted-square" => Ok(fib_luc_weighted_square(kind, n)),
            _ => unreachable!(),
        };

        let p_s = p.to_string();
        let q_s = q.to_string();
        let n_s = n.to_string();
        let r_s = r.to_string();
        let mut args = vec![
            "sum", "--p", &p_s, "--q", &q_s, "--kind", kind_flag, "--n", &n_s, "--mode", mode,
        ];
        if mode == "stride" {
            args.extend_from_slice(&["--r", &r_s]);
        }
        let out = run(&args);
        match expected {
            Ok(value) => {
                assert_eq!(code(&out), 0, "trial {trial}: {mode} (p,q)=({p},{q})");
                assert_eq!(
                    stdout_of(&out).trim(),
                    value.to_string(),
                    "trial {trial}: {mode} (p,q)=({p},{q}) kind={kind_flag} n={n} r={r}"
                );
            }
            Err(_) => {
                assert_eq!(
                    code(&out),
                    2,
                    "trial {trial}: library error must map to exit 2"
                );
            }
        }
    }
}

// ====================== table ======================

#[test]
fn table_matches_golden_fixture_byte_for_byte() {
    let out = run(&["table"]);
    assert_eq!(code(&out), 0);
    let golden = std::fs::read(fixture("table2_golden.txt")).unwrap();
    assert_eq!(out.stdout, golden);
}

#[test]
fn table_single_sequence() {
    let out = run(&["table", "--seq", "mersenne"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_of(&out).trim(), "0 1 3 7 15 31 63 127 255 511");

    // Hyphenated spelling is normalized.
    let out = run(&["table", "--seq", "companion-pell"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_of(&out).trim(), "2 2 6 14 34 82 198 478 1154 2786");

    let out = run(&["table", "--seq", "nonesuch"]);
    assert_eq!(code(&out), 2);
    assert!(stderr_of(&out).contains("unknown sequence"));
}

#[test]
fn table_json_rows_carry_oeis_ids() {
    let out = run(&["table", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let text = stdout_of(&out);
    let rows: Vec<serde_json::Value> = text
        .lines()
        .map(|line| serde_json::from_str(line).expect("each line is JSON"))
        .collect();
    assert_eq!(rows.len(), 10);
    assert_eq!(rows[0]["name"], "fibonacci");
    assert_eq!(rows[0]["oeis"], "A000045");
    assert_eq!(rows[0]["values"][9], "34");
    assert_eq!(rows[9]["name"], "mersenne_lucas");
    assert_eq!(rows[9]["oeis"], "A000051");
    assert!(rows.iter().all(|r| r["status"] == "ok"));
}

#[test]
fn table_runs_are_deterministic() {
    let first = run(&["table", "--count", "12"]);
    let second = run(&["table", "--count", "12"]);
    assert_eq!(first.stdout, second.stdout);
}

// ====================== verify ======================

#[test]
fn verify_small_box_passes() {
    let out = run(&[
        "verify", "--pmax", "4", "--qmax", "4", "--nmax", "25", "--rmax", "4",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("witness violations: 0"));
    assert!(text.contains("cells pass"));
}

#[test]
fn verify_empty_sweep_passes() {
    let out = run(&["verify", "--nmax", "0", "--rmax", "0"]);
    assert_eq!(code(&out), 0);
    assert!(stdout_of(&out).contains("all 0 checked cells pass"));
}

#[test]
fn verify_include_degenerate_passes() {
    let out = run(&[
        "verify",
        "--pmax",
        "3",
        "--qmax",
        "3",
        "--nmax",
        "15",
        "--rmax",
        "3",
        "--include-degenerate",
    ]);
    assert_eq!(code(&out), 0);
    assert!(stdout_of(&out).contains("degenerate pairs included"));
}

#[test]
fn verify_json_summary_shape() {
    let out = run(&[
        "verify", "--pmax", "3", "--qmax", "3", "--nmax", "15", "--rmax", "3", "--format", "json",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout_of(&out);
    let last = text.lines().last().unwrap();
    let row: serde_json::Value = serde_json::from_str(last).unwrap();
    assert_eq!(row["command"], "verify");
    assert_eq!(row["status"], "ok");
    assert_eq!(row["failures"], 0);
    assert_eq!(row["witness_violations"], 0);
    assert_eq!(row["box"]["pmax"], 3);
}

#[test]
fn verify_erratum_demonstration() {
    let out = run(&["verify", "--only", "erratum", "--pmax", "3", "--qmax", "3"]);
    assert_eq!(code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("corrected closed form : 28"));
    assert!(text.contains("term-by-term oracle   : 28"));
    assert!(text.contains("misprinted form       : 26"));
    assert!(text.contains("discrepancy           : -2"));
    assert!(text.contains("0 failures"));
}

#[test]
fn verify_erratum_json() {
    let out = run(&[
        "verify", "--only", "erratum", "--pmax", "2", "--qmax", "2", "--format", "json",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout_of(&out);
    let mut lines = text.lines();
    let flagship: serde_json::Value = serde_json::from_str(lines.next().unwrap()).unwrap();
    assert_eq!(flagship["value"], "28");
    assert_eq!(flagship["misprinted"], "26");
    assert_eq!(flagship["discrepancy"], "-2");
    let summary: serde_json::Value = serde_json::from_str(lines.next().unwrap()).unwrap();
    assert_eq!(summary["failures"], 0);
    assert_eq!(summary["status"], "ok");
}

// ====================== bench ======================

#[test]
fn bench_asserts_equality() {
    let out = run(&["bench", "--n", "1", "--n", "400"]);
    assert_eq!(code(&out), 0);
    let text = stdout_of(&out);
    assert_eq!(text.matches("values equal").count(), 2);

    let out = run(&["bench", "--p", "3", "--q", "2", "--kind", "V", "--n", "500"]);
    assert_eq!(code(&out), 0);
    assert!(stdout_of(&out).contains("values equal"));
}

#[test]
fn bench_json_reports_both_values() {
    let out = run(&["bench", "--n", "200", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let row: serde_json::Value = serde_json::from_str(stdout_of(&out).trim()).unwrap();
    assert_eq!(row["status"], "ok");
    assert_eq!(row["value"], row["naive_value"]);
    assert!(row["closed_ms"].is_number());
    assert!(row["naive_ms"].is_number());
}

#[test]
fn bench_rejects_degenerate_pair_and_zero_n() {
    let out = run(&["bench", "--p", "2", "--q", "1", "--n", "10"]);
    assert_eq!(code(&out), 2);
    assert!(stderr_of(&out).contains("degenerate"));

    let out = run(&["bench", "--n", "0"]);
    assert_eq!(code(&out), 2);
    assert!(stderr_of(&out).contains("n >= 1"));
}

// ====================== oeis-check ======================

#[test]
fn oeis_check_fibonacci_fixture() {
    let path = fixture("b000045.txt");
    let out = run(&[
        "oeis-check",
        "--seq",
        "fibonacci",
        "--bfile",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("500 entries match"));
    assert!(text.contains("alignment: first b-file index 0"));
}

#[test]
fn oeis_check_json_row() {
    let path = fixture("b000051.txt");
    let out = run(&[
        "oeis-check",
        "--seq",
        "mersenne_lucas",
        "--bfile",
        path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0);
    let row: serde_json::Value = serde_json::from_str(stdout_of(&out).trim()).unwrap();
    assert_eq!(row["command"], "oeis-check");
    assert_eq!(row["oeis"], "A000051");
    assert_eq!(row["checked"], 500);
    assert_eq!(row["status"], "ok");
}

#[test]
fn oeis_check_skips_comments_and_aligns_offsets() {
    // Fibonacci values indexed from 1 instead of 0, with interior comments:
    // alignment on the file's own first index must still match.
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "# locally written test file").unwrap();
    writeln!(file, "1 0").unwrap();
    writeln!(file, "2 1").unwrap();
    writeln!(file, "# interior comment").unwrap();
    writeln!(file, "3 1").unwrap();
    writeln!(file, "4 2").unwrap();
    writeln!(file, "5 3").unwrap();
    let out = run(&[
        "oeis-check",
        "--seq",
        "fibonacci",
        "--bfile",
        file.path().to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("alignment: first b-file index 1"));
    assert!(text.contains("5 entries match"));
}

#[test]
fn oeis_check_reports_mismatch_index_and_exits_1() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "0 0\n1 1\n2 1\n3 2\n4 5").unwrap();
    let out = run(&[
        "oeis-check",
        "--seq",
        "fibonacci",
        "--bfile",
        file.path().to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 1);
    let text = stdout_of(&out);
    assert!(text.contains("mismatch at index 4"));
    assert!(text.contains("b-file has 5, computed 3"));
}

#[test]
fn oeis_check_parse_errors_exit_2_with_line_number() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "0 0\n1 1\ntwo 1").unwrap();
    let out = run(&[
        "oeis-check",
        "--seq",
        "fibonacci",
        "--bfile",
        file.path().to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 2);
    assert!(stderr_of(&out).contains("line 3"));

    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "0 0\n2 1\n1 1").unwrap();
    let out = run(&[
        "oeis-check",
        "--seq",
        "fibonacci",
        "--bfile",
        file.path().to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 2);
    let err = stderr_of(&out);
    assert!(err.contains("line 3"));
    assert!(err.contains("strictly increasing"));
}

#[test]
fn oeis_check_honors_max_n() {
    // Wrong at aligned index 4, but the cap stops at 3.
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "0 0\n1 1\n2 1\n3 2\n4 999").unwrap();
    let out = run(&[
        "oeis-check",
        "--seq",
        "fibonacci",
        "--bfile",
        file.path().to_str().unwrap(),
        "--max-n",
        "3",
    ]);
    assert_eq!(code(&out), 0);
    assert!(stdout_of(&out).contains("4 entries match"));
}

#[test]
fn oeis_check_missing_file_and_unknown_name() {
    let out = run(&[
        "oeis-check",
        "--seq",
        "fibonacci",
        "--bfile",
        "/nonexistent/b.txt",
    ]);
    assert_eq!(code(&out), 2);
    assert!(stderr_of(&out).contains("cannot read"));

    let out = run(&[
        "oeis-check",
        "--seq",
        "nonesuch",
        "--bfile",
        "/nonexistent/b.txt",
    ]);
    assert_eq!(code(&out), 2);
    assert!(stderr_of(&out).contains("unknown sequence"));
}

// ====================== usage errors ======================

#[test]
fn clap_usage_errors_exit_2() {
    // missing required flags
    let out = run(&["sum", "--p", "1"]);
    assert_eq!(code(&out), 2);

    // unknown subcommand
    let out = run(&["frobnicate"]);
    assert_eq!(code(&out), 2);

    // bad enum value
    let out = run(&["term", "--p", "1", "--q", "-1", "--kind", "W", "--n", "1"]);
    assert_eq!(code(&out), 2);
}

// ====================== pipe behavior ======================

/// Closing the read end of a pipe must kill the process silently (the
/// normal Unix filter convention), not trigger a println panic.
#[cfg(unix)]
#[test]
fn closed_stdout_pipe_does_not_panic() {
    use std::os::unix::process::ExitStatusExt;
    use std::process::Stdio;

    // A table wide enough that the writer outlives the 64 KiB pipe buffer.
    let mut child = bin()
        .args(["table", "--count", "20000"])
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");

    // Read a little, then close the read end while the writer is mid-table.
    let mut stdout = child.stdout.take().expect("stdout is piped");
    let mut first = [0u8; 64];
    std::io::Read::read_exact(&mut stdout, &mut first).expect("some output arrives");
    drop(stdout);

    let output = child.wait_with_output().expect("process finishes");
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert!(
        !stderr.contains("panicked"),
        "broken pipe must not panic, got stderr: {stderr}"
    );
    // Either it died of SIGPIPE (13) or it finished before noticing.
    match output.status.code() {
        None => assert_eq!(output.status.signal(), Some(13)),
        Some(code) => assert_eq!(code, 0),
    }
}
