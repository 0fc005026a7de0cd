use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

fn seqprint(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_seqprint"))
        .args(args)
        .env_remove("SEQPRINT_CACHE_DIR")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut input = child.stdin.take().unwrap();
    input.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(input);
    child.wait_with_output().unwrap()
}

fn fixture() -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures/fixture.toml")
        .display()
        .to_string()
}

fn field(out: &Output, name: &str) -> String {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .find_map(|l| l.strip_prefix(&format!("{name}\t")).map(str::to_string))
        .unwrap_or_else(|| panic!("no {name} line"))
}

fn fibonacci(n: usize) -> String {
    let mut terms = vec![num_bigint::BigInt::from(0), num_bigint::BigInt::from(1)];
    while terms.len() < n {
        let next = &terms[terms.len() - 1] + &terms[terms.len() - 2];
        terms.push(next);
    }
    terms.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(", ")
}

#[test]
fn classify_fibonacci_without_model() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().display().to_string();
    let res = seqprint(&["--out", &out, "classify"], Some(&fibonacci(990)));
    assert!(res.status.success(), "{}", String::from_utf8_lossy(&res.stderr));
    assert_eq!(field(&res, "terms"), "990");
    let kl: f64 = field(&res, "kl").parse().unwrap();
    assert!(kl < 0.01, "{kl}");
    let s: f64 = field(&res, "s").parse().unwrap();
    assert!((s - 2.0).abs() < 0.05, "{s}");
}

#[test]
fn usage_errors_exit_one() {
    for args in [&["--no-such-flag", "run"][..], &["bogus"], &["train", "--task", "nope"], &[]] {
        let res = seqprint(args, None);
        assert_eq!(res.status.code(), Some(1), "{args:?}");
    }
    let res = seqprint(&["classify"], Some(""));
    assert_eq!(res.status.code(), Some(1));
}

#[test]
fn data_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out").display().to_string();
    let res = seqprint(&["--out", &out, "ingest"], None);
    assert_eq!(res.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&res.stderr).contains("[ingest]"));
    let res = seqprint(&["classify"], Some("1 2 x"));
    assert_eq!(res.status.code(), Some(2));
}

#[test]
fn staged_commands_produce_models_reports_and_figures() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out");
    let out_s = out.display().to_string();
    let config = fixture();
    let base = ["--config", config.as_str(), "--out", out_s.as_str()];
    let step = |extra: &[&str]| {
        let args: Vec<&str> = base.iter().copied().chain(extra.iter().copied()).collect();
        let res = seqprint(&args, None);
        assert!(res.status.success(), "{extra:?}: {}", String::from_utf8_lossy(&res.stderr));
    };
    step(&["ingest"]);
    step(&["features"]);
    step(&["ransac"]);
    step(&["make-dataset"]);
    step(&["train", "--task", "oeis-vs-random", "--kind", "forest"]);
    assert!(out.join("models/oeis_vs_random-forest.json").is_file());
    assert!(!out.join("models/keywords-forest.json").exists());
    step(&["train"]);
    step(&["evaluate"]);
    step(&["export-figs"]);
    for f in ["fig1_kl.tsv", "fig2.tsv", "fig3.tsv", "fig5.tsv", "fig6_keywords-extra.tsv"] {
        assert!(out.join("figs").join(f).is_file(), "{f}");
    }
    assert!(out.join("reports/keywords-baseline.txt").is_file());

    let res = seqprint(&["--out", &out_s, "classify"], Some(&fibonacci(990)));
    assert!(res.status.success());
    let labels = field(&res, "labels");
    assert!(!labels.is_empty());
    assert!(labels.split(',').all(|l| seqprint::oeis::Label::names().contains(&l.to_string())));
}
