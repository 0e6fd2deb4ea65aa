use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn icelab(cache: &tempfile::TempDir, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_icelab"))
        .args(args)
        .env("ICELAB_CACHE_DIR", cache.path())
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn a2() -> String {
    fixture("a2.alg").display().to_string()
}

#[test]
fn enumerate_counts_on_a2() {
    let dir = tempfile::tempdir().unwrap();
    for (kind, m, n) in [("cogen_preordered", "2", 12), ("maxjoin_seqs", "2", 12), ("ice_seqs", "1", 5), ("cogen_preordered", "0", 1)] {
        let o = icelab(&dir, &["enumerate", &a2(), "--kind", kind, "--m", m]);
        assert_eq!(o.status.code(), Some(0));
        assert!(stdout(&o).ends_with(&format!("count {n}\n")), "{kind} {m}: {}", stdout(&o));
    }
}

#[test]
fn verify_passes_on_a2() {
    let dir = tempfile::tempdir().unwrap();
    let o = icelab(&dir, &["verify", &a2(), "--m", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let last = out.lines().last().unwrap();
    let (pass, total) = last.strip_prefix("SUMMARY ").unwrap().split_once('/').unwrap();
    assert_eq!(pass, total);
    assert!(out.lines().filter(|l| l.starts_with("CHECK ")).all(|l| l.contains(" PASS")));
}

#[test]
fn syntax_error_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.alg");
    std::fs::write(&bad, "vertex 1\nvertex 2\narrow a 1 2 3\n").unwrap();
    let o = icelab(&dir, &["catalog", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    let o = icelab(&dir, &["enumerate", &a2(), "--kind", "sideways", "--m", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn small_cap_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    let a3 = fixture("a3.alg");
    let o = icelab(&dir, &["catalog", a3.to_str().unwrap(), "--cap", "2", "--no-cache"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn dot_export_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("first.dot");
    let second = dir.path().join("second.dot");
    for p in [&first, &second] {
        let o = icelab(&dir, &["torf", &a2(), "--dot", p.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
    }
    let text = std::fs::read_to_string(&first).unwrap();
    assert_eq!(text, std::fs::read_to_string(&second).unwrap());
    assert_eq!(text.matches("[label=").count(), 5);
    assert_eq!(text.matches(" -> ").count(), 5);

    let semi = fixture("semisimple2.alg");
    let o = icelab(&dir, &["torf", semi.to_str().unwrap(), "--dot", "-"]);
    let out = stdout(&o);
    assert!(out.starts_with("torf 4\n"));
    assert_eq!(out.matches(" -> ").count(), 4);
}

#[test]
fn reports_are_identical_with_and_without_cache() {
    let dir = tempfile::tempdir().unwrap();
    let a3 = fixture("a3.alg").display().to_string();
    let built = icelab(&dir, &["verify", &a3, "--m", "1"]);
    let cached = icelab(&dir, &["verify", &a3, "--m", "1"]);
    assert!(String::from_utf8_lossy(&built.stderr).contains("built"));
    assert!(String::from_utf8_lossy(&cached.stderr).contains("cached"));
    assert_eq!(built.stdout, cached.stdout);
    assert_eq!(cached.status.code(), Some(0));
    assert!(std::fs::read_dir(dir.path()).unwrap().count() >= 1);
}

#[test]
fn jperp_by_label_and_index() {
    let dir = tempfile::tempdir().unwrap();
    let by_label = icelab(&dir, &["jperp", &a2(), "--module", "P1"]);
    let by_index = icelab(&dir, &["jperp", &a2(), "--module", "2"]);
    assert_eq!(stdout(&by_label), "{S1}\n");
    assert_eq!(by_label.stdout, by_index.stdout);
    let empty = icelab(&dir, &["jperp", &a2(), "--module", ""]);
    assert_eq!(stdout(&empty), "{S1,S2,P1}\n");
    let not_rigid = icelab(&dir, &["jperp", &a2(), "--module", "S1,S2"]);
    assert_eq!(not_rigid.status.code(), Some(2));
}

#[test]
fn other_primes_and_threads() {
    let dir = tempfile::tempdir().unwrap();
    let o = icelab(&dir, &["--threads", "1", "torf", &a2(), "--field", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("torf 5\n"));
    let f3 = fixture("a2_f3.alg");
    let o = icelab(&dir, &["enumerate", f3.to_str().unwrap(), "--kind", "maxjoin_seqs", "--m", "2"]);
    assert!(stdout(&o).ends_with("count 12\n"));
}
