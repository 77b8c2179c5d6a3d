use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use ngroupoid::ObjectiveSkeleton;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ngroupoid"))
        .args(args)
        .env_remove("NGROUPOID_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn generate(dir: &Path, name: &str, n: usize, mode: &str, seed: u64) -> PathBuf {
    let p = dir.join(name);
    let o = run(&[
        "generate",
        "--n",
        &n.to_string(),
        "--mode",
        mode,
        "--seed",
        &seed.to_string(),
        "--out",
        path_str(&p),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    p
}

#[test]
fn skeleton_counts() {
    let o = run(&["skeleton", "--n", "3"]);
    assert_eq!(code(&o), 0);
    assert!(
        stdout(&o).starts_with("vertices: 8, edges: 12, 2-faces: 6\n"),
        "{}",
        stdout(&o)
    );

    let o = run(&["skeleton", "--n", "1"]);
    assert!(stdout(&o).starts_with("vertices: 2, edges: 1\n"), "{}", stdout(&o));

    let o = run(&["skeleton", "--n", "4", "--h", "2"]);
    assert_eq!(stdout(&o).trim(), "24");
}

#[test]
fn skeleton_rejects_bad_dimensions() {
    assert_eq!(code(&run(&["skeleton", "--n", "0"])), 2);
    assert_eq!(code(&run(&["skeleton", "--n", "13"])), 2);
    assert_eq!(code(&run(&["skeleton", "--n", "3", "--h", "3"])), 2);
}

#[test]
fn dimension_cap_follows_the_environment() {
    let bin = env!("CARGO_BIN_EXE_ngroupoid");
    let o = Command::new(bin)
        .args(["skeleton", "--n", "14", "--h", "13"])
        .env("NGROUPOID_MAX_N", "14")
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "28");
    let o = Command::new(bin)
        .args(["skeleton", "--n", "4"])
        .env("NGROUPOID_MAX_N", "3")
        .output()
        .unwrap();
    assert_eq!(code(&o), 2);
}

#[test]
fn skeleton_edge_listing() {
    let o = run(&["skeleton", "--n", "2", "--edges"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.contains("->")).count(), 4, "{text}");
}

#[test]
fn check_generated_skeletons() {
    let dir = tempfile::tempdir().unwrap();
    let good = generate(dir.path(), "good.json", 3, "conservative", 42);
    let o = run(&["check", path_str(&good)]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("checkers agree: conservative"));

    let bad = generate(dir.path(), "bad.json", 3, "perturbed", 42);
    let report = dir.path().join("report.json");
    let o = run(&["check", path_str(&bad), "--out", path_str(&report)]);
    assert_eq!(code(&o), 1);
    assert_eq!(stdout(&o).matches("witness:").count(), 2);
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["verdict"], false);
    assert_eq!(v["oracle_verdict"], false);
    assert_eq!(v["witnesses"].as_array().unwrap().len(), 2);
}

#[test]
fn check_rejects_truncated_files() {
    let dir = tempfile::tempdir().unwrap();
    let good = generate(dir.path(), "good.json", 2, "conservative", 1);
    let text = fs::read_to_string(&good).unwrap();
    let cut = dir.path().join("cut.json");
    fs::write(&cut, &text[..text.len() / 2]).unwrap();
    let o = run(&["check", path_str(&cut)]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line"));
    assert_eq!(code(&run(&["check", path_str(&dir.path().join("missing.json"))])), 2);
}

#[test]
fn check_against_a_mixture() {
    let dir = tempfile::tempdir().unwrap();
    let mix = fixture("four_point.json");
    let t = dir.path().join("t.json");
    let o = run(&[
        "generate",
        "--mixture",
        path_str(&mix),
        "--seed",
        "3",
        "--out",
        path_str(&t),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let o = run(&["check", path_str(&t), path_str(&mix)]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("membership: every edge"));

    // raw labels are not base points of the mixture
    let raw = generate(dir.path(), "raw.json", 3, "conservative", 3);
    assert_eq!(code(&run(&["check", path_str(&raw), path_str(&mix)])), 2);
}

#[test]
fn uniformity_fixtures() {
    let o = run(&["uniformity", path_str(&fixture("identical.json"))]);
    assert_eq!(code(&o), 0);

    let o = run(&["uniformity", path_str(&fixture("rotated.json"))]);
    assert_eq!(code(&o), 1);
    let text = stdout(&o);
    assert!(text.contains("misalignment: X -> Y"));
    assert!(text.contains("misalignment: Y -> X"));
    assert!(text.contains("note: all constituents individually uniform"));

    assert_eq!(
        code(&run(&["uniformity", path_str(&fixture("rotated_cyclic.json"))])),
        0
    );

    let o = run(&["uniformity", path_str(&fixture("unimplanted.json"))]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("`fibre`: not transitive"));
}

#[test]
fn uniformity_rejects_invalid_specs() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.json");
    let text = fs::read_to_string(fixture("rotated.json"))
        .unwrap()
        .replace("\"trivial\"", "\"icosahedral\"");
    fs::write(&p, text).unwrap();
    let o = run(&["uniformity", path_str(&p)]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("symmetry"));
}

#[test]
fn generate_round_trips() {
    let o = run(&["generate", "--n", "3", "--seed", "9"]);
    assert_eq!(code(&o), 0);
    let parsed = ObjectiveSkeleton::from_json(&stdout(&o)).unwrap();
    assert_eq!(parsed, ngroupoid::analysis::random_conservative(3, 9));
    assert_eq!(code(&run(&["generate", "--n", "0"])), 2);
    assert_eq!(code(&run(&["generate"])), 2);
}

#[test]
fn verify_theorem_sweeps() {
    let o = run(&["verify-theorem", "--n", "3", "--trials", "100", "--seed", "7"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("200/200 agreements"));

    let o = run(&["verify-theorem", "--n", "2", "--trials", "1", "--seed", "0"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("2/2 agreements"));

    assert_eq!(
        code(&run(&["verify-theorem", "--n", "6", "--trials", "1", "--seed", "0"])),
        2
    );
    assert_eq!(
        code(&run(&["verify-theorem", "--n", "3", "--trials", "0", "--seed", "0"])),
        2
    );
}

#[test]
fn verify_theorem_at_five_dimensions() {
    let start = std::time::Instant::now();
    let o = run(&["verify-theorem", "--n", "5", "--trials", "10", "--seed", "1"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("20/20 agreements"));
    assert!(start.elapsed().as_secs() < 60);
}

#[test]
fn compose_files() {
    let dir = tempfile::tempdir().unwrap();
    let t = generate(dir.path(), "t.json", 2, "conservative", 5);
    let out = dir.path().join("c.json");
    // self-composition needs matching facets, which random weights lack
    let o = run(&["compose", path_str(&t), path_str(&t), "--axis", "1"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).starts_with("not composable:"));

    let t = ObjectiveSkeleton::from_json(&fs::read_to_string(&t).unwrap()).unwrap();
    let unit = ngroupoid::unit_skeleton(&t.source_facet(1).unwrap(), 1).unwrap();
    let (tp, tu) = (dir.path().join("t2.json"), dir.path().join("u.json"));
    fs::write(&tp, t.to_json()).unwrap();
    fs::write(&tu, unit.to_json()).unwrap();
    let o = run(&[
        "compose",
        path_str(&tp),
        path_str(&tu),
        "--axis",
        "1",
        "--out",
        path_str(&out),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let c = ObjectiveSkeleton::from_json(&fs::read_to_string(&out).unwrap()).unwrap();
    assert!(c.approx_eq(&t, 1e-12));

    assert_eq!(code(&run(&["compose", path_str(&tp), path_str(&tu), "--axis", "3"])), 2);
}

#[test]
fn reports_are_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    let bad = generate(dir.path(), "bad.json", 4, "perturbed", 8);
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    let first = run(&["check", path_str(&bad), "--out", path_str(&a)]);
    let second = run(&["check", path_str(&bad), "--out", path_str(&b)]);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&run(&[])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
    assert_eq!(code(&run(&["check"])), 2);
}
