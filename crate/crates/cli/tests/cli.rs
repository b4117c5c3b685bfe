use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use hopflab::families::{sigma_t, sweedler, MatchedPair};
use hopflab::io::{self, Form};
use hopflab::kac::CentralPairing;
use hopflab::{crossed::dual_numbers_system, BiForm, Field, LinForm, LinMap, Scalar};
use serde_json::Value;
use tempfile::TempDir;

fn h4_path() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/data/h4.json")
}

fn hopflab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopflab")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

fn report(path: &str) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn sigma_file(dir: &TempDir, name: &str, t: i64) -> String {
    let h = sweedler(&Field::Rational).unwrap();
    let s = sigma_t(&h, &Scalar::from_i64(&Field::Rational, t)).unwrap();
    write(dir, name, &io::form_to_text(&Form::Bilinear(s)))
}

#[test]
fn verify_bundled_algebra() {
    let o = hopflab(&["verify", "--algebra", h4_path().to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("antipode: ok"));
}

#[test]
fn oracle_report_over_f3() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("z.json");
    let o = hopflab(&["oracle", "z2l", "--field", "f3", "--algebra", h4_path().to_str().unwrap(), "--report", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let r = report(out.to_str().unwrap());
    assert_eq!(r["quotient"]["order"], 3);
    assert_eq!(r["quotient"]["description"], "Z3");
    assert_eq!(r["z2_count"], 3);
    assert_eq!(r["b2_count"], 1);
    assert!(r["residual_dim"].as_u64().is_some());
    assert!(r["wall_time_ms"].as_u64().is_some());
}

#[test]
fn cocycle_check_exit_codes() {
    let dir = TempDir::new().unwrap();
    let good = sigma_file(&dir, "s.json", 2);
    let o = hopflab(&["cocycle-check", "--family", "sweedler", "--form", &good]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("lazy 2-cocycle: yes"));

    let h = sweedler(&Field::Rational).unwrap();
    let mut bad = BiForm::counit(&h);
    bad.0.set(2, 2, Scalar::from_i64(&Field::Rational, 1));
    bad.0.set(2, 3, Scalar::from_i64(&Field::Rational, 1));
    let bad = write(&dir, "bad.json", &io::form_to_text(&Form::Bilinear(bad)));
    let o = hopflab(&["cocycle-check", "--family", "sweedler", "--form", &bad]);
    assert_eq!(code(&o), 1);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&hopflab(&["no-such-verb"])), 2);
    assert_eq!(code(&hopflab(&["verify"])), 2);
    assert_eq!(code(&hopflab(&["verify", "--family", "sweedler", "--field", "f4"])), 2);
    let dir = TempDir::new().unwrap();
    let text = std::fs::read_to_string(h4_path()).unwrap().replacen("\"unit\": [\"1\"", "\"unit\": [\"3//2\"", 1);
    let p = write(&dir, "broken.json", &text);
    let o = hopflab(&["verify", "--algebra", &p]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line"));
}

#[test]
fn twist_by_lazy_cocycle_is_unchanged() {
    let dir = TempDir::new().unwrap();
    let s = sigma_file(&dir, "s.json", 5);
    let o = hopflab(&["twist", "--algebra", h4_path().to_str().unwrap(), "--form", &s]);
    assert_eq!(code(&o), 0);
    let twisted = io::parse_hopf(&stdout(&o)).unwrap();
    assert!(twisted.same_structure(&sweedler(&Field::Rational).unwrap()));
}

#[test]
fn coboundary_of_non_lazy_form_is_not_lazy() {
    let dir = TempDir::new().unwrap();
    let f = Field::Rational;
    let mu = LinForm(vec![Scalar::from_i64(&f, 1), Scalar::from_i64(&f, -1), Scalar::from_i64(&f, 3), Scalar::from_i64(&f, 0)]);
    let mu = write(&dir, "mu.json", &io::form_to_text(&Form::Linear(mu)));
    let out = dir.path().join("d.json");
    let o = hopflab(&["coboundary", "--family", "sweedler", "--form", &mu, "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let o = hopflab(&["cocycle-check", "--family", "sweedler", "--form", out.to_str().unwrap()]);
    assert!(stdout(&o).contains("left cocycle: ok"));
    assert!(stdout(&o).contains("lazy: FAILS"));
    assert_eq!(code(&o), 1);
}

#[test]
fn convolve_inverse_pair_gives_counit() {
    let dir = TempDir::new().unwrap();
    let a = sigma_file(&dir, "a.json", 3);
    let b = sigma_file(&dir, "b.json", -3);
    let o = hopflab(&["convolve", "--family", "sweedler", "--form", &a, "--form", &b]);
    assert_eq!(code(&o), 0);
    let h = sweedler(&Field::Rational).unwrap();
    assert_eq!(io::parse_form(&stdout(&o)).unwrap(), Form::Bilinear(BiForm::counit(&h)));
}

#[test]
fn galois_and_cotensor() {
    let dir = TempDir::new().unwrap();
    let s = sigma_file(&dir, "s.json", 1);
    let t = sigma_file(&dir, "t.json", 2);
    let out = dir.path().join("g.json");
    let o = hopflab(&["galois", "--side", "bi", "--family", "sweedler", "--form", &s, "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert_eq!(report(out.to_str().unwrap())["galois"], true);
    let o = hopflab(&["cotensor", "--family", "sweedler", "--form", &s, "--form", &t]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("cotensor has dim 4"));
}

#[test]
fn kac_trivial_pairing() {
    let dir = TempDir::new().unwrap();
    let h = sweedler(&Field::Rational).unwrap();
    let mp = MatchedPair::trivial(&h, &h).unwrap();
    let beta = CentralPairing::trivial(&mp).matrix().clone();
    let beta = write(&dir, "beta.json", &io::form_to_text(&Form::Map(LinMap(beta))));
    let o = hopflab(&["kac", "check-pairing", "--family", "sweedler", "--form", &beta]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let o = hopflab(&["kac", "sigma", "--family", "sweedler", "--form", &beta]);
    assert_eq!(code(&o), 0);
    let sigma = io::parse_form(&stdout(&o)).unwrap().bilinear().unwrap();
    assert_eq!(sigma.0.rows(), 16);

    let mp_path = write(&dir, "mp.json", &io::matched_pair_to_text(&mp));
    let s = sigma_file(&dir, "s.json", 1);
    let o = hopflab(&["kac", "yamazaki", "--pair", &mp_path, "--form", &s, "--form", &s]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn projrep_verbs() {
    let dir = TempDir::new().unwrap();
    let s = sigma_file(&dir, "s.json", 1);
    let t = sigma_file(&dir, "t.json", 4);
    let cases: [Vec<&str>; 4] = [vec!["regular", "--form", &s], vec!["dual", "--form", &s], vec!["check", "--form", &s], vec!["tensor", "--form", &s, "--form", &t]];
    for args in cases {
        let mut full = vec!["projrep", "--family", "sweedler"];
        full.extend(args);
        let o = hopflab(&full);
        assert_eq!(code(&o), 0, "{full:?}: {}", stdout(&o));
    }
}

#[test]
fn crossed_system_file() {
    let dir = TempDir::new().unwrap();
    let cs = dual_numbers_system(&sweedler(&Field::Rational).unwrap()).unwrap();
    let p = write(&dir, "cs.json", &io::crossed_to_text(&cs));
    let o = hopflab(&["crossed", "--system", &p]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("crossed product has dim"));
}

#[test]
fn family_descriptors() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "z2.json", &io::group_to_text(&hopflab::families::FiniteGroup::cyclic(2)));
    for desc in ["sweedler", "en:2", "taft:3", &format!("group:{g}")] {
        let o = hopflab(&["family", "--family", desc]);
        assert_eq!(code(&o), 0, "{desc}");
        assert!(io::parse_hopf(&stdout(&o)).unwrap().verify_hopf_axioms().passes());
    }
    assert_eq!(code(&hopflab(&["family", "--family", "nonsense:1"])), 2);
}

#[test]
fn reports_are_deterministic() {
    let dir = TempDir::new().unwrap();
    let s = sigma_file(&dir, "s.json", 7);
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    for out in [&a, &b] {
        let o = hopflab(&["cocycle-check", "--family", "sweedler", "--form", &s, "--out", out.to_str().unwrap()]);
        assert_eq!(code(&o), 0);
    }
    assert_eq!(std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
}

#[test]
fn quick_suite_passes() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("suite.json");
    let o = hopflab(&["suite", "--level", "quick", "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let r = report(out.to_str().unwrap());
    assert_eq!(r["passed"], true);
    assert_eq!(r["criteria"].as_array().unwrap().len(), 11);
}
