use std::path::PathBuf;
use std::process::{Command, Output};

use reeslab::modspec::ModuleSpec;
use reeslab::Settings;

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn golden(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name].iter().collect();
    std::fs::read_to_string(p).unwrap()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_reeslab")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn theorem_check_on_the_plane_ideal_is_verified() {
    let o = run(&["check", "--theorem", "T3.2", &data("ideal_xy.json"), "--seed", "7"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("T3.2 on (x,y): verified"));
}

#[test]
fn rees_ideal_of_square_lists_the_fiber_quadric() {
    let o = run(&["rees", &data("sq_max_ideal.json")]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("  T2^2 - T1*T3\n"));
    assert!(out.contains("linear type: false"));
}

#[test]
fn golden_reports() {
    for (args, file) in [
        (vec!["rees", "ideal_xy.json", "--json"], "rees_ideal_xy.json"),
        (vec!["rees", "sq_max_ideal.json", "--json"], "rees_sq_max_ideal.json"),
        (vec!["fiber", "sq_max_ideal.json", "--json"], "fiber_sq_max_ideal.json"),
        (vec!["check", "--theorem", "T3.2", "ideal_xy.json", "--seed", "7", "--json"], "check_t32_ideal_xy.json"),
    ] {
        let args: Vec<String> =
            args.iter().map(|a| if a.ends_with(".json") && !a.starts_with("--") { data(a) } else { a.to_string() }).collect();
        let refs: Vec<&str> = args.iter().map(|s| s.as_str()).collect();
        let o = run(&refs);
        assert_eq!(code(&o), 0, "{file}");
        assert_eq!(stdout(&o), golden(file), "{file}");
    }
}

#[test]
fn exit_code_classes() {
    for bad in ["bad_ragged.json", "bad_poly.json", "bad_json.json", "bad_char.json", "missing.json"] {
        let o = run(&["rees", &data(bad)]);
        assert_eq!(code(&o), 1, "{bad}");
        assert!(!o.stderr.is_empty());
    }
    let o = run(&["rees", &data("bad_poly.json")]);
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 1, column 3") && err.contains("ideal[1]"), "{err}");
    let o = run(&["rees", &data("bad_json.json")]);
    assert!(String::from_utf8(o.stderr).unwrap().contains("line 3"));
    assert_eq!(code(&run(&["check", &data("ideal_xy.json")])), 1);
    assert_eq!(code(&run(&["check", "--theorem", "T0.0", &data("ideal_xy.json")])), 1);
    assert_eq!(code(&run(&["frobnicate"])), 1);

    assert_eq!(code(&run(&["check", "--theorem", "T2.11", &data("sq_max_ideal.json")])), 2);
    assert_eq!(code(&run(&["residual", &data("koszul_xy.json"), "--s", "2"])), 1);

    let o = run(&["rees", &data("sq_max_ideal.json"), "--budget", "1", "--json"]);
    assert_eq!(code(&o), 4);
    assert!(stdout(&o).contains("\"error\": \"budget\""));
}

#[test]
fn reports_are_deterministic() {
    for args in [
        vec!["bourbaki".to_string(), data("xy_plus_free.json"), "--json".into(), "--seed".into(), "3".into()],
        vec!["residual".to_string(), data("ideal_xyz.json"), "--s".into(), "3".into(), "--json".into()],
        vec!["powers".to_string(), data("pd1_3x2.json"), "--max-degree".into(), "3".into(), "--json".into()],
    ] {
        let refs: Vec<&str> = args.iter().map(|s| s.as_str()).collect();
        let a = run(&refs);
        let b = run(&refs);
        assert_eq!(code(&a), 0, "{args:?}");
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn gallery_output_does_not_depend_on_thread_count() {
    let a = run(&["gallery", "--json", "--jobs", "1", "--theorem", "T4.4"]);
    let b = run(&["gallery", "--json", "--jobs", "4", "--theorem", "T4.4"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["result"]["contradictions"], 0);
    assert!(v["result"]["modules"].as_u64().unwrap() >= 12);
}

#[test]
fn echoed_module_round_trips() {
    for f in ["ideal_xy.json", "sq_max_ideal.json", "koszul_xy.json", "xy_plus_free.json", "free_rank2.json", "pd1_3x2.json"] {
        let o = run(&["rees", &data(f), "--json"]);
        assert_eq!(code(&o), 0, "{f}");
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        let echoed: ModuleSpec = serde_json::from_value(v["module"].clone()).unwrap();
        let again = echoed.load(32003, Settings::default()).unwrap().module;
        let text = std::fs::read_to_string(data(f)).unwrap();
        let orig = ModuleSpec::from_json(&text).unwrap().load(32003, Settings::default()).unwrap().module;
        assert_eq!(again.invariants().unwrap(), orig.invariants().unwrap(), "{f}");
        assert_eq!(again.gen_degrees(), orig.gen_degrees(), "{f}");
    }
}

#[test]
fn output_file_flag() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let o = run(&["fiber", &data("ideal_xyz.json"), "--json", "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(v["result"]["analytic_spread"], 3);
    assert_eq!(v["result"]["reduction_number"], 0);
}
