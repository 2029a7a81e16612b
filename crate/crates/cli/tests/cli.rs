use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_higgsrel"))
        .args(args)
        .env_remove("HIGGSREL_ORDER")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf8")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

#[test]
fn gen_lowest_generator() {
    let o = run(&["gen", "--g", "2", "--n", "0", "--max-degree", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().filter(|l| l.contains("(c=")).collect();
    assert_eq!(lines.len(), 1);
    assert!(lines[0].contains("(c=2,r=1,s=1,t=0): 2*a*b + 2*g3"), "{text}");
}

#[test]
fn gen_lists_beta_power_and_gamma() {
    let o = run(&["gen", "--g", "2", "--n", "1", "--max-degree", "4"]);
    assert!(stdout(&o).contains("(c=3,r=0,s=2,t=0): 3*b^2"));
    let o = run(&["gen", "--g", "2", "--n", "0", "--max-degree", "9", "--format", "json"]);
    let v = json(&o);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["results"][0]["gamma"]["poly"], "g3^3");
}

#[test]
fn check_verdicts_and_exit_codes() {
    let o = run(&["check", "--g", "2", "--n", "2", "--poly", "a", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["verdict"], false);
    let comps = v["reports"][0]["components"].as_array().unwrap();
    assert!(comps.iter().any(|c| c["kind"] == "SYM" && c["witness"].is_object()));

    let o = run(&["check", "--g", "2", "--n", "0", "--poly", "g3^3"]);
    assert_eq!(o.status.code(), Some(0));

    // a plain generator needs u corrections before it lifts
    let o = run(&["check", "--g", "2", "--n", "0", "--poly", "2*a*b + 2*g3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("NOT A RELATION"));
}

#[test]
fn check_equivariant_class_text() {
    let class = higgsrel::classes::equivariant_family_84(2, 0, 0).unwrap().to_string();
    let o = run(&["check", "--g", "2", "--n", "2", "--poly", &class]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["check", "--g", "2", "--n", "0", "--poly", "a +* b"],
        vec!["check", "--g", "2", "--n", "0", "--poly", "zeta"],
        vec!["check", "--g", "1", "--n", "0", "--poly", "a"],
        vec!["gen", "--g", "3..2", "--max-degree", "3"],
        vec!["verify", "--suite", "nope"],
        vec!["verify", "--suite", "dims", "--jobs", "0"],
        vec!["gen"],
        vec!["frobnicate"],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!String::from_utf8_lossy(&o.stderr).contains("panicked"), "{args:?}");
    }
    let o = Command::new(env!("CARGO_BIN_EXE_higgsrel"))
        .args(["verify", "--suite", "series"])
        .env("HIGGSREL_ORDER", "many")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn parse_error_reports_position() {
    let o = run(&["check", "--g", "2", "--n", "0", "--poly", "a +* b"]);
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("byte 3"), "{err}");
}

#[test]
fn verify_dims_table() {
    let o = run(&["verify", "--suite", "dims", "--g", "2..4", "--n", "0..4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["schema"], 1);
    let dims = v["dims"].as_array().unwrap();
    assert_eq!(dims.len(), 15);
    assert!(dims.iter().all(|d| d["equal"] == true));
    assert_eq!(dims[0]["quotient"], 6);
    assert_eq!(dims[1]["quotient"], 9);
    assert_eq!(dims[5]["quotient"], 18);
}

#[test]
fn verify_main_per_degree() {
    let o = run(&["verify", "--suite", "main", "--g", "2", "--n", "0", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let degrees = v["main"][0]["degrees"].as_array().unwrap();
    assert_eq!(degrees.len(), 10);
    assert_eq!(degrees[3]["oracle_dim"], 1);
    assert!(degrees.iter().all(|d| d["equal"] == true));
}

#[test]
fn verify_identities_series_sympow() {
    for suite in ["identities", "series", "sympow"] {
        let o = run(&["verify", "--suite", suite]);
        assert_eq!(o.status.code(), Some(0), "{suite}: {}", stdout(&o));
    }
    let o = run(&["verify", "--suite", "series", "--order", "12", "--format", "json"]);
    let v = json(&o);
    assert!(v["checks"][0]["detail"].as_str().unwrap().contains("order 12"));
}

#[test]
fn environment_sets_default_order() {
    let o = Command::new(env!("CARGO_BIN_EXE_higgsrel"))
        .args(["verify", "--suite", "series", "--format", "json"])
        .env("HIGGSREL_ORDER", "11")
        .output()
        .unwrap();
    let v = json(&o);
    assert!(v["checks"][0]["detail"].as_str().unwrap().contains("order 11"));
    // the flag wins over the environment
    let o = Command::new(env!("CARGO_BIN_EXE_higgsrel"))
        .args(["verify", "--suite", "series", "--format", "json", "--order", "9"])
        .env("HIGGSREL_ORDER", "11")
        .output()
        .unwrap();
    assert!(json(&o)["checks"][0]["detail"].as_str().unwrap().contains("order 9"));
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--suite", "all", "--format", "json", "--seed", "3", "--jobs", "2"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
