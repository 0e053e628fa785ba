use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dioph-reduce")).args(args).output().expect("binary runs")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("dioph-reduce-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn compile_then_verify_matches_direct_verify() {
    for (f, mode, bound) in [("t1 - 5", "Z", "6"), ("t1^2 - 4", "Z", "2"), ("u - 3", "N", "1")] {
        let path = scratch(&format!("instance-{}.json", f.replace(['^', ' ', '*'], "_")));
        let compiled = bin(&["compile", "--f", f, "--mode", mode, "--out", path.to_str().unwrap()]);
        assert!(compiled.status.success());
        assert!(compiled.stdout.is_empty());
        let via_instance = bin(&["verify", "--instance", path.to_str().unwrap(), "--bound", bound]);
        let direct = bin(&["verify", "--f", f, "--mode", mode, "--bound", bound]);
        assert_eq!(via_instance.status.code(), Some(0));
        assert_eq!(via_instance.stdout, direct.stdout, "{f}");
    }
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    for args in [
        &["compile", "--f", "t1*t2 - 3"][..],
        &["verify", "--f", "t1 + t2 - 3", "--bound", "3"],
        &["smooth", "--f", "2*x^2 + 2*x"],
        &["stab-check", "--n", "3"],
    ] {
        let (a, b) = (bin(args), bin(args));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.status.code(), b.status.code());
    }
}

#[test]
fn file_input_with_comments() {
    let path = scratch("input.poly");
    std::fs::write(&path, "# a linear example\nt1 -\n  5   # constant\n").unwrap();
    let out = bin(&["smooth", "--file", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(json(&out)["input"]["expr"], "t1 - 5");
}

#[test]
fn subcommand_outputs() {
    let v = json(&bin(&["foursq", "--f", "u - 3"]));
    assert_eq!(v["transformed"]["expr"], "u_a^2 + u_b^2 + u_c^2 + u_d^2 - 3");
    assert_eq!((v["variables_out"].as_u64(), v["degree_out"].as_u64()), (Some(4), Some(2)));

    let v = json(&bin(&["homog", "--f", "t1^2 - 5"]));
    assert_eq!(v["homogenized"]["expr"], "t1^2 - 5*t_h^2");

    let v = json(&bin(&["stab-check", "--n", "3", "--bound", "1"]));
    assert_eq!((v["count"].as_u64(), v["all_g_form"].as_bool()), (Some(18), Some(true)));

    let v = json(&bin(&["ec-mul", "--k", "3"]));
    assert_eq!(v["kP"], serde_json::json!({"kind": "affine", "x": "-1/1", "y": "-1/1"}));

    let v = json(&bin(&["smooth", "--f", "2*x^2 + 2*x"]));
    assert_eq!(v["c"], 2);
    assert_eq!(v["schema_version"], 1);
}

#[test]
fn exit_codes_and_stderr() {
    let none = bin(&["verify", "--f", "t1^2 + 1", "--bound", "4"]);
    assert_eq!(none.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&none.stderr).contains("no witness within bound 4"));

    let parse = bin(&["smooth", "--f", "t1 +"]);
    assert_eq!(parse.status.code(), Some(2));
    assert!(parse.stdout.is_empty());

    assert_eq!(bin(&["compile", "--f", "7"]).status.code(), Some(2));
    assert_eq!(bin(&["compile", "--f", "t1 - 5", "--mode", "Q"]).status.code(), Some(2));
    assert_eq!(bin(&["stab-check", "--n", "3", "--bound", "2", "--eval-cap", "10"]).status.code(), Some(3));

    let tampered = scratch("tampered.json");
    std::fs::write(&tampered, "{\"schema_version\": 1}").unwrap();
    assert_eq!(bin(&["verify", "--instance", tampered.to_str().unwrap()]).status.code(), Some(2));
}
