use std::process::{Command, Output};

fn confal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_confal")).args(args).output().expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    confal(args).status.code().expect("exit code")
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = confal(&full);
    serde_json::from_slice(&out.stdout).expect("json report")
}

#[test]
fn documented_commands_pass() {
    let runs: [&[&str]; 6] = [
        &["verify-axioms", "--family", "rkk:2", "--k", "2", "--max-weight", "4"],
        &["probe-simplicity", "--family", "star2", "--k", "2", "--window", "5", "--slack", "2"],
        &["probe-generators", "--family", "rkk:1", "--k", "1", "--max-weight", "6"],
        &["oracle-crosscheck", "--k", "2", "--max-exp", "3"],
        &["jordan-check", "--kind", "A", "--k", "2", "--ell", "0"],
        &["corpus", "--tag", "(3.7)", "--tag", "(4.54)"],
    ];
    for args in runs {
        assert_eq!(code(args), 0, "{args:?}");
    }
}

#[test]
fn basis_listing() {
    let r = json(&["basis", "--family", "rkk:2", "--k", "1", "--weight", "5"]);
    assert_eq!(r["schema"], "confal-report/1");
    assert_eq!(r["exit_code"], 0);
    assert_eq!(r["result"]["dimension"], 4);
    let elements: Vec<&str> = r["result"]["elements"].as_array().unwrap().iter().map(|e| e.as_str().unwrap()).collect();
    assert_eq!(elements, ["E[1,1]{0,0}(0,3)", "E[1,1]{0,0}(1,2)", "E[1,1]{0,0}(2,1)", "E[1,1]{0,0}(3,0)"]);
}

#[test]
fn bad_parameters_exit_with_two() {
    let runs: [&[&str]; 5] = [
        &["verify-axioms", "--k", "0"],
        &["basis", "--family", "dagger1", "--k", "3", "--weight", "2"],
        &["basis", "--family", "rkk:1", "--weight", "2"],
        &["corpus", "--tag", "(9.99)"],
        &["jordan-check", "--kind", "Z"],
    ];
    for args in runs {
        let out = confal(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn reports_are_reproducible() {
    let args = ["probe-simplicity", "--family", "dagger1", "--k", "2", "--window", "4", "--format", "json"];
    let first = confal(&args).stdout;
    assert_eq!(first, confal(&args).stdout);
    let mut seq = args.to_vec();
    seq.push("--sequential");
    assert_eq!(first, confal(&seq).stdout);
}

#[test]
fn sampled_sweeps_depend_only_on_the_seed() {
    let args = ["verify-axioms", "--k", "1", "--max-weight", "3", "--sample", "10", "--seed", "7", "--format", "json"];
    let first = confal(&args).stdout;
    assert_eq!(first, confal(&args).stdout);
    let v: serde_json::Value = serde_json::from_slice(&first).unwrap();
    assert_eq!(v["outcome"], "pass");
}

#[test]
fn report_goes_to_the_output_file() {
    let path = std::env::temp_dir().join(format!("confal-report-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    assert_eq!(code(&["fixtures", "--depth", "2", "--format", "json", "--output", p]), 0);
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(v["command"], "fixtures");
    assert_eq!(v["schema"], "confal-report/1");
}
