use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wreathmatch"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf8")
}

#[test]
fn table_json_cell() {
    let o = run(&["table", "--series", "A", "--family", "r", "--n", "5", "--k", "5", "--specialize", "p=1,q=1,r=1,x=0", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let cell = &v["grid"][0];
    assert_eq!(cell["family"], "r");
    assert_eq!(cell["series"], "A");
    assert_eq!(cell["n"], 5);
    assert_eq!(cell["k"], 5);
    assert_eq!(cell["value"], "64876");
}

#[test]
fn table_u_d_and_k1_row() {
    let o = run(&["table", "--series", "U", "--family", "d", "--n", "6", "--k", "5", "--format", "csv"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("d,U,6,5,1329920"));

    let o = run(&["table", "--series", "V", "--family", "w", "--n-min", "3", "--n-max", "7", "--k", "1", "--format", "csv"]);
    let values: Vec<String> = stdout(&o).lines().skip(1).map(|l| l.rsplit(',').next().unwrap().to_string()).collect();
    assert_eq!(values, ["0", "5", "43", "230", "990"]);
}

#[test]
fn poly_json_coefficients() {
    let o = run(&["poly", "--target", "A", "--family", "d", "--n", "5", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let p = &v["polynomials"][0];
    assert_eq!(p["variable"], "k");
    let c: Vec<&str> = p["coefficients"].as_array().unwrap().iter().map(|c| c.as_str().unwrap()).collect();
    assert_eq!(c, ["0", "1", "26", "66", "26", "1"]);

    let o = run(&["poly", "--target", "U", "--family", "r", "--n", "3"]);
    assert!(stdout(&o).contains("(1/6)k(k+1)(k+2)"));
}

#[test]
fn verify_exit_codes() {
    let o = run(&["verify", "oracle-gf", "--n-max", "4", "--k-max", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("PASS"));

    let o = run(&["verify", "lemmas", "--n-max", "4", "--k-max", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn usage_and_guard_errors() {
    assert_eq!(run(&["table", "--series", "Q"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    let o = run(&["table", "--series", "D", "--family", "r", "--n", "13", "--k", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("guard"));
}

#[test]
fn deterministic_across_thread_counts() {
    let args = ["table", "--series", "D", "--family", "w", "--n", "4", "--k", "1", "--format", "json"];
    let one = run(&[&args[..], &["--threads", "1"]].concat());
    let four = run(&[&args[..], &["--threads", "4"]].concat());
    assert_eq!(one.stdout, four.stdout);
}
