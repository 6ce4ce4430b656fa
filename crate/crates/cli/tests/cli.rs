use std::process::{Command, Output};

fn knomial(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_knomial"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> &str {
    std::str::from_utf8(&out.stdout).unwrap()
}

#[test]
fn coeff_prints_exact_decimals() {
    for (args, want) in [
        (["--k", "5", "--n", "3", "--h", "7"], "18\n"),
        (["--k", "5", "--n", "3", "--h", "99"], "0\n"),
        (["--k", "3", "--n", "4", "--h", "4"], "19\n"),
        (
            ["--k", "3", "--n", "100", "--h", "100"],
            "25134265191388162956642519120384003897467908119\n",
        ),
    ] {
        let out = knomial(&[&["coeff"][..], &args].concat());
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(stdout(&out), want);
    }
}

#[test]
fn triangle_csv_outputs() {
    let out = knomial(&["triangle", "--k", "2", "--n-max", "4", "--format", "csv"]);
    assert_eq!(stdout(&out), "1\n1,1\n1,2,1\n1,3,3,1\n1,4,6,4,1\n");
    let out = knomial(&["triangle", "--k", "4", "--n-max", "2", "--format", "csv"]);
    assert_eq!(stdout(&out), "1\n1,1,1,1\n1,2,3,4,3,2,1\n");
}

#[test]
fn triangle_json_is_line_delimited() {
    let out = knomial(&["triangle", "--k", "3", "--n-max", "2", "--format", "json"]);
    assert_eq!(
        stdout(&out),
        concat!(
            "{\"k\":3,\"n\":0,\"coefficients\":[\"1\"]}\n",
            "{\"k\":3,\"n\":1,\"coefficients\":[\"1\",\"1\",\"1\"]}\n",
            "{\"k\":3,\"n\":2,\"coefficients\":[\"1\",\"2\",\"3\",\"2\",\"1\"]}\n",
        )
    );
}

#[test]
fn triangle_text_centers_order_five() {
    let out = knomial(&["triangle", "--k", "5", "--n-max", "2"]);
    assert_eq!(
        stdout(&out),
        "line 0:         1\nline 1:     1 1 1 1 1\nline 2: 1 2 3 4 5 4 3 2 1\n"
    );
}

#[test]
fn output_is_deterministic() {
    let args = ["triangle", "--k", "6", "--n-max", "12", "--format", "json"];
    assert_eq!(knomial(&args).stdout, knomial(&args).stdout);
}

#[test]
fn even_order_verify_passes() {
    let out = knomial(&["verify", "--k", "6", "--n-max", "8", "--m-max", "4"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("P7           PASS"));
    let seq = knomial(&[
        "verify",
        "--k",
        "6",
        "--n-max",
        "8",
        "--m-max",
        "4",
        "--sequential",
    ]);
    assert_eq!(seq.stdout, out.stdout);
}

#[test]
fn bench_compares_strategies() {
    let out = knomial(&["bench", "--k", "3", "--n", "500"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("results equal"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["verify", "--k", "1", "--n-max", "3"][..],
        &["coeff", "--k", "3", "--n", "-1", "--h", "0"],
        &["row", "--n", "3"],
        &["verify", "--k", "3", "--perturb", "P12"],
    ] {
        let out = knomial(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert_eq!(std::str::from_utf8(&out.stderr).unwrap().lines().count(), 1);
    }
}
