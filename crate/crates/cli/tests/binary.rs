use std::process::Command;

fn dworklines(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_dworklines")).args(args).output().expect("spawn")
}

#[test]
fn picard_suite_json() {
    let out = dworklines(&["verify", "picard.*", "--seed", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["seed"], 3);
    let results = v["results"].as_array().unwrap();
    assert!((8..=12).contains(&results.len()));
    assert!(results.iter().all(|r| r["status"] == "pass" && r["elapsed"].is_number()));
}

#[test]
fn unknown_suite() {
    let out = dworklines(&["verify", "nosuch.*"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown suite"));
}

#[test]
fn plot_curves_csv() {
    let out = dworklines(&["plot-curves", "--psi5", "1/4", "--grid", "3", "--window", "2"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("sigma,tau,sign_fplus,sign_fminus"));
    assert_eq!(lines.count(), 9);
    assert_eq!(dworklines(&["plot-curves", "--psi5", "1/4", "--grid", "1"]).status.code(), Some(2));
}

#[test]
fn precision_from_env() {
    let out = Command::new(env!("CARGO_BIN_EXE_dworklines"))
        .args(["verify", "dp5.rep"])
        .env("DWORKLINES_PRECISION", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_dworklines"))
        .args(["verify", "dp5.rep", "--precision", "96"])
        .env("DWORKLINES_PRECISION", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}
