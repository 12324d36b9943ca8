use std::process::{Command, Output};

fn ncphase(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ncphase")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_passes() {
    let o = ncphase(&["verify", "--samples", "20"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    assert!(text.contains("# failed=0"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn unknown_orbit_is_a_config_error() {
    let o = ncphase(&["orbit", "--algebra", "Minkowski"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("Minkowski") && err.contains("galilei") && err.contains("static-noncentral"), "{err}");
}

#[test]
fn missing_command_and_bad_flags_exit_two() {
    assert_eq!(ncphase(&[]).status.code(), Some(2));
    assert_eq!(ncphase(&["simulate", "--dt", "-1"]).status.code(), Some(2));
    assert_eq!(ncphase(&["list", "--format", "xml"]).status.code(), Some(2));
    assert_eq!(ncphase(&["orbit", "--algebra", "G", "--variant", "isotropic"]).status.code(), Some(2));
}

#[test]
fn blow_up_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.toml");
    std::fs::write(
        &cfg,
        "command = \"simulate\"\n[sim]\nt_end = 10000.0\ndt = 5.0\n[sim.potential]\nquadratic = [[1.0, 0.0], [0.0, 1.0]]\n",
    )
    .unwrap();
    let o = ncphase(&["--config", cfg.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn classify_lists_the_taxonomy() {
    let o = ncphase(&["classify", "--samples", "5", "--format", "json-lines"]);
    assert!(o.status.success());
    let rows: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows[0]["metadata"]["command"], "classify");
    let class = |n: &str| rows.iter().find(|r| r["name"] == n).unwrap()["class"].as_str().unwrap().to_string();
    assert_eq!(class("galilei"), "position_nc");
    assert_eq!(class("para-galilei+"), "momentum_nc");
    for n in ["newton-hooke+", "newton-hooke-", "static", "carroll"] {
        assert_eq!(class(n), "fully_nc");
    }
}

#[test]
fn runs_are_deterministic() {
    for args in [
        &["simulate", "--algebra", "para-galilei+", "--t-end", "2"][..],
        &["verify", "--samples", "10", "--seed", "4"][..],
        &["realize", "--t-end", "1", "--dt", "0.1"][..],
    ] {
        let (a, b) = (ncphase(args), ncphase(args));
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn dumped_config_reproduces_the_run() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["simulate", "--algebra", "galilei", "--param", "m=3/2", "--t-end", "1.5", "--dt", "0.01", "--format", "csv"];
    let direct = ncphase(&args);
    assert!(direct.status.success());
    let mut dump_args = args.to_vec();
    dump_args.push("--dump-config");
    let dump = ncphase(&dump_args);
    assert!(dump.status.success());
    let cfg = dir.path().join("run.toml");
    std::fs::write(&cfg, &dump.stdout).unwrap();
    let replay = ncphase(&["--config", cfg.to_str().unwrap()]);
    assert_eq!(replay.stdout, direct.stdout);
}

#[test]
fn output_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("orbit.jsonl");
    let args = ["orbit", "--algebra", "static", "--format", "json-lines", "--samples", "5"];
    let printed = ncphase(&args);
    let mut file_args = args.to_vec();
    let out_s = out.to_str().unwrap();
    file_args.extend(["--out", out_s]);
    assert!(ncphase(&file_args).status.success());
    assert_eq!(std::fs::read(&out).unwrap(), printed.stdout);
    let lines: Vec<serde_json::Value> =
        stdout(&printed).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines[1]["class"], "fully_nc");
    assert!(lines[1]["mu_e"].is_number());
}

#[test]
fn list_shows_the_catalog() {
    let o = ncphase(&["list"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("name,long_name,variant,dim"));
    assert!(text.lines().any(|l| l.starts_with("S,") && l.contains("noncentral_ext")));
}
