use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use gevrey::asympt::a_seq;
use gevrey::lens::{free_energy_genus, free_energy_table, LambdaConvention, LensSpace};
use gevrey::numeric::scalar::format_rational;
use gevrey_cli::CliError;
use serde_json::{json, Value};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_gevrey"));
    c.env_remove("GEVREY_CACHE_DIR");
    c
}

fn gevrey(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "exit {:?}: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn theta_file() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("graphs/theta.rg")
}

#[test]
fn lens_fe_matches_library() {
    let out = gevrey(&[
        "lens-fe", "--d", "2", "--b", "1", "--g", "2", "--order", "12", "--format", "json",
    ]);
    let v = json_of(&out);
    assert_eq!(v["schema"], "gevrey.lens-fe/1");
    let m = LensSpace::new(2, 1).unwrap();
    let want = free_energy_genus(&m, 2, 12, &LambdaConvention::default()).unwrap();
    assert_eq!(v["series"], serde_json::to_value(want.to_record()).unwrap());
    for t in v["series"]["terms"].as_array().unwrap() {
        assert!(t["coeff"].as_str().unwrap().contains('/'));
    }
}

#[test]
fn weight_of_theta() {
    let theta = theta_file();
    let v = json_of(&gevrey(&["weight", "--graph", theta.to_str().unwrap()]));
    assert_eq!(v["poly"], "2*N^3 - 2*N");
    assert_eq!(v["hbar_exp"], 1);
    let v = json_of(&gevrey(&[
        "weight",
        "--graph",
        theta.to_str().unwrap(),
        "--marking",
        "01",
    ]));
    assert_eq!(
        (v["genus"].as_u64(), v["boundary"].as_u64()),
        (Some(1), Some(1))
    );
}

#[test]
fn malformed_graph_reports_line() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.rg");
    std::fs::write(&p, "v: 1 2 3\nv: 4 5\n").unwrap();
    let out = gevrey(&["weight", "--graph", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn exit_codes() {
    let out = gevrey(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Usage"));
    assert_eq!(gevrey(&[]).status.code(), Some(1));
    assert_eq!(gevrey(&["--help"]).status.code(), Some(0));
    // gcd(4, 2) != 1
    assert_eq!(
        gevrey(&["lens-fe", "--d", "4", "--b", "2", "--g", "1", "--order", "4"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        gevrey(&["bernoulli", "--n", "3", "--modified"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(gevrey(&["stokes", "--g-max", "10"]).status.code(), Some(1));
    assert_eq!(
        gevrey(&["f-series", "--order", "6", "--format", "csv"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        gevrey(&["painleve-check", "--g-max", "3", "--format", "csv"])
            .status
            .code(),
        Some(1)
    );
    let e = CliError::from(gevrey::Error::Consistency("broken".into()));
    assert_eq!(e.exit_code(), 2);
}

#[test]
fn verify_all_passes() {
    let out = gevrey(&["verify", "--suite", "all", "--format", "text"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(out.status.code(), Some(0), "{text}");
    assert!(text.contains("PASS"));
    assert!(!text.contains("FAIL"));
    assert_eq!(
        gevrey(&["verify", "--suite", "bogus"]).status.code(),
        Some(1)
    );
}

#[test]
fn approx_is_added_alongside() {
    let plain = json_of(&gevrey(&["bernoulli", "--n", "4"]));
    let approx = json_of(&gevrey(&["bernoulli", "--n", "4", "--approx"]));
    assert_eq!(plain["value"], "-1/30");
    assert_eq!(approx["value"], "-1/30");
    assert_eq!(approx["value_approx"], "-0.0333333333333333333333333");
    assert!(plain.get("value_approx").is_none());
}

#[test]
fn lens_table_csv_and_json() {
    let args = [
        "lens-table",
        "--d",
        "3",
        "--b",
        "1",
        "--g-max",
        "2",
        "--d-max",
        "4",
    ];
    let m = LensSpace::new(3, 1).unwrap();
    let t = free_energy_table(&m, 2, 4, &LambdaConvention::default()).unwrap();
    let csv = gevrey(&[&args[..], &["--format", "csv"]].concat());
    assert_eq!(String::from_utf8(csv.stdout).unwrap(), t.to_csv());
    let v = json_of(&gevrey(&args));
    assert_eq!(v["entries"], serde_json::to_value(&t.entries).unwrap());
    assert_eq!(v["lambda_convention"], "dedekind*-1/2");
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["stokes", "--g-max", "40", "--depth", "4"][..],
        &[
            "tg-check", "--g-max", "20", "--depth", "3", "--format", "text",
        ][..],
        &[
            "lens-table",
            "--d",
            "5",
            "--b",
            "2",
            "--g-max",
            "3",
            "--d-max",
            "5",
            "--format",
            "csv",
        ][..],
        &["enumerate", "--n-max", "2", "--list"][..],
    ] {
        let a = gevrey(args);
        let b = gevrey(args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn floats_carry_precision() {
    let v = json_of(&gevrey(&[
        "richardson",
        "--g-max",
        "40",
        "--depth",
        "6",
        "--precision",
        "128",
    ]));
    assert_eq!(v["precision_bits"], 128);
    assert!(v["value"].as_str().unwrap().starts_with("0.1048689"));
    let v = json_of(&gevrey(&[
        "richardson",
        "--values",
        "2,3/2,4/3,1.25",
        "--depth",
        "1",
    ]));
    let x: f64 = v["value"].as_str().unwrap().parse().unwrap();
    assert!((x - 1.0).abs() < 1e-20, "{x}");
}

fn a_strings(g_max: usize) -> Vec<Value> {
    a_seq(g_max)
        .iter()
        .map(|q| json!(format_rational(q)))
        .collect()
}

#[test]
fn cache_round_trip_clear_and_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let w = json_of(&gevrey(&[
        "cache",
        "write",
        "--key",
        "a",
        "--max-index",
        "50",
        "--cache-dir",
        d,
    ]));
    assert_eq!(w["status"], "written");
    let r = json_of(&gevrey(&[
        "cache",
        "read",
        "--key",
        "a",
        "--max-index",
        "50",
        "--cache-dir",
        d,
    ]));
    assert_eq!(r["status"], "hit");
    assert_eq!(r["values"], Value::Array(a_strings(50)));

    // the environment variable is honoured and the cached prefix is served
    let out = bin()
        .args(["a-seq", "--g-max", "20"])
        .env("GEVREY_CACHE_DIR", d)
        .output()
        .unwrap();
    assert!(out.stderr.is_empty());
    assert_eq!(json_of(&out)["values"], Value::Array(a_strings(20)));

    // flip one byte inside the stored values
    let path = dir.path().join("a.json");
    let mut bytes = std::fs::read(&path).unwrap();
    let at = String::from_utf8_lossy(&bytes).find("-1/48").unwrap() + 4;
    bytes[at] = b'9';
    std::fs::write(&path, &bytes).unwrap();
    let r = json_of(&gevrey(&[
        "cache",
        "read",
        "--key",
        "a",
        "--max-index",
        "5",
        "--cache-dir",
        d,
    ]));
    assert_eq!(r["status"], "miss");
    let out = gevrey(&["a-seq", "--g-max", "10", "--cache-dir", d]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("corrupt"));
    assert_eq!(json_of(&out)["values"], Value::Array(a_strings(10)));
    // recomputation repaired the file
    let r = json_of(&gevrey(&[
        "cache",
        "read",
        "--key",
        "a",
        "--max-index",
        "10",
        "--cache-dir",
        d,
    ]));
    assert_eq!(r["status"], "hit");

    let c = json_of(&gevrey(&["cache", "clear", "--cache-dir", d]));
    assert_eq!(c["removed"], 1);
    let r = json_of(&gevrey(&[
        "cache",
        "read",
        "--key",
        "a",
        "--max-index",
        "5",
        "--cache-dir",
        d,
    ]));
    assert_eq!(r["status"], "miss");
}

#[test]
fn mu_cache_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let fresh = json_of(&gevrey(&["mu-seq", "--l-max", "6"]));
    json_of(&gevrey(&[
        "cache",
        "write",
        "--key",
        "mu",
        "--max-index",
        "6",
        "--cache-dir",
        d,
    ]));
    let cached = json_of(&gevrey(&["mu-seq", "--l-max", "6", "--cache-dir", d]));
    assert_eq!(fresh, cached);
}

#[test]
fn unwritable_cache_proceeds_uncached() {
    let dir = tempfile::tempdir().unwrap();
    let blocker = dir.path().join("file");
    std::fs::write(&blocker, "not a directory").unwrap();
    let bad = blocker.join("cache");
    let out = gevrey(&[
        "a-seq",
        "--g-max",
        "5",
        "--cache-dir",
        bad.to_str().unwrap(),
    ]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
    assert_eq!(json_of(&out)["values"], Value::Array(a_strings(5)));
    assert_eq!(
        gevrey(&["cache", "read", "--key", "a", "--max-index", "1"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn in_process_run_matches_binary() {
    let args = ["gevrey", "count-maps", "--g", "1", "--n", "3"];
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = gevrey_cli::run(args, &mut out, &mut err);
    assert_eq!(code, 0);
    assert_eq!(out, gevrey(&args[1..]).stdout);
    let v: Value = serde_json::from_slice(&out).unwrap();
    assert_eq!(v["count"], 20);
}

#[test]
fn series_and_constants() {
    let a = r#"{"valuation":1,"order":6,"terms":[{"exponent":1,"coeff":"1/1"}]}"#;
    let v = json_of(&gevrey(&["series", "--op", "exp", "--a", a]));
    let coeffs: Vec<&str> = v["result"]["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t["coeff"].as_str().unwrap())
        .collect();
    assert_eq!(coeffs, ["1/1", "1/1", "1/2", "1/6", "1/24", "1/120"]);
    let v = json_of(&gevrey(&[
        "series", "--op", "rescale", "--a", a, "--scalar", "-2",
    ]));
    assert_eq!(v["result"]["terms"][0]["coeff"], "-2/1");
    let v = json_of(&gevrey(&[
        "const-eval",
        "--expr",
        r#"[{"monomial":"sqrt(6)","coeff":"1/2"}]"#,
        "--digits",
        "12",
    ]));
    assert_eq!(v["value"], "1.22474487139");
    let v = json_of(&gevrey(&["polylog", "--alpha", "-1"]));
    assert_eq!(v["display"], "(x)/(1 - x)^2");
}

#[test]
fn asymptotic_checks() {
    let v = json_of(&gevrey(&["painleve-check", "--g-max", "12"]));
    assert_eq!(v["vanishes"], true);
    let v = json_of(&gevrey(&["transseries-check", "--l-max", "8"]));
    assert_eq!(v["horizon"], 87);
    let v = json_of(&gevrey(&["map-constants", "--g-max", "2"]));
    assert_eq!(v["rows"][2]["u"], "49/480");
    assert_eq!(
        v["rows"][2]["f"],
        json!({"rational": "0/1", "radical": "49/221184", "surd": 6})
    );
    let v = json_of(&gevrey(&[
        "stokes", "--g-max", "60", "--l-max", "4", "--depth", "6",
    ]));
    assert_eq!(v["all_negative"], true);
    assert!(v["value"].as_str().unwrap().starts_with("-0.3712576246"));
}
