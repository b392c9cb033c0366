use std::process::Command;

use serde::de::DeserializeOwned;
use serde::Serialize;

use subregular::census::OrbitCensus;
use subregular::cli::{
    run, BorbitRow, ClassifyReport, FibreRow, IdealReport, Outcome, OrbitalRow, RootsReport, VerifyReport,
};
use subregular::curve::DynkinCurve;
use subregular::fforacle::OrbitCensusFF;
use subregular::ideals::TableRow;

fn call(args: &str) -> Outcome {
    run(std::iter::once("subreg").chain(args.split_whitespace()))
}

// parse, re-serialize in the same pretty form, compare bytes
fn round_trip<T: DeserializeOwned + Serialize>(args: &str) {
    let out = call(args);
    assert_eq!(out.code, 0, "{args}: {}", out.stderr);
    let value: T = serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{args}: {e}"));
    let again = serde_json::to_string_pretty(&value).unwrap() + "\n";
    assert_eq!(again, out.stdout, "{args}");
}

#[test]
fn json_round_trips() {
    round_trip::<RootsReport>("roots --type F --rank 4 --format json");
    round_trip::<DynkinCurve>("curve --type G --rank 2 --format json");
    round_trip::<ClassifyReport<FibreRow>>("classify fibre --type E --rank 7 --format json");
    round_trip::<ClassifyReport<FibreRow>>("classify richardson --type C --rank 4 --format json");
    round_trip::<ClassifyReport<OrbitalRow>>("classify orbital --type D --rank 4 --format json");
    round_trip::<OrbitCensus>("census fibre --type B --rank 3 --format json");
    round_trip::<OrbitCensus>("census fibre --type D --rank 5 --format json");
    round_trip::<ClassifyReport<BorbitRow>>("census borbit --type D --rank 5 --format json");
    round_trip::<IdealReport>("ideals stats --type A --rank 5 --gens 1,3,5 --format json");
    round_trip::<Vec<TableRow>>("ideals table --format json");
    round_trip::<VerifyReport>("verify rep --family so-even --n 5 --alpha 5 --format json");
    round_trip::<OrbitCensusFF>("ff enumerate --family sl --n 3 --q 5 --format json");
    round_trip::<OrbitCensusFF>("ff enumerate --family sl --n 4 --q 3 --alpha 2 --beta 3 --format json");
}

#[test]
fn json_field_names() {
    let out = call("census borbit --type A --rank 3 --alpha 2 --format json");
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["rows"][0]["alpha"], 2);
    assert_eq!(v["rows"][0]["orbit_count"], 3);

    let out = call("classify fibre --type D --rank 5 --alpha 2 --format json");
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["rows"][0]["verdict"], "infinite");
    assert_eq!(v["rows"][0]["reason"], 2);

    let out = call("ff enumerate --family sl --n 3 --q 3 --format json");
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["q"], 3);
    assert_eq!(v["family"], "sl");
    assert_eq!(v["orbit_sizes"], serde_json::json!([2, 6, 6]));

    let out = call("census fibre --type E --rank 8 --format json");
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["total"], "infinite");
}

#[test]
fn output_is_stable() {
    for args in ["census fibre --type F --rank 4", "ideals table", "curve --type E --rank 6 --format dot"] {
        assert_eq!(call(args), call(args));
    }
}

#[test]
fn table_outputs() {
    let out = call("ideals table");
    assert_eq!(out.stdout.lines().count(), 6);
    assert!(out.stdout.contains("G2    a2"));

    let out = call("curve --type B --rank 3 --format dot");
    assert!(out.stdout.starts_with("graph dynkin_curve_B3 {"));
    assert_eq!(out.stdout.matches(" -- ").count(), 4);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        "roots --type X --rank 2",
        "roots --type D --rank 3",
        "classify fibre --type A --rank 3 --alpha 4",
        "ideals stats --type A --rank 3 --gens 5",
        "ff enumerate --family so-odd --n 2 --q 2",
        "ff enumerate --family sl --n 3 --q 9",
        "ff enumerate --family sl --n 6 --q 3",
        "ff enumerate --family sl --n 4 --q 3 --alpha 1 --beta 3",
        "verify rep --family sp --n 4 --alpha 2",
        "census fibre --type A --rank 2 --format dot",
        "frobnicate",
    ] {
        let out = call(args);
        assert_eq!(out.code, 2, "{args}");
        assert!(!out.stderr.is_empty(), "{args}");
        assert!(out.stdout.is_empty(), "{args}");
    }
}

#[test]
fn forced_orthogonal_intersection_is_empty() {
    let out = call("ff enumerate --family sl --n 4 --q 3 --alpha 1 --beta 3 --force --format json");
    let c: OrbitCensusFF = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!((c.point_count, c.orbit_count), (0, 0));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_subreg");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();

    let ok = status(&["classify", "orbital", "--type", "A", "--rank", "5"]);
    assert_eq!(ok.status.code(), Some(0));
    let text = String::from_utf8(ok.stdout).unwrap();
    assert!(text.contains("a1     finite"));
    assert!(text.contains("a4     infinite"));

    let bad = status(&["roots", "--type", "Q", "--rank", "1"]);
    assert_eq!(bad.status.code(), Some(2));

    let help = status(&["--help"]);
    assert_eq!(help.status.code(), Some(0));
}
