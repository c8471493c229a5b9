//! End-to-end checks of the installed binary and the text grammars.

use std::process::Command;

use nilherm_cli::{emit_metric, parse_metric, scan_region, Axis};
use nilherm_core::{rat, HermitianMetric, Scalar};
use proptest::prelude::*;

fn nilherm(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_nilherm"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn exit_codes() {
    // 0: success
    let out = nilherm(&["check-jacobi", "(0,0,0,0,12,34)"]);
    assert_eq!(out.status.code(), Some(0));
    // 1: verification failure (Jacobi does not hold)
    let out = nilherm(&["check-jacobi", "(0,0,0,12,23,45)"]);
    assert_eq!(out.status.code(), Some(1));
    // 2: parse error
    let out = nilherm(&["classify-complex", "dw3 = @"]);
    assert_eq!(out.status.code(), Some(2));
    // 2: usage error
    let out = nilherm(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn shorthand_classification() {
    let out = nilherm(&["classify-algebra", "(0,0,0,12,23,14-35)"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("h19-"), "{text}");
}

#[test]
fn scan_region_binary_is_deterministic() {
    let args = [
        "scan-region",
        "--rho",
        "1",
        "--p-steps",
        "11",
        "--y-steps",
        "11",
    ];
    let a = nilherm(&args);
    let b = nilherm(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    assert_eq!(text.lines().count(), 1 + 11 * 11);
    assert!(text.starts_with("p,q,y,class\n"));
}

#[test]
fn scan_region_library_matches_binary() {
    let p = Axis { min: -2.0, max: 2.0, steps: 11 };
    let q = Axis { min: 0.0, max: 0.0, steps: 1 };
    let y = Axis { min: -2.0, max: 2.0, steps: 11 };
    let lib = scan_region(1, &p, &q, &y, false);
    let out = nilherm(&[
        "scan-region",
        "--rho",
        "1",
        "--p-steps",
        "11",
        "--y-steps",
        "11",
    ]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), lib);
}

#[test]
fn hermitian_check_json_shape() {
    let out = nilherm(&[
        "hermitian-check",
        "--equations",
        "dw3 = w1c1 + w2c2",
        "--metric",
        "r=1, s=1, t=1",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value =
        serde_json::from_slice(&out.stdout).expect("valid JSON");
    assert_eq!(v["positive"], true);
    assert_eq!(v["skt"], false);
    assert_eq!(v["lck"]["parallel"], true);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn metric_records_round_trip(
        r in 1i64..=9,
        s in 1i64..=9,
        t in 1i64..=9,
        coeffs in proptest::collection::vec((-5i64..=5, 1i64..=4, -5i64..=5, 1i64..=4), 3),
    ) {
        let g = |k: usize| Scalar::exact(
            rat(coeffs[k].0, coeffs[k].1),
            rat(coeffs[k].2, coeffs[k].3),
        );
        let m = HermitianMetric::new3(
            Scalar::from_int(r),
            Scalar::from_int(s),
            Scalar::from_int(t),
            g(0),
            g(1),
            g(2),
        )
        .unwrap();
        prop_assert_eq!(parse_metric(&emit_metric(&m)).unwrap(), m);
    }
}
