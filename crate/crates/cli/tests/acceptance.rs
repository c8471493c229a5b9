//! One test per acceptance criterion; each prints a single pass/fail
//! line (run with `--nocapture` to see them alongside the assertions).

use nilherm_cli::verify;

fn run(id: &str) {
    let report = verify(&[id.to_string()]).expect("known claim id");
    assert_eq!(report.results.len(), 1);
    let r = &report.results[0];
    println!(
        "{}: {} - {}",
        r.id,
        if r.passed { "pass" } else { "FAIL" },
        r.detail
    );
    assert!(r.passed, "{}: {}", r.id, r.detail);
}

#[test]
fn criterion_01_partial_omega() {
    run("partialOmega");
}

#[test]
fn criterion_02_strongkt_grid() {
    run("strongKT-a");
}

#[test]
fn criterion_03_strongkt_existence() {
    run("strongKT-b");
}

#[test]
fn criterion_04_abelian_skt() {
    run("abelianSKT");
}

#[test]
fn criterion_05_balanced() {
    run("balanced-clasif");
}

#[test]
fn criterion_06_nonstable_family() {
    run("nonstable-h2");
}

#[test]
fn criterion_07_lck() {
    run("LCKgen");
}

#[test]
fn criterion_08_exclusions() {
    run("SKT-LCK");
}

#[test]
fn criterion_09_structural() {
    run("structural");
}

#[test]
fn criterion_10_region_determinism() {
    run("region-determinism");
}

#[test]
fn claim_id_set_is_complete() {
    let report = verify(&[]).expect("no selection");
    let ids: Vec<&str> = report.results.iter().map(|r| r.id).collect();
    assert_eq!(ids, nilherm_cli::CLAIM_IDS);
}

#[test]
fn unknown_claim_is_rejected() {
    assert!(verify(&["no-such-claim".to_string()]).is_err());
}
