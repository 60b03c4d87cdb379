use std::collections::BTreeSet;

use grasschar_core::grassmann::{wbar_sequence, DirectCompute, GbProvider, RingKey};
use grasschar_core::verifier::{
    find_claim, instances, run_all, run_claim, tables::table_rows, ClaimParams, Status, CATALOG,
};
use grasschar_core::{Error, GroebnerBasis, Monomial};

fn run(id: &str, p: ClaimParams) -> grasschar_core::verifier::ClaimReport {
    run_claim(id, &p, &DirectCompute).unwrap()
}

fn witness_values(r: &grasschar_core::verifier::ClaimReport) -> Vec<&str> {
    r.witnesses.iter().map(|w| w.value.as_str()).collect()
}

#[test]
fn documented_examples() {
    let r = run("prop-3.2", ClaimParams::at(3));
    assert_eq!(r.status, Status::Pass);
    assert!(witness_values(&r).contains(&"kernel dimension 0 in degree 7"));

    let r = run("lemma-3.5", ClaimParams::at(3));
    assert_eq!(r.status, Status::SkippedDegenerate);
    assert_eq!(r.reason.as_deref(), Some("degenerate"));

    let p = grasschar_core::verifier::param_grid(find_claim("prop-3.6").unwrap(), 3);
    let gamma1 = p.iter().find(|p| p.gamma == Some(true)).unwrap().clone();
    let r = run("prop-3.6", gamma1);
    assert_eq!(r.status, Status::Pass);
    assert!(witness_values(&r).contains(&"NF(a^3) = 0"));
}

#[test]
fn catalog_is_sorted_and_complete() {
    let ids: Vec<&str> = CATALOG.iter().map(|c| c.id).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    assert_eq!(ids.len(), 21);
    for id in [
        "wbar-consistency",
        "g-recurrence",
        "g-vanish",
        "g-c-div-4",
        "fukaya-lm",
        "fukaya-reduced-membership",
        "ideal-eq-2t",
        "lemma-3.5",
        "eq-g-square",
        "lemma-4.2-membership",
        "prop-3.2",
        "prop-3.4",
        "prop-4.1",
        "prop-5.1",
        "prop-3.6",
        "basis-B",
        "top-class",
        "hilbert-vs-gysin",
        "poincare-palindrome",
        "k2-ring",
        "tables",
    ] {
        assert!(find_claim(id).is_ok(), "{id}");
    }
    for id in [
        "prop-3.2",
        "prop-3.4",
        "prop-4.1",
        "prop-5.1",
        "hilbert-vs-gysin",
    ] {
        assert_eq!(find_claim(id).unwrap().cap, 5);
    }
    for id in ["g-recurrence", "lemma-3.5", "eq-g-square", "fukaya-lm"] {
        assert_eq!(find_claim(id).unwrap().cap, 8);
    }
}

#[test]
fn errors() {
    assert_eq!(
        run_claim("nonsense", &ClaimParams::at(3), &DirectCompute).unwrap_err(),
        Error::UnknownClaim("nonsense".into())
    );
    assert_eq!(
        run_claim("g-vanish", &ClaimParams::at(9), &DirectCompute).unwrap_err(),
        Error::UnsupportedT(9)
    );
    assert!(run_all(2, 3, &DirectCompute).is_err());
    assert!(run_all(5, 4, &DirectCompute).is_err());
}

#[test]
fn run_all_t3_passes() {
    let reports = run_all(3, 3, &DirectCompute).unwrap();
    assert!(
        reports.iter().all(|r| r.status != Status::Fail),
        "{reports:#?}"
    );
    let skipped: Vec<&str> = reports
        .iter()
        .filter(|r| r.status == Status::SkippedDegenerate)
        .map(|r| r.claim_id.as_str())
        .collect();
    assert_eq!(skipped, ["lemma-3.5"]);
}

#[test]
fn instances_are_unique_and_sorted() {
    let list = instances(3, 4, None).unwrap();
    let keys: Vec<(&str, &ClaimParams)> = list.iter().map(|(d, p)| (d.id, p)).collect();
    let unique: BTreeSet<_> = keys.iter().collect();
    assert_eq!(unique.len(), keys.len());
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    assert!(instances(3, 3, Some("nonsense")).is_err());
    assert!(instances(3, 5, Some("prop-3.2")).unwrap().len() == 3);
}

#[test]
fn caps_skip() {
    let r = run("prop-4.1", ClaimParams::at(6));
    assert_eq!(r.status, Status::SkippedDegenerate);
    assert_eq!(r.reason.as_deref(), Some("cap"));
    let r = run("eq-g-square", ClaimParams::at(8));
    assert_eq!(r.status, Status::Pass);
}

#[test]
fn reports_are_deterministic() {
    let a = run_all(3, 4, &DirectCompute).unwrap();
    let b = run_all(3, 4, &DirectCompute).unwrap();
    assert_eq!(a, b);
}

/// Serves the reduced basis of the wrong ideal for every ring.
struct WrongIdeal;

impl GbProvider for WrongIdeal {
    fn groebner(&self, key: &RingKey) -> Result<GroebnerBasis, Error> {
        match *key {
            RingKey::ImageJ { n } => RingKey::ImageJ { n: n + 3 }.compute_gb(),
            RingKey::Borel { n, k } => RingKey::Borel { n: n + 1, k }.compute_gb(),
            _ => Ok(GroebnerBasis::empty(&key.table())),
        }
    }
}

#[test]
fn failures_carry_witnesses() {
    let reports = run_all(3, 4, &WrongIdeal).unwrap();
    let failed: Vec<_> = reports
        .iter()
        .filter(|r| r.status == Status::Fail)
        .collect();
    assert!(failed.len() > 10);
    for r in failed {
        assert!(!r.witnesses.is_empty(), "{}", r.claim_id);
    }
}

/// Coefficient of `w1^a w2^b w3^c` in `w̄_r`, read off the recurrence.
fn recurrence_coefficient(r: u32, e: [u32; 3]) -> bool {
    let seq = wbar_sequence(r, 3).unwrap();
    seq[r as usize].coeff_of(&Monomial::new(&[e[0] as u16, e[1] as u16, e[2] as u16]))
}

#[test]
fn table_rows_match_recurrence() {
    for t in 3..=6 {
        for row in table_rows(t) {
            let oracle = row
                .cofactor()
                .is_some_and(|e| recurrence_coefficient(row.wbar_index, e));
            assert_eq!(row.compute(), oracle, "t={t} {} {}", row.table, row.label);
            assert_eq!(oracle, row.expected, "t={t} {} {}", row.table, row.label);
        }
    }
}
