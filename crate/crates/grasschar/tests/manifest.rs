use grasschar::manifest::{compare_with_catalog, parse, render_catalog, MANIFEST};

#[test]
fn manifest_covers_catalog() {
    let entries = parse(MANIFEST).unwrap();
    assert_eq!(compare_with_catalog(&entries), Vec::<String>::new());
    assert_eq!(MANIFEST, render_catalog());
}

#[test]
fn removing_a_claim_is_detected() {
    let entries = parse(MANIFEST).unwrap();
    for i in 0..entries.len() {
        let mut fewer = entries.clone();
        let removed = fewer.remove(i);
        let problems = compare_with_catalog(&fewer);
        assert_eq!(
            problems,
            [format!("{} missing from manifest", removed.claim_id)]
        );
    }
}

#[test]
fn malformed_lines_are_rejected() {
    assert!(parse("prop-3.2\tonly two").is_err());
    assert!(parse("prop-3.2\tstatement\tfive").is_err());
}
