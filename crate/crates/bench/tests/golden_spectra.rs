use persym_bench::{generate_spectrum, FamilyKind, SpectrumFamily};

fn golden() -> (SpectrumFamily, Vec<f64>) {
    let text = include_str!("golden/random_gap_n5_seed42.json");
    let mut value: serde_json::Value = serde_json::from_str(text).unwrap();
    let spectrum = value.as_object_mut().unwrap().remove("spectrum").unwrap();
    (
        serde_json::from_value(value).unwrap(),
        serde_json::from_value(spectrum).unwrap(),
    )
}

#[test]
fn random_gap_matches_golden_file() {
    let (family, expected) = golden();
    assert_eq!(family.kind, FamilyKind::RandomGap);
    // bit-exact: the generator is pinned
    assert_eq!(
        generate_spectrum(&family).unwrap().points(),
        expected.as_slice()
    );
}

#[test]
fn defaults_reproduce_golden_family() {
    let (_, expected) = golden();
    let fam = SpectrumFamily::new(FamilyKind::RandomGap, 5).with_seed(42);
    assert_eq!(
        generate_spectrum(&fam).unwrap().points(),
        expected.as_slice()
    );
}
