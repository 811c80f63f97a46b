mod props;

#[test]
fn field_axioms() {
    props::field_axioms().unwrap();
}

#[test]
fn reduction_homomorphism() {
    props::reduction_homomorphism().unwrap();
}

#[test]
fn groebner_properties() {
    props::groebner_properties().unwrap();
}

#[test]
fn hilbert_points() {
    props::hilbert_points().unwrap();
}

#[test]
fn chi_consistency() {
    props::chi_consistency().unwrap();
}

#[test]
fn character_additivity() {
    props::character_additivity().unwrap();
}
