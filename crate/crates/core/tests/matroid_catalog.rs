use orbitclass::matroid::catalog::{catalog, catalog_of_size};
use orbitclass::matroid::Matroid;

#[test]
fn class_counts_match_known_table() {
    let counts: Vec<usize> = (1..=6).map(|n| catalog_of_size(n).len()).collect();
    assert_eq!(counts, vec![2, 4, 8, 16, 32, 68]);
}

#[test]
fn catalog_entries_are_pairwise_non_isomorphic() {
    for n in 1..=6 {
        let forms: std::collections::BTreeSet<_> = catalog_of_size(n)
            .iter()
            .map(|e| e.matroid.canonical_form())
            .collect();
        assert_eq!(forms.len(), catalog_of_size(n).len());
    }
}

#[test]
fn realizations_reproduce_matroids() {
    for e in catalog(6) {
        assert_eq!(e.matrix.rows(), e.matroid.rank());
        assert_eq!(Matroid::from_matrix(&e.matrix).unwrap(), e.matroid);
    }
}
