use chowq_core::io::*;
use chowq_core::sample;
use chowq_core::schubert::{crosscheck, veronese_class};
use chowq_core::secondary::{enumerate_triangulations, prism_points};
use chowq_core::trees::{enumerate_trees, tree_to_decomposition};

#[test]
fn trees_and_decompositions() {
    for t in enumerate_trees(6).unwrap() {
        let text = to_pretty(&tree_to_json(&t));
        assert_eq!(tree_from_json(&parse(&text).unwrap()).unwrap(), t);
        let d = tree_to_decomposition(&t);
        let back = decomposition_from_json(&parse(&to_pretty(&decomposition_to_json(&d))).unwrap()).unwrap();
        assert_eq!(back.piece_set(), d.piece_set());
    }
}

#[test]
fn prism_triangulations() {
    for t in enumerate_triangulations(&prism_points(2)).unwrap() {
        assert_eq!(triangulation_from_json(&triangulation_to_json(&t)).unwrap(), t);
    }
}

#[test]
fn subspaces_and_configurations() {
    let mut rng = sample::rng(3);
    for _ in 0..10 {
        let s = sample::generic_subspace(&mut rng, 3, 7);
        assert_eq!(subspace_from_json(&subspace_to_json(&s)).unwrap().plucker(), s.plucker());
        let c = sample::generic_configuration(&mut rng, 3, 6);
        assert_eq!(configuration_from_json(&configuration_to_json(&c)).unwrap().points(), c.points());
    }
}

#[test]
fn schubert_classes() {
    for row in crosscheck(3, 8) {
        let c = veronese_class(row.k, row.n).unwrap();
        assert_eq!(schubert_class_from_json(&schubert_class_to_json(&c)).unwrap(), c);
    }
}

#[test]
fn malformed_documents_are_parse_errors() {
    for text in ["{", r#"{"n": 4}"#, r#"{"n": 4, "edges": [["L0", "v1"]]}"#] {
        let err = parse(text).and_then(|v| tree_from_json(&v)).unwrap_err();
        assert!(err.is_parse(), "{text}: {err}");
    }
}
