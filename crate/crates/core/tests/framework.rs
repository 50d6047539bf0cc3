use nalgebra::{DMatrix, DVector};
use pennyrig::corpus::{corpus, fixture};
use pennyrig::framework::{
    canonical_form, congruent, equivalent, flex_witness_from_separator, infinitesimally_rigid, numerical_rank,
    rigidity_matrix, validate_sphere, Framework, ToleranceConfig, Validity, ViolationKind,
};
use pennyrig::graph::{clique_number, contains_clique, is_chordal};
use pennyrig::{Error, Graph};

fn tol() -> ToleranceConfig {
    ToleranceConfig::default()
}

fn stored(id: &str) -> Framework {
    fixture(id).unwrap().realization.unwrap()
}

#[test]
fn penny_examples_validate() {
    let yes = stored("fig-penny-yes");
    assert_eq!((yes.graph().len(), yes.graph().edge_count()), (4, 5));
    assert!(validate_sphere(&yes, &tol()).is_valid());
    let no = validate_sphere(&stored("fig-penny-no"), &tol());
    assert_eq!(no.verdict, Validity::Invalid);
    assert_eq!(no.violations.len(), 1);
    let v = &no.violations[0];
    assert_eq!(v.pair, ("b".to_string(), "d".to_string()));
    assert_eq!(v.kind, ViolationKind::NonEdgeOverlap);
    assert!((v.distance - 2.0 * 25f64.to_radians().sin()).abs() < 1e-12);
}

#[test]
fn deleting_an_edge_leaves_a_touching_pair() {
    let f = stored("fan-5");
    let (u, v) = f.graph().edges()[0];
    let g = f.graph().without_edge(u, v);
    let report = validate_sphere(&f.with_graph(g.clone()).unwrap(), &tol());
    assert_eq!(report.verdict, Validity::Invalid);
    assert_eq!(report.violations.len(), 1);
    assert_eq!(report.violations[0].kind, ViolationKind::NonEdgeTouchingWarning);
    assert_eq!(report.violations[0].pair, (g.label(u).to_string(), g.label(v).to_string()));
    let lenient = ToleranceConfig { lenient_touching: true, ..tol() };
    assert!(validate_sphere(&f.with_graph(g).unwrap(), &lenient).is_valid());
}

#[test]
fn rigidity_matrix_examples() {
    let k2 = Framework::new(Graph::complete(2), 2, vec![vec![0.0, 0.0], vec![1.0, 0.0]]).unwrap();
    let m = rigidity_matrix(&k2);
    let row = DMatrix::from_row_slice(1, 4, &[1.0, 0.0, -1.0, 0.0]);
    assert!(m == row || m == -row, "{m}");
    let k3 = stored("K3");
    assert_eq!(numerical_rank(&rigidity_matrix(&k3), tol().tol_rank), 3);
    let p3 = Framework::new(Graph::path(3), 2, vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![2.0, 0.0]]).unwrap();
    assert_eq!(numerical_rank(&rigidity_matrix(&p3), tol().tol_rank), 2);
}

#[test]
fn infinitesimal_rigidity_examples() {
    assert!(infinitesimally_rigid(&stored("K3"), &tol()).unwrap());
    assert!(!infinitesimally_rigid(&stored("fig-flex-square"), &tol()).unwrap());
    // the taut straight chain in the sparse family has a first-order flex
    assert!(!infinitesimally_rigid(&stored("fig-sparse-1"), &tol()).unwrap());
}

#[test]
fn the_two_realizations_are_equivalent_not_congruent() {
    let f = fixture("fig-two-realizations").unwrap();
    let (a, b) = (f.realization.unwrap(), f.alternates[0].clone());
    assert!(equivalent(&a, &a, &tol()).unwrap());
    assert!(equivalent(&a, &b, &tol()).unwrap());
    assert!(!congruent(&a, &b, &tol()).unwrap());
    assert!(canonical_form(&a).max_deviation(&canonical_form(&b)) > tol().tol_congruence);
    let mirror = DMatrix::from_row_slice(2, 2, &[1.0, 0.0, 0.0, -1.0]);
    let reflected = a.transformed(&mirror, &DVector::zeros(2));
    assert!(equivalent(&a, &reflected, &tol()).unwrap());
    assert!(congruent(&a, &reflected, &tol()).unwrap());
}

#[test]
fn square_and_rhombus() {
    let square =
        Framework::new(Graph::cycle(4), 2, vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![1.0, 1.0], vec![0.0, 1.0]]).unwrap();
    let h = 3f64.sqrt() / 2.0;
    let rhombus =
        Framework::new(Graph::cycle(4), 2, vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![1.5, h], vec![0.5, h]]).unwrap();
    assert!(equivalent(&square, &rhombus, &tol()).unwrap());
    assert!(!congruent(&square, &rhombus, &tol()).unwrap());
    let k2 = Framework::new(Graph::complete(2), 2, vec![vec![0.0, 0.0], vec![1.0, 0.0]]).unwrap();
    let k2m = Framework::new(Graph::complete(2), 2, vec![vec![1.0, 0.0], vec![0.0, 0.0]]).unwrap();
    assert_eq!(canonical_form(&k2), canonical_form(&k2m));
    assert!(matches!(equivalent(&square, &k2, &tol()), Err(Error::GraphMismatch)));
}

#[test]
fn flex_witness_examples() {
    let p3 = Framework::new(Graph::path(3), 2, vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![2.0, 0.0]]).unwrap();
    let w = flex_witness_from_separator(&p3, &[1, 2], &[0, 1]).unwrap();
    assert_eq!(w.separator, vec!["1".to_string()]);
    let moved = w.apply(&p3, std::f64::consts::FRAC_PI_2).unwrap();
    assert!((moved.point(2) - DVector::from_vec(vec![1.0, 1.0])).norm() < 1e-12 || (moved.point(2) - DVector::from_vec(vec![1.0, -1.0])).norm() < 1e-12);

    let square =
        Framework::new(Graph::cycle(4), 2, vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![1.0, 1.0], vec![0.0, 1.0]]).unwrap();
    assert!(matches!(flex_witness_from_separator(&square, &[0, 1, 2], &[2, 3, 0]), Err(Error::PreconditionFailed(_))));

    let f = fixture("fig-rigid-not-global").unwrap().realization.unwrap();
    let g = f.graph();
    let idx = |l: &str| g.index_of(l).unwrap();
    let flap = [idx("l1"), idx("l2"), idx("m")];
    let rest: Vec<usize> = (0..g.len()).filter(|&v| v != idx("m")).collect();
    assert!(matches!(flex_witness_from_separator(&f, &flap, &rest), Err(Error::PreconditionFailed(_))));
    let lifted = f.lift(3).unwrap();
    let w = flex_witness_from_separator(&lifted, &flap, &rest).unwrap();
    let moved = w.apply(&lifted, 0.3).unwrap();
    assert!(equivalent(&lifted, &moved, &tol()).unwrap());
    assert!(!congruent(&lifted, &moved, &tol()).unwrap());
}

#[test]
fn fixture_realizations_respect_the_clique_bound() {
    for f in corpus() {
        for r in f.realization.iter().chain(&f.alternates) {
            if validate_sphere(r, &tol()).is_valid() {
                assert!(!contains_clique(&f.graph, f.d + 2), "{}", f.id);
                let (_, peo) = is_chordal(&f.graph);
                if let Ok(w) = clique_number(&f.graph, peo.as_ref()) {
                    assert!(w <= f.d + 1, "{}", f.id);
                }
            }
        }
    }
}

#[test]
fn realization_file_round_trip() {
    let f = stored("fig-two-realizations");
    let text = f.to_json_string();
    let back = Framework::from_json_str(f.graph().clone(), &text).unwrap();
    assert_eq!(back, f);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["d"], 2);
    assert!(v["coords"]["a1"].is_array());
    assert!(Framework::from_json_str(f.graph().clone(), r#"{"d": 2, "coords": {}}"#).is_err());
}
