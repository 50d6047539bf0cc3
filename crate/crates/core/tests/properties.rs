use nalgebra::{DMatrix, DVector};
use pennyrig::framework::{
    canonical_form, congruent, equivalent, numerical_rank, rigid_motion_basis, rigidity_matrix, Framework,
    ToleranceConfig,
};
use pennyrig::generic::rank_upper_bound;
use pennyrig::Graph;
use proptest::prelude::*;

fn graph_strategy() -> impl Strategy<Value = Graph> {
    (2usize..9).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |keep| {
            let edges: Vec<_> = pairs.iter().zip(keep).filter(|(_, k)| *k).map(|(&p, _)| p).collect();
            Graph::from_edges(n, &edges)
        })
    })
}

fn framework_strategy() -> impl Strategy<Value = Framework> {
    (graph_strategy(), 2usize..=3).prop_flat_map(|(g, d)| {
        proptest::collection::vec(proptest::collection::vec(-3.0f64..3.0, d), g.len())
            .prop_map(move |coords| Framework::new(g.clone(), d, coords).unwrap())
    })
}

/// Orthogonal matrix from Gram-Schmidt on a random square matrix; the
/// determinant may be either sign.
fn orthogonal(d: usize, entries: &[f64]) -> Option<DMatrix<f64>> {
    let q = DMatrix::from_column_slice(d, d, &entries[..d * d]).qr().q();
    ((q.determinant().abs() - 1.0).abs() < 1e-9).then_some(q)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 128, ..ProptestConfig::default() })]

    #[test]
    fn graph_json_round_trips(g in graph_strategy()) {
        prop_assert_eq!(Graph::from_json_str(&g.to_json_string()).unwrap(), g);
    }

    #[test]
    fn realization_json_round_trips(f in framework_strategy()) {
        let back = Framework::from_json_str(f.graph().clone(), &f.to_json_string()).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn rigid_motions_are_in_the_kernel(f in framework_strategy()) {
        let m = rigidity_matrix(&f);
        for v in rigid_motion_basis(&f) {
            prop_assert!((&m * v).amax() <= 1e-12);
        }
    }

    #[test]
    fn rank_respects_the_maxwell_bound(f in framework_strategy()) {
        if f.affine_span_dim() == f.dim() {
            let r = numerical_rank(&rigidity_matrix(&f), 1e-8);
            prop_assert!(r <= rank_upper_bound(f.graph().len(), f.dim()));
        }
    }

    #[test]
    fn isometries_preserve_congruence(
        f in framework_strategy(),
        entries in proptest::collection::vec(-1.0f64..1.0, 9),
        shift in proptest::collection::vec(-10.0f64..10.0, 3),
    ) {
        let d = f.dim();
        let Some(q) = orthogonal(d, &entries) else { return Ok(()) };
        let moved = f.transformed(&q, &DVector::from_column_slice(&shift[..d]));
        let tol = ToleranceConfig::default();
        prop_assert!(congruent(&f, &moved, &tol).unwrap());
        prop_assert!(equivalent(&f, &moved, &tol).unwrap());
    }

    #[test]
    fn canonical_form_is_idempotent(f in framework_strategy()) {
        let c = canonical_form(&f);
        let again = Framework::new(f.graph().clone(), f.dim(), c.coords.clone()).unwrap();
        prop_assert!(canonical_form(&again).max_deviation(&c) < 1e-12);
    }

    #[test]
    fn congruent_implies_equivalent(f in framework_strategy(), jitter in proptest::collection::vec(-1e-3f64..1e-3, 27)) {
        let points: Vec<Vec<f64>> = f
            .points()
            .iter()
            .enumerate()
            .map(|(i, p)| p.iter().enumerate().map(|(k, x)| x + if i == 0 { jitter[k] } else { 0.0 }).collect())
            .collect();
        let g = Framework::new(f.graph().clone(), f.dim(), points).unwrap();
        let tol = ToleranceConfig::default();
        if congruent(&f, &g, &tol).unwrap() {
            prop_assert!(equivalent(&f, &g, &tol).unwrap());
        }
    }
}
