use serde::Serialize;

use super::{Framework, ToleranceConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Validity {
    Valid,
    Invalid,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ViolationKind {
    /// An edge whose length differs from 1 by more than `tol_edge`.
    EdgeNotUnit,
    /// A non-edge closer than `1 - tol_edge`.
    NonEdgeOverlap,
    /// A non-edge at touching distance. Invalidates the realization unless
    /// the configuration is lenient.
    NonEdgeTouchingWarning,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Violation {
    pub pair: (String, String),
    pub kind: ViolationKind,
    pub distance: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ValidationReport {
    pub verdict: Validity,
    pub violations: Vec<Violation>,
    pub tolerances: ToleranceConfig,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.verdict == Validity::Valid
    }
}

/// Checks the sphere-contact conditions: edges at distance 1 and non-edges
/// strictly farther apart. Pairs are visited in sorted order.
pub fn validate_sphere(f: &Framework, tol: &ToleranceConfig) -> ValidationReport {
    let g = f.graph();
    let mut violations = Vec::new();
    for u in 0..g.len() {
        for v in u + 1..g.len() {
            let dist = f.distance(u, v);
            let kind = if g.has_edge(u, v) {
                ((dist - 1.0).abs() > tol.tol_edge).then_some(ViolationKind::EdgeNotUnit)
            } else if dist <= 1.0 - tol.tol_edge {
                Some(ViolationKind::NonEdgeOverlap)
            } else if dist <= tol.touching_limit() {
                Some(ViolationKind::NonEdgeTouchingWarning)
            } else {
                None
            };
            if let Some(kind) = kind {
                violations.push(Violation {
                    pair: (g.label(u).to_owned(), g.label(v).to_owned()),
                    kind,
                    distance: dist,
                });
            }
        }
    }
    let invalid = violations.iter().any(|v| match v.kind {
        ViolationKind::NonEdgeTouchingWarning => !tol.lenient_touching,
        _ => true,
    });
    ValidationReport {
        verdict: if invalid { Validity::Invalid } else { Validity::Valid },
        violations,
        tolerances: *tol,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn rhombus() -> Framework {
        let s = 3f64.sqrt() / 2.0;
        let g = Graph::new(["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"), ("b", "d")])
            .unwrap();
        Framework::new(g, 2, vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![1.5, s], vec![0.5, s]]).unwrap()
    }

    #[test]
    fn rhombus_with_diagonal_is_valid() {
        let r = validate_sphere(&rhombus(), &ToleranceConfig::default());
        assert!(r.is_valid());
        assert!(r.violations.is_empty());
    }

    #[test]
    fn fifty_degree_wedge_overlaps() {
        let g = Graph::new(["a", "b", "d"], [("a", "b"), ("a", "d")]).unwrap();
        let t = 50f64.to_radians();
        let f = Framework::new(g, 2, vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![t.cos(), t.sin()]]).unwrap();
        let r = validate_sphere(&f, &ToleranceConfig::default());
        assert_eq!(r.verdict, Validity::Invalid);
        assert_eq!(r.violations.len(), 1);
        let v = &r.violations[0];
        assert_eq!(v.pair, ("b".to_owned(), "d".to_owned()));
        assert_eq!(v.kind, ViolationKind::NonEdgeOverlap);
        // law of cosines: 2 sin 25 degrees
        assert!((v.distance - 0.845_236_523_481_398_9).abs() < 1e-12);
    }

    #[test]
    fn deleting_an_edge_leaves_a_touching_pair() {
        let f = rhombus();
        let g = f.graph().without_edge(1, 3);
        let f = f.with_graph(g).unwrap();
        let r = validate_sphere(&f, &ToleranceConfig::default());
        assert_eq!(r.verdict, Validity::Invalid);
        assert_eq!(r.violations.len(), 1);
        assert_eq!(r.violations[0].kind, ViolationKind::NonEdgeTouchingWarning);
        assert_eq!(r.violations[0].pair, ("b".to_owned(), "d".to_owned()));

        let lenient = ToleranceConfig { lenient_touching: true, ..Default::default() };
        let r = validate_sphere(&f, &lenient);
        assert!(r.is_valid());
        assert_eq!(r.violations.len(), 1);
    }

    #[test]
    fn stretched_edge_is_reported() {
        let g = Graph::new(["a", "b"], [("a", "b")]).unwrap();
        let f = Framework::new(g, 2, vec![vec![0.0, 0.0], vec![1.0 + 1e-6, 0.0]]).unwrap();
        let r = validate_sphere(&f, &ToleranceConfig::default());
        assert_eq!(r.violations[0].kind, ViolationKind::EdgeNotUnit);
    }
}
