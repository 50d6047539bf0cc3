//! Enumeration of sphere realizations modulo isometry.
//!
//! Branch-and-prune places vertices along a [`DiscretizationOrder`]: each new
//! point lies on the intersection of `d` spheres around already placed
//! supports, which leaves at most two candidates (a point and its mirror image
//! in the supports' hyperplane). Graphs without such an order fall back to a
//! multistart least-squares search, whose class counts are only lower bounds.

mod bp;
mod numeric;
mod order;

pub use bp::{bp_enumerate, bp_enumerate_with_stats, SearchStats};
pub use numeric::{numeric_solve, NumericOptions, CLUSTER_TOL};
pub use order::{discretization_order, discretization_order_by, DiscretizationOrder, Step, Support};

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{Error, Result};
use crate::framework::{Framework, ToleranceConfig};
use crate::graph::Graph;

/// Pairwise non-congruent realizations in canonical position.
#[derive(Clone, Debug, PartialEq)]
pub struct RealizationClassSet {
    pub classes: Vec<Framework>,
    pub count: usize,
    /// True only for branch-and-prune, where every realization was found.
    pub exhaustive: bool,
}

impl RealizationClassSet {
    fn exhaustive(classes: Vec<Framework>) -> Self {
        RealizationClassSet { count: classes.len(), classes, exhaustive: true }
    }

    fn inexhaustive(classes: Vec<Framework>) -> Self {
        RealizationClassSet { count: classes.len(), classes, exhaustive: false }
    }
}

impl Serialize for RealizationClassSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("RealizationClassSet", 3)?;
        st.serialize_field("exhaustive", &self.exhaustive)?;
        st.serialize_field("count", &self.count)?;
        let classes: Vec<serde_json::Value> = self.classes.iter().map(Framework::to_json_value).collect();
        st.serialize_field("classes", &classes)?;
        st.end()
    }
}

/// Lexicographic order on the stacked coordinates.
fn sort_classes(classes: &mut [Framework]) {
    classes.sort_by(|a, b| {
        let flat = |f: &Framework| f.points().iter().flat_map(|p| p.iter().copied().collect::<Vec<_>>()).collect::<Vec<_>>();
        let (x, y) = (flat(a), flat(b));
        x.iter().zip(&y).map(|(p, q)| p.total_cmp(q)).find(|o| o.is_ne()).unwrap_or(std::cmp::Ordering::Equal)
    });
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum SphereStatus {
    GloballySphereRigid,
    SphereRigidNotGlobal,
    NoRealization,
    /// The search was heuristic; `class_count` is a lower bound.
    Inexhaustive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct SphereVerdict {
    pub status: SphereStatus,
    pub class_count: usize,
}

impl SphereVerdict {
    pub fn from_classes(set: &RealizationClassSet) -> SphereVerdict {
        let status = match (set.exhaustive, set.count) {
            (false, _) => SphereStatus::Inexhaustive,
            (true, 0) => SphereStatus::NoRealization,
            (true, 1) => SphereStatus::GloballySphereRigid,
            (true, _) => SphereStatus::SphereRigidNotGlobal,
        };
        SphereVerdict { status, class_count: set.count }
    }
}

/// Enumerates realizations, exhaustively when an order exists.
pub fn enumerate(g: &Graph, d: usize, opts: &NumericOptions, tol: &ToleranceConfig) -> Result<RealizationClassSet> {
    if !matches!(d, 2 | 3) {
        return Err(Error::DimensionUnsupported(d));
    }
    match discretization_order(g, d) {
        Some(ord) => bp_enumerate(g, d, &ord, tol),
        None => Ok(numeric_solve(g, d, opts, tol)),
    }
}

pub fn sphere_verdict(g: &Graph, d: usize, tol: &ToleranceConfig) -> Result<SphereVerdict> {
    sphere_verdict_with(g, d, &NumericOptions::default(), tol)
}

pub fn sphere_verdict_with(g: &Graph, d: usize, opts: &NumericOptions, tol: &ToleranceConfig) -> Result<SphereVerdict> {
    Ok(SphereVerdict::from_classes(&enumerate(g, d, opts, tol)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::framework::validate_sphere;

    fn fan(n: usize) -> Graph {
        let mut edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
        edges.extend((1..n - 1).map(|i| (i, i + 1)));
        Graph::from_edges(n, &edges)
    }

    #[test]
    fn fan_is_globally_rigid() {
        let tol = ToleranceConfig::default();
        let v = sphere_verdict(&fan(5), 2, &tol).unwrap();
        assert_eq!(v, SphereVerdict { status: SphereStatus::GloballySphereRigid, class_count: 1 });
    }

    #[test]
    fn triangle_has_one_class() {
        let g = Graph::complete(3);
        let ord = discretization_order(&g, 2).unwrap();
        let set = bp_enumerate(&g, 2, &ord, &ToleranceConfig::default()).unwrap();
        assert_eq!(set.count, 1);
        assert!(set.exhaustive);
        assert!(validate_sphere(&set.classes[0], &ToleranceConfig::default()).is_valid());
    }

    #[test]
    fn three_triangles_on_one_edge_cannot_be_pennies() {
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (0, 4), (1, 4)]);
        let v = sphere_verdict(&g, 2, &ToleranceConfig::default()).unwrap();
        assert_eq!(v.status, SphereStatus::NoRealization);
    }

    #[test]
    fn bipyramid_in_space() {
        let mut edges: Vec<_> = (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v))).collect();
        edges.extend([(1, 4), (2, 4), (3, 4)]);
        let g = Graph::from_edges(5, &edges);
        let (set, stats) =
            bp_enumerate_with_stats(&g, 3, &discretization_order(&g, 3).unwrap(), &ToleranceConfig::default()).unwrap();
        assert_eq!(set.count, 1);
        assert!(stats.leaves <= 2);
    }

    #[test]
    fn serialized_shape() {
        let set = enumerate(&Graph::complete(3), 2, &NumericOptions::default(), &ToleranceConfig::default()).unwrap();
        let v = serde_json::to_value(&set).unwrap();
        assert_eq!(v["exhaustive"], true);
        assert_eq!(v["count"], 1);
        assert_eq!(v["classes"][0]["d"], 2);
    }

    #[test]
    fn four_cycle_is_not_exhaustive() {
        let opts = NumericOptions { restarts: 20, seed: 0 };
        let v = sphere_verdict_with(&Graph::cycle(4), 2, &opts, &ToleranceConfig::default()).unwrap();
        assert_eq!(v.status, SphereStatus::Inexhaustive);
        assert!(v.class_count >= 2);
    }
}
