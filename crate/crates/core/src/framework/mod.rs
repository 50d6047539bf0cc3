//! Frameworks: a graph with a point in R^d for every vertex.
//!
//! Distances are measured in sphere diameters, so touching spheres sit at
//! distance exactly 1. The realization file format is
//! `{"d": 2, "coords": {"a": [0.0, 0.0], ..}}`, read alongside a graph file.

mod congruence;
mod flex;
mod matrix;
mod validate;

pub use congruence::{canonical_form, congruent, equivalent, CanonicalForm};
pub use flex::{flex_witness_from_separator, Axis, FlexWitness};
pub use matrix::{infinitesimally_rigid, numerical_rank, rigid_motion_basis, rigidity_matrix};
pub use validate::{validate_sphere, ValidationReport, Validity, Violation, ViolationKind};

use std::collections::BTreeMap;
use std::path::Path;

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Numerical tolerances used by every metric test. They are reported
/// alongside results.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ToleranceConfig {
    /// Allowed deviation of an edge length from 1.
    pub tol_edge: f64,
    /// Extra clearance demanded of non-edges beyond distance 1.
    pub tol_sep: f64,
    /// Coordinate tolerance when comparing canonical forms.
    pub tol_congruence: f64,
    /// Singular values below `tol_rank * sigma_max` count as zero.
    pub tol_rank: f64,
    /// When set, non-edges at touching distance are reported but do not
    /// invalidate a realization.
    pub lenient_touching: bool,
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        ToleranceConfig {
            tol_edge: 1e-9,
            tol_sep: 0.0,
            tol_congruence: 1e-7,
            tol_rank: 1e-8,
            lenient_touching: false,
        }
    }
}

impl ToleranceConfig {
    pub fn check(&self) -> Result<()> {
        let all = [self.tol_edge, self.tol_sep, self.tol_congruence, self.tol_rank];
        if all.iter().any(|t| t.is_nan() || *t < 0.0) || self.tol_edge >= 1e-3 {
            return Err(Error::Format(format!("invalid tolerance configuration {self:?}")));
        }
        Ok(())
    }

    /// Upper end of the band in which a non-edge counts as touching.
    pub(crate) fn touching_limit(&self) -> f64 {
        1.0 + self.tol_edge.max(self.tol_sep)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Framework {
    graph: Graph,
    d: usize,
    coords: Vec<DVector<f64>>,
}

#[derive(Serialize, Deserialize)]
struct RealizationFile {
    d: usize,
    coords: BTreeMap<String, Vec<f64>>,
}

impl Framework {
    /// `coords[v]` is the point of vertex index `v`.
    pub fn new(graph: Graph, d: usize, coords: Vec<Vec<f64>>) -> Result<Framework> {
        if !(1..=3).contains(&d) {
            return Err(Error::DimensionUnsupported(d));
        }
        if coords.len() != graph.len() {
            return Err(Error::Format(format!(
                "{} coordinate vectors for {} vertices",
                coords.len(),
                graph.len()
            )));
        }
        let mut points = Vec::with_capacity(coords.len());
        for (v, c) in coords.into_iter().enumerate() {
            if c.len() != d || c.iter().any(|x| !x.is_finite()) {
                return Err(Error::Format(format!(
                    "vertex {:?} needs {d} finite coordinates",
                    graph.label(v)
                )));
            }
            points.push(DVector::from_vec(c));
        }
        Ok(Framework { graph, d, coords: points })
    }

    pub(crate) fn from_points(graph: Graph, d: usize, coords: Vec<DVector<f64>>) -> Framework {
        debug_assert!(coords.len() == graph.len() && coords.iter().all(|p| p.len() == d));
        Framework { graph, d, coords }
    }

    /// Builds a framework from a label → point map covering every vertex.
    pub fn from_labelled(graph: Graph, d: usize, coords: &BTreeMap<String, Vec<f64>>) -> Result<Framework> {
        if let Some(extra) = coords.keys().find(|k| graph.index_of(k).is_none()) {
            return Err(Error::Format(format!("coordinates given for unknown vertex {extra:?}")));
        }
        let ordered = graph
            .labels()
            .iter()
            .map(|l| {
                coords
                    .get(l)
                    .cloned()
                    .ok_or_else(|| Error::Format(format!("no coordinates for vertex {l:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Framework::new(graph, d, ordered)
    }

    pub fn from_json_str(graph: Graph, s: &str) -> Result<Framework> {
        let file: RealizationFile = serde_json::from_str(s)?;
        Framework::from_labelled(graph, file.d, &file.coords)
    }

    pub fn load(graph: Graph, path: impl AsRef<Path>) -> Result<Framework> {
        Framework::from_json_str(graph, &std::fs::read_to_string(path)?)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let file = RealizationFile { d: self.d, coords: self.labelled_coords() };
        serde_json::to_value(file).expect("realization serializes")
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("realization serializes")
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_json_string() + "\n")?;
        Ok(())
    }

    pub fn labelled_coords(&self) -> BTreeMap<String, Vec<f64>> {
        self.graph
            .labels()
            .iter()
            .zip(&self.coords)
            .map(|(l, p)| (l.clone(), p.iter().copied().collect()))
            .collect()
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn points(&self) -> &[DVector<f64>] {
        &self.coords
    }

    pub fn point(&self, v: usize) -> &DVector<f64> {
        &self.coords[v]
    }

    pub fn distance(&self, u: usize, v: usize) -> f64 {
        (&self.coords[u] - &self.coords[v]).norm()
    }

    /// Same graph and points, but with `points` replaced.
    pub fn with_points(&self, points: Vec<DVector<f64>>) -> Framework {
        Framework::from_points(self.graph.clone(), self.d, points)
    }

    /// Same points on another graph with the same vertex labels.
    pub fn with_graph(&self, graph: Graph) -> Result<Framework> {
        if graph.labels() != self.graph.labels() {
            return Err(Error::GraphMismatch);
        }
        Ok(Framework::from_points(graph, self.d, self.coords.clone()))
    }

    /// Embeds the framework into dimension `d >= self.dim()` by zero-padding.
    pub fn lift(&self, d: usize) -> Result<Framework> {
        if d < self.d || d > 3 {
            return Err(Error::DimensionUnsupported(d));
        }
        let coords = self
            .coords
            .iter()
            .map(|p| DVector::from_fn(d, |i, _| if i < self.d { p[i] } else { 0.0 }))
            .collect();
        Ok(Framework::from_points(self.graph.clone(), d, coords))
    }

    /// Applies `x -> rotation * x + translation` to every point.
    pub fn transformed(&self, rotation: &DMatrix<f64>, translation: &DVector<f64>) -> Framework {
        self.with_points(self.coords.iter().map(|p| rotation * p + translation).collect())
    }

    /// Dimension of the affine span of the points of `vs`.
    pub fn affine_span_dim_of(&self, vs: &[usize]) -> usize {
        affine_span_dim(vs.iter().map(|&v| &self.coords[v]), self.d)
    }

    pub fn affine_span_dim(&self) -> usize {
        affine_span_dim(self.coords.iter(), self.d)
    }
}

/// Affine span dimension, treating singular values below `1e-9` (relative
/// to unit spacing) as zero.
pub(crate) fn affine_span_dim<'a>(points: impl Iterator<Item = &'a DVector<f64>>, d: usize) -> usize {
    let pts: Vec<&DVector<f64>> = points.collect();
    if pts.len() <= 1 {
        return 0;
    }
    let base = pts[0];
    let m = DMatrix::from_fn(pts.len() - 1, d, |i, j| pts[i + 1][j] - base[j]);
    let sv = m.singular_values();
    let scale = sv.max().max(1.0);
    sv.iter().filter(|&&s| s > 1e-9 * scale).count()
}
