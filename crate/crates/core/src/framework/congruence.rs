use nalgebra::DVector;
use serde::Serialize;

use super::{Framework, ToleranceConfig};
use crate::error::{Error, Result};

/// Minimum distance of a new anchor from the affine hull of the previous
/// anchors.
const ANCHOR_THRESHOLD: f64 = 1e-6;

/// Coordinates modulo isometry (reflections included).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CanonicalForm {
    /// Canonical coordinates, indexed by vertex.
    pub coords: Vec<Vec<f64>>,
    /// Dimension of the affine span of the framework.
    pub span_dim: usize,
    /// Anchor vertices (by index) that fixed the frame.
    pub anchors: Vec<usize>,
}

impl CanonicalForm {
    /// Largest coordinate difference between two canonical forms.
    pub fn max_deviation(&self, other: &CanonicalForm) -> f64 {
        self.coords
            .iter()
            .zip(&other.coords)
            .flat_map(|(a, b)| a.iter().zip(b).map(|(x, y)| (x - y).abs()))
            .fold(0.0, f64::max)
    }
}

fn same_shape(f1: &Framework, f2: &Framework) -> Result<()> {
    if f1.dim() != f2.dim() || f1.graph() != f2.graph() {
        return Err(Error::GraphMismatch);
    }
    Ok(())
}

/// Every edge has the same length in both frameworks, within `tol_edge`.
pub fn equivalent(f1: &Framework, f2: &Framework, tol: &ToleranceConfig) -> Result<bool> {
    same_shape(f1, f2)?;
    Ok(f1
        .graph()
        .edges()
        .into_iter()
        .all(|(u, v)| (f1.distance(u, v) - f2.distance(u, v)).abs() <= tol.tol_edge))
}

/// Canonical coordinates modulo isometry.
///
/// Anchors are picked in label order: the first vertex, then each next vertex
/// lying off the affine hull of the anchors so far. The anchor centroid moves
/// to the origin and the Gram–Schmidt frame of the anchor directions becomes
/// the coordinate frame; because each frame vector points towards its anchor,
/// mirror images canonicalize identically. Frameworks with a degenerate span
/// are canonicalized in their span's dimension and padded with zeros.
pub fn canonical_form(f: &Framework) -> CanonicalForm {
    let d = f.dim();
    let n = f.graph().len();
    if n == 0 {
        return CanonicalForm { coords: Vec::new(), span_dim: 0, anchors: Vec::new() };
    }
    let origin = f.point(0).clone();
    let mut anchors = vec![0];
    let mut frame: Vec<DVector<f64>> = Vec::new();
    for v in 1..n {
        if frame.len() == d {
            break;
        }
        let mut w = f.point(v) - &origin;
        for e in &frame {
            let c = w.dot(e);
            w -= e * c;
        }
        let norm = w.norm();
        if norm > ANCHOR_THRESHOLD {
            frame.push(w / norm);
            anchors.push(v);
        }
    }
    let span_dim = frame.len();
    let centroid = anchors.iter().fold(DVector::zeros(d), |acc, &a| acc + f.point(a)) / anchors.len() as f64;
    let coords = f
        .points()
        .iter()
        .map(|p| {
            let rel = p - &centroid;
            (0..d).map(|k| frame.get(k).map_or(0.0, |e| clean(rel.dot(e)))).collect()
        })
        .collect();
    CanonicalForm { coords, span_dim, anchors }
}

/// Collapses negative zero so canonical output is byte-stable.
fn clean(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x
    }
}

/// Congruence modulo isometries including reflections.
pub fn congruent(f1: &Framework, f2: &Framework, tol: &ToleranceConfig) -> Result<bool> {
    same_shape(f1, f2)?;
    let (c1, c2) = (canonical_form(f1), canonical_form(f2));
    Ok(c1.anchors == c2.anchors && c1.max_deviation(&c2) <= tol.tol_congruence)
}
