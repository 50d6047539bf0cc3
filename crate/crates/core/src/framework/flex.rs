use std::collections::BTreeSet;
use std::f64::consts::PI;

use nalgebra::DVector;
use serde::Serialize;

use super::Framework;
use crate::error::{Error, Result};

/// A codimension-2 affine subspace: `point + span(directions)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Axis {
    pub point: Vec<f64>,
    pub directions: Vec<Vec<f64>>,
}

/// A continuous flex that rotates one side of a small separator about an
/// axis through the separator points and keeps the other side fixed.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FlexWitness {
    pub separator: Vec<String>,
    pub rotating_side: Vec<String>,
    pub axis: Axis,
    /// Open interval of angles over which every edge length is preserved.
    pub validity_interval: (f64, f64),
}

impl FlexWitness {
    /// The framework after rotating by `angle` radians.
    pub fn apply(&self, f: &Framework, angle: f64) -> Result<Framework> {
        let rotating = self
            .rotating_side
            .iter()
            .map(|l| f.graph().index_of(l).ok_or(Error::GraphMismatch))
            .collect::<Result<Vec<_>>>()?;
        if self.axis.point.len() != f.dim() {
            return Err(Error::GraphMismatch);
        }
        let (a, b) = self.rotation_plane();
        let c = DVector::from_column_slice(&self.axis.point);
        let mut points = f.points().to_vec();
        for v in rotating {
            points[v] = &c + rotate(&(&points[v] - &c), &a, &b, angle);
        }
        Ok(f.with_points(points))
    }

    fn rotation_plane(&self) -> (DVector<f64>, DVector<f64>) {
        let d = self.axis.point.len();
        let axis: Vec<DVector<f64>> =
            self.axis.directions.iter().map(|u| DVector::from_column_slice(u)).collect();
        let mut plane = complete_basis(&axis, d);
        let b = plane.pop().expect("rotation plane has two vectors");
        let a = plane.pop().expect("rotation plane has two vectors");
        (a, b)
    }
}

/// Rotation by `t` in the plane spanned by orthonormal `a`, `b`.
fn rotate(x: &DVector<f64>, a: &DVector<f64>, b: &DVector<f64>, t: f64) -> DVector<f64> {
    let (xa, xb) = (x.dot(a), x.dot(b));
    let (c, s) = (t.cos(), t.sin());
    x - a * xa - b * xb + a * (c * xa - s * xb) + b * (s * xa + c * xb)
}

/// Orthonormal vectors completing `given` (already orthonormal) to a basis
/// of R^d, by Gram–Schmidt over the standard basis.
fn complete_basis(given: &[DVector<f64>], d: usize) -> Vec<DVector<f64>> {
    let mut all: Vec<DVector<f64>> = given.to_vec();
    let mut extra = Vec::new();
    for k in 0..d {
        let mut w = DVector::from_fn(d, |i, _| if i == k { 1.0 } else { 0.0 });
        for e in &all {
            let c = w.dot(e);
            w -= e * c;
        }
        if w.norm() > 1e-6 {
            let w = w.normalize();
            all.push(w.clone());
            extra.push(w);
        }
    }
    extra
}

fn unit(v: DVector<f64>) -> Option<DVector<f64>> {
    let n = v.norm();
    (n > 1e-9).then(|| v / n)
}

/// Builds the rotation flex for a split `G = G[v1] ∪ G[v2]` whose shared
/// vertices are few and in general position; vertices of `v1` outside the
/// separator rotate.
pub fn flex_witness_from_separator(f: &Framework, v1: &[usize], v2: &[usize]) -> Result<FlexWitness> {
    let g = f.graph();
    let d = f.dim();
    if d < 2 {
        return Err(Error::DimensionUnsupported(d));
    }
    let s1: BTreeSet<usize> = v1.iter().copied().collect();
    let s2: BTreeSet<usize> = v2.iter().copied().collect();
    if s1.iter().chain(&s2).any(|&v| v >= g.len()) {
        return Err(Error::PreconditionFailed("vertex index out of range".into()));
    }
    if s1.union(&s2).count() != g.len() {
        return Err(Error::PreconditionFailed("the two sides do not cover every vertex".into()));
    }
    if let Some((u, v)) = g
        .edges()
        .into_iter()
        .find(|&(u, v)| !(s1.contains(&u) && s1.contains(&v)) && !(s2.contains(&u) && s2.contains(&v)))
    {
        return Err(Error::PreconditionFailed(format!(
            "edge {}-{} lies in neither side",
            g.label(u),
            g.label(v)
        )));
    }
    let sep: Vec<usize> = s1.intersection(&s2).copied().collect();
    if sep.len() > d - 1 {
        return Err(Error::PreconditionFailed(format!(
            "separator has {} vertices, at most {} allowed in dimension {d}",
            sep.len(),
            d - 1
        )));
    }
    if !sep.is_empty() && f.affine_span_dim_of(&sep) != sep.len() - 1 {
        return Err(Error::PreconditionFailed("separator points are not affinely independent".into()));
    }
    for (name, side) in [("first", &s1), ("second", &s2)] {
        let vs: Vec<usize> = side.iter().copied().collect();
        if f.affine_span_dim_of(&vs) < d - 1 {
            return Err(Error::PreconditionFailed(format!(
                "affine span of the {name} side has dimension below {}",
                d - 1
            )));
        }
    }

    let rotating: Vec<usize> = s1.difference(&s2).copied().collect();
    let fixed: Vec<usize> = s2.difference(&s1).copied().collect();
    let axis = best_axis(f, &sep, &s1, &rotating, &fixed);
    let label = |vs: &[usize]| vs.iter().map(|&v| g.label(v).to_owned()).collect::<Vec<_>>();
    Ok(FlexWitness {
        separator: label(&sep),
        rotating_side: label(&rotating),
        axis,
        validity_interval: (-PI, PI),
    })
}

/// Among the axes through the separator, picks the one whose small rotation
/// moves the rotating side farthest relative to the fixed side.
fn best_axis(f: &Framework, sep: &[usize], side: &BTreeSet<usize>, rotating: &[usize], fixed: &[usize]) -> Axis {
    let d = f.dim();
    let anchor = match sep.first() {
        Some(&s) => f.point(s).clone(),
        None => side.iter().fold(DVector::zeros(d), |acc, &v| acc + f.point(v)) / side.len() as f64,
    };
    let mut candidates: Vec<Vec<DVector<f64>>> = Vec::new();
    if d == 2 {
        candidates.push(Vec::new());
    } else if sep.len() == 2 {
        candidates.extend(unit(f.point(sep[1]) - f.point(sep[0])).map(|u| vec![u]));
    } else {
        for k in 0..d {
            candidates.push(vec![DVector::from_fn(d, |i, _| if i == k { 1.0 } else { 0.0 })]);
        }
        for &v in rotating.iter().chain(fixed) {
            candidates.extend(unit(f.point(v) - &anchor).map(|u| vec![u]));
        }
    }
    let score = |dirs: &Vec<DVector<f64>>| {
        let plane = complete_basis(dirs, d);
        let (a, b) = (&plane[0], &plane[1]);
        let mut moved = 0.0f64;
        for &r in rotating {
            let p = &anchor + rotate(&(f.point(r) - &anchor), a, b, 0.1);
            for &s in fixed {
                moved = moved.max(((&p - f.point(s)).norm() - f.distance(r, s)).abs());
            }
        }
        moved
    };
    let best = candidates
        .into_iter()
        .map(|c| (score(&c), c))
        .fold(None::<(f64, Vec<DVector<f64>>)>, |acc, (s, c)| match acc {
            Some((bs, _)) if bs >= s => acc,
            _ => Some((s, c)),
        })
        .map(|(_, c)| c)
        .unwrap_or_default();
    Axis {
        point: anchor.iter().copied().collect(),
        directions: best.iter().map(|u| u.iter().copied().collect()).collect(),
    }
}
