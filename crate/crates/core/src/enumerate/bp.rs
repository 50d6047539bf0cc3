use std::collections::BTreeMap;

use nalgebra::{DMatrix, DVector};

use super::order::{plain_order, DiscretizationOrder, Support};
use super::{sort_classes, RealizationClassSet};
use crate::error::{Error, Result};
use crate::framework::{canonical_form, validate_sphere, Framework, ToleranceConfig};
use crate::graph::Graph;

/// Supports whose Cayley–Menger determinant is at most this are treated as
/// affinely dependent.
const CAYLEY_MENGER_MIN: f64 = 1e-10;
/// Squared offsets from the support hull this small count as tangency.
const TANGENCY: f64 = 1e-9;
/// Match tolerance for distances inherited from a rigid cluster.
const DERIVED_TOL: f64 = 1e-7;

/// Counters from one branch-and-prune run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Partial placements visited.
    pub nodes: usize,
    /// Complete placements reached.
    pub leaves: usize,
}

/// Exhaustive enumeration of sphere realizations modulo isometry.
pub fn bp_enumerate(g: &Graph, d: usize, ord: &DiscretizationOrder, tol: &ToleranceConfig) -> Result<RealizationClassSet> {
    Ok(bp_enumerate_with_stats(g, d, ord, tol)?.0)
}

pub fn bp_enumerate_with_stats(
    g: &Graph,
    d: usize,
    ord: &DiscretizationOrder,
    tol: &ToleranceConfig,
) -> Result<(RealizationClassSet, SearchStats)> {
    if !matches!(d, 2 | 3) {
        return Err(Error::DimensionUnsupported(d));
    }
    if ord.dim() != d || ord.steps().len() != g.len() {
        return Err(Error::PreconditionFailed("discretization order does not match the graph".into()));
    }
    tol.check()?;
    let mut stats = SearchStats::default();
    let derived = match derived_distances(g, d, ord, tol, &mut stats)? {
        Some(table) => table,
        None => return Ok((RealizationClassSet::exhaustive(Vec::new()), stats)),
    };
    let mut search = Search { g, d, ord, tol, derived: &derived, stats, leaves: Vec::new() };
    let mut coords: Vec<Option<DVector<f64>>> = vec![None; g.len()];
    search.descend(0, &mut coords)?;
    let Search { stats, leaves, .. } = search;
    let mut classes: Vec<Framework> = Vec::new();
    for f in leaves {
        let canon = canonical_form(&f);
        let f = f.with_points(canon.coords.into_iter().map(DVector::from_vec).collect());
        if !validate_sphere(&f, tol).is_valid() {
            continue;
        }
        if !classes.iter().any(|c| close(c, &f, tol.tol_congruence)) {
            classes.push(f);
        }
    }
    sort_classes(&mut classes);
    Ok((RealizationClassSet::exhaustive(classes), stats))
}

fn close(a: &Framework, b: &Framework, tol: f64) -> bool {
    a.points().iter().zip(b.points()).all(|(p, q)| (p - q).amax() <= tol)
}

type DistanceTable = BTreeMap<(usize, usize), Vec<f64>>;

/// Distances between each derived support and its vertex over every
/// realization of the cluster on its own. `None` when some cluster has no
/// realization, so the whole graph has none either.
fn derived_distances(
    g: &Graph,
    d: usize,
    ord: &DiscretizationOrder,
    tol: &ToleranceConfig,
    stats: &mut SearchStats,
) -> Result<Option<DistanceTable>> {
    let mut needed: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    for step in ord.steps() {
        for s in &step.supports {
            if let Support::Derived { vertex, cluster } = *s {
                needed.entry(cluster).or_default().push((step.vertex, vertex));
            }
        }
    }
    let mut table = DistanceTable::new();
    for (cluster, pairs) in needed {
        let members = &ord.clusters()[cluster];
        let sub = g.induced(members);
        let sub_ord = plain_order(&sub, d).ok_or_else(|| {
            Error::PreconditionFailed("rigid cluster has no discretization order".into())
        })?;
        let (set, sub_stats) = bp_enumerate_with_stats(&sub, d, &sub_ord, tol)?;
        stats.nodes += sub_stats.nodes;
        stats.leaves += sub_stats.leaves;
        if set.count == 0 {
            return Ok(None);
        }
        let local = |v: usize| members.binary_search(&v).expect("cluster member");
        for (v, w) in pairs {
            let mut ds: Vec<f64> = set.classes.iter().map(|c| c.distance(local(v), local(w))).collect();
            ds.sort_by(f64::total_cmp);
            ds.dedup_by(|a, b| (*a - *b).abs() <= DERIVED_TOL);
            table.insert((v, w), ds);
        }
    }
    Ok(Some(table))
}

struct Search<'a> {
    g: &'a Graph,
    d: usize,
    ord: &'a DiscretizationOrder,
    tol: &'a ToleranceConfig,
    derived: &'a DistanceTable,
    stats: SearchStats,
    leaves: Vec<Framework>,
}

impl Search<'_> {
    fn radii(&self, vertex: usize, s: Support) -> Vec<f64> {
        match s {
            Support::Edge(_) => vec![1.0],
            Support::Derived { vertex: w, .. } => self.derived[&(vertex, w)].clone(),
        }
    }

    fn descend(&mut self, depth: usize, coords: &mut Vec<Option<DVector<f64>>>) -> Result<()> {
        self.stats.nodes += 1;
        let steps = self.ord.steps();
        if depth == steps.len() {
            self.stats.leaves += 1;
            let pts = coords.iter().map(|p| p.clone().expect("every vertex placed")).collect();
            self.leaves.push(Framework::from_points(self.g.clone(), self.d, pts));
            return Ok(());
        }
        let step = &steps[depth];
        for p in self.candidates(depth, coords)? {
            if self.admissible(step.vertex, &step.supports, &p, coords) {
                coords[step.vertex] = Some(p);
                self.descend(depth + 1, coords)?;
                coords[step.vertex] = None;
            }
        }
        Ok(())
    }

    /// Candidate positions from `d` affinely independent supports. The first
    /// `d + 1` vertices are pinned: origin, positive first axis, and so on.
    fn candidates(&self, depth: usize, coords: &[Option<DVector<f64>>]) -> Result<Vec<DVector<f64>>> {
        let d = self.d;
        let step = &self.ord.steps()[depth];
        let at = |s: &Support| coords[s.vertex()].clone().expect("support placed");
        if depth == 0 {
            return Ok(vec![DVector::zeros(d)]);
        }
        let (chosen, normal) = if depth <= d {
            let chosen: Vec<Support> = step.supports[..depth].to_vec();
            (chosen, Some(DVector::from_fn(d, |i, _| if i == depth - 1 { 1.0 } else { 0.0 })))
        } else {
            (self.independent_supports(&step.supports, coords)?, None)
        };
        let points: Vec<DVector<f64>> = chosen.iter().map(at).collect();
        let radius_sets: Vec<Vec<f64>> = chosen.iter().map(|&s| self.radii(step.vertex, s)).collect();
        let mut out = Vec::new();
        for radii in cartesian(&radius_sets) {
            let found = sphere_intersection(&points, &radii, normal.as_ref(), d);
            if depth <= d {
                out.extend(found.into_iter().take(1));
            } else {
                out.extend(found);
            }
        }
        Ok(out)
    }

    fn independent_supports(&self, supports: &[Support], coords: &[Option<DVector<f64>>]) -> Result<Vec<Support>> {
        let d = self.d;
        let mut best = 0.0f64;
        for combo in combinations(supports.len(), d) {
            let pts: Vec<DVector<f64>> =
                combo.iter().map(|&i| coords[supports[i].vertex()].clone().expect("support placed")).collect();
            let cm = cayley_menger(&pts).abs();
            if cm > CAYLEY_MENGER_MIN {
                return Ok(combo.iter().map(|&i| supports[i]).collect());
            }
            best = best.max(cm);
        }
        Err(Error::NumericallyIllConditioned(best))
    }

    /// Every support distance matches and no placed non-neighbour touches or
    /// overlaps.
    fn admissible(&self, v: usize, supports: &[Support], p: &DVector<f64>, coords: &[Option<DVector<f64>>]) -> bool {
        for &s in supports {
            let q = coords[s.vertex()].as_ref().expect("support placed");
            let dist = (p - q).norm();
            let ok = match s {
                Support::Edge(_) => (dist - 1.0).abs() <= self.tol.tol_edge,
                Support::Derived { .. } => self.radii(v, s).iter().any(|r| (dist - r).abs() <= DERIVED_TOL),
            };
            if !ok {
                return false;
            }
        }
        let limit = self.tol.touching_limit();
        coords.iter().enumerate().all(|(w, q)| match q {
            Some(q) if w != v && !self.g.has_edge(v, w) => (p - q).norm() > limit,
            _ => true,
        })
    }
}

fn cartesian(sets: &[Vec<f64>]) -> Vec<Vec<f64>> {
    sets.iter().fold(vec![Vec::new()], |acc, set| {
        acc.iter()
            .flat_map(|prefix| {
                set.iter().map(move |&r| {
                    let mut next = prefix.clone();
                    next.push(r);
                    next
                })
            })
            .collect()
    })
}

/// `k`-subsets of `0..n` in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Cayley–Menger determinant of a point set.
pub(crate) fn cayley_menger(points: &[DVector<f64>]) -> f64 {
    let m = points.len();
    let cm = DMatrix::from_fn(m + 1, m + 1, |i, j| match (i, j) {
        (0, 0) => 0.0,
        (0, _) | (_, 0) => 1.0,
        _ => (&points[i - 1] - &points[j - 1]).norm_squared(),
    });
    cm.determinant()
}

/// Points at distance `radii[i]` from `points[i]`. With `normal` given, the
/// solution set is taken along that direction (positive side first);
/// otherwise the points must span a hyperplane and its normal is used.
/// Returns zero, one (tangency) or two points.
pub(crate) fn sphere_intersection(
    points: &[DVector<f64>],
    radii: &[f64],
    normal: Option<&DVector<f64>>,
    d: usize,
) -> Vec<DVector<f64>> {
    let p0 = &points[0];
    let dirs: Vec<DVector<f64>> = points[1..].iter().map(|p| p - p0).collect();
    let k = dirs.len();
    let gram = DMatrix::from_fn(k, k, |i, j| dirs[i].dot(&dirs[j]));
    let rhs = DVector::from_fn(k, |j, _| 0.5 * (dirs[j].norm_squared() + radii[0] * radii[0] - radii[j + 1] * radii[j + 1]));
    let coef = if k == 0 {
        DVector::zeros(0)
    } else {
        match gram.lu().solve(&rhs) {
            Some(c) => c,
            None => return Vec::new(),
        }
    };
    let mut base = p0.clone();
    for (c, dir) in coef.iter().zip(&dirs) {
        base += dir * *c;
    }
    let offset = &base - p0;
    let h2 = radii[0] * radii[0] - offset.norm_squared();
    if h2 < -TANGENCY {
        return Vec::new();
    }
    let n = match normal {
        Some(n) => n.clone(),
        None => match hyperplane_normal(&dirs, d) {
            Some(n) => n,
            None => return Vec::new(),
        },
    };
    if h2 <= TANGENCY {
        return vec![base];
    }
    let h = h2.sqrt();
    vec![&base + &n * h, &base - &n * h]
}

fn hyperplane_normal(dirs: &[DVector<f64>], d: usize) -> Option<DVector<f64>> {
    let mut basis: Vec<DVector<f64>> = Vec::new();
    for v in dirs {
        let mut w = v.clone();
        for e in &basis {
            let c = w.dot(e);
            w -= e * c;
        }
        basis.push(w.try_normalize(1e-12)?);
    }
    for k in 0..d {
        let mut w = DVector::from_fn(d, |i, _| if i == k { 1.0 } else { 0.0 });
        for e in &basis {
            let c = w.dot(e);
            w -= e * c;
        }
        if w.norm() > 1e-6 {
            return Some(w.normalize());
        }
    }
    None
}
