use nalgebra::{DMatrix, DVector};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::bp::sphere_intersection;
use super::{sort_classes, RealizationClassSet};
use crate::framework::{canonical_form, validate_sphere, Framework, ToleranceConfig};
use crate::graph::Graph;

/// Converged solutions must reach this total squared residual.
const ACCEPT_COST: f64 = 1e-16;
/// Iteration stops early once the cost is this small.
const TARGET_COST: f64 = 1e-26;
const MAX_ITERATIONS: usize = 2000;
/// Canonical coordinates closer than this are the same class.
pub const CLUSTER_TOL: f64 = 1e-5;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NumericOptions {
    pub restarts: usize,
    pub seed: u64,
}

impl Default for NumericOptions {
    fn default() -> Self {
        NumericOptions { restarts: 200, seed: 0 }
    }
}

/// Pairwise residuals: edge length minus 1 for edges, shortfall below
/// `1 + tol_sep` for non-edges.
struct Residuals<'a> {
    g: &'a Graph,
    d: usize,
    limit: f64,
}

impl Residuals<'_> {
    fn cost(&self, x: &[f64]) -> f64 {
        let mut cost = 0.0;
        self.for_each(x, |_, _, r, _| cost += r * r);
        cost
    }

    /// Calls `f(u, v, residual, unit direction u - v)` for every active pair.
    fn for_each(&self, x: &[f64], mut f: impl FnMut(usize, usize, f64, &[f64])) {
        let (n, d) = (self.g.len(), self.d);
        let mut dir = vec![0.0; d];
        for u in 0..n {
            for v in u + 1..n {
                let mut dist2 = 0.0;
                for k in 0..d {
                    dir[k] = x[u * d + k] - x[v * d + k];
                    dist2 += dir[k] * dir[k];
                }
                let dist = dist2.sqrt().max(1e-12);
                let r = if self.g.has_edge(u, v) {
                    dist - 1.0
                } else if dist < self.limit {
                    dist - self.limit
                } else {
                    continue;
                };
                dir.iter_mut().for_each(|c| *c /= dist);
                f(u, v, r, &dir);
            }
        }
    }

    /// Normal equations `J^T J` and `J^T r`, assembled pair by pair.
    fn normal_equations(&self, x: &[f64]) -> (DMatrix<f64>, DVector<f64>) {
        let d = self.d;
        let m = x.len();
        let mut jtj = DMatrix::zeros(m, m);
        let mut jtr = DVector::zeros(m);
        self.for_each(x, |u, v, r, dir| {
            for a in 0..d {
                jtr[u * d + a] += dir[a] * r;
                jtr[v * d + a] -= dir[a] * r;
                for b in 0..d {
                    let w = dir[a] * dir[b];
                    jtj[(u * d + a, u * d + b)] += w;
                    jtj[(v * d + a, v * d + b)] += w;
                    jtj[(u * d + a, v * d + b)] -= w;
                    jtj[(v * d + a, u * d + b)] -= w;
                }
            }
        });
        (jtj, jtr)
    }
}

/// Levenberg–Marquardt from `x`; returns the final point and cost.
fn minimize(res: &Residuals, mut x: Vec<f64>) -> (Vec<f64>, f64) {
    let mut cost = res.cost(&x);
    let mut lambda = 1e-3;
    for _ in 0..MAX_ITERATIONS {
        if cost < TARGET_COST {
            break;
        }
        let (jtj, jtr) = res.normal_equations(&x);
        let mut improved = false;
        while lambda < 1e12 {
            let mut a = jtj.clone();
            for i in 0..a.nrows() {
                a[(i, i)] += lambda * (1.0 + jtj[(i, i)]);
            }
            let Some(chol) = a.cholesky() else {
                lambda *= 4.0;
                continue;
            };
            let step = chol.solve(&(-&jtr));
            let trial: Vec<f64> = x.iter().zip(step.iter()).map(|(a, b)| a + b).collect();
            let trial_cost = res.cost(&trial);
            if trial_cost < cost {
                let gain = cost - trial_cost;
                x = trial;
                cost = trial_cost;
                lambda = (lambda / 3.0).max(1e-12);
                improved = gain > 1e-40;
                break;
            }
            lambda *= 4.0;
        }
        if !improved {
            break;
        }
    }
    (x, cost)
}

/// Samples tried for a vertex with fewer than `d` placed neighbours.
const OFFSET_SAMPLES: usize = 48;

/// Random constructive start: vertices in a random traversal order, each
/// put at the candidate that best fits the placed vertices. Candidates are
/// the intersections of unit spheres around `d` placed neighbours when they
/// exist, random unit offsets from one neighbour otherwise.
fn dive_start(g: &Graph, d: usize, rng: &mut ChaCha8Rng) -> Vec<f64> {
    let n = g.len();
    let mut placed: Vec<Option<DVector<f64>>> = vec![None; n];
    let spread = (n as f64).sqrt().max(1.0);
    while let Some(start) = {
        let free: Vec<usize> = (0..n).filter(|&v| placed[v].is_none()).collect();
        (!free.is_empty()).then(|| free[rng.gen_range(0..free.len())])
    } {
        placed[start] = Some(DVector::from_fn(d, |_, _| rng.gen_range(-spread..spread)));
        loop {
            let frontier: Vec<usize> = (0..n)
                .filter(|&v| placed[v].is_none() && g.neighbors(v).iter().any(|&w| placed[w].is_some()))
                .collect();
            if frontier.is_empty() {
                break;
            }
            let best = frontier.iter().map(|&v| placed_neighbours(g, &placed, v).len()).max().unwrap_or(0);
            let top: Vec<usize> =
                frontier.into_iter().filter(|&v| placed_neighbours(g, &placed, v).len() == best).collect();
            let v = top[rng.gen_range(0..top.len())];
            let nbrs = placed_neighbours(g, &placed, v);
            let mut picked: Vec<usize> = Vec::with_capacity(d);
            while picked.len() < d.min(nbrs.len()) {
                let w = nbrs[rng.gen_range(0..nbrs.len())];
                if !picked.contains(&w) {
                    picked.push(w);
                }
            }
            let pts: Vec<DVector<f64>> = picked.iter().map(|&w| placed[w].clone().expect("placed")).collect();
            let mut options =
                if pts.len() == d { sphere_intersection(&pts, &vec![1.0; d], None, d) } else { Vec::new() };
            if options.is_empty() {
                options = (0..OFFSET_SAMPLES).map(|_| &pts[0] + random_unit(d, rng)).collect();
            }
            let mut scored: Vec<(f64, DVector<f64>)> =
                options.into_iter().map(|p| (misfit(g, &placed, v, &p), p)).collect();
            let least = scored.iter().map(|s| s.0).fold(f64::INFINITY, f64::min);
            scored.retain(|s| s.0 <= least + 1e-9);
            let p = scored.swap_remove(rng.gen_range(0..scored.len())).1;
            placed[v] = Some(p);
        }
    }
    placed.into_iter().flat_map(|p| p.expect("placed").iter().copied().collect::<Vec<_>>()).collect()
}

/// Squared residual of placing `v` at `p` against the placed vertices.
fn misfit(g: &Graph, placed: &[Option<DVector<f64>>], v: usize, p: &DVector<f64>) -> f64 {
    placed
        .iter()
        .enumerate()
        .filter_map(|(w, q)| q.as_ref().map(|q| (w, (p - q).norm())))
        .map(|(w, dist)| {
            if g.has_edge(v, w) {
                (dist - 1.0).powi(2)
            } else {
                (1.0 - dist).max(0.0).powi(2)
            }
        })
        .sum()
}

fn placed_neighbours(g: &Graph, placed: &[Option<DVector<f64>>], v: usize) -> Vec<usize> {
    g.neighbors(v).iter().copied().filter(|&w| placed[w].is_some()).collect()
}

fn random_unit(d: usize, rng: &mut ChaCha8Rng) -> DVector<f64> {
    loop {
        let v = DVector::from_fn(d, |_, _| rng.gen_range(-1.0..1.0));
        let n = v.norm();
        if n > 0.1 && n <= 1.0 {
            return v / n;
        }
    }
}

/// Multistart local search for sphere realizations. Restarts run in
/// parallel, each with its own stream of the master seed, and their results
/// are merged in restart order, so the output depends only on the inputs.
/// Never exhaustive.
pub fn numeric_solve(g: &Graph, d: usize, opts: &NumericOptions, tol: &ToleranceConfig) -> RealizationClassSet {
    let n = g.len();
    if n == 0 {
        return RealizationClassSet::inexhaustive(Vec::new());
    }
    let res = Residuals { g, d, limit: 1.0 + tol.tol_sep };
    let solutions: Vec<Option<Framework>> = (0..opts.restarts.max(1))
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
            rng.set_stream(i as u64);
            let (x, cost) = minimize(&res, dive_start(g, d, &mut rng));
            if cost >= ACCEPT_COST {
                return None;
            }
            let pts = x.chunks(d).map(DVector::from_column_slice).collect();
            let f = Framework::from_points(g.clone(), d, pts);
            validate_sphere(&f, tol).is_valid().then_some(f)
        })
        .collect();
    let mut classes: Vec<Framework> = Vec::new();
    for f in solutions.into_iter().flatten() {
        let canon = canonical_form(&f);
        let f = f.with_points(canon.coords.into_iter().map(DVector::from_vec).collect());
        let dup = classes
            .iter()
            .any(|c| c.points().iter().zip(f.points()).all(|(p, q)| (p - q).amax() <= CLUSTER_TOL));
        if !dup {
            classes.push(f);
        }
    }
    sort_classes(&mut classes);
    RealizationClassSet::inexhaustive(classes)
}
