use std::collections::BTreeSet;

use serde::Serialize;

use crate::graph::Graph;

/// A placed vertex whose distance to the vertex being placed is known.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Support {
    /// A placed neighbour, at distance 1.
    Edge(usize),
    /// A placed non-neighbour sharing a rigid cluster with the new vertex.
    /// The admissible distances come from enumerating that cluster alone.
    Derived { vertex: usize, cluster: usize },
}

impl Support {
    pub fn vertex(self) -> usize {
        match self {
            Support::Edge(v) | Support::Derived { vertex: v, .. } => v,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Step {
    pub vertex: usize,
    /// Edge supports first, in placement order, then derived supports.
    pub supports: Vec<Support>,
}

/// Placement order for branch-and-prune. The first `d + 1` vertices form a
/// clique; every later vertex has at least `d` supports among the vertices
/// placed before it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiscretizationOrder {
    d: usize,
    steps: Vec<Step>,
    clusters: Vec<Vec<usize>>,
}

impl DiscretizationOrder {
    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn order(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.vertex).collect()
    }

    /// Vertex sets of the rigid clusters referenced by derived supports.
    pub fn clusters(&self) -> &[Vec<usize>] {
        &self.clusters
    }

    /// True when every support is an edge.
    pub fn is_plain(&self) -> bool {
        self.steps.iter().all(|s| s.supports.iter().all(|x| matches!(x, Support::Edge(_))))
    }

    /// Checks an explicit order and computes its supports.
    pub fn from_vertices(g: &Graph, d: usize, order: &[usize]) -> Option<DiscretizationOrder> {
        let n = g.len();
        let distinct: BTreeSet<usize> = order.iter().copied().collect();
        if order.len() != n || distinct.len() != n || distinct.iter().any(|&v| v >= n) {
            return None;
        }
        let mut clusters = None;
        let mut placed = vec![false; n];
        let mut steps = Vec::with_capacity(n);
        for (i, &v) in order.iter().enumerate() {
            let need = i.min(d);
            let mut supports = edge_supports(g, order, &placed, v);
            if supports.len() < need {
                if i <= d {
                    return None;
                }
                let cl = clusters.get_or_insert_with(|| rigid_clusters(g, d));
                supports.extend(derived_supports(g, &placed, v, cl, order));
                if supports.len() < need {
                    return None;
                }
            }
            placed[v] = true;
            steps.push(Step { vertex: v, supports });
        }
        Some(DiscretizationOrder { d, steps, clusters: clusters.unwrap_or_default() })
    }
}

fn edge_supports(g: &Graph, order: &[usize], placed: &[bool], v: usize) -> Vec<Support> {
    order.iter().filter(|&&w| placed[w] && g.has_edge(v, w)).map(|&w| Support::Edge(w)).collect()
}

fn derived_supports(g: &Graph, placed: &[bool], v: usize, clusters: &[Vec<usize>], order: &[usize]) -> Vec<Support> {
    let mut out = Vec::new();
    for &w in order.iter().filter(|&&w| placed[w] && !g.has_edge(v, w)) {
        if let Some(c) = clusters.iter().position(|c| c.binary_search(&v).is_ok() && c.binary_search(&w).is_ok()) {
            out.push(Support::Derived { vertex: w, cluster: c });
        }
    }
    out
}

/// All `(d+1)`-cliques, each sorted, in lexicographic order.
fn seed_cliques(g: &Graph, d: usize) -> Vec<Vec<usize>> {
    fn extend(g: &Graph, size: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == size {
            out.push(current.clone());
            return;
        }
        let start = current.last().map_or(0, |&l| l + 1);
        for v in start..g.len() {
            if current.iter().all(|&u| g.has_edge(u, v)) {
                current.push(v);
                extend(g, size, current, out);
                current.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(g, d + 1, &mut Vec::new(), &mut out);
    out
}

/// Closure of `seed` under adding vertices with at least `d` neighbours
/// inside, returned in the order vertices were added.
fn closure_order(g: &Graph, d: usize, seed: &[usize], pick: &mut impl FnMut(&[usize]) -> usize) -> Vec<usize> {
    let mut inside = vec![false; g.len()];
    let mut count = vec![0usize; g.len()];
    let mut order = Vec::new();
    let add = |v: usize, inside: &mut Vec<bool>, count: &mut Vec<usize>, order: &mut Vec<usize>| {
        inside[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            count[w] += 1;
        }
    };
    for &v in seed {
        add(v, &mut inside, &mut count, &mut order);
    }
    loop {
        let candidates: Vec<usize> = (0..g.len()).filter(|&v| !inside[v] && count[v] >= d).collect();
        if candidates.is_empty() {
            return order;
        }
        let v = candidates[pick(&candidates).min(candidates.len() - 1)];
        add(v, &mut inside, &mut count, &mut order);
    }
}

/// Maximal vertex sets grown from a `(d+1)`-clique by repeatedly adding a
/// vertex with `d` neighbours inside. Each has finitely many realizations.
/// Sorted vertex lists, clusters in lexicographic order.
pub(crate) fn rigid_clusters(g: &Graph, d: usize) -> Vec<Vec<usize>> {
    let mut found: Vec<Vec<usize>> = Vec::new();
    for seed in seed_cliques(g, d) {
        if found.iter().any(|c| seed.iter().all(|v| c.binary_search(v).is_ok())) {
            continue;
        }
        let mut c = closure_order(g, d, &seed, &mut |_| 0);
        c.sort_unstable();
        found.push(c);
    }
    let maximal: Vec<Vec<usize>> = found
        .iter()
        .filter(|c| !found.iter().any(|o| o.len() > c.len() && c.iter().all(|v| o.binary_search(v).is_ok())))
        .cloned()
        .collect();
    let mut maximal: Vec<Vec<usize>> = maximal.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
    maximal.sort();
    maximal
}

/// Plain order of a rigid cluster's induced subgraph, from its smallest seed.
pub(crate) fn plain_order(g: &Graph, d: usize) -> Option<DiscretizationOrder> {
    let seed = seed_cliques(g, d).into_iter().next()?;
    let order = closure_order(g, d, &seed, &mut |_| 0);
    if order.len() != g.len() {
        return None;
    }
    DiscretizationOrder::from_vertices(g, d, &order)
}

pub fn discretization_order(g: &Graph, d: usize) -> Option<DiscretizationOrder> {
    discretization_order_by(g, d, |_| 0)
}

/// Greedy order starting from a `(d+1)`-clique. At each step the next
/// vertex is chosen by `pick` (an index into the sorted candidates) among
/// vertices with `d` placed neighbours; only when there are none are
/// vertices supported through rigid clusters considered. Seeds are tried
/// largest cluster first.
pub fn discretization_order_by(
    g: &Graph,
    d: usize,
    mut pick: impl FnMut(&[usize]) -> usize,
) -> Option<DiscretizationOrder> {
    let n = g.len();
    if n < d + 1 {
        return None;
    }
    let seeds = seed_cliques(g, d);
    if seeds.is_empty() {
        return None;
    }
    let mut clusters: Option<Vec<Vec<usize>>> = None;
    let mut ranked: Vec<(usize, Vec<usize>)> = Vec::new();
    for seed in &seeds {
        let size = closure_order(g, d, seed, &mut |_| 0).len();
        ranked.push((size, seed.clone()));
    }
    ranked.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| a.1.cmp(&b.1)));
    let mut tried: Vec<BTreeSet<usize>> = Vec::new();
    for (_, seed) in ranked {
        let mut order = closure_order(g, d, &seed, &mut pick);
        let reached: BTreeSet<usize> = order.iter().copied().collect();
        if tried.contains(&reached) {
            continue;
        }
        tried.push(reached);
        if order.len() < n {
            let cl = clusters.get_or_insert_with(|| rigid_clusters(g, d));
            if !extend_with_clusters(g, d, &mut order, cl, &mut pick) {
                continue;
            }
        }
        return DiscretizationOrder::from_vertices(g, d, &order);
    }
    None
}

fn extend_with_clusters(
    g: &Graph,
    d: usize,
    order: &mut Vec<usize>,
    clusters: &[Vec<usize>],
    pick: &mut impl FnMut(&[usize]) -> usize,
) -> bool {
    let n = g.len();
    let mut placed = vec![false; n];
    for &v in order.iter() {
        placed[v] = true;
    }
    while order.len() < n {
        let unplaced = (0..n).filter(|&v| !placed[v]);
        let plain: Vec<usize> = unplaced
            .clone()
            .filter(|&v| g.neighbors(v).iter().filter(|&&w| placed[w]).count() >= d)
            .collect();
        let candidates = if plain.is_empty() {
            unplaced
                .filter(|&v| {
                    let edges = g.neighbors(v).iter().filter(|&&w| placed[w]).count();
                    edges + derived_supports(g, &placed, v, clusters, order).len() >= d
                })
                .collect()
        } else {
            plain
        };
        if candidates.is_empty() {
            return false;
        }
        let v = candidates[pick(&candidates).min(candidates.len() - 1)];
        placed[v] = true;
        order.push(v);
    }
    true
}
