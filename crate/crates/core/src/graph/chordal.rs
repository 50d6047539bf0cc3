use std::collections::BTreeSet;

use serde::Serialize;

use super::{Graph, SearchLimits};
use crate::error::{Error, Result};

/// A vertex ordering in which the later neighbours of every vertex form a
/// clique. Values are only handed out after verification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EliminationOrder(Vec<usize>);

impl EliminationOrder {
    /// Verifies `order` against `g`, returning `None` if it is not a
    /// permutation or not a perfect elimination order.
    pub fn verify(g: &Graph, order: Vec<usize>) -> Option<EliminationOrder> {
        let n = g.len();
        if order.len() != n {
            return None;
        }
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n || pos[v] != usize::MAX {
                return None;
            }
            pos[v] = i;
        }
        let perfect = order.iter().all(|&v| {
            let later: Vec<usize> =
                g.neighbors(v).iter().copied().filter(|&w| pos[w] > pos[v]).collect();
            g.is_clique(&later)
        });
        perfect.then_some(EliminationOrder(order))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Neighbours of each vertex that come after it in the order.
    fn later_neighbourhoods<'a>(&'a self, g: &'a Graph) -> impl Iterator<Item = usize> + 'a {
        let mut pos = vec![0; g.len()];
        for (i, &v) in self.0.iter().enumerate() {
            pos[v] = i;
        }
        self.0
            .iter()
            .map(move |&v| g.neighbors(v).iter().filter(|&&w| pos[w] > pos[v]).count())
    }
}

/// Maximum-cardinality search. The reverse of the visit order is a perfect
/// elimination order exactly when the graph is chordal.
fn maximum_cardinality_search(g: &Graph) -> Vec<usize> {
    let n = g.len();
    let mut weight = vec![0usize; n];
    let mut numbered = vec![false; n];
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !numbered[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("unnumbered vertex remains");
        numbered[v] = true;
        visit.push(v);
        for &w in g.neighbors(v) {
            if !numbered[w] {
                weight[w] += 1;
            }
        }
    }
    visit.reverse();
    visit
}

/// Chordality test with a verified perfect elimination order as certificate.
pub fn is_chordal(g: &Graph) -> (bool, Option<EliminationOrder>) {
    match EliminationOrder::verify(g, maximum_cardinality_search(g)) {
        Some(peo) => (true, Some(peo)),
        None => (false, None),
    }
}

/// Clique number with default limits. See [`clique_number_with`].
pub fn clique_number(g: &Graph, peo: Option<&EliminationOrder>) -> Result<usize> {
    clique_number_with(g, peo, &SearchLimits::default())
}

/// Exact clique number. With a perfect elimination order this is the largest
/// closed later-neighbourhood; otherwise Bron–Kerbosch with pivoting, refused
/// above `limits.clique_exhaustive_max` vertices.
pub fn clique_number_with(
    g: &Graph,
    peo: Option<&EliminationOrder>,
    limits: &SearchLimits,
) -> Result<usize> {
    if let Some(peo) = peo {
        return Ok(peo.later_neighbourhoods(g).map(|k| k + 1).max().unwrap_or(0));
    }
    if g.len() > limits.clique_exhaustive_max {
        return Err(Error::InstanceTooLarge { size: g.len(), limit: limits.clique_exhaustive_max });
    }
    let mut best = 0;
    bron_kerbosch(g, 0, (0..g.len()).collect(), BTreeSet::new(), &mut best);
    Ok(best)
}

fn bron_kerbosch(
    g: &Graph,
    size: usize,
    mut candidates: BTreeSet<usize>,
    mut excluded: BTreeSet<usize>,
    best: &mut usize,
) {
    if candidates.is_empty() {
        if excluded.is_empty() {
            *best = (*best).max(size);
        }
        return;
    }
    if size + candidates.len() <= *best {
        return;
    }
    let pivot = *candidates
        .union(&excluded)
        .max_by_key(|&&u| g.neighbors(u).intersection(&candidates).count())
        .expect("non-empty");
    let branch: Vec<usize> = candidates.difference(g.neighbors(pivot)).copied().collect();
    for v in branch {
        let nv = g.neighbors(v);
        bron_kerbosch(
            g,
            size + 1,
            candidates.intersection(nv).copied().collect(),
            excluded.intersection(nv).copied().collect(),
            best,
        );
        candidates.remove(&v);
        excluded.insert(v);
    }
}

/// True when `g` contains a clique on `k` vertices. Searches only inside
/// neighbourhoods, so it scales to large sparse graphs for small `k`.
pub fn contains_clique(g: &Graph, k: usize) -> bool {
    fn grow(g: &Graph, k: usize, clique: &mut Vec<usize>) -> bool {
        if clique.len() == k {
            return true;
        }
        let last = *clique.last().expect("non-empty clique");
        let next: Vec<usize> = g
            .neighbors(last)
            .iter()
            .copied()
            .filter(|&w| w > last && clique.iter().all(|&u| g.has_edge(u, w)))
            .collect();
        next.into_iter().any(|w| {
            clique.push(w);
            let found = grow(g, k, clique);
            clique.pop();
            found
        })
    }
    k == 0 || (0..g.len()).any(|v| grow(g, k, &mut vec![v]))
}

/// True when some induced cycle of length at least four exists. Exhaustive
/// over vertex subsets; intended for small graphs and cross-checks.
pub fn induced_cycle_exists(g: &Graph) -> bool {
    let n = g.len();
    assert!(n <= 20, "induced cycle search is exponential");
    (0u32..1 << n).any(|mask| {
        let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        vs.len() >= 4 && {
            let h = g.induced(&vs);
            (0..h.len()).all(|v| h.degree(v) == 2) && super::is_connected(&h)
        }
    })
}
