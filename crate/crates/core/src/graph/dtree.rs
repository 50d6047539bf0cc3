use std::collections::BTreeSet;

use super::Graph;

/// `d|V| - d(d+1)/2`, the edge count of a d-tree on `n` vertices. Signed
/// because it is negative for tiny graphs.
pub fn tight_edge_count(n: usize, d: usize) -> i64 {
    (d * n) as i64 - (d * (d + 1) / 2) as i64
}

pub fn edge_count_tight(g: &Graph, d: usize) -> bool {
    g.edge_count() as i64 == tight_edge_count(g.len(), d)
}

/// d-tree recognition by peeling simplicial vertices of degree exactly d
/// until `K_{d+1}` remains. Removes the smallest available vertex each round.
pub fn is_d_tree(g: &Graph, d: usize) -> bool {
    is_d_tree_by(g, d, |candidates| candidates[0])
}

/// As [`is_d_tree`], with `pick` choosing which of the currently removable
/// vertices (given in increasing order) is peeled next. The answer does not
/// depend on the choice.
pub fn is_d_tree_by(g: &Graph, d: usize, mut pick: impl FnMut(&[usize]) -> usize) -> bool {
    assert!(d >= 1);
    let n = g.len();
    if n < d + 1 {
        return false;
    }
    let mut adj: Vec<BTreeSet<usize>> = (0..n).map(|v| g.neighbors(v).clone()).collect();
    let mut alive: BTreeSet<usize> = (0..n).collect();
    let removable = |adj: &[BTreeSet<usize>], v: usize| {
        adj[v].len() == d && {
            let nb: Vec<usize> = adj[v].iter().copied().collect();
            nb.iter().enumerate().all(|(i, &a)| nb[i + 1..].iter().all(|b| adj[a].contains(b)))
        }
    };
    while alive.len() > d + 1 {
        let candidates: Vec<usize> =
            alive.iter().copied().filter(|&v| removable(&adj, v)).collect();
        if candidates.is_empty() {
            return false;
        }
        let v = pick(&candidates);
        assert!(candidates.contains(&v), "pick must return one of the candidates");
        for w in std::mem::take(&mut adj[v]) {
            adj[w].remove(&v);
        }
        alive.remove(&v);
    }
    alive.iter().all(|&v| adj[v].len() == d)
}
