//! Vertex connectivity.
//!
//! A graph is k-connected when it has more than k vertices and stays
//! connected after deleting any k-1 of them; in particular `K_n` is
//! (n-1)-connected. Small graphs are decided by enumerating vertex cuts,
//! larger ones by unit-capacity max-flow (Menger).

use std::collections::VecDeque;

use super::{Graph, SearchLimits};

pub fn is_connected(g: &Graph) -> bool {
    connected_avoiding(g, &vec![false; g.len()])
}

fn connected_avoiding(g: &Graph, removed: &[bool]) -> bool {
    let Some(start) = (0..g.len()).find(|&v| !removed[v]) else {
        return true;
    };
    let mut seen = removed.to_vec();
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    seen.iter().all(|&s| s)
}

pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    is_k_connected_with(g, k, &SearchLimits::default())
}

pub fn is_k_connected_with(g: &Graph, k: usize, limits: &SearchLimits) -> bool {
    if g.len() <= limits.connectivity_enumeration_max {
        k_connected_by_enumeration(g, k)
    } else {
        k_connected_by_flow(g, k)
    }
}

/// Decides k-connectivity by trying every vertex set of size below k.
pub fn k_connected_by_enumeration(g: &Graph, k: usize) -> bool {
    assert!(k >= 1);
    let n = g.len();
    if n <= k {
        return false;
    }
    let mut removed = vec![false; n];
    fn search(g: &Graph, removed: &mut [bool], from: usize, budget: usize) -> bool {
        if !connected_avoiding(g, removed) {
            return false;
        }
        if budget == 0 {
            return true;
        }
        for v in from..g.len() {
            removed[v] = true;
            let ok = search(g, removed, v + 1, budget - 1);
            removed[v] = false;
            if !ok {
                return false;
            }
        }
        true
    }
    search(g, &mut removed, 0, k - 1)
}

/// Decides k-connectivity from local connectivities: every non-adjacent pair
/// must be joined by k internally vertex-disjoint paths.
pub fn k_connected_by_flow(g: &Graph, k: usize) -> bool {
    assert!(k >= 1);
    let n = g.len();
    if n <= k {
        return false;
    }
    if g.min_degree().map_or(0, |(_, d)| d) < k {
        return false;
    }
    (0..n).all(|s| (s + 1..n).all(|t| g.has_edge(s, t) || disjoint_paths(g, s, t, k) >= k))
}

/// Number of internally vertex-disjoint s-t paths, capped at `cap`.
/// Vertex v is split into v_in = 2v and v_out = 2v + 1 joined by a unit arc.
fn disjoint_paths(g: &Graph, s: usize, t: usize, cap: usize) -> usize {
    let n = g.len();
    let nodes = 2 * n;
    let mut arcs: Vec<(usize, usize, i32)> = Vec::new();
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); nodes];
    let mut add = |a: usize, b: usize, c: i32, arcs: &mut Vec<(usize, usize, i32)>| {
        out[a].push(arcs.len());
        arcs.push((a, b, c));
        out[b].push(arcs.len());
        arcs.push((b, a, 0));
    };
    let big = n as i32;
    for v in 0..n {
        let c = if v == s || v == t { big } else { 1 };
        add(2 * v, 2 * v + 1, c, &mut arcs);
    }
    for (u, v) in g.edges() {
        add(2 * u + 1, 2 * v, big, &mut arcs);
        add(2 * v + 1, 2 * u, big, &mut arcs);
    }
    let (source, sink) = (2 * s + 1, 2 * t);
    let mut flow = 0;
    while flow < cap {
        let mut prev = vec![usize::MAX; nodes];
        let mut queue = VecDeque::from([source]);
        let mut reached = false;
        while let Some(x) = queue.pop_front() {
            if x == sink {
                reached = true;
                break;
            }
            for &a in &out[x] {
                let (_, y, c) = arcs[a];
                if c > 0 && prev[y] == usize::MAX && y != source {
                    prev[y] = a;
                    queue.push_back(y);
                }
            }
        }
        if !reached {
            break;
        }
        let mut y = sink;
        while y != source {
            let a = prev[y];
            arcs[a].2 -= 1;
            arcs[a ^ 1].2 += 1;
            y = arcs[a].0;
        }
        flow += 1;
    }
    flow
}
