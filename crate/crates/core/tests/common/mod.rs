#![allow(dead_code)]

use pennyrig::Graph;
use rand::seq::SliceRandom;
use rand::Rng;

/// Random chordal graph on `n` vertices with clique number at most
/// `max_clique`: each new vertex is joined to a random subset of a clique
/// already present (possibly empty).
pub fn random_chordal(n: usize, max_clique: usize, rng: &mut impl Rng) -> Graph {
    let mut cliques: Vec<Vec<usize>> = vec![vec![0]];
    let mut edges = Vec::new();
    for v in 1..n {
        let base = cliques.choose(rng).expect("nonempty").clone();
        let take = rng.gen_range(0..=base.len().min(max_clique - 1));
        let attach: Vec<usize> = base.choose_multiple(rng, take).copied().collect();
        edges.extend(attach.iter().map(|&u| (u, v)));
        let mut c = attach;
        c.push(v);
        cliques.push(c);
    }
    Graph::from_edges(n, &edges)
}

/// Random d-tree on `n >= d + 1` vertices.
pub fn random_d_tree(n: usize, d: usize, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..=d {
        for v in u + 1..=d {
            edges.push((u, v));
        }
    }
    let mut faces: Vec<Vec<usize>> = (0..=d).map(|skip| (0..=d).filter(|&x| x != skip).collect()).collect();
    for v in d + 1..n {
        let face = faces.choose(rng).expect("faces").clone();
        edges.extend(face.iter().map(|&u| (u, v)));
        for skip in 0..d {
            let mut f: Vec<usize> = face.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &x)| x).collect();
            f.push(v);
            faces.push(f);
        }
    }
    Graph::from_edges(n, &edges)
}

/// Every graph on `n` labelled vertices, as edge subsets in a fixed order.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p).collect();
        Graph::from_edges(n, &edges)
    })
}

pub fn octahedron() -> Graph {
    let mut edges = Vec::new();
    for u in 0..6 {
        for v in u + 1..6 {
            if v != u + 3 {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(6, &edges)
}

/// 6-cycle plus a hub adjacent to every rim vertex.
pub fn hex_wheel() -> Graph {
    let mut edges: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
    edges.extend((0..6).map(|i| (i, 6)));
    Graph::from_edges(7, &edges)
}

pub fn fan5() -> Graph {
    Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4)])
}
