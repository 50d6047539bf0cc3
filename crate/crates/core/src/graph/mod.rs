//! Simple undirected graphs with string labels and the combinatorial
//! predicates used by the classifiers.
//!
//! Vertices are stored in sorted label order and addressed by their index in
//! that order, so every iteration (vertices, neighbours, edges) is
//! deterministic. The JSON graph file format is
//! `{"vertices": [..], "edges": [[u, v], ..]}`; on output every edge lists its
//! lexicographically smaller endpoint first.

mod chordal;
mod connectivity;
mod dtree;

pub use chordal::{
    clique_number, clique_number_with, contains_clique, induced_cycle_exists, is_chordal,
    EliminationOrder,
};
pub use connectivity::{
    is_connected, is_k_connected, is_k_connected_with, k_connected_by_enumeration,
    k_connected_by_flow,
};
pub use dtree::{edge_count_tight, is_d_tree, is_d_tree_by, tight_edge_count};

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Size cutoffs for the exhaustive routines. The defaults are the documented
/// constants; callers may override them.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    /// Largest graph on which the clique number is computed without a
    /// perfect elimination order.
    pub clique_exhaustive_max: usize,
    /// Largest graph on which k-connectivity is decided by vertex-cut
    /// enumeration; larger graphs use max-flow.
    pub connectivity_enumeration_max: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits { clique_exhaustive_max: 24, connectivity_enumeration_max: 16 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    adj: Vec<BTreeSet<usize>>,
    edge_count: usize,
}

#[derive(Serialize, Deserialize)]
struct GraphFile {
    vertices: Vec<String>,
    edges: Vec<(String, String)>,
}

impl Graph {
    /// Builds a graph from labels and labelled edges. Loops, duplicate edges,
    /// duplicate labels and unknown endpoints are rejected.
    pub fn new<V, S, E, T>(vertices: V, edges: E) -> Result<Graph>
    where
        V: IntoIterator<Item = S>,
        S: Into<String>,
        E: IntoIterator<Item = (T, T)>,
        T: AsRef<str>,
    {
        let mut labels: Vec<String> = vertices.into_iter().map(Into::into).collect();
        labels.sort();
        if let Some(w) = labels.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Format(format!("duplicate vertex label {:?}", w[0])));
        }
        let index: BTreeMap<&str, usize> =
            labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        let mut adj = vec![BTreeSet::new(); labels.len()];
        let mut edge_count = 0;
        for (a, b) in edges {
            let (a, b) = (a.as_ref(), b.as_ref());
            let u = *index
                .get(a)
                .ok_or_else(|| Error::Format(format!("edge endpoint {a:?} is not a vertex")))?;
            let v = *index
                .get(b)
                .ok_or_else(|| Error::Format(format!("edge endpoint {b:?} is not a vertex")))?;
            if u == v {
                return Err(Error::Format(format!("self-loop at {a:?}")));
            }
            if !adj[u].insert(v) {
                return Err(Error::Format(format!("duplicate edge {a:?}-{b:?}")));
            }
            adj[v].insert(u);
            edge_count += 1;
        }
        Ok(Graph { labels, adj, edge_count })
    }

    /// Graph on `n` vertices labelled by zero-padded indices, so label order
    /// and index order coincide. Panics on loops or out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Graph {
        let width = n.saturating_sub(1).to_string().len();
        let labels: Vec<String> = (0..n).map(|i| format!("{i:0width$}")).collect();
        let mut adj = vec![BTreeSet::new(); n];
        let mut edge_count = 0;
        for &(u, v) in edges {
            assert!(u != v && u < n && v < n, "invalid edge ({u}, {v})");
            if adj[u].insert(v) {
                adj[v].insert(u);
                edge_count += 1;
            }
        }
        Graph { labels, adj, edge_count }
    }

    pub fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.binary_search_by(|l| l.as_str().cmp(label)).ok()
    }

    pub fn neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> Option<(usize, usize)> {
        (0..self.len()).map(|v| (v, self.degree(v))).min_by_key(|&(v, d)| (d, v))
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    /// Edges as index pairs `(u, v)` with `u < v`, in sorted order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.len() {
            out.extend(self.adj[u].range(u + 1..).map(|&v| (u, v)));
        }
        out
    }

    pub fn is_clique(&self, vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub fn is_complete(&self) -> bool {
        let n = self.len();
        self.edge_count == n * n.saturating_sub(1) / 2
    }

    /// Subgraph induced by `vs` (labels are kept).
    pub fn induced(&self, vs: &[usize]) -> Graph {
        let keep: BTreeSet<usize> = vs.iter().copied().collect();
        let edges: Vec<(&str, &str)> = self
            .edges()
            .into_iter()
            .filter(|(u, v)| keep.contains(u) && keep.contains(v))
            .map(|(u, v)| (self.label(u), self.label(v)))
            .collect();
        Graph::new(keep.iter().map(|&v| self.labels[v].clone()), edges)
            .expect("induced subgraph of a valid graph is valid")
    }

    /// Copy of the graph with edge `{u, v}` removed (no-op if absent).
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        if g.adj[u].remove(&v) {
            g.adj[v].remove(&u);
            g.edge_count -= 1;
        }
        g
    }

    /// Copy of the graph with edge `{u, v}` added (no-op if present).
    pub fn with_edge(&self, u: usize, v: usize) -> Graph {
        assert!(u != v);
        let mut g = self.clone();
        if g.adj[u].insert(v) {
            g.adj[v].insert(u);
            g.edge_count += 1;
        }
        g
    }

    pub fn from_json_str(s: &str) -> Result<Graph> {
        let file: GraphFile = serde_json::from_str(s)?;
        Graph::new(file.vertices, file.edges)
    }

    pub fn to_json_string(&self) -> String {
        let file = GraphFile {
            vertices: self.labels.clone(),
            edges: self
                .edges()
                .into_iter()
                .map(|(u, v)| (self.labels[u].clone(), self.labels[v].clone()))
                .collect(),
        };
        serde_json::to_string_pretty(&file).expect("graph serializes")
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Graph> {
        Graph::from_json_str(&std::fs::read_to_string(path)?)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_json_string() + "\n")?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_are_sorted_and_edges_normalized() {
        let g = Graph::new(["c", "a", "b"], [("c", "a"), ("b", "a")]).unwrap();
        assert_eq!(g.labels(), ["a", "b", "c"]);
        assert_eq!(g.edges(), vec![(0, 1), (0, 2)]);
        let json = g.to_json_string();
        assert!(json.contains("\"a\",\n      \"c\""));
        assert_eq!(Graph::from_json_str(&json).unwrap(), g);
    }

    #[test]
    fn rejects_loops_duplicates_and_unknown_endpoints() {
        assert!(Graph::new(["a"], [("a", "a")]).is_err());
        assert!(Graph::new(["a", "b"], [("a", "b"), ("b", "a")]).is_err());
        assert!(Graph::new(["a", "b"], [("a", "z")]).is_err());
        assert!(Graph::new(["a", "a"], Vec::<(&str, &str)>::new()).is_err());
        let bad = r#"{"vertices": ["x", "y"], "edges": [["x", "y"], ["x", "y"]]}"#;
        assert!(matches!(Graph::from_json_str(bad), Err(Error::Format(_))));
    }

    #[test]
    fn padded_labels_follow_index_order() {
        let g = Graph::path(12);
        assert_eq!(g.label(2), "02");
        assert_eq!(g.index_of("11"), Some(11));
        assert_eq!(g.edge_count(), 11);
    }

    #[test]
    fn induced_keeps_labels() {
        let g = Graph::complete(4);
        let h = g.induced(&[1, 3]);
        assert_eq!(h.labels(), ["1", "3"]);
        assert_eq!(h.edge_count(), 1);
    }
}
