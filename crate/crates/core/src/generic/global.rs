use serde::Serialize;

use super::rank::{generic_rank, rank_upper_bound, RankOptions};
use super::{pebble_game_2d, Confidence, GenericStatus, GenericVerdict, Method};
use crate::error::{Error, Result};
use crate::graph::{is_k_connected, tight_edge_count, Graph};

/// `|E| - (d|V| - d(d+1)/2)`. Negative values certify generic flexibility.
pub fn maxwell_deficit(g: &Graph, d: usize) -> i64 {
    g.edge_count() as i64 - tight_edge_count(g.len(), d)
}

pub fn generically_rigid(g: &Graph, d: usize) -> Result<GenericVerdict> {
    generically_rigid_with(g, d, &RankOptions::default())
}

/// Exact pebble game in the plane; randomized rank against `3|V| - 6` in
/// space.
pub fn generically_rigid_with(g: &Graph, d: usize, opts: &RankOptions) -> Result<GenericVerdict> {
    match d {
        2 => Ok(pebble_game_2d(g)),
        3 => {
            let (rank, failure_bound) = generic_rank(g, 3, opts.trials, opts.seed);
            let status = if rank == rank_upper_bound(g.len(), 3) {
                GenericStatus::ProbablyRigid
            } else {
                GenericStatus::ProbablyFlexible
            };
            Ok(GenericVerdict {
                status,
                method: Method::RandomizedRank,
                confidence: Confidence::Probabilistic { failure_bound },
            })
        }
        _ => Err(Error::DimensionUnsupported(d)),
    }
}

/// Redundant rigidity: every single-edge deletion leaves a rigid graph.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Redundancy {
    pub redundant: bool,
    pub confidence: Confidence,
    /// Edges whose removal destroys rigidity, as label pairs.
    pub critical_edges: Vec<(String, String)>,
}

pub fn redundantly_rigid(g: &Graph, d: usize) -> Result<Redundancy> {
    redundantly_rigid_with(g, d, &RankOptions::default())
}

/// Checks `g - e` for every edge. A graph that is not itself rigid is
/// reported as not redundant with every edge critical.
pub fn redundantly_rigid_with(g: &Graph, d: usize, opts: &RankOptions) -> Result<Redundancy> {
    let whole = generically_rigid_with(g, d, opts)?;
    let mut failure_bound = whole.confidence.failure_bound();
    let mut critical = Vec::new();
    let bound = rank_upper_bound(g.len(), d);
    for (u, v) in g.edges() {
        let h = g.without_edge(u, v);
        let rigid = if h.edge_count() < bound {
            false
        } else {
            let verdict = generically_rigid_with(&h, d, opts)?;
            failure_bound = failure_bound.max(verdict.confidence.failure_bound());
            verdict.is_rigid()
        };
        if !whole.is_rigid() || !rigid {
            critical.push((g.label(u).to_owned(), g.label(v).to_owned()));
        }
    }
    let confidence = if d == 2 {
        Confidence::Exact
    } else {
        Confidence::Probabilistic { failure_bound }
    };
    Ok(Redundancy { redundant: whole.is_rigid() && critical.is_empty(), confidence, critical_edges: critical })
}

/// Exact generic global rigidity in the plane: complete graphs on at most
/// four vertices, otherwise 3-connected and redundantly rigid.
pub fn generically_globally_rigid_2d(g: &Graph) -> GenericVerdict {
    let global = if g.len() <= 4 && g.is_complete() {
        true
    } else if g.len() < 4 {
        false
    } else {
        is_k_connected(g, 3)
            && redundantly_rigid(g, 2).expect("dimension 2 is supported").redundant
    };
    let status = if global { GenericStatus::GloballyRigid } else { GenericStatus::NotGloballyRigid };
    GenericVerdict::exact(status, Method::JacksonJordan)
}

/// Generic global rigidity in dimension 2 or 3. In the plane the answer is
/// exact. In space only complete graphs are confirmed and failures of the
/// Hendrickson conditions refuted; `None` means undecided.
pub fn generically_globally_rigid_with(g: &Graph, d: usize, opts: &RankOptions) -> Result<Option<GenericVerdict>> {
    match d {
        2 => Ok(Some(generically_globally_rigid_2d(g))),
        3 => {
            if g.is_complete() {
                return Ok(Some(GenericVerdict::exact(GenericStatus::GloballyRigid, Method::CompleteGraph)));
            }
            if !is_k_connected(g, 4) {
                return Ok(Some(GenericVerdict::exact(GenericStatus::NotGloballyRigid, Method::Hendrickson)));
            }
            let red = redundantly_rigid_with(g, 3, opts)?;
            Ok((!red.redundant).then_some(GenericVerdict {
                status: GenericStatus::NotGloballyRigid,
                method: Method::Hendrickson,
                confidence: red.confidence,
            }))
        }
        _ => Err(Error::DimensionUnsupported(d)),
    }
}

pub fn hendrickson_necessary(g: &Graph, d: usize) -> Result<bool> {
    hendrickson_necessary_with(g, d, &RankOptions::default())
}

/// Hendrickson's necessary condition for generic global rigidity:
/// (d+1)-connected and redundantly rigid. `false` certifies the graph is not
/// generically globally rigid; `true` certifies nothing.
pub fn hendrickson_necessary_with(g: &Graph, d: usize, opts: &RankOptions) -> Result<bool> {
    if !matches!(d, 2 | 3) {
        return Err(Error::DimensionUnsupported(d));
    }
    if !is_k_connected(g, d + 1) {
        return Ok(false);
    }
    Ok(redundantly_rigid_with(g, d, opts)?.redundant)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn octahedron() -> Graph {
        let edges: Vec<_> = (0..6)
            .flat_map(|u| (u + 1..6).map(move |v| (u, v)))
            .filter(|&(u, v)| !(u % 2 == 0 && v == u + 1))
            .collect();
        Graph::from_edges(6, &edges)
    }

    #[test]
    fn maxwell_values() {
        assert_eq!(maxwell_deficit(&Graph::complete(4), 2), 1);
        assert_eq!(maxwell_deficit(&Graph::cycle(4), 2), -1);
    }

    #[test]
    fn generic_rigidity_examples() {
        let fan = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4)]);
        assert_eq!(generically_rigid(&fan, 2).unwrap().status, GenericStatus::Rigid);
        assert_eq!(
            generically_rigid(&Graph::path(4), 3).unwrap().status,
            GenericStatus::ProbablyFlexible
        );
        let oct = generically_rigid(&octahedron(), 3).unwrap();
        assert_eq!(oct.status, GenericStatus::ProbablyRigid);
        assert!(oct.confidence.failure_bound() > 0.0);
        assert!(matches!(generically_rigid(&fan, 4), Err(Error::DimensionUnsupported(4))));
    }

    #[test]
    fn redundancy_examples() {
        assert!(redundantly_rigid(&Graph::complete(4), 2).unwrap().redundant);
        let k3 = redundantly_rigid(&Graph::complete(3), 2).unwrap();
        assert!(!k3.redundant);
        assert_eq!(k3.critical_edges.len(), 3);
        assert!(!redundantly_rigid(&octahedron(), 3).unwrap().redundant);
    }

    #[test]
    fn global_rigidity_2d_examples() {
        assert_eq!(generically_globally_rigid_2d(&Graph::complete(4)).status, GenericStatus::GloballyRigid);
        assert_eq!(generically_globally_rigid_2d(&Graph::complete(2)).status, GenericStatus::GloballyRigid);
        assert_eq!(generically_globally_rigid_2d(&Graph::path(3)).status, GenericStatus::NotGloballyRigid);
        let mut edges: Vec<_> = (1..=6).map(|i| (0, i)).collect();
        edges.extend((1..=6).map(|i| (i, i % 6 + 1)));
        let wheel = Graph::from_edges(7, &edges);
        assert_eq!(generically_globally_rigid_2d(&wheel).status, GenericStatus::GloballyRigid);
    }

    #[test]
    fn global_rigidity_in_space() {
        let opts = RankOptions::default();
        let k5 = generically_globally_rigid_with(&Graph::complete(5), 3, &opts).unwrap().unwrap();
        assert_eq!(k5.status, GenericStatus::GloballyRigid);
        let oct = generically_globally_rigid_with(&octahedron(), 3, &opts).unwrap().unwrap();
        assert_eq!(oct.status, GenericStatus::NotGloballyRigid);
        let path = generically_globally_rigid_with(&Graph::path(4), 3, &opts).unwrap().unwrap();
        assert!(path.is_exact());
    }

    #[test]
    fn hendrickson_examples() {
        assert!(!hendrickson_necessary(&octahedron(), 3).unwrap());
        assert!(hendrickson_necessary(&Graph::complete(5), 3).unwrap());
        assert!(!hendrickson_necessary(&Graph::cycle(4), 2).unwrap());
    }
}
