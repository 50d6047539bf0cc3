use super::{GenericStatus, GenericVerdict, Method};
use crate::graph::Graph;

/// State of the (2,3)-pebble game: every vertex holds up to two pebbles and
/// each accepted edge is covered by one pebble of its tail. The accepted set
/// is always (2,3)-sparse and `pebbles + accepted == 2|V|`.
#[derive(Clone, Debug)]
pub struct PebbleGame {
    pebbles: Vec<u8>,
    out: Vec<Vec<usize>>,
    accepted: Vec<(usize, usize)>,
}

impl PebbleGame {
    pub fn new(n: usize) -> Self {
        PebbleGame { pebbles: vec![2; n], out: vec![Vec::new(); n], accepted: Vec::new() }
    }

    /// Plays the whole game on `g`, edges in sorted order.
    pub fn run(g: &Graph) -> Self {
        let mut game = PebbleGame::new(g.len());
        for (u, v) in g.edges() {
            game.try_add(u, v);
        }
        game
    }

    pub fn pebbles(&self) -> &[u8] {
        &self.pebbles
    }

    /// Independent edges in insertion order.
    pub fn accepted(&self) -> &[(usize, usize)] {
        &self.accepted
    }

    /// Current orientation of the accepted edges as `(tail, head)` pairs.
    pub fn orientation(&self) -> Vec<(usize, usize)> {
        let mut arcs: Vec<_> = self
            .out
            .iter()
            .enumerate()
            .flat_map(|(t, hs)| hs.iter().map(move |&h| (t, h)))
            .collect();
        arcs.sort_unstable();
        arcs
    }

    /// Accepts `{u, v}` iff four pebbles can be gathered on its endpoints,
    /// i.e. iff the edge is independent of the accepted set.
    pub fn try_add(&mut self, u: usize, v: usize) -> bool {
        assert!(u != v);
        let n = self.pebbles.len();
        for x in [u, v] {
            while self.pebbles[x] < 2 {
                let mut visited = vec![false; n];
                visited[u] = true;
                visited[v] = true;
                if !self.draw_pebble(x, &mut visited) {
                    break;
                }
            }
        }
        if self.pebbles[u] + self.pebbles[v] < 4 {
            return false;
        }
        self.pebbles[u] -= 1;
        self.out[u].push(v);
        self.accepted.push((u, v));
        true
    }

    /// Depth-first search for a free pebble reachable from `x`; on success
    /// the path is reversed and the pebble ends up on `x`.
    fn draw_pebble(&mut self, x: usize, visited: &mut [bool]) -> bool {
        for i in 0..self.out[x].len() {
            let y = self.out[x][i];
            if visited[y] {
                continue;
            }
            visited[y] = true;
            if self.pebbles[y] > 0 || self.draw_pebble(y, visited) {
                self.out[x].swap_remove(i);
                self.out[y].push(x);
                self.pebbles[y] -= 1;
                self.pebbles[x] += 1;
                return true;
            }
        }
        false
    }
}

/// Exact generic rigidity in the plane: rigid iff `2|V| - 3` independent
/// edges are accepted.
pub fn pebble_game_2d(g: &Graph) -> GenericVerdict {
    let n = g.len();
    let rigid = n <= 1 || PebbleGame::run(g).accepted().len() == 2 * n - 3;
    let status = if rigid { GenericStatus::Rigid } else { GenericStatus::Flexible };
    GenericVerdict::exact(status, Method::PebbleGame)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_rigid_square_flexible() {
        assert_eq!(pebble_game_2d(&Graph::complete(3)).status, GenericStatus::Rigid);
        assert_eq!(pebble_game_2d(&Graph::cycle(4)).status, GenericStatus::Flexible);
        assert_eq!(pebble_game_2d(&Graph::complete(1)).status, GenericStatus::Rigid);
        assert_eq!(pebble_game_2d(&Graph::from_edges(2, &[])).status, GenericStatus::Flexible);
    }

    #[test]
    fn k4_has_one_redundant_edge() {
        let game = PebbleGame::run(&Graph::complete(4));
        assert_eq!(game.accepted().len(), 5);
        let total: usize = game.pebbles().iter().map(|&p| p as usize).sum();
        assert_eq!(total + game.accepted().len(), 8);
        assert_eq!(game.orientation().len(), 5);
    }

    #[test]
    fn k33_is_rigid() {
        let edges: Vec<_> = (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect();
        let g = Graph::from_edges(6, &edges);
        assert_eq!(pebble_game_2d(&g).status, GenericStatus::Rigid);
    }
}
