use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

/// Random coordinates are drawn uniformly from `1..=COORDINATE_RANGE`.
pub const COORDINATE_RANGE: i64 = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankOptions {
    pub trials: usize,
    pub seed: u64,
}

impl Default for RankOptions {
    fn default() -> Self {
        RankOptions { trials: 8, seed: 0 }
    }
}

/// Largest possible rigidity-matrix rank for `n` points in dimension `d`:
/// `dn - d(d+1)/2` when `n >= d`, otherwise `n(n-1)/2`.
pub fn rank_upper_bound(n: usize, d: usize) -> usize {
    if n >= d {
        d * n - d * (d + 1) / 2
    } else {
        n * n.saturating_sub(1) / 2
    }
}

/// Rank of an integer matrix, computed exactly by fraction-free (Bareiss)
/// elimination.
pub fn integer_rank(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigInt>> =
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let m = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        if rank == m {
            break;
        }
        let Some(p) = (rank..m).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let (top, bottom) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in bottom.iter_mut() {
            let factor = row[c].clone();
            for j in c + 1..cols {
                let val = &row[j] * &pivot_row[c] - &factor * &pivot_row[j];
                row[j] = val / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = pivot_row[c].clone();
        rank += 1;
    }
    rank
}

fn random_rigidity_matrix(g: &Graph, d: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<i64>> {
    let coords: Vec<i64> = (0..g.len() * d).map(|_| rng.gen_range(1..=COORDINATE_RANGE)).collect();
    g.edges()
        .into_iter()
        .map(|(u, v)| {
            let mut row = vec![0i64; g.len() * d];
            for k in 0..d {
                let diff = coords[u * d + k] - coords[v * d + k];
                row[u * d + k] = diff;
                row[v * d + k] = -diff;
            }
            row
        })
        .collect()
}

/// Maximum rigidity-matrix rank over `trials` random integer realizations,
/// with a Schwartz–Zippel bound on the probability that it is below the
/// generic rank: each trial misses with probability at most `r / N` where
/// `r` bounds the rank and `N` is the coordinate range.
pub fn generic_rank(g: &Graph, d: usize, trials: usize, seed: u64) -> (usize, f64) {
    assert!(trials >= 1);
    let bound = g.edge_count().min(rank_upper_bound(g.len(), d));
    let failure_bound = (bound.max(1) as f64 / COORDINATE_RANGE as f64).powi(trials as i32);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = 0;
    for _ in 0..trials {
        let rows = random_rigidity_matrix(g, d, &mut rng);
        best = best.max(integer_rank(&rows));
        if best == bound {
            break;
        }
    }
    (best, failure_bound)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(integer_rank(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(integer_rank(&[vec![0, 0], vec![0, 3]]), 1);
        assert_eq!(integer_rank(&[vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 0]]), 2);
        assert_eq!(integer_rank(&[]), 0);
    }

    #[test]
    fn spec_examples() {
        assert_eq!(generic_rank(&Graph::cycle(4), 2, 8, 1).0, 4);
        assert_eq!(generic_rank(&Graph::complete(3), 2, 8, 2).0, 3);
        assert_eq!(generic_rank(&Graph::complete(4), 3, 8, 3).0, 6);
    }

    #[test]
    fn failure_bound_shrinks_with_trials() {
        let g = Graph::cycle(5);
        let (_, one) = generic_rank(&g, 2, 1, 0);
        let (_, four) = generic_rank(&g, 2, 4, 0);
        assert!(four < one && four > 0.0);
    }

    #[test]
    fn upper_bounds() {
        assert_eq!(rank_upper_bound(2, 3), 1);
        assert_eq!(rank_upper_bound(3, 3), 3);
        assert_eq!(rank_upper_bound(6, 3), 12);
        assert_eq!(rank_upper_bound(5, 2), 7);
    }
}
