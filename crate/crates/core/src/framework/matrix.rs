use nalgebra::{DMatrix, DVector};

use super::{Framework, ToleranceConfig};
use crate::error::{Error, Result};
use crate::generic::rank_upper_bound;

/// The |E| x d|V| rigidity matrix. The row of edge `(u, v)` (u < v, sorted
/// edge order) holds `p(u) - p(v)` in u's block and `p(v) - p(u)` in v's.
pub fn rigidity_matrix(f: &Framework) -> DMatrix<f64> {
    let d = f.dim();
    let edges = f.graph().edges();
    let mut m = DMatrix::zeros(edges.len(), d * f.graph().len());
    for (row, &(u, v)) in edges.iter().enumerate() {
        let diff = f.point(u) - f.point(v);
        for k in 0..d {
            m[(row, u * d + k)] = diff[k];
            m[(row, v * d + k)] = -diff[k];
        }
    }
    m
}

/// Number of singular values above `rel_tol * sigma_max`.
pub fn numerical_rank(m: &DMatrix<f64>, rel_tol: f64) -> usize {
    if m.is_empty() {
        return 0;
    }
    let sv = m.singular_values();
    let top = sv.max();
    if top == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > rel_tol * top).count()
}

/// Velocity fields of the trivial motions: `d` translations followed by the
/// `d(d-1)/2` infinitesimal rotations, each flattened like the matrix columns.
pub fn rigid_motion_basis(f: &Framework) -> Vec<DVector<f64>> {
    let d = f.dim();
    let n = f.graph().len();
    let mut basis = Vec::new();
    for axis in 0..d {
        basis.push(DVector::from_fn(n * d, |i, _| if i % d == axis { 1.0 } else { 0.0 }));
    }
    for a in 0..d {
        for b in a + 1..d {
            let mut vel = DVector::zeros(n * d);
            for v in 0..n {
                let p = f.point(v);
                vel[v * d + a] = p[b];
                vel[v * d + b] = -p[a];
            }
            basis.push(vel);
        }
    }
    basis
}

/// First-order rigidity test. `true` implies the framework is rigid; `false`
/// is inconclusive (a straight tight path is rigid yet fails this test).
pub fn infinitesimally_rigid(f: &Framework, tol: &ToleranceConfig) -> Result<bool> {
    let d = f.dim();
    let span = f.affine_span_dim();
    if f.graph().len() < d + 1 || span < d {
        return Err(Error::DegenerateSpan { span, needed: d });
    }
    let rank = numerical_rank(&rigidity_matrix(f), tol.tol_rank);
    Ok(rank == rank_upper_bound(f.graph().len(), d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn unit_triangle() -> Framework {
        let s = 3f64.sqrt() / 2.0;
        Framework::new(Graph::complete(3), 2, vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![0.5, s]]).unwrap()
    }

    #[test]
    fn single_edge_row() {
        let f = Framework::new(Graph::complete(2), 2, vec![vec![0.0, 0.0], vec![1.0, 0.0]]).unwrap();
        let m = rigidity_matrix(&f);
        assert_eq!(m.nrows(), 1);
        assert_eq!(m.row(0).iter().copied().collect::<Vec<_>>(), vec![-1.0, 0.0, 1.0, 0.0]);
    }

    #[test]
    fn ranks() {
        let tol = ToleranceConfig::default();
        assert_eq!(numerical_rank(&rigidity_matrix(&unit_triangle()), tol.tol_rank), 3);
        let path = Framework::new(Graph::path(3), 2, vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![2.0, 0.0]])
            .unwrap();
        assert_eq!(numerical_rank(&rigidity_matrix(&path), tol.tol_rank), 2);
        assert!(matches!(infinitesimally_rigid(&path, &tol), Err(Error::DegenerateSpan { span: 1, .. })));
    }

    #[test]
    fn triangle_rigid_square_not() {
        let tol = ToleranceConfig::default();
        assert!(infinitesimally_rigid(&unit_triangle(), &tol).unwrap());
        let square = Framework::new(
            Graph::cycle(4),
            2,
            vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![1.0, 1.0], vec![0.0, 1.0]],
        )
        .unwrap();
        assert!(!infinitesimally_rigid(&square, &tol).unwrap());
    }

    #[test]
    fn trivial_motions_are_in_the_kernel() {
        let f = unit_triangle();
        let m = rigidity_matrix(&f);
        let basis = rigid_motion_basis(&f);
        assert_eq!(basis.len(), 3);
        for v in basis {
            assert!((&m * v).amax() < 1e-12);
        }
    }
}
