//! The weighted hypergraph Laplacian, assembled exactly.
//!
//! For a hypergraph G the operator acts on vertex functions as
//! `(L f)(v) = sum over edges e containing v of 1/(|e|-1) * sum over u
//! in e of (f(v) - f(u))`. Expanding the sums, the matrix has diagonal
//! d(v) and off-diagonal `-(sum over shared edges of 1/(|e|-1))`.

use num::Zero;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::matrix::SquareMatrix;
use crate::rational::{rat_usize, Rational};

/// Dense exact Laplacian of `h`: symmetric, zero row sums, diagonal
/// equal to the vertex degrees.
pub fn laplacian_matrix(h: &Hypergraph) -> SquareMatrix {
    let n = h.vertex_count();
    let mut lap = SquareMatrix::zero(n);
    for e in h.edges() {
        let w = Rational::new(1.into(), (e.len() - 1).into());
        for (a, &u) in e.iter().enumerate() {
            lap.add_to(u, u, &Rational::from_integer(1.into()));
            for &v in &e[a + 1..] {
                let neg = -w.clone();
                lap.add_to(u, v, &neg);
                lap.add_to(v, u, &neg);
            }
        }
    }
    lap
}

/// Applies the Laplacian to `f` edge by edge, without materializing the
/// matrix. Agrees exactly with `laplacian_matrix(h) * f`.
pub fn apply(h: &Hypergraph, f: &[Rational]) -> Result<Vec<Rational>> {
    let n = h.vertex_count();
    if f.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: f.len() });
    }
    let mut out = vec![Rational::zero(); n];
    for e in h.edges() {
        let w = Rational::new(1.into(), (e.len() - 1).into());
        let edge_sum: Rational = e.iter().fold(Rational::zero(), |acc, &u| acc + &f[u]);
        let size = rat_usize(e.len());
        for &v in e {
            out[v] += &w * (&size * &f[v] - &edge_sum);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::ThresholdCode;
    use crate::rational::{rat, rat_int};

    fn h(n: usize, edges: Vec<Vec<usize>>) -> Hypergraph {
        Hypergraph::new(n, edges).unwrap()
    }

    #[test]
    fn single_triple() {
        let lap = laplacian_matrix(&h(3, vec![vec![0, 1, 2]]));
        for i in 0..3 {
            assert_eq!(*lap.get(i, i), rat_int(1));
            for j in 0..3 {
                if i != j {
                    assert_eq!(*lap.get(i, j), rat(-1, 2));
                }
            }
        }
    }

    #[test]
    fn graph_edge() {
        let lap = laplacian_matrix(&h(2, vec![vec![0, 1]]));
        assert_eq!(*lap.get(0, 0), rat_int(1));
        assert_eq!(*lap.get(0, 1), rat_int(-1));
        assert_eq!(*lap.get(1, 0), rat_int(-1));
        assert_eq!(*lap.get(1, 1), rat_int(1));
    }

    #[test]
    fn edgeless_is_zero() {
        let lap = laplacian_matrix(&Hypergraph::edgeless(3));
        assert_eq!(lap.trace(), rat_int(0));
        assert!(lap.is_symmetric());
    }

    #[test]
    fn diagonal_is_degree_and_rows_sum_to_zero() {
        let g = ThresholdCode::parse("0 3 0 3 0 0 3 3").unwrap().build();
        let lap = laplacian_matrix(&g);
        assert!(lap.is_symmetric());
        let deg = g.degrees();
        for v in 0..g.vertex_count() {
            assert_eq!(*lap.get(v, v), rat_usize(deg[v]));
            assert_eq!(lap.row_sum(v), rat_int(0));
        }
        assert_eq!(lap.trace(), rat_int(116));
    }

    #[test]
    fn apply_matches_matrix() {
        let g = ThresholdCode::parse("0 3 0 0 2 1").unwrap().build();
        let lap = laplacian_matrix(&g);
        let n = g.vertex_count();
        let f: Vec<Rational> = (0..n).map(|i| rat(i as i64 * 3 - 4, 7)).collect();
        let via_edges = apply(&g, &f).unwrap();
        for i in 0..n {
            let mut acc = Rational::zero();
            for j in 0..n {
                acc += lap.get(i, j) * &f[j];
            }
            assert_eq!(via_edges[i], acc);
        }
    }

    #[test]
    fn constants_are_in_the_kernel() {
        let g = ThresholdCode::parse("0 3 0 3 0 0 3 3").unwrap().build();
        let ones = vec![rat_int(1); g.vertex_count()];
        assert!(apply(&g, &ones).unwrap().iter().all(|x| x.is_zero()));
    }

    #[test]
    fn hand_expanded_triple() {
        let g = h(3, vec![vec![0, 1, 2]]);
        let f = vec![rat_int(1), rat_int(-1), rat_int(0)];
        assert_eq!(
            apply(&g, &f).unwrap(),
            vec![rat(3, 2), rat(-3, 2), rat_int(0)]
        );
    }

    #[test]
    fn dimension_mismatch() {
        let g = h(3, vec![vec![0, 1, 2]]);
        assert_eq!(
            apply(&g, &[rat_int(1)]),
            Err(Error::DimensionMismatch { expected: 3, got: 1 })
        );
    }

    #[test]
    fn edgeless_apply_is_zero() {
        let g = Hypergraph::edgeless(4);
        let f = vec![rat_int(5); 4];
        assert!(apply(&g, &f).unwrap().iter().all(|x| x.is_zero()));
    }
}
