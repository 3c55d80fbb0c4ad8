use super::{edge_weight, scaled, verified, HeadTailSplit, Method, PinvReport};
use crate::error::{Error, Result};
use crate::ratmat::Matrix;
use crate::scalar::Scalar;
use crate::sgraph::{Sign, SignedGraph};

/// Adds `2 · N_U⁻¹` for one unbalanced unicyclic component `U` into `acc`
/// (row-major `m × n`, scaled by `weight`). `in_comp` marks the edges of
/// `U`, `cycle` lists its cycle edges.
///
/// Row `i` of `N_U⁻¹`, times `w(eᵢ)`:
/// - `eᵢ` on the cycle: `½ sgn(P)` for the path from the tail of `eᵢ` to
///   `j` in the tree `U \ eᵢ`;
/// - otherwise `0` on the side of `U \ eᵢ` holding the cycle, and
///   `± sgn(P_{eᵢ-j})` on the other side, negative exactly when `eᵢ` is
///   positive and that side holds its head.
pub(crate) fn accumulate_unicyclic_rows(
    g: &SignedGraph,
    adj: &[Vec<(usize, usize)>],
    in_comp: &[bool],
    cycle: &[usize],
    weight: i128,
    acc: &mut [i128],
) {
    let n = g.n();
    let cycle_vertex = g.edges()[cycle[0]].u();
    for (i, e) in g.edges().iter().enumerate() {
        if !in_comp[i] {
            continue;
        }
        let w = edge_weight(e).value() as i128;
        let row = &mut acc[i * n..(i + 1) * n];
        if cycle.contains(&i) {
            let signs = g.signed_reach(adj, e.tail(), |k| k != i && in_comp[k]);
            for (j, s) in signs.iter().enumerate() {
                if let Some(s) = s {
                    row[j] += weight * w * s.value() as i128;
                }
            }
        } else {
            let through = |k: usize| k != i && in_comp[k];
            let from_u = g.signed_reach(adj, e.u(), through);
            // The endpoint on the acyclic side of U \ eᵢ.
            let (far, signs) = if from_u[cycle_vertex].is_some() {
                (e.v(), g.signed_reach(adj, e.v(), through))
            } else {
                (e.u(), from_u)
            };
            let flip = e.sign() == Sign::Plus && far == e.head();
            for (j, s) in signs.iter().enumerate() {
                if let Some(s) = s {
                    let v = if flip { -s.value() } else { s.value() };
                    row[j] += weight * w * 2 * v as i128;
                }
            }
        }
    }
}

/// Exact inverse of the incidence matrix of an unbalanced unicyclic graph.
pub fn unbalanced_unicyclic_inverse<T: Scalar>(g: &SignedGraph) -> Result<PinvReport<T>> {
    if !g.is_unicyclic() {
        return Err(Error::NotUnicyclic);
    }
    if g.is_balanced()? {
        return Err(Error::Balanced);
    }
    let n = g.n();
    let cycle = g.unique_cycle()?;
    let adj = g.adjacency();
    let mut acc = vec![0i128; n * n];
    accumulate_unicyclic_rows(g, &adj, &vec![true; n], &cycle, 1, &mut acc);
    let x: Matrix<T> = scaled(n, n, &acc, 2);
    if x.multiply(&g.incidence())? != Matrix::identity(n) {
        return Err(Error::FormulaVerification {
            method: Method::UnicyclicInverse,
            detail: "N⁻¹ N is not the identity".into(),
        });
    }
    verified(g, x, Method::UnicyclicInverse)
}

/// Pseudoinverse for a balanced unicyclic graph with cycle `C`, as the
/// average of the tree formula over the `|C|` spanning trees `G \ e_k`.
///
/// For a bridge `eᵢ` every spanning tree splits the vertices the same way,
/// so the entry is `|C| φ / (n |C|)` with `φ` taken from the split of `G` at
/// `eᵢ`. For a cycle edge the entry is
/// `w(eᵢ) / (n |C|) Σ_{k ≠ i} sgn_{T_k}(P_{eᵢ-j}) φ_{T_k}(eᵢ, j)`.
pub fn balanced_unicyclic_pinv<T: Scalar>(g: &SignedGraph) -> Result<PinvReport<T>> {
    if !g.is_unicyclic() {
        return Err(Error::NotUnicyclic);
    }
    if !g.is_balanced()? {
        return Err(Error::Unbalanced);
    }
    let (n, m) = (g.n(), g.m());
    let cycle = g.unique_cycle()?;
    let c = cycle.len() as i128;
    let adj = g.adjacency();
    let mut numer = vec![0i128; m * n];
    for (i, e) in g.edges().iter().enumerate() {
        let w = edge_weight(e).value() as i128;
        let row = &mut numer[i * n..(i + 1) * n];
        if !cycle.contains(&i) {
            let split = HeadTailSplit::compute(g, &adj, i, |_| true).expect("non-cycle edges are bridges");
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = w * c * split.signed_phi(e.sign(), j).expect("connected") as i128;
            }
            continue;
        }
        for &k in cycle.iter().filter(|&&k| k != i) {
            let split = HeadTailSplit::compute(g, &adj, i, |x| x != k)
                .expect("cycle edges are bridges of G minus another cycle edge");
            for (j, cell) in row.iter_mut().enumerate() {
                *cell += w * split.signed_phi(e.sign(), j).expect("spanning tree") as i128;
            }
        }
    }
    let x: Matrix<T> = scaled(m, n, &numer, n as i128 * c);
    verified(g, x, Method::BalancedUnicyclic)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::EdgeCap;
    use crate::fixtures;
    use crate::mpinv::general_pinv;
    use crate::{RatMatrix, Rational};

    fn parse(s: &str) -> SignedGraph {
        SignedGraph::from_edge_list(s).unwrap()
    }

    #[test]
    fn reproduces_reference_gamma1_inverse() {
        let r = unbalanced_unicyclic_inverse::<Rational>(&fixtures::gamma1()).unwrap();
        assert_eq!(r.matrix, fixtures::gamma1_inverse());
        assert_eq!(r.matrix[(6, 3)], Rational::from_ratio(-1, 2));
        assert_eq!(r.matrix[(1, 5)], Rational::from_ratio(-1, 1));
    }

    #[test]
    fn odd_all_negative_cycle() {
        // all negative, both arrows out: entries are ±1/2 on the cycle
        let g = parse("1 2 -\n2 3 -\n3 1 -\n3 4 -");
        let r = unbalanced_unicyclic_inverse::<Rational>(&g).unwrap();
        let n: RatMatrix = g.incidence();
        assert_eq!(r.matrix, n.inverse().unwrap());
    }

    #[test]
    fn unbalanced_rejects_wrong_shapes() {
        assert_eq!(
            unbalanced_unicyclic_inverse::<Rational>(&fixtures::tree7()),
            Err(Error::NotUnicyclic)
        );
        assert_eq!(
            unbalanced_unicyclic_inverse::<Rational>(&parse("1 2 +\n2 3 +\n3 1 +")),
            Err(Error::Balanced)
        );
    }

    #[test]
    fn balanced_triangle_matches_oracle() {
        let g = parse("1 2 +\n2 3 +\n1 3 +");
        let n: RatMatrix = g.incidence();
        assert_eq!(balanced_unicyclic_pinv::<Rational>(&g).unwrap().matrix, n.pinv_oracle());
    }

    #[test]
    fn balanced_square_matches_general() {
        let g = parse("1 2 -\n2 3 +\n3 4 - -1 -1\n4 1 + -1 1");
        assert!(g.is_balanced().unwrap());
        let special = balanced_unicyclic_pinv::<Rational>(&g).unwrap().matrix;
        let general = general_pinv::<Rational>(&g, EdgeCap::default()).unwrap().matrix;
        assert_eq!(special, general);
    }

    #[test]
    fn tadpole_pendant_edge_on_cycle_side() {
        // cycle 1-2-3, pendant path 3-4-5; edge {3,4} splits off 2 vertices
        let g = parse("1 2 +\n2 3 +\n3 1 +\n3 4 +\n4 5 +");
        let r = balanced_unicyclic_pinv::<Rational>(&g).unwrap();
        for j in 0..3 {
            let v = r.matrix[(3, j)].clone();
            assert_eq!(if v < Rational::from_i128(0) { -v } else { v }, Rational::from_ratio(2, 5));
        }
    }

    #[test]
    fn balanced_rejects_unbalanced() {
        assert_eq!(
            balanced_unicyclic_pinv::<Rational>(&fixtures::gamma1()),
            Err(Error::Unbalanced)
        );
    }
}
