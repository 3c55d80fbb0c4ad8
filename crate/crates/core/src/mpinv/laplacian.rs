use super::{edge_weight, general_pinv, HeadTailSplit, Method, PinvReport};
use crate::enumerate::{spanning_trees, EdgeCap};
use crate::error::{Error, Result};
use crate::ratmat::{penrose_verify, Matrix};
use crate::scalar::Scalar;
use crate::sgraph::SignedGraph;

/// Largest `τ² · m · n²` for which [`laplacian_pinv`] also evaluates the
/// tree-pair double sum as a cross-check.
const PSI_BUDGET: u128 = 4_000_000;

/// `L† = (N†)ᵀ N†`, Penrose-checked against `L`. For balanced graphs within
/// [`PSI_BUDGET`] the result is also compared with [`laplacian_pinv_psi`].
pub fn laplacian_pinv<T: Scalar>(g: &SignedGraph, cap: EdgeCap) -> Result<PinvReport<T>> {
    let x = general_pinv::<T>(g, cap)?;
    let lp = x.matrix.transpose().multiply(&x.matrix)?;
    let l = g.laplacian::<T>();
    let penrose = penrose_verify(&l, &lp)?;
    if !penrose.all() {
        return Err(Error::FormulaVerification {
            method: x.method,
            detail: format!("L† fails Penrose conditions {:?}", penrose.as_array()),
        });
    }
    if g.is_balanced()? && g.n() >= 2 {
        let (n, m) = (g.n() as u128, g.m() as u128);
        let tau = spanning_trees(g, cap)?.len() as u128;
        if tau * tau * m * n * n <= PSI_BUDGET && laplacian_pinv_psi::<T>(g, cap)? != lp {
            return Err(Error::FormulaVerification {
                method: Method::GeneralBalanced,
                detail: "tree-pair double sum differs from (N†)ᵀ N†".into(),
            });
        }
    }
    Ok(PinvReport {
        matrix: lp,
        method: x.method,
        penrose,
    })
}

/// `L†` for a balanced graph as the double sum over ordered pairs of
/// spanning trees `(T_r, T_s)` and edges `e_k` in both:
///
/// `ℓ†_ij = 1/(n²τ²) Σ_{r,s} Σ_k sgn_{T_r}(P_{e_k-i}) sgn_{T_s}(P_{e_k-j}) Ψ(e_k, i, j)`
///
/// with `Ψ = φ_{T_r}(e_k, i) · φ_{T_s}(e_k, j)`, where `φ_T(e, v)` is
/// `|T_h(e)|` for `v` in the tail and `-σ(e)|T_t(e)|` for `v` in the head.
pub fn laplacian_pinv_psi<T: Scalar>(g: &SignedGraph, cap: EdgeCap) -> Result<Matrix<T>> {
    g.require_connected()?;
    if !g.is_balanced()? {
        return Err(Error::Unbalanced);
    }
    let (n, m) = (g.n(), g.m());
    if n == 1 {
        return Ok(Matrix::zeros(1, 1));
    }
    let adj = g.adjacency();
    let trees = spanning_trees(g, cap)?;
    // Per tree and edge: the signed φ row, or None if the edge is absent.
    let rows: Vec<Vec<Option<Vec<i64>>>> = trees
        .iter()
        .map(|t| {
            (0..m)
                .map(|k| {
                    t.contains(k).then(|| {
                        let split = HeadTailSplit::compute(g, &adj, k, |x| t.contains(x))
                            .expect("tree edges are bridges of the tree");
                        let sign = g.edges()[k].sign();
                        (0..n).map(|v| split.signed_phi(sign, v).expect("spanning")).collect()
                    })
                })
                .collect()
        })
        .collect();
    let mut acc = vec![0i128; n * n];
    for tr in &rows {
        for ts in &rows {
            for k in 0..m {
                let (Some(a), Some(b)) = (&tr[k], &ts[k]) else {
                    continue;
                };
                let w = edge_weight(&g.edges()[k]).value() as i128;
                for i in 0..n {
                    for j in 0..n {
                        acc[i * n + j] += w * w * a[i] as i128 * b[j] as i128;
                    }
                }
            }
        }
    }
    let nt = T::from_i128((n * trees.len()) as i128);
    let denom = nt.clone() * nt;
    Ok(Matrix::from_fn(n, n, |i, j| T::from_i128(acc[i * n + j]) / denom.clone()))
}

/// Signed resistance `r_ij = ℓ†_ii + ℓ†_jj - 2 sgn(P_{i-j}) ℓ†_ij` of a
/// balanced graph. This is a conjectured distance-like quantity; on trees it
/// is expected to equal the path distance.
pub fn signed_resistance<T: Scalar>(g: &SignedGraph, cap: EdgeCap) -> Result<Matrix<T>> {
    g.require_connected()?;
    if !g.is_balanced()? {
        return Err(Error::Unbalanced);
    }
    let s = g.path_sign_matrix::<T>()?;
    let lp = laplacian_pinv::<T>(g, cap)?.matrix;
    let two = T::from_i128(2);
    Ok(Matrix::from_fn(g.n(), g.n(), |i, j| {
        lp[(i, i)].clone() + lp[(j, j)].clone() - two.clone() * s[(i, j)].clone() * lp[(i, j)].clone()
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::{RatMatrix, Rational};

    fn parse(s: &str) -> SignedGraph {
        SignedGraph::from_edge_list(s).unwrap()
    }

    fn cap() -> EdgeCap {
        EdgeCap::default()
    }

    #[test]
    fn single_edges() {
        let quarter = Rational::from_ratio(1, 4);
        for s in ["1 2 +", "1 2 -", "1 2 - -1 -1"] {
            let g = parse(s);
            let l: RatMatrix = g.laplacian();
            assert_eq!(laplacian_pinv::<Rational>(&g, cap()).unwrap().matrix, l.scale(&quarter));
        }
    }

    #[test]
    fn unbalanced_gives_inverse() {
        let g = fixtures::gamma1();
        let l: RatMatrix = g.laplacian();
        let lp = laplacian_pinv::<Rational>(&g, cap()).unwrap().matrix;
        assert_eq!(l.multiply(&lp).unwrap(), RatMatrix::identity(9));
    }

    #[test]
    fn psi_sum_matches_product_on_cyclic_graphs() {
        for s in [
            "1 2 +\n2 3 +\n1 3 +",
            "1 2 -\n2 3 +\n3 4 - -1 -1\n4 1 + -1 1\n1 3 -",
            "1 2 +\n2 3 +\n3 4 +\n4 1 +\n2 4 +\n4 5 -",
        ] {
            let g = parse(s);
            let x = general_pinv::<Rational>(&g, cap()).unwrap().matrix;
            let product = x.transpose().multiply(&x).unwrap();
            assert_eq!(laplacian_pinv_psi::<Rational>(&g, cap()).unwrap(), product, "{s}");
        }
    }

    #[test]
    fn psi_rejects_unbalanced() {
        assert_eq!(
            laplacian_pinv_psi::<Rational>(&fixtures::gamma1(), cap()),
            Err(Error::Unbalanced)
        );
    }

    #[test]
    fn resistance_on_tree_is_distance() {
        let g = fixtures::tree7();
        let r = signed_resistance::<Rational>(&g, cap()).unwrap();
        // vertices 2 and 4 (0-based 1, 3): 2-5-4 has length 2
        assert_eq!(r[(1, 3)], Rational::from_i128(2));
        assert_eq!(r[(6, 5)], Rational::from_i128(3));
        assert_eq!(signed_resistance::<Rational>(&parse("1 2 +"), cap()).unwrap(),
            RatMatrix::from_int_rows(&[[0, 1], [1, 0]]));
    }

    #[test]
    fn resistance_on_balanced_square() {
        let g = parse("1 2 -\n2 3 +\n3 4 -\n4 1 +");
        let r = signed_resistance::<Rational>(&g, cap()).unwrap();
        assert!(r.is_symmetric());
        for i in 0..4 {
            assert_eq!(r[(i, i)], Rational::from_i128(0));
            for j in 0..4 {
                if i != j {
                    assert!(r[(i, j)] > Rational::from_i128(0));
                }
            }
        }
    }

    #[test]
    fn resistance_rejects_unbalanced() {
        assert_eq!(
            signed_resistance::<Rational>(&fixtures::gamma1(), cap()),
            Err(Error::Unbalanced)
        );
    }
}
