use super::tree::accumulate_tree_rows;
use super::unicyclic::accumulate_unicyclic_rows;
use super::{scaled, verified, Method, PinvReport};
use crate::enumerate::{spanning_trees, tu_subgraphs, EdgeCap};
use crate::error::{Error, Result};
use crate::ratmat::Matrix;
use crate::scalar::Scalar;
use crate::sgraph::SignedGraph;

/// Pseudoinverse of the incidence matrix of any connected signed graph.
///
/// Balanced: `N† = (1/τ) Σ_T N_T†` over spanning trees, where `N_T†` has
/// zero rows for edges outside `T`. Unbalanced:
/// `N† = (1/Σ_H 4^c(H)) Σ_H 4^c(H) N_H⁻¹` over spanning TU-subgraphs, each
/// `N_H⁻¹` assembled blockwise from its unicyclic components.
pub fn general_pinv<T: Scalar>(g: &SignedGraph, cap: EdgeCap) -> Result<PinvReport<T>> {
    g.require_connected()?;
    let (n, m) = (g.n(), g.m());
    if n == 1 {
        return verified(g, Matrix::zeros(0, 1), Method::GeneralBalanced);
    }
    let adj = g.adjacency();
    let mut acc = vec![0i128; m * n];
    if g.is_balanced()? {
        let trees = spanning_trees(g, cap)?;
        let mut in_tree = vec![false; m];
        for t in &trees {
            in_tree.iter_mut().for_each(|b| *b = false);
            for &i in t.edge_indices() {
                in_tree[i] = true;
            }
            accumulate_tree_rows(g, &adj, &in_tree, 1, &mut acc);
        }
        let x = scaled(m, n, &acc, n as i128 * trees.len() as i128);
        verified(g, x, Method::GeneralBalanced)
    } else {
        let mut vol2: i128 = 0;
        let mut in_comp = vec![false; m];
        for h in tu_subgraphs(g, cap)? {
            let weight = h.weight() as i128;
            vol2 += weight;
            for comp in h.components() {
                in_comp.iter_mut().for_each(|b| *b = false);
                for &i in &comp.edges {
                    in_comp[i] = true;
                }
                accumulate_unicyclic_rows(g, &adj, &in_comp, &comp.cycle, weight, &mut acc);
            }
        }
        let x = scaled(m, n, &acc, 2 * vol2);
        verified(g, x, Method::GeneralUnbalanced)
    }
}

/// `N N†`: the identity for unbalanced graphs, `I - S/n` for balanced ones.
/// The closed form is checked against `N · general_pinv(g)`.
pub fn projector<T: Scalar>(g: &SignedGraph, cap: EdgeCap) -> Result<Matrix<T>> {
    g.require_connected()?;
    let n = g.n();
    let (p, method) = if g.is_balanced()? {
        let s = g.path_sign_matrix::<T>()?;
        let inv_n = T::from_ratio(1, n as i128);
        let p = Matrix::identity(n).sub(&s.scale(&inv_n))?;
        (p, Method::GeneralBalanced)
    } else {
        (Matrix::identity(n), Method::GeneralUnbalanced)
    };
    let x = general_pinv::<T>(g, cap)?.matrix;
    if g.incidence::<T>().multiply(&x)? != p {
        return Err(Error::FormulaVerification {
            method,
            detail: "N N† differs from the projector closed form".into(),
        });
    }
    Ok(p)
}
