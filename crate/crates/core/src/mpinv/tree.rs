use super::{edge_weight, scaled, verified, HeadTailSplit, Method, PinvReport};
use crate::error::{Error, Result};
use crate::ratmat::Matrix;
use crate::scalar::Scalar;
use crate::sgraph::SignedGraph;

/// Adds `n · N_T†` for the spanning tree `in_tree` into `acc` (row-major,
/// `m × n`; rows of edges outside the tree are left alone).
///
/// Row `i` is `w(eᵢ) sgn(P_{eᵢ-j})` times `|T_h(eᵢ)|` for `j` on the tail
/// side and `-σ(eᵢ) |T_t(eᵢ)|` for `j` on the head side.
pub(crate) fn accumulate_tree_rows(
    g: &SignedGraph,
    adj: &[Vec<(usize, usize)>],
    in_tree: &[bool],
    weight: i128,
    acc: &mut [i128],
) {
    let n = g.n();
    for (i, e) in g.edges().iter().enumerate() {
        if !in_tree[i] {
            continue;
        }
        let split = HeadTailSplit::compute(g, adj, i, |k| in_tree[k])
            .expect("spanning-tree edges are bridges of the tree");
        let w = edge_weight(e).value() as i128;
        for j in 0..n {
            let v = split
                .signed_phi(e.sign(), j)
                .expect("a spanning tree reaches every vertex");
            acc[i * n + j] += weight * w * v as i128;
        }
    }
}

/// Pseudoinverse of a signed tree's incidence matrix, entrywise
/// `w(eᵢ) sgn(P_{eᵢ-j}) / n · (|T_h(eᵢ)| or -σ(eᵢ)|T_t(eᵢ)|)`.
pub fn tree_pinv<T: Scalar>(g: &SignedGraph) -> Result<PinvReport<T>> {
    if !g.is_tree() || g.n() < 2 {
        return Err(Error::NotATree);
    }
    let (n, m) = (g.n(), g.m());
    let adj = g.adjacency();
    let mut acc = vec![0i128; m * n];
    accumulate_tree_rows(g, &adj, &vec![true; m], 1, &mut acc);
    let x: Matrix<T> = scaled(m, n, &acc, n as i128);
    verified(g, x, Method::TreeFormula)
}
