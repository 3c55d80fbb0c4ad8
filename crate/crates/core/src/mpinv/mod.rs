//! Combinatorial Moore-Penrose inverses of signed-graph incidence matrices.
//!
//! Every formula here assembles `N†` from graph structure alone (component
//! sizes, path signs, spanning structures) and then checks the four Penrose
//! conditions against `N` before returning. A failed check is reported as
//! [`Error::FormulaVerification`]; nothing is patched up with linear algebra.

mod general;
mod laplacian;
mod tree;
mod unicyclic;

use std::fmt;

pub use general::{general_pinv, projector};
pub use laplacian::{laplacian_pinv, laplacian_pinv_psi, signed_resistance};
pub use tree::tree_pinv;
pub use unicyclic::{balanced_unicyclic_pinv, unbalanced_unicyclic_inverse};

use crate::enumerate::EdgeCap;
use crate::error::{Error, Result};
use crate::ratmat::{penrose_verify, Matrix, PenroseFlags};
use crate::scalar::Scalar;
use crate::sgraph::{Sign, SignedEdge, SignedGraph};

/// Which construction produced a pseudoinverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    TreeFormula,
    UnicyclicInverse,
    BalancedUnicyclic,
    GeneralBalanced,
    GeneralUnbalanced,
    Oracle,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::TreeFormula => "tree-formula",
            Method::UnicyclicInverse => "unicyclic-inverse",
            Method::BalancedUnicyclic => "balanced-unicyclic",
            Method::GeneralBalanced => "general-balanced",
            Method::GeneralUnbalanced => "general-unbalanced",
            Method::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, PartialEq)]
pub struct PinvReport<T> {
    pub matrix: Matrix<T>,
    pub method: Method,
    pub penrose: PenroseFlags,
}

impl<T: fmt::Display> fmt::Debug for PinvReport<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PinvReport")
            .field("matrix", &self.matrix)
            .field("method", &self.method)
            .field("penrose", &self.penrose)
            .finish()
    }
}

/// Row sign correction: `-1` for a negative edge whose arrows both point
/// into its endpoints, `+1` otherwise.
pub fn edge_weight(e: &SignedEdge) -> Sign {
    if e.sign() == Sign::Minus && e.eta_u() == Sign::Minus && e.eta_v() == Sign::Minus {
        Sign::Minus
    } else {
        Sign::Plus
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Head,
    Tail,
}

/// The two components left after deleting a bridge `e` from a forest (or
/// from any graph in which `e` is a bridge).
///
/// For every vertex in either component this also records the sign of the
/// path to it from the endpoint of `e` on its own side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeadTailSplit {
    edge: usize,
    cells: Vec<Option<(Side, Sign)>>,
    head_size: usize,
    tail_size: usize,
}

impl HeadTailSplit {
    pub fn edge(&self) -> usize {
        self.edge
    }

    pub fn head_vertices(&self) -> Vec<usize> {
        self.vertices_on(Side::Head)
    }

    pub fn tail_vertices(&self) -> Vec<usize> {
        self.vertices_on(Side::Tail)
    }

    fn vertices_on(&self, side: Side) -> Vec<usize> {
        (0..self.cells.len())
            .filter(|&j| matches!(self.cells[j], Some((s, _)) if s == side))
            .collect()
    }

    pub fn head_size(&self) -> usize {
        self.head_size
    }

    pub fn tail_size(&self) -> usize {
        self.tail_size
    }

    pub fn side(&self, j: usize) -> Option<Side> {
        self.cells[j].map(|(s, _)| s)
    }

    /// Sign of the path from the nearer endpoint of the edge to `j`.
    pub fn path_sign(&self, j: usize) -> Option<Sign> {
        self.cells[j].map(|(_, s)| s)
    }

    /// `|T_h|` if `j` is on the tail side, `-σ |T_t|` if on the head side.
    pub(crate) fn phi(&self, sign: Sign, j: usize) -> Option<i64> {
        Some(match self.side(j)? {
            Side::Tail => self.head_size as i64,
            Side::Head => -sign.value() * self.tail_size as i64,
        })
    }

    /// `n` times the tree-formula entry for vertex `j`, without `w`.
    pub(crate) fn signed_phi(&self, sign: Sign, j: usize) -> Option<i64> {
        Some(self.path_sign(j)?.value() * self.phi(sign, j)?)
    }

    /// Splits `g` at edge `i`, walking only edges accepted by `allowed`.
    /// Returns `None` if `i` is not a bridge of that edge set.
    pub(crate) fn compute(
        g: &SignedGraph,
        adj: &[Vec<(usize, usize)>],
        i: usize,
        allowed: impl Fn(usize) -> bool,
    ) -> Option<Self> {
        let e = g.edges()[i];
        let through = |k: usize| k != i && allowed(k);
        let from_tail = g.signed_reach(adj, e.tail(), through);
        if from_tail[e.head()].is_some() {
            return None;
        }
        let from_head = g.signed_reach(adj, e.head(), through);
        let mut cells = vec![None; g.n()];
        let (mut head_size, mut tail_size) = (0, 0);
        for j in 0..g.n() {
            if let Some(s) = from_tail[j] {
                cells[j] = Some((Side::Tail, s));
                tail_size += 1;
            } else if let Some(s) = from_head[j] {
                cells[j] = Some((Side::Head, s));
                head_size += 1;
            }
        }
        Some(Self {
            edge: i,
            cells,
            head_size,
            tail_size,
        })
    }
}

/// Head and tail components of a tree edge. The tail of a positive edge is
/// its `η = +1` endpoint; for a negative edge `{l, m}` with `l < m` the head
/// is the side containing `m`.
pub fn head_tail(tree: &SignedGraph, e: usize) -> Result<HeadTailSplit> {
    tree.edge(e)?;
    if !tree.is_tree() {
        return Err(Error::NotATree);
    }
    let adj = tree.adjacency();
    Ok(HeadTailSplit::compute(tree, &adj, e, |_| true).expect("tree edges are bridges"))
}

/// Strategy selector for [`pinv`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MethodChoice {
    /// Most specific formula that applies.
    Auto,
    Tree,
    /// Balanced or unbalanced unicyclic formula, whichever applies.
    Unicyclic,
    General,
    Oracle,
}

pub fn pinv<T: Scalar>(g: &SignedGraph, choice: MethodChoice, cap: EdgeCap) -> Result<PinvReport<T>> {
    g.require_connected()?;
    match choice {
        MethodChoice::Tree => tree_pinv(g),
        MethodChoice::Unicyclic => {
            if !g.is_unicyclic() {
                Err(Error::NotUnicyclic)
            } else if g.is_balanced()? {
                balanced_unicyclic_pinv(g)
            } else {
                unbalanced_unicyclic_inverse(g)
            }
        }
        MethodChoice::General => general_pinv(g, cap),
        MethodChoice::Oracle => {
            let n = g.incidence::<T>();
            let x = n.pinv_oracle();
            let penrose = penrose_verify(&n, &x)?;
            Ok(PinvReport {
                matrix: x,
                method: Method::Oracle,
                penrose,
            })
        }
        MethodChoice::Auto => {
            if g.is_tree() && g.n() >= 2 {
                tree_pinv(g)
            } else if g.is_unicyclic() {
                pinv(g, MethodChoice::Unicyclic, cap)
            } else {
                general_pinv(g, cap)
            }
        }
    }
}

/// Checks the Penrose conditions of a formula result against `N` and wraps
/// it in a report.
pub(crate) fn verified<T: Scalar>(
    g: &SignedGraph,
    matrix: Matrix<T>,
    method: Method,
) -> Result<PinvReport<T>> {
    let n = g.incidence::<T>();
    let penrose = penrose_verify(&n, &matrix)?;
    if !penrose.all() {
        return Err(Error::FormulaVerification {
            method,
            detail: format!("Penrose conditions {:?}", penrose.as_array()),
        });
    }
    Ok(PinvReport {
        matrix,
        method,
        penrose,
    })
}

/// Turns an integer numerator matrix into `numerators / denominator`.
pub(crate) fn scaled<T: Scalar>(rows: usize, cols: usize, numer: &[i128], denom: i128) -> Matrix<T> {
    let d = T::from_i128(denom);
    Matrix::from_fn(rows, cols, |i, j| T::from_i128(numer[i * cols + j]) / d.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn parse(s: &str) -> SignedGraph {
        SignedGraph::from_edge_list(s).unwrap()
    }

    #[test]
    fn edge_weight_cases() {
        let neg_in = SignedEdge::with_eta(0, 1, Sign::Minus, Sign::Minus, Sign::Minus).unwrap();
        assert_eq!(edge_weight(&neg_in), Sign::Minus);
        assert_eq!(edge_weight(&SignedEdge::new(0, 1, Sign::Minus)), Sign::Plus);
        let pos = SignedEdge::new(0, 1, Sign::Plus);
        assert_eq!(edge_weight(&pos), Sign::Plus);
        assert_eq!(edge_weight(&pos.flipped()), Sign::Plus);
    }

    #[test]
    fn head_tail_of_single_edge() {
        let s = head_tail(&parse("1 2 +"), 0).unwrap();
        assert_eq!(s.head_vertices(), vec![1]);
        assert_eq!(s.tail_vertices(), vec![0]);
    }

    #[test]
    fn head_tail_negative_edge_uses_larger_endpoint() {
        // e5 = {3, 6}, negative: the head is the side holding vertex 6.
        let s = head_tail(&fixtures::tree7(), 4).unwrap();
        assert_eq!(s.head_vertices(), vec![5]);
        assert_eq!(s.tail_size(), 6);
    }

    #[test]
    fn head_tail_star() {
        let g = parse("1 2 +\n1 3 -\n1 4 + -1 1");
        for e in 0..3 {
            let s = head_tail(&g, e).unwrap();
            let mut sizes = [s.head_size(), s.tail_size()];
            sizes.sort();
            assert_eq!(sizes, [1, 3]);
        }
        // reversed positive edge {1,4}: tail is vertex 4
        assert_eq!(head_tail(&g, 2).unwrap().tail_vertices(), vec![3]);
    }

    #[test]
    fn head_tail_errors() {
        assert!(matches!(
            head_tail(&parse("1 2 +"), 3),
            Err(Error::EdgeOutOfRange { .. })
        ));
        assert_eq!(head_tail(&parse("1 2 +\n2 3 +\n1 3 +"), 0), Err(Error::NotATree));
    }

    #[test]
    fn dispatch_rejects_mismatched_method() {
        let cap = EdgeCap::default();
        assert_eq!(
            pinv::<crate::Rational>(&fixtures::gamma1(), MethodChoice::Tree, cap).unwrap_err(),
            Error::NotATree
        );
        assert_eq!(
            pinv::<crate::Rational>(&fixtures::gamma2(), MethodChoice::Unicyclic, cap).unwrap_err(),
            Error::NotUnicyclic
        );
    }

    #[test]
    fn auto_dispatch_picks_specialised_formulas() {
        let cap = EdgeCap::default();
        let m = |g: &SignedGraph| pinv::<crate::Rational>(g, MethodChoice::Auto, cap).unwrap().method;
        assert_eq!(m(&fixtures::tree7()), Method::TreeFormula);
        assert_eq!(m(&fixtures::gamma1()), Method::UnicyclicInverse);
        assert_eq!(m(&parse("1 2 +\n2 3 +\n1 3 +")), Method::BalancedUnicyclic);
        assert_eq!(m(&fixtures::gamma2()), Method::GeneralUnbalanced);
        assert_eq!(m(&parse("1 2 +\n2 3 +\n1 3 +\n3 4 +\n2 4 +")), Method::GeneralBalanced);
    }
}
