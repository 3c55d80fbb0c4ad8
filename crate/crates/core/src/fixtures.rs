//! Worked examples shipped with the crate, with their reference matrices.

use crate::ratmat::Matrix;
use crate::scalar::Scalar as _;
use crate::sgraph::SignedGraph;
use crate::Rational;

pub const TREE7_EDGES: &str = include_str!("../fixtures/tree7.txt");
pub const GAMMA1_EDGES: &str = include_str!("../fixtures/gamma1.txt");
pub const GAMMA2_EDGES: &str = include_str!("../fixtures/gamma2.txt");
pub const GAMMA3_EDGES: &str = include_str!("../fixtures/gamma3.txt");

/// Incidence matrix of the seven-vertex tree (reference values).
pub const TREE7_INCIDENCE: [[i64; 6]; 7] = [
    [0, 1, 1, 0, 0, 1],
    [1, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, -1, -1],
    [0, 0, 0, -1, 0, 0],
    [1, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, -1, 0],
    [0, -1, 0, 0, 0, 0],
];

/// Seven times the reference pseudoinverse of the tree's incidence matrix.
pub const TREE7_PINV_TIMES_7: [[i64; 7]; 6] = [
    [-2, 2, -2, 5, 5, 2, -2],
    [1, -1, 1, 1, 1, -1, -6],
    [3, 4, 3, -4, -4, -3, 3],
    [1, -1, 1, -6, 1, -1, 1],
    [-1, 1, -1, -1, -1, -6, -1],
    [2, -2, -5, 2, 2, 5, 2],
];

/// Incidence matrix of the unbalanced unicyclic graph Γ₁ (reference values).
pub const GAMMA1_INCIDENCE: [[i64; 9]; 9] = [
    [0, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 1, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, -1, 0, 0, 0, 0],
    [1, -1, 0, 0, 0, 0, -1, 0, 1],
    [0, 0, 0, 1, 0, 1, 0, 1, 0],
    [0, -1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0, 1],
    [-1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 1, 0],
];

/// Twice the reference inverse of Γ₁'s incidence matrix.
pub const GAMMA1_INVERSE_TIMES_2: [[i64; 9]; 9] = [
    [0, 0, 0, 0, 0, 0, 0, -2, 0],
    [0, 0, 0, 0, 0, -2, 0, 0, 0],
    [2, 0, 0, 0, 0, 0, 0, 0, 0],
    [-2, 2, 2, 0, 0, 0, 0, 0, 0],
    [0, 0, -2, 0, 0, 0, 0, 0, 0],
    [1, -1, -1, -1, 1, 1, 1, -1, -1],
    [-1, 1, 1, -1, -1, 1, 1, -1, 1],
    [1, -1, -1, 1, 1, -1, -1, 1, 1],
    [-1, 1, 1, 1, -1, -1, 1, 1, 1],
];

fn parse(text: &str) -> SignedGraph {
    SignedGraph::from_edge_list(text).expect("bundled fixture parses")
}

pub fn tree7() -> SignedGraph {
    parse(TREE7_EDGES)
}

pub fn gamma1() -> SignedGraph {
    parse(GAMMA1_EDGES)
}

pub fn gamma2() -> SignedGraph {
    parse(GAMMA2_EDGES)
}

pub fn gamma3() -> SignedGraph {
    parse(GAMMA3_EDGES)
}

pub fn tree7_pinv() -> Matrix<Rational> {
    Matrix::<Rational>::from_int_rows(&TREE7_PINV_TIMES_7).scale(&Rational::from_ratio(1, 7))
}

pub fn gamma1_inverse() -> Matrix<Rational> {
    Matrix::<Rational>::from_int_rows(&GAMMA1_INVERSE_TIMES_2).scale(&Rational::from_ratio(1, 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sgraph::incidence_to_graph;
    use crate::RatMatrix;

    #[test]
    fn edge_files_match_reference_incidence_matrices() {
        let reference = RatMatrix::from_int_rows(&TREE7_INCIDENCE);
        assert_eq!(incidence_to_graph(&reference).unwrap(), tree7());
        assert_eq!(tree7().incidence::<Rational>(), reference);

        let reference = RatMatrix::from_int_rows(&GAMMA1_INCIDENCE);
        let g = incidence_to_graph(&reference).unwrap();
        assert_eq!(g, gamma1());
        assert_eq!((g.n(), g.m()), (9, 9));
        assert!(!g.is_balanced().unwrap());
    }

    #[test]
    fn bicyclic_fixtures_extend_gamma1() {
        let g1 = gamma1();
        for g in [gamma2(), gamma3()] {
            assert_eq!((g.n(), g.m()), (9, 10));
            for (a, b) in g.edges().iter().zip(g1.edges()) {
                assert_eq!((a.endpoints(), a.sign()), (b.endpoints(), b.sign()));
            }
            assert!(!g.is_balanced().unwrap());
        }
    }
}
