//! Random and exhaustive generators of connected signed graphs.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::sgraph::{Sign, SignedEdge, SignedGraph};

fn random_sign<R: Rng + ?Sized>(rng: &mut R) -> Sign {
    Sign::from_bool(rng.gen())
}

/// An edge with a uniformly random valid bidirection.
fn edge_with_random_eta<R: Rng + ?Sized>(rng: &mut R, u: usize, v: usize, sign: Sign) -> SignedEdge {
    let eta_u = random_sign(rng);
    let eta_v = -(eta_u * sign);
    SignedEdge::with_eta(u, v, sign, eta_u, eta_v).expect("η product is -σ by construction")
}

fn build<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    pairs: Vec<(usize, usize)>,
    mut sign_of: impl FnMut(&mut R, usize, usize) -> Sign,
    random_eta: bool,
) -> SignedGraph {
    let edges = pairs
        .into_iter()
        .map(|(u, v)| {
            let s = sign_of(rng, u, v);
            if random_eta {
                edge_with_random_eta(rng, u, v, s)
            } else {
                SignedEdge::new(u, v, s)
            }
        })
        .collect();
    SignedGraph::new(n, edges).expect("generated edges are simple")
}

/// Endpoint pairs of a uniform random labelled tree shape (random
/// attachment) followed by `m - (n - 1)` distinct extra pairs, shuffled.
fn connected_pairs<R: Rng + ?Sized>(rng: &mut R, n: usize, m: usize) -> Vec<(usize, usize)> {
    let max_m = n * n.saturating_sub(1) / 2;
    let m = m.clamp(n.saturating_sub(1), max_m);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut pairs: Vec<(usize, usize)> = (1..n)
        .map(|k| {
            let p = order[rng.gen_range(0..k)];
            let q = order[k];
            (p.min(q), p.max(q))
        })
        .collect();
    let mut rest: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|p| !pairs.contains(p))
        .collect();
    rest.shuffle(rng);
    pairs.extend(rest.into_iter().take(m - pairs.len()));
    pairs.shuffle(rng);
    pairs
}

/// Connected graph on `n` vertices with `m` edges (clamped to the feasible
/// range), uniformly random signs and, if `random_eta`, random
/// bidirections.
pub fn random_connected<R: Rng + ?Sized>(rng: &mut R, n: usize, m: usize, random_eta: bool) -> SignedGraph {
    let pairs = connected_pairs(rng, n, m);
    build(rng, n, pairs, |r, _, _| random_sign(r), random_eta)
}

/// Random signed tree on `n` vertices.
pub fn random_tree<R: Rng + ?Sized>(rng: &mut R, n: usize, random_eta: bool) -> SignedGraph {
    random_connected(rng, n, n.saturating_sub(1), random_eta)
}

/// Random balanced connected graph: signs are `p(u) p(v)` for a random
/// vertex potential `p`.
pub fn random_balanced<R: Rng + ?Sized>(rng: &mut R, n: usize, m: usize, random_eta: bool) -> SignedGraph {
    let potential: Vec<Sign> = (0..n).map(|_| random_sign(rng)).collect();
    let pairs = connected_pairs(rng, n, m);
    build(rng, n, pairs, |_, u, v| potential[u] * potential[v], random_eta)
}

/// Every connected signed graph on exactly `n` labelled vertices, with every
/// sign pattern and canonical bidirections. Edges are listed in
/// lexicographic order of their endpoints.
pub fn all_connected_signed_graphs(n: usize) -> Vec<SignedGraph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let chosen: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        let shape = SignedGraph::new(
            n,
            chosen.iter().map(|&(u, v)| SignedEdge::new(u, v, Sign::Plus)).collect(),
        )
        .expect("simple");
        if !shape.is_connected() {
            continue;
        }
        for signs in 0u64..(1u64 << chosen.len()) {
            let edges = chosen
                .iter()
                .enumerate()
                .map(|(k, &(u, v))| SignedEdge::new(u, v, Sign::from_bool(signs >> k & 1 == 0)))
                .collect();
            out.push(SignedGraph::new(n, edges).expect("simple"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn random_graphs_are_connected_with_requested_size() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let g = random_connected(&mut rng, 8, 12, true);
            assert!(g.is_connected());
            assert_eq!((g.n(), g.m()), (8, 12));
        }
        let g = random_connected(&mut rng, 4, 100, false);
        assert_eq!(g.m(), 6);
    }

    #[test]
    fn random_trees_and_balanced_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in 1..9 {
            assert!(random_tree(&mut rng, n, true).is_tree());
            assert!(random_balanced(&mut rng, n, n + 2, true).is_balanced().unwrap());
        }
    }

    #[test]
    fn exhaustive_counts() {
        // connected labelled graphs on 3 vertices: 3 paths (2 edges) + 1 triangle
        assert_eq!(all_connected_signed_graphs(3).len(), 3 * 4 + 8);
        assert_eq!(all_connected_signed_graphs(1).len(), 1);
        assert_eq!(all_connected_signed_graphs(2).len(), 2);
    }
}
