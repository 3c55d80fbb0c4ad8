//! Enumeration of the rank-attaining spanning structures of a signed graph.
//!
//! A balanced connected graph has incidence rank `n - 1`, attained exactly
//! on spanning trees. An unbalanced one has rank `n`, attained exactly on
//! spanning subgraphs with `n` edges whose every component is unicyclic
//! with an unbalanced cycle (TU-subgraphs). Both enumerations backtrack
//! over edges in index order with pruning, so subsets come out sorted and
//! in lexicographic order.

use crate::error::{Error, Result};
use crate::ratmat::Matrix;
use crate::scalar::Scalar;
use crate::sgraph::{cycle_of_unicyclic, Sign, SignedGraph};
use crate::Rational;

/// Largest edge count the exponential enumerations accept.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeCap(pub usize);

impl Default for EdgeCap {
    fn default() -> Self {
        EdgeCap(24)
    }
}

impl EdgeCap {
    pub fn check(self, g: &SignedGraph) -> Result<()> {
        if g.m() > self.0 {
            Err(Error::EdgeCapExceeded {
                edges: g.m(),
                cap: self.0,
            })
        } else {
            Ok(())
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpanningTree {
    edge_indices: Vec<usize>,
}

impl SpanningTree {
    pub fn edge_indices(&self) -> &[usize] {
        &self.edge_indices
    }

    pub fn contains(&self, edge: usize) -> bool {
        self.edge_indices.binary_search(&edge).is_ok()
    }
}

/// One unicyclic component of a TU-subgraph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UnicyclicComponent {
    /// Sorted vertex ids.
    pub vertices: Vec<usize>,
    /// Sorted edge indices (as many as vertices).
    pub edges: Vec<usize>,
    /// Edge indices of the unbalanced cycle, in cycle order.
    pub cycle: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TuSubgraph {
    edge_indices: Vec<usize>,
    components: Vec<UnicyclicComponent>,
}

impl TuSubgraph {
    pub fn edge_indices(&self) -> &[usize] {
        &self.edge_indices
    }

    pub fn components(&self) -> &[UnicyclicComponent] {
        &self.components
    }

    /// Number of unbalanced unicyclic components, `c(H)`.
    pub fn c(&self) -> usize {
        self.components.len()
    }

    /// `4^c(H)`, the squared volume of the subgraph's incidence matrix.
    pub fn weight(&self) -> u128 {
        1u128 << (2 * self.c())
    }

    pub fn contains(&self, edge: usize) -> bool {
        self.edge_indices.binary_search(&edge).is_ok()
    }

    fn build(g: &SignedGraph, edge_indices: Vec<usize>) -> Self {
        let mut dsu = Dsu::new(g.n());
        for &i in &edge_indices {
            let (u, v) = g.edges()[i].endpoints();
            dsu.union_plain(u, v);
        }
        let mut by_root: Vec<Option<usize>> = vec![None; g.n()];
        let mut components: Vec<UnicyclicComponent> = Vec::new();
        for v in 0..g.n() {
            let r = dsu.find(v).0;
            let slot = *by_root[r].get_or_insert_with(|| {
                components.push(UnicyclicComponent {
                    vertices: Vec::new(),
                    edges: Vec::new(),
                    cycle: Vec::new(),
                });
                components.len() - 1
            });
            components[slot].vertices.push(v);
        }
        for &i in &edge_indices {
            let r = dsu.find(g.edges()[i].u()).0;
            components[by_root[r].unwrap()].edges.push(i);
        }
        for comp in &mut components {
            comp.cycle = cycle_of_unicyclic(g, &comp.edges);
        }
        TuSubgraph {
            edge_indices,
            components,
        }
    }
}

/// Union-find that also tracks, per vertex, the sign of the forest path to
/// its root, plus per-component edge counts and cycle flags.
#[derive(Clone)]
struct Dsu {
    parent: Vec<usize>,
    parity: Vec<Sign>,
    size: Vec<usize>,
    edges: Vec<usize>,
    cyclic: Vec<bool>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            parity: vec![Sign::Plus; n],
            size: vec![1; n],
            edges: vec![0; n],
            cyclic: vec![false; n],
        }
    }

    fn find(&self, mut x: usize) -> (usize, Sign) {
        let mut s = Sign::Plus;
        while self.parent[x] != x {
            s = s * self.parity[x];
            x = self.parent[x];
        }
        (x, s)
    }

    /// Returns false if `u` and `v` were already connected.
    fn union_plain(&mut self, u: usize, v: usize) -> bool {
        let (ru, _) = self.find(u);
        let (rv, _) = self.find(v);
        if ru == rv {
            return false;
        }
        let (big, small) = if self.size[ru] >= self.size[rv] { (ru, rv) } else { (rv, ru) };
        self.parent[small] = big;
        self.size[big] += self.size[small];
        true
    }

    /// Adds a signed edge while keeping every component a tree or a
    /// unicyclic graph with an unbalanced cycle. Returns false (leaving the
    /// structure untouched) when that would be violated.
    fn add_tu_edge(&mut self, u: usize, v: usize, sign: Sign) -> bool {
        let (ru, pu) = self.find(u);
        let (rv, pv) = self.find(v);
        if ru == rv {
            if self.cyclic[ru] || pu * pv * sign == Sign::Plus {
                return false;
            }
            self.cyclic[ru] = true;
            self.edges[ru] += 1;
            return true;
        }
        if self.cyclic[ru] && self.cyclic[rv] {
            return false;
        }
        let (big, small) = if self.size[ru] >= self.size[rv] { (ru, rv) } else { (rv, ru) };
        self.parent[small] = big;
        self.parity[small] = sign * pu * pv;
        self.size[big] += self.size[small];
        self.edges[big] += self.edges[small] + 1;
        self.cyclic[big] = self.cyclic[big] || self.cyclic[small];
        true
    }
}

/// All spanning trees, each as a sorted edge-index set, in lexicographic
/// order.
pub fn spanning_trees(g: &SignedGraph, cap: EdgeCap) -> Result<Vec<SpanningTree>> {
    g.require_connected()?;
    cap.check(g)?;
    let mut out = Vec::new();
    if g.n() <= 1 {
        out.push(SpanningTree {
            edge_indices: Vec::new(),
        });
        return Ok(out);
    }
    let mut chosen = Vec::with_capacity(g.n() - 1);
    trees_rec(g, 0, &mut chosen, Dsu::new(g.n()), &mut out);
    Ok(out)
}

fn trees_rec(
    g: &SignedGraph,
    k: usize,
    chosen: &mut Vec<usize>,
    dsu: Dsu,
    out: &mut Vec<SpanningTree>,
) {
    let n = g.n();
    if chosen.len() == n - 1 {
        out.push(SpanningTree {
            edge_indices: chosen.clone(),
        });
        return;
    }
    if n - 1 - chosen.len() > g.m() - k {
        return;
    }
    // Every branch below must still be able to span the graph.
    let mut probe = dsu.clone();
    let mut joined = chosen.len();
    for e in &g.edges()[k..] {
        if probe.union_plain(e.u(), e.v()) {
            joined += 1;
        }
    }
    if joined < n - 1 {
        return;
    }
    let (u, v) = g.edges()[k].endpoints();
    let mut with = dsu.clone();
    if with.union_plain(u, v) {
        chosen.push(k);
        trees_rec(g, k + 1, chosen, with, out);
        chosen.pop();
    }
    trees_rec(g, k + 1, chosen, dsu, out);
}

/// All spanning TU-subgraphs with `n` edges, in lexicographic order of their
/// edge sets.
pub fn tu_subgraphs(g: &SignedGraph, cap: EdgeCap) -> Result<Vec<TuSubgraph>> {
    if g.balance()?.is_balanced() {
        return Err(Error::Balanced);
    }
    cap.check(g)?;
    let mut sets = Vec::new();
    let mut chosen = Vec::with_capacity(g.n());
    tu_rec(g, 0, &mut chosen, Dsu::new(g.n()), &mut sets);
    Ok(sets.into_iter().map(|s| TuSubgraph::build(g, s)).collect())
}

fn tu_rec(g: &SignedGraph, k: usize, chosen: &mut Vec<usize>, dsu: Dsu, out: &mut Vec<Vec<usize>>) {
    let n = g.n();
    if chosen.len() == n {
        out.push(chosen.clone());
        return;
    }
    // Each acyclic component still needs exactly one more edge than it
    // has; n - |chosen| counts them.
    let acyclic_needed = n - chosen.len();
    let remaining = g.m() - k;
    if acyclic_needed > remaining {
        return;
    }
    let mut touched = vec![false; n];
    for e in &g.edges()[k..] {
        touched[dsu.find(e.u()).0] = true;
        touched[dsu.find(e.v()).0] = true;
    }
    if (0..n).any(|v| dsu.parent[v] == v && !dsu.cyclic[v] && !touched[v]) {
        return;
    }
    let e = g.edges()[k];
    let mut with = dsu.clone();
    if with.add_tu_edge(e.u(), e.v(), e.sign()) {
        chosen.push(k);
        tu_rec(g, k + 1, chosen, with, out);
        chosen.pop();
    }
    tu_rec(g, k + 1, chosen, dsu, out);
}

/// Squared volume of the incidence matrix: `n τ(Γ)` when balanced,
/// `Σ_H 4^c(H)` over TU-subgraphs when unbalanced.
pub fn vol_squared(g: &SignedGraph, cap: EdgeCap) -> Result<u128> {
    if g.balance()?.is_balanced() {
        let tau = spanning_trees(g, cap)?.len() as u128;
        Ok(g.n() as u128 * tau)
    } else {
        Ok(tu_subgraphs(g, cap)?.iter().map(TuSubgraph::weight).sum())
    }
}

/// Spanning-tree count of the underlying unsigned graph by the Matrix-Tree
/// theorem: any principal cofactor of the unsigned Laplacian.
pub fn matrix_tree_count(g: &SignedGraph) -> Result<u128> {
    if g.n() <= 1 {
        return Ok(1);
    }
    let l: Matrix<Rational> = g.unsigned().laplacian();
    let keep: Vec<usize> = (1..g.n()).collect();
    let reduced = l.select_rows(&keep).select_columns(&keep);
    let d = reduced.det()?;
    let count = d.to_small_int().expect("spanning-tree count is a small integer");
    Ok(count as u128)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn parse(s: &str) -> SignedGraph {
        SignedGraph::from_edge_list(s).unwrap()
    }

    #[test]
    fn tree_has_one_spanning_tree() {
        let g = fixtures::tree7();
        let trees = spanning_trees(&g, EdgeCap::default()).unwrap();
        assert_eq!(trees.len(), 1);
        assert_eq!(trees[0].edge_indices(), &[0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn cycle_length_many_trees() {
        let g = parse("1 2 +\n2 3 -\n3 4 -\n4 5 +\n5 1 +\n5 6 +");
        assert_eq!(spanning_trees(&g, EdgeCap::default()).unwrap().len(), 5);
    }

    #[test]
    fn k4_has_sixteen_trees() {
        let g = parse("1 2 +\n1 3 +\n1 4 +\n2 3 +\n2 4 +\n3 4 +");
        let trees = spanning_trees(&g, EdgeCap::default()).unwrap();
        assert_eq!(trees.len(), 16);
        assert_eq!(matrix_tree_count(&g).unwrap(), 16);
        let mut sorted = trees.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted, trees);
    }

    #[test]
    fn tu_counts_on_fixtures() {
        let cap = EdgeCap::default();
        let g1 = fixtures::gamma1();
        let tus = tu_subgraphs(&g1, cap).unwrap();
        assert_eq!(tus.len(), 1);
        assert_eq!(tus[0].c(), 1);
        assert_eq!(tus[0].components()[0].cycle.len(), 4);

        let g2 = fixtures::gamma2();
        let tus = tu_subgraphs(&g2, cap).unwrap();
        assert_eq!(tus.len(), 3);
        assert!(tus.iter().all(|h| h.c() == 1));
        assert_eq!(vol_squared(&g2, cap).unwrap(), 12);

        let g3 = fixtures::gamma3();
        let tus = tu_subgraphs(&g3, cap).unwrap();
        assert_eq!(tus.len(), 8);
        assert_eq!(tus.iter().filter(|h| h.c() == 1).count(), 7);
        assert_eq!(tus.iter().filter(|h| h.c() == 2).count(), 1);
        assert_eq!(vol_squared(&g3, cap).unwrap(), 44);
    }

    #[test]
    fn tu_rejects_balanced_input() {
        assert_eq!(
            tu_subgraphs(&fixtures::tree7(), EdgeCap::default()),
            Err(Error::Balanced)
        );
    }

    #[test]
    fn cap_is_enforced() {
        let g = parse("1 2 +\n2 3 +\n1 3 -");
        assert_eq!(
            spanning_trees(&g, EdgeCap(2)),
            Err(Error::EdgeCapExceeded { edges: 3, cap: 2 })
        );
        assert!(tu_subgraphs(&g, EdgeCap(2)).is_err());
    }

    #[test]
    fn disconnected_input_is_rejected() {
        let g = parse("n 4\n1 2 +\n3 4 +");
        assert_eq!(spanning_trees(&g, EdgeCap::default()), Err(Error::Disconnected));
        assert_eq!(vol_squared(&g, EdgeCap::default()), Err(Error::Disconnected));
    }

    #[test]
    fn vol_squared_of_tree_fixture() {
        assert_eq!(vol_squared(&fixtures::tree7(), EdgeCap::default()).unwrap(), 7);
    }
}
