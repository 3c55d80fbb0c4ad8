//! Signed graphs with bidirected edges.
//!
//! Vertices are `0..n` in the API; the edge-list text format numbers them
//! `1..=n`. Edge order is significant: edge `i` is column `i` of the
//! incidence matrix and row `i` of its pseudoinverse.
//!
//! The bidirection value `η(v, e)` is `+1` when the arrow at `v` points out
//! of `v` and `-1` when it points in, and every edge satisfies
//! `η(u, e) η(v, e) = -σ(e)`. Much of the signed-graph literature uses the
//! opposite arrow convention; no conversion is attempted.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::ops::{Mul, Neg};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ratmat::Matrix;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_bool(positive: bool) -> Self {
        if positive {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn is_plus(self) -> bool {
        self == Sign::Plus
    }

    pub fn to_scalar<T: Scalar>(self) -> T {
        T::from_i128(self.value() as i128)
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_bool(self == rhs)
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignedEdge {
    u: usize,
    v: usize,
    sign: Sign,
    eta_u: Sign,
    eta_v: Sign,
}

impl SignedEdge {
    /// Edge with the canonical bidirection: a positive edge is oriented from
    /// its smaller endpoint to its larger one, a negative edge gets `η = +1`
    /// at both ends.
    pub fn new(u: usize, v: usize, sign: Sign) -> Self {
        let (eta_u, eta_v) = match sign {
            Sign::Minus => (Sign::Plus, Sign::Plus),
            Sign::Plus if u < v => (Sign::Plus, Sign::Minus),
            Sign::Plus => (Sign::Minus, Sign::Plus),
        };
        Self {
            u,
            v,
            sign,
            eta_u,
            eta_v,
        }
    }

    pub fn with_eta(u: usize, v: usize, sign: Sign, eta_u: Sign, eta_v: Sign) -> Result<Self> {
        if eta_u * eta_v != -sign {
            return Err(Error::InvalidEdge(format!(
                "bidirection ({eta_u}1, {eta_v}1) on {{{}, {}}} requires η(u)η(v) = {}1",
                u + 1,
                v + 1,
                -sign
            )));
        }
        Ok(Self {
            u,
            v,
            sign,
            eta_u,
            eta_v,
        })
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn eta_u(&self) -> Sign {
        self.eta_u
    }

    pub fn eta_v(&self) -> Sign {
        self.eta_v
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.u, self.v)
    }

    pub fn touches(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    /// The endpoint opposite `x`. Panics if `x` is not an endpoint.
    pub fn other(&self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            assert_eq!(x, self.v, "vertex {x} is not on this edge");
            self.u
        }
    }

    pub fn eta_at(&self, x: usize) -> Option<Sign> {
        if x == self.u {
            Some(self.eta_u)
        } else if x == self.v {
            Some(self.eta_v)
        } else {
            None
        }
    }

    /// Same edge with both arrowheads reversed; negates the incidence column.
    pub fn flipped(&self) -> Self {
        Self {
            eta_u: -self.eta_u,
            eta_v: -self.eta_v,
            ..*self
        }
    }

    /// Tail endpoint used by the head/tail conventions: the `η = +1` end of a
    /// positive edge, the smaller endpoint of a negative edge.
    pub fn tail(&self) -> usize {
        match self.sign {
            Sign::Plus if self.eta_u.is_plus() => self.u,
            Sign::Plus => self.v,
            Sign::Minus => self.u.min(self.v),
        }
    }

    pub fn head(&self) -> usize {
        self.other(self.tail())
    }

    fn key(&self) -> (usize, usize) {
        (self.u.min(self.v), self.u.max(self.v))
    }
}

/// Result of a balance test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Balance {
    /// A switching function: every edge satisfies
    /// `σ(uv) = potential[u] · potential[v]`.
    Balanced { potential: Vec<Sign> },
    /// Edge indices of a cycle with an odd number of negative edges.
    Unbalanced { cycle: Vec<usize> },
}

impl Balance {
    pub fn is_balanced(&self) -> bool {
        matches!(self, Balance::Balanced { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedGraph {
    n: usize,
    edges: Vec<SignedEdge>,
}

impl SignedGraph {
    pub fn new(n: usize, edges: Vec<SignedEdge>) -> Result<Self> {
        let mut seen = HashSet::new();
        for e in &edges {
            if e.u >= n || e.v >= n {
                return Err(Error::InvalidEdge(format!(
                    "{{{}, {}}} references a vertex beyond n = {n}",
                    e.u + 1,
                    e.v + 1
                )));
            }
            if e.u == e.v {
                return Err(Error::InvalidEdge(format!("loop at vertex {}", e.u + 1)));
            }
            if !seen.insert(e.key()) {
                return Err(Error::InvalidEdge(format!(
                    "duplicate edge {{{}, {}}}",
                    e.u + 1,
                    e.v + 1
                )));
            }
            if e.eta_u * e.eta_v != -e.sign {
                return Err(Error::InvalidEdge("bidirection inconsistent with sign".into()));
            }
        }
        Ok(Self { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[SignedEdge] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> Result<&SignedEdge> {
        self.edges.get(i).ok_or(Error::EdgeOutOfRange {
            index: i,
            edges: self.edges.len(),
        })
    }

    /// `adjacency()[v]` lists `(neighbour, edge index)` pairs.
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.n];
        for (i, e) in self.edges.iter().enumerate() {
            adj[e.u].push((e.v, i));
            adj[e.v].push((e.u, i));
        }
        adj
    }

    /// Signs of the paths from `start` to every reachable vertex, walking only
    /// edges accepted by `allowed`. For a tree (or any balanced edge set)
    /// these are the path signs; elsewhere they are BFS-tree path signs.
    pub(crate) fn signed_reach(
        &self,
        adj: &[Vec<(usize, usize)>],
        start: usize,
        allowed: impl Fn(usize) -> bool,
    ) -> Vec<Option<Sign>> {
        let mut sign = vec![None; self.n];
        sign[start] = Some(Sign::Plus);
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            let sx = sign[x].expect("queued vertices are labelled");
            for &(y, e) in &adj[x] {
                if sign[y].is_none() && allowed(e) {
                    sign[y] = Some(sx * self.edges[e].sign);
                    queue.push_back(y);
                }
            }
        }
        sign
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let adj = self.adjacency();
        self.signed_reach(&adj, 0, |_| true).iter().all(Option::is_some)
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.m() + 1 == self.n && self.is_connected()
    }

    pub fn is_unicyclic(&self) -> bool {
        self.n >= 3 && self.m() == self.n && self.is_connected()
    }

    /// Balance test by switching: label vertices along a BFS tree so that tree
    /// edges are consistent, then check every non-tree edge.
    pub fn balance(&self) -> Result<Balance> {
        self.require_connected()?;
        if self.n == 0 {
            return Ok(Balance::Balanced { potential: vec![] });
        }
        let adj = self.adjacency();
        let mut potential = vec![None; self.n];
        let mut parent_edge: Vec<Option<usize>> = vec![None; self.n];
        let mut depth = vec![0usize; self.n];
        potential[0] = Some(Sign::Plus);
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for &(y, e) in &adj[x] {
                if potential[y].is_none() {
                    potential[y] = Some(potential[x].unwrap() * self.edges[e].sign);
                    parent_edge[y] = Some(e);
                    depth[y] = depth[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        let potential: Vec<Sign> = potential.into_iter().map(Option::unwrap).collect();
        for (i, e) in self.edges.iter().enumerate() {
            if potential[e.u] * potential[e.v] == e.sign {
                continue;
            }
            // Climb both ends to their lowest common ancestor.
            let (mut a, mut b) = (e.u, e.v);
            let mut left = Vec::new();
            let mut right = Vec::new();
            while a != b {
                if depth[a] >= depth[b] {
                    let pe = parent_edge[a].unwrap();
                    left.push(pe);
                    a = self.edges[pe].other(a);
                } else {
                    let pe = parent_edge[b].unwrap();
                    right.push(pe);
                    b = self.edges[pe].other(b);
                }
            }
            let mut cycle = vec![i];
            cycle.extend(left);
            cycle.extend(right.into_iter().rev());
            return Ok(Balance::Unbalanced { cycle });
        }
        Ok(Balance::Balanced { potential })
    }

    pub fn is_balanced(&self) -> Result<bool> {
        Ok(self.balance()?.is_balanced())
    }

    /// `S[i][j]` is the sign shared by every `i`–`j` path.
    pub fn path_sign_matrix<T: Scalar>(&self) -> Result<Matrix<T>> {
        match self.balance()? {
            Balance::Balanced { potential } => Ok(Matrix::from_fn(self.n, self.n, |i, j| {
                (potential[i] * potential[j]).to_scalar()
            })),
            Balance::Unbalanced { .. } => Err(Error::Unbalanced),
        }
    }

    pub fn incidence<T: Scalar>(&self) -> Matrix<T> {
        let mut n = Matrix::zeros(self.n, self.m());
        for (l, e) in self.edges.iter().enumerate() {
            n[(e.u, l)] = e.eta_u.to_scalar();
            n[(e.v, l)] = e.eta_v.to_scalar();
        }
        n
    }

    /// Signed adjacency matrix `A(Γ)`.
    pub fn adjacency_matrix<T: Scalar>(&self) -> Matrix<T> {
        let mut a = Matrix::zeros(self.n, self.n);
        for e in &self.edges {
            a[(e.u, e.v)] = e.sign.to_scalar();
            a[(e.v, e.u)] = e.sign.to_scalar();
        }
        a
    }

    /// `L = D - A(Γ)`.
    pub fn laplacian<T: Scalar>(&self) -> Matrix<T> {
        let mut l = self.adjacency_matrix::<T>().map(|x| -x.clone());
        for e in &self.edges {
            for x in [e.u, e.v] {
                l[(x, x)] = l[(x, x)].clone() + T::one();
            }
        }
        l
    }

    /// Spanning subgraph keeping only the listed edges, in the given order.
    pub fn subgraph(&self, edge_indices: &[usize]) -> Result<SignedGraph> {
        let edges = edge_indices
            .iter()
            .map(|&i| self.edge(i).copied())
            .collect::<Result<Vec<_>>>()?;
        SignedGraph::new(self.n, edges)
    }

    /// All-positive copy of the underlying graph.
    pub fn unsigned(&self) -> SignedGraph {
        let edges = self
            .edges
            .iter()
            .map(|e| SignedEdge::new(e.u, e.v, Sign::Plus))
            .collect();
        SignedGraph { n: self.n, edges }
    }

    /// Switching at a vertex set: every edge with exactly one end in the set
    /// changes sign, and `η` flips at each end inside the set.
    pub fn switched(&self, vertices: &[usize]) -> SignedGraph {
        let inside: HashSet<usize> = vertices.iter().copied().collect();
        let edges = self
            .edges
            .iter()
            .map(|e| {
                let (iu, iv) = (inside.contains(&e.u), inside.contains(&e.v));
                SignedEdge {
                    sign: if iu != iv { -e.sign } else { e.sign },
                    eta_u: if iu { -e.eta_u } else { e.eta_u },
                    eta_v: if iv { -e.eta_v } else { e.eta_v },
                    ..*e
                }
            })
            .collect();
        SignedGraph { n: self.n, edges }
    }

    /// Copy with both arrowheads of edge `i` reversed.
    pub fn with_edge_flipped(&self, i: usize) -> Result<SignedGraph> {
        let mut g = self.clone();
        let e = *self.edge(i)?;
        g.edges[i] = e.flipped();
        Ok(g)
    }

    /// Edge indices of the unique cycle of a unicyclic graph, in cycle order.
    pub fn unique_cycle(&self) -> Result<Vec<usize>> {
        if !self.is_unicyclic() {
            return Err(Error::NotUnicyclic);
        }
        let all: Vec<usize> = (0..self.m()).collect();
        Ok(cycle_of_unicyclic(self, &all))
    }

    /// Parses the edge-list format: one `u v s [eta_u eta_v]` per line,
    /// optional `n <count>` header, `#` comments.
    pub fn from_edge_list(text: &str) -> Result<Self> {
        let mut declared_n: Option<usize> = None;
        let mut raw = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let line_no = idx + 1;
            let body = line.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let fields: Vec<&str> = body.split_whitespace().collect();
            let err = |msg: String| Error::Parse {
                line: line_no,
                msg,
            };
            if fields[0] == "n" {
                if fields.len() != 2 {
                    return Err(err("header must be `n <count>`".into()));
                }
                if declared_n.is_some() {
                    return Err(err("duplicate `n` header".into()));
                }
                let n = fields[1]
                    .parse::<usize>()
                    .map_err(|_| err(format!("bad vertex count `{}`", fields[1])))?;
                declared_n = Some(n);
                continue;
            }
            if fields.len() != 3 && fields.len() != 5 {
                return Err(err(format!(
                    "expected `u v s [eta_u eta_v]`, got {} fields",
                    fields.len()
                )));
            }
            let vertex = |s: &str| -> Result<usize> {
                match s.parse::<usize>() {
                    Ok(v) if v >= 1 => Ok(v - 1),
                    _ => Err(err(format!("bad vertex id `{s}` (ids start at 1)"))),
                }
            };
            let u = vertex(fields[0])?;
            let v = vertex(fields[1])?;
            let sign = parse_sign(fields[2])
                .ok_or_else(|| err(format!("bad sign `{}`", fields[2])))?;
            let edge = if fields.len() == 5 {
                let eu = parse_eta(fields[3]).ok_or_else(|| err(format!("bad eta `{}`", fields[3])))?;
                let ev = parse_eta(fields[4]).ok_or_else(|| err(format!("bad eta `{}`", fields[4])))?;
                SignedEdge::with_eta(u, v, sign, eu, ev).map_err(|e| err(e.to_string()))?
            } else {
                SignedEdge::new(u, v, sign)
            };
            raw.push((line_no, edge));
        }
        let max_id = raw.iter().map(|(_, e)| e.u.max(e.v) + 1).max();
        let n = match (declared_n, max_id) {
            (None, None) => {
                return Err(Error::Parse {
                    line: 0,
                    msg: "empty input: no edges and no `n` header".into(),
                })
            }
            (Some(n), Some(max)) if max > n => {
                return Err(Error::Parse {
                    line: 0,
                    msg: format!("vertex {max} exceeds declared n = {n}"),
                })
            }
            (Some(n), _) => n,
            (None, Some(max)) => max,
        };
        let mut seen = HashSet::new();
        for (line, e) in &raw {
            if e.u == e.v {
                return Err(Error::Parse {
                    line: *line,
                    msg: format!("loop at vertex {}", e.u + 1),
                });
            }
            if !seen.insert(e.key()) {
                return Err(Error::Parse {
                    line: *line,
                    msg: format!("duplicate edge {{{}, {}}}", e.u + 1, e.v + 1),
                });
            }
        }
        SignedGraph::new(n, raw.into_iter().map(|(_, e)| e).collect())
    }

    /// Normalised edge list with explicit header and bidirections.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for e in &self.edges {
            out.push_str(&format!(
                "{} {} {} {} {}\n",
                e.u + 1,
                e.v + 1,
                e.sign,
                e.eta_u.value(),
                e.eta_v.value()
            ));
        }
        out
    }
}

impl FromStr for SignedGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SignedGraph::from_edge_list(s)
    }
}

fn parse_sign(s: &str) -> Option<Sign> {
    match s {
        "+" | "+1" | "1" => Some(Sign::Plus),
        "-" | "-1" => Some(Sign::Minus),
        _ => None,
    }
}

fn parse_eta(s: &str) -> Option<Sign> {
    match s {
        "1" | "+1" => Some(Sign::Plus),
        "-1" => Some(Sign::Minus),
        _ => None,
    }
}

/// Reads a graph back off an incidence matrix: each column must hold exactly
/// two nonzero entries, each `±1`.
pub fn incidence_to_graph<T: Scalar>(m: &Matrix<T>) -> Result<SignedGraph> {
    let mut edges = Vec::with_capacity(m.cols());
    for l in 0..m.cols() {
        let mut ends = Vec::new();
        for i in 0..m.rows() {
            let x = &m[(i, l)];
            if x.is_zero() {
                continue;
            }
            let s = match x.to_small_int() {
                Some(1) => Sign::Plus,
                Some(-1) => Sign::Minus,
                _ => {
                    return Err(Error::NotIncidence(format!(
                        "entry ({}, {}) is {x}, expected 0 or ±1",
                        i + 1,
                        l + 1
                    )))
                }
            };
            ends.push((i, s));
        }
        let [(u, eu), (v, ev)] = ends[..] else {
            return Err(Error::NotIncidence(format!(
                "column {} has {} nonzero entries",
                l + 1,
                ends.len()
            )));
        };
        edges.push(SignedEdge::with_eta(u, v, -(eu * ev), eu, ev)?);
    }
    SignedGraph::new(m.rows(), edges).map_err(|e| Error::NotIncidence(e.to_string()))
}

/// Cycle edges of a connected unicyclic edge set, found by repeatedly
/// stripping leaves. `edge_set` must induce exactly one cycle on the
/// vertices it touches.
pub(crate) fn cycle_of_unicyclic(g: &SignedGraph, edge_set: &[usize]) -> Vec<usize> {
    let mut degree = vec![0usize; g.n()];
    let mut alive: Vec<bool> = vec![false; g.m()];
    for &i in edge_set {
        alive[i] = true;
        let e = g.edges[i];
        degree[e.u] += 1;
        degree[e.v] += 1;
    }
    let adj = g.adjacency();
    let mut stack: Vec<usize> = (0..g.n()).filter(|&v| degree[v] == 1).collect();
    while let Some(x) = stack.pop() {
        if degree[x] != 1 {
            continue;
        }
        for &(y, e) in &adj[x] {
            if alive[e] {
                alive[e] = false;
                degree[x] -= 1;
                degree[y] -= 1;
                if degree[y] == 1 {
                    stack.push(y);
                }
            }
        }
    }
    // Order the remaining edges by walking the cycle.
    let remaining: Vec<usize> = edge_set.iter().copied().filter(|&i| alive[i]).collect();
    let Some(&first) = remaining.first() else {
        return remaining;
    };
    let mut order = vec![first];
    let start = g.edges[first].u;
    let mut at = g.edges[first].v;
    let mut last = first;
    while at != start {
        let &(next_v, next_e) = adj[at]
            .iter()
            .find(|&&(_, e)| alive[e] && e != last)
            .expect("cycle continues");
        order.push(next_e);
        last = next_e;
        at = next_v;
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{RatMatrix, Rational};

    fn parse(s: &str) -> SignedGraph {
        SignedGraph::from_edge_list(s).unwrap()
    }

    #[test]
    fn canonical_positive_edge() {
        let g = parse("1 2 +");
        let e = g.edges()[0];
        assert_eq!((e.eta_u(), e.eta_v()), (Sign::Plus, Sign::Minus));
        let g = parse("2 1 +");
        let e = g.edges()[0];
        assert_eq!((e.eta_u(), e.eta_v()), (Sign::Minus, Sign::Plus));
    }

    #[test]
    fn explicit_negative_edge() {
        let g = parse("1 2 - 1 1");
        let e = g.edges()[0];
        assert_eq!(e.sign(), Sign::Minus);
        assert_eq!((e.eta_u(), e.eta_v()), (Sign::Plus, Sign::Plus));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            SignedGraph::from_edge_list("1 2 - -1 1"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(SignedGraph::from_edge_list("").is_err());
        assert!(SignedGraph::from_edge_list("# only a comment\n\n").is_err());
        assert!(matches!(
            SignedGraph::from_edge_list("1 1 +"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            SignedGraph::from_edge_list("1 2 +\n2 1 -"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(SignedGraph::from_edge_list("1 2 x").is_err());
        assert!(SignedGraph::from_edge_list("0 2 +").is_err());
        assert!(SignedGraph::from_edge_list("n 2\n1 3 +").is_err());
        assert!(SignedGraph::from_edge_list("1 2").is_err());
    }

    #[test]
    fn header_comments_and_sign_spellings() {
        let g = parse("# a path\nn 4\n\n1 2 +1 # trailing\n2 3 -1\n3 4 1\n");
        assert_eq!(g.n(), 4);
        assert_eq!(g.m(), 3);
        assert_eq!(
            g.edges().iter().map(|e| e.sign()).collect::<Vec<_>>(),
            vec![Sign::Plus, Sign::Minus, Sign::Plus]
        );
        assert_eq!(parse("n 1").n(), 1);
    }

    #[test]
    fn edge_list_round_trip() {
        let g = parse("1 3 +\n3 2 - -1 -1\n2 4 + -1 1");
        assert_eq!(parse(&g.to_edge_list()), g);
    }

    #[test]
    fn incidence_of_single_positive_edge() {
        let n: RatMatrix = parse("1 2 +").incidence();
        assert_eq!(n, RatMatrix::from_int_rows(&[[1], [-1]]));
    }

    #[test]
    fn incidence_to_graph_examples() {
        let g = incidence_to_graph(&RatMatrix::from_int_rows(&[[1], [-1]])).unwrap();
        assert_eq!(g.edges()[0].sign(), Sign::Plus);
        let g = incidence_to_graph(&RatMatrix::from_int_rows(&[[1], [1]])).unwrap();
        let e = g.edges()[0];
        assert_eq!((e.sign(), e.eta_u(), e.eta_v()), (Sign::Minus, Sign::Plus, Sign::Plus));
        assert!(incidence_to_graph(&RatMatrix::from_int_rows(&[[1], [1], [1]])).is_err());
        assert!(incidence_to_graph(&RatMatrix::from_int_rows(&[[2], [1]])).is_err());
        assert!(incidence_to_graph(&RatMatrix::from_int_rows(&[[1, 1], [1, -1]])).is_err());
    }

    #[test]
    fn balance_examples() {
        assert!(parse("1 2 -\n2 3 -\n2 4 +").is_balanced().unwrap());
        let triangle = parse("1 2 +\n2 3 +\n1 3 -");
        match triangle.balance().unwrap() {
            Balance::Unbalanced { cycle } => {
                let mut c = cycle.clone();
                c.sort();
                assert_eq!(c, vec![0, 1, 2]);
            }
            other => panic!("expected unbalanced, got {other:?}"),
        }
        assert!(parse("1 2 -\n2 3 -\n1 3 +").is_balanced().unwrap());
        assert_eq!(parse("n 3\n1 2 +").balance(), Err(Error::Disconnected));
    }

    #[test]
    fn witness_cycle_has_negative_sign() {
        let g = parse("1 2 +\n2 3 -\n3 4 +\n4 5 +\n5 1 +\n2 5 +\n3 5 +");
        let Balance::Unbalanced { cycle } = g.balance().unwrap() else {
            panic!("graph is unbalanced");
        };
        let product = cycle.iter().fold(Sign::Plus, |acc, &i| acc * g.edges()[i].sign());
        assert_eq!(product, Sign::Minus);
        // consecutive edges share a vertex and the walk closes up
        let sub = g.subgraph(&cycle).unwrap();
        for v in 0..g.n() {
            let d = sub.edges().iter().filter(|e| e.touches(v)).count();
            assert!(d == 0 || d == 2);
        }
    }

    #[test]
    fn path_sign_examples() {
        let s: RatMatrix = parse("1 2 +\n1 3 +\n1 4 +").path_sign_matrix().unwrap();
        assert!(s.entries().iter().all(|x| *x == Rational::from_i128(1)));
        let s: RatMatrix = parse("1 2 -\n2 3 +").path_sign_matrix().unwrap();
        assert_eq!(s[(0, 2)], Rational::from_i128(-1));
        assert_eq!(s[(1, 2)], Rational::from_i128(1));
        assert!(parse("1 2 +\n2 3 +\n1 3 -").path_sign_matrix::<Rational>().is_err());
    }

    #[test]
    fn laplacian_examples() {
        let l: RatMatrix = parse("1 2 +").laplacian();
        assert_eq!(l, RatMatrix::from_int_rows(&[[1, -1], [-1, 1]]));
        let l: RatMatrix = parse("1 2 -").laplacian();
        assert_eq!(l, RatMatrix::from_int_rows(&[[1, 1], [1, 1]]));
    }

    #[test]
    fn unique_cycle_of_tadpole() {
        let g = parse("1 2 +\n2 3 +\n3 1 -\n3 4 +\n4 5 -");
        let mut c = g.unique_cycle().unwrap();
        c.sort();
        assert_eq!(c, vec![0, 1, 2]);
        assert_eq!(parse("1 2 +\n2 3 +").unique_cycle(), Err(Error::NotUnicyclic));
    }

    #[test]
    fn switching_flips_crossing_edges() {
        let g = parse("1 2 +\n2 3 -\n1 3 -");
        let s = g.switched(&[0]);
        assert_eq!(s.edges()[0].sign(), Sign::Minus);
        assert_eq!(s.edges()[1].sign(), Sign::Minus);
        assert_eq!(s.edges()[2].sign(), Sign::Plus);
        // switching is conjugation of L by a ±1 diagonal
        let l: RatMatrix = g.laplacian();
        let ls: RatMatrix = s.laplacian();
        let d = RatMatrix::from_int_rows(&[[-1, 0, 0], [0, 1, 0], [0, 0, 1]]);
        assert_eq!(d.multiply(&l).unwrap().multiply(&d).unwrap(), ls);
    }

    #[test]
    fn head_and_tail_endpoints() {
        let e = SignedEdge::new(0, 1, Sign::Plus);
        assert_eq!((e.tail(), e.head()), (0, 1));
        assert_eq!((e.flipped().tail(), e.flipped().head()), (1, 0));
        let e = SignedEdge::with_eta(5, 2, Sign::Minus, Sign::Minus, Sign::Minus).unwrap();
        assert_eq!((e.tail(), e.head()), (2, 5));
    }
}
