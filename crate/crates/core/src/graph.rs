//! Simple undirected graphs and the degree-based indices computed on them.
//!
//! A [`Graph`] is immutable once built. Edges are kept as a sorted,
//! deduplicated list of `(min, max)` pairs, so two graphs with the same
//! labeling compare equal exactly when their edge sets coincide.
//!
//! Every index is an exact integer. Sums are accumulated with checked
//! arithmetic and overflow is reported as [`Error::Overflow`].

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// An exact nonnegative index value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct IndexValue(u128);

impl IndexValue {
    pub const ZERO: IndexValue = IndexValue(0);

    pub const fn new(value: u128) -> Self {
        IndexValue(value)
    }

    pub const fn get(self) -> u128 {
        self.0
    }

    pub fn checked_add(self, rhs: IndexValue) -> Result<IndexValue> {
        self.0.checked_add(rhs.0).map(IndexValue).ok_or(Error::Overflow)
    }

    pub fn checked_mul(self, rhs: IndexValue) -> Result<IndexValue> {
        self.0.checked_mul(rhs.0).map(IndexValue).ok_or(Error::Overflow)
    }
}

impl From<u64> for IndexValue {
    fn from(v: u64) -> Self {
        IndexValue(v as u128)
    }
}

impl From<usize> for IndexValue {
    fn from(v: usize) -> Self {
        IndexValue(v as u128)
    }
}

impl fmt::Display for IndexValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl PartialEq<u128> for IndexValue {
    fn eq(&self, other: &u128) -> bool {
        self.0 == *other
    }
}

/// A finite simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    degrees: Vec<usize>,
}

impl Graph {
    /// Builds a graph, collapsing duplicate pairs and normalizing each pair
    /// to `(min, max)`.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(Error::VertexOutOfRange { vertex, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        list.dedup();

        let mut degrees = vec![0; n];
        for &(u, v) in &list {
            degrees[u] += 1;
            degrees[v] += 1;
        }
        Ok(Graph {
            n,
            edges: list,
            degrees,
        })
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        Graph {
            n,
            edges: Vec::new(),
            degrees: vec![0; n],
        }
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges in ascending `(min, max)` order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.degrees
            .get(v)
            .copied()
            .ok_or(Error::VertexOutOfRange { vertex: v, n: self.n })
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    /// Dense adjacency matrix, `adj[u][v]` true iff `uv` is an edge.
    pub fn adjacency_matrix(&self) -> Vec<Vec<bool>> {
        let mut adj = vec![vec![false; self.n]; self.n];
        for &(u, v) in &self.edges {
            adj[u][v] = true;
            adj[v][u] = true;
        }
        adj
    }

    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// Returns a copy with the edge `uv` added (a no-op if already present).
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        Graph::new(self.n, self.edges.iter().copied().chain([(u, v)]))
    }
}

/// Builds a graph from a vertex count and a list of pairs.
pub fn make_graph(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
    Graph::new(n, edges.iter().copied())
}

/// A graph together with one distinguished vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedGraph {
    graph: Graph,
    root: usize,
}

impl RootedGraph {
    pub fn new(graph: Graph, root: usize) -> Result<RootedGraph> {
        if root >= graph.order() {
            return Err(Error::VertexOutOfRange {
                vertex: root,
                n: graph.order(),
            });
        }
        Ok(RootedGraph { graph, root })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn root_degree(&self) -> usize {
        self.graph.degrees()[self.root]
    }
}

/// The invariants `(n, m, M1, F)` a closed form needs from an operand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GraphSummary {
    pub n: u64,
    pub m: u64,
    pub m1: IndexValue,
    pub f: IndexValue,
}

impl GraphSummary {
    pub fn new(n: u64, m: u64, m1: u128, f: u128) -> Self {
        GraphSummary {
            n,
            m,
            m1: IndexValue::new(m1),
            f: IndexValue::new(f),
        }
    }
}

impl fmt::Display for GraphSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} m={} M1={} F={}", self.n, self.m, self.m1, self.f)
    }
}

fn power_sum<I: IntoIterator<Item = usize>>(terms: I, exp: u32) -> Result<IndexValue> {
    terms.into_iter().try_fold(IndexValue::ZERO, |acc, d| {
        let term = (d as u128).checked_pow(exp).ok_or(Error::Overflow)?;
        acc.checked_add(IndexValue(term))
    })
}

/// Sum of cubed vertex degrees.
pub fn f_index(g: &Graph) -> Result<IndexValue> {
    power_sum(g.degrees().iter().copied(), 3)
}

/// F-index via the edge form: each edge contributes `d(u)^2 + d(v)^2`.
pub fn f_index_edge_sum(g: &Graph) -> Result<IndexValue> {
    let d = g.degrees();
    g.edges().iter().try_fold(IndexValue::ZERO, |acc, &(u, v)| {
        let pair = power_sum([d[u], d[v]], 2)?;
        acc.checked_add(pair)
    })
}

/// First Zagreb index as a vertex sum of squared degrees.
pub fn first_zagreb_vertex_sum(g: &Graph) -> Result<IndexValue> {
    power_sum(g.degrees().iter().copied(), 2)
}

/// First Zagreb index as an edge sum of `d(u) + d(v)`.
pub fn first_zagreb_edge_sum(g: &Graph) -> Result<IndexValue> {
    let d = g.degrees();
    g.edges().iter().try_fold(IndexValue::ZERO, |acc, &(u, v)| {
        acc.checked_add(IndexValue::from(d[u] + d[v]))
    })
}

/// First Zagreb index. Both summation forms are evaluated and must agree.
pub fn first_zagreb(g: &Graph) -> Result<IndexValue> {
    let by_vertex = first_zagreb_vertex_sum(g)?;
    let by_edge = first_zagreb_edge_sum(g)?;
    assert_eq!(by_vertex, by_edge, "vertex and edge forms of M1 disagree");
    Ok(by_vertex)
}

/// Second Zagreb index: sum over edges of `d(u) * d(v)`.
pub fn second_zagreb(g: &Graph) -> Result<IndexValue> {
    let d = g.degrees();
    g.edges().iter().try_fold(IndexValue::ZERO, |acc, &(u, v)| {
        let term = (d[u] as u128)
            .checked_mul(d[v] as u128)
            .ok_or(Error::Overflow)?;
        acc.checked_add(IndexValue(term))
    })
}

pub fn summarize(g: &Graph) -> Result<GraphSummary> {
    Ok(GraphSummary {
        n: g.order() as u64,
        m: g.size() as u64,
        m1: first_zagreb(g)?,
        f: f_index(g)?,
    })
}

/// True iff the graph has at most one connected component.
pub fn is_connected(g: &Graph) -> bool {
    if g.order() == 0 {
        return true;
    }
    let adj = g.adjacency_lists();
    let mut seen = vec![false; g.order()];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    let mut reached = 1;
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                reached += 1;
                queue.push_back(w);
            }
        }
    }
    reached == g.order()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    #[test]
    fn make_graph_examples() {
        let k1 = make_graph(1, &[]).unwrap();
        assert_eq!((k1.order(), k1.size()), (1, 0));

        let p3 = make_graph(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.degrees(), &[1, 2, 1]);

        let g = make_graph(4, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!((g.order(), g.size()), (4, 1));
        assert_eq!(g.edges(), &[(0, 1)]);
    }

    #[test]
    fn make_graph_rejects_bad_pairs() {
        assert_eq!(
            make_graph(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
        assert_eq!(make_graph(3, &[(1, 1)]), Err(Error::SelfLoop(1)));
    }

    #[test]
    fn degree_queries() {
        let c4 = cycle(4);
        assert!((0..4).all(|v| c4.degree(v) == Ok(2)));
        let k5 = complete(5);
        assert!((0..5).all(|v| k5.degree(v) == Ok(4)));
        assert_eq!(path(3).degree(1), Ok(2));
        assert_eq!(
            path(3).degree(3),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn f_index_examples() {
        assert_eq!(f_index(&cycle(5)).unwrap(), 40);
        assert_eq!(f_index(&path(4)).unwrap(), 18);
        assert_eq!(f_index(&complete(4)).unwrap(), 108);
    }

    #[test]
    fn f_index_edge_sum_examples() {
        assert_eq!(f_index_edge_sum(&path(3)).unwrap(), 10);
        assert_eq!(f_index_edge_sum(&Graph::empty(3)).unwrap(), 0);
        assert_eq!(f_index_edge_sum(&cycle(6)).unwrap(), 48);
    }

    #[test]
    fn zagreb_examples() {
        assert_eq!(first_zagreb(&cycle(5)).unwrap(), 20);
        assert_eq!(first_zagreb(&path(4)).unwrap(), 10);
        assert_eq!(first_zagreb(&Graph::empty(5)).unwrap(), 0);

        assert_eq!(second_zagreb(&path(3)).unwrap(), 4);
        assert_eq!(second_zagreb(&cycle(4)).unwrap(), 16);
        assert_eq!(second_zagreb(&Graph::empty(2)).unwrap(), 0);
    }

    #[test]
    fn summarize_examples() {
        assert_eq!(summarize(&path(3)).unwrap(), GraphSummary::new(3, 2, 6, 10));
        assert_eq!(summarize(&cycle(3)).unwrap(), GraphSummary::new(3, 3, 12, 24));
        assert_eq!(summarize(&Graph::empty(1)).unwrap(), GraphSummary::new(1, 0, 0, 0));
        assert_eq!(summarize(&Graph::empty(0)).unwrap(), GraphSummary::new(0, 0, 0, 0));
    }

    #[test]
    fn connectivity() {
        assert!(is_connected(&path(5)));
        assert!(!is_connected(&Graph::empty(2)));
        assert!(is_connected(&Graph::empty(0)));
        assert!(is_connected(&Graph::empty(1)));
        // K2 x K2 in row-major labeling: (0,0)-(1,1) and (0,1)-(1,0).
        let two_edges = make_graph(4, &[(0, 3), (1, 2)]).unwrap();
        assert!(!is_connected(&two_edges));
    }

    #[test]
    fn overflow_is_reported() {
        let huge = IndexValue::new(u128::MAX);
        assert_eq!(huge.checked_add(IndexValue::new(1)), Err(Error::Overflow));
        assert_eq!(huge.checked_mul(IndexValue::new(2)), Err(Error::Overflow));
        assert_eq!(power_sum([usize::MAX, usize::MAX], 3), Err(Error::Overflow));
    }

    #[test]
    fn rooted_graph_checks_root() {
        assert!(RootedGraph::new(path(3), 2).is_ok());
        assert_eq!(
            RootedGraph::new(path(3), 3),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
    }
}
