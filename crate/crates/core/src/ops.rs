//! Explicit constructions of the graph operations.
//!
//! Every constructor materializes the full result graph so that its indices
//! can be computed directly from degrees. Vertex labelings are fixed:
//!
//! * Binary products on `V(G1) x V(G2)` map the pair `(a, b)` to
//!   `a * n2 + b` (see [`PairIndexing`]). k-ary Cartesian products are left
//!   folds of the binary product.
//! * Union, join, link and bridge place operand `i` at an offset equal to
//!   the total order of the operands before it.
//! * Corona keeps `G1` on `0..n1` and puts vertex `b` of the `i`-th copy of
//!   `G2` at `n1 + i * n2 + b`.
//! * Splice keeps `G1` as is and appends the non-root vertices of `G2` in
//!   index order; the root of `G2` is merged into the root of `G1`.
//!
//! In debug builds each constructor checks the per-vertex degree rule of its
//! operation against the constructed graph. The rules themselves live in
//! [`degree_rules`] so tests can check them independently.

use crate::error::{Error, Result};
use crate::graph::{Graph, RootedGraph};

/// Row-major indexing of the pair vertex set `[0, n1) x [0, n2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairIndexing {
    pub n1: usize,
    pub n2: usize,
}

impl PairIndexing {
    pub fn new(n1: usize, n2: usize) -> Self {
        PairIndexing { n1, n2 }
    }

    pub fn len(&self) -> usize {
        self.n1 * self.n2
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn index(&self, a: usize, b: usize) -> usize {
        debug_assert!(a < self.n1 && b < self.n2);
        a * self.n2 + b
    }

    pub fn split(&self, v: usize) -> (usize, usize) {
        (v / self.n2, v % self.n2)
    }
}

/// A nonempty subset `U` of the vertices of a second operand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSubset {
    members: Vec<usize>,
    mask: Vec<bool>,
}

impl VertexSubset {
    pub fn new<I: IntoIterator<Item = usize>>(members: I, n2: usize) -> Result<VertexSubset> {
        let mut mask = vec![false; n2];
        for v in members {
            if v >= n2 {
                return Err(Error::VertexOutOfRange { vertex: v, n: n2 });
            }
            mask[v] = true;
        }
        let members: Vec<usize> = (0..n2).filter(|&v| mask[v]).collect();
        if members.is_empty() {
            return Err(Error::EmptySubset);
        }
        Ok(VertexSubset { members, mask })
    }

    /// All of `0..n2`.
    pub fn full(n2: usize) -> Result<VertexSubset> {
        VertexSubset::new(0..n2, n2)
    }

    pub fn singleton(v: usize, n2: usize) -> Result<VertexSubset> {
        VertexSubset::new([v], n2)
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.mask.get(v).copied().unwrap_or(false)
    }

    /// Size of the ground set `V(G2)` this subset was validated against.
    pub fn ground_size(&self) -> usize {
        self.mask.len()
    }
}

/// Degree of a vertex of each operation result, from operand degrees.
pub mod degree_rules {
    pub fn join(d: usize, n: usize, n_i: usize) -> usize {
        d + n - n_i
    }

    pub fn cartesian(d1: usize, d2: usize) -> usize {
        d1 + d2
    }

    pub fn composition(n2: usize, d1: usize, d2: usize) -> usize {
        n2 * d1 + d2
    }

    pub fn tensor(d1: usize, d2: usize) -> usize {
        d1 * d2
    }

    pub fn strong(d1: usize, d2: usize) -> usize {
        d1 + d2 + d1 * d2
    }

    /// Corona: `G1` vertices gain `n2`, copy vertices gain one.
    pub fn corona_base(d1: usize, n2: usize) -> usize {
        d1 + n2
    }

    pub fn corona_copy(d2: usize) -> usize {
        d2 + 1
    }

    pub fn hierarchical(d1: usize, d2: usize, in_subset: bool) -> usize {
        if in_subset {
            d1 + d2
        } else {
            d2
        }
    }

    pub fn disjunction(n1: usize, n2: usize, d1: usize, d2: usize) -> usize {
        n2 * d1 + n1 * d2 - d1 * d2
    }

    pub fn symmetric_difference(n1: usize, n2: usize, d1: usize, d2: usize) -> usize {
        n2 * d1 + n1 * d2 - 2 * d1 * d2
    }
}

fn check_degrees(g: &Graph, expected: impl Fn(usize) -> usize) {
    if cfg!(debug_assertions) {
        for (v, &d) in g.degrees().iter().enumerate() {
            assert_eq!(d, expected(v), "degree rule violated at vertex {v}");
        }
    }
}

fn require_nonempty(g: &Graph) -> Result<()> {
    if g.order() == 0 {
        Err(Error::EmptyOperand)
    } else {
        Ok(())
    }
}

fn offsets(gs: &[&Graph]) -> Vec<usize> {
    gs.iter()
        .scan(0, |acc, g| {
            let start = *acc;
            *acc += g.order();
            Some(start)
        })
        .collect()
}

fn union_edges(gs: &[&Graph], offs: &[usize]) -> Vec<(usize, usize)> {
    gs.iter()
        .zip(offs)
        .flat_map(|(g, &off)| g.edges().iter().map(move |&(u, v)| (u + off, v + off)))
        .collect()
}

/// Disjoint union; operand `i` is shifted by the orders of operands `0..i`.
pub fn disjoint_union(gs: &[Graph]) -> Result<Graph> {
    if gs.is_empty() {
        return Err(Error::NoOperands);
    }
    let refs: Vec<&Graph> = gs.iter().collect();
    let offs = offsets(&refs);
    let n = gs.iter().map(Graph::order).sum();
    Graph::new(n, union_edges(&refs, &offs))
}

/// Join: the disjoint union plus every edge between distinct operands.
pub fn join(gs: &[Graph]) -> Result<Graph> {
    if gs.is_empty() {
        return Err(Error::NoOperands);
    }
    let refs: Vec<&Graph> = gs.iter().collect();
    let offs = offsets(&refs);
    let n: usize = gs.iter().map(Graph::order).sum();
    let mut edges = union_edges(&refs, &offs);
    for i in 0..gs.len() {
        for j in i + 1..gs.len() {
            for u in 0..gs[i].order() {
                for v in 0..gs[j].order() {
                    edges.push((offs[i] + u, offs[j] + v));
                }
            }
        }
    }
    let g = Graph::new(n, edges)?;
    check_degrees(&g, |v| {
        let i = offs.partition_point(|&o| o <= v) - 1;
        degree_rules::join(gs[i].degrees()[v - offs[i]], n, gs[i].order())
    });
    Ok(g)
}

fn cartesian_pair(g1: &Graph, g2: &Graph) -> Result<Graph> {
    require_nonempty(g1)?;
    require_nonempty(g2)?;
    let idx = PairIndexing::new(g1.order(), g2.order());
    let mut edges = Vec::with_capacity(g1.size() * g2.order() + g2.size() * g1.order());
    for &(a, c) in g1.edges() {
        for b in 0..g2.order() {
            edges.push((idx.index(a, b), idx.index(c, b)));
        }
    }
    for a in 0..g1.order() {
        for &(b, d) in g2.edges() {
            edges.push((idx.index(a, b), idx.index(a, d)));
        }
    }
    let g = Graph::new(idx.len(), edges)?;
    check_degrees(&g, |v| {
        let (a, b) = idx.split(v);
        degree_rules::cartesian(g1.degrees()[a], g2.degrees()[b])
    });
    Ok(g)
}

/// Cartesian product of one or more graphs, folded from the left.
pub fn cartesian_product(gs: &[Graph]) -> Result<Graph> {
    let (first, rest) = gs.split_first().ok_or(Error::NoOperands)?;
    require_nonempty(first)?;
    rest.iter()
        .try_fold(first.clone(), |acc, g| cartesian_pair(&acc, g))
}

/// Composition (lexicographic product) `G1[G2]`.
pub fn composition(g1: &Graph, g2: &Graph) -> Result<Graph> {
    require_nonempty(g1)?;
    require_nonempty(g2)?;
    let idx = PairIndexing::new(g1.order(), g2.order());
    let mut edges = Vec::new();
    for &(a, c) in g1.edges() {
        for b in 0..g2.order() {
            for d in 0..g2.order() {
                edges.push((idx.index(a, b), idx.index(c, d)));
            }
        }
    }
    for a in 0..g1.order() {
        for &(b, d) in g2.edges() {
            edges.push((idx.index(a, b), idx.index(a, d)));
        }
    }
    let g = Graph::new(idx.len(), edges)?;
    check_degrees(&g, |v| {
        let (a, b) = idx.split(v);
        degree_rules::composition(g2.order(), g1.degrees()[a], g2.degrees()[b])
    });
    Ok(g)
}

fn tensor_edges(g1: &Graph, g2: &Graph, idx: PairIndexing) -> Vec<(usize, usize)> {
    let mut edges = Vec::with_capacity(2 * g1.size() * g2.size());
    for &(a, c) in g1.edges() {
        for &(b, d) in g2.edges() {
            edges.push((idx.index(a, b), idx.index(c, d)));
            edges.push((idx.index(a, d), idx.index(c, b)));
        }
    }
    edges
}

/// Tensor (Kronecker) product `G1 x G2`. The result may be disconnected.
pub fn tensor_product(g1: &Graph, g2: &Graph) -> Result<Graph> {
    require_nonempty(g1)?;
    require_nonempty(g2)?;
    let idx = PairIndexing::new(g1.order(), g2.order());
    let g = Graph::new(idx.len(), tensor_edges(g1, g2, idx))?;
    check_degrees(&g, |v| {
        let (a, b) = idx.split(v);
        degree_rules::tensor(g1.degrees()[a], g2.degrees()[b])
    });
    Ok(g)
}

/// Strong product: union of the Cartesian and tensor adjacencies.
pub fn strong_product(g1: &Graph, g2: &Graph) -> Result<Graph> {
    let cart = cartesian_pair(g1, g2)?;
    let idx = PairIndexing::new(g1.order(), g2.order());
    let edges = cart
        .edges()
        .iter()
        .copied()
        .chain(tensor_edges(g1, g2, idx));
    let g = Graph::new(idx.len(), edges)?;
    check_degrees(&g, |v| {
        let (a, b) = idx.split(v);
        degree_rules::strong(g1.degrees()[a], g2.degrees()[b])
    });
    Ok(g)
}

/// Corona `G1 o G2`: copy `i` of `G2` is joined to vertex `i` of `G1`.
pub fn corona(g1: &Graph, g2: &Graph) -> Result<Graph> {
    require_nonempty(g1)?;
    let (n1, n2) = (g1.order(), g2.order());
    let copy = |i: usize, b: usize| n1 + i * n2 + b;
    let mut edges: Vec<(usize, usize)> = g1.edges().to_vec();
    for i in 0..n1 {
        edges.extend(g2.edges().iter().map(|&(b, d)| (copy(i, b), copy(i, d))));
        edges.extend((0..n2).map(|b| (i, copy(i, b))));
    }
    let g = Graph::new(n1 * (n2 + 1), edges)?;
    debug_assert_eq!(g.size(), g1.size() + n1 * g2.size() + n1 * n2);
    check_degrees(&g, |v| {
        if v < n1 {
            degree_rules::corona_base(g1.degrees()[v], n2)
        } else {
            degree_rules::corona_copy(g2.degrees()[(v - n1) % n2])
        }
    });
    Ok(g)
}

/// `t` pendant vertices attached to every vertex; the corona with `K̄t`.
pub fn t_thorn(g: &Graph, t: usize) -> Result<Graph> {
    if t == 0 {
        return Err(Error::ZeroThorns);
    }
    corona(g, &Graph::empty(t))
}

/// Generalized hierarchical product `G1 Π G2(U)`.
///
/// `(a, b) ~ (a, d)` when `bd` is an edge of `G2`, and `(a, b) ~ (c, b)`
/// when `ac` is an edge of `G1` and `b` is in `U`.
pub fn hierarchical(g1: &Graph, g2: &Graph, u: &VertexSubset) -> Result<Graph> {
    require_nonempty(g1)?;
    require_nonempty(g2)?;
    if u.ground_size() != g2.order() {
        if let Some(&v) = u.members().iter().find(|&&v| v >= g2.order()) {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: g2.order(),
            });
        }
    }
    let idx = PairIndexing::new(g1.order(), g2.order());
    let mut edges = Vec::new();
    for &(a, c) in g1.edges() {
        for &b in u.members() {
            edges.push((idx.index(a, b), idx.index(c, b)));
        }
    }
    for a in 0..g1.order() {
        for &(b, d) in g2.edges() {
            edges.push((idx.index(a, b), idx.index(a, d)));
        }
    }
    let g = Graph::new(idx.len(), edges)?;
    check_degrees(&g, |v| {
        let (a, b) = idx.split(v);
        degree_rules::hierarchical(g1.degrees()[a], g2.degrees()[b], u.contains(b))
    });
    Ok(g)
}

/// Cluster product `G1{G2}`: the hierarchical product with `U = {root}`.
pub fn cluster(g1: &Graph, g2: &RootedGraph) -> Result<Graph> {
    let u = VertexSubset::singleton(g2.root(), g2.graph().order())?;
    hierarchical(g1, g2.graph(), &u)
}

fn pairwise_product(
    g1: &Graph,
    g2: &Graph,
    adjacent: impl Fn(bool, bool) -> bool,
) -> Result<Graph> {
    require_nonempty(g1)?;
    require_nonempty(g2)?;
    let idx = PairIndexing::new(g1.order(), g2.order());
    let (adj1, adj2) = (g1.adjacency_matrix(), g2.adjacency_matrix());
    let mut edges = Vec::new();
    for v in 0..idx.len() {
        let (a, b) = idx.split(v);
        for w in v + 1..idx.len() {
            let (c, d) = idx.split(w);
            if adjacent(adj1[a][c], adj2[b][d]) {
                edges.push((v, w));
            }
        }
    }
    Graph::new(idx.len(), edges)
}

/// Disjunction: `(a, b) ~ (c, d)` iff `ac` is in `E1` or `bd` is in `E2`.
pub fn disjunction(g1: &Graph, g2: &Graph) -> Result<Graph> {
    let g = pairwise_product(g1, g2, |e1, e2| e1 || e2)?;
    let idx = PairIndexing::new(g1.order(), g2.order());
    check_degrees(&g, |v| {
        let (a, b) = idx.split(v);
        degree_rules::disjunction(g1.order(), g2.order(), g1.degrees()[a], g2.degrees()[b])
    });
    Ok(g)
}

/// Symmetric difference: adjacent iff exactly one coordinate pair is an edge.
pub fn symmetric_difference(g1: &Graph, g2: &Graph) -> Result<Graph> {
    let g = pairwise_product(g1, g2, |e1, e2| e1 != e2)?;
    let idx = PairIndexing::new(g1.order(), g2.order());
    check_degrees(&g, |v| {
        let (a, b) = idx.split(v);
        degree_rules::symmetric_difference(
            g1.order(),
            g2.order(),
            g1.degrees()[a],
            g2.degrees()[b],
        )
    });
    Ok(g)
}

/// Splice: identify the root of `G2` with the root of `G1`.
pub fn splice(g1: &RootedGraph, g2: &RootedGraph) -> Result<Graph> {
    let (a, b) = (g1.graph(), g2.graph());
    let n1 = a.order();
    let (r1, r2) = (g1.root(), g2.root());
    let relabel = |v: usize| match v.cmp(&r2) {
        std::cmp::Ordering::Less => n1 + v,
        std::cmp::Ordering::Equal => r1,
        std::cmp::Ordering::Greater => n1 + v - 1,
    };
    let edges = a
        .edges()
        .iter()
        .copied()
        .chain(b.edges().iter().map(|&(u, v)| (relabel(u), relabel(v))));
    let g = Graph::new(n1 + b.order() - 1, edges)?;
    check_degrees(&g, |v| {
        if v == r1 {
            a.degrees()[r1] + b.degrees()[r2]
        } else if v < n1 {
            a.degrees()[v]
        } else {
            let orig = v - n1;
            b.degrees()[if orig < r2 { orig } else { orig + 1 }]
        }
    });
    Ok(g)
}

/// Link: join the two roots by a new edge.
pub fn link(g1: &RootedGraph, g2: &RootedGraph) -> Result<Graph> {
    let (a, b) = (g1.graph(), g2.graph());
    let n1 = a.order();
    let edges = a
        .edges()
        .iter()
        .copied()
        .chain(b.edges().iter().map(|&(u, v)| (u + n1, v + n1)))
        .chain([(g1.root(), n1 + g2.root())]);
    let g = Graph::new(n1 + b.order(), edges)?;
    debug_assert_eq!(g.size(), a.size() + b.size() + 1);
    check_degrees(&g, |v| {
        if v < n1 {
            a.degrees()[v] + usize::from(v == g1.root())
        } else {
            b.degrees()[v - n1] + usize::from(v - n1 == g2.root())
        }
    });
    Ok(g)
}

/// Bridge graph: consecutive roots joined by an edge.
pub fn bridge(gs: &[RootedGraph]) -> Result<Graph> {
    if gs.is_empty() {
        return Err(Error::NoOperands);
    }
    let refs: Vec<&Graph> = gs.iter().map(RootedGraph::graph).collect();
    let offs = offsets(&refs);
    let n = refs.iter().map(|g| g.order()).sum();
    let mut edges = union_edges(&refs, &offs);
    let roots: Vec<usize> = gs.iter().zip(&offs).map(|(g, off)| g.root() + off).collect();
    edges.extend(roots.windows(2).map(|w| (w[0], w[1])));
    let g = Graph::new(n, edges)?;
    debug_assert_eq!(
        g.size(),
        refs.iter().map(|g| g.size()).sum::<usize>() + gs.len() - 1
    );
    check_degrees(&g, |v| {
        let i = offs.partition_point(|&o| o <= v) - 1;
        let base = refs[i].degrees()[v - offs[i]];
        if v != roots[i] {
            base
        } else {
            base + usize::from(i > 0) + usize::from(i + 1 < gs.len())
        }
    });
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{f_index, make_graph};

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    fn f(g: &Graph) -> u128 {
        f_index(g).unwrap().get()
    }

    fn rooted(g: Graph, r: usize) -> RootedGraph {
        RootedGraph::new(g, r).unwrap()
    }

    #[test]
    fn pair_indexing_is_row_major() {
        let idx = PairIndexing::new(3, 4);
        assert_eq!(idx.index(2, 1), 9);
        assert_eq!(idx.split(9), (2, 1));
        let all: Vec<_> = (0..idx.len()).map(|v| idx.split(v)).collect();
        assert_eq!(all.len(), 12);
        assert!(all.iter().all(|&(a, b)| idx.index(a, b) < 12));
    }

    #[test]
    fn union_examples() {
        let g = disjoint_union(&[path(2), path(3)]).unwrap();
        assert_eq!((g.order(), g.size(), f(&g)), (5, 3, 12));
        assert_eq!(disjoint_union(&[cycle(3)]).unwrap(), cycle(3));
        assert_eq!(
            disjoint_union(&[Graph::empty(1), Graph::empty(1)]).unwrap(),
            Graph::empty(2)
        );
        assert_eq!(disjoint_union(&[]), Err(Error::NoOperands));
    }

    #[test]
    fn join_examples() {
        let k4 = join(&[path(2), path(2)]).unwrap();
        assert_eq!(k4, complete(4));
        assert_eq!(f(&k4), 108);
        let w5 = join(&[Graph::empty(1), cycle(5)]).unwrap();
        assert_eq!(f(&w5), 260);
        assert_eq!(join(&[cycle(4)]).unwrap(), cycle(4));
    }

    #[test]
    fn cartesian_examples() {
        let k2 = path(2);
        assert_eq!(f(&cartesian_product(&[k2.clone(), k2.clone(), k2]).unwrap()), 216);
        assert_eq!(f(&cartesian_product(&[path(4), cycle(5)]).unwrap()), 910);
        let c3 = cycle(3);
        assert_eq!(
            f(&cartesian_product(&[c3.clone(), c3.clone(), c3]).unwrap()),
            5832
        );
        assert_eq!(
            cartesian_product(&[path(2), Graph::empty(0)]),
            Err(Error::EmptyOperand)
        );
    }

    #[test]
    fn composition_examples() {
        assert_eq!(f(&composition(&path(3), &path(2)).unwrap()), 358);
        assert_eq!(f(&composition(&cycle(3), &path(2)).unwrap()), 750);
        assert_eq!(composition(&Graph::empty(1), &cycle(5)).unwrap(), cycle(5));
        assert_eq!(
            composition(&Graph::empty(0), &path(2)),
            Err(Error::EmptyOperand)
        );
    }

    #[test]
    fn tensor_examples() {
        assert_eq!(f(&tensor_product(&path(3), &path(3)).unwrap()), 100);
        assert_eq!(f(&tensor_product(&cycle(4), &cycle(3)).unwrap()), 768);
        let two_edges = tensor_product(&path(2), &path(2)).unwrap();
        assert_eq!(two_edges, make_graph(4, &[(0, 3), (1, 2)]).unwrap());
        assert_eq!(f(&two_edges), 4);
    }

    #[test]
    fn strong_examples() {
        assert_eq!(strong_product(&path(2), &path(2)).unwrap(), complete(4));
        assert_eq!(strong_product(&Graph::empty(1), &cycle(4)).unwrap(), cycle(4));
        let g = strong_product(&path(3), &path(2)).unwrap();
        assert_eq!(g.degrees(), &[3, 3, 5, 5, 3, 3]);
        assert_eq!(f(&g), 358);
    }

    #[test]
    fn corona_examples() {
        let b2 = corona(&path(2), &Graph::empty(2)).unwrap();
        assert_eq!(f(&b2), 58);
        let t23 = corona(&path(2), &path(2)).unwrap();
        assert_eq!(f(&t23), 86);
        let p4 = corona(&path(2), &Graph::empty(1)).unwrap();
        assert_eq!(f(&p4), 18);
        assert_eq!(
            corona(&Graph::empty(0), &path(2)),
            Err(Error::EmptyOperand)
        );
    }

    #[test]
    fn thorn_examples() {
        assert_eq!(f(&t_thorn(&cycle(3), 2).unwrap()), 198);
        assert_eq!(f(&t_thorn(&path(3), 2).unwrap()), 124);
        assert_eq!(t_thorn(&Graph::empty(1), 1).unwrap(), path(2));
        assert_eq!(t_thorn(&path(3), 0), Err(Error::ZeroThorns));
    }

    #[test]
    fn hierarchical_examples() {
        let u = VertexSubset::singleton(0, 3).unwrap();
        assert_eq!(f(&hierarchical(&path(3), &path(3), &u).unwrap()), 70);
        assert_eq!(f(&hierarchical(&cycle(3), &path(3), &u).unwrap()), 108);
        let full = VertexSubset::full(4).unwrap();
        assert_eq!(
            hierarchical(&path(3), &cycle(4), &full).unwrap(),
            cartesian_product(&[path(3), cycle(4)]).unwrap()
        );
    }

    #[test]
    fn vertex_subset_validation() {
        assert_eq!(VertexSubset::new([], 3), Err(Error::EmptySubset));
        assert_eq!(
            VertexSubset::new([0, 3], 3),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        let u = VertexSubset::new([2, 0, 2], 3).unwrap();
        assert_eq!(u.members(), &[0, 2]);
        assert!(u.contains(2) && !u.contains(1));
        let wrong_ground = VertexSubset::new([4], 5).unwrap();
        assert_eq!(
            hierarchical(&path(2), &path(3), &wrong_ground),
            Err(Error::VertexOutOfRange { vertex: 4, n: 3 })
        );
    }

    #[test]
    fn cluster_examples() {
        assert_eq!(f(&cluster(&path(3), &rooted(path(3), 0)).unwrap()), 70);
        assert_eq!(f(&cluster(&cycle(3), &rooted(path(3), 0)).unwrap()), 108);
        assert_eq!(
            cluster(&cycle(5), &rooted(Graph::empty(1), 0)).unwrap(),
            cycle(5)
        );
    }

    #[test]
    fn disjunction_examples() {
        assert_eq!(disjunction(&path(2), &path(2)).unwrap(), complete(4));
        assert_eq!(
            disjunction(&Graph::empty(2), &Graph::empty(2)).unwrap(),
            Graph::empty(4)
        );
        let g = disjunction(&path(2), &Graph::empty(2)).unwrap();
        assert_eq!(g.degrees(), &[2, 2, 2, 2]);
        assert_eq!(f(&g), 32);
    }

    #[test]
    fn symmetric_difference_examples() {
        let c4 = symmetric_difference(&path(2), &path(2)).unwrap();
        assert_eq!(c4.degrees(), &[2, 2, 2, 2]);
        assert_eq!(f(&c4), 32);
        assert_eq!(
            symmetric_difference(&Graph::empty(2), &Graph::empty(2)).unwrap(),
            Graph::empty(4)
        );
        let g = symmetric_difference(&path(2), &Graph::empty(2)).unwrap();
        assert_eq!(g, disjunction(&path(2), &Graph::empty(2)).unwrap());
        assert_eq!(f(&g), 32);
    }

    #[test]
    fn splice_examples() {
        let bowtie = splice(&rooted(cycle(3), 0), &rooted(cycle(3), 0)).unwrap();
        assert_eq!(bowtie.order(), 5);
        assert_eq!(bowtie.degrees()[0], 4);
        assert_eq!(f(&bowtie), 96);

        let g = make_graph(4, &[(0, 1), (1, 2), (1, 3)]).unwrap();
        assert_eq!(
            splice(&rooted(Graph::empty(1), 0), &rooted(g.clone(), 0)).unwrap(),
            g
        );
        let p3 = splice(&rooted(path(2), 0), &rooted(path(2), 0)).unwrap();
        assert_eq!(f(&p3), 10);
        assert_eq!(p3.degrees(), &[2, 1, 1]);
    }

    #[test]
    fn link_examples() {
        assert_eq!(f(&link(&rooted(cycle(3), 0), &rooted(cycle(3), 0)).unwrap()), 86);
        assert_eq!(
            link(&rooted(Graph::empty(1), 0), &rooted(Graph::empty(1), 0)).unwrap(),
            path(2)
        );
        assert_eq!(f(&link(&rooted(path(2), 0), &rooted(path(2), 0)).unwrap()), 18);
    }

    #[test]
    fn bridge_examples() {
        let b2 = bridge(&[rooted(path(3), 1), rooted(path(3), 1)]).unwrap();
        assert_eq!(f(&b2), 58);
        let t = bridge(&[rooted(cycle(3), 0), rooted(cycle(3), 0)]).unwrap();
        assert_eq!(f(&t), 86);
        assert_eq!(bridge(&[rooted(cycle(4), 2)]).unwrap(), cycle(4));
        assert_eq!(bridge(&[]), Err(Error::NoOperands));

        let b3 = bridge(&[rooted(path(3), 1), rooted(path(3), 1), rooted(path(3), 1)]).unwrap();
        assert_eq!(b3.degrees()[4], 4);
        assert_eq!(f(&b3), 124);
    }

    #[test]
    fn non_commutative_operations_witness() {
        let (a, b) = (path(3), path(2));
        assert_ne!(
            f(&composition(&a, &b).unwrap()),
            f(&composition(&b, &a).unwrap())
        );
        assert_ne!(f(&corona(&a, &b).unwrap()), f(&corona(&b, &a).unwrap()));
    }
}
