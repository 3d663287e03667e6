#![allow(dead_code)]

use findex::verify::{random_graph, Probability};
use findex::Graph;
use proptest::prelude::*;

/// Arbitrary simple graph on `lo..=hi` vertices.
pub fn graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let all = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges = all.zip(bits).filter(|(_, keep)| *keep).map(|(e, _)| e);
            Graph::new(n, edges).unwrap()
        })
    })
}

pub const PROBABILITIES: [(u32, u32); 3] = [(1, 5), (1, 2), (4, 5)];

/// The `i`-th of a deterministic stream of random graphs on `lo..=hi`
/// vertices with mixed edge densities.
pub fn sample(i: u64, lo: usize, hi: usize) -> Graph {
    let span = (hi - lo + 1) as u64;
    let n = lo + (i.wrapping_mul(0x9e37_79b9) % span) as usize;
    let (num, den) = PROBABILITIES[(i % 3) as usize];
    random_graph(n, Probability::new(num, den).unwrap(), i)
}
