use proptest::prelude::*;
use qext_core::Graph;

/// Graphs on `lo..=hi` vertices with independent random edges.
pub fn graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(
            move |bits| {
                let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
                Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
            },
        )
    })
}

/// A graph with a vertex subset given as a bitmask.
pub fn graph_and_subset(lo: usize, hi: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(lo, hi).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), proptest::collection::vec(any::<bool>(), n)).prop_map(|(g, bits)| {
            (
                g,
                bits.iter()
                    .enumerate()
                    .filter(|(_, b)| **b)
                    .map(|(i, _)| i)
                    .collect(),
            )
        })
    })
}

/// A graph with a permutation of its vertices.
pub fn graph_and_perm(lo: usize, hi: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(lo, hi).prop_flat_map(|g| {
        let perm: Vec<usize> = (0..g.n()).collect();
        (Just(g), Just(perm).prop_shuffle())
    })
}
