mod common;

use common::strategy::{graph, graph_and_perm, graph_and_subset};
use common::{brute_cycle, brute_path};
use proptest::prelude::*;
use qext_core::graph::{edge_counts, graph6, isomorphic, neighbor_degree_sum};
use qext_core::subgraph::{has_cycle_of_length, has_path, PathQuery};
use qext_core::{Error, VertexSet};

proptest! {
    #[test]
    fn graph6_round_trips(g in graph(1, 40)) {
        let s = graph6::encode(&g);
        prop_assert_eq!(graph6::decode(&s).unwrap(), g);
    }

    #[test]
    fn neighbour_degree_sums((g, _) in graph_and_subset(1, 30)) {
        for u in 0..g.n() {
            let nbrs = g.neighbor_set(u);
            let (inside, across) = edge_counts(&g, &nbrs, &nbrs.complement()).unwrap();
            prop_assert_eq!(neighbor_degree_sum(&g, u), 2 * inside + across);
        }
        let total: usize = (0..g.n()).map(|u| neighbor_degree_sum(&g, u)).sum();
        prop_assert_eq!(total, g.degrees().iter().map(|d| d * d).sum::<usize>());
    }

    #[test]
    fn edge_counts_partition((g, xs) in graph_and_subset(1, 30)) {
        let x = VertexSet::from_vertices(g.n(), xs).unwrap();
        let y = x.complement();
        let (ex, exy) = edge_counts(&g, &x, &y).unwrap();
        let (ey, eyx) = edge_counts(&g, &y, &x).unwrap();
        prop_assert_eq!(exy, eyx);
        prop_assert_eq!(ex + ey + exy, g.m());
        if !x.is_empty() {
            prop_assert!(matches!(edge_counts(&g, &x, &x), Err(Error::OverlappingSets)));
        }
    }

    #[test]
    fn relabelling_is_isomorphic((g, perm) in graph_and_perm(1, 10)) {
        let h = g.relabel(&perm).unwrap();
        prop_assert!(isomorphic(&g, &h).unwrap());
        prop_assert_eq!(g.m(), h.m());
    }

    #[test]
    fn cycle_search_matches_backtracking(g in graph(3, 8), len in 3usize..=8) {
        let found = has_cycle_of_length(&g, len);
        prop_assert_eq!(found.is_some(), brute_cycle(&g, len));
        if let Some(c) = found {
            prop_assert_eq!(c.len(), len);
            prop_assert!(c.windows(2).all(|p| g.has_edge(p[0], p[1])) && g.has_edge(c[0], c[len - 1]));
        }
    }

    #[test]
    fn endpoint_paths_match_backtracking((g, ends) in graph_and_subset(1, 8), order in 1usize..=8) {
        let set = VertexSet::from_vertices(g.n(), ends).unwrap();
        let found = has_path(&g, &PathQuery::with_endpoints(order, set.clone()));
        prop_assert_eq!(found.is_some(), brute_path(&g, order, &|a, b| set.contains(a) && set.contains(b)));
        if let Some(p) = found {
            prop_assert_eq!(p.len(), order);
            prop_assert!(set.contains(p[0]) && set.contains(p[order - 1]));
        }
    }
}
