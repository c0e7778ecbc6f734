use serde::{Deserialize, Serialize};

use crate::extremal::classify::snk_plus_k_set;
use crate::graph::{construct, isomorphic, FamilySpec, Graph, ISOMORPHISM_CAP};
use crate::spectral::Interval;

/// How a record was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMethod {
    Exhaustive,
    HillClimb,
}

/// Which spectral quantity is maximised.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
#[serde(rename_all = "snake_case")]
pub enum SpectralMode {
    /// Signless Laplacian index, certified.
    #[default]
    Q,
    /// Adjacency spectral radius, float only.
    Mu,
}

/// Best graph found for one `(n, k, forbidden length)` cell.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaximizerRecord {
    pub n: usize,
    pub k: usize,
    pub forbidden_length: usize,
    pub best_graph6: String,
    /// Enclosure of the maximised quantity (`mu` in mu mode).
    pub q_interval: Interval,
    pub is_snk_plus: bool,
    pub method: SearchMethod,
    pub corpus_hash: String,
    #[serde(default)]
    pub mode: SpectralMode,
}

impl MaximizerRecord {
    /// Store key: `(n, k, forbidden_length, mode, corpus_hash)`.
    pub fn key(&self) -> (usize, usize, usize, SpectralMode, &str) {
        (
            self.n,
            self.k,
            self.forbidden_length,
            self.mode,
            &self.corpus_hash,
        )
    }
}

/// Whether `g` is isomorphic to `S_{n,k}^+`: the right edge count and a
/// `k`-set outside of which exactly one edge remains.
pub fn is_snk_plus(g: &Graph, k: usize) -> bool {
    let n = g.n();
    if k == 0 || n < k + 2 {
        return false;
    }
    let target = k * n - k * (k + 1) / 2 + 1;
    let found = g.m() == target && snk_plus_k_set(g, k).is_some_and(|(_, e)| e.is_some());
    if cfg!(debug_assertions) && n <= ISOMORPHISM_CAP {
        let model = construct(&FamilySpec::SnkPlus { n, k }).expect("valid parameters");
        debug_assert_eq!(
            found,
            isomorphic(g, &model).expect("under cap"),
            "structural S+ test disagrees with isomorphism"
        );
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recognises_relabelled_copies() {
        let s = construct(&FamilySpec::SnkPlus { n: 9, k: 3 }).unwrap();
        assert!(is_snk_plus(&s, 3));
        assert!(!is_snk_plus(&s, 2));
        let r = s.relabel(&[8, 7, 6, 5, 4, 3, 2, 1, 0]).unwrap();
        assert!(is_snk_plus(&r, 3));
        let plain = construct(&FamilySpec::Snk { n: 9, k: 3 }).unwrap();
        assert!(!is_snk_plus(&plain, 3));
        assert!(is_snk_plus(
            &construct(&FamilySpec::SnkPlus { n: 40, k: 2 }).unwrap(),
            2
        ));
    }

    #[test]
    fn same_edge_count_wrong_shape() {
        // 10 edges on 6 vertices like S_{6,2}^+, but a different graph
        let g = Graph::from_edges(
            6,
            [
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 0),
                (0, 2),
                (0, 3),
                (0, 4),
                (1, 3),
            ],
        )
        .unwrap();
        assert!(!is_snk_plus(&g, 2));
    }
}
