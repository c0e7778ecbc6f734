use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Record of repeatedly deleting a minimum-degree vertex while the minimum
/// degree is below `k - 1`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PeelTrace {
    /// `(vertex, degree at removal)`, in original labels.
    pub removed: Vec<(usize, usize)>,
    /// Original labels of the survivors, ascending.
    pub survivor_vertices: Vec<usize>,
    /// Induced graph on the survivors, `None` when everything was peeled.
    pub survivor: Option<Graph>,
    pub r: usize,
    pub k: usize,
}

impl PeelTrace {
    /// Every removal had degree `<= k-2`, the survivor has minimum degree
    /// `>= k-1`, and at most `r(k-2)` edges were lost.
    pub fn check(&self, start: &Graph) -> bool {
        let degrees_ok = self.removed.iter().all(|&(_, d)| d + 2 <= self.k);
        let survivor_ok = self
            .survivor
            .as_ref()
            .is_none_or(|s| s.min_degree() + 1 >= self.k);
        let left = self.survivor.as_ref().map_or(0, Graph::m);
        degrees_ok
            && survivor_ok
            && start.m() - left <= self.r * (self.k - 2)
            && self.r == self.removed.len()
    }
}

pub fn peel(g: &Graph, k: usize) -> Result<PeelTrace> {
    if k < 2 {
        return Err(Error::InvalidParameters(format!(
            "peeling needs k >= 2, got {k}"
        )));
    }
    let n = g.n();
    let mut alive = vec![true; n];
    let mut deg = g.degrees();
    let mut removed = Vec::new();
    loop {
        let pick = (0..n).filter(|&v| alive[v]).min_by_key(|&v| (deg[v], v));
        let Some(v) = pick else { break };
        if deg[v] + 1 >= k {
            break;
        }
        removed.push((v, deg[v]));
        alive[v] = false;
        for u in g.neighbors(v) {
            if alive[u] {
                deg[u] -= 1;
            }
        }
    }
    let survivor_vertices: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    let survivor = if survivor_vertices.is_empty() {
        None
    } else {
        Some(g.induced(&survivor_vertices)?)
    };
    let trace = PeelTrace {
        r: removed.len(),
        removed,
        survivor_vertices,
        survivor,
        k,
    };
    debug_assert!(trace.check(g));
    Ok(trace)
}
