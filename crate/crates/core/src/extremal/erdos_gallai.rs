use serde::{Deserialize, Serialize};

use crate::error::{ensure_cap, Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::subgraph::{
    has_cycle_of_length, has_path, is_hamiltonian, longest_cycle, PathQuery, SEARCH_CAP,
};

/// Order cap for the partition lemma check.
pub const PARTITION_CAP: usize = 20;

/// Outcome of an edge-bound check whose hypothesis excludes a subgraph.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum EdgeVerdict {
    /// The excluded subgraph is present.
    NotApplicable {
        witness: Vec<usize>,
    },
    Checked(EdgeCheck),
}

impl EdgeVerdict {
    pub fn check(&self) -> Option<&EdgeCheck> {
        match self {
            EdgeVerdict::Checked(c) => Some(c),
            EdgeVerdict::NotApplicable { .. } => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EdgeCheck {
    pub edges: usize,
    pub bound: f64,
    pub holds: bool,
    pub equality: bool,
    /// Whether the graph has the extremal structure. Meaningful alongside
    /// `equality`: the bound is tight exactly when this holds.
    pub structure: bool,
    /// Cycle check only: the graph is `K_1` joined to disjoint copies of
    /// `K_{k-1}`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shared_vertex: Option<bool>,
}

fn edge_check(
    g: &Graph,
    twice_bound: usize,
    structure: bool,
    shared_vertex: Option<bool>,
) -> EdgeCheck {
    let twice = 2 * g.m();
    EdgeCheck {
        edges: g.m(),
        bound: twice_bound as f64 / 2.0,
        holds: twice <= twice_bound,
        equality: twice == twice_bound,
        structure,
        shared_vertex,
    }
}

fn is_clique(g: &Graph, vs: &[usize]) -> bool {
    vs.iter()
        .enumerate()
        .all(|(i, &u)| vs[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

/// Every component is a copy of `K_s`.
pub(crate) fn disjoint_cliques(g: &Graph, s: usize) -> bool {
    g.components()
        .iter()
        .all(|c| c.len() == s && is_clique(g, c))
}

/// Vertex sets of the blocks (maximal 2-connected pieces and bridges);
/// isolated vertices are left out.
pub fn blocks(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let adj: Vec<Vec<usize>> = (0..n).map(|u| g.neighbors(u).collect()).collect();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut out = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX || adj[root].is_empty() {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // (vertex, parent, next neighbour index)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(&mut (u, parent, ref mut i)) = stack.last_mut() {
            if *i < adj[u].len() {
                let v = adj[u][*i];
                *i += 1;
                if disc[v] == usize::MAX {
                    edge_stack.push((u, v));
                    disc[v] = time;
                    low[v] = time;
                    time += 1;
                    stack.push((v, u, 0));
                } else if v != parent && disc[v] < disc[u] {
                    edge_stack.push((u, v));
                    low[u] = low[u].min(disc[v]);
                }
                continue;
            }
            stack.pop();
            if parent == usize::MAX {
                continue;
            }
            low[parent] = low[parent].min(low[u]);
            if low[u] >= disc[parent] {
                let mut block = Vec::new();
                while let Some((a, b)) = edge_stack.pop() {
                    block.push(a);
                    block.push(b);
                    if (a, b) == (parent, u) {
                        break;
                    }
                }
                block.sort_unstable();
                block.dedup();
                out.push(block);
            }
        }
    }
    out.sort();
    out
}

/// Connected, and every block is a `K_s`.
fn blocks_are_cliques(g: &Graph, s: usize) -> bool {
    g.is_connected() && blocks(g).iter().all(|b| b.len() == s && is_clique(g, b))
}

/// `K_1` joined to disjoint copies of `K_s` (that is, `L_{t,s}`), with the
/// hub returned.
pub(crate) fn shared_vertex_hub(g: &Graph, s: usize) -> Option<usize> {
    let n = g.n();
    if n < 2 || !(n - 1).is_multiple_of(s) {
        return None;
    }
    g.dominating_vertices().into_iter().find(|&h| {
        let rest: Vec<usize> = (0..n).filter(|&v| v != h).collect();
        g.induced(&rest).is_ok_and(|r| disjoint_cliques(&r, s))
    })
}

/// Paths on `k+2` vertices force `e > kn/2`; equality only for disjoint
/// copies of `K_{k+1}`.
pub fn erdos_gallai_path_check(g: &Graph, k: usize) -> Result<EdgeVerdict> {
    if k < 1 {
        return Err(Error::InvalidParameters(
            "the path check needs k >= 1".into(),
        ));
    }
    ensure_cap("path edge check", g.n(), SEARCH_CAP)?;
    if let Some(witness) = has_path(g, &PathQuery::new(k + 2)) {
        return Ok(EdgeVerdict::NotApplicable { witness });
    }
    Ok(EdgeVerdict::Checked(edge_check(
        g,
        k * g.n(),
        disjoint_cliques(g, k + 1),
        None,
    )))
}

/// Graphs with no cycle longer than `k` have `e <= k(n-1)/2`.
///
/// `structure` reports the actual equality case: connected with every block
/// a `K_k`. `shared_vertex` reports the narrower form with all blocks on one
/// common vertex, which is sufficient but not necessary (a chain of
/// triangles with `k = 3` is tight too).
pub fn erdos_gallai_cycle_check(g: &Graph, k: usize) -> Result<EdgeVerdict> {
    if k < 2 {
        return Err(Error::InvalidParameters(
            "the cycle check needs k >= 2".into(),
        ));
    }
    let c = longest_cycle(g)?;
    if c > k {
        let witness = has_cycle_of_length(g, c).expect("longest cycle exists");
        return Ok(EdgeVerdict::NotApplicable { witness });
    }
    let shared = shared_vertex_hub(g, k - 1).is_some();
    Ok(EdgeVerdict::Checked(edge_check(
        g,
        k * (g.n() - 1),
        blocks_are_cliques(g, k),
        Some(shared),
    )))
}

/// Partition lemma: `2e(A) + e(A,B) > (2k-1)|A| + k|B|` should yield a path
/// on `2k+1` vertices with both ends in `A`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionCheck {
    pub lhs: usize,
    pub rhs: usize,
    /// `lhs > rhs`
    pub hypothesis: bool,
    pub witness: Option<Vec<usize>>,
}

impl PartitionCheck {
    /// The implication holds (vacuously when the hypothesis fails).
    pub fn holds(&self) -> bool {
        !self.hypothesis || self.witness.is_some()
    }
}

pub fn nikiforov_partition_check(g: &Graph, a: &VertexSet, k: usize) -> Result<PartitionCheck> {
    if k < 1 {
        return Err(Error::InvalidParameters(
            "the partition check needs k >= 1".into(),
        ));
    }
    ensure_cap("partition check", g.n(), PARTITION_CAP)?;
    if a.universe() != g.n() {
        return Err(Error::DimensionMismatch {
            expected: g.n(),
            got: a.universe(),
        });
    }
    let b = a.complement();
    let lhs = 2 * g.edges_within(a) + g.edges_between(a, &b);
    let rhs = (2 * k - 1) * a.len() + k * b.len();
    let hypothesis = lhs > rhs;
    let witness = if hypothesis {
        has_path(g, &PathQuery::with_endpoints(2 * k + 1, a.clone()))
    } else {
        None
    };
    Ok(PartitionCheck {
        lhs,
        rhs,
        hypothesis,
        witness,
    })
}

/// Connected non-Hamiltonian graphs have `e <= C(n-1, 2) + 1`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum OreVerdict {
    /// Disconnected, or Hamiltonian with this cycle.
    NotApplicable {
        hamiltonian_cycle: Option<Vec<usize>>,
    },
    Checked {
        edges: usize,
        bound: usize,
        holds: bool,
    },
}

pub fn ore_bound_check(g: &Graph) -> Result<OreVerdict> {
    let n = g.n();
    ensure_cap("Ore bound check", n, SEARCH_CAP)?;
    if !g.is_connected() {
        return Ok(OreVerdict::NotApplicable {
            hamiltonian_cycle: None,
        });
    }
    if is_hamiltonian(g)? {
        return Ok(OreVerdict::NotApplicable {
            hamiltonian_cycle: has_cycle_of_length(g, n),
        });
    }
    let bound = (n - 1) * n.saturating_sub(2) / 2 + 1;
    Ok(OreVerdict::Checked {
        edges: g.m(),
        bound,
        holds: g.m() <= bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{construct, FamilySpec};

    fn g(spec: FamilySpec) -> Graph {
        construct(&spec).unwrap()
    }

    fn k3() -> Box<FamilySpec> {
        Box::new(FamilySpec::Complete { n: 3 })
    }

    #[test]
    fn path_check_examples() {
        let two_triangles = g(FamilySpec::DisjointUnion {
            left: k3(),
            right: k3(),
        });
        let c = erdos_gallai_path_check(&two_triangles, 2).unwrap();
        let c = c.check().unwrap();
        assert_eq!(
            (c.edges, c.bound, c.holds, c.equality, c.structure),
            (6, 6.0, true, true, true)
        );

        let v = erdos_gallai_path_check(&g(FamilySpec::Cycle { n: 5 }), 2).unwrap();
        assert!(matches!(v, EdgeVerdict::NotApplicable { ref witness } if witness.len() == 4));
        let v = erdos_gallai_path_check(&g(FamilySpec::Star { n: 6 }), 1).unwrap();
        assert!(matches!(v, EdgeVerdict::NotApplicable { .. }));

        let k2 = || Box::new(FamilySpec::Complete { n: 2 });
        let matching = g(FamilySpec::DisjointUnion {
            left: k2(),
            right: k2(),
        });
        let c = erdos_gallai_path_check(&matching, 1)
            .unwrap()
            .check()
            .cloned()
            .unwrap();
        assert!(c.equality && c.structure);
    }

    #[test]
    fn cycle_check_examples() {
        let l = g(FamilySpec::Ltk { t: 3, k: 2 });
        let c = erdos_gallai_cycle_check(&l, 3)
            .unwrap()
            .check()
            .cloned()
            .unwrap();
        assert_eq!(
            (c.edges, c.bound, c.equality, c.structure, c.shared_vertex),
            (9, 9.0, true, true, Some(true))
        );

        assert!(
            matches!(erdos_gallai_cycle_check(&g(FamilySpec::Cycle { n: 6 }), 3).unwrap(), EdgeVerdict::NotApplicable { ref witness } if witness.len() == 6)
        );

        let path = Graph::from_edges(7, (0..6).map(|i| (i, i + 1))).unwrap();
        let c = erdos_gallai_cycle_check(&path, 2)
            .unwrap()
            .check()
            .cloned()
            .unwrap();
        assert_eq!(
            (c.edges, c.bound, c.holds, c.equality, c.structure),
            (6, 6.0, true, true, true)
        );
        assert_eq!(c.shared_vertex, Some(false));
    }

    #[test]
    fn triangle_chain_is_tight_without_a_shared_vertex() {
        let chain = Graph::from_edges(
            7,
            [
                (0, 1),
                (1, 2),
                (0, 2),
                (2, 3),
                (3, 4),
                (2, 4),
                (4, 5),
                (5, 6),
                (4, 6),
            ],
        )
        .unwrap();
        let c = erdos_gallai_cycle_check(&chain, 3)
            .unwrap()
            .check()
            .cloned()
            .unwrap();
        assert!(c.equality && c.structure);
        assert_eq!(c.shared_vertex, Some(false));
    }

    #[test]
    fn blocks_of_small_graphs() {
        let bowtie =
            Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert_eq!(blocks(&bowtie), vec![vec![0, 1, 2], vec![2, 3, 4]]);
        let p = Graph::from_edges(4, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(blocks(&p), vec![vec![0, 1], vec![1, 2]]);
        assert_eq!(
            blocks(&g(FamilySpec::Cycle { n: 5 })),
            vec![vec![0, 1, 2, 3, 4]]
        );
    }

    #[test]
    fn partition_examples() {
        let k5 = g(FamilySpec::Complete { n: 5 });
        let c = nikiforov_partition_check(&k5, &VertexSet::full(5), 2).unwrap();
        assert_eq!((c.lhs, c.rhs, c.hypothesis), (20, 15, true));
        assert_eq!(c.witness.as_ref().map(Vec::len), Some(5));

        let e = Graph::empty(6).unwrap();
        let c = nikiforov_partition_check(&e, &VertexSet::from_vertices(6, [0, 2]).unwrap(), 2)
            .unwrap();
        assert!(!c.hypothesis && c.holds() && c.lhs == 0);

        let s = g(FamilySpec::SnkPlus { n: 10, k: 2 });
        let c = nikiforov_partition_check(&s, &VertexSet::from_vertices(10, 2..10).unwrap(), 2)
            .unwrap();
        // 2*1 + 16 = 18 against 3*8 + 2*2 = 28
        assert_eq!((c.lhs, c.rhs, c.hypothesis), (18, 28, false));
        assert!(nikiforov_partition_check(&s, &VertexSet::full(9), 2).is_err());
    }

    #[test]
    fn ore_examples() {
        let star = g(FamilySpec::Star { n: 4 });
        assert_eq!(
            ore_bound_check(&star).unwrap(),
            OreVerdict::Checked {
                edges: 3,
                bound: 4,
                holds: true
            }
        );
        assert!(matches!(
            ore_bound_check(&g(FamilySpec::Complete { n: 5 })).unwrap(),
            OreVerdict::NotApplicable {
                hamiltonian_cycle: Some(_)
            }
        ));
        let pendant = g(FamilySpec::Complete { n: 4 }).to_builder();
        let mut b = crate::graph::GraphBuilder::new(5).unwrap();
        for (u, v) in pendant.build().edges() {
            b.add_edge(u, v).unwrap();
        }
        b.add_edge(3, 4).unwrap();
        assert_eq!(
            ore_bound_check(&b.build()).unwrap(),
            OreVerdict::Checked {
                edges: 7,
                bound: 7,
                holds: true
            }
        );
    }
}
