use serde::{Deserialize, Serialize};

use super::erdos_gallai::shared_vertex_hub;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::subgraph::{has_path, PathQuery};

/// Order cap for [`as_classify`].
pub const CLASSIFY_CAP: usize = 20;

/// Which structure explains the absence of a path on `2k+3` vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum AsClause {
    /// Spanning subgraph of `S_{n,k}^+`.
    #[serde(rename = "subgraph_Snk_plus")]
    SubgraphSnkPlus,
    /// Exactly `L_{t,k}`.
    #[serde(rename = "L_tk")]
    Ltk,
    /// Subgraph of `K_1 v ((t-1)K_k u K_{k+1})`.
    #[serde(rename = "hub_mixed")]
    HubMixed,
    /// Two `L_{s,k}`, `L_{t,k}` with their centres joined.
    #[serde(rename = "double_hub")]
    DoubleHub,
    /// `k = 1`: two stars with their centres joined.
    #[serde(rename = "p5_star_variant")]
    P5StarVariant,
    #[serde(rename = "none")]
    None,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AsWitness {
    /// A path on `2k+3` vertices.
    Path { vertices: Vec<usize> },
    /// The `k`-set whose removal leaves at most the one extra edge.
    Clique {
        k_set: Vec<usize>,
        extra_edge: Option<(usize, usize)>,
    },
    /// Hub and the vertex sets of the components of `G - hub`.
    Hub { hub: usize, blocks: Vec<Vec<usize>> },
    /// Joined hubs and, per hub, the blocks hanging off it.
    DoubleHub {
        hubs: (usize, usize),
        blocks: (Vec<Vec<usize>>, Vec<Vec<usize>>),
    },
    /// No path and no clause matched.
    Unmatched,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AsVerdict {
    pub clause: AsClause,
    pub witness: AsWitness,
    pub k: usize,
    pub edges: usize,
    /// Edge bound the classification implies: `kn` inside clause (i), `(k+1)n/2`
    /// otherwise. `None` when a long path exists or `k = 1`.
    pub edge_limit: Option<f64>,
    pub edge_check: Option<bool>,
}

fn others(n: usize, skip: &[usize]) -> Vec<usize> {
    (0..n).filter(|v| !skip.contains(v)).collect()
}

/// Components of `G - removed`, in original labels.
fn components_without(g: &Graph, removed: &[usize]) -> Vec<Vec<usize>> {
    let rest = others(g.n(), removed);
    if rest.is_empty() {
        return Vec::new();
    }
    let h = g.induced(&rest).expect("nonempty");
    h.components()
        .into_iter()
        .map(|c| c.into_iter().map(|i| rest[i]).collect())
        .collect()
}

fn is_clique(g: &Graph, vs: &[usize]) -> bool {
    vs.iter()
        .enumerate()
        .all(|(i, &u)| vs[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

/// Edges with both ends outside `set`.
fn edges_outside(g: &Graph, set: &[usize]) -> Vec<(usize, usize)> {
    g.edges()
        .filter(|(u, v)| !set.contains(u) && !set.contains(v))
        .collect()
}

type KSet = (Vec<usize>, Option<(usize, usize)>);
type HubPair = ((usize, usize), (Vec<Vec<usize>>, Vec<Vec<usize>>));

/// Lexicographically first `k`-set whose removal leaves at most one edge.
pub(crate) fn snk_plus_k_set(g: &Graph, k: usize) -> Option<KSet> {
    let n = g.n();
    // outside the k-set a vertex sees at most k + 1 others
    let forced: Vec<usize> = (0..n).filter(|&v| g.degree(v) > k + 1).collect();
    if forced.len() > k {
        return None;
    }
    let pool: Vec<usize> = others(n, &forced);
    let need = k - forced.len();
    let mut pick: Vec<usize> = (0..need).collect();
    loop {
        if need <= pool.len() {
            let mut set = forced.clone();
            set.extend(pick.iter().map(|&i| pool[i]));
            set.sort_unstable();
            let rest = edges_outside(g, &set);
            if rest.len() <= 1 {
                return Some((set, rest.first().copied()));
            }
        } else {
            return None;
        }
        // next combination of `need` indices from pool
        let mut i = need;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if pick[i] < pool.len() - need + i {
                break;
            }
        }
        pick[i] += 1;
        for j in i + 1..need {
            pick[j] = pick[j - 1] + 1;
        }
    }
}

fn mixed_hub(g: &Graph, k: usize) -> Option<(usize, Vec<Vec<usize>>)> {
    (0..g.n()).find_map(|h| {
        let comps = components_without(g, &[h]);
        let big = comps.iter().filter(|c| c.len() == k + 1).count();
        let ok = big == 1 && comps.iter().all(|c| c.len() == k || c.len() == k + 1);
        ok.then_some((h, comps))
    })
}

/// Blocks attached to `h` in the double-hub shape: each is a `K_k`
/// fully joined to `h` and to nothing else.
fn hub_blocks(g: &Graph, h: usize, comps: &[Vec<usize>]) -> Option<Vec<Vec<usize>>> {
    let mine: Vec<Vec<usize>> = comps
        .iter()
        .filter(|c| c.iter().any(|&v| g.has_edge(v, h)))
        .cloned()
        .collect();
    let ok = !mine.is_empty() && mine.iter().all(|c| c.iter().all(|&v| g.has_edge(v, h)));
    ok.then_some(mine)
}

fn double_hub(g: &Graph, k: usize) -> Option<HubPair> {
    g.edges().find_map(|(a, b)| {
        let comps = components_without(g, &[a, b]);
        if !comps.iter().all(|c| c.len() == k && is_clique(g, c)) {
            return None;
        }
        let (ba, bb) = (hub_blocks(g, a, &comps)?, hub_blocks(g, b, &comps)?);
        let split = ba.len() + bb.len() == comps.len() && ba.iter().all(|c| !bb.contains(c));
        let hub_degrees = g.degree(a) == k * ba.len() + 1 && g.degree(b) == k * bb.len() + 1;
        (split && hub_degrees).then_some(((a, b), (ba, bb)))
    })
}

fn check_pre(g: &Graph, k: usize) -> Result<()> {
    let n = g.n();
    let fail = |why: String| Err(Error::PreconditionViolated(why));
    if k < 1 {
        return fail("k must be at least 1".into());
    }
    if n > CLASSIFY_CAP {
        return Err(Error::TooLarge {
            what: "structure classification",
            n,
            cap: CLASSIFY_CAP,
        });
    }
    if n < 2 * k + 3 {
        return fail(format!("needs n >= 2k+3 = {}, got {n}", 2 * k + 3));
    }
    if !g.is_connected() {
        return fail("graph is disconnected".into());
    }
    if g.min_degree() < k {
        return fail(format!(
            "minimum degree {} is below k = {k}",
            g.min_degree()
        ));
    }
    Ok(())
}

/// Classify a connected graph with minimum degree at least `k` and no path
/// on `2k+3` vertices into one of the stability clauses. Clauses are tried in
/// order (i) to (iv); with `k = 1` only (i) and the joined-stars variant
/// apply.
pub fn as_classify(g: &Graph, k: usize) -> Result<AsVerdict> {
    check_pre(g, k)?;
    let n = g.n();
    let edges = g.m();
    if let Some(vertices) = has_path(g, &PathQuery::new(2 * k + 3)) {
        let witness = AsWitness::Path { vertices };
        return Ok(AsVerdict {
            clause: AsClause::None,
            witness,
            k,
            edges,
            edge_limit: None,
            edge_check: None,
        });
    }
    let (clause, witness) = if let Some((k_set, extra_edge)) = snk_plus_k_set(g, k) {
        (
            AsClause::SubgraphSnkPlus,
            AsWitness::Clique { k_set, extra_edge },
        )
    } else if k == 1 {
        match double_hub(g, 1) {
            Some((hubs, blocks)) => (
                AsClause::P5StarVariant,
                AsWitness::DoubleHub { hubs, blocks },
            ),
            None => (AsClause::None, AsWitness::Unmatched),
        }
    } else if let Some(hub) = shared_vertex_hub(g, k) {
        (
            AsClause::Ltk,
            AsWitness::Hub {
                hub,
                blocks: components_without(g, &[hub]),
            },
        )
    } else if let Some((hub, blocks)) = mixed_hub(g, k) {
        (AsClause::HubMixed, AsWitness::Hub { hub, blocks })
    } else if let Some((hubs, blocks)) = double_hub(g, k) {
        (AsClause::DoubleHub, AsWitness::DoubleHub { hubs, blocks })
    } else {
        (AsClause::None, AsWitness::Unmatched)
    };
    let edge_limit = (k >= 2).then(|| match clause {
        AsClause::SubgraphSnkPlus => (k * n) as f64,
        _ => ((k + 1) * n) as f64 / 2.0,
    });
    let edge_check = edge_limit.map(|l| edges as f64 <= l);
    Ok(AsVerdict {
        clause,
        witness,
        k,
        edges,
        edge_limit,
        edge_check,
    })
}

impl AsVerdict {
    /// Re-check the witness against `g` from scratch.
    pub fn validate(&self, g: &Graph) -> bool {
        let k = self.k;
        let n = g.n();
        match (&self.clause, &self.witness) {
            (AsClause::None, AsWitness::Path { vertices }) => {
                vertices.len() == 2 * k + 3
                    && vertices.windows(2).all(|w| g.has_edge(w[0], w[1]))
                    && vertices
                        .iter()
                        .collect::<std::collections::HashSet<_>>()
                        .len()
                        == vertices.len()
            }
            (AsClause::SubgraphSnkPlus, AsWitness::Clique { k_set, extra_edge }) => {
                let rest = edges_outside(g, k_set);
                k_set.len() == k && rest.len() <= 1 && rest.first() == extra_edge.as_ref()
            }
            (AsClause::Ltk, AsWitness::Hub { hub, blocks }) => {
                g.degree(*hub) == n - 1
                    && blocks.iter().all(|b| b.len() == k && is_clique(g, b))
                    && components_without(g, &[*hub]) == *blocks
            }
            (AsClause::HubMixed, AsWitness::Hub { hub, blocks }) => {
                components_without(g, &[*hub]) == *blocks
                    && blocks.iter().filter(|b| b.len() == k + 1).count() == 1
                    && blocks.iter().all(|b| b.len() == k || b.len() == k + 1)
                    && n % k == 2 % k
            }
            (
                AsClause::DoubleHub | AsClause::P5StarVariant,
                AsWitness::DoubleHub {
                    hubs: (a, b),
                    blocks: (ba, bb),
                },
            ) => {
                let mut all: Vec<Vec<usize>> = ba.iter().chain(bb).cloned().collect();
                all.sort();
                g.has_edge(*a, *b)
                    && components_without(g, &[*a, *b]) == all
                    && ba
                        .iter()
                        .flatten()
                        .all(|&v| g.has_edge(v, *a) && !g.has_edge(v, *b))
                    && bb
                        .iter()
                        .flatten()
                        .all(|&v| g.has_edge(v, *b) && !g.has_edge(v, *a))
                    && all.iter().all(|c| c.len() == k && is_clique(g, c))
            }
            _ => false,
        }
    }
}
