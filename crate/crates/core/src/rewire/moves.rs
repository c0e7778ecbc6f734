use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectral::{compare_q_detailed, Comparison};

/// A local transformation of the kind used to push `q` upward.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RewireMove {
    /// Delete every edge inside `component` and join each of its vertices
    /// to every hub. Edges from `component` to the rest are kept.
    MergeComponentsAtHubs {
        hubs: Vec<usize>,
        component: Vec<usize>,
    },
    /// Move `leaves` from centre `from` to centre `to`, then optionally add
    /// `extra_edge`.
    ReattachStarLeaves {
        from: usize,
        to: usize,
        leaves: Vec<usize>,
        extra_edge: Option<(usize, usize)>,
    },
    /// Move pendant `leaves` hanging off `from` onto `hub`.
    LeafEdgeToHub {
        from: usize,
        hub: usize,
        leaves: Vec<usize>,
    },
    /// Replace the edge `{i, j}` by `{i, vertex}` and `{j, vertex}`.
    EdgeToCliqueVertex { edge: (usize, usize), vertex: usize },
}

fn invalid<T>(why: impl Into<String>) -> Result<T> {
    Err(Error::InvalidMove(why.into()))
}

fn check_vertex(g: &Graph, v: usize, role: &str) -> Result<()> {
    if v >= g.n() {
        return invalid(format!("{role} {v} is not a vertex (n = {})", g.n()));
    }
    Ok(())
}

fn distinct(vs: &[usize], role: &str) -> Result<()> {
    let mut s = vs.to_vec();
    s.sort_unstable();
    if s.windows(2).any(|w| w[0] == w[1]) {
        return invalid(format!("{role} repeat a vertex"));
    }
    Ok(())
}

fn move_leaves(
    g: &Graph,
    from: usize,
    to: usize,
    leaves: &[usize],
) -> Result<crate::graph::GraphBuilder> {
    check_vertex(g, from, "centre")?;
    check_vertex(g, to, "target")?;
    if from == to {
        return invalid("source and target centre coincide");
    }
    if leaves.is_empty() {
        return invalid("no leaves given");
    }
    distinct(leaves, "leaves")?;
    let mut b = g.to_builder();
    for &l in leaves {
        check_vertex(g, l, "leaf")?;
        if l == from || l == to {
            return invalid(format!("leaf {l} is one of the centres"));
        }
        if !g.has_edge(l, from) {
            return invalid(format!("leaf {l} is not adjacent to {from}"));
        }
        if g.has_edge(l, to) {
            return invalid(format!("leaf {l} is already adjacent to {to}"));
        }
        b.remove_edge(l, from)?;
        b.add_edge(l, to)?;
    }
    Ok(b)
}

/// Apply a move. Fails with `InvalidMove` naming the first structural
/// requirement that does not hold, including a move that changes nothing.
pub fn apply_move(g: &Graph, m: &RewireMove) -> Result<Graph> {
    let out = match m {
        RewireMove::MergeComponentsAtHubs { hubs, component } => {
            if hubs.is_empty() || component.is_empty() {
                return invalid("hubs and component must be nonempty");
            }
            distinct(hubs, "hubs")?;
            distinct(component, "component vertices")?;
            for &h in hubs {
                check_vertex(g, h, "hub")?;
                if component.contains(&h) {
                    return invalid(format!("hub {h} lies inside the component"));
                }
            }
            let mut b = g.to_builder();
            for (i, &u) in component.iter().enumerate() {
                check_vertex(g, u, "component vertex")?;
                for &v in &component[i + 1..] {
                    b.remove_edge(u, v)?;
                }
                for &h in hubs {
                    b.add_edge(u, h)?;
                }
            }
            b.build()
        }
        RewireMove::ReattachStarLeaves {
            from,
            to,
            leaves,
            extra_edge,
        } => {
            let mut b = move_leaves(g, *from, *to, leaves)?;
            if let Some((u, v)) = *extra_edge {
                check_vertex(g, u, "extra edge end")?;
                check_vertex(g, v, "extra edge end")?;
                if u == v || b.has_edge(u, v) {
                    return invalid(format!(
                        "extra edge {{{u}, {v}}} is a loop or already present"
                    ));
                }
                b.add_edge(u, v)?;
            }
            b.build()
        }
        RewireMove::LeafEdgeToHub { from, hub, leaves } => {
            move_leaves(g, *from, *hub, leaves)?.build()
        }
        RewireMove::EdgeToCliqueVertex {
            edge: (i, j),
            vertex,
        } => {
            for (v, role) in [
                (*i, "edge end"),
                (*j, "edge end"),
                (*vertex, "target vertex"),
            ] {
                check_vertex(g, v, role)?;
            }
            if !g.has_edge(*i, *j) {
                return invalid(format!("{{{i}, {j}}} is not an edge"));
            }
            if vertex == i || vertex == j {
                return invalid("target vertex is an end of the edge");
            }
            if g.has_edge(*i, *vertex) || g.has_edge(*j, *vertex) {
                return invalid(format!(
                    "vertex {vertex} is already adjacent to an end of the edge"
                ));
            }
            let mut b = g.to_builder();
            b.remove_edge(*i, *j)?;
            b.add_edge(*i, *vertex)?;
            b.add_edge(*j, *vertex)?;
            b.build()
        }
    };
    if &out == g {
        return invalid("move leaves the graph unchanged");
    }
    Ok(out)
}

/// Certified effect of a move on `q`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MoveVerdict {
    /// `q(after) > q(before)`, certified.
    pub increases: bool,
    /// `q(after)` against `q(before)`.
    pub comparison: Comparison,
    pub after: Graph,
}

pub fn move_increases_q(g: &Graph, m: &RewireMove) -> Result<MoveVerdict> {
    let after = apply_move(g, m)?;
    let comparison = compare_q_detailed(&after, g)?;
    Ok(MoveVerdict {
        increases: comparison.ordering == Ordering::Greater,
        comparison,
        after,
    })
}
