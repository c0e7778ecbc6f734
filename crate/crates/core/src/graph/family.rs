use serde::{Deserialize, Serialize};

use super::{Graph, GraphBuilder, MAX_VERTICES};
use crate::error::{Error, Result};

/// Named graph families.
///
/// Constructions use a fixed vertex order: dominating or clique vertices come
/// first, then the independent part.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    Complete {
        n: usize,
    },
    Empty {
        n: usize,
    },
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    /// `K_{1,n-1}` with centre 0.
    Star {
        n: usize,
    },
    /// `K_k` joined to `n - k` independent vertices.
    #[serde(rename = "S_nk")]
    Snk {
        n: usize,
        k: usize,
    },
    /// `S_nk` plus the edge `{k, k + 1}`.
    #[serde(rename = "S_nk_plus")]
    SnkPlus {
        n: usize,
        k: usize,
    },
    /// `t` copies of `K_{k+1}` sharing vertex 0; block `i` is
    /// `1 + i*k .. 1 + (i+1)*k`.
    #[serde(rename = "L_tk")]
    Ltk {
        t: usize,
        k: usize,
    },
    Join {
        left: Box<FamilySpec>,
        right: Box<FamilySpec>,
    },
    DisjointUnion {
        left: Box<FamilySpec>,
        right: Box<FamilySpec>,
    },
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameters(msg.into())
}

fn builder(n: usize) -> Result<GraphBuilder> {
    if n == 0 || n > MAX_VERTICES {
        return Err(invalid(format!(
            "vertex count {n} outside 1..={MAX_VERTICES}"
        )));
    }
    GraphBuilder::new(n)
}

fn clique_join(n: usize, k: usize) -> Result<GraphBuilder> {
    let mut b = builder(n)?;
    for u in 0..k {
        for v in u + 1..n {
            b.add_edge(u, v)?;
        }
    }
    Ok(b)
}

/// Build the graph described by `spec`.
pub fn construct(spec: &FamilySpec) -> Result<Graph> {
    use FamilySpec::*;
    let g = match *spec {
        Complete { n } => clique_join(n, n)?.build(),
        Empty { n } => builder(n)?.build(),
        Path { n } => {
            let mut b = builder(n)?;
            for u in 1..n {
                b.add_edge(u - 1, u)?;
            }
            b.build()
        }
        Cycle { n } => {
            if n < 3 {
                return Err(invalid(format!("cycle needs n >= 3, got {n}")));
            }
            let mut b = builder(n)?;
            for u in 0..n {
                b.add_edge(u, (u + 1) % n)?;
            }
            b.build()
        }
        Star { n } => clique_join(n, 1.min(n))?.build(),
        Snk { n, k } => {
            if k == 0 || n < k + 1 {
                return Err(invalid(format!(
                    "S_nk needs k >= 1 and n >= k + 1, got n = {n}, k = {k}"
                )));
            }
            clique_join(n, k)?.build()
        }
        SnkPlus { n, k } => {
            if k == 0 || n < k + 2 {
                return Err(invalid(format!(
                    "S_nk_plus needs k >= 1 and n >= k + 2, got n = {n}, k = {k}"
                )));
            }
            let mut b = clique_join(n, k)?;
            b.add_edge(k, k + 1)?;
            b.build()
        }
        Ltk { t, k } => {
            if t == 0 || k == 0 {
                return Err(invalid(format!(
                    "L_tk needs t, k >= 1, got t = {t}, k = {k}"
                )));
            }
            let n = t
                .checked_mul(k)
                .and_then(|x| x.checked_add(1))
                .ok_or_else(|| invalid("L_tk too large"))?;
            let mut b = builder(n)?;
            for block in 0..t {
                let base = 1 + block * k;
                for u in base..base + k {
                    b.add_edge(0, u)?;
                    for v in u + 1..base + k {
                        b.add_edge(u, v)?;
                    }
                }
            }
            b.build()
        }
        Join {
            ref left,
            ref right,
        } => {
            let (l, r) = (construct(left)?, construct(right)?);
            let mut b = combine(&l, &r)?;
            for u in 0..l.n() {
                for v in 0..r.n() {
                    b.add_edge(u, l.n() + v)?;
                }
            }
            b.build()
        }
        DisjointUnion {
            ref left,
            ref right,
        } => {
            let (l, r) = (construct(left)?, construct(right)?);
            combine(&l, &r)?.build()
        }
    };
    Ok(g)
}

fn combine(l: &Graph, r: &Graph) -> Result<GraphBuilder> {
    let mut b = builder(l.n() + r.n())?;
    for (u, v) in l.edges() {
        b.add_edge(u, v)?;
    }
    for (u, v) in r.edges() {
        b.add_edge(l.n() + u, l.n() + v)?;
    }
    Ok(b)
}
