//! Simple undirected graphs on packed-bit adjacency rows.
//!
//! A [`Graph`] is immutable once built: every edit goes through a
//! [`GraphBuilder`] and produces a fresh value, so graphs can be shared freely
//! between workers.

mod family;
pub mod graph6;
mod iso;

use std::fmt;

use crate::error::{Error, Result};

pub use family::{construct, FamilySpec};
pub use iso::{isomorphic, ISOMORPHISM_CAP};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 4096;

#[inline]
fn stride_for(n: usize) -> usize {
    n.div_ceil(64)
}

pub(crate) struct Ones<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl<'a> Ones<'a> {
    pub(crate) fn new(words: &'a [u64]) -> Self {
        Ones {
            words,
            idx: 0,
            cur: words.first().copied().unwrap_or(0),
        }
    }
}

impl Iterator for Ones<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let bit = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * 64 + bit);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}

/// A set of vertices drawn from `0..n`, stored as a packed bit set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new(n: usize) -> Self {
        VertexSet {
            n,
            words: vec![0; stride_for(n)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::new(n);
        for v in 0..n {
            s.words[v / 64] |= 1 << (v % 64);
        }
        s
    }

    pub fn from_vertices(n: usize, vertices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut s = Self::new(n);
        for v in vertices {
            if v >= n {
                return Err(Error::InvalidParameters(format!(
                    "vertex {v} outside 0..{n}"
                )));
            }
            s.insert(v);
        }
        Ok(s)
    }

    /// Size of the ambient vertex range.
    pub fn universe(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} outside 0..{}", self.n);
        self.words[v / 64] |= 1 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.n {
            self.words[v / 64] &= !(1 << (v % 64));
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        Ones::new(&self.words)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn complement(&self) -> Self {
        let mut out = Self::full(self.n);
        for (o, w) in out.words.iter_mut().zip(&self.words) {
            *o &= !w;
        }
        out
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Simple undirected graph with `1 <= n <= 4096` vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    stride: usize,
    rows: Vec<u64>,
    m: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        Ok(GraphBuilder::new(n)?.build())
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        let mut b = GraphBuilder::new(n)?;
        for (u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    /// Words per adjacency row.
    #[inline]
    pub fn stride(&self) -> usize {
        self.stride
    }

    #[inline]
    pub fn row(&self, u: usize) -> &[u64] {
        &self.rows[u * self.stride..(u + 1) * self.stride]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u * self.stride + v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.degree(u)).collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).max().unwrap_or(0)
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        Ones::new(self.row(u))
    }

    pub fn neighbor_set(&self, u: usize) -> VertexSet {
        VertexSet {
            n: self.n,
            words: self.row(u).to_vec(),
        }
    }

    /// Edges as `(u, v)` with `u < v`, in row order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Vertices adjacent to every other vertex.
    pub fn dominating_vertices(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&u| self.degree(u) + 1 == self.n)
            .collect()
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Edges with both ends in `x`.
    pub fn edges_within(&self, x: &VertexSet) -> usize {
        let twice: usize = x
            .iter()
            .map(|u| {
                self.row(u)
                    .iter()
                    .zip(x.words())
                    .map(|(a, b)| (a & b).count_ones() as usize)
                    .sum::<usize>()
            })
            .sum();
        twice / 2
    }

    /// Edges with one end in `x` and the other in `y`; the sets are assumed
    /// disjoint.
    pub fn edges_between(&self, x: &VertexSet, y: &VertexSet) -> usize {
        x.iter()
            .map(|u| {
                self.row(u)
                    .iter()
                    .zip(y.words())
                    .map(|(a, b)| (a & b).count_ones() as usize)
                    .sum::<usize>()
            })
            .sum()
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is
    /// `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph> {
        let mut b = GraphBuilder::new(vertices.len())?;
        for (i, &u) in vertices.iter().enumerate() {
            if u >= self.n {
                return Err(Error::InvalidParameters(format!(
                    "vertex {u} outside 0..{}",
                    self.n
                )));
            }
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    b.add_edge(i, j)?;
                }
            }
        }
        Ok(b.build())
    }

    /// Relabel so that vertex `u` becomes `perm[u]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: perm.len(),
            });
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidParameters(
                    "relabelling is not a permutation".into(),
                ));
            }
        }
        Graph::from_edges(self.n, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    /// Copy of this graph with `{u, v}` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut b = self.to_builder();
        b.add_edge(u, v)?;
        Ok(b.build())
    }

    /// Copy of this graph with `{u, v}` removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut b = self.to_builder();
        b.remove_edge(u, v)?;
        Ok(b.build())
    }

    pub fn to_builder(&self) -> GraphBuilder {
        GraphBuilder {
            n: self.n,
            stride: self.stride,
            rows: self.rows.clone(),
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("m", &self.m)
            .field("graph6", &graph6::encode(self))
            .finish()
    }
}

/// Graphs serialize as their graph6 string.
impl serde::Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&graph6::encode(self))
    }
}

impl<'de> serde::Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = <String as serde::Deserialize>::deserialize(d)?;
        graph6::decode(&s).map_err(serde::de::Error::custom)
    }
}

/// Mutable adjacency used to assemble a [`Graph`].
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    n: usize,
    stride: usize,
    rows: Vec<u64>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::InvalidParameters(format!(
                "vertex count {n} outside 1..={MAX_VERTICES}"
            )));
        }
        let stride = stride_for(n);
        Ok(GraphBuilder {
            n,
            stride,
            rows: vec![0; n * stride],
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::InvalidParameters(format!(
                "edge {{{u}, {v}}} outside 0..{}",
                self.n
            )));
        }
        if u == v {
            return Err(Error::InvalidParameters(format!("loop at vertex {u}")));
        }
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u * self.stride + v / 64] >> (v % 64) & 1 == 1
    }

    /// Returns whether the edge was new.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        self.check_pair(u, v)?;
        let fresh = !self.has_edge(u, v);
        self.rows[u * self.stride + v / 64] |= 1 << (v % 64);
        self.rows[v * self.stride + u / 64] |= 1 << (u % 64);
        Ok(fresh)
    }

    /// Returns whether the edge was present.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        self.check_pair(u, v)?;
        let present = self.has_edge(u, v);
        self.rows[u * self.stride + v / 64] &= !(1 << (v % 64));
        self.rows[v * self.stride + u / 64] &= !(1 << (u % 64));
        Ok(present)
    }

    pub fn build(self) -> Graph {
        let twice: usize = self.rows.iter().map(|w| w.count_ones() as usize).sum();
        Graph {
            n: self.n,
            stride: self.stride,
            rows: self.rows,
            m: twice / 2,
        }
    }
}

/// `(e(X), e(X, Y))` for disjoint vertex sets `x` and `y`.
pub fn edge_counts(g: &Graph, x: &VertexSet, y: &VertexSet) -> Result<(usize, usize)> {
    if x.universe() != g.n() || y.universe() != g.n() {
        return Err(Error::DimensionMismatch {
            expected: g.n(),
            got: x.universe().max(y.universe()),
        });
    }
    if !x.is_disjoint(y) {
        return Err(Error::OverlappingSets);
    }
    Ok((g.edges_within(x), g.edges_between(x, y)))
}

/// Sum of the degrees of the neighbours of `u`.
///
/// Equals `2 e(N(u)) + e(N(u), V \ N(u))`; debug builds check the identity.
pub fn neighbor_degree_sum(g: &Graph, u: usize) -> usize {
    let sum: usize = g.neighbors(u).map(|v| g.degree(v)).sum();
    if cfg!(debug_assertions) {
        let nbrs = g.neighbor_set(u);
        let rest = nbrs.complement();
        debug_assert_eq!(
            sum,
            2 * g.edges_within(&nbrs) + g.edges_between(&nbrs, &rest)
        );
    }
    sum
}
