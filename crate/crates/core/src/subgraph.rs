//! Fixed-length cycles and paths, longest cycles and paths, Hamiltonicity.
//!
//! Everything is a depth-first search over simple paths on packed bit sets.
//! Two exact reductions keep it tractable on the structured graphs this
//! crate cares about:
//!
//! * twins (vertices with equal open or equal closed neighbourhoods) are
//!   interchangeable, so the search only visits them in increasing order;
//! * states `(visited, current)` already shown to have no completion are
//!   remembered, up to a fixed memory budget.

use std::collections::{HashMap, HashSet};

use crate::error::{ensure_cap, Result};
use crate::graph::{Graph, VertexSet};

/// Order cap for the longest cycle/path and Hamiltonicity searches.
pub const SEARCH_CAP: usize = 24;

const MEMO_LIMIT: usize = 1 << 20;

/// A path query: `order` vertices, both ends in `endpoints_in` when given.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathQuery {
    pub order: usize,
    pub endpoints_in: Option<VertexSet>,
}

impl PathQuery {
    pub fn new(order: usize) -> Self {
        PathQuery {
            order,
            endpoints_in: None,
        }
    }

    pub fn with_endpoints(order: usize, endpoints: VertexSet) -> Self {
        PathQuery {
            order,
            endpoints_in: Some(endpoints),
        }
    }
}

type Bits<const W: usize> = [u64; W];

#[inline]
fn test<const W: usize>(b: &Bits<W>, v: usize) -> bool {
    b[v / 64] >> (v % 64) & 1 == 1
}

#[inline]
fn set<const W: usize>(b: &mut Bits<W>, v: usize) {
    b[v / 64] |= 1 << (v % 64);
}

#[inline]
fn and<const W: usize>(a: &Bits<W>, b: &Bits<W>) -> Bits<W> {
    std::array::from_fn(|i| a[i] & b[i])
}

#[inline]
fn andnot<const W: usize>(a: &Bits<W>, b: &Bits<W>) -> Bits<W> {
    std::array::from_fn(|i| a[i] & !b[i])
}

#[inline]
fn empty<const W: usize>(a: &Bits<W>) -> bool {
    a.iter().all(|&w| w == 0)
}

#[inline]
fn count<const W: usize>(a: &Bits<W>) -> usize {
    a.iter().map(|w| w.count_ones() as usize).sum()
}

fn ones<const W: usize>(a: Bits<W>) -> impl Iterator<Item = usize> {
    (0..W).flat_map(move |i| {
        let mut w = a[i];
        std::iter::from_fn(move || {
            (w != 0).then(|| {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                i * 64 + b
            })
        })
    })
}

fn first<const W: usize>(a: &Bits<W>) -> Option<usize> {
    a.iter()
        .enumerate()
        .find(|(_, w)| **w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

struct Ctx<const W: usize> {
    n: usize,
    adj: Vec<Bits<W>>,
    /// twins of `v` with a smaller index
    lower_twins: Vec<Bits<W>>,
}

impl<const W: usize> Ctx<W> {
    /// Twin classes are split by membership in `colour` so that swaps also
    /// preserve endpoint constraints.
    fn new(g: &Graph, colour: Option<&VertexSet>) -> Self {
        let n = g.n();
        let adj: Vec<Bits<W>> = (0..n)
            .map(|u| {
                let mut b = [0u64; W];
                b[..g.stride()].copy_from_slice(g.row(u));
                b
            })
            .collect();
        let mut lower_twins = vec![[0u64; W]; n];
        let mut open: HashMap<(bool, Bits<W>), Vec<usize>> = HashMap::new();
        let mut closed: HashMap<(bool, Bits<W>), Vec<usize>> = HashMap::new();
        for (u, &row) in adj.iter().enumerate().take(n) {
            let c = colour.is_some_and(|s| s.contains(u));
            open.entry((c, row)).or_default().push(u);
            let mut nb = adj[u];
            set(&mut nb, u);
            closed.entry((c, nb)).or_default().push(u);
        }
        for class in open.values().chain(closed.values()) {
            for (i, &v) in class.iter().enumerate() {
                for &u in &class[..i] {
                    set(&mut lower_twins[v], u);
                }
            }
        }
        Ctx {
            n,
            adj,
            lower_twins,
        }
    }

    fn all(&self) -> Bits<W> {
        let mut b = [0u64; W];
        for v in 0..self.n {
            set(&mut b, v);
        }
        b
    }

    fn above(&self, s: usize) -> Bits<W> {
        let mut b = [0u64; W];
        for v in s + 1..self.n {
            set(&mut b, v);
        }
        b
    }

    /// Candidates after removing vertices whose smaller twin is still free.
    fn canonical(&self, cand: Bits<W>, free: &Bits<W>) -> Bits<W> {
        let mut out = cand;
        for v in ones(cand) {
            if !empty(&and(&self.lower_twins[v], free)) {
                out[v / 64] &= !(1 << (v % 64));
            }
        }
        out
    }

    fn bfs_dist(&self, s: usize, within: &Bits<W>) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[s] = 0;
        let mut frontier = [0u64; W];
        set(&mut frontier, s);
        let mut seen = frontier;
        let mut d = 0;
        while !empty(&frontier) {
            d += 1;
            let mut next = [0u64; W];
            for u in ones(frontier) {
                let nb = andnot(&and(&self.adj[u], within), &seen);
                for i in 0..W {
                    next[i] |= nb[i];
                }
            }
            for v in ones(next) {
                dist[v] = d;
            }
            for i in 0..W {
                seen[i] |= next[i];
            }
            frontier = next;
        }
        dist
    }

    fn reach(&self, from: usize, within: &Bits<W>) -> usize {
        let mut seen = [0u64; W];
        set(&mut seen, from);
        let mut frontier = seen;
        while !empty(&frontier) {
            let mut next = [0u64; W];
            for u in ones(frontier) {
                let nb = andnot(&and(&self.adj[u], within), &seen);
                for i in 0..W {
                    next[i] |= nb[i];
                }
            }
            for i in 0..W {
                seen[i] |= next[i];
            }
            frontier = next;
        }
        count(&seen) - 1
    }
}

struct CycleSearch<'a, const W: usize> {
    ctx: &'a Ctx<W>,
    len: usize,
    s: usize,
    allowed: Bits<W>,
    dist: Vec<usize>,
    dead: HashSet<(Bits<W>, usize)>,
    path: Vec<usize>,
}

impl<const W: usize> CycleSearch<'_, W> {
    fn dfs(&mut self, cur: usize, visited: Bits<W>) -> bool {
        let depth = self.path.len();
        let free = andnot(&self.allowed, &visited);
        if depth == self.len - 1 {
            let close = and(&and(&self.ctx.adj[cur], &self.ctx.adj[self.s]), &free);
            if let Some(v) = first(&self.ctx.canonical(close, &free)) {
                self.path.push(v);
                return true;
            }
            return false;
        }
        let cand = self.ctx.canonical(and(&self.ctx.adj[cur], &free), &free);
        for v in ones(cand) {
            // edges still needed from v back to s
            if self.dist[v] > self.len - depth {
                continue;
            }
            let mut next = visited;
            set(&mut next, v);
            if self.dead.contains(&(next, v)) {
                continue;
            }
            self.path.push(v);
            if self.dfs(v, next) {
                return true;
            }
            self.path.pop();
            if self.dead.len() < MEMO_LIMIT {
                self.dead.insert((next, v));
            }
        }
        false
    }
}

fn cycle_w<const W: usize>(g: &Graph, len: usize) -> Option<Vec<usize>> {
    let ctx = Ctx::<W>::new(g, None);
    for s in 0..g.n() {
        if g.n() - s < len {
            break;
        }
        if !empty(&ctx.lower_twins[s]) {
            continue;
        }
        let allowed = ctx.above(s);
        let mut within = allowed;
        set(&mut within, s);
        let dist = ctx.bfs_dist(s, &within);
        let mut visited = [0u64; W];
        set(&mut visited, s);
        let mut search = CycleSearch {
            ctx: &ctx,
            len,
            s,
            allowed,
            dist,
            dead: HashSet::new(),
            path: vec![s],
        };
        if search.dfs(s, visited) {
            return Some(search.path);
        }
    }
    None
}

struct PathSearch<'a, const W: usize> {
    ctx: &'a Ctx<W>,
    order: usize,
    ends: Bits<W>,
    dead: HashSet<(Bits<W>, usize)>,
    path: Vec<usize>,
}

impl<const W: usize> PathSearch<'_, W> {
    fn dfs(&mut self, cur: usize, visited: Bits<W>) -> bool {
        let depth = self.path.len();
        let free = andnot(&self.ctx.all(), &visited);
        if depth == self.order - 1 {
            let close = and(&and(&self.ctx.adj[cur], &self.ends), &free);
            if let Some(v) = first(&close) {
                self.path.push(v);
                return true;
            }
            return false;
        }
        let cand = self.ctx.canonical(and(&self.ctx.adj[cur], &free), &free);
        for v in ones(cand) {
            let mut next = visited;
            set(&mut next, v);
            if self.dead.contains(&(next, v)) {
                continue;
            }
            self.path.push(v);
            if self.dfs(v, next) {
                return true;
            }
            self.path.pop();
            if self.dead.len() < MEMO_LIMIT {
                self.dead.insert((next, v));
            }
        }
        false
    }
}

fn path_w<const W: usize>(g: &Graph, q: &PathQuery) -> Option<Vec<usize>> {
    let ctx = Ctx::<W>::new(g, q.endpoints_in.as_ref());
    let ends = match &q.endpoints_in {
        Some(e) => {
            let mut b = [0u64; W];
            for v in e.iter() {
                set(&mut b, v);
            }
            b
        }
        None => ctx.all(),
    };
    if q.order == 1 {
        return first(&ends).map(|v| vec![v]);
    }
    for s in ones(ends) {
        if !empty(&ctx.lower_twins[s]) {
            continue;
        }
        let mut visited = [0u64; W];
        set(&mut visited, s);
        let mut search = PathSearch {
            ctx: &ctx,
            order: q.order,
            ends,
            dead: HashSet::new(),
            path: vec![s],
        };
        if search.dfs(s, visited) {
            return Some(search.path);
        }
    }
    None
}

struct Longest<'a, const W: usize> {
    ctx: &'a Ctx<W>,
    allowed: Bits<W>,
    /// closing vertex for cycles
    start: Option<usize>,
    best: usize,
    target: usize,
}

impl<const W: usize> Longest<'_, W> {
    fn dfs(&mut self, cur: usize, visited: Bits<W>, depth: usize) {
        match self.start {
            Some(s) if depth >= 3 && test(&self.ctx.adj[cur], s) => {
                self.best = self.best.max(depth)
            }
            None => self.best = self.best.max(depth),
            _ => {}
        }
        if self.best >= self.target {
            return;
        }
        let free = andnot(&self.allowed, &visited);
        if depth + self.ctx.reach(cur, &free) <= self.best {
            return;
        }
        for v in ones(self.ctx.canonical(and(&self.ctx.adj[cur], &free), &free)) {
            let mut next = visited;
            set(&mut next, v);
            self.dfs(v, next, depth + 1);
            if self.best >= self.target {
                return;
            }
        }
    }
}

fn longest_w<const W: usize>(g: &Graph, cycle: bool) -> usize {
    let ctx = Ctx::<W>::new(g, None);
    let target = g.components().iter().map(Vec::len).max().unwrap_or(0);
    let mut best = 0;
    for s in 0..g.n() {
        if !empty(&ctx.lower_twins[s]) {
            continue;
        }
        let allowed = if cycle { ctx.above(s) } else { ctx.all() };
        let mut run = Longest {
            ctx: &ctx,
            allowed,
            start: cycle.then_some(s),
            best,
            target,
        };
        let mut visited = [0u64; W];
        set(&mut visited, s);
        run.dfs(s, visited, 1);
        best = run.best;
        if best >= target {
            break;
        }
    }
    best
}

macro_rules! dispatch {
    ($g:expr, $f:ident ( $($arg:expr),* )) => {
        match $g.stride() {
            1 => $f::<1>($($arg),*),
            2 => $f::<2>($($arg),*),
            3 | 4 => $f::<4>($($arg),*),
            5..=8 => $f::<8>($($arg),*),
            9..=16 => $f::<16>($($arg),*),
            17..=32 => $f::<32>($($arg),*),
            _ => $f::<64>($($arg),*),
        }
    };
}

fn is_cycle(g: &Graph, c: &[usize]) -> bool {
    let distinct = c.iter().collect::<HashSet<_>>().len() == c.len();
    distinct && c.len() >= 3 && (0..c.len()).all(|i| g.has_edge(c[i], c[(i + 1) % c.len()]))
}

fn is_path(g: &Graph, p: &[usize]) -> bool {
    let distinct = p.iter().collect::<HashSet<_>>().len() == p.len();
    distinct && p.windows(2).all(|w| g.has_edge(w[0], w[1]))
}

/// A cycle on exactly `len` vertices, as a vertex sequence starting at its
/// smallest vertex, or `None`. Lengths outside `3..=n` have no cycle.
pub fn has_cycle_of_length(g: &Graph, len: usize) -> Option<Vec<usize>> {
    if len < 3 || len > g.n() || g.m() < len {
        return None;
    }
    let c = dispatch!(g, cycle_w(g, len))?;
    assert!(
        c.len() == len && is_cycle(g, &c),
        "cycle witness failed validation: {c:?}"
    );
    Some(c)
}

/// A path on exactly `q.order` vertices whose ends lie in `q.endpoints_in`.
pub fn has_path(g: &Graph, q: &PathQuery) -> Option<Vec<usize>> {
    if q.order == 0 || q.order > g.n() {
        return None;
    }
    let p = dispatch!(g, path_w(g, q))?;
    let ends_ok = q
        .endpoints_in
        .as_ref()
        .is_none_or(|e| e.contains(p[0]) && e.contains(p[p.len() - 1]));
    assert!(
        p.len() == q.order && is_path(g, &p) && ends_ok,
        "path witness failed validation: {p:?}"
    );
    Some(p)
}

/// Length of a longest cycle, 0 for forests.
pub fn longest_cycle(g: &Graph) -> Result<usize> {
    ensure_cap("longest cycle search", g.n(), SEARCH_CAP)?;
    Ok(dispatch!(g, longest_w(g, true)))
}

/// Number of vertices on a longest path.
pub fn longest_path(g: &Graph) -> Result<usize> {
    ensure_cap("longest path search", g.n(), SEARCH_CAP)?;
    Ok(dispatch!(g, longest_w(g, false)))
}

pub fn is_hamiltonian(g: &Graph) -> Result<bool> {
    ensure_cap("Hamiltonicity search", g.n(), SEARCH_CAP)?;
    Ok(g.n() >= 3 && has_cycle_of_length(g, g.n()).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::graph::{construct, graph6, FamilySpec};

    fn g(spec: FamilySpec) -> Graph {
        construct(&spec).unwrap()
    }

    #[test]
    fn snk_plus_cycles() {
        let s = g(FamilySpec::SnkPlus { n: 6, k: 2 });
        let c = has_cycle_of_length(&s, 5).unwrap();
        assert_eq!(c.len(), 5);
        assert!(has_cycle_of_length(&s, 6).is_none());
        let c7 = g(FamilySpec::Cycle { n: 7 });
        assert_eq!(
            has_cycle_of_length(&c7, 7).unwrap(),
            vec![0, 1, 2, 3, 4, 5, 6]
        );
    }

    #[test]
    fn triangle_witness() {
        let k3 = graph6::decode("Bw").unwrap();
        assert_eq!(has_cycle_of_length(&k3, 3).unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn out_of_range_lengths() {
        let k4 = g(FamilySpec::Complete { n: 4 });
        assert!(has_cycle_of_length(&k4, 2).is_none());
        assert!(has_cycle_of_length(&k4, 5).is_none());
        assert!(has_path(&k4, &PathQuery::new(0)).is_none());
    }

    #[test]
    fn paths() {
        let k5 = g(FamilySpec::Complete { n: 5 });
        let full = VertexSet::full(5);
        assert_eq!(
            has_path(&k5, &PathQuery::with_endpoints(5, full))
                .unwrap()
                .len(),
            5
        );
        let star = g(FamilySpec::Star { n: 10 });
        assert!(has_path(&star, &PathQuery::new(4)).is_none());
        assert_eq!(has_path(&star, &PathQuery::new(3)).unwrap().len(), 3);
        // endpoints restricted to leaves of a star: the path must pass the centre
        let leaves = VertexSet::from_vertices(10, 1..10).unwrap();
        let p = has_path(&star, &PathQuery::with_endpoints(3, leaves.clone())).unwrap();
        assert_eq!(p[1], 0);
        assert!(has_path(&star, &PathQuery::with_endpoints(2, leaves)).is_none());
    }

    #[test]
    fn snk_plus_paths() {
        // S_{10,2}^+ has no P_7: a path alternates through two clique vertices
        // and can use the extra edge once
        let s = g(FamilySpec::SnkPlus { n: 10, k: 2 });
        assert!(has_path(&s, &PathQuery::new(5)).is_some());
        assert!(has_path(&s, &PathQuery::new(6)).is_some());
        assert!(has_path(&s, &PathQuery::new(7)).is_none());
        assert_eq!(longest_path(&s).unwrap(), 6);
    }

    #[test]
    fn longest() {
        assert_eq!(
            longest_cycle(&g(FamilySpec::Ltk { t: 3, k: 2 })).unwrap(),
            3
        );
        assert_eq!(
            longest_cycle(&g(FamilySpec::SnkPlus { n: 8, k: 2 })).unwrap(),
            5
        );
        assert_eq!(longest_cycle(&g(FamilySpec::Path { n: 7 })).unwrap(), 0);
        assert_eq!(longest_cycle(&g(FamilySpec::Star { n: 7 })).unwrap(), 0);
        assert_eq!(longest_path(&g(FamilySpec::Star { n: 7 })).unwrap(), 3);
        assert_eq!(longest_path(&g(FamilySpec::Empty { n: 3 })).unwrap(), 1);
    }

    #[test]
    fn hamiltonian() {
        assert!(is_hamiltonian(&g(FamilySpec::Cycle { n: 6 })).unwrap());
        assert!(!is_hamiltonian(&g(FamilySpec::Star { n: 4 })).unwrap());
        let k4 = g(FamilySpec::Complete { n: 4 });
        assert!(is_hamiltonian(&k4.without_edge(0, 1).unwrap()).unwrap());
        assert!(!is_hamiltonian(&g(FamilySpec::Complete { n: 2 })).unwrap());
        assert!(matches!(
            is_hamiltonian(&g(FamilySpec::Cycle { n: 25 })),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn wide_graphs() {
        let c = g(FamilySpec::Cycle { n: 130 });
        assert_eq!(has_cycle_of_length(&c, 130).unwrap().len(), 130);
        assert!(has_cycle_of_length(&c, 129).is_none());
        let s = g(FamilySpec::SnkPlus { n: 200, k: 3 });
        assert!(has_cycle_of_length(&s, 7).is_some());
        assert!(has_cycle_of_length(&s, 8).is_none());
    }
}
