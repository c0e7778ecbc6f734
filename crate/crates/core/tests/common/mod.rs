//! Test-only oracles and generators, independent of the library's algorithms.

#![allow(dead_code)]

pub mod strategy;

use qext_core::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi graph with edge probability `p`.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Random order in `lo..=hi` and random density.
pub fn random_any(rng: &mut ChaCha8Rng, lo: usize, hi: usize) -> Graph {
    let n = rng.random_range(lo..=hi);
    let p = rng.random_range(0.05..0.95);
    random_graph(rng, n, p)
}

pub fn q_matrix(g: &Graph) -> Vec<Vec<f64>> {
    let n = g.n();
    let mut m = vec![vec![0.0; n]; n];
    for (u, v) in g.edges() {
        m[u][v] = 1.0;
        m[v][u] = 1.0;
    }
    for (u, row) in m.iter_mut().enumerate() {
        row[u] = g.degree(u) as f64;
    }
    m
}

/// All eigenvalues of a symmetric matrix by cyclic Jacobi rotations,
/// ascending.
#[allow(clippy::needless_range_loop)]
pub fn jacobi_eigenvalues(mut a: Vec<Vec<f64>>) -> Vec<f64> {
    let n = a.len();
    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum();
        if off < 1e-26 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for row in a.iter_mut() {
                    let (akp, akq) = (row[p], row[q]);
                    row[p] = c * akp - s * akq;
                    row[q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut ev: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    ev.sort_by(f64::total_cmp);
    ev
}

pub fn q_oracle(g: &Graph) -> f64 {
    *jacobi_eigenvalues(q_matrix(g)).last().unwrap()
}

fn extend_path(
    g: &Graph,
    path: &mut Vec<usize>,
    used: &mut [bool],
    want: usize,
    done: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if path.len() == want {
        return done(path);
    }
    let last = *path.last().unwrap();
    for v in 0..g.n() {
        if !used[v] && g.has_edge(last, v) {
            used[v] = true;
            path.push(v);
            if extend_path(g, path, used, want, done) {
                return true;
            }
            path.pop();
            used[v] = false;
        }
    }
    false
}

/// Plain backtracking over all simple paths on `order` vertices whose ends
/// satisfy `ends`; no pruning.
pub fn brute_path(g: &Graph, order: usize, ends: &dyn Fn(usize, usize) -> bool) -> bool {
    let n = g.n();
    if order == 0 || order > n {
        return false;
    }
    (0..n).any(|s| {
        let mut used = vec![false; n];
        used[s] = true;
        let mut path = vec![s];
        extend_path(g, &mut path, &mut used, order, &mut |p: &[usize]| {
            ends(p[0], p[p.len() - 1])
        })
    })
}

/// Whether a cycle on exactly `len` vertices exists.
pub fn brute_cycle(g: &Graph, len: usize) -> bool {
    len >= 3 && brute_path(g, len, &|a, b| g.has_edge(a, b))
}

/// Graph from `parts` placed side by side after a new vertex 0 that is
/// joined to everything. Returns the offset of each part.
pub fn under_hub(parts: &[Graph]) -> (Graph, Vec<usize>) {
    let mut edges = Vec::new();
    let mut offsets = Vec::new();
    let mut next = 1;
    for p in parts {
        offsets.push(next);
        edges.extend(p.edges().map(|(u, v)| (u + next, v + next)));
        next += p.n();
    }
    edges.extend((1..next).map(|v| (0, v)));
    (Graph::from_edges(next, edges).unwrap(), offsets)
}
