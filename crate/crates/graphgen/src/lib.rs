//! Isomorph-free enumeration of every simple graph on at most nine vertices,
//! emitted as graph6 lines.
//!
//! Graphs on `n` vertices are grown from the representatives on `n - 1`
//! vertices by attaching one new vertex of minimum degree. Each candidate is
//! reduced to a canonical code (equitable partition refinement plus
//! individualisation, taking the largest code over the search leaves) and
//! deduplicated on that code. This crate is only a corpus source for tests
//! and benches; the library itself always ingests streams.

use std::collections::HashSet;

/// Largest order this generator supports.
pub const MAX_ORDER: usize = 9;

/// Number of unlabelled graphs on `n` vertices (OEIS A000088), `n = 0..=9`.
pub const GRAPH_COUNTS: [usize; MAX_ORDER + 1] = [1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668];

type Rows = [u16; MAX_ORDER];

fn bits(mut set: u16) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if set == 0 {
            None
        } else {
            let v = set.trailing_zeros() as usize;
            set &= set - 1;
            Some(v)
        }
    })
}

/// Split cells by neighbour counts into earlier cells until the ordered
/// partition is equitable. Sub-cells are ordered by count, which keeps the
/// result labelling-invariant.
fn refine(adj: &Rows, cells: &mut Vec<u16>) {
    loop {
        let mut split = None;
        for &splitter in cells.iter() {
            let mut out = Vec::with_capacity(cells.len() + 2);
            let mut any = false;
            for &cell in cells.iter() {
                if cell.count_ones() == 1 {
                    out.push(cell);
                    continue;
                }
                let mut buckets = [0u16; MAX_ORDER + 1];
                for v in bits(cell) {
                    buckets[(adj[v] & splitter).count_ones() as usize] |= 1 << v;
                }
                let parts = buckets.iter().filter(|b| **b != 0).count();
                any |= parts > 1;
                out.extend(buckets.iter().copied().filter(|b| *b != 0));
            }
            if any {
                split = Some(out);
                break;
            }
        }
        match split {
            Some(out) => *cells = out,
            None => return,
        }
    }
}

fn leaf_code(adj: &Rows, n: usize, cells: &[u16]) -> u64 {
    let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
    let mut code = 0u64;
    for j in 1..n {
        for i in 0..j {
            code = (code << 1) | u64::from(adj[order[i]] >> order[j] & 1);
        }
    }
    code
}

fn twins(adj: &Rows, u: usize, v: usize) -> bool {
    (adj[u] & !(1 << v)) == (adj[v] & !(1 << u))
}

fn search(adj: &Rows, n: usize, mut cells: Vec<u16>, best: &mut u64) {
    refine(adj, &mut cells);
    if cells.len() == n {
        *best = (*best).max(leaf_code(adj, n, &cells));
        return;
    }
    let idx = cells
        .iter()
        .position(|c| c.count_ones() > 1)
        .expect("non-discrete partition");
    let cell = cells[idx];
    let mut tried = 0u16;
    for v in bits(cell) {
        // Swapping two twins is an automorphism fixing everything else, so
        // their subtrees produce identical leaves.
        if bits(tried).any(|u| twins(adj, u, v)) {
            continue;
        }
        tried |= 1 << v;
        let mut next = cells.clone();
        next[idx] = 1 << v;
        next.insert(idx + 1, cell & !(1 << v));
        search(adj, n, next, best);
    }
}

/// Canonical code of a labelled graph: equal codes iff isomorphic.
fn canonical_code(adj: &Rows, n: usize) -> u64 {
    if n <= 1 {
        return 0;
    }
    let mut best = 0;
    search(adj, n, vec![(1u16 << n) - 1], &mut best);
    best
}

fn decode_code(code: u64, n: usize) -> Rows {
    let mut adj = [0u16; MAX_ORDER];
    let total = n * (n - 1) / 2;
    let mut pos = 0;
    for j in 1..n {
        for i in 0..j {
            if code >> (total - 1 - pos) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            pos += 1;
        }
    }
    adj
}

fn graph6_line(code: u64, n: usize) -> String {
    let total = n * (n - 1) / 2;
    let mut out = String::with_capacity(2 + total / 6);
    out.push((n as u8 + 63) as char);
    let mut pos = 0;
    while pos < total {
        let mut sextet = 0u8;
        for b in 0..6 {
            let bit = if pos + b < total {
                (code >> (total - 1 - pos - b) & 1) as u8
            } else {
                0
            };
            sextet = (sextet << 1) | bit;
        }
        out.push((sextet + 63) as char);
        pos += 6;
    }
    out
}

fn extend(reps: &[u64], n: usize) -> Vec<u64> {
    // `reps` are canonical codes on n - 1 vertices.
    let prev = n - 1;
    let mut seen = HashSet::new();
    for &code in reps {
        let base = if prev == 0 {
            [0u16; MAX_ORDER]
        } else {
            decode_code(code, prev)
        };
        for subset in 0u16..(1 << prev) {
            let size = subset.count_ones();
            // The new vertex must have minimum degree in the extended graph.
            let min_deg = (0..prev)
                .map(|v| base[v].count_ones() + u32::from(subset >> v & 1))
                .min()
                .unwrap_or(u32::MAX);
            if size > min_deg {
                continue;
            }
            let mut adj = base;
            adj[prev] = subset;
            for v in bits(subset) {
                adj[v] |= 1 << prev;
            }
            seen.insert(canonical_code(&adj, n));
        }
    }
    let mut out: Vec<u64> = seen.into_iter().collect();
    out.sort_unstable();
    out
}

/// All unlabelled graphs on exactly `n` vertices (`1 <= n <= 9`), one graph6
/// line each, sorted lexicographically.
pub fn all_graphs(n: usize) -> Vec<String> {
    assert!(
        (1..=MAX_ORDER).contains(&n),
        "order {n} outside 1..={MAX_ORDER}"
    );
    let mut reps = vec![0u64];
    for order in 2..=n {
        reps = extend(&reps, order);
    }
    let mut lines: Vec<String> = reps.iter().map(|&c| graph6_line(c, n)).collect();
    lines.sort();
    lines
}

/// Every graph with order in `orders`, concatenated as a newline-terminated
/// graph6 stream (smallest order first).
pub fn stream(orders: impl IntoIterator<Item = usize>) -> String {
    let mut out = String::new();
    for n in orders {
        for line in all_graphs(n) {
            out.push_str(&line);
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_oeis_up_to_eight() {
        for (n, &count) in GRAPH_COUNTS.iter().enumerate().take(9).skip(1) {
            assert_eq!(all_graphs(n).len(), count, "n = {n}");
        }
    }

    #[test]
    fn relabelled_path_gets_one_code() {
        let mut a = [0u16; MAX_ORDER];
        // path 0-1-2 plus isolated 3, and the same path as 3-0-1 plus isolated 2
        a[0] = 0b010;
        a[1] = 0b101;
        a[2] = 0b010;
        let mut b = [0u16; MAX_ORDER];
        b[3] = 0b0001;
        b[0] = 0b1010;
        b[1] = 0b0001;
        assert_eq!(canonical_code(&a, 4), canonical_code(&b, 4));
    }

    #[test]
    #[ignore = "about a second in release, much longer unoptimised"]
    fn nine_vertices() {
        assert_eq!(all_graphs(9).len(), GRAPH_COUNTS[9]);
    }

    #[test]
    fn complete_graph_line() {
        assert_eq!(all_graphs(3).last().unwrap(), "Bw");
    }
}
