use std::collections::BTreeMap;

use super::Graph;
use crate::error::{ensure_cap, Result};

/// Largest order accepted by [`isomorphic`].
pub const ISOMORPHISM_CAP: usize = 12;

/// Colour refinement run on both graphs with a shared colour table, so equal
/// colours mean equal refinement histories.
fn joint_refine(g1: &Graph, g2: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    let mut c1 = g1.degrees();
    let mut c2 = g2.degrees();
    loop {
        let mut table = BTreeMap::new();
        let sig = |g: &Graph, c: &[usize], u: usize| {
            let mut nb: Vec<usize> = g.neighbors(u).map(|v| c[v]).collect();
            nb.sort_unstable();
            (c[u], nb)
        };
        let s1: Vec<_> = (0..g1.n()).map(|u| sig(g1, &c1, u)).collect();
        let s2: Vec<_> = (0..g2.n()).map(|u| sig(g2, &c2, u)).collect();
        for s in s1.iter().chain(&s2) {
            let next = table.len();
            table.entry(s.clone()).or_insert(next);
        }
        // renumber in sorted signature order so both sides agree
        for (i, v) in table.values_mut().enumerate() {
            *v = i;
        }
        let n1: Vec<usize> = s1.iter().map(|s| table[s]).collect();
        let n2: Vec<usize> = s2.iter().map(|s| table[s]).collect();
        let mut h1 = vec![0usize; table.len()];
        let mut h2 = vec![0usize; table.len()];
        n1.iter().for_each(|&c| h1[c] += 1);
        n2.iter().for_each(|&c| h2[c] += 1);
        if h1 != h2 {
            return None;
        }
        let classes_before = {
            let mut v = c1.clone();
            v.sort_unstable();
            v.dedup();
            v.len()
        };
        let stable = table.len() == classes_before;
        c1 = n1;
        c2 = n2;
        if stable {
            return Some((c1, c2));
        }
    }
}

fn extend(
    g1: &Graph,
    g2: &Graph,
    c1: &[usize],
    c2: &[usize],
    order: &[usize],
    map: &mut Vec<usize>,
    used: &mut [bool],
) -> bool {
    let depth = map.len();
    if depth == order.len() {
        return true;
    }
    let u = order[depth];
    for v in 0..g2.n() {
        if used[v] || c2[v] != c1[u] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .zip(map.iter())
            .all(|(&a, &b)| g1.has_edge(u, a) == g2.has_edge(v, b));
        if !consistent {
            continue;
        }
        used[v] = true;
        map.push(v);
        if extend(g1, g2, c1, c2, order, map, used) {
            return true;
        }
        map.pop();
        used[v] = false;
    }
    false
}

/// Whether an adjacency-preserving bijection exists. Both graphs must have at
/// most [`ISOMORPHISM_CAP`] vertices.
pub fn isomorphic(g1: &Graph, g2: &Graph) -> Result<bool> {
    ensure_cap("isomorphism test", g1.n().max(g2.n()), ISOMORPHISM_CAP)?;
    if g1.n() != g2.n() || g1.m() != g2.m() {
        return Ok(false);
    }
    let Some((c1, c2)) = joint_refine(g1, g2) else {
        return Ok(false);
    };
    // smallest colour classes first keeps the branching low
    let mut size = BTreeMap::new();
    c1.iter().for_each(|&c| *size.entry(c).or_insert(0) += 1);
    let mut order: Vec<usize> = (0..g1.n()).collect();
    order.sort_by_key(|&u| (size[&c1[u]], c1[u], u));
    let mut used = vec![false; g2.n()];
    Ok(extend(
        g1,
        g2,
        &c1,
        &c2,
        &order,
        &mut Vec::with_capacity(g1.n()),
        &mut used,
    ))
}
