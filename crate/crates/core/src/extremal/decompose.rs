use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Split of a graph with a dominating vertex `w` into the small components
/// of `G - w` and the rest.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Decomposition {
    pub dominating_vertex: usize,
    /// Components of `G - w` of order at most `3k^2`, original labels.
    pub small_components: Vec<Vec<usize>>,
    /// Vertices of `H`, ascending; includes `w`.
    pub h_vertices: Vec<usize>,
    /// Induced subgraph on `h_vertices`.
    pub h: Graph,
}

pub fn decompose_dominated(g: &Graph, k: usize) -> Result<Decomposition> {
    if k < 2 {
        return Err(Error::InvalidParameters(format!(
            "decomposition needs k >= 2, got {k}"
        )));
    }
    let n = g.n();
    let w = *g
        .dominating_vertices()
        .first()
        .ok_or(Error::NoDominatingVertex)?;
    let threshold = 3 * k * k;
    let rest: Vec<usize> = (0..n).filter(|&v| v != w).collect();
    let mut small_components = Vec::new();
    let mut h_vertices = vec![w];
    if !rest.is_empty() {
        let gw = g.induced(&rest)?;
        for comp in gw.components() {
            let comp: Vec<usize> = comp.into_iter().map(|i| rest[i]).collect();
            if comp.len() <= threshold {
                small_components.push(comp);
            } else {
                h_vertices.extend(comp);
            }
        }
    }
    h_vertices.sort_unstable();
    let h = g.induced(&h_vertices)?;
    let wh = h_vertices.binary_search(&w).expect("w in H");
    assert_eq!(h.degree(wh), h.n() - 1, "w must dominate H");
    Ok(Decomposition {
        dominating_vertex: w,
        small_components,
        h_vertices,
        h,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{construct, FamilySpec};

    #[test]
    fn snk_plus_is_one_big_component() {
        let g = construct(&FamilySpec::SnkPlus { n: 20, k: 2 }).unwrap();
        let d = decompose_dominated(&g, 2).unwrap();
        assert_eq!(d.dominating_vertex, 0);
        assert!(d.small_components.is_empty());
        assert_eq!(d.h, g);
    }

    #[test]
    fn star_leaves_only_the_centre() {
        let g = construct(&FamilySpec::Star { n: 11 }).unwrap();
        let d = decompose_dominated(&g, 2).unwrap();
        assert_eq!(d.small_components.len(), 10);
        assert_eq!(d.h_vertices, vec![0]);
        assert_eq!(d.h.n(), 1);
    }

    #[test]
    fn drops_the_small_clique() {
        let inner = FamilySpec::DisjointUnion {
            left: Box::new(FamilySpec::Complete { n: 13 }),
            right: Box::new(FamilySpec::Complete { n: 3 }),
        };
        let spec = FamilySpec::Join {
            left: Box::new(FamilySpec::Complete { n: 1 }),
            right: Box::new(inner),
        };
        let g = construct(&spec).unwrap();
        let d = decompose_dominated(&g, 2).unwrap();
        assert_eq!(d.h.n(), 14);
        assert_eq!(d.small_components, vec![vec![14, 15, 16]]);
    }

    #[test]
    fn needs_a_dominating_vertex() {
        let c = construct(&FamilySpec::Cycle { n: 5 }).unwrap();
        assert_eq!(decompose_dominated(&c, 2), Err(Error::NoDominatingVertex));
    }
}
