use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::poly::{charpoly, Poly, Sturm};
use super::power::{qindex_float, DEFAULT_TOL};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order for which the full characteristic polynomial is used.
pub const EXACT_CAP: usize = 32;

/// Which polynomial an [`ExactRoot`] was isolated from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ExactSource {
    /// `det(xI - Q)`, degree `n`.
    Full,
    /// Characteristic polynomial of the quotient of `Q` by the coarsest
    /// equitable partition, degree `cells`. Its largest root is `q(G)`.
    EquitableQuotient { cells: usize },
}

/// Largest root of an integer polynomial, isolated in an open rational
/// interval `(lo, hi)` that contains no other root.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactRoot {
    /// Lowest degree first.
    pub coefficients: Vec<BigInt>,
    pub lo: BigRational,
    pub hi: BigRational,
    pub width: BigRational,
    pub source: ExactSource,
}

impl ExactRoot {
    /// Outward-rounded float enclosure.
    pub fn to_f64_bounds(&self) -> (f64, f64) {
        let lo = self.lo.to_f64().unwrap_or(f64::NEG_INFINITY);
        let hi = self.hi.to_f64().unwrap_or(f64::INFINITY);
        (lo.next_down().next_down(), hi.next_up().next_up())
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo < x && x < &self.hi
    }
}

/// Root isolation state that can be refined further.
#[derive(Clone, Debug)]
pub(crate) struct RootCell {
    pub(crate) full: Poly,
    pub(crate) squarefree: Poly,
    sturm: Sturm,
    pub(crate) lo: BigRational,
    pub(crate) hi: BigRational,
    pub(crate) source: ExactSource,
}

pub(crate) fn rational(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite float")
}

impl RootCell {
    fn new(full: Poly, source: ExactSource, hint: Option<(f64, f64)>) -> RootCell {
        let squarefree = full.squarefree();
        let sturm = Sturm::new(&squarefree);
        let bound = squarefree.root_bound();
        let mut bracket = (-bound.clone(), bound);
        if let Some((flo, fhi)) = hint {
            let pad = rational((fhi - flo).abs().max(1e-9) + 1e-12 * fhi.abs());
            let (a, b) = (rational(flo) - &pad, rational(fhi) + &pad);
            if sturm.count_above(&b) == 0 && sturm.count(&a, &b) >= 1 {
                bracket = (a, b);
            }
        }
        let mut cell = RootCell {
            full,
            squarefree,
            sturm,
            lo: bracket.0,
            hi: bracket.1,
            source,
        };
        cell.refine(None);
        cell
    }

    fn is_root(&self, x: &BigRational) -> bool {
        self.squarefree.sign_at(x) == Ordering::Equal
    }

    /// Shrink until `(lo, hi)` isolates the largest root and, if given,
    /// `hi - lo <= width`. Invariant: the largest root lies in `(lo, hi]`
    /// and nothing lies above `hi`.
    fn refine(&mut self, width: Option<&BigRational>) {
        let two = BigRational::from_integer(BigInt::from(2));
        loop {
            if self.is_root(&self.hi) {
                // the largest root is exactly hi; centre a small open
                // interval on it
                let r = self.hi.clone();
                let mut delta = match width {
                    Some(w) => w / &two,
                    None => (&self.hi - &self.lo) / &two,
                };
                while self.sturm.count(&(&r - &delta), &r) != 1 || self.is_root(&(&r - &delta)) {
                    delta /= &two;
                }
                self.lo = &r - &delta;
                self.hi = &r + &delta;
                return;
            }
            let isolated = self.sturm.count(&self.lo, &self.hi) == 1 && !self.is_root(&self.lo);
            let narrow = width.is_none_or(|w| &(&self.hi - &self.lo) <= w);
            if isolated && narrow {
                return;
            }
            let mid = (&self.lo + &self.hi) / &two;
            if self.sturm.count(&mid, &self.hi) >= 1 {
                self.lo = mid;
            } else {
                self.hi = mid;
            }
        }
    }

    pub(crate) fn halve(&mut self) {
        let w = (&self.hi - &self.lo) / BigRational::from_integer(BigInt::from(2));
        self.refine(Some(&w));
    }

    pub(crate) fn root(&self, width: &BigRational) -> ExactRoot {
        let mut c = self.clone();
        c.refine(Some(width));
        ExactRoot {
            coefficients: c.full.0.clone(),
            width: &c.hi - &c.lo,
            lo: c.lo,
            hi: c.hi,
            source: c.source,
        }
    }
}

fn q_matrix(g: &Graph) -> Vec<Vec<BigInt>> {
    (0..g.n())
        .map(|u| {
            (0..g.n())
                .map(|v| {
                    if u == v {
                        BigInt::from(g.degree(u))
                    } else {
                        BigInt::from(u8::from(g.has_edge(u, v)))
                    }
                })
                .collect()
        })
        .collect()
}

/// Cells of the coarsest equitable partition, each sorted, ordered by first
/// member.
pub fn equitable_partition(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut colour = vec![0usize; n];
    let mut classes = 1;
    loop {
        let mut sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|u| {
                let mut counts = vec![0usize; classes];
                for v in g.neighbors(u) {
                    counts[colour[v]] += 1;
                }
                (colour[u], counts)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sigs
            .iter()
            .map(|s| distinct.binary_search(s).expect("present"))
            .collect();
        let stable = distinct.len() == classes;
        colour = next;
        classes = distinct.len();
        sigs.clear();
        if stable {
            break;
        }
    }
    let mut cells: Vec<Vec<usize>> = vec![Vec::new(); classes];
    for u in 0..n {
        cells[colour[u]].push(u);
    }
    cells.sort_by_key(|c| c[0]);
    cells
}

fn quotient_matrix(g: &Graph, cells: &[Vec<usize>]) -> Vec<Vec<BigInt>> {
    let mut cell_of = vec![0; g.n()];
    for (i, c) in cells.iter().enumerate() {
        for &u in c {
            cell_of[u] = i;
        }
    }
    cells
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let u = c[0];
            let mut row = vec![BigInt::zero(); cells.len()];
            for v in g.neighbors(u) {
                row[cell_of[v]] += 1;
            }
            row[i] += g.degree(u);
            row
        })
        .collect()
}

pub(crate) fn root_cell(g: &Graph) -> Result<RootCell> {
    let cert = qindex_float(g, DEFAULT_TOL);
    let hint = Some((cert.q_lo, cert.q_hi));
    if g.n() <= EXACT_CAP {
        return Ok(RootCell::new(
            charpoly(&q_matrix(g)),
            ExactSource::Full,
            hint,
        ));
    }
    let cells = equitable_partition(g);
    if cells.len() > EXACT_CAP {
        return Err(Error::TooLarge {
            what: "exact Q-index (equitable quotient cells)",
            n: cells.len(),
            cap: EXACT_CAP,
        });
    }
    let source = ExactSource::EquitableQuotient { cells: cells.len() };
    Ok(RootCell::new(
        charpoly(&quotient_matrix(g, &cells)),
        source,
        hint,
    ))
}

/// Exact Q-index: the largest root of an integer characteristic polynomial,
/// isolated by Sturm sequences and bisected to `width`.
///
/// For `n <= 32` the polynomial is `det(xI - Q)`. Larger graphs fall back to
/// the quotient by the coarsest equitable partition when it has at most 32
/// cells; otherwise the result is `TooLarge`.
pub fn qindex_exact(g: &Graph, width: &BigRational) -> Result<ExactRoot> {
    if !width.is_positive() {
        return Err(Error::InvalidParameters("width must be positive".into()));
    }
    Ok(root_cell(g)?.root(width))
}

/// Whether `q(G)` equals the rational `value` exactly: `value` must be a
/// root of the characteristic polynomial with no larger root.
pub fn qindex_equals(g: &Graph, value: &BigRational) -> Result<bool> {
    let cell = root_cell(g)?;
    Ok(cell.is_root(value) && cell.sturm.count_above(value) == 0)
}

/// Certified ordering of two isolated roots; `Equal` only when their
/// squarefree polynomials share a root inside both intervals.
pub(crate) fn compare_cells(a: &mut RootCell, b: &mut RootCell) -> Ordering {
    let lo = if a.lo > b.lo {
        a.lo.clone()
    } else {
        b.lo.clone()
    };
    let hi = if a.hi < b.hi {
        a.hi.clone()
    } else {
        b.hi.clone()
    };
    if lo < hi {
        let g = a.squarefree.gcd(&b.squarefree);
        if g.degree() >= 1 && Sturm::new(&g).count(&lo, &hi) >= 1 {
            return Ordering::Equal;
        }
    }
    loop {
        if a.hi <= b.lo {
            return Ordering::Less;
        }
        if b.hi <= a.lo {
            return Ordering::Greater;
        }
        a.halve();
        b.halve();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{construct, graph6, FamilySpec};

    fn w() -> BigRational {
        BigRational::new(1.into(), 1_000_000_000.into())
    }

    fn exact(spec: FamilySpec) -> ExactRoot {
        qindex_exact(&construct(&spec).unwrap(), &w()).unwrap()
    }

    #[test]
    fn triangle_is_four() {
        let r = exact(FamilySpec::Complete { n: 3 });
        assert!(r.contains(&BigRational::from_integer(4.into())));
        assert_eq!(r.coefficients.len(), 4);
        assert!(r.width <= w());
    }

    #[test]
    fn path_on_three() {
        let r = qindex_exact(&graph6::decode("Bg").unwrap(), &w()).unwrap();
        assert!(r.contains(&BigRational::from_integer(3.into())));
    }

    #[test]
    fn snk_plus_21_inside_sandwich() {
        let r = exact(FamilySpec::SnkPlus { n: 21, k: 2 });
        let (lo, hi) = r.to_f64_bounds();
        assert!(lo > 22.8181 && hi < 22.8519, "({lo}, {hi})");
        assert_eq!(r.source, ExactSource::Full);
    }

    #[test]
    fn quotient_for_large_graphs() {
        let g = construct(&FamilySpec::SnkPlus { n: 100, k: 2 }).unwrap();
        assert_eq!(equitable_partition(&g).len(), 3);
        let r = qindex_exact(&g, &w()).unwrap();
        assert_eq!(r.source, ExactSource::EquitableQuotient { cells: 3 });
        let c = qindex_float(&g, DEFAULT_TOL);
        let (lo, hi) = r.to_f64_bounds();
        assert!(lo <= c.q_hi && c.q_lo <= hi);
    }

    #[test]
    fn random_like_graph_over_cap() {
        let g =
            Graph::from_edges(40, (0..39).map(|i| (i, i + 1)).chain([(0, 5), (3, 17)])).unwrap();
        assert!(matches!(
            qindex_exact(&g, &w()),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn rejects_nonpositive_width() {
        let g = construct(&FamilySpec::Complete { n: 3 }).unwrap();
        assert!(qindex_exact(&g, &BigRational::zero()).is_err());
    }
}
