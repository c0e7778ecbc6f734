use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectral::{qindex_float, SpectralCertificate, DEFAULT_TOL};

/// Comparison tolerance for float bound checks.
pub const BOUND_TOL: f64 = 1e-8;

fn ratio(num: u128, den: u128) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// The Merris value `d(u) + (1/d(u)) * sum of d(v) over neighbours v`, as an
/// exact rational, for a vertex of positive degree.
pub fn merris_value(g: &Graph, u: usize) -> Option<BigRational> {
    let d = g.degree(u) as u128;
    (d > 0).then(|| {
        let s: u128 = g.neighbors(u).map(|v| g.degree(v) as u128).sum();
        ratio(d * d + s, d)
    })
}

/// Exact maximiser of the Merris expression over vertices of positive
/// degree; ties go to the lowest index. `None` for edgeless graphs.
pub fn merris_exact(g: &Graph) -> Option<(BigRational, usize)> {
    let mut best: Option<(BigRational, usize)> = None;
    for u in 0..g.n() {
        if let Some(v) = merris_value(g, u) {
            if best.as_ref().is_none_or(|(b, _)| &v > b) {
                best = Some((v, u));
            }
        }
    }
    best
}

/// Merris upper bound on `q(G)` and the vertex attaining it. Isolated
/// vertices are skipped; edgeless graphs give `(0, None)`.
pub fn merris_bound(g: &Graph) -> (f64, Option<usize>) {
    match merris_exact(g) {
        Some((v, u)) => (to_f64(&v), Some(u)),
        None => (0.0, None),
    }
}

/// Exact Das value `2m/(n-1) + n - 2`.
pub fn das_exact(g: &Graph) -> Result<BigRational> {
    let n = g.n() as u128;
    if n < 2 {
        return Err(Error::InvalidParameters(
            "the Das bound needs n >= 2".into(),
        ));
    }
    Ok(ratio(2 * g.m() as u128 + (n - 2) * (n - 1), n - 1))
}

/// Das upper bound `2m/(n-1) + n - 2` on `q(G)`.
pub fn das_bound(g: &Graph) -> Result<f64> {
    das_exact(g).map(|r| to_f64(&r))
}

/// Both bounds next to a certified `q(G)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub merris: f64,
    pub merris_witness: Option<usize>,
    pub das: f64,
    pub q_certificate: SpectralCertificate,
    /// `merris - q_hi`
    pub slack_merris: f64,
    /// `das - q_hi`
    pub slack_das: f64,
}

impl BoundReport {
    /// Both bounds dominate `q_hi` up to [`BOUND_TOL`].
    pub fn holds(&self) -> bool {
        self.slack_merris >= -BOUND_TOL && self.slack_das >= -BOUND_TOL
    }
}

pub fn bound_report(g: &Graph) -> Result<BoundReport> {
    let das = das_bound(g)?;
    let (merris, merris_witness) = merris_bound(g);
    let q_certificate = qindex_float(g, DEFAULT_TOL);
    Ok(BoundReport {
        merris,
        merris_witness,
        das,
        slack_merris: merris - q_certificate.q_hi,
        slack_das: das - q_certificate.q_hi,
        q_certificate,
    })
}

fn sandwich_check(n: usize, k: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::InvalidParameters(format!(
            "the sandwich needs k >= 2, got {k}"
        )));
    }
    if n <= 5 * k * k {
        return Err(Error::OutOfRegime { n, k });
    }
    Ok(())
}

/// Exact rational form of [`snk_plus_sandwich`].
pub fn snk_plus_sandwich_exact(n: usize, k: usize) -> Result<(BigRational, BigRational)> {
    sandwich_check(n, k)?;
    let (n, k) = (n as u128, k as u128);
    let base = BigRational::from_integer(BigInt::from(n + 2 * k - 2));
    let c = 2 * k * (k - 1);
    Ok((
        &base - ratio(c, n + 2 * k - 3),
        base - ratio(c, n + 2 * k + 2),
    ))
}

/// Bracket for `q(S_{n,k}^+)` valid for `k >= 2`, `n > 5k^2`:
/// `n+2k-2 - 2k(k-1)/(n+2k-3) < q < n+2k-2 - 2k(k-1)/(n+2k+2)`.
pub fn snk_plus_sandwich(n: usize, k: usize) -> Result<(f64, f64)> {
    let (lo, hi) = snk_plus_sandwich_exact(n, k)?;
    Ok((to_f64(&lo), to_f64(&hi)))
}

/// `kn - k^2 + 1` next to `e(S_{n,k}^+)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeBound {
    pub lower: i64,
    pub snk_plus_edges: i64,
    /// `e(S_{n,k}^+) - lower = k(k-1)/2`
    pub difference: i64,
}

/// Edge count forced by `q(G) >= q(S_{n,k}^+)` through the Das bound.
pub fn edge_lower_bound(n: usize, k: usize) -> Result<EdgeBound> {
    if k < 2 {
        return Err(Error::InvalidParameters(format!(
            "the edge bound needs k >= 2, got {k}"
        )));
    }
    let (n, k) = (n as i64, k as i64);
    let lower = k * n - k * k + 1;
    let snk_plus_edges = k * n - k * (k + 1) / 2 + 1;
    Ok(EdgeBound {
        lower,
        snk_plus_edges,
        difference: snk_plus_edges - lower,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{construct, graph6, FamilySpec};
    use crate::spectral::qindex_equals;

    fn g(spec: FamilySpec) -> Graph {
        construct(&spec).unwrap()
    }

    #[test]
    fn merris_examples() {
        assert_eq!(merris_bound(&g(FamilySpec::Cycle { n: 7 })), (4.0, Some(0)));
        assert_eq!(merris_bound(&graph6::decode("Bg").unwrap()), (3.0, Some(0)));
        // centre 4 + 4/4 and leaves 1 + 4/1 both give 5 = q(K_{1,4})
        let star = g(FamilySpec::Star { n: 5 });
        let (v, w) = merris_exact(&star).unwrap();
        assert_eq!(v, BigRational::from_integer(5.into()));
        assert_eq!(w, 0);
        assert!(qindex_equals(&star, &v).unwrap());
        assert_eq!(merris_bound(&g(FamilySpec::Empty { n: 3 })), (0.0, None));
    }

    #[test]
    fn das_examples() {
        assert_eq!(das_bound(&g(FamilySpec::Complete { n: 4 })).unwrap(), 6.0);
        assert_eq!(das_bound(&g(FamilySpec::Star { n: 5 })).unwrap(), 5.0);
        assert_eq!(das_bound(&g(FamilySpec::Cycle { n: 5 })).unwrap(), 5.5);
        assert!(das_bound(&g(FamilySpec::Complete { n: 1 })).is_err());
    }

    #[test]
    fn sandwich_examples() {
        let (lo, hi) = snk_plus_sandwich(21, 2).unwrap();
        assert!((lo - 22.818181818181817).abs() < 1e-12);
        assert!((hi - 22.85185185185185).abs() < 1e-12);
        let (lo, hi) = snk_plus_sandwich(100, 2).unwrap();
        assert!((lo - (102.0 - 4.0 / 101.0)).abs() < 1e-12);
        assert!((hi - (102.0 - 4.0 / 106.0)).abs() < 1e-12);
        assert_eq!(
            snk_plus_sandwich(20, 2),
            Err(Error::OutOfRegime { n: 20, k: 2 })
        );
    }

    #[test]
    fn edge_bound_examples() {
        assert_eq!(
            edge_lower_bound(6, 2).unwrap(),
            EdgeBound {
                lower: 9,
                snk_plus_edges: 10,
                difference: 1
            }
        );
        assert_eq!(edge_lower_bound(3600, 3).unwrap().lower, 10792);
        assert_eq!(edge_lower_bound(10, 2).unwrap().lower, 17);
    }

    #[test]
    fn report_slacks() {
        let r = bound_report(&g(FamilySpec::Cycle { n: 5 })).unwrap();
        assert!(r.holds());
        assert!(r.slack_merris.abs() < 1e-9);
        assert!((r.slack_das - 1.5).abs() < 1e-9);
    }
}
