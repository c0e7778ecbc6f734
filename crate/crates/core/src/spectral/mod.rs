//! Q-index and adjacency spectral radius: float certificates, exact
//! isolation, and certified comparison.

mod exact;
pub mod poly;
mod power;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use exact::{
    equitable_partition, qindex_equals, qindex_exact, ExactRoot, ExactSource, EXACT_CAP,
};
pub use power::{mu_float, qindex_float, SpectralCertificate, DEFAULT_TOL, MAX_ITERATIONS};

/// Closed rational interval, serialized as a pair of `"p/q"` strings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl Interval {
    pub fn from_f64(lo: f64, hi: f64) -> Interval {
        Interval {
            lo: exact::rational(lo),
            hi: exact::rational(hi),
        }
    }

    pub fn from_certificate(c: &SpectralCertificate) -> Interval {
        Self::from_f64(c.q_lo, c.q_hi)
    }

    pub fn from_root(r: &ExactRoot) -> Interval {
        Interval {
            lo: r.lo.clone(),
            hi: r.hi.clone(),
        }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn intersects(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    /// Rounded midpoint, for display.
    pub fn approx(&self) -> f64 {
        use num_traits::ToPrimitive;
        ((&self.lo + &self.hi) / BigRational::from_integer(2.into()))
            .to_f64()
            .unwrap_or(f64::NAN)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl Serialize for Interval {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        (self.lo.to_string(), self.hi.to_string()).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Interval {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let (lo, hi) = <(String, String)>::deserialize(d)?;
        let parse = |s: &str| BigRational::from_str(s).map_err(serde::de::Error::custom);
        Ok(Interval {
            lo: parse(&lo)?,
            hi: parse(&hi)?,
        })
    }
}

/// How a comparison was settled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CompareMethod {
    Identical,
    Float,
    Exact,
}

/// Certified ordering of `q(left)` against `q(right)` with the enclosures
/// that justify it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Comparison {
    #[serde(with = "ordering_name")]
    pub ordering: Ordering,
    pub left: Interval,
    pub right: Interval,
    pub method: CompareMethod,
}

/// Serde adapter writing orderings as `"less"`, `"equal"`, `"greater"`.
pub mod ordering_name {
    use std::cmp::Ordering;

    use serde::{Deserialize, Deserializer, Serializer};

    pub fn name(o: Ordering) -> &'static str {
        match o {
            Ordering::Less => "less",
            Ordering::Equal => "equal",
            Ordering::Greater => "greater",
        }
    }

    pub fn serialize<S: Serializer>(o: &Ordering, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(name(*o))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Ordering, D::Error> {
        match String::deserialize(d)?.as_str() {
            "less" => Ok(Ordering::Less),
            "equal" => Ok(Ordering::Equal),
            "greater" => Ok(Ordering::Greater),
            other => Err(serde::de::Error::custom(format!(
                "unknown ordering {other:?}"
            ))),
        }
    }
}

/// Float tolerance used for a second pass before escalating to exact mode.
const TIGHT_TOL: f64 = 1e-14;

/// Certified comparison of `q(g1)` and `q(g2)`.
pub fn compare_q_detailed(g1: &Graph, g2: &Graph) -> Result<Comparison> {
    let c1 = qindex_float(g1, DEFAULT_TOL);
    if g1 == g2 {
        let i = Interval::from_certificate(&c1);
        return Ok(Comparison {
            ordering: Ordering::Equal,
            left: i.clone(),
            right: i,
            method: CompareMethod::Identical,
        });
    }
    compare_with(g1, &c1, g2, &qindex_float(g2, DEFAULT_TOL))
}

/// As [`compare_q_detailed`], reusing existing float certificates.
pub fn compare_with(
    g1: &Graph,
    c1: &SpectralCertificate,
    g2: &Graph,
    c2: &SpectralCertificate,
) -> Result<Comparison> {
    let float = |a: &SpectralCertificate, b: &SpectralCertificate| {
        let ordering = if a.certainly_below(b) {
            Ordering::Less
        } else if b.certainly_below(a) {
            Ordering::Greater
        } else {
            return None;
        };
        Some(Comparison {
            ordering,
            left: Interval::from_certificate(a),
            right: Interval::from_certificate(b),
            method: CompareMethod::Float,
        })
    };
    if let Some(c) = float(c1, c2) {
        return Ok(c);
    }
    let (t1, t2) = (qindex_float(g1, TIGHT_TOL), qindex_float(g2, TIGHT_TOL));
    if let Some(c) = float(&t1, &t2) {
        return Ok(c);
    }
    let cells = exact::root_cell(g1).and_then(|a| Ok((a, exact::root_cell(g2)?)));
    let (mut a, mut b) = match cells {
        Ok(pair) => pair,
        Err(Error::TooLarge { what, n, cap }) => {
            return Err(Error::UndecidableAtCap {
                detail: format!(
                    "float intervals {} and {} overlap; {what} needs n <= {cap}, got {n}",
                    fmt_cert(&t1),
                    fmt_cert(&t2)
                ),
            })
        }
        Err(e) => return Err(e),
    };
    let ordering = exact::compare_cells(&mut a, &mut b);
    Ok(Comparison {
        ordering,
        left: Interval { lo: a.lo, hi: a.hi },
        right: Interval { lo: b.lo, hi: b.hi },
        method: CompareMethod::Exact,
    })
}

fn fmt_cert(c: &SpectralCertificate) -> String {
    format!("[{:.15}, {:.15}]", c.q_lo, c.q_hi)
}

/// Certified ordering of `q(g1)` against `q(g2)`.
pub fn compare_q(g1: &Graph, g2: &Graph) -> Result<Ordering> {
    compare_q_detailed(g1, g2).map(|c| c.ordering)
}

/// `<Qx, x> = sum over edges {i, j} of (x_i + x_j)^2`.
pub fn quadratic_form(g: &Graph, x: &[f64]) -> Result<f64> {
    if x.len() != g.n() {
        return Err(Error::DimensionMismatch {
            expected: g.n(),
            got: x.len(),
        });
    }
    let value: f64 = g.edges().map(|(i, j)| (x[i] + x[j]).powi(2)).sum();
    if cfg!(debug_assertions) {
        let matrix: f64 = (0..g.n())
            .map(|i| x[i] * (g.degree(i) as f64 * x[i] + g.neighbors(i).map(|j| x[j]).sum::<f64>()))
            .sum();
        let scale = 1.0 + matrix.abs().max(value.abs());
        debug_assert!(
            (value - matrix).abs() <= 1e-9 * scale,
            "edge form {value} vs matrix form {matrix}"
        );
    }
    Ok(value)
}
