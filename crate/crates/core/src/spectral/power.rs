use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// Default absolute width target for float certificates.
pub const DEFAULT_TOL: f64 = 1e-10;

/// Iteration cap per connected component.
pub const MAX_ITERATIONS: usize = 200_000;

/// Certified enclosure of the largest eigenvalue of `Q` (or `A`).
///
/// `q_lo` and `q_hi` are rigorous: the lower end comes from Rayleigh
/// quotients, the upper end from the Collatz-Wielandt bound
/// `max_i (Mx)_i / x_i` on each component, both widened to cover rounding.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralCertificate {
    pub q_lo: f64,
    pub q_hi: f64,
    /// Unit vector whose Rayleigh quotient lies in `[q_lo, q_hi]`.
    pub witness: Vec<f64>,
    /// `||Mx - rho x||_2` for the witness.
    pub residual: f64,
    pub iterations: usize,
}

impl SpectralCertificate {
    pub fn midpoint(&self) -> f64 {
        0.5 * (self.q_lo + self.q_hi)
    }

    pub fn width(&self) -> f64 {
        self.q_hi - self.q_lo
    }

    /// Certified `self < other`.
    pub fn certainly_below(&self, other: &SpectralCertificate) -> bool {
        self.q_hi < other.q_lo
    }

    pub fn overlaps(&self, other: &SpectralCertificate) -> bool {
        !(self.certainly_below(other) || other.certainly_below(self))
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Matrix {
    /// `D + A`
    SignlessLaplacian,
    /// `A + I`, shifted so bipartite graphs do not oscillate.
    ShiftedAdjacency,
}

struct Component {
    lo: f64,
    hi: f64,
    rho: f64,
    x: Vec<f64>,
    residual: f64,
    iterations: usize,
}

fn next_down(x: f64) -> f64 {
    if x > 0.0 {
        x.next_down()
    } else {
        x
    }
}

fn perron(adj: &[Vec<u32>], diag: &[f64], tol: f64, max_degree: usize) -> Component {
    let n = adj.len();
    let eps = f64::EPSILON;
    let cw_slop = 4.0 * (max_degree as f64 + 2.0) * eps;
    let rho_slop = 4.0 * (max_degree as f64 + 2.0 + n as f64) * eps;
    let mut x: Vec<f64> = (0..n).map(|i| 1.0 + 1e-6 * (i % 7) as f64 / 7.0).collect();
    let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    x.iter_mut().for_each(|v| *v /= norm);
    let mut y = vec![0.0; n];
    let (mut lo, mut hi) = (0.0f64, f64::INFINITY);
    let mut iterations = 0;
    // Gershgorin: the spectral radius is at most the largest row sum
    let fallback_hi = (0..n)
        .map(|i| diag[i] + adj[i].len() as f64)
        .fold(0.0, f64::max);
    loop {
        for i in 0..n {
            let mut s = diag[i] * x[i];
            for &j in &adj[i] {
                s += x[j as usize];
            }
            y[i] = s;
        }
        let xx: f64 = x.iter().map(|v| v * v).sum();
        let xy: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        let rho = xy / xx;
        let residual = x
            .iter()
            .zip(&y)
            .map(|(a, b)| (b - rho * a).powi(2))
            .sum::<f64>()
            .sqrt()
            / xx.sqrt();
        let (mut rmin, mut rmax, mut underflow) = (f64::INFINITY, 0.0f64, false);
        for i in 0..n {
            if !x[i].is_normal() {
                underflow = true;
                break;
            }
            let r = y[i] / x[i];
            rmin = rmin.min(r);
            rmax = rmax.max(r);
        }
        lo = lo.max(rho * (1.0 - rho_slop));
        if !underflow {
            lo = lo.max(rmin * (1.0 - cw_slop));
            hi = hi.min(rmax * (1.0 + cw_slop));
        }
        iterations += 1;
        let target = tol.max(32.0 * (max_degree as f64 + 2.0) * eps * rho.max(1.0));
        if hi - lo <= target || iterations >= MAX_ITERATIONS || underflow {
            if !hi.is_finite() {
                hi = fallback_hi;
            }
            let norm = xx.sqrt();
            x.iter_mut().for_each(|v| *v /= norm);
            return Component {
                lo: lo.min(hi),
                hi,
                rho,
                x,
                residual,
                iterations,
            };
        }
        let ny = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        for i in 0..n {
            x[i] = y[i] / ny;
        }
    }
}

fn certify(g: &Graph, which: Matrix, tol: f64) -> SpectralCertificate {
    let n = g.n();
    let shift = match which {
        Matrix::SignlessLaplacian => 0.0,
        Matrix::ShiftedAdjacency => 1.0,
    };
    let mut best: Option<(Component, Vec<usize>)> = None;
    let (mut lo, mut hi) = (0.0f64, 0.0f64);
    let mut total_iterations = 0;
    for comp in g.components() {
        let c = if comp.len() == 1 {
            Component {
                lo: shift,
                hi: shift,
                rho: shift,
                x: vec![1.0],
                residual: 0.0,
                iterations: 0,
            }
        } else {
            let mut local = vec![u32::MAX; n];
            for (i, &u) in comp.iter().enumerate() {
                local[u] = i as u32;
            }
            let adj: Vec<Vec<u32>> = comp
                .iter()
                .map(|&u| g.neighbors(u).map(|v| local[v]).collect())
                .collect();
            let diag: Vec<f64> = match which {
                Matrix::SignlessLaplacian => adj.iter().map(|a| a.len() as f64).collect(),
                Matrix::ShiftedAdjacency => vec![1.0; comp.len()],
            };
            let dmax = adj.iter().map(Vec::len).max().unwrap_or(0);
            perron(&adj, &diag, tol, dmax)
        };
        total_iterations += c.iterations;
        lo = lo.max(c.lo);
        hi = hi.max(c.hi);
        if best.as_ref().is_none_or(|(b, _)| c.rho > b.rho) {
            best = Some((c, comp));
        }
    }
    let (c, comp) = best.expect("graph has at least one vertex");
    let mut witness = vec![0.0; n];
    for (i, &u) in comp.iter().enumerate() {
        witness[u] = c.x[i];
    }
    let mut residual = c.residual;

    // Uniform-vector Rayleigh bound: 4m/n for Q, 2m/n + 1 for A + I.
    let (num, den) = match which {
        Matrix::SignlessLaplacian => (4 * g.m(), n),
        Matrix::ShiftedAdjacency => (2 * g.m() + n, n),
    };
    let uniform = num as f64 / den as f64;
    let uniform_lo = if uniform * den as f64 == num as f64 {
        uniform
    } else {
        next_down(uniform)
    };
    if uniform_lo > lo {
        lo = uniform_lo;
    }
    if uniform >= c.rho && n > 1 {
        // the uniform vector is at least as good a witness
        let w = 1.0 / (n as f64).sqrt();
        witness = vec![w; n];
        residual = uniform_residual(g, which, uniform);
    }
    hi = hi.max(lo);
    let (q_lo, q_hi) = if shift == 0.0 {
        (lo, hi)
    } else {
        ((lo - shift).next_down().max(0.0), (hi - shift).next_up())
    };
    SpectralCertificate {
        q_lo,
        q_hi: q_hi.max(q_lo),
        witness,
        residual,
        iterations: total_iterations,
    }
}

fn uniform_residual(g: &Graph, which: Matrix, rho: f64) -> f64 {
    let n = g.n() as f64;
    let s: f64 = (0..g.n())
        .map(|u| {
            let d = g.degree(u) as f64;
            let row = match which {
                Matrix::SignlessLaplacian => 2.0 * d,
                Matrix::ShiftedAdjacency => d + 1.0,
            };
            (row - rho).powi(2)
        })
        .sum();
    (s / n).sqrt()
}

/// Certified Q-index `q(G)`: largest eigenvalue of `D + A`.
///
/// Disconnected graphs are handled per component and the maximum taken.
pub fn qindex_float(g: &Graph, tol: f64) -> SpectralCertificate {
    certify(
        g,
        Matrix::SignlessLaplacian,
        if tol > 0.0 { tol } else { DEFAULT_TOL },
    )
}

/// Certified adjacency spectral radius `mu(G)`.
pub fn mu_float(g: &Graph, tol: f64) -> SpectralCertificate {
    certify(
        g,
        Matrix::ShiftedAdjacency,
        if tol > 0.0 { tol } else { DEFAULT_TOL },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{construct, FamilySpec};

    fn q(spec: FamilySpec) -> SpectralCertificate {
        qindex_float(&construct(&spec).unwrap(), DEFAULT_TOL)
    }

    fn contains(c: &SpectralCertificate, v: f64) {
        assert!(
            c.q_lo <= v + 1e-12 && v - 1e-12 <= c.q_hi,
            "{v} not in [{}, {}]",
            c.q_lo,
            c.q_hi
        );
        assert!(c.width() <= 1e-9, "width {}", c.width());
    }

    #[test]
    fn closed_forms() {
        contains(&q(FamilySpec::Complete { n: 3 }), 4.0);
        contains(&q(FamilySpec::Star { n: 5 }), 5.0);
        for n in [3, 4, 9, 30] {
            contains(&q(FamilySpec::Cycle { n }), 4.0);
        }
    }

    #[test]
    fn adjacency_closed_forms() {
        let mu = |s| mu_float(&construct(&s).unwrap(), DEFAULT_TOL);
        contains(&mu(FamilySpec::Complete { n: 6 }), 5.0);
        contains(&mu(FamilySpec::Cycle { n: 8 }), 2.0);
        contains(&mu(FamilySpec::Star { n: 5 }), 2.0);
    }

    #[test]
    fn edgeless_and_single_vertex() {
        let c = q(FamilySpec::Empty { n: 4 });
        assert_eq!((c.q_lo, c.q_hi), (0.0, 0.0));
        let c = q(FamilySpec::Complete { n: 1 });
        assert_eq!((c.q_lo, c.q_hi), (0.0, 0.0));
        assert_eq!(c.witness, vec![1.0]);
    }

    #[test]
    fn disconnected_takes_component_max() {
        let g = construct(&FamilySpec::DisjointUnion {
            left: Box::new(FamilySpec::Cycle { n: 5 }),
            right: Box::new(FamilySpec::Complete { n: 4 }),
        })
        .unwrap();
        let c = qindex_float(&g, DEFAULT_TOL);
        contains(&c, 6.0);
        assert!(c.witness[..5].iter().all(|&w| w == 0.0));
        assert!(c.witness[5..].iter().all(|&w| w > 0.0));
    }

    #[test]
    fn witness_positive_on_connected() {
        let c = q(FamilySpec::SnkPlus { n: 12, k: 3 });
        assert!(c.witness.iter().all(|&w| w > 0.0));
        let norm: f64 = c.witness.iter().map(|w| w * w).sum();
        assert!((norm - 1.0).abs() < 1e-12);
    }
}
