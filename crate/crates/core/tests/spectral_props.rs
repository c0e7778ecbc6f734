mod common;

use std::cmp::Ordering;

use common::q_oracle;
use common::strategy::{graph, graph_and_perm};
use num_rational::BigRational;
use proptest::prelude::*;
use qext_core::extremal::{das_bound, merris_bound};
use qext_core::spectral::{
    compare_q, qindex_exact, qindex_float, quadratic_form, Interval, DEFAULT_TOL,
};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn certificate_encloses_oracle(g in graph(1, 24)) {
        let c = qindex_float(&g, DEFAULT_TOL);
        let q = q_oracle(&g);
        prop_assert!(c.q_lo <= q + 1e-9 && q - 1e-9 <= c.q_hi, "{} not in [{}, {}]", q, c.q_lo, c.q_hi);
        prop_assert!(c.width() <= 1e-9);
    }

    #[test]
    fn elementary_bounds(g in graph(1, 30)) {
        let c = qindex_float(&g, DEFAULT_TOL);
        let (n, m) = (g.n() as f64, g.m() as f64);
        prop_assert!(c.q_hi >= 4.0 * m / n - 1e-9);
        prop_assert!(c.q_lo <= 2.0 * g.max_degree() as f64 + 1e-9);
        prop_assert!(merris_bound(&g).0 >= c.q_hi - 1e-8);
        if g.n() >= 2 {
            prop_assert!(das_bound(&g).unwrap() >= c.q_hi - 1e-8);
        }
    }

    #[test]
    fn witness_rayleigh_quotient_in_range(g in graph(1, 30)) {
        let c = qindex_float(&g, DEFAULT_TOL);
        let r = quadratic_form(&g, &c.witness).unwrap();
        prop_assert!(r >= c.q_lo - 1e-9 && r <= c.q_hi + 1e-9);
    }

    #[test]
    fn adding_an_edge_never_lowers_q(g in graph(2, 14), a in any::<usize>(), b in any::<usize>()) {
        let (u, v) = (a % g.n(), b % g.n());
        prop_assume!(u != v && !g.has_edge(u, v));
        let h = g.with_edge(u, v).unwrap();
        prop_assert_ne!(compare_q(&h, &g).unwrap(), Ordering::Less);
    }

    #[test]
    fn float_and_exact_agree(g in graph(1, 14)) {
        let r = qindex_exact(&g, &BigRational::new(1.into(), 1_000_000_000.into())).unwrap();
        let c = qindex_float(&g, DEFAULT_TOL);
        prop_assert!(Interval::from_root(&r).intersects(&Interval::from_certificate(&c)));
    }

    #[test]
    fn q_is_a_graph_invariant((g, perm) in graph_and_perm(1, 12)) {
        let h = g.relabel(&perm).unwrap();
        prop_assert_eq!(compare_q(&g, &h).unwrap(), Ordering::Equal);
    }
}
