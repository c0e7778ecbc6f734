use std::cmp::Ordering;
use std::collections::BTreeMap;

use sha2::{Digest, Sha256};

use super::record::{is_snk_plus, MaximizerRecord, SearchMethod, SpectralMode};
use crate::error::{Error, Result};
use crate::graph::graph6::{decode_line, stream_lines};
use crate::graph::Graph;
use crate::par::{self, Execution};
use crate::spectral::{
    compare_with, mu_float, qindex_float, Interval, SpectralCertificate, DEFAULT_TOL,
};
use crate::subgraph::has_cycle_of_length;

/// Largest order accepted per group.
pub const VERIFY_CAP: usize = 10;

struct Candidate {
    g: Graph,
    cert: SpectralCertificate,
    g6: String,
}

/// Keep the better of two candidates: larger value, then smaller graph6.
/// The order is total on distinct graphs, so the fold is associative and
/// commutative.
fn better(mode: SpectralMode, a: Candidate, b: Candidate) -> Result<Candidate> {
    let ord = match mode {
        SpectralMode::Q => compare_with(&a.g, &a.cert, &b.g, &b.cert)?.ordering,
        SpectralMode::Mu => a.cert.midpoint().total_cmp(&b.cert.midpoint()),
    };
    Ok(match ord.then_with(|| b.g6.cmp(&a.g6)) {
        Ordering::Less => b,
        _ => a,
    })
}

/// Best `C_{2k+2}`-free graph of each order in a graph6 stream.
///
/// Returns one record per order present (ascending), skipping orders with
/// no free graph. In `q` mode ordering is certified; in `mu` mode it uses the
/// float midpoint. Ties go to the smaller graph6 string, so the result does
/// not depend on the stream order. `corpus_hash` is the SHA-256 of the
/// stream's graph6 lines (header stripped) sorted and newline-terminated, so
/// it too is independent of order; for a sorted headerless file it equals
/// the hash of the file.
pub fn exhaustive_verify_with(
    exec: Execution,
    k: usize,
    bytes: &[u8],
    mode: SpectralMode,
) -> Result<Vec<MaximizerRecord>> {
    if k < 1 {
        return Err(Error::InvalidParameters("k must be at least 1".into()));
    }
    let text = std::str::from_utf8(bytes).map_err(|e| Error::StreamParse {
        line: 1 + bytes[..e.valid_up_to()]
            .iter()
            .filter(|&&b| b == b'\n')
            .count(),
        source: Box::new(Error::MalformedGraph6 {
            offset: e.valid_up_to(),
            reason: "not UTF-8".into(),
        }),
    })?;
    let len = 2 * k + 2;
    let mut groups: BTreeMap<usize, Vec<(String, Graph)>> = BTreeMap::new();
    let mut lines: Vec<String> = Vec::new();
    for (line, s) in stream_lines(text) {
        let g = decode_line(line, s)?;
        if g.n() > VERIFY_CAP {
            return Err(Error::StreamParse {
                line,
                source: Box::new(Error::TooLarge {
                    what: "exhaustive verification",
                    n: g.n(),
                    cap: VERIFY_CAP,
                }),
            });
        }
        let g6 = crate::graph::graph6::encode(&g);
        lines.push(g6.clone());
        groups.entry(g.n()).or_default().push((g6, g));
    }
    lines.sort_unstable();
    let mut hasher = Sha256::new();
    for l in &lines {
        hasher.update(l.as_bytes());
        hasher.update(b"\n");
    }
    let corpus_hash = hex::encode(hasher.finalize());
    let mut out = Vec::new();
    for (n, graphs) in groups {
        let best = par::map_reduce(
            exec,
            &graphs,
            |(g6, g)| {
                if has_cycle_of_length(g, len).is_some() {
                    return None;
                }
                let cert = match mode {
                    SpectralMode::Q => qindex_float(g, DEFAULT_TOL),
                    SpectralMode::Mu => mu_float(g, DEFAULT_TOL),
                };
                Some(Ok(Candidate {
                    g: g.clone(),
                    cert,
                    g6: g6.clone(),
                }))
            },
            |a, b| better(mode, a?, b?),
        );
        let Some(best) = best.transpose()? else {
            continue;
        };
        out.push(MaximizerRecord {
            n,
            k,
            forbidden_length: len,
            is_snk_plus: is_snk_plus(&best.g, k),
            best_graph6: best.g6,
            q_interval: Interval::from_certificate(&best.cert),
            method: SearchMethod::Exhaustive,
            corpus_hash: corpus_hash.clone(),
            mode,
        });
    }
    Ok(out)
}

/// [`exhaustive_verify_with`] on the default execution.
pub fn exhaustive_verify(
    k: usize,
    bytes: &[u8],
    mode: SpectralMode,
) -> Result<Vec<MaximizerRecord>> {
    exhaustive_verify_with(Execution::default(), k, bytes, mode)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{construct, FamilySpec};

    #[test]
    fn hash_ignores_order() {
        let a = exhaustive_verify(2, b"C~\nCw\n", SpectralMode::Q).unwrap();
        let b = exhaustive_verify(2, b">>graph6<<Cw\nC~", SpectralMode::Q).unwrap();
        assert_eq!(a, b);
        assert_eq!(a[0].corpus_hash, hex::encode(Sha256::digest(b"Cw\nC~\n")));
    }

    #[test]
    fn empty_stream() {
        assert!(exhaustive_verify(2, b"", SpectralMode::Q)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn small_stream_finds_complete_graph() {
        // K_4 has no C_6
        let s = "C~\nCw\nCF\n";
        let r = exhaustive_verify(2, s.as_bytes(), SpectralMode::Q).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].best_graph6, "C~");
        assert!(r[0].is_snk_plus);
        assert_eq!(r[0].forbidden_length, 6);
        let seq = exhaustive_verify_with(Execution::Sequential, 2, s.as_bytes(), SpectralMode::Q)
            .unwrap();
        assert_eq!(seq, r);
    }

    #[test]
    fn stream_errors_carry_lines() {
        let e = exhaustive_verify(2, b"Bw\nB?x\n", SpectralMode::Q).unwrap_err();
        assert!(matches!(e, Error::StreamParse { line: 2, .. }), "{e:?}");
        let big =
            crate::graph::graph6::encode(&construct(&FamilySpec::Complete { n: 11 }).unwrap());
        let e = exhaustive_verify(2, big.as_bytes(), SpectralMode::Q).unwrap_err();
        assert!(
            matches!(e, Error::StreamParse { line: 1, ref source } if matches!(**source, Error::TooLarge { .. }))
        );
    }

    #[test]
    fn mu_mode_runs() {
        let r = exhaustive_verify(1, b"Bw\nBg\nBW\n", SpectralMode::Mu).unwrap();
        // K_3 contains C_4? no; C_4 needs 4 vertices, so K_3 wins with mu = 2
        assert_eq!(r[0].best_graph6, "Bw");
        assert_eq!(r[0].mode, SpectralMode::Mu);
        assert!((r[0].q_interval.approx() - 2.0).abs() < 1e-9);
    }
}
