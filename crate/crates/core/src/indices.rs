//! Degree-based topological indices.
//!
//! The central quantity is the variable symmetric division deg index
//!
//! ```text
//! SDD_a(G) = sum over edges uv of (d_u/d_v)^a + (d_v/d_u)^a
//! ```
//!
//! together with the companion indices its bounds are phrased in: the
//! variable Zagreb indices `M1^a` and `M2^a`, the variable inverse sum deg
//! index `ISD_a` (with `ISI = ISD_{-1}`), and the modified Narumi-Katayama
//! index `NK*`, exposed as `ln NK*`.
//!
//! All powers of degrees are evaluated in the log domain, i.e. as
//! `exp(a * ln d)`. This keeps every intermediate finite for any realistic
//! degree and exponent (NK* itself overflows f64 already on modest dense
//! graphs, which is why only its logarithm is exposed).

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A finite real exponent.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, serde::Serialize)]
#[serde(transparent)]
pub struct Exponent(f64);

impl Exponent {
    pub fn new(alpha: f64) -> Result<Self> {
        if alpha.is_finite() {
            Ok(Self(alpha))
        } else {
            Err(Error::NonFiniteExponent(alpha))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for Exponent {
    type Error = Error;
    fn try_from(alpha: f64) -> Result<Self> {
        Self::new(alpha)
    }
}

impl std::fmt::Display for Exponent {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Which index a value belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum IndexKind {
    Sdd,
    M1,
    M2,
    Isd,
    Isi,
    LogNkStar,
}

impl std::fmt::Display for IndexKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            IndexKind::Sdd => "sdd",
            IndexKind::M1 => "m1",
            IndexKind::M2 => "m2",
            IndexKind::Isd => "isd",
            IndexKind::Isi => "isi",
            IndexKind::LogNkStar => "log_nk_star",
        };
        f.write_str(name)
    }
}

/// A named index value, tagged with the exponent it was computed at.
///
/// `alpha` is `None` for the exponent-free kinds (`ISI` reports its fixed
/// exponent -1; `ln NK*` has none).
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct IndexResult {
    pub kind: IndexKind,
    pub alpha: Option<f64>,
    pub value: f64,
}

/// One edge's contribution to SDD_a: `(du/dv)^a + (dv/du)^a`.
///
/// Requires `du, dv >= 1`. Computed as `exp(a*L) + exp(-a*L)` with
/// `L = ln du - ln dv`, so it is exactly symmetric in `(du, dv)` and under
/// `a -> -a`, equals 2 exactly when `du == dv`, and is always >= 2.
pub fn edge_term(du: usize, dv: usize, alpha: Exponent) -> f64 {
    debug_assert!(du >= 1 && dv >= 1, "edge_term needs positive degrees");
    let log_ratio = (du as f64).ln() - (dv as f64).ln();
    let x = alpha.value() * log_ratio;
    x.exp() + (-x).exp()
}

/// The variable symmetric division deg index SDD_a(G).
///
/// The exponent is canonicalized to `|a|` (SDD_{-a} = SDD_a), so the symmetry
/// holds bitwise. Edgeless graphs give 0; `a = 0` gives exactly `2m`.
pub fn sdd_alpha(g: &Graph, alpha: Exponent) -> IndexResult {
    let a = Exponent(alpha.value().abs());
    let degrees = g.degrees();
    let value = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            edge_term(
                degrees[u as usize] as usize,
                degrees[v as usize] as usize,
                a,
            )
        })
        .sum();
    IndexResult {
        kind: IndexKind::Sdd,
        alpha: Some(a.value()),
        value,
    }
}

/// The variable first Zagreb index `M1^a(G) = sum over vertices of d^a`.
///
/// Conventions on isolated vertices: `0^0 := 1` (so `M1^0 = n`) and
/// `0^a := 0` for `a > 0`. Negative `a` with isolated vertices is a domain
/// error.
pub fn m1_alpha(g: &Graph, alpha: Exponent) -> Result<IndexResult> {
    let a = alpha.value();
    let isolated = g.isolated_count();
    if a < 0.0 && isolated > 0 {
        return Err(Error::NegativeAlphaWithIsolated { alpha: a, isolated });
    }
    let value = g
        .degrees()
        .iter()
        .map(|&d| match d {
            0 => {
                if a == 0.0 {
                    1.0
                } else {
                    0.0
                }
            }
            d => (a * (d as f64).ln()).exp(),
        })
        .sum();
    Ok(IndexResult {
        kind: IndexKind::M1,
        alpha: Some(a),
        value,
    })
}

/// The variable second Zagreb index `M2^a(G) = sum over edges of (du*dv)^a`.
pub fn m2_alpha(g: &Graph, alpha: Exponent) -> IndexResult {
    let a = alpha.value();
    let degrees = g.degrees();
    let value = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let log_prod = (degrees[u as usize] as f64).ln() + (degrees[v as usize] as f64).ln();
            (a * log_prod).exp()
        })
        .sum();
    IndexResult {
        kind: IndexKind::M2,
        alpha: Some(a),
        value,
    }
}

/// The variable inverse sum deg index `ISD_a(G) = sum over edges of
/// 1/(du^a + dv^a)`.
pub fn isd_a(g: &Graph, a: Exponent) -> IndexResult {
    let a = a.value();
    let degrees = g.degrees();
    let value = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let pu = (a * (degrees[u as usize] as f64).ln()).exp();
            let pv = (a * (degrees[v as usize] as f64).ln()).exp();
            1.0 / (pu + pv)
        })
        .sum();
    IndexResult {
        kind: IndexKind::Isd,
        alpha: Some(a),
        value,
    }
}

/// The inverse sum indeg index `ISI(G) = sum over edges of du*dv/(du+dv)`,
/// i.e. `ISD_{-1}(G)`.
pub fn isi(g: &Graph) -> IndexResult {
    let inner = isd_a(g, Exponent(-1.0));
    IndexResult {
        kind: IndexKind::Isi,
        alpha: Some(-1.0),
        value: inner.value,
    }
}

/// Natural log of the modified Narumi-Katayama index
/// `NK*(G) = prod over vertices of d^d = prod over edges of du*dv`.
///
/// The edge-product form is used, which sidesteps `0^0` on isolated vertices;
/// an edgeless graph gives 0 (empty product).
pub fn log_nk_star(g: &Graph) -> IndexResult {
    let degrees = g.degrees();
    let value = g
        .edges()
        .iter()
        .map(|&(u, v)| (degrees[u as usize] as f64).ln() + (degrees[v as usize] as f64).ln())
        .sum();
    IndexResult {
        kind: IndexKind::LogNkStar,
        alpha: None,
        value,
    }
}

/// Multiset of unordered endpoint-degree pairs, sorted by `(lo, hi)`.
///
/// Random-graph replicas have many fewer distinct degree pairs than edges, so
/// ensemble code evaluates `edge_term` once per pair and weights by count.
pub(crate) fn degree_pair_counts(g: &Graph) -> Vec<((u32, u32), u64)> {
    use std::collections::HashMap;
    let degrees = g.degrees();
    let mut counts: HashMap<(u32, u32), u64> = HashMap::new();
    for &(u, v) in g.edges() {
        let du = degrees[u as usize];
        let dv = degrees[v as usize];
        let key = if du <= dv { (du, dv) } else { (dv, du) };
        *counts.entry(key).or_insert(0) += 1;
    }
    let mut pairs: Vec<_> = counts.into_iter().collect();
    pairs.sort_unstable_by_key(|&(key, _)| key);
    pairs
}

/// SDD_a evaluated from a degree-pair histogram (see [`degree_pair_counts`]).
pub(crate) fn sdd_from_pair_counts(pairs: &[((u32, u32), u64)], alpha: Exponent) -> f64 {
    let a = Exponent(alpha.value().abs());
    pairs
        .iter()
        .map(|&((du, dv), count)| count as f64 * edge_term(du as usize, dv as usize, a))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exp(a: f64) -> Exponent {
        Exponent::new(a).unwrap()
    }

    fn assert_close(actual: f64, expected: f64) {
        let tol = 1e-12 * expected.abs().max(1.0);
        assert!(
            (actual - expected).abs() <= tol,
            "expected {expected}, got {actual}"
        );
    }

    #[test]
    fn exponent_rejects_non_finite() {
        assert!(Exponent::new(f64::NAN).is_err());
        assert!(Exponent::new(f64::INFINITY).is_err());
        assert!(Exponent::new(-3.5).is_ok());
    }

    #[test]
    fn edge_term_values() {
        for d in 1..6 {
            for a in [0.0, 0.5, 1.0, 4.0] {
                assert_eq!(edge_term(d, d, exp(a)), 2.0);
            }
        }
        assert_close(edge_term(1, 2, exp(1.0)), 2.5);
        assert_close(edge_term(1, 3, exp(2.0)), 9.0 + 1.0 / 9.0);
    }

    #[test]
    fn sdd_examples() {
        for a in [0.0, 0.5, 1.0, 2.0, 4.0] {
            assert_close(sdd_alpha(&Graph::complete(4), exp(a)).value, 12.0);
        }
        assert_close(sdd_alpha(&Graph::path(3), exp(1.0)).value, 5.0);
        assert_close(sdd_alpha(&Graph::path(4), exp(1.0)).value, 7.0);
        assert_close(sdd_alpha(&Graph::star(3), exp(1.0)).value, 10.0);
        assert_close(sdd_alpha(&Graph::path(3), exp(2.0)).value, 8.5);
    }

    #[test]
    fn sdd_zero_is_twice_edge_count_exactly() {
        for g in [Graph::path(7), Graph::complete(6), Graph::star(5)] {
            assert_eq!(sdd_alpha(&g, exp(0.0)).value, 2.0 * g.edge_count() as f64);
        }
        assert_eq!(sdd_alpha(&Graph::edgeless(4), exp(1.0)).value, 0.0);
    }

    #[test]
    fn sdd_is_symmetric_in_alpha() {
        let g = Graph::star(4);
        for a in [0.5, 1.0, 2.5] {
            let plus = sdd_alpha(&g, exp(a)).value;
            let minus = sdd_alpha(&g, exp(-a)).value;
            assert_eq!(plus.to_bits(), minus.to_bits());
        }
    }

    #[test]
    fn m1_examples() {
        assert_close(m1_alpha(&Graph::complete(4), exp(2.0)).unwrap().value, 36.0);
        assert_close(m1_alpha(&Graph::path(3), exp(3.0)).unwrap().value, 10.0);
        let g = Graph::star(5);
        assert_close(
            m1_alpha(&g, exp(1.0)).unwrap().value,
            2.0 * g.edge_count() as f64,
        );
    }

    #[test]
    fn m1_isolated_vertex_conventions() {
        let g = Graph::from_edge_list([(0, 1)], Some(3)).unwrap();
        // M1^0 = n even with an isolated vertex.
        assert_close(m1_alpha(&g, exp(0.0)).unwrap().value, 3.0);
        // 0^a = 0 for a > 0.
        assert_close(m1_alpha(&g, exp(2.0)).unwrap().value, 2.0);
        // Negative exponent with an isolated vertex is a domain error.
        let err = m1_alpha(&g, exp(-1.0)).unwrap_err();
        assert!(matches!(err, Error::NegativeAlphaWithIsolated { .. }));
    }

    #[test]
    fn m2_examples() {
        assert_close(m2_alpha(&Graph::complete(4), exp(1.0)).value, 54.0);
        assert_close(m2_alpha(&Graph::path(3), exp(-0.5)).value, 2f64.sqrt());
        assert_close(
            m2_alpha(&Graph::star(3), exp(0.0)).value,
            Graph::star(3).edge_count() as f64,
        );
    }

    #[test]
    fn isd_and_isi_examples() {
        assert_close(isd_a(&Graph::complete(4), exp(1.0)).value, 1.0);
        assert_close(isd_a(&Graph::path(3), exp(-1.0)).value, 4.0 / 3.0);
        let g = Graph::cycle(5);
        assert_close(isd_a(&g, exp(0.0)).value, g.edge_count() as f64 / 2.0);

        assert_close(isi(&Graph::path(3)).value, 4.0 / 3.0);
        assert_close(isi(&Graph::complete(4)).value, 9.0);
        assert_close(isi(&Graph::path(2)).value, 0.5);
    }

    #[test]
    fn log_nk_star_examples() {
        assert_close(log_nk_star(&Graph::complete(4)).value, 12.0 * 3f64.ln());
        assert_close(log_nk_star(&Graph::path(3)).value, 4f64.ln());
        assert_eq!(log_nk_star(&Graph::edgeless(5)).value, 0.0);
    }

    #[test]
    fn pair_histogram_matches_direct_sum() {
        let g = Graph::star(4).disjoint_union(&Graph::path(5));
        let pairs = degree_pair_counts(&g);
        let total: u64 = pairs.iter().map(|&(_, c)| c).sum();
        assert_eq!(total as usize, g.edge_count());
        for a in [0.0, 0.5, 1.0, 2.0, 4.0] {
            let direct = sdd_alpha(&g, exp(a)).value;
            let via_hist = sdd_from_pair_counts(&pairs, exp(a));
            assert_close(via_hist, direct);
        }
    }
}
