//! Evaluates the classical two-sided and one-sided bounds on SDD_a.
//!
//! Each checker evaluates one inequality (or exact identity) on a concrete
//! graph and exponent and reports the bound values, whether the index value
//! satisfies them, equality flags, and slack. The stated equality
//! characterizations (regular / componentwise regular) are *not* baked into
//! the reports; they are verified against the flags by the certification
//! sweep in [`crate::enumerate`] and by the test suite.

use crate::error::{Error, Result};
use crate::graph::{DegreeExtremes, Graph};
use crate::indices::{edge_term, isd_a, log_nk_star, m1_alpha, m2_alpha, sdd_alpha, Exponent};

/// Relative tolerance for satisfaction and equality flags.
pub const EQUALITY_REL_TOL: f64 = 1e-9;
/// Absolute floor applied near zero.
pub const EQUALITY_ABS_FLOOR: f64 = 1e-12;

/// Identifies which inequality a report belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum TheoremId {
    /// SDD_a <= SDD_b for 0 < a < b; equality iff componentwise regular.
    Monotone,
    /// 2 delta^{2a} M2^{-a} <= SDD_a <= 2 Delta^{2a} M2^{-a}; equality iff regular.
    M2Sandwich,
    /// Delta^{-2a} M1^{2a+1} <= SDD_a <= delta^{-2a} M1^{2a+1}; equality iff regular.
    M1Sandwich,
    /// SDD_a >= delta^a m^2 / ISD_{-a}; equality iff regular.
    IsdLower,
    /// SDD_a >= 2 delta^{2a} m NK*^{-a/m}; equality iff regular.
    NkLower,
    /// Exact value of SDD_a when Delta = delta + 1.
    DeltaPlusOneExact,
    /// Two-sided bound from the edge classification when Delta > delta + 1.
    DdTwoSided,
}

impl std::fmt::Display for TheoremId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            TheoremId::Monotone => "MONOTONE",
            TheoremId::M2Sandwich => "M2_SANDWICH",
            TheoremId::M1Sandwich => "M1_SANDWICH",
            TheoremId::IsdLower => "ISD_LOWER",
            TheoremId::NkLower => "NK_LOWER",
            TheoremId::DeltaPlusOneExact => "DELTA_PLUS_ONE_EXACT",
            TheoremId::DdTwoSided => "DD_TWO_SIDED",
        };
        f.write_str(name)
    }
}

/// One evaluated bound on one graph.
///
/// `value` is SDD_a(G) except for `MONOTONE`, where `value` is SDD_b(G) and
/// `lower` is SDD_a(G). One-sided bounds leave the missing side (and its
/// equality flag and slack) as `None`. `isolated_count` records that the
/// minimum degree was taken over non-isolated vertices.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct BoundReport {
    pub theorem: TheoremId,
    pub alpha: f64,
    pub beta: Option<f64>,
    pub lower: Option<f64>,
    pub upper: Option<f64>,
    pub value: f64,
    pub satisfied: bool,
    pub equality_lower: Option<bool>,
    pub equality_upper: Option<bool>,
    pub slack_lower: Option<f64>,
    pub slack_upper: Option<f64>,
    pub isolated_count: usize,
}

/// Edge counts by endpoint-degree class.
///
/// `unequal` counts edges whose endpoints have different degrees. The other
/// three are the classes entering the two-sided bound: endpoint degrees
/// `{delta, Delta}`, `{delta, interior}` and `{Delta, interior}`, where
/// interior means strictly between delta and Delta. (For a regular graph all
/// four counts are zero.)
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct EdgeClassCounts {
    pub unequal: usize,
    pub min_max: usize,
    pub min_interior: usize,
    pub max_interior: usize,
}

fn tolerance(a: f64, b: f64) -> f64 {
    (EQUALITY_REL_TOL * a.abs().max(b.abs())).max(EQUALITY_ABS_FLOOR)
}

pub(crate) fn nearly_equal(a: f64, b: f64) -> bool {
    (a - b).abs() <= tolerance(a, b)
}

/// Zero out slack that is negative only by less than the tolerance.
fn slack(raw: f64, tol: f64) -> f64 {
    if raw < 0.0 && raw >= -tol {
        0.0
    } else {
        raw
    }
}

/// `base^e` via the log domain; `base >= 1`.
fn pow_log(base: usize, e: f64) -> f64 {
    debug_assert!(base >= 1);
    (e * (base as f64).ln()).exp()
}

fn require_positive(alpha: Exponent) -> Result<f64> {
    let a = alpha.value();
    if a > 0.0 {
        Ok(a)
    } else {
        Err(Error::NonPositiveExponent(a))
    }
}

fn build_report(
    theorem: TheoremId,
    alpha: f64,
    beta: Option<f64>,
    lower: Option<f64>,
    upper: Option<f64>,
    value: f64,
    isolated_count: usize,
) -> BoundReport {
    let mut satisfied = true;
    let (mut equality_lower, mut equality_upper) = (None, None);
    let (mut slack_lower, mut slack_upper) = (None, None);
    if let Some(lo) = lower {
        let tol = tolerance(value, lo);
        satisfied &= value >= lo - tol;
        equality_lower = Some(nearly_equal(value, lo));
        slack_lower = Some(slack(value - lo, tol));
    }
    if let Some(hi) = upper {
        let tol = tolerance(value, hi);
        satisfied &= value <= hi + tol;
        equality_upper = Some(nearly_equal(value, hi));
        slack_upper = Some(slack(hi - value, tol));
    }
    BoundReport {
        theorem,
        alpha,
        beta,
        lower,
        upper,
        value,
        satisfied,
        equality_lower,
        equality_upper,
        slack_lower,
        slack_upper,
        isolated_count,
    }
}

fn extremes_for_bounds(g: &Graph) -> Result<DegreeExtremes> {
    g.degree_extremes()
}

/// Checks SDD_a <= SDD_b for 0 < a < b.
///
/// Equality is attained exactly when every component of the graph is
/// regular.
pub fn check_monotonicity(g: &Graph, alpha: Exponent, beta: Exponent) -> Result<BoundReport> {
    let (a, b) = (alpha.value(), beta.value());
    if !(0.0 < a && a < b) {
        return Err(Error::InvalidMonotonePair { alpha: a, beta: b });
    }
    let extremes = extremes_for_bounds(g)?;
    let low = sdd_alpha(g, alpha).value;
    let value = sdd_alpha(g, beta).value;
    Ok(build_report(
        TheoremId::Monotone,
        a,
        Some(b),
        Some(low),
        None,
        value,
        extremes.isolated_count,
    ))
}

/// Sandwich bound through the variable second Zagreb index:
/// `2 delta^{2a} M2^{-a} <= SDD_a <= 2 Delta^{2a} M2^{-a}`.
pub fn m2_sandwich(g: &Graph, alpha: Exponent) -> Result<BoundReport> {
    let a = require_positive(alpha)?;
    let extremes = extremes_for_bounds(g)?;
    let m2_neg = m2_alpha(g, Exponent::new(-a)?).value;
    let lower = 2.0 * pow_log(extremes.delta, 2.0 * a) * m2_neg;
    let upper = 2.0 * pow_log(extremes.max_degree, 2.0 * a) * m2_neg;
    let value = sdd_alpha(g, alpha).value;
    Ok(build_report(
        TheoremId::M2Sandwich,
        a,
        None,
        Some(lower),
        Some(upper),
        value,
        extremes.isolated_count,
    ))
}

/// Sandwich bound through the variable first Zagreb index:
/// `Delta^{-2a} M1^{2a+1} <= SDD_a <= delta^{-2a} M1^{2a+1}`.
pub fn m1_sandwich(g: &Graph, alpha: Exponent) -> Result<BoundReport> {
    let a = require_positive(alpha)?;
    let extremes = extremes_for_bounds(g)?;
    let m1 = m1_alpha(g, Exponent::new(2.0 * a + 1.0)?)?.value;
    let lower = pow_log(extremes.max_degree, -2.0 * a) * m1;
    let upper = pow_log(extremes.delta, -2.0 * a) * m1;
    let value = sdd_alpha(g, alpha).value;
    Ok(build_report(
        TheoremId::M1Sandwich,
        a,
        None,
        Some(lower),
        Some(upper),
        value,
        extremes.isolated_count,
    ))
}

/// Lower bound through the variable inverse sum deg index:
/// `SDD_a >= delta^a m^2 / ISD_{-a}`.
pub fn isd_lower(g: &Graph, alpha: Exponent) -> Result<BoundReport> {
    let a = require_positive(alpha)?;
    let extremes = extremes_for_bounds(g)?;
    let m = g.edge_count() as f64;
    let isd_neg = isd_a(g, Exponent::new(-a)?).value;
    let lower = pow_log(extremes.delta, a) * m * m / isd_neg;
    let value = sdd_alpha(g, alpha).value;
    Ok(build_report(
        TheoremId::IsdLower,
        a,
        None,
        Some(lower),
        None,
        value,
        extremes.isolated_count,
    ))
}

/// Lower bound through the modified Narumi-Katayama index:
/// `SDD_a >= 2 delta^{2a} m NK*^{-a/m}`.
pub fn nk_lower(g: &Graph, alpha: Exponent) -> Result<BoundReport> {
    let a = require_positive(alpha)?;
    let extremes = extremes_for_bounds(g)?;
    let m = g.edge_count() as f64;
    let ln_nk = log_nk_star(g).value;
    let lower = 2.0 * pow_log(extremes.delta, 2.0 * a) * m * (-(a / m) * ln_nk).exp();
    let value = sdd_alpha(g, alpha).value;
    Ok(build_report(
        TheoremId::NkLower,
        a,
        None,
        Some(lower),
        None,
        value,
        extremes.isolated_count,
    ))
}

/// Counts edges by endpoint-degree class (see [`EdgeClassCounts`]).
pub fn classify_edges(g: &Graph) -> Result<EdgeClassCounts> {
    let extremes = g.degree_extremes()?;
    let (delta, max_degree) = (extremes.delta as u32, extremes.max_degree as u32);
    let degrees = g.degrees();
    let mut counts = EdgeClassCounts {
        unequal: 0,
        min_max: 0,
        min_interior: 0,
        max_interior: 0,
    };
    for &(u, v) in g.edges() {
        let (du, dv) = (degrees[u as usize], degrees[v as usize]);
        let (lo, hi) = if du <= dv { (du, dv) } else { (dv, du) };
        if lo != hi {
            counts.unequal += 1;
            if lo == delta && hi == max_degree {
                counts.min_max += 1;
            } else if lo == delta {
                counts.min_interior += 1;
            } else if hi == max_degree {
                counts.max_interior += 1;
            }
        }
    }
    Ok(counts)
}

/// Exact closed form for SDD_a when Delta = delta + 1:
/// `SDD_a = 2m + A (u - 2)` with `u = ((delta+1)/delta)^a + (delta/(delta+1))^a`
/// and `A` the number of unequal-degree edges. `A` is always even here; an
/// odd count is reported as an error since it contradicts a structural fact.
pub fn delta_plus_one_exact(g: &Graph, alpha: Exponent) -> Result<BoundReport> {
    let a = require_positive(alpha)?;
    let extremes = extremes_for_bounds(g)?;
    if extremes.max_degree != extremes.delta + 1 {
        return Err(Error::RequiresDeltaPlusOne {
            theorem: TheoremId::DeltaPlusOneExact,
            delta: extremes.delta,
            max_degree: extremes.max_degree,
        });
    }
    let counts = classify_edges(g)?;
    if counts.unequal % 2 != 0 {
        return Err(Error::ParityViolation { a: counts.unequal });
    }
    let m = g.edge_count() as f64;
    let step = edge_term(extremes.delta + 1, extremes.delta, alpha) - 2.0;
    let exact = 2.0 * m + counts.unequal as f64 * step;
    let value = sdd_alpha(g, alpha).value;
    Ok(build_report(
        TheoremId::DeltaPlusOneExact,
        a,
        None,
        Some(exact),
        Some(exact),
        value,
        extremes.isolated_count,
    ))
}

/// Two-sided bound when Delta > delta + 1, from the counts of
/// `{delta, Delta}`, `{delta, interior}` and `{Delta, interior}` edges.
pub fn dd_two_sided(g: &Graph, alpha: Exponent) -> Result<BoundReport> {
    let a = require_positive(alpha)?;
    let extremes = extremes_for_bounds(g)?;
    let (delta, max_degree) = (extremes.delta, extremes.max_degree);
    if max_degree <= delta + 1 {
        return Err(Error::RequiresDeltaGap {
            theorem: TheoremId::DdTwoSided,
            delta,
            max_degree,
        });
    }
    let counts = classify_edges(g)?;
    let m = g.edge_count() as f64;
    let (a0, a1, a2) = (
        counts.min_max as f64,
        counts.min_interior as f64,
        counts.max_interior as f64,
    );

    let span = edge_term(max_degree, delta, alpha);
    let min_step = edge_term(delta + 1, delta, alpha);
    let max_step = edge_term(max_degree, max_degree - 1, alpha);
    let widest_min_interior = edge_term(max_degree - 1, delta, alpha);
    let widest_max_interior = edge_term(max_degree, delta + 1, alpha);

    let lower = 2.0 * m + a0 * (span - 2.0) + a1 * (min_step - 2.0) + a2 * (max_step - 2.0);
    let upper = (m - a1 - a2) * span + a1 * widest_min_interior + a2 * widest_max_interior;
    let value = sdd_alpha(g, alpha).value;
    Ok(build_report(
        TheoremId::DdTwoSided,
        a,
        None,
        Some(lower),
        Some(upper),
        value,
        extremes.isolated_count,
    ))
}

/// Outcome of one theorem in a batch run: either a full report or an
/// explicit skip (inapplicable degree condition, or a monotonicity check
/// without an exponent pair).
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum TheoremCheck {
    Evaluated(BoundReport),
    Skipped {
        theorem: TheoremId,
        alpha: Option<f64>,
        reason: String,
    },
}

impl TheoremCheck {
    pub fn report(&self) -> Option<&BoundReport> {
        match self {
            TheoremCheck::Evaluated(report) => Some(report),
            TheoremCheck::Skipped { .. } => None,
        }
    }

    pub fn theorem(&self) -> TheoremId {
        match self {
            TheoremCheck::Evaluated(report) => report.theorem,
            TheoremCheck::Skipped { theorem, .. } => *theorem,
        }
    }
}

/// Runs every applicable check for every exponent.
///
/// Monotonicity is evaluated on consecutive pairs of the sorted exponent
/// grid (skipped when fewer than two are given). The two degree-condition
/// theorems are skipped, not errored, when their condition fails.
pub fn check_all(g: &Graph, alphas: &[Exponent]) -> Result<Vec<TheoremCheck>> {
    let extremes = g.degree_extremes()?;
    for &alpha in alphas {
        require_positive(alpha)?;
    }
    let mut sorted: Vec<f64> = alphas.iter().map(|a| a.value()).collect();
    sorted.sort_by(|x, y| x.partial_cmp(y).expect("finite exponents"));
    sorted.dedup();

    let mut checks = Vec::new();

    if sorted.len() < 2 {
        checks.push(TheoremCheck::Skipped {
            theorem: TheoremId::Monotone,
            alpha: sorted.first().copied(),
            reason: "needs at least two distinct exponents".into(),
        });
    } else {
        for pair in sorted.windows(2) {
            let report = check_monotonicity(g, Exponent::new(pair[0])?, Exponent::new(pair[1])?)?;
            checks.push(TheoremCheck::Evaluated(report));
        }
    }

    let delta_plus_one = extremes.max_degree == extremes.delta + 1;
    let wide_gap = extremes.max_degree > extremes.delta + 1;
    for &a in &sorted {
        let alpha = Exponent::new(a)?;
        checks.push(TheoremCheck::Evaluated(m2_sandwich(g, alpha)?));
        checks.push(TheoremCheck::Evaluated(m1_sandwich(g, alpha)?));
        checks.push(TheoremCheck::Evaluated(isd_lower(g, alpha)?));
        checks.push(TheoremCheck::Evaluated(nk_lower(g, alpha)?));
        if delta_plus_one {
            checks.push(TheoremCheck::Evaluated(delta_plus_one_exact(g, alpha)?));
        } else {
            checks.push(TheoremCheck::Skipped {
                theorem: TheoremId::DeltaPlusOneExact,
                alpha: Some(a),
                reason: format!(
                    "requires Delta = delta + 1 (delta = {}, Delta = {})",
                    extremes.delta, extremes.max_degree
                ),
            });
        }
        if wide_gap {
            checks.push(TheoremCheck::Evaluated(dd_two_sided(g, alpha)?));
        } else {
            checks.push(TheoremCheck::Skipped {
                theorem: TheoremId::DdTwoSided,
                alpha: Some(a),
                reason: format!(
                    "requires Delta > delta + 1 (delta = {}, Delta = {})",
                    extremes.delta, extremes.max_degree
                ),
            });
        }
    }
    Ok(checks)
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

    /// Two stars joined at their centers: degrees 3 and 4 at the centers,
    /// leaves elsewhere. delta = 1, Delta = 4.
    fn double_star() -> Graph {
        Graph::from_edge_list([(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (1, 6)], None).unwrap()
    }

    #[test]
    fn monotonicity_examples() {
        let r = check_monotonicity(&Graph::path(3), exp(1.0), exp(2.0)).unwrap();
        assert_close(r.lower.unwrap(), 5.0);
        assert_close(r.value, 8.5);
        assert!(r.satisfied);
        assert!(!r.equality_lower.unwrap());

        let r = check_monotonicity(&Graph::complete(4), exp(1.0), exp(2.0)).unwrap();
        assert!(r.satisfied && r.equality_lower.unwrap());

        // Disjoint union of two regular graphs of different degree: both
        // sides equal 2m, and the graph is componentwise regular.
        let g = Graph::complete(3).disjoint_union(&Graph::complete(4));
        let r = check_monotonicity(&g, exp(1.0), exp(3.0)).unwrap();
        assert_close(r.lower.unwrap(), 18.0);
        assert_close(r.value, 18.0);
        assert!(r.equality_lower.unwrap());
        assert!(g.is_componentwise_regular());
    }

    #[test]
    fn monotonicity_parameter_errors() {
        let g = Graph::path(3);
        for (a, b) in [(1.0, 1.0), (2.0, 1.0), (0.0, 1.0), (-1.0, 1.0)] {
            let err = check_monotonicity(&g, exp(a), exp(b)).unwrap_err();
            assert!(matches!(err, Error::InvalidMonotonePair { .. }));
        }
        let err = check_monotonicity(&Graph::edgeless(3), exp(1.0), exp(2.0)).unwrap_err();
        assert_eq!(err, Error::NoEdges);
    }

    #[test]
    fn m2_sandwich_examples() {
        let r = m2_sandwich(&Graph::complete(4), exp(1.0)).unwrap();
        assert_close(r.lower.unwrap(), 12.0);
        assert_close(r.upper.unwrap(), 12.0);
        assert_close(r.value, 12.0);
        assert!(r.equality_lower.unwrap() && r.equality_upper.unwrap());

        // P_3: M2^{-1} = 2 * (1/2) = 1, so bounds are 2 and 8 around 5.
        let r = m2_sandwich(&Graph::path(3), exp(1.0)).unwrap();
        assert_close(r.lower.unwrap(), 2.0);
        assert_close(r.upper.unwrap(), 8.0);
        assert_close(r.value, 5.0);
        assert!(r.satisfied && !r.equality_lower.unwrap() && !r.equality_upper.unwrap());

        // Star K_{1,3}: M2^{-1} = 3 * (1/3) = 1, bounds 2 and 18 around 10.
        let r = m2_sandwich(&Graph::star(3), exp(1.0)).unwrap();
        assert_close(r.lower.unwrap(), 2.0);
        assert_close(r.upper.unwrap(), 18.0);
        assert_close(r.value, 10.0);
        assert!(r.satisfied);
    }

    #[test]
    fn m1_sandwich_examples() {
        let r = m1_sandwich(&Graph::complete(4), exp(1.0)).unwrap();
        assert_close(r.lower.unwrap(), 12.0);
        assert_close(r.upper.unwrap(), 12.0);

        // P_3: M1^3 = 10, bounds 10/4 and 10/1 around 5.
        let r = m1_sandwich(&Graph::path(3), exp(1.0)).unwrap();
        assert_close(r.lower.unwrap(), 2.5);
        assert_close(r.upper.unwrap(), 10.0);
        assert_close(r.value, 5.0);

        // Single edge is 1-regular: M1^5 = 2 and everything collapses to 2.
        let r = m1_sandwich(&Graph::path(2), exp(2.0)).unwrap();
        assert_close(r.lower.unwrap(), 2.0);
        assert_close(r.upper.unwrap(), 2.0);
        assert_close(r.value, 2.0);
        assert!(r.equality_lower.unwrap() && r.equality_upper.unwrap());
    }

    #[test]
    fn isd_lower_examples() {
        let r = isd_lower(&Graph::complete(4), exp(1.0)).unwrap();
        assert_close(r.lower.unwrap(), 12.0);
        assert!(r.equality_lower.unwrap());

        let r = isd_lower(&Graph::path(3), exp(1.0)).unwrap();
        assert_close(r.lower.unwrap(), 3.0);
        assert_close(r.value, 5.0);

        // Star K_{1,3}: ISD_{-1} = 9/4, lower = 9 / (9/4) = 4.
        let r = isd_lower(&Graph::star(3), exp(1.0)).unwrap();
        assert_close(r.lower.unwrap(), 4.0);
        assert_close(r.value, 10.0);
    }

    #[test]
    fn nk_lower_examples() {
        let r = nk_lower(&Graph::complete(4), exp(1.0)).unwrap();
        assert_close(r.lower.unwrap(), 12.0);
        assert!(r.equality_lower.unwrap());

        // P_3: NK* = 4, lower = 2*1*2*exp(-(1/2) ln 4) = 2.
        let r = nk_lower(&Graph::path(3), exp(1.0)).unwrap();
        assert_close(r.lower.unwrap(), 2.0);

        let r = nk_lower(&Graph::path(2), exp(3.0)).unwrap();
        assert_close(r.lower.unwrap(), 2.0);
        assert_close(r.value, 2.0);
    }

    #[test]
    fn classify_edges_examples() {
        let c = classify_edges(&Graph::path(4)).unwrap();
        assert_eq!(c.unequal, 2);
        assert_eq!((c.min_max, c.min_interior, c.max_interior), (2, 0, 0));

        let c = classify_edges(&Graph::star(3)).unwrap();
        assert_eq!(c.unequal, 3);
        assert_eq!((c.min_max, c.min_interior, c.max_interior), (3, 0, 0));

        let c = classify_edges(&Graph::complete(4)).unwrap();
        assert_eq!(
            (c.unequal, c.min_max, c.min_interior, c.max_interior),
            (0, 0, 0, 0)
        );

        // Double star: 3 leaf edges at the degree-4 center, 2 at the
        // degree-3 center, plus the bridge.
        let c = classify_edges(&double_star()).unwrap();
        assert_eq!(c.unequal, 6);
        assert_eq!((c.min_max, c.min_interior, c.max_interior), (3, 2, 1));
    }

    #[test]
    fn delta_plus_one_exact_examples() {
        let r = delta_plus_one_exact(&Graph::path(4), exp(1.0)).unwrap();
        assert_close(r.lower.unwrap(), 7.0);
        assert_close(r.value, 7.0);
        assert!(r.satisfied);

        let r = delta_plus_one_exact(&Graph::path(3), exp(1.0)).unwrap();
        assert_close(r.lower.unwrap(), 5.0);

        // C_5 is regular: the closed form does not apply.
        let err = delta_plus_one_exact(&Graph::cycle(5), exp(1.0)).unwrap_err();
        assert!(matches!(err, Error::RequiresDeltaPlusOne { .. }));
    }

    #[test]
    fn dd_two_sided_examples() {
        // K_{1,3}: every edge joins delta to Delta, so the bound is tight.
        let r = dd_two_sided(&Graph::star(3), exp(1.0)).unwrap();
        assert_close(r.lower.unwrap(), 10.0);
        assert_close(r.upper.unwrap(), 10.0);
        assert_close(r.value, 10.0);
        assert!(r.equality_lower.unwrap() && r.equality_upper.unwrap());

        let r = dd_two_sided(&Graph::star(4), exp(2.0)).unwrap();
        assert_close(r.lower.unwrap(), 64.25);
        assert_close(r.upper.unwrap(), 64.25);
        assert_close(r.value, 64.25);

        // Double star: strict on both sides.
        let r = dd_two_sided(&double_star(), exp(1.0)).unwrap();
        assert_close(r.lower.unwrap(), 119.0 / 6.0);
        assert_close(r.upper.unwrap(), 263.0 / 12.0);
        assert_close(r.value, 21.5);
        assert!(r.satisfied);
        assert!(!r.equality_lower.unwrap() && !r.equality_upper.unwrap());

        // Delta = delta + 1 is out of scope here.
        let err = dd_two_sided(&Graph::path(4), exp(1.0)).unwrap_err();
        assert!(matches!(err, Error::RequiresDeltaGap { .. }));
    }

    #[test]
    fn check_all_dispatch() {
        // P_3 with a single exponent: monotone lacks a pair, the wide-gap
        // bound does not apply, and five checks evaluate.
        let checks = check_all(&Graph::path(3), &[exp(1.0)]).unwrap();
        let evaluated = checks.iter().filter(|c| c.report().is_some()).count();
        assert_eq!(evaluated, 5);
        assert!(checks.iter().any(|c| matches!(
            c,
            TheoremCheck::Skipped {
                theorem: TheoremId::Monotone,
                ..
            }
        )));
        assert!(checks.iter().any(|c| matches!(
            c,
            TheoremCheck::Skipped {
                theorem: TheoremId::DdTwoSided,
                ..
            }
        )));

        // Star: wide gap applies, the exact form does not.
        let checks = check_all(&Graph::star(3), &[exp(1.0), exp(2.0)]).unwrap();
        let dd = checks
            .iter()
            .filter(|c| c.theorem() == TheoremId::DdTwoSided && c.report().is_some())
            .count();
        assert_eq!(dd, 2);
        assert!(checks.iter().all(|c| match c {
            TheoremCheck::Evaluated(r) => r.theorem != TheoremId::DeltaPlusOneExact,
            TheoremCheck::Skipped { .. } => true,
        }));

        // Regular graph: every evaluated bound is tight.
        let checks = check_all(&Graph::complete(4), &[exp(1.0)]).unwrap();
        for check in &checks {
            if let Some(r) = check.report() {
                assert!(r.satisfied);
                assert!(r.equality_lower.unwrap_or(true));
                assert!(r.equality_upper.unwrap_or(true));
            }
        }

        let err = check_all(&Graph::path(3), &[exp(0.0)]).unwrap_err();
        assert!(matches!(err, Error::NonPositiveExponent(_)));
        let err = check_all(&Graph::edgeless(2), &[exp(1.0)]).unwrap_err();
        assert_eq!(err, Error::NoEdges);
    }
}
