//! Random-graph ensembles and reproducible ensemble averages of SDD_a.
//!
//! Two models are supported: Erdos-Renyi graphs G(n, p), where each of the
//! C(n, 2) vertex pairs is an edge independently with probability p, and
//! bipartite random graphs G(n1, n2, p), where only cross pairs may be
//! edges. Ensemble averages over R replicas drive the parameter sweeps and
//! the `<SDD_a>/n` versus `<d>` scaling collapse.
//!
//! # Determinism
//!
//! Replica r draws from a ChaCha stream keyed by the master seed with
//! stream index r, so streams never overlap and a replica's sample depends
//! only on `(master_seed, r)`. Replicas run in parallel, but aggregation
//! always reads results in replica order and uses compensated summation, so
//! output is bitwise identical across runs and across any worker count.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Geometric};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::indices::{degree_pair_counts, sdd_from_pair_counts, Exponent};

/// Seed used by entry points when the caller does not supply one.
pub const DEFAULT_SEED: u64 = 0x5DD;

/// Default exponent grid: 0 to 4 in steps of 1/2.
pub const DEFAULT_ALPHAS: [f64; 9] = [0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0];

/// Default replica budget for a graph of the given order: ceil(10^6 / n).
pub fn default_replicas(order: usize) -> usize {
    1_000_000usize.div_ceil(order.max(1))
}

/// Above this edge probability the samplers switch from geometric skipping
/// to dense Bernoulli iteration over the pair space.
const SPARSE_P_MAX: f64 = 0.3;

/// Random-graph model and its parameters.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ModelSpec {
    Er { n: usize, p: f64 },
    Bipartite { n1: usize, n2: usize, p: f64 },
}

/// Model family tag carried by sweep output rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ModelKind {
    Er,
    Br,
}

impl std::fmt::Display for ModelKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ModelKind::Er => "er",
            ModelKind::Br => "br",
        })
    }
}

impl ModelSpec {
    pub fn validate(&self) -> Result<()> {
        let p = self.p();
        if !(0.0..=1.0).contains(&p) || p.is_nan() {
            return Err(Error::InvalidModel(format!(
                "edge probability must be in [0, 1], got {p}"
            )));
        }
        match *self {
            ModelSpec::Er { n, .. } if n < 2 => Err(Error::InvalidModel(format!(
                "ER model needs n >= 2, got {n}"
            ))),
            ModelSpec::Bipartite { n1, n2, .. } if n1 < 1 || n2 < 1 => Err(Error::InvalidModel(
                format!("bipartite model needs n1, n2 >= 1, got ({n1}, {n2})"),
            )),
            _ => Ok(()),
        }
    }

    /// Number of vertices (n1 + n2 for the bipartite model).
    pub fn order(&self) -> usize {
        match *self {
            ModelSpec::Er { n, .. } => n,
            ModelSpec::Bipartite { n1, n2, .. } => n1 + n2,
        }
    }

    pub fn p(&self) -> f64 {
        match *self {
            ModelSpec::Er { p, .. } | ModelSpec::Bipartite { p, .. } => p,
        }
    }

    pub fn kind(&self) -> ModelKind {
        match self {
            ModelSpec::Er { .. } => ModelKind::Er,
            ModelSpec::Bipartite { .. } => ModelKind::Br,
        }
    }

    fn sample_unchecked(&self, rng: &mut impl Rng) -> Graph {
        match *self {
            ModelSpec::Er { n, p } => sample_er_unchecked(n, p, rng),
            ModelSpec::Bipartite { n1, n2, p } => sample_br_unchecked(n1, n2, p, rng),
        }
    }
}

/// Indices of the selected pairs out of `0..total`, each chosen
/// independently with probability `p`, in increasing order.
///
/// For sparse p this walks the pair space with geometric jumps (expected
/// O(p * total) work); otherwise it draws one uniform per pair.
fn sample_pairs(total: u64, p: f64, rng: &mut impl Rng) -> Vec<u64> {
    if p <= 0.0 {
        return Vec::new();
    }
    if p >= 1.0 {
        return (0..total).collect();
    }
    if p <= SPARSE_P_MAX {
        let jumps = Geometric::new(p).expect("probability in (0, 0.3]");
        let mut picked = Vec::with_capacity((total as f64 * p * 1.2) as usize + 4);
        let mut cursor: u64 = 0;
        while let Some(hit) = cursor.checked_add(jumps.sample(rng)) {
            if hit >= total {
                break;
            }
            picked.push(hit);
            cursor = hit + 1;
        }
        picked
    } else {
        (0..total).filter(|_| rng.random::<f64>() < p).collect()
    }
}

/// Maps a lexicographic pair index to the pair `(u, v)`, `u < v`, over
/// `0..n`. Row u starts at offset `u(2n - u - 1)/2`.
fn er_pair(n: u64, k: u64) -> (u32, u32) {
    let offset = |u: u64| u * (2 * n - u - 1) / 2;
    let t = (2 * n - 1) as f64;
    let mut u = ((t - (t * t - 8.0 * k as f64).sqrt()) / 2.0) as u64;
    u = u.min(n - 2);
    while u < n - 2 && offset(u + 1) <= k {
        u += 1;
    }
    while u > 0 && offset(u) > k {
        u -= 1;
    }
    let v = u + 1 + (k - offset(u));
    (u as u32, v as u32)
}

fn sample_er_unchecked(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let n64 = n as u64;
    let total = n64 * (n64 - 1) / 2;
    let edges = sample_pairs(total, p, rng)
        .into_iter()
        .map(|k| er_pair(n64, k))
        .collect();
    Graph::from_sorted_unique_edges(n, edges)
}

fn sample_br_unchecked(n1: usize, n2: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let total = n1 as u64 * n2 as u64;
    let edges = sample_pairs(total, p, rng)
        .into_iter()
        .map(|k| {
            let u = (k / n2 as u64) as u32;
            let v = (n1 as u64 + k % n2 as u64) as u32;
            (u, v)
        })
        .collect();
    Graph::from_sorted_unique_edges(n1 + n2, edges)
}

/// Samples one Erdos-Renyi graph G(n, p).
pub fn sample_er(n: usize, p: f64, rng: &mut impl Rng) -> Result<Graph> {
    let model = ModelSpec::Er { n, p };
    model.validate()?;
    Ok(model.sample_unchecked(rng))
}

/// Samples one bipartite random graph G(n1, n2, p); side one is `0..n1`.
pub fn sample_br(n1: usize, n2: usize, p: f64, rng: &mut impl Rng) -> Result<Graph> {
    let model = ModelSpec::Bipartite { n1, n2, p };
    model.validate()?;
    Ok(model.sample_unchecked(rng))
}

/// RNG for one replica: the master seed keys the generator, the replica
/// index selects a dedicated ChaCha stream.
pub fn replica_rng(master_seed: u64, replica: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(master_seed);
    rng.set_stream(replica);
    rng
}

/// An ensemble: model, replica count, master seed, and exponent grid.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct EnsembleSpec {
    pub model: ModelSpec,
    pub replicas: usize,
    pub master_seed: u64,
    pub alphas: Vec<Exponent>,
}

impl EnsembleSpec {
    pub fn validate(&self) -> Result<()> {
        self.model.validate()?;
        if self.replicas == 0 {
            return Err(Error::InvalidSpec("replica count must be >= 1".into()));
        }
        if self.alphas.is_empty() {
            return Err(Error::InvalidSpec("exponent grid must be non-empty".into()));
        }
        if let Some(bad) = self.alphas.iter().find(|a| a.value() < 0.0) {
            return Err(Error::InvalidSpec(format!(
                "ensemble exponents must be >= 0, got {}",
                bad.value()
            )));
        }
        Ok(())
    }
}

/// Raw per-replica results of an ensemble run.
#[derive(Debug, Clone)]
pub struct EnsembleRun {
    /// `sdd_by_alpha[i][r]` is SDD at `alphas[i]` of replica r.
    pub sdd_by_alpha: Vec<Vec<f64>>,
    /// Edge count of each replica.
    pub edge_counts: Vec<u64>,
}

/// Samples every replica and computes SDD on each, in parallel.
///
/// Replica r is fully determined by `(spec.master_seed, r)`; the result
/// vectors are in replica order regardless of scheduling.
pub fn run_ensemble(spec: &EnsembleSpec) -> Result<EnsembleRun> {
    spec.validate()?;
    let per_replica: Vec<(u64, Vec<f64>)> = (0..spec.replicas as u64)
        .into_par_iter()
        .map(|r| {
            let mut rng = replica_rng(spec.master_seed, r);
            let graph = spec.model.sample_unchecked(&mut rng);
            let pairs = degree_pair_counts(&graph);
            let sdds = spec
                .alphas
                .iter()
                .map(|&alpha| sdd_from_pair_counts(&pairs, alpha))
                .collect();
            (graph.edge_count() as u64, sdds)
        })
        .collect();

    let mut sdd_by_alpha = vec![Vec::with_capacity(spec.replicas); spec.alphas.len()];
    let mut edge_counts = Vec::with_capacity(spec.replicas);
    for (m, sdds) in per_replica {
        edge_counts.push(m);
        for (column, value) in sdd_by_alpha.iter_mut().zip(sdds) {
            column.push(value);
        }
    }
    Ok(EnsembleRun {
        sdd_by_alpha,
        edge_counts,
    })
}

/// One (model, p, alpha) cell of ensemble statistics.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct SweepRow {
    pub model: ModelKind,
    /// Graph order (n1 + n2 for the bipartite model).
    pub n: usize,
    pub n1: Option<usize>,
    pub n2: Option<usize>,
    pub p: f64,
    pub alpha: f64,
    pub replicas: usize,
    /// Ensemble mean of SDD_alpha.
    pub mean_sdd: f64,
    /// Sample standard deviation / sqrt(replicas); 0 for a single replica.
    pub stderr_sdd: f64,
    /// Empirical mean degree 2<m>/n.
    pub mean_degree: f64,
    pub mean_sdd_over_n: f64,
}

/// Kahan-Babuska compensated summation; deterministic for a fixed order.
fn compensated_sum(values: impl IntoIterator<Item = f64>) -> f64 {
    let mut sum = 0.0;
    let mut compensation = 0.0;
    for x in values {
        let t = sum + x;
        if sum.abs() >= x.abs() {
            compensation += (sum - t) + x;
        } else {
            compensation += (x - t) + sum;
        }
        sum = t;
    }
    sum + compensation
}

fn mean_and_stderr(values: &[f64]) -> (f64, f64) {
    let r = values.len();
    let mean = compensated_sum(values.iter().copied()) / r as f64;
    if r < 2 {
        return (mean, 0.0);
    }
    let sum_sq = compensated_sum(values.iter().map(|&x| (x - mean) * (x - mean)));
    let std_dev = (sum_sq / (r - 1) as f64).sqrt();
    (mean, std_dev / (r as f64).sqrt())
}

/// Ensemble mean and standard error of SDD for every exponent in the spec,
/// plus the empirical mean degree. One row per exponent.
pub fn ensemble_average(spec: &EnsembleSpec) -> Result<Vec<SweepRow>> {
    let run = run_ensemble(spec)?;
    Ok(summarize(spec, &run))
}

/// Statistics over an already-materialized run (same rows as
/// [`ensemble_average`]).
pub fn summarize(spec: &EnsembleSpec, run: &EnsembleRun) -> Vec<SweepRow> {
    let n = spec.model.order();
    let (n1, n2) = match spec.model {
        ModelSpec::Er { .. } => (None, None),
        ModelSpec::Bipartite { n1, n2, .. } => (Some(n1), Some(n2)),
    };
    let mean_edges =
        compensated_sum(run.edge_counts.iter().map(|&m| m as f64)) / spec.replicas as f64;
    let mean_degree = 2.0 * mean_edges / n as f64;
    spec.alphas
        .iter()
        .zip(&run.sdd_by_alpha)
        .map(|(alpha, values)| {
            let (mean_sdd, stderr_sdd) = mean_and_stderr(values);
            SweepRow {
                model: spec.model.kind(),
                n,
                n1,
                n2,
                p: spec.model.p(),
                alpha: alpha.value(),
                replicas: spec.replicas,
                mean_sdd,
                stderr_sdd,
                mean_degree,
                mean_sdd_over_n: mean_sdd / n as f64,
            }
        })
        .collect()
}

/// Model family and sizes for a probability sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SweepModel {
    Er { n: usize },
    Bipartite { n1: usize, n2: usize },
}

impl SweepModel {
    pub fn with_p(self, p: f64) -> ModelSpec {
        match self {
            SweepModel::Er { n } => ModelSpec::Er { n, p },
            SweepModel::Bipartite { n1, n2 } => ModelSpec::Bipartite { n1, n2, p },
        }
    }
}

/// Runs `ensemble_average` on every cell of `p_grid` x `alphas`.
///
/// Every cell uses the same master seed, so a sweep is reproducible cell by
/// cell with standalone [`ensemble_average`] calls.
pub fn sweep(
    model: SweepModel,
    p_grid: &[f64],
    alphas: &[Exponent],
    replicas: usize,
    master_seed: u64,
) -> Result<Vec<SweepRow>> {
    if p_grid.is_empty() {
        return Err(Error::InvalidSpec("p grid must be non-empty".into()));
    }
    if p_grid.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::InvalidSpec("p grid must be sorted ascending".into()));
    }
    let mut rows = Vec::with_capacity(p_grid.len() * alphas.len());
    for &p in p_grid {
        let spec = EnsembleSpec {
            model: model.with_p(p),
            replicas,
            master_seed,
            alphas: alphas.to_vec(),
        };
        rows.extend(ensemble_average(&spec)?);
    }
    Ok(rows)
}

/// The closed-form ensemble expressions.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub enum PredictionKind {
    /// <SDD_0> = n(n-1)p for the ER model.
    ErSdd0,
    /// Large-np approximation <SDD_a> ~ n(n-1)p, any exponent.
    ErLargeNp,
    /// ER mean degree <d> = (n-1)p.
    ErMeanDegree,
    /// <SDD_0> = 2 n1 n2 p for the bipartite model.
    BrSdd0,
    /// Balanced bipartite (n1 = n2) large-np approximation: 2 n1 n2 p.
    BrBalanced,
    /// General bipartite large-np approximation:
    /// `<|E|> ((d1/d2)^a + (d2/d1)^a)` with `<d1> = n2 p`, `<d2> = n1 p`.
    BrGeneralLargeNp { alpha: f64 },
}

/// A prediction value together with the expression that produced it.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct ClosedFormPrediction {
    pub kind: PredictionKind,
    pub value: f64,
}

/// Evaluates a closed-form prediction for a model.
pub fn predict(kind: PredictionKind, model: &ModelSpec) -> Result<ClosedFormPrediction> {
    model.validate()?;
    let mismatch = |reason: &str| Error::PredictionMismatch {
        kind: format!("{kind:?}"),
        reason: reason.into(),
    };
    let value = match (kind, *model) {
        (PredictionKind::ErSdd0 | PredictionKind::ErLargeNp, ModelSpec::Er { n, p }) => {
            n as f64 * (n - 1) as f64 * p
        }
        (PredictionKind::ErMeanDegree, ModelSpec::Er { n, p }) => (n - 1) as f64 * p,
        (PredictionKind::BrSdd0, ModelSpec::Bipartite { n1, n2, p }) => {
            2.0 * n1 as f64 * n2 as f64 * p
        }
        (PredictionKind::BrBalanced, ModelSpec::Bipartite { n1, n2, p }) => {
            if n1 != n2 {
                return Err(mismatch("balanced prediction needs n1 = n2"));
            }
            2.0 * n1 as f64 * n2 as f64 * p
        }
        (PredictionKind::BrGeneralLargeNp { alpha }, ModelSpec::Bipartite { n1, n2, p }) => {
            if !alpha.is_finite() {
                return Err(Error::NonFiniteExponent(alpha));
            }
            let log_ratio = (n2 as f64).ln() - (n1 as f64).ln();
            let shape = (alpha * log_ratio).exp() + (-alpha * log_ratio).exp();
            n1 as f64 * n2 as f64 * p * shape
        }
        (PredictionKind::ErSdd0 | PredictionKind::ErLargeNp | PredictionKind::ErMeanDegree, _) => {
            return Err(mismatch("ER prediction applied to a bipartite model"))
        }
        (
            PredictionKind::BrSdd0
            | PredictionKind::BrBalanced
            | PredictionKind::BrGeneralLargeNp { .. },
            _,
        ) => return Err(mismatch("bipartite prediction applied to an ER model")),
    };
    Ok(ClosedFormPrediction { kind, value })
}

/// One point of the scaling collapse: a sweep row re-keyed by
/// (empirical mean degree, alpha), with the source size retained.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct CollapsePoint {
    pub model: ModelKind,
    pub n: usize,
    pub alpha: f64,
    pub mean_degree: f64,
    pub mean_sdd_over_n: f64,
    /// `mean_sdd_over_n / mean_degree`; `None` for degenerate rows with no
    /// edges. Approaches 1 where the scaling law holds.
    pub ratio: Option<f64>,
}

/// Re-keys sweep rows by (mean degree, alpha) for cross-size comparison.
pub fn collapse(rows: &[SweepRow]) -> Vec<CollapsePoint> {
    let mut points: Vec<CollapsePoint> = rows
        .iter()
        .map(|row| CollapsePoint {
            model: row.model,
            n: row.n,
            alpha: row.alpha,
            mean_degree: row.mean_degree,
            mean_sdd_over_n: row.mean_sdd_over_n,
            ratio: (row.mean_degree != 0.0).then(|| row.mean_sdd_over_n / row.mean_degree),
        })
        .collect();
    points.sort_by(|a, b| {
        a.mean_degree
            .total_cmp(&b.mean_degree)
            .then(a.alpha.total_cmp(&b.alpha))
            .then(a.n.cmp(&b.n))
    });
    points
}

// --- CSV serialization -----------------------------------------------------

/// Header of the sweep CSV schema.
pub const SWEEP_CSV_HEADER: &str =
    "model,n,n1,n2,p,alpha,replicas,mean_sdd,stderr_sdd,mean_degree,mean_sdd_over_n";

/// Header of the collapse CSV schema.
pub const COLLAPSE_CSV_HEADER: &str = "model,n,alpha,mean_degree,mean_sdd_over_n,ratio";

/// Formats a float with 17 significant digits (round-trip exact).
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

fn fmt_opt_usize(v: Option<usize>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

/// Serializes sweep rows to CSV (see [`SWEEP_CSV_HEADER`]).
pub fn sweep_rows_to_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from(SWEEP_CSV_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{}\n",
            row.model,
            row.n,
            fmt_opt_usize(row.n1),
            fmt_opt_usize(row.n2),
            fmt_f64(row.p),
            fmt_f64(row.alpha),
            row.replicas,
            fmt_f64(row.mean_sdd),
            fmt_f64(row.stderr_sdd),
            fmt_f64(row.mean_degree),
            fmt_f64(row.mean_sdd_over_n),
        ));
    }
    out
}

/// Serializes collapse points to CSV (see [`COLLAPSE_CSV_HEADER`]).
pub fn collapse_points_to_csv(points: &[CollapsePoint]) -> String {
    let mut out = String::from(COLLAPSE_CSV_HEADER);
    out.push('\n');
    for pt in points {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            pt.model,
            pt.n,
            fmt_f64(pt.alpha),
            fmt_f64(pt.mean_degree),
            fmt_f64(pt.mean_sdd_over_n),
            pt.ratio.map(fmt_f64).unwrap_or_default(),
        ));
    }
    out
}

/// Parses a sweep CSV produced by [`sweep_rows_to_csv`].
pub fn parse_sweep_csv(text: &str) -> Result<Vec<SweepRow>> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines
        .next()
        .ok_or_else(|| Error::CsvSchema("empty input".into()))?;
    if header.trim() != SWEEP_CSV_HEADER {
        return Err(Error::CsvSchema(format!(
            "expected header {SWEEP_CSV_HEADER:?}, got {:?}",
            header.trim()
        )));
    }
    let mut rows = Vec::new();
    for (idx, line) in lines {
        let fields: Vec<&str> = line.trim().split(',').collect();
        if fields.len() != 11 {
            return Err(Error::CsvSchema(format!(
                "line {}: expected 11 fields, got {}",
                idx + 1,
                fields.len()
            )));
        }
        let bad = |what: &str| Error::CsvSchema(format!("line {}: invalid {what}", idx + 1));
        let model = match fields[0] {
            "er" => ModelKind::Er,
            "br" => ModelKind::Br,
            other => {
                return Err(Error::CsvSchema(format!(
                    "line {}: unknown model {other:?}",
                    idx + 1
                )))
            }
        };
        let parse_usize = |s: &str, what: &str| s.parse::<usize>().map_err(|_| bad(what));
        let parse_opt = |s: &str, what: &str| -> Result<Option<usize>> {
            if s.is_empty() {
                Ok(None)
            } else {
                Ok(Some(parse_usize(s, what)?))
            }
        };
        let parse_f64 = |s: &str, what: &str| s.parse::<f64>().map_err(|_| bad(what));
        rows.push(SweepRow {
            model,
            n: parse_usize(fields[1], "n")?,
            n1: parse_opt(fields[2], "n1")?,
            n2: parse_opt(fields[3], "n2")?,
            p: parse_f64(fields[4], "p")?,
            alpha: parse_f64(fields[5], "alpha")?,
            replicas: parse_usize(fields[6], "replicas")?,
            mean_sdd: parse_f64(fields[7], "mean_sdd")?,
            stderr_sdd: parse_f64(fields[8], "stderr_sdd")?,
            mean_degree: parse_f64(fields[9], "mean_degree")?,
            mean_sdd_over_n: parse_f64(fields[10], "mean_sdd_over_n")?,
        });
    }
    Ok(rows)
}
