//! Random graph samplers and seeded labeling experiments.
//!
//! Every trial draws from its own ChaCha8 stream, selected by trial index,
//! so reports do not depend on how trials are scheduled across threads.

use std::collections::BTreeMap;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::certificate::{Reason, Verdict};
use crate::construct::certify_sufficient;
use crate::graph::{Graph, GraphError};
use crate::search::SearchBudget;

/// Restarts allowed before [`sample_gnd`] gives up.
const MAX_RESTARTS: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RandomGraphError {
    #[error("probability {0} is outside [0, 1]")]
    Probability(f64),
    #[error("n * d = {n} * {d} is odd")]
    OddDegreeSum { n: usize, d: usize },
    #[error("degree {d} must be between 1 and n - 1 = {}", .n.saturating_sub(1))]
    Degree { n: usize, d: usize },
    #[error("no simple pairing after {0} restarts")]
    TooManyRestarts(usize),
    #[error("at least one trial is required")]
    NoTrials,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn trial_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// `G(n, p)` with a generator seeded by `seed`.
pub fn sample_gnp(n: usize, p: f64, seed: u64) -> Result<Graph, RandomGraphError> {
    gnp_with(n, p, &mut trial_rng(seed, 0))
}

pub fn gnp_with<R: Rng>(n: usize, p: f64, rng: &mut R) -> Result<Graph, RandomGraphError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(RandomGraphError::Probability(p));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::from_edges(n, edges)?)
}

/// Random `d`-regular graph on `n` vertices by the configuration model:
/// shuffle `nd` half-edges, pair them up, and start over whenever a loop or
/// a repeated edge appears.
pub fn sample_gnd(n: usize, d: usize, seed: u64) -> Result<Graph, RandomGraphError> {
    gnd_with(n, d, &mut trial_rng(seed, 0))
}

pub fn gnd_with<R: Rng>(n: usize, d: usize, rng: &mut R) -> Result<Graph, RandomGraphError> {
    if d == 0 || d >= n {
        return Err(RandomGraphError::Degree { n, d });
    }
    if (n * d) % 2 == 1 {
        return Err(RandomGraphError::OddDegreeSum { n, d });
    }
    let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
    let mut seen = vec![false; n * n];
    'restart: for _ in 0..MAX_RESTARTS {
        points.shuffle(rng);
        seen.iter_mut().for_each(|s| *s = false);
        let mut edges = Vec::with_capacity(n * d / 2);
        for pair in points.chunks(2) {
            let (u, v) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if u == v || seen[u * n + v] {
                continue 'restart;
            }
            seen[u * n + v] = true;
            edges.push((u, v));
        }
        return Ok(Graph::from_edges(n, edges)?);
    }
    Err(RandomGraphError::TooManyRestarts(MAX_RESTARTS))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "kebab-case")]
pub enum Family {
    Gnp { n: usize, p: f64 },
    Gnd { n: usize, d: usize },
}

impl Family {
    pub fn sample<R: Rng>(&self, rng: &mut R) -> Result<Graph, RandomGraphError> {
        match *self {
            Family::Gnp { n, p } => gnp_with(n, p, rng),
            Family::Gnd { n, d } => gnd_with(n, d, rng),
        }
    }
}

/// One sampled graph and how it was classified.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrialRecord {
    pub trial: u64,
    pub n: usize,
    pub m: usize,
    pub verdict: Verdict,
    pub certificate: &'static str,
    /// Lengths of the two cycles closed by the chord, for chord routes.
    pub chord_cycles: Option<(usize, usize)>,
    pub g6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentReport {
    pub family: Family,
    pub trials: u64,
    pub seed: u64,
    pub npl: u64,
    pub not_npl: u64,
    pub unknown: u64,
    pub by_certificate: BTreeMap<&'static str, u64>,
    pub npl_fraction: f64,
    /// Mean wall time per trial; only filled in when timing was requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mean_millis: Option<f64>,
    pub records: Vec<TrialRecord>,
}

impl ExperimentReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// The per-trial table as CSV.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "trial",
            "n",
            "m",
            "verdict",
            "certificate",
            "chord_cycles",
            "g6",
            "millis",
        ])
        .expect("in-memory write");
        for r in &self.records {
            let chord = r
                .chord_cycles
                .map(|(a, b)| format!("{a}/{b}"))
                .unwrap_or_default();
            let millis = r.millis.map(|m| m.to_string()).unwrap_or_default();
            w.write_record([
                r.trial.to_string().as_str(),
                &r.n.to_string(),
                &r.m.to_string(),
                r.verdict.as_str(),
                r.certificate,
                &chord,
                &r.g6,
                &millis,
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("ascii output")
    }
}

/// Samples `trials` graphs and classifies each with
/// [`certify_sufficient`]. Trials run in parallel; trial `i` uses stream
/// `i` of the generator seeded with `seed`.
pub fn experiment_npl_rate(
    family: Family,
    trials: u64,
    seed: u64,
    budget: &SearchBudget,
    timing: bool,
) -> Result<ExperimentReport, RandomGraphError> {
    if trials == 0 {
        return Err(RandomGraphError::NoTrials);
    }
    let records = (0..trials)
        .into_par_iter()
        .map(|t| {
            let g = family.sample(&mut trial_rng(seed, t))?;
            let started = Instant::now();
            let cert = certify_sufficient(&g, budget);
            let millis = timing.then(|| started.elapsed().as_millis() as u64);
            let chord_cycles = match cert.reason() {
                Reason::OddChord { cycle, chord, .. } | Reason::Chord4k { cycle, chord, .. } => {
                    Some(chord_cycle_lengths(cycle, *chord))
                }
                _ => None,
            };
            Ok(TrialRecord {
                trial: t,
                n: g.order(),
                m: g.edge_count(),
                verdict: cert.verdict(),
                certificate: cert.reason().tag(),
                chord_cycles,
                g6: crate::graph::write_graph6(&g),
                millis,
            })
        })
        .collect::<Result<Vec<_>, RandomGraphError>>()?;

    let mut report = ExperimentReport {
        family,
        trials,
        seed,
        npl: 0,
        not_npl: 0,
        unknown: 0,
        by_certificate: BTreeMap::new(),
        npl_fraction: 0.0,
        mean_millis: None,
        records,
    };
    for r in &report.records {
        match r.verdict {
            Verdict::Npl => report.npl += 1,
            Verdict::NotNpl => report.not_npl += 1,
            Verdict::Unknown => report.unknown += 1,
        }
        *report.by_certificate.entry(r.certificate).or_default() += 1;
    }
    report.npl_fraction = report.npl as f64 / trials as f64;
    if timing {
        let total: u64 = report.records.iter().filter_map(|r| r.millis).sum();
        report.mean_millis = Some(total as f64 / trials as f64);
    }
    Ok(report)
}

/// Lengths of the two cycles a chord closes with the arcs of `cycle`.
pub fn chord_cycle_lengths(cycle: &[usize], (a, b): (usize, usize)) -> (usize, usize) {
    let n = cycle.len();
    let pa = cycle
        .iter()
        .position(|&v| v == a)
        .expect("chord endpoint on cycle");
    let pb = cycle
        .iter()
        .position(|&v| v == b)
        .expect("chord endpoint on cycle");
    let forward = (pb + n - pa) % n;
    (forward + 1, n - forward + 1)
}
