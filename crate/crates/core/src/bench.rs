//! Operation counts and wall times for the counting algorithms.
//!
//! The multiply-accumulate count is the asymptotic witness: it is exact and
//! deterministic, while wall time also depends on operand sizes and the
//! machine. Wall time is the minimum over repetitions.

use std::fmt;
use std::str::FromStr;
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::counting::{count_with_budget, evaluate};
use crate::float_eval::log_row_with_macs;
use crate::{Algorithm, Budget, Error, Params, Recursion, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BenchAlgorithm {
    Fast,
    Richmond,
    Signature,
    Anagram,
    Brute,
    /// Fast recursion in log space.
    LogFast,
}

impl BenchAlgorithm {
    pub const ALL: [BenchAlgorithm; 6] = [
        BenchAlgorithm::Fast,
        BenchAlgorithm::Richmond,
        BenchAlgorithm::Signature,
        BenchAlgorithm::Anagram,
        BenchAlgorithm::Brute,
        BenchAlgorithm::LogFast,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            BenchAlgorithm::Fast => "fast",
            BenchAlgorithm::Richmond => "richmond",
            BenchAlgorithm::Signature => "signature",
            BenchAlgorithm::Anagram => "anagram",
            BenchAlgorithm::Brute => "brute",
            BenchAlgorithm::LogFast => "log-fast",
        }
    }
}

impl fmt::Display for BenchAlgorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BenchAlgorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BenchAlgorithm::ALL
            .into_iter()
            .find(|a| a.as_str() == s)
            .ok_or_else(|| Error::Domain(format!("unknown benchmark algorithm `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchEntry {
    pub d: u128,
    pub n: usize,
    pub algorithm: BenchAlgorithm,
    /// `None` for the enumeration oracles, which do no multiply-accumulates.
    pub mac_count: Option<u64>,
    /// Seconds, minimum over repetitions.
    pub wall_time: f64,
    /// Exact decimal value, for exact algorithms.
    pub value: Option<String>,
    pub log_value: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchMetadata {
    /// Unix seconds at the start of the run.
    pub timestamp: u64,
    pub backend: String,
    pub repetitions: u32,
    pub parallel: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchReport {
    pub entries: Vec<BenchEntry>,
    pub metadata: BenchMetadata,
}

impl BenchReport {
    pub fn entries_for(&self, algorithm: BenchAlgorithm) -> impl Iterator<Item = &BenchEntry> {
        self.entries
            .iter()
            .filter(move |e| e.algorithm == algorithm)
    }
}

pub const BACKEND: &str = "num-bigint BigUint (exact); f64 log-sum-exp (log-fast)";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct BenchOptions {
    pub budget: Budget,
    /// Evaluate grid points on the rayon pool. Timings from a parallel run are
    /// not comparable across entries.
    pub parallel: bool,
}

/// Runs every `(d, n, algorithm)` combination, in that nesting order.
pub fn run_grid(
    d_values: &[u128],
    n_values: &[usize],
    algorithms: &[BenchAlgorithm],
    repetitions: u32,
) -> Result<BenchReport> {
    run_grid_with(
        d_values,
        n_values,
        algorithms,
        repetitions,
        BenchOptions::default(),
    )
}

pub fn run_grid_with(
    d_values: &[u128],
    n_values: &[usize],
    algorithms: &[BenchAlgorithm],
    repetitions: u32,
    options: BenchOptions,
) -> Result<BenchReport> {
    if repetitions == 0 {
        return Err(Error::Domain("repetitions must be at least 1".into()));
    }
    if let Some(d) = d_values.iter().find(|&&d| d == 0) {
        return Err(Error::Domain(format!(
            "alphabet size must be at least 1, got {d}"
        )));
    }
    let timestamp = SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|t| t.as_secs())
        .unwrap_or(0);

    let points: Vec<(u128, usize, BenchAlgorithm)> = d_values
        .iter()
        .flat_map(|&d| {
            n_values
                .iter()
                .flat_map(move |&n| algorithms.iter().map(move |&a| (d, n, a)))
        })
        .collect();

    let run = |&(d, n, a): &(u128, usize, BenchAlgorithm)| {
        measure(Params::new(d, n), a, repetitions, options.budget)
    };
    let entries = if options.parallel {
        points.par_iter().map(run).collect::<Result<Vec<_>>>()?
    } else {
        points.iter().map(run).collect::<Result<Vec<_>>>()?
    };

    Ok(BenchReport {
        entries,
        metadata: BenchMetadata {
            timestamp,
            backend: BACKEND.to_string(),
            repetitions,
            parallel: options.parallel,
        },
    })
}

fn measure(
    p: Params,
    algorithm: BenchAlgorithm,
    repetitions: u32,
    budget: Budget,
) -> Result<BenchEntry> {
    let mut best = f64::INFINITY;
    let mut entry = None;
    for _ in 0..repetitions {
        let start = Instant::now();
        let (value, log_value, macs) = match algorithm {
            BenchAlgorithm::Fast => {
                let (v, m) = evaluate(p, Recursion::Fast);
                (Some(v), None, Some(m))
            }
            BenchAlgorithm::Richmond => {
                let (v, m) = evaluate(p, Recursion::Richmond);
                (Some(v), None, Some(m))
            }
            BenchAlgorithm::LogFast => {
                let (row, m) = log_row_with_macs(p.d, p.n);
                (None, Some(row[p.n].log_value), Some(m))
            }
            BenchAlgorithm::Signature => (
                Some(count_with_budget(p, Algorithm::Signature, budget)?),
                None,
                None,
            ),
            BenchAlgorithm::Anagram => (
                Some(count_with_budget(p, Algorithm::Anagram, budget)?),
                None,
                None,
            ),
            BenchAlgorithm::Brute => (
                Some(count_with_budget(p, Algorithm::Brute, budget)?),
                None,
                None,
            ),
        };
        best = best.min(start.elapsed().as_secs_f64());
        entry.get_or_insert(BenchEntry {
            d: p.d,
            n: p.n,
            algorithm,
            mac_count: macs,
            wall_time: 0.0,
            value: value.map(|v| v.to_string()),
            log_value,
        });
    }
    let mut entry = entry.expect("at least one repetition");
    entry.wall_time = best;
    Ok(entry)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScalingVariable {
    D,
    N,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalingFit {
    /// Least-squares slope of `ln(mac_count)` against `ln(variable)`.
    pub slope: f64,
    pub intercept: f64,
    /// Root-mean-square residual of the fit.
    pub residual: f64,
    pub points: usize,
}

/// Fits `ln(mac_count) = slope * ln(variable) + intercept` over the entries
/// of `algorithm`. The other variable must be the same on every entry.
pub fn fit_scaling(
    report: &BenchReport,
    algorithm: BenchAlgorithm,
    variable: ScalingVariable,
) -> Result<ScalingFit> {
    let entries: Vec<&BenchEntry> = report.entries_for(algorithm).collect();
    let fixed: Vec<u128> = entries
        .iter()
        .map(|e| match variable {
            ScalingVariable::D => e.n as u128,
            ScalingVariable::N => e.d,
        })
        .collect();
    if fixed.windows(2).any(|w| w[0] != w[1]) {
        return Err(Error::Fit(
            "the non-fitted variable is not held fixed".into(),
        ));
    }

    let mut xs = Vec::with_capacity(entries.len());
    let mut ys = Vec::with_capacity(entries.len());
    for e in &entries {
        let x = match variable {
            ScalingVariable::D => e.d as f64,
            ScalingVariable::N => e.n as f64,
        };
        let macs = e
            .mac_count
            .ok_or_else(|| Error::Fit(format!("{algorithm} entries carry no operation count")))?;
        if macs == 0 || x <= 0.0 {
            return Err(Error::Fit(format!("cannot take logs at {x}, {macs} MACs")));
        }
        xs.push(x.ln());
        ys.push((macs as f64).ln());
    }

    let mut distinct = xs.clone();
    distinct.sort_by(f64::total_cmp);
    distinct.dedup();
    if distinct.len() < 4 {
        return Err(Error::Fit(format!(
            "need at least 4 distinct values of the fitted variable, got {}",
            distinct.len()
        )));
    }

    let len = xs.len() as f64;
    let mean_x = xs.iter().sum::<f64>() / len;
    let mean_y = ys.iter().sum::<f64>() / len;
    let sxx: f64 = xs.iter().map(|x| (x - mean_x).powi(2)).sum();
    let sxy: f64 = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| (x - mean_x) * (y - mean_y))
        .sum();
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let residual = (xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| (y - slope * x - intercept).powi(2))
        .sum::<f64>()
        / len)
        .sqrt();
    Ok(ScalingFit {
        slope,
        intercept,
        residual,
        points: xs.len(),
    })
}
