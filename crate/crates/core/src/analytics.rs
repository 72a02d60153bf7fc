//! Aggregates over enumeration results and their text exports.

use std::collections::HashMap;
use std::io::{self, Write};

use serde::{Deserialize, Serialize};

use crate::clique::DeltaClique;
use crate::engine::{DiscoveryPoint, Telemetry};
use crate::error::AnalyticsError;
use crate::stream::NodeId;
use crate::time::Duration;

/// One row of run statistics.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryRow {
    pub delta: i64,
    pub result_count: usize,
    pub max_nodes: usize,
    pub max_duration: i64,
    pub runtime_seconds: f64,
    pub iterations: u64,
    pub states_seen: usize,
    /// Set when the result was empty and the maxima are placeholders.
    pub empty: bool,
}

pub fn summarize(delta: Duration, cliques: &[DeltaClique], telemetry: &Telemetry) -> SummaryRow {
    SummaryRow {
        delta: delta.ticks(),
        result_count: cliques.len(),
        max_nodes: cliques.iter().map(|c| c.nodes().len()).max().unwrap_or(0),
        max_duration: cliques.iter().map(DeltaClique::duration).max().unwrap_or(0),
        runtime_seconds: telemetry.wall_time.as_secs_f64(),
        iterations: telemetry.iterations,
        states_seen: telemetry.states_seen,
        empty: cliques.is_empty(),
    }
}

/// Step CCDF: `(v, fraction of samples >= v)` for each distinct value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CcdfSeries {
    pub points: Vec<(i64, f64)>,
}

impl CcdfSeries {
    /// Fraction of samples `>= value`.
    pub fn at(&self, value: i64) -> f64 {
        let i = self.points.partition_point(|&(v, _)| v < value);
        self.points.get(i).map_or(0.0, |&(_, f)| f)
    }

    /// Writes a `value<TAB>ccdf` table with header.
    pub fn write_tsv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "value\tccdf")?;
        for (v, f) in &self.points {
            writeln!(out, "{v}\t{f}")?;
        }
        Ok(())
    }
}

pub fn ccdf(values: &[i64]) -> Result<CcdfSeries, AnalyticsError> {
    if values.is_empty() {
        return Err(AnalyticsError::EmptySample);
    }
    let mut sorted = values.to_vec();
    sorted.sort_unstable();
    let total = sorted.len() as f64;
    let mut points = Vec::new();
    let mut i = 0;
    while i < sorted.len() {
        let v = sorted[i];
        points.push((v, (sorted.len() - i) as f64 / total));
        i += sorted[i..].partition_point(|&x| x == v);
    }
    Ok(CcdfSeries { points })
}

/// Node counts of the cliques.
pub fn sizes(cliques: &[DeltaClique]) -> Vec<i64> {
    cliques.iter().map(|c| c.nodes().len() as i64).collect()
}

/// `e - b` of the cliques.
pub fn durations(cliques: &[DeltaClique]) -> Vec<i64> {
    cliques.iter().map(DeltaClique::duration).collect()
}

pub fn discovery_curve(telemetry: &Telemetry) -> Result<&[DiscoveryPoint], AnalyticsError> {
    if telemetry.discovery_log.is_empty() {
        return Err(AnalyticsError::DiscoveryNotLogged);
    }
    Ok(&telemetry.discovery_log)
}

pub fn write_discovery_tsv<W: Write>(points: &[DiscoveryPoint], mut out: W) -> io::Result<()> {
    writeln!(out, "iteration\tmaximal_count\tmax_size")?;
    for p in points {
        writeln!(out, "{}\t{}\t{}", p.iteration, p.maximal_count, p.max_size)?;
    }
    Ok(())
}

/// Fraction of node sets whose members all share one class label.
pub fn class_homogeneity<'a, I>(cliques: I, classes: &HashMap<NodeId, String>) -> Result<f64, AnalyticsError>
where
    I: IntoIterator<Item = &'a [NodeId]>,
{
    let mut total = 0usize;
    let mut homogeneous = 0usize;
    for nodes in cliques {
        total += 1;
        let mut labels = nodes
            .iter()
            .map(|v| classes.get(v).ok_or_else(|| AnalyticsError::MissingClass(v.to_string())));
        let first = match labels.next() {
            Some(l) => l?,
            None => continue,
        };
        let mut same = true;
        for l in labels {
            same &= l? == first;
        }
        homogeneous += usize::from(same);
    }
    if total == 0 {
        return Err(AnalyticsError::EmptySample);
    }
    Ok(homogeneous as f64 / total as f64)
}
