use std::path::Path;

use serde::Serialize;

use crate::capacity::{solve_characteristic, CharacteristicEquation, DEFAULT_TOL};
use crate::construct::{tribonacci_class_code, Family};
use crate::model::{ChannelGraph, Digraph};
use crate::search::{exact_m, omega_power_markov, omega_s, SearchConfig};
use crate::{Error, Result};

use super::round_sig10;

/// One line of the theorem battery.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportRow {
    pub theorem: String,
    pub n: usize,
    pub lower_bound: Option<u128>,
    pub exact: Option<u128>,
    pub upper_bound: Option<u128>,
    pub analytic_rate: Option<f64>,
    pub empirical_rate: Option<f64>,
}

impl ReportRow {
    fn new(theorem: &str, n: usize) -> Self {
        ReportRow {
            theorem: theorem.to_string(),
            n,
            lower_bound: None,
            exact: None,
            upper_bound: None,
            analytic_rate: None,
            empirical_rate: None,
        }
    }

    fn with_exact(mut self, size: usize) -> Self {
        self.exact = Some(size as u128);
        self.empirical_rate = Some((size as f64).log2() / self.n as f64);
        self
    }

    /// Whether `lower_bound <= exact <= upper_bound` for the bounds present.
    pub fn holds(&self) -> bool {
        let Some(exact) = self.exact else { return true };
        self.lower_bound.map_or(true, |lo| lo <= exact) && self.upper_bound.map_or(true, |hi| exact <= hi)
    }
}

fn rate(eq: &CharacteristicEquation) -> Result<f64> {
    Ok(solve_characteristic(eq, DEFAULT_TOL)?.rate_bits)
}

fn edge(spec: &str) -> Result<ChannelGraph> {
    crate::model::parse_channel_spec(spec)
}

fn alias(name: &str) -> ChannelGraph {
    ChannelGraph::alias(name).expect("built-in alias")
}

fn max_layer(n: usize) -> u128 {
    // Fibonacci words of length n and weight w: C(n - w + 1, w)
    let choose = |a: usize, b: usize| -> u128 {
        if b > a {
            return 0;
        }
        (0..b).fold(1u128, |acc, i| acc * (a - i) as u128 / (i + 1) as u128)
    };
    (0..=n)
        .map(|w| if w > n + 1 - w { 0 } else { choose(n + 1 - w, w) })
        .max()
        .unwrap_or(1)
}

/// Runs every bounded theorem check up to length `max_n`.
pub fn build_report(max_n: usize, cfg: &SearchConfig) -> Result<Vec<ReportRow>> {
    if max_n < 1 {
        return Err(Error::InvalidArgument("--max-n must be at least 1".into()));
    }
    let half = rate(&CharacteristicEquation::finite(&[2, 2])?)?;
    let golden = rate(&CharacteristicEquation::golden())?;
    let tribonacci = rate(&CharacteristicEquation::tribonacci())?;
    let odd = rate(&CharacteristicEquation::odd_runs())?;
    let no_isolated = rate(&CharacteristicEquation::no_isolated_ones())?;

    let (f, g, l, q) = (alias("F"), alias("G"), alias("L"), alias("Q"));
    let diagonal = edge("00-11")?;
    let adjacent = edge("00-01")?;
    let no111 = Family::No111.counts(max_n);
    let odd_c = Family::OddRun.counts(max_n);
    let odd_b = Family::OddRunAny.counts(max_n);
    let d_counts = Family::NoIsolatedOnes.counts(max_n);
    let fib = Family::Fibonacci.counts(max_n);

    let mut rows = Vec::new();
    for n in 1..=max_n {
        let m = |graph: &ChannelGraph| exact_m(graph, n, cfg).map(|r| r.size);

        let mut row = ReportRow::new("single-edge-00-11", n).with_exact(m(&diagonal)?);
        row.analytic_rate = Some(half);
        rows.push(row);

        let m_adjacent = m(&adjacent)?;
        let mut row = ReportRow::new("single-edge-00-01", n).with_exact(m_adjacent);
        row.analytic_rate = Some(golden);
        rows.push(row);

        let mut row = ReportRow::new("no111-F", n).with_exact(m(&f)?);
        if n >= 3 {
            row.lower_bound = Some(tribonacci_class_code(n)?.len() as u128);
        }
        row.upper_bound = Some(no111[n]);
        row.analytic_rate = Some(tribonacci);
        rows.push(row);

        let mut row = ReportRow::new("oddrun-G", n).with_exact(m(&g)?);
        row.lower_bound = Some(odd_c[n]);
        row.upper_bound = Some(odd_b[n]);
        row.analytic_rate = Some(odd);
        rows.push(row);

        let mut row = ReportRow::new("star00-L", n).with_exact(m(&l)?);
        row.lower_bound = Some(d_counts[n]);
        row.upper_bound = Some(n as u128 * d_counts[n]);
        row.analytic_rate = Some(no_isolated);
        rows.push(row);

        let mut row = ReportRow::new("star01-Q", n).with_exact(m(&q)?);
        row.lower_bound = Some(m_adjacent as u128);
        row.upper_bound = Some(fib[n]);
        row.analytic_rate = Some(golden);
        rows.push(row);

        if n >= 2 {
            let walks = omega_power_markov(&f, &Digraph::pair_shift(), n - 1, cfg)?.size as u128;
            let mut row = ReportRow::new("embedding-F", n).with_exact(m(&f)?);
            row.lower_bound = Some(walks);
            row.upper_bound = Some(walks);
            rows.push(row);
        }

        if n <= 10 {
            let size = omega_s(&Digraph::from_arcs(2, &[(0, 1)])?, &Digraph::fibonacci(), n, cfg)?.size;
            let mut row = ReportRow::new("sperner-fib", n).with_exact(size);
            row.lower_bound = Some(max_layer(n));
            row.upper_bound = Some(fib[n]);
            row.analytic_rate = Some(golden);
            rows.push(row);
        }
    }
    for n in 1..=3 {
        let d = Digraph::symmetric_cycle(5);
        let p = Digraph::complete_loopless(5);
        rows.push(ReportRow::new("pentagon", n).with_exact(omega_s(&d, &p, n, cfg)?.size));
    }
    Ok(rows)
}

pub fn write_report_csv(rows: &[ReportRow], path: &Path) -> Result<()> {
    let mut w = csv::Writer::from_path(path).map_err(|e| Error::Io(e.to_string()))?;
    let rate = |x: Option<f64>| x.map(|v| round_sig10(v).to_string()).unwrap_or_default();
    let int = |x: Option<u128>| x.map(|v| v.to_string()).unwrap_or_default();
    w.write_record([
        "theorem",
        "n",
        "lower_bound",
        "exact",
        "upper_bound",
        "analytic_rate",
        "empirical_rate",
    ])
    .map_err(|e| Error::Io(e.to_string()))?;
    for r in rows {
        w.write_record([
            r.theorem.clone(),
            r.n.to_string(),
            int(r.lower_bound),
            int(r.exact),
            int(r.upper_bound),
            rate(r.analytic_rate),
            rate(r.empirical_rate),
        ])
        .map_err(|e| Error::Io(e.to_string()))?;
    }
    w.flush()?;
    Ok(())
}
