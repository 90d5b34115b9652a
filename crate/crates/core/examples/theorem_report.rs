//! Runs the whole bounded theorem battery and writes the CSV that the
//! `report` subcommand produces.
//!
//! ```text
//! cargo run --release --example theorem_report -- report.csv 12
//! ```

use std::path::PathBuf;

use zecap::cli::{build_report, write_report_csv};
use zecap::search::SearchConfig;

fn main() -> zecap::Result<()> {
    let mut args = std::env::args().skip(1);
    let out = PathBuf::from(args.next().unwrap_or_else(|| "report.csv".into()));
    let max_n = args.next().and_then(|a| a.parse().ok()).unwrap_or(10);
    let rows = build_report(max_n, &SearchConfig::from_env()?)?;
    for r in rows.iter().filter(|r| r.n == max_n.min(10) || r.theorem == "pentagon") {
        println!(
            "{:<12} n={:<2} {:>6} <= {:>6} <= {:>6}  {}",
            r.theorem,
            r.n,
            r.lower_bound.map_or("-".into(), |v| v.to_string()),
            r.exact.map_or("-".into(), |v| v.to_string()),
            r.upper_bound.map_or("-".into(), |v| v.to_string()),
            if r.holds() { "ok" } else { "VIOLATED" }
        );
    }
    write_report_csv(&rows, &out)?;
    println!("{} rows written to {}", rows.len(), out.display());
    Ok(())
}
