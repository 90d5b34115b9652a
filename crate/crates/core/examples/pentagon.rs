//! The symmetric pentagon inside loopless walks on five letters.
//! Small n only; no upper bound is claimed.

use zecap::model::Digraph;
use zecap::search::{omega_s, render_walk, SearchConfig};

fn main() -> zecap::Result<()> {
    let c5 = Digraph::symmetric_cycle(5);
    let k5 = Digraph::complete_loopless(5);
    for n in 1..=3 {
        let r = omega_s(&c5, &k5, n, &SearchConfig::from_env()?)?;
        let rate = (r.size as f64).log2() / n as f64;
        println!(
            "n={n} size={} rate={rate:.4} nodes={} elapsed={:?}",
            r.size, r.nodes_explored, r.elapsed
        );
        println!("  {}", r.witness.iter().map(render_walk).collect::<Vec<_>>().join(" "));
    }
    Ok(())
}
