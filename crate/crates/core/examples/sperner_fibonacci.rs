//! Sperner capacity of the single arc `0 -> 1` within Fibonacci walks:
//! symmetric cliques are antichains of 11-free words.

use zecap::capacity::{solve_characteristic, CharacteristicEquation, DEFAULT_TOL};
use zecap::model::Digraph;
use zecap::search::{omega_s, render_walk, SearchConfig};

fn main() -> zecap::Result<()> {
    let arc = Digraph::from_arcs(2, &[(0, 1)])?;
    let fib = Digraph::fibonacci();
    let golden = solve_characteristic(&CharacteristicEquation::golden(), DEFAULT_TOL)?.rate_bits;
    let cfg = SearchConfig::default();
    for n in 1..=12 {
        let r = omega_s(&arc, &fib, n, &cfg)?;
        println!(
            "n={n:<2} omega_s={:<4} rate={:.4} (golden {golden:.4})",
            r.size,
            (r.size as f64).log2() / n as f64
        );
    }
    let r = omega_s(&arc, &fib, 5, &cfg)?;
    println!(
        "antichain at n=5: {}",
        r.witness.iter().map(render_walk).collect::<Vec<_>>().join(" ")
    );
    Ok(())
}
