//! Rates of the ministring characteristic equations, the truncated odd-run
//! sequence, and Perron growth rates of a few walk types.
//!
//! ```text
//! cargo run --example capacity_constants
//! ```

use zecap::capacity::{beta_sequence, perron_growth, solve_characteristic, CharacteristicEquation, DEFAULT_TOL};
use zecap::model::Digraph;

fn main() -> zecap::Result<()> {
    let equations = [
        ("{2,2}", CharacteristicEquation::finite(&[2, 2])?),
        ("{1,2}", CharacteristicEquation::golden()),
        ("{1,2,3}", CharacteristicEquation::tribonacci()),
        ("{1} + 2,4,6,...", CharacteristicEquation::odd_runs()),
        ("{1} + 3,4,5,...", CharacteristicEquation::no_isolated_ones()),
    ];
    println!(
        "{:<18} {:>14} {:>12} {:>10} {:>5}",
        "lengths", "root", "rate (bits)", "residual", "iter"
    );
    for (name, eq) in &equations {
        let v = solve_characteristic(eq, DEFAULT_TOL)?;
        println!(
            "{name:<18} {:>14.12} {:>12.9} {:>10.1e} {:>5}",
            v.root, v.rate_bits, v.residual, v.iterations
        );
    }

    println!("\ntruncated odd runs {{1, 2, 4, ..., 2k}}:");
    for (k, v) in beta_sequence(12, DEFAULT_TOL)?.iter().enumerate() {
        println!("  k={k:<2} {:.9}", v.rate_bits);
    }

    println!("\nwalk growth:");
    for name in ["fibonacci", "pair-shift", "K5", "C5sym", "full3"] {
        let p = Digraph::alias(name).expect("known alias");
        let g = perron_growth(&p, DEFAULT_TOL)?;
        println!(
            "  {name:<10} rho={:.9} rate={:.9} ({:?}, {} steps)",
            g.spectral_radius, g.rate_bits, g.method, g.iterations
        );
    }
    Ok(())
}
