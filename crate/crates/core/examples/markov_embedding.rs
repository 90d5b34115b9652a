//! `M(F, n)` computed twice: over words, and over walks of length `n - 1`
//! in the pair-shift digraph on the four pair letters.

use zecap::model::{ChannelGraph, Digraph};
use zecap::search::{exact_m, omega_power_markov, render_pair_walk, SearchConfig};

fn main() -> zecap::Result<()> {
    let f = ChannelGraph::alias("F").unwrap();
    let shift = Digraph::pair_shift();
    let cfg = SearchConfig::default();
    for n in 2..=10 {
        let words = exact_m(&f, n, &cfg)?;
        let walks = omega_power_markov(&f, &shift, n - 1, &cfg)?;
        println!("n={n:<2} words {:>4}  walks {:>4}", words.size, walks.size);
        assert_eq!(words.size, walks.size);
    }
    let walks = omega_power_markov(&f, &shift, 2, &cfg)?;
    println!("optimal pair walks of length 2:");
    for w in &walks.witness {
        println!("  {}", render_pair_walk(w));
    }
    Ok(())
}
