//! Builds the lower-bound families and checks them against their channels.

use zecap::construct::{
    largest_block_class, ministring_code, odd_run_code, shorten_even_runs, sliding_g_map, verify_code, Family,
    MinistringSet, PairFunction,
};
use zecap::model::{ChannelGraph, Word};
use zecap::search::{exact_m, SearchConfig};

fn main() -> zecap::Result<()> {
    let f = ChannelGraph::alias("F").unwrap();
    let g = ChannelGraph::alias("G").unwrap();
    let cfg = SearchConfig::default();
    let tribonacci = MinistringSet::tribonacci();
    let block: Word = "011".parse()?;

    println!(
        "{:>3} {:>7} {:>6} {:>6} | {:>7} {:>6}",
        "n", "class", "M(F)", "no111", "oddrun", "M(G)"
    );
    for n in 3..=11 {
        let class = largest_block_class(&ministring_code(&tribonacci, n)?, &tribonacci, &block)?;
        let odd = odd_run_code(n, true)?;
        assert!(verify_code(&class, &f).pass && verify_code(&odd, &g).pass);
        println!(
            "{n:>3} {:>7} {:>6} {:>6} | {:>7} {:>6}",
            class.len(),
            exact_m(&f, n, &cfg)?.size,
            Family::No111.generate(n)?.len(),
            odd.len(),
            exact_m(&g, n, &cfg)?.size,
        );
    }

    // the maps used in the upper-bound arguments
    for x in ["0110", "011110", "0101"] {
        let x: Word = x.parse()?;
        println!("shorten_even_runs({x}) = {}", shorten_even_runs(&x));
    }
    for x in ["0010", "0011", "0110101"] {
        let x: Word = x.parse()?;
        println!(
            "{x}: g_L -> {}, g_Q -> {}",
            sliding_g_map(&x, &PairFunction::star_00()),
            sliding_g_map(&x, &PairFunction::star_01())
        );
    }
    Ok(())
}
