//! Exact `M(G, n)` for the four named three-edge channels and the two
//! single-edge ones, with an optimal code for one case.
//!
//! ```text
//! cargo run --release --example exact_codes -- 11
//! ZECAP_THREADS=4 cargo run --release --example exact_codes
//! ```

use zecap::model::{parse_channel_spec, ChannelGraph};
use zecap::search::{exact_m, SearchConfig};

fn main() -> zecap::Result<()> {
    let max_n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(10);
    let cfg = SearchConfig::from_env()?;
    let channels = [
        ("F", ChannelGraph::alias("F").unwrap()),
        ("G", ChannelGraph::alias("G").unwrap()),
        ("L", ChannelGraph::alias("L").unwrap()),
        ("Q", ChannelGraph::alias("Q").unwrap()),
        ("00-11", parse_channel_spec("00-11")?),
        ("00-01", parse_channel_spec("00-01")?),
    ];

    print!("{:>3}", "n");
    for (name, _) in &channels {
        print!(" {name:>8}");
    }
    println!();
    for n in 1..=max_n {
        print!("{n:>3}");
        for (_, g) in &channels {
            print!(" {:>8}", exact_m(g, n, &cfg)?.size);
        }
        println!();
    }

    let g = &channels[0].1;
    let best = exact_m(g, 6, &SearchConfig::default())?;
    println!(
        "\nan optimal code for {} ({}) at n=6, size {}:",
        channels[0].0,
        g.to_spec(),
        best.size
    );
    for w in &best.witness {
        println!("  {w}");
    }
    Ok(())
}
