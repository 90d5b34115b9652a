//! The clique search on its own: any relation over any vertex type.
//! Here, the Paley graph on 61 vertices, and a symmetric digraph relation.

use zecap::search::{max_clique, maximum_clique, AdjacencyOracle, BitGraph, KernelOptions, SearchConfig};

fn main() -> zecap::Result<()> {
    let p = 61u64;
    let squares: Vec<u64> = (1..p).map(|x| x * x % p).collect();
    let paley = AdjacencyOracle::undirected((0..p).collect(), |a: &u64, b: &u64| {
        squares.contains(&((a + p - b) % p))
    });
    let r = max_clique(&paley, &SearchConfig::default())?;
    println!(
        "Paley({p}): clique {} {:?} ({} nodes)",
        r.size, r.witness, r.nodes_explored
    );

    // arcs u -> v when v - u mod 13 is in {1, 3, 4, 9, 10, 12}
    let arcs = [1u64, 3, 4, 9, 10, 12];
    let circulant = AdjacencyOracle::symmetric((0..13u64).collect(), |a: &u64, b: &u64| {
        arcs.contains(&((b + 13 - a) % 13))
    });
    let r = max_clique(&circulant, &SearchConfig::default())?;
    println!("circulant(13): symmetric clique {} {:?}", r.size, r.witness);

    // raw kernel on bit rows, four workers
    let mut g = BitGraph::new(200);
    let mut state = 7u64;
    for u in 0..200 {
        for v in u + 1..200 {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            if state >> 33 & 0xff < 230 {
                g.add_edge(u, v);
            }
        }
    }
    let out = maximum_clique(
        &g,
        KernelOptions {
            threads: 4,
            lexicographic_witness: false,
        },
    );
    println!(
        "random G(200, 0.9): clique {} after {} nodes",
        out.clique.len(),
        out.nodes
    );
    Ok(())
}
