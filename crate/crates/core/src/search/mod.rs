//! Exact combinatorial oracles: the maximum code `M(G, n)`, cliques of
//! graph powers restricted to the walks of a digraph, and symmetric cliques
//! of digraph powers.
//!
//! Every search goes through one kernel ([`clique::maximum_clique`]) over
//! packed adjacency rows. With one worker the search is deterministic and
//! returns the lexicographically smallest maximum witness; with several
//! workers (set by `ZECAP_THREADS`) only the size is guaranteed.

pub mod bitset;
pub mod clique;

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{
    count_walks, enumerate_walks, masks_distinguishable, ChannelGraph, Code, Digraph, PairLetter, Walk, Word,
};

pub use bitset::{BitGraph, BitSet};
pub use clique::{maximum_clique, CliqueOutcome, KernelOptions};

/// Environment variable selecting the worker count.
pub const THREADS_ENV: &str = "ZECAP_THREADS";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub threads: usize,
    /// Largest vertex universe for generic clique searches.
    pub vertex_cap: usize,
    /// Largest block length accepted by [`exact_m`].
    pub length_cap: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            threads: 1,
            vertex_cap: 1 << 20,
            length_cap: 14,
        }
    }
}

impl SearchConfig {
    /// Defaults, with the worker count taken from `ZECAP_THREADS` if set.
    pub fn from_env() -> Result<Self> {
        let mut cfg = Self::default();
        if let Ok(value) = std::env::var(THREADS_ENV) {
            cfg.threads = parse_threads(&value)?;
        }
        Ok(cfg)
    }

    pub fn deterministic(&self) -> bool {
        self.threads <= 1
    }

    fn kernel(&self) -> KernelOptions {
        KernelOptions {
            threads: self.threads.max(1),
            lexicographic_witness: self.deterministic(),
        }
    }
}

pub(crate) fn parse_threads(value: &str) -> Result<usize> {
    match value.trim().parse::<usize>() {
        Ok(t) if t >= 1 => Ok(t),
        _ => Err(Error::InvalidArgument(format!(
            "{THREADS_ENV} must be a positive integer, got {value:?}"
        ))),
    }
}

/// Outcome of an exact search.
#[derive(Clone, Debug, PartialEq)]
pub struct SearchResult<V> {
    pub size: usize,
    /// Members of a maximum solution, sorted.
    pub witness: Vec<V>,
    pub nodes_explored: u64,
    pub elapsed: Duration,
    pub deterministic: bool,
}

impl<V> SearchResult<V> {
    /// Serializable summary; `render` formats witness members.
    pub fn to_record(&self, problem: &str, n: usize, render: impl Fn(&V) -> String) -> SearchRecord {
        SearchRecord {
            problem: problem.to_string(),
            n,
            size: self.size,
            witness: self.witness.iter().map(render).collect(),
            nodes_explored: self.nodes_explored,
            elapsed_ms: self.elapsed.as_millis() as u64,
            deterministic: self.deterministic,
        }
    }
}

/// Serialized form of a [`SearchResult`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchRecord {
    pub problem: String,
    pub n: usize,
    pub size: usize,
    pub witness: Vec<String>,
    pub nodes_explored: u64,
    pub elapsed_ms: u64,
    pub deterministic: bool,
}

/// A finite vertex universe with an adjacency predicate.
///
/// For an undirected relation the predicate is evaluated once per
/// unordered pair. For symmetric cliques of a directed relation it is
/// evaluated in both directions and two vertices are adjacent only when
/// both arcs are present.
pub struct AdjacencyOracle<'a, V> {
    vertices: Vec<V>,
    predicate: Box<dyn Fn(&V, &V) -> bool + 'a>,
    both_directions: bool,
}

impl<'a, V> AdjacencyOracle<'a, V> {
    pub fn undirected(vertices: Vec<V>, predicate: impl Fn(&V, &V) -> bool + 'a) -> Self {
        AdjacencyOracle {
            vertices,
            predicate: Box::new(predicate),
            both_directions: false,
        }
    }

    pub fn symmetric(vertices: Vec<V>, arc: impl Fn(&V, &V) -> bool + 'a) -> Self {
        AdjacencyOracle {
            vertices,
            predicate: Box::new(arc),
            both_directions: true,
        }
    }

    pub fn vertices(&self) -> &[V] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn adjacent(&self, u: &V, v: &V) -> bool {
        if self.both_directions {
            (self.predicate)(u, v) && (self.predicate)(v, u)
        } else {
            (self.predicate)(u, v)
        }
    }

    /// Packs the relation into bit rows.
    pub fn to_bit_graph(&self) -> BitGraph {
        let n = self.vertices.len();
        if !self.both_directions {
            return BitGraph::from_predicate(n, |u, v| (self.predicate)(&self.vertices[u], &self.vertices[v]));
        }
        // forward[u] holds v with u -> v; the transpose gives the backward
        // matrix, and their intersection the symmetric relation.
        let mut forward = vec![BitSet::new(n); n];
        let mut backward = vec![BitSet::new(n); n];
        for u in 0..n {
            for v in 0..n {
                if u != v && (self.predicate)(&self.vertices[u], &self.vertices[v]) {
                    forward[u].insert(v);
                    backward[v].insert(u);
                }
            }
        }
        let mut g = BitGraph::new(n);
        for u in 0..n {
            let both = forward[u].intersection(backward[u].words());
            for v in both.iter().filter(|&v| v > u) {
                g.add_edge(u, v);
            }
        }
        g
    }
}

/// Exact maximum clique of the relation described by `oracle`.
pub fn max_clique<V: Clone>(oracle: &AdjacencyOracle<'_, V>, cfg: &SearchConfig) -> Result<SearchResult<V>> {
    check_cap("clique universe", oracle.len() as u128, cfg.vertex_cap)?;
    let start = Instant::now();
    let g = oracle.to_bit_graph();
    Ok(run_kernel(&g, oracle.vertices(), cfg, start))
}

fn run_kernel<V: Clone>(g: &BitGraph, vertices: &[V], cfg: &SearchConfig, start: Instant) -> SearchResult<V> {
    let out = maximum_clique(g, cfg.kernel());
    SearchResult {
        size: out.clique.len(),
        witness: out.clique.iter().map(|&i| vertices[i].clone()).collect(),
        nodes_explored: out.nodes,
        elapsed: start.elapsed(),
        deterministic: cfg.deterministic(),
    }
}

fn check_cap(what: &str, needed: u128, cap: usize) -> Result<()> {
    if needed > cap as u128 {
        return Err(Error::CapExceeded {
            what: what.to_string(),
            needed,
            cap: cap as u128,
        });
    }
    Ok(())
}

/// Distinguishability graph on all words of length `n`, vertex `i` being
/// the word with value `i`.
pub fn distinguishability_graph(g: &ChannelGraph, n: usize) -> BitGraph {
    let masks: Vec<[u64; 4]> = Word::all(n).map(|w| w.pair_masks()).collect();
    BitGraph::from_predicate(masks.len(), |u, v| masks_distinguishable(&masks[u], &masks[v], g))
}

/// `M(G, n)`: the largest set of length-`n` words that are pairwise
/// distinguishable for `g`, with a witness code.
pub fn exact_m(g: &ChannelGraph, n: usize, cfg: &SearchConfig) -> Result<SearchResult<Word>> {
    if n == 0 {
        return Err(Error::InvalidArgument("block length must be >= 1".into()));
    }
    check_cap("block length", n as u128, cfg.length_cap)?;
    check_cap("clique universe", 1u128 << n, cfg.vertex_cap)?;
    let start = Instant::now();
    let graph = distinguishability_graph(g, n);
    let words: Vec<Word> = Word::all(n).collect();
    Ok(run_kernel(&graph, &words, cfg, start))
}

/// Witness of an [`exact_m`] result as a [`Code`].
pub fn witness_code(result: &SearchResult<Word>, n: usize, provenance: &str) -> Code {
    Code::new(n, result.witness.iter().copied(), provenance).expect("witness words share the block length")
}

/// Clique number of the graph that the `m`-th power of `g` induces on the
/// walks of `p` with `m` vertices: two walks are adjacent when some
/// coordinate carries an edge of `g`. `p` must live on the four pair
/// letters.
pub fn omega_power_markov(g: &ChannelGraph, p: &Digraph, m: usize, cfg: &SearchConfig) -> Result<SearchResult<Walk>> {
    if p.k() != 4 {
        return Err(Error::InvalidArgument(format!(
            "type digraph must live on the 4 pair letters, has {} vertices",
            p.k()
        )));
    }
    check_cap("walk universe", count_walks(p, m), cfg.vertex_cap)?;
    let walks = enumerate_walks(p, m, cfg.vertex_cap)?;
    let oracle = AdjacencyOracle::undirected(walks, |u: &Walk, v: &Walk| {
        u.iter()
            .zip(v)
            .any(|(&a, &b)| a != b && g.has_edge(PairLetter::from_index(a), PairLetter::from_index(b)))
    });
    max_clique(&oracle, cfg)
}

/// Largest symmetric clique that the `n`-th power of the digraph `d`
/// induces on the walks of `p`: every ordered pair of distinct members
/// `(u, v)` needs a coordinate with `u_i -> v_i` in `d`. Loop arcs of `d`
/// never count.
pub fn omega_s(d: &Digraph, p: &Digraph, n: usize, cfg: &SearchConfig) -> Result<SearchResult<Walk>> {
    if d.k() != p.k() {
        return Err(Error::InvalidArgument(format!(
            "vertex counts differ: channel digraph has {}, type has {}",
            d.k(),
            p.k()
        )));
    }
    check_cap("walk universe", count_walks(p, n), cfg.vertex_cap)?;
    let walks = enumerate_walks(p, n, cfg.vertex_cap)?;
    let oracle = AdjacencyOracle::symmetric(walks, |u: &Walk, v: &Walk| {
        u.iter().zip(v).any(|(&a, &b)| a != b && d.has_arc(a, b))
    });
    max_clique(&oracle, cfg)
}

/// Scan order for [`greedy_code`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum WordOrder {
    Lexicographic,
    ReverseLexicographic,
    /// Increasing Hamming weight, lexicographic within a weight.
    ByWeight,
}

/// A maximal (not necessarily maximum) code: scan the words in `order` and
/// keep each one distinguishable from everything kept so far.
pub fn greedy_code(g: &ChannelGraph, n: usize, order: WordOrder, cfg: &SearchConfig) -> Result<Code> {
    if n == 0 {
        return Err(Error::InvalidArgument("block length must be >= 1".into()));
    }
    check_cap("clique universe", 1u128 << n.min(127), cfg.vertex_cap)?;
    let mut words: Vec<Word> = Word::all(n).collect();
    match order {
        WordOrder::Lexicographic => {}
        WordOrder::ReverseLexicographic => words.reverse(),
        WordOrder::ByWeight => words.sort_by_key(|w| (w.value().count_ones(), w.value())),
    }
    let mut kept: Vec<(Word, [u64; 4])> = Vec::new();
    for w in words {
        let masks = w.pair_masks();
        if kept.iter().all(|(_, m)| masks_distinguishable(m, &masks, g)) {
            kept.push((w, masks));
        }
    }
    Code::new(n, kept.into_iter().map(|(w, _)| w), format!("greedy {order:?}"))
}

/// Renders a walk as its vertex labels; single digits are concatenated,
/// larger labels are comma-separated.
pub fn render_walk(walk: &Walk) -> String {
    if walk.iter().all(|&v| v < 10) {
        walk.iter().map(|v| v.to_string()).collect()
    } else {
        walk.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
    }
}

/// Renders a walk on pair letters as dot-separated letters.
pub fn render_pair_walk(walk: &Walk) -> String {
    walk.iter()
        .map(|&v| PairLetter::from_index(v).to_string())
        .collect::<Vec<_>>()
        .join(".")
}

#[cfg(test)]
mod tests {
    use super::clique::tests::naive_clique_number;
    use super::*;
    use crate::model::{distinguishable, parse_channel_spec};

    fn cfg() -> SearchConfig {
        SearchConfig::default()
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    /// Largest pairwise-distinguishable subset by enumerating every subset.
    fn subset_m(g: &ChannelGraph, n: usize) -> (usize, Vec<Word>) {
        let words: Vec<Word> = Word::all(n).collect();
        let mut best: (usize, Vec<Word>) = (0, vec![]);
        for mask in 1u32..1 << words.len() {
            let set: Vec<Word> = words
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &w)| w)
                .collect();
            let ok = set
                .iter()
                .enumerate()
                .all(|(i, x)| set[i + 1..].iter().all(|y| distinguishable(x, y, g).unwrap()));
            if ok && (set.len() > best.0 || (set.len() == best.0 && set < best.1)) {
                best = (set.len(), set);
            }
        }
        best
    }

    #[test]
    fn max_clique_examples() {
        let tri = AdjacencyOracle::undirected(vec![0, 1, 2], |_, _| true);
        assert_eq!(max_clique(&tri, &cfg()).unwrap().size, 3);
        let empty = AdjacencyOracle::undirected((0..6).collect(), |_, _| false);
        assert_eq!(max_clique(&empty, &cfg()).unwrap().size, 1);
        let c5 = AdjacencyOracle::undirected((0..5).collect::<Vec<usize>>(), |a, b| {
            (a + 1) % 5 == *b || (b + 1) % 5 == *a
        });
        assert_eq!(max_clique(&c5, &cfg()).unwrap().size, 2);
    }

    #[test]
    fn max_clique_cap() {
        let big = AdjacencyOracle::undirected((0..10).collect::<Vec<usize>>(), |_, _| true);
        let small = SearchConfig { vertex_cap: 5, ..cfg() };
        assert!(matches!(max_clique(&big, &small), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn exact_m_examples() {
        for g in ChannelGraph::all_graphs() {
            assert_eq!(exact_m(&g, 1, &cfg()).unwrap().size, 1);
        }
        let f = ChannelGraph::alias("F").unwrap();
        let r = exact_m(&f, 2, &cfg()).unwrap();
        assert_eq!(r.size, 3);
        assert_eq!(r.witness, vec![w("00"), w("01"), w("10")]);
        let single = parse_channel_spec("00-11").unwrap();
        let r = exact_m(&single, 2, &cfg()).unwrap();
        assert_eq!(r.size, 2);
        assert_eq!(r.witness, vec![w("00"), w("11")]);
    }

    #[test]
    fn exact_m_matches_subset_oracle_for_every_graph() {
        for g in ChannelGraph::all_graphs() {
            for n in 1..=3 {
                let (size, witness) = subset_m(&g, n);
                let r = exact_m(&g, n, &cfg()).unwrap();
                assert_eq!(r.size, size, "{g} n={n}");
                assert_eq!(r.witness, witness, "{g} n={n}");
            }
        }
    }

    #[test]
    fn exact_m_matches_naive_search_n4_to_n6() {
        for g in ChannelGraph::all_graphs() {
            for n in 4..=6 {
                let naive = naive_clique_number(&distinguishability_graph(&g, n));
                assert_eq!(exact_m(&g, n, &cfg()).unwrap().size, naive, "{g} n={n}");
            }
        }
    }

    #[test]
    fn exact_m_length_cap() {
        let f = ChannelGraph::alias("F").unwrap();
        assert!(matches!(exact_m(&f, 15, &cfg()), Err(Error::CapExceeded { .. })));
        assert!(exact_m(&f, 0, &cfg()).is_err());
    }

    #[test]
    fn embedding_small() {
        let f = ChannelGraph::alias("F").unwrap();
        let p = Digraph::pair_shift();
        assert_eq!(omega_power_markov(&f, &p, 1, &cfg()).unwrap().size, 3);
        assert_eq!(
            omega_power_markov(&f, &p, 3, &cfg()).unwrap().size,
            exact_m(&f, 4, &cfg()).unwrap().size
        );
        let edgeless = ChannelGraph::edgeless();
        for m in 1..=4 {
            assert_eq!(omega_power_markov(&edgeless, &p, m, &cfg()).unwrap().size, 1);
            assert_eq!(
                omega_power_markov(&edgeless, &Digraph::full_shift(4), m, &cfg())
                    .unwrap()
                    .size,
                1
            );
        }
        assert!(omega_power_markov(&f, &Digraph::fibonacci(), 2, &cfg()).is_err());
    }

    #[test]
    fn omega_s_examples() {
        let arc = Digraph::from_arcs(2, &[(0, 1)]).unwrap();
        let fib = Digraph::fibonacci();
        let r = omega_s(&arc, &fib, 2, &cfg()).unwrap();
        assert_eq!(r.size, 2);
        assert_eq!(r.witness, vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(omega_s(&arc, &fib, 1, &cfg()).unwrap().size, 1);
        let c5 = Digraph::symmetric_cycle(5);
        let k5 = Digraph::complete_loopless(5);
        assert_eq!(omega_s(&c5, &k5, 1, &cfg()).unwrap().size, 2);
        assert!(omega_s(&c5, &fib, 1, &cfg()).is_err());
    }

    #[test]
    fn omega_s_ignores_loops() {
        let looped = Digraph::from_arcs(2, &[(0, 0), (1, 1)]).unwrap();
        assert_eq!(omega_s(&looped, &Digraph::full_shift(2), 3, &cfg()).unwrap().size, 1);
    }

    #[test]
    fn greedy_examples() {
        let f = ChannelGraph::alias("F").unwrap();
        let code = greedy_code(&f, 2, WordOrder::Lexicographic, &cfg()).unwrap();
        assert_eq!(code.words(), &[w("00"), w("01"), w("10")]);
        for order in [
            WordOrder::Lexicographic,
            WordOrder::ReverseLexicographic,
            WordOrder::ByWeight,
        ] {
            assert_eq!(
                greedy_code(&ChannelGraph::edgeless(), 3, order, &cfg()).unwrap().len(),
                1
            );
            let g5 = greedy_code(&f, 5, order, &cfg()).unwrap();
            assert!(g5.len() <= exact_m(&f, 5, &cfg()).unwrap().size);
        }
    }

    #[test]
    fn parallel_sizes_match() {
        let parallel = SearchConfig { threads: 3, ..cfg() };
        for name in ["F", "G", "L", "Q"] {
            let g = ChannelGraph::alias(name).unwrap();
            for n in 2..=8 {
                let a = exact_m(&g, n, &cfg()).unwrap();
                let b = exact_m(&g, n, &parallel).unwrap();
                assert_eq!(a.size, b.size, "{name} n={n}");
                assert!(!b.deterministic);
            }
        }
    }

    #[test]
    fn threads_env_parsing() {
        assert_eq!(parse_threads("4").unwrap(), 4);
        assert!(parse_threads("0").is_err());
        assert!(parse_threads("x").is_err());
    }

    #[test]
    fn record_shape() {
        let f = ChannelGraph::alias("F").unwrap();
        let r = exact_m(&f, 2, &cfg()).unwrap();
        let rec = r.to_record("exact_M", 2, |w| w.to_string());
        assert_eq!(rec.witness, ["00", "01", "10"]);
        let json = serde_json::to_value(&rec).unwrap();
        for key in [
            "problem",
            "n",
            "size",
            "witness",
            "nodes_explored",
            "elapsed_ms",
            "deterministic",
        ] {
            assert!(json.get(key).is_some(), "{key}");
        }
    }
}
