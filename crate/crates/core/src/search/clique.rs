//! Exact maximum clique on packed bit graphs.
//!
//! The pipeline is:
//!
//! 1. Dominance reduction. A vertex `x` is dropped when some smaller,
//!    non-adjacent vertex `z` has `N(x) ⊆ N(z)`: swapping `x` for `z` in any
//!    clique keeps it a clique and makes its sorted vertex list
//!    lexicographically smaller.
//! 2. Split along connected components of the complement. Vertices in
//!    different components are pairwise adjacent, so the maximum clique is
//!    the union of per-component maxima.
//! 3. Per component, branch and bound with greedy-coloring bounds over
//!    packed rows (vertices re-ordered by non-increasing degree), seeded
//!    with a greedy clique. With several workers the root branches are
//!    shared and the incumbent size lives in an atomic.
//! 4. In deterministic mode, a second depth-first pass in vertex-index order
//!    with the known target size returns the lexicographically smallest
//!    maximum clique of the component.
//!
//! Steps 1, 2 and 4 preserve the lexicographically smallest maximum clique,
//! so deterministic mode reports it for the whole graph.

use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;

use super::bitset::{BitGraph, BitSet};

/// Result of a kernel run: a maximum clique (sorted vertex ids) and the
/// number of search nodes visited.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueOutcome {
    pub clique: Vec<usize>,
    pub nodes: u64,
}

#[derive(Clone, Copy, Debug)]
pub struct KernelOptions {
    pub threads: usize,
    /// Return the lexicographically smallest maximum clique.
    pub lexicographic_witness: bool,
}

impl Default for KernelOptions {
    fn default() -> Self {
        KernelOptions {
            threads: 1,
            lexicographic_witness: true,
        }
    }
}

pub fn maximum_clique(g: &BitGraph, opts: KernelOptions) -> CliqueOutcome {
    if g.is_empty() {
        return CliqueOutcome {
            clique: Vec::new(),
            nodes: 0,
        };
    }
    let alive = reduce_dominated(g);
    let mut clique = Vec::new();
    let mut nodes = 0;
    for component in complement_components(g, &alive) {
        if component.len() == 1 {
            clique.push(component[0]);
            continue;
        }
        let sub = g.induced(&component);
        let out = solve_component(&sub, opts);
        nodes += out.nodes;
        clique.extend(out.clique.iter().map(|&i| component[i]));
    }
    clique.sort_unstable();
    debug_assert!(g.is_clique(&clique));
    CliqueOutcome { clique, nodes }
}

/// Vertices surviving repeated dominance elimination.
fn reduce_dominated(g: &BitGraph) -> BitSet {
    let n = g.len();
    let mut alive = BitSet::full(n);
    loop {
        let mut changed = false;
        for x in 0..n {
            if !alive.contains(x) {
                continue;
            }
            let mut nx = alive.intersection(g.row(x));
            nx.remove(x);
            // smaller, alive, non-adjacent candidates
            let dominated = (0..x).any(|z| alive.contains(z) && !g.has_edge(x, z) && nx.is_subset_of(g.row(z)));
            if dominated {
                alive.remove(x);
                changed = true;
            }
        }
        if !changed {
            return alive;
        }
    }
}

/// Connected components of the complement restricted to `alive`, each
/// sorted, ordered by smallest member.
fn complement_components(g: &BitGraph, alive: &BitSet) -> Vec<Vec<usize>> {
    let mut unvisited = alive.clone();
    let mut components = Vec::new();
    while let Some(start) = unvisited.first() {
        unvisited.remove(start);
        let mut component = vec![start];
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            let mut fresh = unvisited.clone();
            fresh.difference_with(g.row(u));
            for v in fresh.iter() {
                unvisited.remove(v);
                component.push(v);
                stack.push(v);
            }
        }
        component.sort_unstable();
        components.push(component);
    }
    components
}

fn solve_component(g: &BitGraph, opts: KernelOptions) -> CliqueOutcome {
    let n = g.len();
    // Non-increasing degree order; ties by index.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let sorted = g.induced(&order);

    let seed = greedy_clique(&sorted);
    let search = Bnb {
        g: &sorted,
        best: AtomicUsize::new(seed.len()),
        witness: Mutex::new(seed),
        nodes: AtomicU64::new(0),
    };
    search.run(opts.threads.max(1));
    let mut nodes = search.nodes.load(Ordering::Relaxed);
    let size = search.best.load(Ordering::Relaxed);
    let mut clique: Vec<usize> = search
        .witness
        .into_inner()
        .expect("poisoned")
        .into_iter()
        .map(|i| order[i])
        .collect();
    clique.sort_unstable();
    debug_assert_eq!(clique.len(), size);

    if opts.lexicographic_witness {
        let mut lex = LexFirst {
            g,
            target: size,
            nodes: 0,
        };
        let mut current = Vec::with_capacity(size);
        let found = lex.dfs(&mut current, BitSet::full(n));
        assert!(found, "a clique of size {size} exists");
        nodes += lex.nodes;
        clique = current;
    }
    CliqueOutcome { clique, nodes }
}

/// Greedy clique: repeatedly take the first remaining candidate.
fn greedy_clique(g: &BitGraph) -> Vec<usize> {
    let mut clique = Vec::new();
    let mut candidates = BitSet::full(g.len());
    while let Some(v) = candidates.first() {
        clique.push(v);
        candidates.intersect_with(g.row(v));
    }
    clique
}

/// Greedy sequential coloring of `p`. Returns the vertices whose color is
/// at least `min_color`, in coloring order, with their colors (1-based,
/// non-decreasing).
fn color_classes(g: &BitGraph, p: &BitSet, min_color: usize) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::new();
    let mut colors = Vec::new();
    let mut uncolored = p.clone();
    let mut color = 0;
    while !uncolored.is_empty() {
        color += 1;
        let mut q = uncolored.clone();
        while let Some(v) = q.first() {
            uncolored.remove(v);
            q.remove(v);
            q.difference_with(g.row(v));
            if color >= min_color {
                order.push(v);
                colors.push(color);
            }
        }
    }
    (order, colors)
}

fn color_count(g: &BitGraph, p: &BitSet) -> usize {
    let mut uncolored = p.clone();
    let mut color = 0;
    while !uncolored.is_empty() {
        color += 1;
        let mut q = uncolored.clone();
        while let Some(v) = q.first() {
            uncolored.remove(v);
            q.remove(v);
            q.difference_with(g.row(v));
        }
    }
    color
}

struct Bnb<'a> {
    g: &'a BitGraph,
    best: AtomicUsize,
    witness: Mutex<Vec<usize>>,
    nodes: AtomicU64,
}

impl Bnb<'_> {
    fn run(&self, threads: usize) {
        let p = BitSet::full(self.g.len());
        let best = self.best.load(Ordering::Relaxed);
        let (order, colors) = color_classes(self.g, &p, best + 1);
        self.nodes.fetch_add(1, Ordering::Relaxed);
        if threads <= 1 {
            let mut clique = Vec::new();
            let mut nodes = 0;
            self.branch(&mut clique, p, &order, &colors, &mut nodes);
            self.nodes.fetch_add(nodes, Ordering::Relaxed);
            return;
        }
        // Root branch i works on P minus the vertices of later branches.
        let next = AtomicUsize::new(order.len());
        std::thread::scope(|scope| {
            for _ in 0..threads {
                scope.spawn(|| {
                    let mut nodes = 0;
                    loop {
                        let i = match next.fetch_update(Ordering::Relaxed, Ordering::Relaxed, |i| i.checked_sub(1)) {
                            Ok(i) => i - 1,
                            Err(_) => break,
                        };
                        if colors[i] <= self.best.load(Ordering::Relaxed) {
                            continue;
                        }
                        let mut p_i = p.clone();
                        for &w in &order[i + 1..] {
                            p_i.remove(w);
                        }
                        let v = order[i];
                        let mut clique = vec![v];
                        let child = p_i.intersection(self.g.row(v));
                        self.expand(&mut clique, child, &mut nodes);
                    }
                    self.nodes.fetch_add(nodes, Ordering::Relaxed);
                });
            }
        });
    }

    fn expand(&self, clique: &mut Vec<usize>, p: BitSet, nodes: &mut u64) {
        *nodes += 1;
        if p.is_empty() {
            self.offer(clique);
            return;
        }
        let best = self.best.load(Ordering::Relaxed);
        let min_color = (best + 1).saturating_sub(clique.len());
        let (order, colors) = color_classes(self.g, &p, min_color);
        self.branch(clique, p, &order, &colors, nodes);
    }

    fn branch(&self, clique: &mut Vec<usize>, mut p: BitSet, order: &[usize], colors: &[usize], nodes: &mut u64) {
        for i in (0..order.len()).rev() {
            if clique.len() + colors[i] <= self.best.load(Ordering::Relaxed) {
                return;
            }
            let v = order[i];
            clique.push(v);
            let child = p.intersection(self.g.row(v));
            self.expand(clique, child, nodes);
            clique.pop();
            p.remove(v);
        }
    }

    fn offer(&self, clique: &[usize]) {
        if clique.len() <= self.best.load(Ordering::Relaxed) {
            return;
        }
        let mut witness = self.witness.lock().expect("poisoned");
        if clique.len() > witness.len() {
            *witness = clique.to_vec();
            self.best.fetch_max(clique.len(), Ordering::Relaxed);
        }
    }
}

/// Depth-first search in increasing vertex order for the first clique of
/// exactly `target` vertices; the first hit is the lexicographically
/// smallest.
struct LexFirst<'a> {
    g: &'a BitGraph,
    target: usize,
    nodes: u64,
}

impl LexFirst<'_> {
    fn dfs(&mut self, clique: &mut Vec<usize>, mut p: BitSet) -> bool {
        self.nodes += 1;
        if clique.len() == self.target {
            return true;
        }
        let mut remaining = p.count();
        if clique.len() + remaining < self.target || clique.len() + color_count(self.g, &p) < self.target {
            return false;
        }
        while let Some(v) = p.first() {
            if clique.len() + remaining < self.target {
                return false;
            }
            p.remove(v);
            remaining -= 1;
            clique.push(v);
            if self.dfs(clique, p.intersection(self.g.row(v))) {
                return true;
            }
            clique.pop();
        }
        false
    }
}
