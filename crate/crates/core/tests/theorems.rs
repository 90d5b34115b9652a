use std::collections::BTreeSet;

use zecap::construct::{
    largest_block_class, ministring_code, no_isolated_ones_set, no_run3_set, normalize_no111, odd_run_code,
    shorten_even_runs, sliding_g_map, verify_code, Family, MinistringSet, PairFunction,
};
use zecap::model::{distinguishable, ChannelGraph, Code, Word};
use zecap::search::{exact_m, SearchConfig};

fn alias(name: &str) -> ChannelGraph {
    ChannelGraph::alias(name).unwrap()
}

fn optimal(name: &str, n: usize) -> Vec<Word> {
    exact_m(&alias(name), n, &SearchConfig::default()).unwrap().witness
}

fn pairwise(words: &[Word], g: &ChannelGraph) -> bool {
    words
        .iter()
        .enumerate()
        .all(|(i, x)| words[i + 1..].iter().all(|y| distinguishable(x, y, g).unwrap()))
}

fn injective(words: &[Word], f: impl Fn(&Word) -> Word) -> bool {
    words.iter().map(f).collect::<BTreeSet<_>>().len() == words.len()
}

#[test]
fn constructions_are_codes() {
    let tribonacci = MinistringSet::tribonacci();
    let block: Word = "011".parse().unwrap();
    for n in 2..=14 {
        let class = largest_block_class(&ministring_code(&tribonacci, n).unwrap(), &tribonacci, &block).unwrap();
        assert!(verify_code(&class, &alias("F")).pass, "class n={n}");
        if n <= 10 {
            assert!(pairwise(class.words(), &alias("F")));
        }
        let odd = odd_run_code(n, true).unwrap();
        assert!(verify_code(&odd, &alias("G")).pass, "oddrun n={n}");
    }
}

#[test]
fn shortening_injective_on_optimal_codes() {
    for n in 1..=12 {
        let code = optimal("G", n);
        assert!(injective(&code, shorten_even_runs), "n={n}");
    }
}

#[test]
fn sliding_maps_injective_on_optimal_codes() {
    for n in 1..=12 {
        let l: Vec<Word> = optimal("L", n).into_iter().filter(|w| w.bit(0) == 0).collect();
        assert!(injective(&l, |x| sliding_g_map(x, &PairFunction::star_00())), "L n={n}");
        let q = optimal("Q", n);
        assert!(injective(&q, |x| sliding_g_map(x, &PairFunction::star_01())), "Q n={n}");
    }
}

#[test]
fn sliding_g_l_separates_exactly_distinguishable_pairs() {
    let l = alias("L");
    let g = PairFunction::star_00();
    for n in 2..=8 {
        let words: Vec<Word> = Word::all(n).filter(|w| w.bit(0) == 0).collect();
        for (i, x) in words.iter().enumerate() {
            for y in &words[i + 1..] {
                let apart = sliding_g_map(x, &g) != sliding_g_map(y, &g);
                assert_eq!(apart, distinguishable(x, y, &l).unwrap(), "{x} {y}");
            }
        }
    }
}

#[test]
fn sliding_g_l_range() {
    // words starting with 0 map onto D_n plus the words p1 with p in D_{n-1}
    // ending in 0, the last 1 being isolated
    let g = PairFunction::star_00();
    let one: Word = "1".parse().unwrap();
    for n in 2..=14 {
        let d: BTreeSet<Word> = no_isolated_ones_set(n).unwrap().words().iter().copied().collect();
        let mut expected = d.clone();
        for p in no_isolated_ones_set(n - 1).unwrap().words() {
            if p.bit(n - 2) == 0 {
                expected.insert(p.concat(&one).unwrap());
            }
        }
        let image: BTreeSet<Word> = Word::all(n)
            .filter(|w| w.bit(0) == 0)
            .map(|x| sliding_g_map(&x, &g))
            .collect();
        assert_eq!(image, expected, "n={n}");
        assert!(d.is_subset(&image));
    }
}

#[test]
fn star_00_bounds() {
    for n in 1..=11 {
        let d = no_isolated_ones_set(n).unwrap().len();
        let m = optimal("L", n).len();
        assert!(d <= m && m <= n * d, "n={n}: {d} {m}");
    }
}

#[test]
fn normalization_preserves_codes() {
    let f = alias("F");
    for n in 3..=10 {
        let code = optimal("F", n);
        let normalized: Vec<Word> = code.iter().map(normalize_no111).collect();
        assert!(normalized.iter().all(|w| !w.contains(&"111".parse().unwrap())));
        assert!(injective(&code, normalize_no111), "n={n}");
        assert!(pairwise(&normalized, &f), "n={n}");
    }
}

#[test]
fn no111_counts_and_stated_bound() {
    let a = Family::MinistringTribonacci.counts(20);
    for n in 3..=20 {
        let d = no_run3_set(n).unwrap().len() as u128;
        assert_eq!(d, a[n] + a[n - 1] + a[n - 2]);
        assert!(d <= 3 * a[n]);
    }
}

#[test]
fn code_files_round_trip_through_search() {
    let dir = std::env::temp_dir().join(format!("zecap-codes-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("g9.txt");
    let code = Code::new(9, optimal("G", 9), "exact G n=9").unwrap();
    code.write_word_file(&path).unwrap();
    let back = Code::read_word_file(&path).unwrap();
    assert_eq!(back.words(), code.words());
    assert!(verify_code(&back, &alias("G")).pass);
}

#[test]
fn pentagon_against_unrestricted_powers() {
    // over all words, symmetric cliques of the doubled pentagon are
    // independent sets of its strong powers: 2, 5, 10
    let c5 = zecap::model::Digraph::symmetric_cycle(5);
    let all = zecap::model::Digraph::full_shift(5);
    let walks = zecap::model::Digraph::complete_loopless(5);
    let cfg = SearchConfig::default();
    for (n, alpha) in [(1, 2), (2, 5), (3, 10)] {
        let free = zecap::search::omega_s(&c5, &all, n, &cfg).unwrap().size;
        let restricted = zecap::search::omega_s(&c5, &walks, n, &cfg).unwrap().size;
        assert_eq!(free, alpha);
        assert!(restricted <= free);
    }
}
