//! Explicit code families and the word maps used by the converse bounds.
//!
//! Families are enumerated by filtering all words of the requested length,
//! so enumeration is capped at [`ENUMERATION_CAP`] bits. Their sizes for
//! large `n` come from [`Family::counts`], which runs a small automaton
//! with 128-bit accumulators.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{distinguishable, ChannelGraph, Code, Word};

/// Longest block length for which families are materialized.
pub const ENUMERATION_CAP: usize = 26;

/// Failing pairs kept in a [`VerificationReport`].
pub const MAX_REPORTED_FAILURES: usize = 100;

fn check_length(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("block length must be >= 1".into()));
    }
    if n > ENUMERATION_CAP {
        return Err(Error::CapExceeded {
            what: "enumerated block length".into(),
            needed: n as u128,
            cap: ENUMERATION_CAP as u128,
        });
    }
    Ok(())
}

fn filtered(n: usize, provenance: &str, keep: impl Fn(&Word) -> bool) -> Result<Code> {
    check_length(n)?;
    Code::new(n, Word::all(n).filter(|w| keep(w)), provenance)
}

/// Infinite family `0·1^m` for `m = first, first + step, ...`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OnesTail {
    pub first: usize,
    pub step: usize,
}

impl OnesTail {
    /// Member lengths up to `max_len`.
    pub fn lengths_up_to(&self, max_len: usize) -> impl Iterator<Item = usize> {
        let step = self.step.max(1);
        (1 + self.first..=max_len).step_by(step)
    }
}

/// A set of ministrings: a finite list plus an optional `0·1^m` tail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinistringSet {
    finite: Vec<Word>,
    tail: Option<OnesTail>,
}

impl MinistringSet {
    pub fn new(finite: Vec<Word>, tail: Option<OnesTail>) -> Result<Self> {
        if finite.is_empty() {
            return Err(Error::InvalidArgument("ministring set needs a finite member".into()));
        }
        if let Some(t) = tail {
            if t.step == 0 {
                return Err(Error::InvalidArgument("tail step must be >= 1".into()));
            }
        }
        Ok(MinistringSet { finite, tail })
    }

    /// `{0, 01, 011}`.
    pub fn tribonacci() -> Self {
        Self::from_text(&["0", "01", "011"], None)
    }

    /// `{0, 01, 0111, 011111, ...}`: first bit 0, every 1-run odd.
    pub fn odd_runs() -> Self {
        Self::from_text(&["0", "01"], Some(OnesTail { first: 3, step: 2 }))
    }

    /// `{0, 011, 0111, ...}`: first bit 0, no 1-run of length one.
    pub fn no_isolated_ones() -> Self {
        Self::from_text(&["0"], Some(OnesTail { first: 2, step: 1 }))
    }

    fn from_text(finite: &[&str], tail: Option<OnesTail>) -> Self {
        let finite = finite.iter().map(|s| s.parse().expect("valid word")).collect();
        MinistringSet::new(finite, tail).expect("valid set")
    }

    pub fn finite(&self) -> &[Word] {
        &self.finite
    }

    pub fn tail(&self) -> Option<OnesTail> {
        self.tail
    }

    /// All members of length at most `max_len`, sorted and deduplicated.
    pub fn members_up_to(&self, max_len: usize) -> Vec<Word> {
        let mut out: Vec<Word> = self.finite.iter().filter(|w| w.len() <= max_len).copied().collect();
        if let Some(t) = self.tail {
            for len in t.lengths_up_to(max_len.min(crate::model::MAX_WORD_LEN)) {
                out.push(Word::new((1u64 << (len - 1)) - 1, len).expect("fits"));
            }
        }
        out.sort();
        out.dedup();
        out
    }

    /// Member lengths up to `max_len`, with multiplicity.
    pub fn lengths_up_to(&self, max_len: usize) -> Vec<usize> {
        self.members_up_to(max_len).iter().map(|w| w.len()).collect()
    }

    fn longest_finite(&self) -> usize {
        self.finite.iter().map(|w| w.len()).max().unwrap_or(0)
    }

    /// Members that suffice for the suffix check. Tail members `0·1^a` are
    /// never suffixes of each other, and a tail member longer than every
    /// finite member can only absorb a finite suffix that is a pure run of
    /// 1s, which the first such tail member already exposes.
    fn members_for_suffix_check(&self) -> Vec<Word> {
        let mut limit = self.longest_finite();
        if let Some(t) = self.tail {
            if let Some(len) = t.lengths_up_to(usize::MAX).find(|&l| l > limit) {
                limit = len;
            }
        }
        self.members_up_to(limit)
    }

    fn suffix_violation(&self) -> Option<(Word, Word)> {
        let members = self.members_for_suffix_check();
        for (i, a) in members.iter().enumerate() {
            for (j, b) in members.iter().enumerate() {
                if i != j && a.is_suffix_of(b) {
                    return Some((*a, *b));
                }
            }
        }
        None
    }
}

/// Whether no member of `s` is a proper suffix of another.
pub fn postfix_free(s: &MinistringSet) -> bool {
    s.suffix_violation().is_none()
}

fn require_postfix_free(s: &MinistringSet) -> Result<()> {
    match s.suffix_violation() {
        None => Ok(()),
        Some((suffix, word)) => Err(Error::NotPostfixFree {
            suffix: suffix.to_string(),
            word: word.to_string(),
        }),
    }
}

/// All length-`n` concatenations of members of `s`.
pub fn ministring_code(s: &MinistringSet, n: usize) -> Result<Code> {
    require_postfix_free(s)?;
    check_length(n)?;
    let members = s.members_up_to(n);
    let mut words = Vec::new();
    fn extend(members: &[Word], n: usize, prefix: u64, len: usize, out: &mut Vec<Word>) {
        if len == n {
            out.push(Word::new(prefix, n).expect("length n"));
            return;
        }
        for m in members.iter().filter(|m| len + m.len() <= n) {
            extend(members, n, (prefix << m.len()) | m.value(), len + m.len(), out);
        }
    }
    extend(&members, n, 0, 0, &mut words);
    Code::new(n, words, "ministring")
}

/// Unique factorization of `x` into members of `s`, left to right.
///
/// Postfix-freeness makes the right-to-left parse deterministic: at most
/// one member is a suffix of what remains.
pub fn decompose(x: &Word, s: &MinistringSet) -> Result<Vec<Word>> {
    require_postfix_free(s)?;
    let members = s.members_up_to(x.len());
    let mut factors = Vec::new();
    let mut rest = Some(*x);
    while let Some(r) = rest {
        let m = members
            .iter()
            .find(|m| m.is_suffix_of(&r))
            .ok_or_else(|| Error::NotDecomposable(x.to_string()))?;
        factors.push(*m);
        rest = if m.len() == r.len() {
            None
        } else {
            Some(Word::new(r.value() >> m.len(), r.len() - m.len()).expect("shorter word"))
        };
    }
    factors.reverse();
    Ok(factors)
}

/// Partitions `code` by how many factors of each decomposition equal
/// `block`, and returns a largest class (smallest count on ties).
pub fn largest_block_class(code: &Code, s: &MinistringSet, block: &Word) -> Result<Code> {
    let mut classes: BTreeMap<usize, Vec<Word>> = BTreeMap::new();
    for w in code {
        let count = decompose(w, s)?.iter().filter(|f| *f == block).count();
        classes.entry(count).or_default().push(*w);
    }
    let (count, words) = classes
        .into_iter()
        .fold(None::<(usize, Vec<Word>)>, |best, (count, words)| match best {
            Some(b) if b.1.len() >= words.len() => Some(b),
            _ => Some((count, words)),
        })
        .unwrap_or((0, Vec::new()));
    Code::new(
        code.n(),
        words,
        format!("{} class with {count} x {block}", code.provenance()),
    )
}

/// The lower-bound code for the triangle missing `11`: the largest class,
/// by number of `011` factors, of `{0, 01, 011}* ∩ {0,1}^n`.
pub fn tribonacci_class_code(n: usize) -> Result<Code> {
    let s = MinistringSet::tribonacci();
    let all = ministring_code(&s, n)?;
    largest_block_class(&all, &s, &"011".parse().expect("valid"))
}

pub fn has_no_run3(x: &Word) -> bool {
    x.one_runs().iter().all(|&r| r < 3)
}

pub fn has_only_odd_runs(x: &Word) -> bool {
    x.one_runs().iter().all(|&r| r % 2 == 1)
}

pub fn has_no_isolated_ones(x: &Word) -> bool {
    x.bit(0) == 0 && x.one_runs().iter().all(|&r| r >= 2)
}

pub fn is_fibonacci(x: &Word) -> bool {
    x.one_runs().iter().all(|&r| r < 2)
}

/// Words with no `111`.
pub fn no_run3_set(n: usize) -> Result<Code> {
    filtered(n, "no111", has_no_run3)
}

/// Replaces the leftmost `111` by `101` until none is left.
pub fn normalize_no111(x: &Word) -> Word {
    let mut w = *x;
    'outer: loop {
        for i in 0..w.len().saturating_sub(2) {
            if w.bit(i) == 1 && w.bit(i + 1) == 1 && w.bit(i + 2) == 1 {
                w = w.with_bit(i + 1, 0);
                continue 'outer;
            }
        }
        return w;
    }
}

/// Words whose 1-runs all have odd length; with `leading_zero` the first bit
/// must also be 0.
pub fn odd_run_code(n: usize, leading_zero: bool) -> Result<Code> {
    let tag = if leading_zero { "oddrun C" } else { "oddrun B" };
    filtered(n, tag, |w| has_only_odd_runs(w) && (!leading_zero || w.bit(0) == 0))
}

/// Clears the last 1 of every even-length run, leaving odd-run words fixed.
pub fn shorten_even_runs(x: &Word) -> Word {
    let mut w = *x;
    let mut run = 0;
    for i in 0..x.len() {
        if x.bit(i) == 1 {
            run += 1;
        }
        let run_ends = x.bit(i) == 1 && (i + 1 == x.len() || x.bit(i + 1) == 0);
        if run_ends {
            if run % 2 == 0 {
                w = w.with_bit(i, 0);
            }
            run = 0;
        }
    }
    w
}

/// A Boolean function of a two-bit window.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairFunction {
    /// Indexed by the pair value `00=0, 01=1, 10=2, 11=3`.
    pub table: [u8; 4],
}

impl PairFunction {
    pub fn new(table: [u8; 4]) -> Result<Self> {
        if table.iter().any(|&b| b > 1) {
            return Err(Error::InvalidArgument(format!(
                "pair function values must be bits: {table:?}"
            )));
        }
        Ok(PairFunction { table })
    }

    /// 0 on `00`, 1 elsewhere.
    pub fn star_00() -> Self {
        PairFunction { table: [0, 1, 1, 1] }
    }

    /// 1 on `01`, 0 elsewhere.
    pub fn star_01() -> Self {
        PairFunction { table: [0, 1, 0, 0] }
    }

    #[inline]
    pub fn apply(&self, a: u8, b: u8) -> u8 {
        self.table[((a << 1) | b) as usize]
    }
}

/// `y_0 = x_0`, `y_i = g(x_{i-1}, x_i)`.
pub fn sliding_g_map(x: &Word, g: &PairFunction) -> Word {
    let mut y = *x;
    for i in 1..x.len() {
        y = y.with_bit(i, g.apply(x.bit(i - 1), x.bit(i)));
    }
    y
}

/// Words with first bit 0 and every 1-run of length at least two.
pub fn no_isolated_ones_set(n: usize) -> Result<Code> {
    filtered(n, "no-isolated-ones", has_no_isolated_ones)
}

/// Words with no `11`.
pub fn fibonacci_set(n: usize) -> Result<Code> {
    filtered(n, "fibonacci", is_fibonacci)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub pass: bool,
    pub checked_pairs: u64,
    /// Non-distinguishable pairs in lexicographic order, at most
    /// [`MAX_REPORTED_FAILURES`].
    pub failures: Vec<(Word, Word)>,
}

/// Checks every unordered pair of `code` for distinguishability.
pub fn verify_code(code: &Code, g: &ChannelGraph) -> VerificationReport {
    let masks: Vec<[u64; 4]> = code.iter().map(|w| w.pair_masks()).collect();
    let words = code.words();
    let mut failures = Vec::new();
    let mut pass = true;
    let mut checked = 0u64;
    for i in 0..words.len() {
        for j in i + 1..words.len() {
            checked += 1;
            if !crate::model::masks_distinguishable(&masks[i], &masks[j], g) {
                debug_assert!(!distinguishable(&words[i], &words[j], g).unwrap_or(true));
                pass = false;
                if failures.len() < MAX_REPORTED_FAILURES {
                    failures.push((words[i], words[j]));
                }
            }
        }
    }
    VerificationReport {
        pass,
        checked_pairs: checked,
        failures,
    }
}

/// Deterministic automaton over `{0,1}`; a missing transition rejects.
#[derive(Clone, Debug)]
pub struct Dfa {
    start: usize,
    transitions: Vec<[Option<usize>; 2]>,
    accepting: Vec<bool>,
}

impl Dfa {
    pub fn new(start: usize, transitions: Vec<[Option<usize>; 2]>, accepting: Vec<bool>) -> Self {
        assert_eq!(transitions.len(), accepting.len());
        Dfa {
            start,
            transitions,
            accepting,
        }
    }

    pub fn accepts(&self, x: &Word) -> bool {
        let mut state = self.start;
        for b in x.bits() {
            match self.transitions[state][b as usize] {
                Some(s) => state = s,
                None => return false,
            }
        }
        self.accepting[state]
    }

    /// Number of accepted words of each length `0..=max_len`.
    ///
    /// Panics if a count overflows 128 bits.
    pub fn counts(&self, max_len: usize) -> Vec<u128> {
        let mut paths = vec![0u128; self.accepting.len()];
        paths[self.start] = 1;
        let mut out = Vec::with_capacity(max_len + 1);
        for len in 0..=max_len {
            if len > 0 {
                let mut next = vec![0u128; paths.len()];
                for (state, &c) in paths.iter().enumerate() {
                    for t in self.transitions[state].iter().flatten() {
                        next[*t] = next[*t].checked_add(c).expect("count fits in 128 bits");
                    }
                }
                paths = next;
            }
            let accepted = paths
                .iter()
                .zip(&self.accepting)
                .filter(|(_, &a)| a)
                .map(|(c, _)| *c)
                .sum();
            out.push(accepted);
        }
        out
    }
}

/// The named families exposed on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// `{0, 01, 011}^* ∩ {0,1}^n`.
    MinistringTribonacci,
    /// First bit 0, all 1-runs odd.
    #[serde(rename = "oddrun")]
    OddRun,
    /// All 1-runs odd, any first bit.
    #[serde(rename = "oddrun-any")]
    OddRunAny,
    /// No `111`.
    No111,
    /// First bit 0, no 1-run of length one.
    NoIsolatedOnes,
    /// No `11`.
    Fibonacci,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::MinistringTribonacci,
        Family::OddRun,
        Family::OddRunAny,
        Family::No111,
        Family::NoIsolatedOnes,
        Family::Fibonacci,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::MinistringTribonacci => "ministring-tribonacci",
            Family::OddRun => "oddrun",
            Family::OddRunAny => "oddrun-any",
            Family::No111 => "no111",
            Family::NoIsolatedOnes => "no-isolated-ones",
            Family::Fibonacci => "fibonacci",
        }
    }

    pub fn generate(self, n: usize) -> Result<Code> {
        match self {
            Family::MinistringTribonacci => ministring_code(&MinistringSet::tribonacci(), n),
            Family::OddRun => odd_run_code(n, true),
            Family::OddRunAny => odd_run_code(n, false),
            Family::No111 => no_run3_set(n),
            Family::NoIsolatedOnes => no_isolated_ones_set(n),
            Family::Fibonacci => fibonacci_set(n),
        }
    }

    /// Recognizer for the family, used for counting.
    pub fn dfa(self) -> Dfa {
        const X: Option<usize> = None;
        let s = Some;
        match self {
            // start, after 0, one 1, two 1s
            Family::MinistringTribonacci => Dfa::new(
                0,
                vec![[s(1), X], [s(1), s(2)], [s(1), s(3)], [s(1), X]],
                vec![true, true, true, true],
            ),
            // start, in zeros, odd run, even run
            Family::OddRun => Dfa::new(
                0,
                vec![[s(1), X], [s(1), s(2)], [s(1), s(3)], [X, s(2)]],
                vec![true, true, true, false],
            ),
            Family::OddRunAny => Dfa::new(
                0,
                vec![[s(1), s(2)], [s(1), s(2)], [s(1), s(3)], [X, s(2)]],
                vec![true, true, true, false],
            ),
            // trailing 1s: 0, 1, 2
            Family::No111 => Dfa::new(0, vec![[s(0), s(1)], [s(0), s(2)], [s(0), X]], vec![true; 3]),
            // start, in zeros, run of one, run of two or more
            Family::NoIsolatedOnes => Dfa::new(
                0,
                vec![[s(1), X], [s(1), s(2)], [X, s(3)], [s(1), s(3)]],
                vec![true, true, false, true],
            ),
            Family::Fibonacci => Dfa::new(0, vec![[s(0), s(1)], [s(0), X]], vec![true, true]),
        }
    }

    /// Exact family sizes for lengths `0..=max_len` (the empty word counts
    /// once at length 0).
    pub fn counts(self, max_len: usize) -> Vec<u128> {
        self.dfa().counts(max_len)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown family {s:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::parse_channel_spec;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn texts(code: &Code) -> Vec<String> {
        code.iter().map(|w| w.to_string()).collect()
    }

    fn set(words: &[&str], tail: Option<OnesTail>) -> MinistringSet {
        MinistringSet::new(words.iter().map(|s| w(s)).collect(), tail).unwrap()
    }

    #[test]
    fn postfix_free_examples() {
        assert!(postfix_free(&MinistringSet::tribonacci()));
        assert!(!postfix_free(&set(&["0", "10"], None)));
        assert!(postfix_free(&set(
            &["0", "01", "0111"],
            Some(OnesTail { first: 3, step: 2 })
        )));
        assert!(postfix_free(&MinistringSet::odd_runs()));
        assert!(postfix_free(&MinistringSet::no_isolated_ones()));
        // a pure run of 1s is a suffix of every long tail member
        assert!(!postfix_free(&set(&["0", "11"], Some(OnesTail { first: 3, step: 2 }))));
        // tail member 0111 is a suffix of the finite 10111
        assert!(!postfix_free(&set(&["10111"], Some(OnesTail { first: 3, step: 1 }))));
    }

    #[test]
    fn odd_tail_postfix_free_by_suffix_scan() {
        // independent check: every member up to length 12, all pairs
        let members = MinistringSet::odd_runs().members_up_to(12);
        for a in &members {
            for b in &members {
                let (sa, sb) = (a.to_string(), b.to_string());
                if sa != sb {
                    assert!(!sb.ends_with(&sa), "{sa} suffix of {sb}");
                }
            }
        }
    }

    #[test]
    fn ministring_code_examples() {
        let s = MinistringSet::tribonacci();
        assert_eq!(texts(&ministring_code(&s, 3).unwrap()), ["000", "001", "010", "011"]);
        assert_eq!(texts(&ministring_code(&s, 1).unwrap()), ["0"]);
        assert_eq!(ministring_code(&s, 4).unwrap().len(), 7);
        assert!(ministring_code(&set(&["0", "10"], None), 3).is_err());
    }

    #[test]
    fn ministring_codes_match_families() {
        for n in 1..=14 {
            assert_eq!(
                ministring_code(&MinistringSet::odd_runs(), n).unwrap(),
                Code::new(n, odd_run_code(n, true).unwrap().iter().copied(), "ministring").unwrap()
            );
            assert_eq!(
                ministring_code(&MinistringSet::no_isolated_ones(), n).unwrap().words(),
                no_isolated_ones_set(n).unwrap().words()
            );
        }
    }

    #[test]
    fn decompose_examples() {
        let s = MinistringSet::tribonacci();
        assert_eq!(decompose(&w("010"), &s).unwrap(), vec![w("01"), w("0")]);
        assert_eq!(decompose(&w("011"), &s).unwrap(), vec![w("011")]);
        assert_eq!(decompose(&w("11"), &s), Err(Error::NotDecomposable("11".into())));
    }

    #[test]
    fn decomposition_concatenates_back() {
        let s = MinistringSet::odd_runs();
        for n in 1..=12 {
            for x in ministring_code(&s, n).unwrap().iter() {
                let factors = decompose(x, &s).unwrap();
                let joined: String = factors.iter().map(|f| f.to_string()).collect();
                assert_eq!(joined, x.to_string());
            }
        }
    }

    #[test]
    fn block_class_examples() {
        let s = MinistringSet::tribonacci();
        let block = w("011");
        let c3 = ministring_code(&s, 3).unwrap();
        assert_eq!(
            texts(&largest_block_class(&c3, &s, &block).unwrap()),
            ["000", "001", "010"]
        );
        let single = Code::new(3, [w("011")], "one").unwrap();
        assert_eq!(
            largest_block_class(&single, &s, &block).unwrap().words(),
            single.words()
        );
        let c6 = ministring_code(&s, 6).unwrap();
        let class = largest_block_class(&c6, &s, &block).unwrap();
        assert!(class.len() * 6 >= 3 * c6.len());
        let bad = Code::new(2, [w("11")], "bad").unwrap();
        assert!(largest_block_class(&bad, &s, &block).is_err());
    }

    #[test]
    fn no_run3_examples() {
        assert_eq!(no_run3_set(3).unwrap().len(), 7);
        assert_eq!(texts(&no_run3_set(1).unwrap()), ["0", "1"]);
        assert_eq!(no_run3_set(4).unwrap().len(), 13);
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize_no111(&w("0111")), w("0101"));
        assert_eq!(normalize_no111(&w("0110")), w("0110"));
        assert_eq!(normalize_no111(&w("1111")), w("1011"));
        for n in 1..=12 {
            for x in Word::all(n) {
                let y = normalize_no111(&x);
                assert!(has_no_run3(&y));
                assert_eq!(y.len(), x.len());
                assert_eq!(y == x, has_no_run3(&x));
            }
        }
    }

    #[test]
    fn odd_run_examples() {
        assert_eq!(
            texts(&odd_run_code(4, true).unwrap()),
            ["0000", "0001", "0010", "0100", "0101", "0111"]
        );
        assert_eq!(texts(&odd_run_code(1, false).unwrap()), ["0", "1"]);
        assert_eq!(texts(&odd_run_code(3, true).unwrap()), ["000", "001", "010"]);
        for n in 1..=12 {
            let c = odd_run_code(n, true).unwrap();
            let b = odd_run_code(n, false).unwrap();
            assert!(c.iter().all(|x| b.contains(x)));
            assert!(c.len() < b.len());
        }
    }

    #[test]
    fn shorten_examples() {
        assert_eq!(shorten_even_runs(&w("0110")), w("0100"));
        assert_eq!(shorten_even_runs(&w("0101")), w("0101"));
        assert_eq!(shorten_even_runs(&w("011110")), w("011100"));
        assert_eq!(shorten_even_runs(&w("11011")), w("10010"));
    }

    #[test]
    fn sliding_examples() {
        assert_eq!(sliding_g_map(&w("0010"), &PairFunction::star_00()), w("0011"));
        assert_eq!(sliding_g_map(&w("000"), &PairFunction::star_00()), w("000"));
        let q = sliding_g_map(&w("0011"), &PairFunction::star_01());
        assert_eq!(q, w("0010"));
        assert!(is_fibonacci(&q));
        assert!(PairFunction::new([0, 2, 0, 0]).is_err());
    }

    #[test]
    fn no_isolated_examples() {
        assert_eq!(texts(&no_isolated_ones_set(3).unwrap()), ["000", "011"]);
        assert_eq!(texts(&no_isolated_ones_set(1).unwrap()), ["0"]);
        assert_eq!(
            texts(&no_isolated_ones_set(4).unwrap()),
            ["0000", "0011", "0110", "0111"]
        );
    }

    #[test]
    fn fibonacci_examples() {
        assert_eq!(texts(&fibonacci_set(2).unwrap()), ["00", "01", "10"]);
        assert_eq!(fibonacci_set(3).unwrap().len(), 5);
        assert_eq!(texts(&fibonacci_set(1).unwrap()), ["0", "1"]);
    }

    #[test]
    fn verify_examples() {
        let g = parse_channel_spec("00-01;00-11;01-11").unwrap();
        let r = verify_code(&odd_run_code(3, true).unwrap(), &g);
        assert!(r.pass);
        assert_eq!(r.checked_pairs, 3);
        let single = Code::new(4, [w("0110")], "one").unwrap();
        assert!(verify_code(&single, &ChannelGraph::alias("F").unwrap()).pass);
        let bad = Code::new(3, [w("011"), w("110")], "bad").unwrap();
        let r = verify_code(&bad, &ChannelGraph::alias("F").unwrap());
        assert!(!r.pass);
        assert_eq!(r.failures, vec![(w("011"), w("110"))]);
    }

    #[test]
    fn verify_caps_failures() {
        let all = Code::new(8, Word::all(8), "all").unwrap();
        let r = verify_code(&all, &ChannelGraph::edgeless());
        assert_eq!(r.failures.len(), MAX_REPORTED_FAILURES);
        assert_eq!(r.checked_pairs, 256 * 255 / 2);
        let mut sorted = r.failures.clone();
        sorted.sort();
        assert_eq!(sorted, r.failures);
    }

    #[test]
    fn dfa_counts_match_enumeration() {
        for family in Family::ALL {
            let counts = family.counts(16);
            assert_eq!(counts[0], 1);
            let dfa = family.dfa();
            for n in 1..=16 {
                let code = family.generate(n).unwrap();
                assert_eq!(code.len() as u128, counts[n], "{family} n={n}");
                for x in Word::all(n) {
                    assert_eq!(dfa.accepts(&x), code.contains(&x), "{family} {x}");
                }
            }
        }
    }

    #[test]
    fn family_names_round_trip() {
        for family in Family::ALL {
            assert_eq!(family.name().parse::<Family>().unwrap(), family);
            let json = serde_json::to_string(&family).unwrap();
            assert_eq!(json, format!("\"{}\"", family.name()));
        }
        assert!("bogus".parse::<Family>().is_err());
    }

    #[test]
    fn enumeration_cap() {
        assert!(matches!(
            fibonacci_set(ENUMERATION_CAP + 1),
            Err(Error::CapExceeded { .. })
        ));
        assert!(fibonacci_set(0).is_err());
    }
}
