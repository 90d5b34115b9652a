//! Core vocabulary: binary words, the pair alphabet, confusability graphs,
//! digraphs used as channel digraphs or as walk constraints, and codes.
//!
//! Positions are 0-based throughout the API.

use std::collections::BTreeSet;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Longest word the packed representation can hold.
pub const MAX_WORD_LEN: usize = 64;

/// Default cap on the number of walks [`enumerate_walks`] will materialize.
pub const DEFAULT_WALK_CAP: usize = 1 << 24;

/// A fixed-length binary word.
///
/// Bits are packed most-significant-first, so the numeric order of
/// `value` coincides with the lexicographic order of the `'0'/'1'` text for
/// words of equal length.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Word {
    value: u64,
    len: u8,
}

impl Word {
    pub fn new(value: u64, len: usize) -> Result<Self> {
        if len == 0 || len > MAX_WORD_LEN {
            return Err(Error::InvalidArgument(format!(
                "word length must be in 1..={MAX_WORD_LEN}, got {len}"
            )));
        }
        if len < 64 && value >> len != 0 {
            return Err(Error::InvalidArgument(format!(
                "value {value:#x} does not fit in {len} bits"
            )));
        }
        Ok(Word { value, len: len as u8 })
    }

    /// Builds a word from a slice of 0/1 values.
    pub fn from_bits(bits: &[u8]) -> Result<Self> {
        let mut value = 0u64;
        for &b in bits {
            if b > 1 {
                return Err(Error::InvalidArgument(format!("bit value {b}")));
            }
            value = (value << 1) | b as u64;
        }
        Word::new(value, bits.len())
    }

    /// Constant word of length `len`.
    pub fn constant(bit: u8, len: usize) -> Result<Self> {
        Word::from_bits(&vec![bit; len])
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len as usize
    }

    /// Always false; words have length at least 1.
    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Packed value, first bit most significant.
    #[inline]
    pub fn value(&self) -> u64 {
        self.value
    }

    #[inline]
    pub fn bit(&self, i: usize) -> u8 {
        debug_assert!(i < self.len());
        ((self.value >> (self.len() - 1 - i)) & 1) as u8
    }

    pub fn bits(&self) -> impl Iterator<Item = u8> + '_ {
        (0..self.len()).map(move |i| self.bit(i))
    }

    pub fn with_bit(&self, i: usize, bit: u8) -> Word {
        let mask = 1u64 << (self.len() - 1 - i);
        let value = if bit == 0 {
            self.value & !mask
        } else {
            self.value | mask
        };
        Word { value, len: self.len }
    }

    /// Two-bit window starting at position `i`.
    #[inline]
    pub fn pair(&self, i: usize) -> PairLetter {
        PairLetter::from_bits(self.bit(i), self.bit(i + 1))
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        let len = self.len() + other.len();
        if len > MAX_WORD_LEN {
            return Err(Error::InvalidArgument(format!(
                "concatenation of length {len} exceeds {MAX_WORD_LEN}"
            )));
        }
        Word::new((self.value << other.len()) | other.value, len)
    }

    /// Whether `self` is a suffix of `other` (a word is a suffix of itself).
    pub fn is_suffix_of(&self, other: &Word) -> bool {
        if self.len() > other.len() {
            return false;
        }
        let mask = if self.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.len()) - 1
        };
        other.value & mask == self.value
    }

    /// Length of the maximal runs of 1s, left to right.
    pub fn one_runs(&self) -> Vec<usize> {
        let mut runs = Vec::new();
        let mut current = 0;
        for b in self.bits() {
            if b == 1 {
                current += 1;
            } else if current > 0 {
                runs.push(current);
                current = 0;
            }
        }
        if current > 0 {
            runs.push(current);
        }
        runs
    }

    /// Whether the text of `pattern` occurs in `self`.
    pub fn contains(&self, pattern: &Word) -> bool {
        if pattern.len() > self.len() {
            return false;
        }
        let mask = if pattern.len() == 64 {
            u64::MAX
        } else {
            (1u64 << pattern.len()) - 1
        };
        (0..=self.len() - pattern.len()).any(|shift| (self.value >> shift) & mask == pattern.value)
    }

    /// For every pair letter, the set of window positions carrying it.
    ///
    /// Bit `j` of each mask refers to window `len - 2 - j`; the layout is the
    /// same for every word of a given length, which is all that the
    /// distinguishability test needs.
    #[inline]
    pub fn pair_masks(&self) -> [u64; 4] {
        let n = self.len();
        if n < 2 {
            return [0; 4];
        }
        let full = (1u64 << (n - 1)) - 1;
        let hi = self.value >> 1;
        let lo = self.value & full;
        [!hi & !lo & full, !hi & lo, hi & !lo, hi & lo]
    }

    /// All words of length `len` in lexicographic order.
    pub fn all(len: usize) -> impl Iterator<Item = Word> {
        assert!((1..MAX_WORD_LEN).contains(&len), "word length {len}");
        (0..1u64 << len).map(move |value| Word { value, len: len as u8 })
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    /// Shorter words first, then lexicographic.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.len, self.value).cmp(&(other.len, other.value))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.bits() {
            f.write_str(if b == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(Error::malformed(s, "words use only '0' and '1'")),
            })
            .collect::<Result<Vec<u8>>>()?;
        if bits.is_empty() {
            return Err(Error::malformed(s, "empty word"));
        }
        Word::from_bits(&bits)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// One of the four pairs of consecutive bits, ordered `00 < 01 < 10 < 11`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PairLetter {
    P00 = 0,
    P01 = 1,
    P10 = 2,
    P11 = 3,
}

impl PairLetter {
    pub const ALL: [PairLetter; 4] = [PairLetter::P00, PairLetter::P01, PairLetter::P10, PairLetter::P11];

    #[inline]
    pub fn from_bits(first: u8, second: u8) -> Self {
        Self::from_index(((first << 1) | second) as usize)
    }

    #[inline]
    pub fn from_index(i: usize) -> Self {
        Self::ALL[i]
    }

    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn first(self) -> u8 {
        (self.index() >> 1) as u8
    }

    pub fn second(self) -> u8 {
        (self.index() & 1) as u8
    }

    pub fn hamming(self, other: PairLetter) -> u32 {
        (self.index() ^ other.index()).count_ones()
    }
}

impl fmt::Display for PairLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.first(), self.second())
    }
}

impl FromStr for PairLetter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "00" => Ok(PairLetter::P00),
            "01" => Ok(PairLetter::P01),
            "10" => Ok(PairLetter::P10),
            "11" => Ok(PairLetter::P11),
            _ => Err(Error::malformed(s, "not one of 00, 01, 10, 11")),
        }
    }
}

/// Undirected confusability graph on the pair alphabet.
///
/// An edge means the channel tells the two pairs apart. Loops are rejected.
#[derive(Clone, Debug, Default, Eq)]
pub struct ChannelGraph {
    adjacency: [u8; 4],
    name: Option<String>,
}

impl PartialEq for ChannelGraph {
    fn eq(&self, other: &Self) -> bool {
        self.adjacency == other.adjacency
    }
}

impl ChannelGraph {
    pub fn edgeless() -> Self {
        Self::default()
    }

    pub fn from_edges(edges: &[(PairLetter, PairLetter)]) -> Result<Self> {
        let mut g = Self::edgeless();
        for &(a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, a: PairLetter, b: PairLetter) -> Result<()> {
        if a == b {
            return Err(Error::LoopEdge(a.to_string()));
        }
        self.adjacency[a.index()] |= 1 << b.index();
        self.adjacency[b.index()] |= 1 << a.index();
        Ok(())
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    #[inline]
    pub fn has_edge(&self, a: PairLetter, b: PairLetter) -> bool {
        self.adjacency[a.index()] & (1 << b.index()) != 0
    }

    /// Edges as `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> Vec<(PairLetter, PairLetter)> {
        let mut out = Vec::new();
        for a in PairLetter::ALL {
            for b in PairLetter::ALL {
                if a < b && self.has_edge(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    pub fn is_subgraph_of(&self, other: &ChannelGraph) -> bool {
        self.adjacency
            .iter()
            .zip(other.adjacency.iter())
            .all(|(a, b)| a & !b == 0)
    }

    /// All 64 graphs on the pair alphabet, indexed by a 6-bit edge mask.
    pub fn all_graphs() -> Vec<ChannelGraph> {
        let slots: Vec<(PairLetter, PairLetter)> = ChannelGraph::complete().edges();
        (0..1u32 << slots.len())
            .map(|mask| {
                let chosen: Vec<_> = slots
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                ChannelGraph::from_edges(&chosen).expect("no loops")
            })
            .collect()
    }

    pub fn complete() -> Self {
        Self::complete_on(&PairLetter::ALL)
    }

    pub fn complete_on(letters: &[PairLetter]) -> Self {
        let mut g = Self::edgeless();
        for (i, &a) in letters.iter().enumerate() {
            for &b in &letters[i + 1..] {
                g.add_edge(a, b).expect("distinct letters");
            }
        }
        g
    }

    /// Triangle on the three letters other than `missing`.
    pub fn triangle_without(missing: PairLetter) -> Self {
        let letters: Vec<_> = PairLetter::ALL.into_iter().filter(|&p| p != missing).collect();
        Self::complete_on(&letters)
    }

    /// Star joining `center` to the other three letters.
    pub fn star(center: PairLetter) -> Self {
        let mut g = Self::edgeless();
        for p in PairLetter::ALL {
            if p != center {
                g.add_edge(center, p).expect("distinct letters");
            }
        }
        g
    }

    /// The named channels: `F` (triangle missing 11), `G` (triangle missing
    /// 10), `L` (star centered at 00) and `Q` (star centered at 01).
    pub fn alias(name: &str) -> Option<Self> {
        let g = match name {
            "F" => Self::triangle_without(PairLetter::P11),
            "G" => Self::triangle_without(PairLetter::P10),
            "L" => Self::star(PairLetter::P00),
            "Q" => Self::star(PairLetter::P01),
            _ => return None,
        };
        Some(g.with_name(name))
    }

    /// Canonical spec string, edges sorted.
    pub fn to_spec(&self) -> String {
        self.edges()
            .iter()
            .map(|(a, b)| format!("{a}-{b}"))
            .collect::<Vec<_>>()
            .join(";")
    }
}

impl fmt::Display for ChannelGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_spec())
    }
}

/// Parses `edge (";" edge)*` with `edge = pair "-" pair`. The empty string
/// is the edgeless graph. Duplicate edges collapse.
pub fn parse_channel_spec(text: &str) -> Result<ChannelGraph> {
    let mut g = ChannelGraph::edgeless();
    if text.is_empty() {
        return Ok(g);
    }
    for token in text.split(';') {
        let (a, b) = token
            .split_once('-')
            .ok_or_else(|| Error::malformed(token, "expected pair-pair"))?;
        let a: PairLetter = a.parse().map_err(|_| Error::malformed(token, "not a pair letter"))?;
        let b: PairLetter = b.parse().map_err(|_| Error::malformed(token, "not a pair letter"))?;
        g.add_edge(a, b)?;
    }
    Ok(g)
}

/// A directed graph on `0..k`. Loops are allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    k: usize,
    adjacency: Vec<bool>,
}

impl Digraph {
    pub fn empty(k: usize) -> Self {
        Digraph {
            k,
            adjacency: vec![false; k * k],
        }
    }

    pub fn from_arcs(k: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut d = Self::empty(k);
        for &(a, b) in arcs {
            d.add_arc(a, b)?;
        }
        Ok(d)
    }

    pub fn add_arc(&mut self, a: usize, b: usize) -> Result<()> {
        for v in [a, b] {
            if v >= self.k {
                return Err(Error::VertexOutOfRange { vertex: v, k: self.k });
            }
        }
        self.adjacency[a * self.k + b] = true;
        Ok(())
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn has_arc(&self, a: usize, b: usize) -> bool {
        self.adjacency[a * self.k + b]
    }

    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.k {
            for b in 0..self.k {
                if self.has_arc(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Walk constraint `{0>0, 0>1, 1>0}`: binary words with no `11`.
    pub fn fibonacci() -> Self {
        Self::from_arcs(2, &[(0, 0), (0, 1), (1, 0)]).expect("valid arcs")
    }

    /// Every arc including loops.
    pub fn full_shift(k: usize) -> Self {
        let mut d = Self::empty(k);
        d.adjacency.iter_mut().for_each(|a| *a = true);
        d
    }

    /// Every arc `a > b` with `a != b`.
    pub fn complete_loopless(k: usize) -> Self {
        let mut d = Self::full_shift(k);
        for v in 0..k {
            d.adjacency[v * k + v] = false;
        }
        d
    }

    /// The `k`-cycle with both orientations of every edge.
    pub fn symmetric_cycle(k: usize) -> Self {
        let mut d = Self::empty(k);
        for v in 0..k {
            let w = (v + 1) % k;
            if v != w {
                d.adjacency[v * k + w] = true;
                d.adjacency[w * k + v] = true;
            }
        }
        d
    }

    /// Each undirected edge of `g` replaced by the two opposite arcs, on the
    /// pair letters numbered `00=0, 01=1, 10=2, 11=3`.
    pub fn from_channel(g: &ChannelGraph) -> Self {
        let mut d = Self::empty(4);
        for (a, b) in g.edges() {
            d.adjacency[a.index() * 4 + b.index()] = true;
            d.adjacency[b.index() * 4 + a.index()] = true;
        }
        d
    }

    /// De Bruijn digraph on pair letters: `ab -> cd` exactly when `b == c`.
    pub fn pair_shift() -> Self {
        let mut d = Self::empty(4);
        for a in PairLetter::ALL {
            for b in PairLetter::ALL {
                if a.second() == b.first() {
                    d.adjacency[a.index() * 4 + b.index()] = true;
                }
            }
        }
        d
    }

    /// Named digraphs: `fibonacci`, `pair-shift`, `full<k>`, `K<k>`
    /// (loopless complete) and `C<k>sym` (symmetric cycle).
    pub fn alias(name: &str) -> Option<Self> {
        match name {
            "fibonacci" => return Some(Self::fibonacci()),
            "pair-shift" => return Some(Self::pair_shift()),
            _ => {}
        }
        let number = |s: &str| s.parse::<usize>().ok().filter(|&k| k >= 1);
        if let Some(k) = name.strip_prefix("full").and_then(number) {
            return Some(Self::full_shift(k));
        }
        if let Some(k) = name.strip_prefix('K').and_then(number) {
            return Some(Self::complete_loopless(k));
        }
        if let Some(k) = name
            .strip_prefix('C')
            .and_then(|s| s.strip_suffix("sym"))
            .and_then(number)
        {
            return Some(Self::symmetric_cycle(k));
        }
        None
    }

    /// Canonical spec string, arcs sorted.
    pub fn to_spec(&self) -> String {
        self.arcs()
            .iter()
            .map(|(a, b)| format!("{a}>{b}"))
            .collect::<Vec<_>>()
            .join(";")
    }
}

/// Parses `arc (";" arc)*` with `arc = int ">" int` on vertices `0..k`.
pub fn parse_digraph_spec(text: &str, k: usize) -> Result<Digraph> {
    let mut d = Digraph::empty(k);
    if text.is_empty() {
        return Ok(d);
    }
    for token in text.split(';') {
        let (a, b) = token
            .split_once('>')
            .ok_or_else(|| Error::malformed(token, "expected int>int"))?;
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| Error::malformed(token, "vertex is not a nonnegative integer"))
        };
        d.add_arc(parse(a)?, parse(b)?)?;
    }
    Ok(d)
}

/// Whether some window position carries an edge of `g` between the two
/// words.
pub fn distinguishable(x: &Word, y: &Word, g: &ChannelGraph) -> Result<bool> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    Ok(distinguishing_position(x, y, g).is_some())
}

/// First window position (0-based) at which `x` and `y` are told apart.
pub fn distinguishing_position(x: &Word, y: &Word, g: &ChannelGraph) -> Option<usize> {
    if x.len() != y.len() {
        return None;
    }
    (0..x.len().saturating_sub(1)).find(|&i| g.has_edge(x.pair(i), y.pair(i)))
}

/// Bit-parallel distinguishability test over precomputed
/// [`Word::pair_masks`]; both masks must come from words of equal length.
#[inline]
pub fn masks_distinguishable(x: &[u64; 4], y: &[u64; 4], g: &ChannelGraph) -> bool {
    for a in 0..4 {
        let row = g.adjacency[a];
        if row == 0 || x[a] == 0 {
            continue;
        }
        for b in 0..4 {
            if row >> b & 1 == 1 && x[a] & y[b] != 0 {
                return true;
            }
        }
    }
    false
}

/// The sequence of two-bit windows of `x`.
pub fn word_pairs(x: &Word) -> Result<Vec<PairLetter>> {
    if x.len() < 2 {
        return Err(Error::InvalidArgument(format!(
            "word_pairs needs length >= 2, got {}",
            x.len()
        )));
    }
    Ok((0..x.len() - 1).map(|i| x.pair(i)).collect())
}

/// Inverse of [`word_pairs`], defined when consecutive letters overlap.
pub fn word_from_pairs(pairs: &[PairLetter]) -> Result<Word> {
    let first = pairs
        .first()
        .ok_or_else(|| Error::InvalidArgument("empty pair sequence".into()))?;
    let mut bits = vec![first.first(), first.second()];
    for w in pairs.windows(2) {
        if w[0].second() != w[1].first() {
            return Err(Error::InvalidArgument(format!(
                "pairs {} and {} do not overlap",
                w[0], w[1]
            )));
        }
        bits.push(w[1].second());
    }
    Word::from_bits(&bits)
}

/// A walk in a digraph, as a vertex sequence.
pub type Walk = Vec<usize>;

/// Number of walks with `n` vertices, saturating at `u128::MAX`.
pub fn count_walks(p: &Digraph, n: usize) -> u128 {
    if n == 0 {
        return 0;
    }
    let k = p.k();
    let mut counts = vec![1u128; k];
    for _ in 1..n {
        let mut next = vec![0u128; k];
        for a in 0..k {
            for b in 0..k {
                if p.has_arc(a, b) {
                    next[b] = next[b].saturating_add(counts[a]);
                }
            }
        }
        counts = next;
    }
    counts.iter().fold(0u128, |acc, &c| acc.saturating_add(c))
}

/// All walks with `n` vertices in `p`, in lexicographic order.
///
/// Fails when more than `cap` walks would be produced.
pub fn enumerate_walks(p: &Digraph, n: usize, cap: usize) -> Result<Vec<Walk>> {
    if n == 0 {
        return Err(Error::InvalidArgument("walk length must be >= 1".into()));
    }
    let total = count_walks(p, n);
    if total > cap as u128 {
        return Err(Error::CapExceeded {
            what: format!("walks of length {n}"),
            needed: total,
            cap: cap as u128,
        });
    }
    let mut out = Vec::with_capacity(total as usize);
    let mut current = Vec::with_capacity(n);
    fn extend(p: &Digraph, n: usize, current: &mut Walk, out: &mut Vec<Walk>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for v in 0..p.k() {
            if current.last().map_or(true, |&u| p.has_arc(u, v)) {
                current.push(v);
                extend(p, n, current, out);
                current.pop();
            }
        }
    }
    extend(p, n, &mut current, &mut out);
    Ok(out)
}

/// A set of distinct words sharing one length, tagged with its origin.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Code {
    n: usize,
    words: Vec<Word>,
    provenance: String,
}

impl Code {
    /// Sorts and deduplicates `words`; every word must have length `n`.
    pub fn new(n: usize, words: impl IntoIterator<Item = Word>, provenance: impl Into<String>) -> Result<Self> {
        let set: BTreeSet<Word> = words.into_iter().collect();
        if let Some(w) = set.iter().find(|w| w.len() != n) {
            return Err(Error::LengthMismatch {
                left: n,
                right: w.len(),
            });
        }
        Ok(Code {
            n,
            words: set.into_iter().collect(),
            provenance: provenance.into(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Words in lexicographic order.
    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Word> {
        self.words.iter()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.binary_search(w).is_ok()
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    /// One word per line, LF-terminated.
    pub fn to_word_file(&self) -> String {
        let mut s = String::with_capacity(self.words.len() * (self.n + 1));
        for w in &self.words {
            s.push_str(&w.to_string());
            s.push('\n');
        }
        s
    }

    /// Parses a word file. Blank lines and trailing whitespace are rejected.
    pub fn parse_word_file(text: &str, provenance: impl Into<String>) -> Result<Self> {
        let mut words = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            if line.is_empty() || line.trim_end() != line || line.ends_with('\r') {
                return Err(Error::malformed(
                    line,
                    format!(
                        "line {}: words must be non-empty with no trailing whitespace",
                        lineno + 1
                    ),
                ));
            }
            words.push(line.parse::<Word>()?);
        }
        let n = words
            .first()
            .map(|w| w.len())
            .ok_or_else(|| Error::InvalidArgument("word file is empty".into()))?;
        Code::new(n, words, provenance)
    }

    pub fn read_word_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Code::parse_word_file(&text, path.display().to_string())
    }

    pub fn write_word_file(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_word_file())?;
        Ok(())
    }
}

impl<'a> IntoIterator for &'a Code {
    type Item = &'a Word;
    type IntoIter = std::slice::Iter<'a, Word>;

    fn into_iter(self) -> Self::IntoIter {
        self.words.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn word_text_round_trip() {
        for s in ["0", "1", "0110", "1111000011110000"] {
            assert_eq!(w(s).to_string(), s);
            assert_eq!(w(s).len(), s.len());
        }
        assert!("".parse::<Word>().is_err());
        assert!("012".parse::<Word>().is_err());
        assert!("0 1".parse::<Word>().is_err());
    }

    #[test]
    fn word_order_is_lexicographic() {
        let mut words: Vec<Word> = ["10", "01", "11", "00"].iter().map(|s| w(s)).collect();
        words.sort();
        let text: Vec<String> = words.iter().map(|x| x.to_string()).collect();
        assert_eq!(text, ["00", "01", "10", "11"]);
    }

    #[test]
    fn parses_triangle_f() {
        let g = parse_channel_spec("00-01;00-10;01-10").unwrap();
        assert_eq!(g, ChannelGraph::alias("F").unwrap());
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.to_spec(), "00-01;00-10;01-10");
    }

    #[test]
    fn empty_spec_is_edgeless() {
        assert_eq!(parse_channel_spec("").unwrap().edge_count(), 0);
    }

    #[test]
    fn channel_spec_errors() {
        assert!(matches!(parse_channel_spec("00-00"), Err(Error::LoopEdge(_))));
        assert!(matches!(parse_channel_spec("00-02"), Err(Error::Malformed { .. })));
        assert!(matches!(parse_channel_spec("0001"), Err(Error::Malformed { .. })));
        assert!(matches!(parse_channel_spec("00-01;"), Err(Error::Malformed { .. })));
    }

    #[test]
    fn channel_spec_deduplicates() {
        let g = parse_channel_spec("00-01;01-00;00-01").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn digraph_specs() {
        let fib = parse_digraph_spec("0>0;0>1;1>0", 2).unwrap();
        assert_eq!(fib, Digraph::fibonacci());
        let arc = parse_digraph_spec("0>1", 2).unwrap();
        assert_eq!(arc.arcs(), vec![(0, 1)]);
        assert_eq!(
            parse_digraph_spec("0>2", 2),
            Err(Error::VertexOutOfRange { vertex: 2, k: 2 })
        );
        assert!(matches!(parse_digraph_spec("0-1", 2), Err(Error::Malformed { .. })));
        assert!(matches!(parse_digraph_spec("a>1", 2), Err(Error::Malformed { .. })));
    }

    #[test]
    fn digraph_aliases() {
        assert_eq!(Digraph::alias("K5").unwrap().arcs().len(), 20);
        assert_eq!(Digraph::alias("C5sym").unwrap().arcs().len(), 10);
        assert_eq!(Digraph::alias("full2").unwrap().arcs().len(), 4);
        assert!(Digraph::alias("C5").is_none());
    }

    #[test]
    fn distinguishable_examples() {
        let f = ChannelGraph::alias("F").unwrap();
        assert!(distinguishable(&w("00"), &w("01"), &f).unwrap());
        assert_eq!(distinguishing_position(&w("00"), &w("01"), &f), Some(0));
        assert!(!distinguishable(&w("011"), &w("110"), &f).unwrap());
        assert!(!distinguishable(&w("0101"), &w("0101"), &ChannelGraph::complete()).unwrap());
        assert!(distinguishable(&w("01"), &w("011"), &f).is_err());
    }

    #[test]
    fn single_letter_words_never_distinguishable() {
        let g = ChannelGraph::complete();
        assert!(!distinguishable(&w("0"), &w("1"), &g).unwrap());
    }

    #[test]
    fn mask_test_agrees_with_scan() {
        for g in ChannelGraph::all_graphs() {
            for n in 1..=5 {
                for x in Word::all(n) {
                    for y in Word::all(n) {
                        let fast = masks_distinguishable(&x.pair_masks(), &y.pair_masks(), &g);
                        assert_eq!(fast, distinguishing_position(&x, &y, &g).is_some());
                    }
                }
            }
        }
    }

    #[test]
    fn distinguishability_symmetric_and_monotone() {
        let graphs = ChannelGraph::all_graphs();
        for n in 1..=6 {
            let words: Vec<Word> = Word::all(n).collect();
            for g in &graphs {
                for x in &words {
                    for y in &words {
                        let d = distinguishable(x, y, g).unwrap();
                        assert_eq!(d, distinguishable(y, x, g).unwrap());
                        if x == y {
                            assert!(!d);
                        }
                    }
                }
            }
        }
        // monotonicity over pairs of nested graphs, n = 5
        let words: Vec<Word> = Word::all(5).collect();
        for small in &graphs {
            for big in graphs.iter().filter(|b| small.is_subgraph_of(b)) {
                for x in &words {
                    for y in &words {
                        if distinguishable(x, y, small).unwrap() {
                            assert!(distinguishable(x, y, big).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn word_pairs_examples() {
        let show = |s: &str| {
            word_pairs(&w(s))
                .unwrap()
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
        };
        assert_eq!(show("0110"), ["01", "11", "10"]);
        assert_eq!(show("000"), ["00", "00"]);
        assert_eq!(show("01"), ["01"]);
        assert!(word_pairs(&w("1")).is_err());
    }

    #[test]
    fn word_pairs_injective() {
        for n in 2..=12 {
            let mut seen = std::collections::HashSet::new();
            for x in Word::all(n) {
                let pairs = word_pairs(&x).unwrap();
                assert_eq!(word_from_pairs(&pairs).unwrap(), x);
                assert!(seen.insert(pairs));
            }
        }
        use PairLetter::*;
        assert!(word_from_pairs(&[P01, P01]).is_err());
    }

    #[test]
    fn walk_examples() {
        let fib = enumerate_walks(&Digraph::fibonacci(), 2, DEFAULT_WALK_CAP).unwrap();
        assert_eq!(fib, vec![vec![0, 0], vec![0, 1], vec![1, 0]]);
        let full = enumerate_walks(&Digraph::full_shift(2), 3, DEFAULT_WALK_CAP).unwrap();
        assert_eq!(full.len(), 8);
        let k5 = enumerate_walks(&Digraph::complete_loopless(5), 2, DEFAULT_WALK_CAP).unwrap();
        // independent count: ordered pairs of distinct vertices
        let oracle = (0..5)
            .flat_map(|a| (0..5).map(move |b| (a, b)))
            .filter(|(a, b)| a != b)
            .count();
        assert_eq!(k5.len(), oracle);
        assert_eq!(k5.len(), 20);
        assert_eq!(enumerate_walks(&Digraph::fibonacci(), 1, 10).unwrap().len(), 2);
    }

    #[test]
    fn walk_cap_is_enforced() {
        let err = enumerate_walks(&Digraph::full_shift(2), 10, 1000).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { needed: 1024, .. }));
        assert!(enumerate_walks(&Digraph::full_shift(2), 0, 1000).is_err());
    }

    #[test]
    fn pair_shift_walks_match_words() {
        let p = Digraph::pair_shift();
        for m in 1..=10 {
            let walks = enumerate_walks(&p, m, DEFAULT_WALK_CAP).unwrap();
            assert_eq!(walks.len(), 1 << (m + 1));
            assert_eq!(count_walks(&p, m), 1 << (m + 1));
        }
    }

    #[test]
    fn code_invariants() {
        let c = Code::new(2, [w("10"), w("00"), w("10")], "test").unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c.words(), &[w("00"), w("10")]);
        assert!(Code::new(2, [w("101")], "bad").is_err());
    }

    #[test]
    fn word_file_format() {
        let c = Code::new(3, [w("011"), w("000")], "t").unwrap();
        let text = c.to_word_file();
        assert_eq!(text, "000\n011\n");
        assert_eq!(Code::parse_word_file(&text, "t").unwrap(), c);
        assert!(Code::parse_word_file("000 \n", "t").is_err());
        assert!(Code::parse_word_file("000\n\n011\n", "t").is_err());
        assert!(Code::parse_word_file("000\n01\n", "t").is_err());
        assert!(Code::parse_word_file("", "t").is_err());
    }

    proptest! {
        #[test]
        fn word_display_parse(len in 1usize..=64, seed in any::<u64>()) {
            let value = if len == 64 { seed } else { seed & ((1u64 << len) - 1) };
            let x = Word::new(value, len).unwrap();
            prop_assert_eq!(x.to_string().parse::<Word>().unwrap(), x);
            prop_assert_eq!(serde_json::from_str::<Word>(&serde_json::to_string(&x).unwrap()).unwrap(), x);
        }

        #[test]
        fn channel_spec_round_trip(mask in 0usize..64) {
            let g = ChannelGraph::all_graphs()[mask].clone();
            prop_assert_eq!(parse_channel_spec(&g.to_spec()).unwrap(), g);
        }
    }
}
