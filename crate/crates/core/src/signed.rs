//! Signed permutations `(σ, w) ∈ C_k ≀ S_n`, patterns, order-isomorphic
//! reductions, bi-matches and the six rise/descent statistics.
//!
//! Positions are 1-based everywhere in the public API.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An element `(σ, w)` of `C_k ≀ S_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignedPermutation {
    sigma: Vec<u32>,
    word: Vec<u32>,
    k: u32,
}

impl SignedPermutation {
    pub fn new(sigma: Vec<u32>, word: Vec<u32>, k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidInput("alphabet size k must be at least 1".into()));
        }
        if sigma.len() != word.len() {
            return Err(Error::InvalidInput(format!(
                "sigma has length {} but word has length {}",
                sigma.len(),
                word.len()
            )));
        }
        if !is_permutation(&sigma) {
            return Err(Error::InvalidInput(format!("{sigma:?} is not a permutation of 1..n")));
        }
        if let Some(bad) = word.iter().find(|&&c| c >= k) {
            return Err(Error::InvalidInput(format!("letter {bad} outside 0..{}", k - 1)));
        }
        Ok(Self { sigma, word, k })
    }

    pub(crate) fn from_parts_unchecked(sigma: Vec<u32>, word: Vec<u32>, k: u32) -> Self {
        Self { sigma, word, k }
    }

    /// The empty element of `C_k ≀ S_0`.
    pub fn empty(k: u32) -> Self {
        Self { sigma: Vec::new(), word: Vec::new(), k: k.max(1) }
    }

    pub fn n(&self) -> usize {
        self.sigma.len()
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn sigma(&self) -> &[u32] {
        &self.sigma
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.sigma.iter().map(u32::to_string).collect();
        let w: Vec<String> = self.word.iter().map(u32::to_string).collect();
        write!(f, "({}, {})", s.join(" "), w.join(" "))
    }
}

/// A pattern `(τ, u) ∈ C_j ≀ S_j` with `red(u) = u`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Pattern {
    tau: Vec<u32>,
    u: Vec<u32>,
}

impl Pattern {
    pub fn new(tau: Vec<u32>, u: Vec<u32>) -> Result<Self> {
        if tau.len() != u.len() {
            return Err(Error::InvalidInput("pattern parts have different lengths".into()));
        }
        if !is_permutation(&tau) {
            return Err(Error::InvalidInput(format!("{tau:?} is not a permutation")));
        }
        let signed: Vec<i64> = u.iter().map(|&c| i64::from(c)).collect();
        if reduce_word(&signed) != u {
            return Err(Error::InvalidInput(format!("word {u:?} is not reduced")));
        }
        Ok(Self { tau, u })
    }

    /// A pattern whose letters are taken verbatim (no `red(u) = u`
    /// requirement), for the exact-sign occurrence functions.
    pub fn unreduced(tau: Vec<u32>, u: Vec<u32>) -> Result<Self> {
        if tau.len() != u.len() {
            return Err(Error::InvalidInput("pattern parts have different lengths".into()));
        }
        if !is_permutation(&tau) {
            return Err(Error::InvalidInput(format!("{tau:?} is not a permutation")));
        }
        Ok(Self { tau, u })
    }

    pub fn len(&self) -> usize {
        self.tau.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tau.is_empty()
    }

    pub fn tau(&self) -> &[u32] {
        &self.tau
    }

    pub fn word(&self) -> &[u32] {
        &self.u
    }

    /// Does the window `σ[i..i+j]`, `w[i..i+j]` (0-based `i`) bi-match?
    ///
    /// Order-isomorphism is checked pairwise, which is equivalent to comparing
    /// reductions and avoids allocating.
    fn bi_matches_window(&self, sigma: &[u32], word: &[u32], i: usize) -> bool {
        let j = self.len();
        for a in 0..j {
            for b in a + 1..j {
                if sigma[i + a].cmp(&sigma[i + b]) != self.tau[a].cmp(&self.tau[b])
                    || word[i + a].cmp(&word[i + b]) != self.u[a].cmp(&self.u[b])
                {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t: Vec<String> = self.tau.iter().map(u32::to_string).collect();
        let u: Vec<String> = self.u.iter().map(u32::to_string).collect();
        write!(f, "({}, {})", t.join(" "), u.join(" "))
    }
}

/// A nonempty set of patterns of one common length.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PatternSet {
    len: usize,
    patterns: BTreeSet<Pattern>,
}

impl PatternSet {
    pub fn new<I: IntoIterator<Item = Pattern>>(patterns: I) -> Result<Self> {
        let patterns: BTreeSet<Pattern> = patterns.into_iter().collect();
        let len = patterns
            .iter()
            .next()
            .map(Pattern::len)
            .ok_or_else(|| Error::InvalidInput("pattern set is empty".into()))?;
        if patterns.iter().any(|p| p.len() != len) {
            return Err(Error::InvalidInput("patterns have different lengths".into()));
        }
        Ok(Self { len, patterns })
    }

    fn from_pairs(pairs: &[([u32; 2], [u32; 2])]) -> Self {
        Self::new(
            pairs
                .iter()
                .map(|(t, u)| Pattern::new(t.to_vec(), u.to_vec()).expect("built-in pattern")),
        )
        .expect("built-in pattern set")
    }

    /// `{(1 2, 0 0), (1 2, 0 1)}`: rises.
    pub fn rises() -> Self {
        Self::from_pairs(&[([1, 2], [0, 0]), ([1, 2], [0, 1])])
    }

    /// `{(1 2, 0 0)}`: weak rises.
    pub fn weak_rises() -> Self {
        Self::from_pairs(&[([1, 2], [0, 0])])
    }

    /// `{(1 2, 0 1)}`: strict rises.
    pub fn strict_rises() -> Self {
        Self::from_pairs(&[([1, 2], [0, 1])])
    }

    /// `{(1 2, 0 1), (1 2, 1 0)}`: rises of σ with unequal adjacent letters.
    pub fn distinct_rises() -> Self {
        Self::from_pairs(&[([1, 2], [0, 1]), ([1, 2], [1, 0])])
    }

    /// `{(2 1, 0 0), (2 1, 1 0)}`: descents.
    pub fn descents() -> Self {
        Self::from_pairs(&[([2, 1], [0, 0]), ([2, 1], [1, 0])])
    }

    pub fn pattern_len(&self) -> usize {
        self.len
    }

    pub fn patterns(&self) -> impl Iterator<Item = &Pattern> {
        self.patterns.iter()
    }

    pub fn contains(&self, p: &Pattern) -> bool {
        self.patterns.contains(p)
    }

    /// Is there a bi-match starting at 0-based index `i`?
    pub(crate) fn matches_at(&self, sigma: &[u32], word: &[u32], i: usize) -> bool {
        i + self.len <= sigma.len()
            && self.patterns.iter().any(|p| p.bi_matches_window(sigma, word, i))
    }

    /// 0-based match starts, ascending.
    pub(crate) fn starts_raw<'a>(
        &'a self,
        sigma: &'a [u32],
        word: &'a [u32],
    ) -> impl Iterator<Item = usize> + 'a {
        let upper = (sigma.len() + 1).saturating_sub(self.len);
        (0..upper).filter(move |&i| self.matches_at(sigma, word, i))
    }
}

fn is_permutation(s: &[u32]) -> bool {
    let n = s.len();
    let mut seen = vec![false; n + 1];
    for &v in s {
        let v = v as usize;
        if v == 0 || v > n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

/// Relabel distinct integers order-isomorphically onto `1..n`.
pub fn reduce_perm(s: &[i64]) -> Result<Vec<u32>> {
    let mut sorted = s.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidInput(format!("{s:?} has repeated entries")));
    }
    Ok(s
        .iter()
        .map(|v| sorted.binary_search(v).expect("present") as u32 + 1)
        .collect())
}

/// Relabel a word order-isomorphically onto `0..d`, ties kept.
pub fn reduce_word(w: &[i64]) -> Vec<u32> {
    let mut distinct = w.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    w.iter()
        .map(|v| distinct.binary_search(v).expect("present") as u32)
        .collect()
}

/// 1-based positions `i` at which `g` has a bi-match from `ps`.
pub fn bi_match_starts(g: &SignedPermutation, ps: &PatternSet) -> Vec<usize> {
    let n = g.n();
    let upper = (n + 1).saturating_sub(ps.len);
    (0..upper)
        .filter(|&i| ps.matches_at(&g.sigma, &g.word, i))
        .map(|i| i + 1)
        .collect()
}

/// Calls `f` on every strictly increasing `j`-subset of `0..n`.
fn for_each_subset(n: usize, j: usize, mut f: impl FnMut(&[usize])) {
    if j > n {
        return;
    }
    let mut idx: Vec<usize> = (0..j).collect();
    loop {
        f(&idx);
        // advance to the next combination
        let mut t = j;
        loop {
            if t == 0 {
                return;
            }
            t -= 1;
            if idx[t] != t + n - j {
                break;
            }
            if t == 0 {
                return;
            }
        }
        idx[t] += 1;
        for s in t + 1..j {
            idx[s] = idx[s - 1] + 1;
        }
    }
}

fn order_matches(values: impl Fn(usize) -> u32, pattern: &[u32], idx: &[usize]) -> bool {
    for a in 0..idx.len() {
        for b in a + 1..idx.len() {
            if values(idx[a]).cmp(&values(idx[b])) != pattern[a].cmp(&pattern[b]) {
                return false;
            }
        }
    }
    true
}

/// Number of index subsets `i_1 < ... < i_j` carrying a bi-occurrence of `p`.
pub fn count_bi_occurrences(g: &SignedPermutation, p: &Pattern) -> u64 {
    let mut count = 0;
    if p.is_empty() {
        return 1;
    }
    for_each_subset(g.n(), p.len(), |idx| {
        if order_matches(|i| g.sigma[i], &p.tau, idx) && order_matches(|i| g.word[i], &p.u, idx) {
            count += 1;
        }
    });
    count
}

/// Occurrences in the exact-sign sense: the permutation part reduces to `τ`
/// and the letters equal `u` verbatim.
pub fn exact_occurrence_count(g: &SignedPermutation, p: &Pattern) -> u64 {
    let mut count = 0;
    if p.is_empty() {
        return 1;
    }
    for_each_subset(g.n(), p.len(), |idx| {
        if order_matches(|i| g.sigma[i], &p.tau, idx)
            && idx.iter().zip(&p.u).all(|(&i, &c)| g.word[i] == c)
        {
            count += 1;
        }
    });
    count
}

/// 1-based starts of exact-sign matches of `p`.
pub fn exact_match_starts(g: &SignedPermutation, p: &Pattern) -> Vec<usize> {
    let j = p.len();
    let upper = (g.n() + 1).saturating_sub(j);
    (0..upper)
        .filter(|&i| {
            let idx: Vec<usize> = (i..i + j).collect();
            order_matches(|t| g.sigma[t], &p.tau, &idx) && (0..j).all(|a| g.word[i + a] == p.u[a])
        })
        .map(|i| i + 1)
        .collect()
}

/// Per-element statistics.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stats {
    pub inv: u32,
    pub coinv: u32,
    pub norm_w: u32,
    pub des: u32,
    pub ris: u32,
    pub wdes: u32,
    pub wris: u32,
    pub sdes: u32,
    pub sris: u32,
}

pub(crate) fn inversions(sigma: &[u32]) -> (u32, u32) {
    let mut inv = 0;
    let mut coinv = 0;
    for a in 0..sigma.len() {
        for b in a + 1..sigma.len() {
            if sigma[a] > sigma[b] {
                inv += 1;
            } else {
                coinv += 1;
            }
        }
    }
    (inv, coinv)
}

pub fn stats(g: &SignedPermutation) -> Stats {
    let (inv, coinv) = inversions(&g.sigma);
    let mut s = Stats { inv, coinv, norm_w: g.word.iter().sum(), ..Stats::default() };
    for i in 0..g.n().saturating_sub(1) {
        let up = g.sigma[i] < g.sigma[i + 1];
        let wc = g.word[i].cmp(&g.word[i + 1]);
        if up {
            s.ris += u32::from(wc != Ordering::Greater);
            s.wris += u32::from(wc == Ordering::Equal);
            s.sris += u32::from(wc == Ordering::Less);
        } else {
            s.des += u32::from(wc != Ordering::Less);
            s.wdes += u32::from(wc == Ordering::Equal);
            s.sdes += u32::from(wc == Ordering::Greater);
        }
    }
    s
}

/// Greedy scan for match starts (0-based) pairwise at least `j` apart.
pub(crate) fn nlap_raw(sigma: &[u32], word: &[u32], ps: &PatternSet) -> u32 {
    let j = ps.len;
    let n = sigma.len();
    let mut count = 0;
    let mut i = 0;
    while i + j <= n {
        if ps.matches_at(sigma, word, i) {
            count += 1;
            i += j;
        } else {
            i += 1;
        }
    }
    count
}

/// Maximum number of pairwise non-overlapping bi-matches.
pub fn nlap(g: &SignedPermutation, ps: &PatternSet) -> usize {
    nlap_raw(&g.sigma, &g.word, ps) as usize
}

/// The coordinate maps of `φ_{a,b}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Transform {
    Identity,
    Reverse,
    Complement,
}

/// `φ_{a,b}((σ, w)) = (σ^a, w^b)`.
pub fn reverse_complement(g: &SignedPermutation, a: Transform, b: Transform) -> SignedPermutation {
    let n = g.n() as u32;
    let sigma = match a {
        Transform::Identity => g.sigma.clone(),
        Transform::Reverse => g.sigma.iter().rev().copied().collect(),
        Transform::Complement => g.sigma.iter().map(|&s| n + 1 - s).collect(),
    };
    let word = match b {
        Transform::Identity => g.word.clone(),
        Transform::Reverse => g.word.iter().rev().copied().collect(),
        Transform::Complement => g.word.iter().map(|&c| g.k - 1 - c).collect(),
    };
    SignedPermutation { sigma, word, k: g.k }
}

/// Ordinary descents of a permutation.
pub fn descents(sigma: &[u32]) -> usize {
    sigma.windows(2).filter(|w| w[0] > w[1]).count()
}

/// Advance to the lexicographically next arrangement; `false` after the last.
pub fn next_permutation<T: Ord>(s: &mut [T]) -> bool {
    let n = s.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && s[i - 1] >= s[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while s[j] <= s[i - 1] {
        j -= 1;
    }
    s.swap(i - 1, j);
    s[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(s: &[u32], w: &[u32], k: u32) -> SignedPermutation {
        SignedPermutation::new(s.to_vec(), w.to_vec(), k).unwrap()
    }

    fn pat(t: &[u32], u: &[u32]) -> Pattern {
        Pattern::new(t.to_vec(), u.to_vec()).unwrap()
    }

    #[test]
    fn reductions() {
        assert_eq!(reduce_perm(&[2, 7, 5, 4]).unwrap(), vec![1, 4, 3, 2]);
        assert_eq!(reduce_perm(&[1, 2, 3]).unwrap(), vec![1, 2, 3]);
        assert_eq!(reduce_perm(&[9, 3]).unwrap(), vec![2, 1]);
        assert!(matches!(reduce_perm(&[1, 1]), Err(Error::InvalidInput(_))));
        assert_eq!(reduce_word(&[2, 7, 2, 4, 7]), vec![0, 2, 0, 1, 2]);
        assert_eq!(reduce_word(&[0, 0, 0]), vec![0, 0, 0]);
        assert_eq!(reduce_word(&[5, 1, 5]), vec![1, 0, 1]);
    }

    #[test]
    fn construction_errors() {
        assert!(SignedPermutation::new(vec![1, 1], vec![0, 0], 2).is_err());
        assert!(SignedPermutation::new(vec![1, 2], vec![0, 2], 2).is_err());
        assert!(SignedPermutation::new(vec![1, 2], vec![0], 2).is_err());
        assert!(SignedPermutation::new(vec![], vec![], 0).is_err());
        assert!(Pattern::new(vec![1, 2], vec![0, 2]).is_err());
        assert!(PatternSet::new(Vec::new()).is_err());
        assert!(PatternSet::new([pat(&[1, 2], &[0, 0]), pat(&[1], &[0])]).is_err());
    }

    #[test]
    fn bi_matches() {
        let g = sp(&[1, 3, 2, 4], &[1, 2, 2, 2], 3);
        let w = PatternSet::weak_rises();
        assert_eq!(bi_match_starts(&g, &w), vec![3]);
        assert_eq!(bi_match_starts(&sp(&[1], &[0], 2), &PatternSet::rises()), Vec::<usize>::new());
        assert_eq!(bi_match_starts(&sp(&[1, 2, 3], &[0, 0, 0], 2), &PatternSet::rises()), vec![1, 2]);
    }

    #[test]
    fn bi_occurrences() {
        let p = pat(&[1, 2], &[0, 0]);
        assert_eq!(count_bi_occurrences(&sp(&[1, 3, 2, 4], &[1, 2, 2, 2], 3), &p), 2);
        assert_eq!(count_bi_occurrences(&sp(&[1], &[0], 2), &p), 0);
        assert_eq!(count_bi_occurrences(&sp(&[1, 2, 3], &[0, 0, 0], 1), &p), 3);
    }

    #[test]
    fn exact_matches() {
        let p = pat(&[1, 2], &[0, 0]);
        let g = sp(&[1, 3, 2, 4], &[1, 2, 2, 2], 3);
        assert_eq!(exact_occurrence_count(&g, &p), 0);
        assert!(exact_match_starts(&g, &p).is_empty());
        assert_eq!(exact_occurrence_count(&sp(&[1, 2], &[0, 0], 2), &p), 1);
        assert_eq!(exact_occurrence_count(&sp(&[1, 2, 3], &[0, 0, 1], 2), &p), 1);
        assert_eq!(exact_match_starts(&sp(&[1, 2, 3], &[0, 0, 1], 2), &p), vec![1]);
    }

    #[test]
    fn statistics() {
        let s = stats(&sp(&[1, 4, 3, 2], &[0, 0, 0, 0], 1));
        assert_eq!((s.inv, s.coinv, s.norm_w, s.wris), (3, 3, 0, 1));
        let s = stats(&sp(&[1, 3, 2, 4], &[1, 2, 2, 2], 3));
        assert_eq!(s.ris, 2);
        for n in 0..6u32 {
            let id: Vec<u32> = (1..=n).collect();
            let s = stats(&sp(&id, &vec![0; n as usize], 2));
            let rises = n.saturating_sub(1);
            assert_eq!((s.inv, s.des, s.sdes, s.sris), (0, 0, 0, 0));
            assert_eq!((s.wris, s.ris), (rises, rises));
        }
        assert_eq!(stats(&SignedPermutation::empty(3)), Stats::default());
    }

    #[test]
    fn non_overlapping() {
        let r = PatternSet::rises();
        assert_eq!(nlap(&sp(&[1, 2, 3], &[0, 0, 0], 2), &r), 1);
        assert_eq!(nlap(&sp(&[1, 2, 3, 4], &[0, 0, 0, 0], 2), &r), 2);
        assert_eq!(nlap(&sp(&[2, 1], &[0, 0], 2), &r), 0);
    }

    #[test]
    fn transforms() {
        use Transform::*;
        let g = sp(&[1, 3, 2], &[0, 1, 1], 2);
        assert_eq!(reverse_complement(&g, Reverse, Reverse), sp(&[2, 3, 1], &[1, 1, 0], 2));
        assert_eq!(reverse_complement(&g, Complement, Complement), sp(&[3, 1, 2], &[1, 0, 0], 2));
        let one = sp(&[1], &[0], 1);
        assert_eq!(reverse_complement(&one, Complement, Complement), one);
    }

    #[test]
    fn permutation_iteration() {
        let mut s = vec![1, 2, 3];
        let mut count = 1;
        while next_permutation(&mut s) {
            count += 1;
        }
        assert_eq!(count, 6);
        assert_eq!(descents(&[3, 1, 2]), 1);
    }

    #[test]
    fn subsets() {
        let mut seen = Vec::new();
        for_each_subset(4, 2, |idx| seen.push(idx.to_vec()));
        assert_eq!(seen.len(), 6);
        let mut none = 0;
        for_each_subset(1, 2, |_| none += 1);
        assert_eq!(none, 0);
        let mut full = 0;
        for_each_subset(3, 3, |_| full += 1);
        assert_eq!(full, 1);
    }
}
