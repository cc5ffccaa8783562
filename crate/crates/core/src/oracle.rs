//! Brute-force enumeration of `C_k ≀ S_n`.
//!
//! Work is split by the first letters of `σ` and `w` and spread over the
//! rayon pool. Each worker sums into a private map; maps are merged into a
//! [`MultiPoly`], so results do not depend on the thread count.

use std::collections::HashMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::algebra::{factorial, Assignment, Monomial, MultiPoly, Var};
use crate::error::{Error, Result};
use crate::genfun::Family;
use crate::signed::{
    count_bi_occurrences, exact_occurrence_count, inversions, next_permutation, nlap_raw, Pattern,
    PatternSet, SignedPermutation,
};

/// Largest `k^n n!` enumerated without an explicit override.
pub const GUARD_LIMIT: u128 = 500_000_000;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OracleOptions {
    /// Enumerate past [`GUARD_LIMIT`].
    pub override_guard: bool,
    /// Keep `p` symbolic even for `n ≥ 6`.
    pub full_p: bool,
}

pub fn size(n: usize, k: u32) -> u128 {
    let f = (1..=n as u128).product::<u128>();
    u128::from(k).saturating_pow(n as u32).saturating_mul(f)
}

fn guard(n: usize, k: u32, opts: &OracleOptions) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidInput("alphabet size k must be at least 1".into()));
    }
    let s = size(n, k);
    if s > GUARD_LIMIT && !opts.override_guard {
        return Err(Error::GuardExceeded { size: s, limit: GUARD_LIMIT });
    }
    Ok(())
}

/// Lexicographic enumeration in `(σ, w)`.
pub struct Elements {
    n: usize,
    k: u32,
    sigma: Vec<u32>,
    word: Vec<u32>,
    done: bool,
}

impl Iterator for Elements {
    type Item = SignedPermutation;

    fn next(&mut self) -> Option<SignedPermutation> {
        if self.done {
            return None;
        }
        let item = SignedPermutation::from_parts_unchecked(self.sigma.clone(), self.word.clone(), self.k);
        if !advance_word(&mut self.word, self.k) && !next_permutation(&mut self.sigma) {
            self.done = true;
        }
        Some(item)
    }
}

/// Odometer step over `{0..k-1}^n`; resets to zeros and returns `false`
/// after the last word.
fn advance_word(word: &mut [u32], k: u32) -> bool {
    for c in word.iter_mut().rev() {
        if *c + 1 < k {
            *c += 1;
            return true;
        }
        *c = 0;
    }
    false
}

pub fn enumerate(n: usize, k: u32, opts: &OracleOptions) -> Result<Elements> {
    guard(n, k, opts)?;
    Ok(Elements {
        n,
        k,
        sigma: (1..=n as u32).collect(),
        word: vec![0; n],
        done: false,
    })
}

impl Elements {
    pub fn n(&self) -> usize {
        self.n
    }
}

/// Calls `f` on every element whose `σ_1 = a` and `w_1 = b` (any element
/// when `n = 0`).
fn for_each_in_block(n: usize, k: u32, a: u32, b: u32, mut f: impl FnMut(&[u32], &[u32])) {
    if n == 0 {
        f(&[], &[]);
        return;
    }
    let mut sigma: Vec<u32> = std::iter::once(a)
        .chain((1..=n as u32).filter(|&v| v != a))
        .collect();
    loop {
        let mut word = vec![0; n];
        word[0] = b;
        loop {
            f(&sigma, &word);
            if !advance_word(&mut word[1..], k) {
                break;
            }
        }
        if !next_permutation(&mut sigma[1..]) {
            break;
        }
    }
}

fn blocks(n: usize, k: u32) -> Vec<(u32, u32)> {
    if n == 0 {
        return vec![(0, 0)];
    }
    (1..=n as u32).flat_map(|a| (0..k).map(move |b| (a, b))).collect()
}

/// Variables fixed at 1 are dropped while summing; other fixed values are
/// substituted at the end.
fn accumulate<F>(n: usize, k: u32, spec: &Assignment, opts: &OracleOptions, stat: F) -> Result<MultiPoly>
where
    F: Fn(&[u32], &[u32]) -> Option<u32> + Sync,
{
    guard(n, k, opts)?;
    let keep = Var::ALL.map(|v| spec.get(v) != Some(1));
    let maps: Vec<HashMap<[u32; 4], u64>> = blocks(n, k)
        .into_par_iter()
        .map(|(a, b)| {
            let mut map: HashMap<[u32; 4], u64> = HashMap::new();
            for_each_in_block(n, k, a, b, |sigma, word| {
                if let Some(x) = stat(sigma, word) {
                    let (inv, coinv) = inversions(sigma);
                    let norm: u32 = word.iter().sum();
                    let e = [coinv, inv, norm, x];
                    let key = std::array::from_fn(|i| if keep[i] { e[i] } else { 0 });
                    *map.entry(key).or_insert(0) += 1;
                }
            });
            map
        })
        .collect();
    let mut poly = MultiPoly::zero();
    for map in maps {
        for (e, c) in map {
            poly.add_term(Monomial(e), BigInt::from(c));
        }
    }
    Ok(poly.substitute(spec))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Stat {
    /// number of bi-matches
    Mch,
    /// maximum number of non-overlapping bi-matches
    Nlap,
}

/// `Σ q^inv p^coinv r^{||w||} x^{stat}` over `C_k ≀ S_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Distribution {
    pub n: usize,
    pub k: u32,
    /// Variables already substituted into `poly`.
    pub spec: Assignment,
    pub poly: MultiPoly,
}

/// Default specialization: `p = 1` from `n = 6` on unless `full_p` is set.
pub fn default_spec(n: usize, opts: &OracleOptions) -> Assignment {
    if n >= 6 && !opts.full_p {
        Assignment::none().with(Var::P, 1)
    } else {
        Assignment::none()
    }
}

pub fn distribution(n: usize, k: u32, ps: &PatternSet, stat: Stat, opts: &OracleOptions) -> Result<Distribution> {
    distribution_at(n, k, ps, stat, &default_spec(n, opts), opts)
}

pub fn distribution_at(
    n: usize,
    k: u32,
    ps: &PatternSet,
    stat: Stat,
    spec: &Assignment,
    opts: &OracleOptions,
) -> Result<Distribution> {
    let poly = match stat {
        Stat::Mch => accumulate(n, k, spec, opts, |s, w| Some(ps.starts_raw(s, w).count() as u32))?,
        Stat::Nlap => accumulate(n, k, spec, opts, |s, w| Some(nlap_raw(s, w, ps)))?,
    };
    Ok(Distribution { n, k, spec: *spec, poly })
}

/// Shapes of the set of match starts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MatchShape {
    /// one match, starting at `n - 1`
    ExactlyEnd,
    /// starts are exactly `{s, s+1}`
    UShape,
    /// exactly two starts `{i, j}` with `i + 2 ≤ j`
    VShape,
}

fn has_shape(sigma: &[u32], word: &[u32], ps: &PatternSet, shape: MatchShape) -> bool {
    let mut starts = [0usize; 3];
    let mut m = 0;
    for i in ps.starts_raw(sigma, word) {
        if m == 3 {
            return false;
        }
        starts[m] = i;
        m += 1;
    }
    let n = sigma.len();
    match shape {
        MatchShape::ExactlyEnd => m == 1 && starts[0] + 2 == n,
        MatchShape::UShape => m == 2 && starts[1] == starts[0] + 1,
        MatchShape::VShape => m == 2 && starts[1] >= starts[0] + 2,
    }
}

/// `Σ q^inv p^coinv r^{||w||}` over elements whose match starts have `shape`.
pub fn shape_distribution(
    n: usize,
    k: u32,
    ps: &PatternSet,
    shape: MatchShape,
    spec: &Assignment,
    opts: &OracleOptions,
) -> Result<MultiPoly> {
    accumulate(n, k, &spec.without(Var::X), opts, |s, w| has_shape(s, w, ps, shape).then_some(0))
}

/// `B`-series coefficients and `U_{n,k}`, `V_{n,k}`.
pub fn count_with_match_sets(n: usize, k: u32, f: Family, shape: MatchShape, opts: &OracleOptions) -> Result<BigInt> {
    shape_distribution(n, k, &f.pattern_set(), shape, &Assignment::all_ones(), opts)?
        .evaluate(&Assignment::all_ones())
}

fn count_where<F>(n: usize, k: u32, opts: &OracleOptions, keep: F) -> Result<BigInt>
where
    F: Fn(&SignedPermutation) -> bool + Sync,
{
    accumulate(n, k, &Assignment::all_ones(), opts, |s, w| {
        let g = SignedPermutation::from_parts_unchecked(s.to_vec(), w.to_vec(), k);
        keep(&g).then_some(0)
    })?
    .evaluate(&Assignment::all_ones())
}

/// Elements with no exact-sign occurrence of any listed pattern.
pub fn avoid_count_exact(n: usize, k: u32, patterns: &[Pattern], opts: &OracleOptions) -> Result<BigInt> {
    count_where(n, k, opts, |g| patterns.iter().all(|p| exact_occurrence_count(g, p) == 0))
}

/// Elements with no bi-occurrence of any listed pattern.
pub fn bi_avoid_count(n: usize, k: u32, patterns: &[Pattern], opts: &OracleOptions) -> Result<BigInt> {
    count_where(n, k, opts, |g| patterns.iter().all(|p| count_bi_occurrences(g, p) == 0))
}

/// `k^n n!`.
pub fn total_mass(n: usize, k: u32) -> BigInt {
    BigInt::from(k).pow(n as u32) * factorial(n as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts() -> OracleOptions {
        OracleOptions::default()
    }

    fn pat(t: &[u32], u: &[u32]) -> Pattern {
        Pattern::new(t.to_vec(), u.to_vec()).unwrap()
    }

    #[test]
    fn enumeration_sizes() {
        assert_eq!(enumerate(1, 2, &opts()).unwrap().count(), 2);
        assert_eq!(enumerate(2, 2, &opts()).unwrap().count(), 8);
        assert_eq!(enumerate(3, 3, &opts()).unwrap().count(), 162);
        assert_eq!(enumerate(0, 3, &opts()).unwrap().count(), 1);
        let all: Vec<_> = enumerate(2, 2, &opts()).unwrap().collect();
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted, all);
        assert!(matches!(enumerate(9, 6, &opts()), Err(Error::GuardExceeded { .. })));
    }

    #[test]
    fn distributions() {
        let at0 = Assignment::all_ones().with(Var::X, 0);
        let d = distribution(2, 2, &PatternSet::rises(), Stat::Mch, &opts()).unwrap();
        assert_eq!(d.poly.evaluate(&at0).unwrap(), 5.into());
        assert_eq!(d.poly.evaluate(&Assignment::all_ones()).unwrap(), 8.into());
        let d = distribution(5, 3, &PatternSet::distinct_rises(), Stat::Mch, &opts()).unwrap();
        assert_eq!(d.poly.evaluate(&at0).unwrap(), 4368.into());
    }

    #[test]
    fn match_sets() {
        let c = |n, k, f, s| i64::try_from(count_with_match_sets(n, k, f, s, &opts()).unwrap()).unwrap();
        assert_eq!(c(3, 2, Family::R, MatchShape::UShape), 4);
        assert_eq!(c(4, 4, Family::W, MatchShape::UShape), 120);
        assert_eq!(c(3, 3, Family::R, MatchShape::VShape), 0);
        assert_eq!(c(2, 2, Family::R, MatchShape::ExactlyEnd), 3);
    }

    #[test]
    fn avoidance() {
        let p = pat(&[1, 2], &[0, 0]);
        assert_eq!(bi_avoid_count(1, 3, std::slice::from_ref(&p), &opts()).unwrap(), 3.into());
        assert_eq!(bi_avoid_count(2, 2, std::slice::from_ref(&p), &opts()).unwrap(), 6.into());
        let r = [p.clone(), pat(&[1, 2], &[0, 1])];
        assert_eq!(bi_avoid_count(2, 2, &r, &opts()).unwrap(), 5.into());
        assert_eq!(avoid_count_exact(2, 2, &[p], &opts()).unwrap(), 7.into());
    }
}
