//! Brick tabloids of shape `(n)`, the `h`-to-`e` transition, evaluation of
//! ring homomorphisms on `h_n`, and the sign-reversing involutions on
//! filled labelled brick tabloids.

use std::collections::BTreeMap;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{factorial, gauss_binom_r, pq_multinom, Monomial, MultiPoly, Var};
use crate::error::{Error, Result};
use crate::genfun::{family_weight, Family};
use crate::signed::{inversions, next_permutation};

/// A composition `(b_1, ..., b_ℓ)` of `n`: bricks laid left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BrickTabloid {
    bricks: Vec<u32>,
}

impl BrickTabloid {
    pub fn new(bricks: Vec<u32>) -> Result<Self> {
        if bricks.contains(&0) {
            return Err(Error::InvalidInput("bricks must have length at least 1".into()));
        }
        Ok(Self { bricks })
    }

    pub fn bricks(&self) -> &[u32] {
        &self.bricks
    }

    pub fn n(&self) -> usize {
        self.bricks.iter().sum::<u32>() as usize
    }

    pub fn len(&self) -> usize {
        self.bricks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bricks.is_empty()
    }

    /// 0-based index of the last cell of each brick.
    fn ends(&self) -> Vec<usize> {
        let mut acc = 0usize;
        self.bricks
            .iter()
            .map(|&b| {
                acc += b as usize;
                acc - 1
            })
            .collect()
    }

    /// Index of the brick containing 0-based `cell`, with its cell range.
    fn locate(&self, cell: usize) -> (usize, usize, usize) {
        let mut start = 0usize;
        for (j, &b) in self.bricks.iter().enumerate() {
            let end = start + b as usize;
            if cell < end {
                return (j, start, end);
            }
            start = end;
        }
        panic!("cell {cell} outside a tabloid of size {start}");
    }
}

/// All compositions of `n`, in lexicographic order.
pub fn compositions(n: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Partitions of `n` as weakly decreasing part lists.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=n.min(max)).rev() {
            prefix.push(part);
            go(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

fn check_partition(mu: &[u32], n: u32) -> Result<()> {
    if mu.contains(&0) || mu.iter().sum::<u32>() != n {
        return Err(Error::InvalidInput(format!("{mu:?} is not a partition of {n}")));
    }
    Ok(())
}

/// Every brick tabloid of shape `(n)` whose brick lengths rearrange `mu`.
pub fn enumerate_tabloids(mu: &[u32], n: u32) -> Result<Vec<BrickTabloid>> {
    check_partition(mu, n)?;
    let mut parts = mu.to_vec();
    parts.sort_unstable();
    let mut out = Vec::new();
    loop {
        out.push(BrickTabloid { bricks: parts.clone() });
        if !next_permutation(&mut parts) {
            break;
        }
    }
    Ok(out)
}

/// `B_{μ,n}`: `ℓ! / Π m_i!` over the part multiplicities `m_i`.
pub fn count_tabloids(mu: &[u32], n: u32) -> Result<BigInt> {
    check_partition(mu, n)?;
    let mut mult: BTreeMap<u32, u64> = BTreeMap::new();
    for &p in mu {
        *mult.entry(p).or_insert(0) += 1;
    }
    let den = mult.values().fold(BigInt::one(), |acc, &m| acc * factorial(m));
    Ok(factorial(mu.len() as u64) / den)
}

/// `h_n = Σ_{μ ⊢ n} (-1)^{n-ℓ(μ)} B_{μ,n} e_μ`.
pub fn h_in_e(n: u32) -> BTreeMap<Vec<u32>, BigInt> {
    partitions(n)
        .into_iter()
        .map(|mu| {
            let c = count_tabloids(&mu, n).expect("generated partition");
            let sign = if (n as usize - mu.len()).is_multiple_of(2) { c } else { -c };
            (mu, sign)
        })
        .collect()
}

/// `[n]_{p,q}! ξ(h_n)` for the homomorphism `ξ` given by normalized
/// images `e_images(b) = [b]_{p,q}! ξ(e_b)`, `b ≥ 1`.
pub fn apply_hom(e_images: &dyn Fn(u32) -> Option<MultiPoly>, n: u32) -> Result<MultiPoly> {
    let images: Vec<MultiPoly> = (1..=n)
        .map(|b| e_images(b).ok_or_else(|| Error::InvalidInput(format!("no image for e_{b}"))))
        .collect::<Result<_>>()?;
    let mut total = MultiPoly::zero();
    for (mu, c) in h_in_e(n) {
        let prod = mu
            .iter()
            .fold(MultiPoly::one(), |acc, &b| &acc * &images[b as usize - 1]);
        total += &(&pq_multinom(n, &mu)? * &prod).scale(c);
    }
    Ok(total)
}

/// `[b]_{p,q}! Γ(e_b) = (-1)^{b-1} (x-1)^{b-1} p^{binom(b,2)} C_b` for the
/// homomorphism behind `D` of family `f`.
pub fn family_e_image(f: Family, k: u32, b: u32) -> Result<MultiPoly> {
    let x_minus_1 = MultiPoly::var(Var::X) - MultiPoly::one();
    let sign = if b % 2 == 1 { 1 } else { -1 };
    let p = MultiPoly::var_pow(Var::P, b * (b - 1) / 2);
    Ok((&(&x_minus_1.pow(b - 1) * &p) * &family_weight(f, b, k)?).scale(sign))
}

/// Cell labels of the family objects.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Label {
    X,
    One,
    MinusOne,
}

/// The constraint on letters inside one brick.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WordRule {
    WeaklyIncreasing,
    Constant,
    StrictlyIncreasing,
    AdjacentDistinct,
    /// no word at all (the word-free objects)
    Unconstrained,
}

impl WordRule {
    pub fn of(f: Family) -> WordRule {
        match f {
            Family::R => WordRule::WeaklyIncreasing,
            Family::W => WordRule::Constant,
            Family::S => WordRule::StrictlyIncreasing,
            Family::D => WordRule::AdjacentDistinct,
        }
    }

    fn allows(self, a: u32, b: u32) -> bool {
        match self {
            WordRule::WeaklyIncreasing => a <= b,
            WordRule::Constant => a == b,
            WordRule::StrictlyIncreasing => a < b,
            WordRule::AdjacentDistinct => a != b,
            WordRule::Unconstrained => true,
        }
    }

    fn holds(self, w: &[u32]) -> bool {
        w.windows(2).all(|p| self.allows(p[0], p[1]))
    }

    /// Every word of length `len` over `{0..k-1}` obeying the rule.
    fn words(self, len: usize, k: u32) -> Vec<Vec<u32>> {
        if len == 0 {
            return vec![Vec::new()];
        }
        let mut out: Vec<Vec<u32>> = (0..k).map(|c| vec![c]).collect();
        for _ in 1..len {
            out = out
                .into_iter()
                .flat_map(|w| {
                    let last = *w.last().expect("nonempty");
                    (0..k).filter(move |&c| self.allows(last, c)).map(move |c| {
                        let mut v = w.clone();
                        v.push(c);
                        v
                    })
                })
                .collect();
        }
        out
    }
}

/// Outcome of one scan of the involution.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Step {
    Split(usize),
    Merge(usize),
    Fixed,
}

/// The common scan: leftmost cell `t` that is negatively labelled (split
/// after `t`) or ends a brick whose union with the next brick keeps `σ`
/// strictly increasing and the word admissible (merge).
fn scan(t: &BrickTabloid, sigma: &[u32], word: Option<&[u32]>, rule: WordRule, negative: impl Fn(usize) -> bool) -> Step {
    let ends = t.ends();
    let mut brick = 0usize;
    let mut start = 0usize;
    for cell in 0..sigma.len() {
        if negative(cell) {
            return Step::Split(cell);
        }
        if cell == ends[brick] {
            if brick + 1 < ends.len() {
                let stop = ends[brick + 1] + 1;
                let sigma_ok = sigma[start..stop].windows(2).all(|p| p[0] < p[1]);
                let word_ok = word.is_none_or(|w| rule.holds(&w[start..stop]));
                if sigma_ok && word_ok {
                    return Step::Merge(cell);
                }
            }
            brick += 1;
            start = cell + 1;
        }
    }
    Step::Fixed
}

fn split_bricks(t: &BrickTabloid, cell: usize) -> BrickTabloid {
    let (j, start, _) = t.locate(cell);
    let left = (cell - start + 1) as u32;
    let mut bricks = t.bricks.clone();
    let right = bricks[j] - left;
    bricks[j] = left;
    bricks.insert(j + 1, right);
    BrickTabloid { bricks }
}

fn merge_bricks(t: &BrickTabloid, cell: usize) -> BrickTabloid {
    let (j, _, _) = t.locate(cell);
    let mut bricks = t.bricks.clone();
    let right = bricks.remove(j + 1);
    bricks[j] += right;
    BrickTabloid { bricks }
}

/// A brick tabloid with a permutation filling, a word filling and cell
/// labels, for one of the four families.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FilledTabloid {
    tabloid: BrickTabloid,
    sigma: Vec<u32>,
    word: Vec<u32>,
    labels: Vec<Label>,
    family: Family,
}

impl FilledTabloid {
    pub fn new(tabloid: BrickTabloid, sigma: Vec<u32>, word: Vec<u32>, labels: Vec<Label>, family: Family) -> Result<Self> {
        let n = tabloid.n();
        if sigma.len() != n || word.len() != n || labels.len() != n {
            return Err(Error::InvalidInput("filling sizes do not match the tabloid".into()));
        }
        let rule = WordRule::of(family);
        let ends = tabloid.ends();
        let mut start = 0;
        for &end in &ends {
            if !sigma[start..=end].windows(2).all(|p| p[0] < p[1]) {
                return Err(Error::InvalidInput("sigma must increase inside each brick".into()));
            }
            if !rule.holds(&word[start..=end]) {
                return Err(Error::InvalidInput(format!("word violates the {rule:?} rule")));
            }
            start = end + 1;
        }
        for (cell, &l) in labels.iter().enumerate() {
            let is_end = ends.contains(&cell);
            if is_end != (l == Label::One) {
                return Err(Error::InvalidInput("final cells carry 1, other cells x or -1".into()));
            }
        }
        Ok(Self { tabloid, sigma, word, labels, family })
    }

    pub fn tabloid(&self) -> &BrickTabloid {
        &self.tabloid
    }

    pub fn sigma(&self) -> &[u32] {
        &self.sigma
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// `w(C)`: `q^inv p^coinv r^{||w||} x^{#x}` (no `r` for family `d`).
    pub fn weight_monomial(&self) -> Monomial {
        let (inv, coinv) = inversions(&self.sigma);
        let r = if self.family.tracks_r() { self.word.iter().sum() } else { 0 };
        let x = self.labels.iter().filter(|&&l| l == Label::X).count() as u32;
        Monomial([coinv, inv, r, x])
    }

    /// `sgn(C)`: `-1` to the number of `-1` labels.
    pub fn sign(&self) -> i64 {
        let m = self.labels.iter().filter(|&&l| l == Label::MinusOne).count();
        if m % 2 == 0 {
            1
        } else {
            -1
        }
    }

    fn step(&self) -> Step {
        scan(&self.tabloid, &self.sigma, Some(&self.word), WordRule::of(self.family), |c| {
            self.labels[c] == Label::MinusOne
        })
    }

    pub fn is_fixed(&self) -> bool {
        self.step() == Step::Fixed
    }
}

/// `sgn(C) w(C)`.
pub fn signed_weight(c: &FilledTabloid) -> MultiPoly {
    MultiPoly::term(c.weight_monomial(), c.sign())
}

/// The family involution (`I`, `I_w`, `I_s` or `I_U`).
pub fn involution(c: &FilledTabloid) -> FilledTabloid {
    let mut out = c.clone();
    match c.step() {
        Step::Split(t) => {
            out.tabloid = split_bricks(&c.tabloid, t);
            out.labels[t] = Label::One;
        }
        Step::Merge(t) => {
            out.tabloid = merge_bricks(&c.tabloid, t);
            out.labels[t] = Label::MinusOne;
        }
        Step::Fixed => {}
    }
    out
}

/// Permutations of `1..n` increasing inside each brick.
fn increasing_fillings(t: &BrickTabloid) -> Vec<Vec<u32>> {
    let n = t.n();
    let ends = t.ends();
    let mut sigma: Vec<u32> = (1..=n as u32).collect();
    let mut out = Vec::new();
    loop {
        let mut start = 0;
        let ok = ends.iter().all(|&e| {
            let good = sigma[start..=e].windows(2).all(|p| p[0] < p[1]);
            start = e + 1;
            good
        });
        if ok {
            out.push(sigma.clone());
        }
        if !next_permutation(&mut sigma) {
            break;
        }
    }
    out
}

/// Calls `f` on every filled tabloid of size `n` for family `f`.
pub fn for_each_filled(n: u32, k: u32, family: Family, mut f: impl FnMut(&FilledTabloid)) {
    let rule = WordRule::of(family);
    for bricks in compositions(n) {
        let tabloid = BrickTabloid { bricks: bricks.clone() };
        let ends = tabloid.ends();
        let interior: Vec<usize> = (0..n as usize).filter(|c| !ends.contains(c)).collect();
        let per_brick: Vec<Vec<Vec<u32>>> = bricks.iter().map(|&b| rule.words(b as usize, k)).collect();
        let fillings = increasing_fillings(&tabloid);
        for word in concatenations(&per_brick) {
            for sigma in &fillings {
                for mask in 0u64..(1u64 << interior.len()) {
                    let mut labels = vec![Label::One; n as usize];
                    for (bit, &cell) in interior.iter().enumerate() {
                        labels[cell] = if mask >> bit & 1 == 1 { Label::MinusOne } else { Label::X };
                    }
                    f(&FilledTabloid {
                        tabloid: tabloid.clone(),
                        sigma: sigma.clone(),
                        word: word.clone(),
                        labels,
                        family,
                    });
                }
            }
        }
    }
}

/// Every concatenation of one choice from each list.
fn concatenations(choices: &[Vec<Vec<u32>>]) -> Vec<Vec<u32>> {
    choices.iter().fold(vec![Vec::new()], |acc, options| {
        acc.iter()
            .flat_map(|prefix| {
                options.iter().map(move |o| {
                    let mut v = prefix.clone();
                    v.extend_from_slice(o);
                    v
                })
            })
            .collect()
    })
}

pub fn enumerate_filled(n: u32, k: u32, family: Family) -> Vec<FilledTabloid> {
    let mut out = Vec::new();
    for_each_filled(n, k, family, |c| out.push(c.clone()));
    out
}

/// Signed-weight sums over all objects and over fixed points.
pub fn involution_sums(n: u32, k: u32, family: Family) -> (MultiPoly, MultiPoly) {
    let mut all: HashMap<Monomial, i64> = HashMap::new();
    let mut fixed: HashMap<Monomial, i64> = HashMap::new();
    for_each_filled(n, k, family, |c| {
        let m = c.weight_monomial();
        *all.entry(m).or_insert(0) += c.sign();
        if c.is_fixed() {
            *fixed.entry(m).or_insert(0) += c.sign();
        }
    });
    let to_poly = |map: HashMap<Monomial, i64>| MultiPoly::from_terms(map);
    (to_poly(all), to_poly(fixed))
}

/// Labels of the word-free objects.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum KLabel {
    K,
    MinusK,
    One,
}

/// A brick tabloid with a permutation filling and labels from `{k, -k, 1}`:
/// final cells carry `k`, other cells `1` or `-k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WordFreeTabloid {
    tabloid: BrickTabloid,
    sigma: Vec<u32>,
    labels: Vec<KLabel>,
}

impl WordFreeTabloid {
    pub fn tabloid(&self) -> &BrickTabloid {
        &self.tabloid
    }

    pub fn sigma(&self) -> &[u32] {
        &self.sigma
    }

    pub fn labels(&self) -> &[KLabel] {
        &self.labels
    }

    /// `(#k-labels, #(-k)-labels)`.
    fn label_counts(&self) -> (u32, u32) {
        let count = |l| self.labels.iter().filter(|&&x| x == l).count() as u32;
        (count(KLabel::K), count(KLabel::MinusK))
    }

    /// `sgn(C) w(C)` at a concrete `k`.
    pub fn signed_weight(&self, k: u32) -> BigInt {
        let (pos, neg) = self.label_counts();
        let w = BigInt::from(k).pow(pos + neg);
        if neg % 2 == 0 {
            w
        } else {
            -w
        }
    }

    fn step(&self) -> Step {
        scan(&self.tabloid, &self.sigma, None, WordRule::Unconstrained, |c| {
            self.labels[c] == KLabel::MinusK
        })
    }

    pub fn is_fixed(&self) -> bool {
        self.step() == Step::Fixed
    }
}

/// The involution `J` on word-free objects.
pub fn j_involution(c: &WordFreeTabloid) -> WordFreeTabloid {
    let mut out = c.clone();
    match c.step() {
        Step::Split(t) => {
            out.tabloid = split_bricks(&c.tabloid, t);
            out.labels[t] = KLabel::K;
        }
        Step::Merge(t) => {
            out.tabloid = merge_bricks(&c.tabloid, t);
            out.labels[t] = KLabel::MinusK;
        }
        Step::Fixed => {}
    }
    out
}

pub fn for_each_word_free(n: u32, mut f: impl FnMut(&WordFreeTabloid)) {
    for bricks in compositions(n) {
        let tabloid = BrickTabloid { bricks };
        let ends = tabloid.ends();
        let interior: Vec<usize> = (0..n as usize).filter(|c| !ends.contains(c)).collect();
        for sigma in increasing_fillings(&tabloid) {
            for mask in 0u64..(1u64 << interior.len()) {
                let mut labels = vec![KLabel::K; n as usize];
                for (bit, &cell) in interior.iter().enumerate() {
                    labels[cell] = if mask >> bit & 1 == 1 { KLabel::MinusK } else { KLabel::One };
                }
                f(&WordFreeTabloid { tabloid: tabloid.clone(), sigma: sigma.clone(), labels });
            }
        }
    }
}

/// `Σ_{σ ∈ IF(T)} q^inv p^coinv = p^{Σ binom(b_i,2)} [n]!/Π[b_i]!`.
pub fn lemma1_check(t: &BrickTabloid) -> bool {
    let mut lhs = MultiPoly::zero();
    for sigma in increasing_fillings(t) {
        let (inv, coinv) = inversions(&sigma);
        lhs.add_term(Monomial([coinv, inv, 0, 0]), BigInt::one());
    }
    let shift: u32 = t.bricks.iter().map(|&b| b * (b.saturating_sub(1)) / 2).sum();
    match pq_multinom(t.n() as u32, &t.bricks) {
        Ok(m) => lhs == m.mul_monomial(Monomial::var(Var::P, shift)),
        Err(_) => false,
    }
}

/// `Σ_{0 ≤ a_1 ≤ ... ≤ a_n ≤ k-1} r^{Σ a_i} = binom(n+k-1, n)_r`, for `k ≥ 1`.
pub fn lemma2_check(n: u32, k: u32) -> bool {
    if k == 0 {
        return false;
    }
    let mut lhs = MultiPoly::zero();
    for w in WordRule::WeaklyIncreasing.words(n as usize, k) {
        lhs.add_term(Monomial::var(Var::R, w.iter().sum()), BigInt::one());
    }
    lhs == gauss_binom_r(n + k - 1, n)
}

/// `Σ_{σ ∈ S_n} k^{des(σ)+1}` as the signed sum over fixed points of `J`.
pub fn j_fixed_point_sum(n: u32, k: u32) -> BigInt {
    let mut total = BigInt::zero();
    for_each_word_free(n, |c| {
        if c.is_fixed() {
            total += c.signed_weight(k);
        }
    });
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genfun::gf_d;
    use crate::algebra::Assignment;

    #[test]
    fn tabloid_counts() {
        let t = enumerate_tabloids(&[1, 2], 3).unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(count_tabloids(&[1, 2], 3).unwrap(), 2.into());
        assert_eq!(count_tabloids(&[4], 4).unwrap(), 1.into());
        assert_eq!(count_tabloids(&[1, 1, 1], 3).unwrap(), 1.into());
        assert_eq!(enumerate_tabloids(&[1, 1, 1], 3).unwrap().len(), 1);
        assert!(count_tabloids(&[1, 1], 3).is_err());
        assert_eq!(compositions(4).len(), 8);
        assert_eq!(partitions(5).len(), 7);
    }

    #[test]
    fn transition_coefficients() {
        let h1 = h_in_e(1);
        assert_eq!(h1[&vec![1]], 1.into());
        let h2 = h_in_e(2);
        assert_eq!(h2[&vec![1, 1]], 1.into());
        assert_eq!(h2[&vec![2]], (-1).into());
        let h3 = h_in_e(3);
        assert_eq!(h3[&vec![1, 1, 1]], 1.into());
        assert_eq!(h3[&vec![2, 1]], (-2).into());
        assert_eq!(h3[&vec![3]], 1.into());
    }

    #[test]
    fn hom_matches_series() {
        for n in 0..=4 {
            let img = |b| family_e_image(Family::R, 2, b).ok();
            let d = gf_d(Family::R, 2, 4, &Assignment::none()).unwrap();
            assert_eq!(&apply_hom(&img, n).unwrap(), d.coeff(n as usize));
        }
        let img = |b| family_e_image(Family::W, 2, b).ok();
        let at = Assignment::all_ones().with(Var::X, 0);
        assert_eq!(apply_hom(&img, 2).unwrap().evaluate(&at).unwrap(), 6.into());
        assert!(apply_hom(&|_| None, 2).is_err());
    }

    #[test]
    fn small_objects() {
        let objs = enumerate_filled(1, 3, Family::R);
        assert_eq!(objs.len(), 3);
        let s = enumerate_filled(2, 2, Family::S);
        let single: Vec<_> = s.iter().filter(|c| c.tabloid().len() == 1).collect();
        assert_eq!(single.len(), 2);
        assert!(single.iter().all(|c| c.word() == [0, 1]));
    }

    #[test]
    fn involution_pairs() {
        for c in enumerate_filled(3, 2, Family::R) {
            let i = involution(&c);
            assert_eq!(involution(&i), c);
            if i != c {
                assert_eq!(i.sign(), -c.sign());
                assert_eq!(i.weight_monomial(), c.weight_monomial());
            }
        }
    }

    #[test]
    fn j_reproduces_eulerian() {
        for n in 0..=5 {
            for k in 1..=3 {
                let e = crate::algebra::eulerian_poly(n).eval_int(k as i64);
                assert_eq!(j_fixed_point_sum(n, k), e.to_integer());
            }
        }
    }

    #[test]
    fn lemmas() {
        assert!(lemma1_check(&BrickTabloid::new(vec![1, 1]).unwrap()));
        assert!(lemma1_check(&BrickTabloid::new(vec![3]).unwrap()));
        assert!(lemma2_check(2, 2));
        assert!(lemma2_check(0, 3));
    }

    #[test]
    fn rejects_bad_objects() {
        let t = BrickTabloid::new(vec![2]).unwrap();
        assert!(FilledTabloid::new(t.clone(), vec![2, 1], vec![0, 0], vec![Label::X, Label::One], Family::R).is_err());
        assert!(FilledTabloid::new(t.clone(), vec![1, 2], vec![1, 0], vec![Label::X, Label::One], Family::R).is_err());
        assert!(FilledTabloid::new(t.clone(), vec![1, 2], vec![0, 0], vec![Label::One, Label::One], Family::R).is_err());
        assert!(FilledTabloid::new(t, vec![1, 2], vec![0, 1], vec![Label::MinusOne, Label::One], Family::R).is_ok());
        assert!(BrickTabloid::new(vec![0, 1]).is_err());
    }
}
