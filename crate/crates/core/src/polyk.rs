//! Counting sequences as polynomials in `k`: exact interpolation, the
//! Stirling and Eulerian identities, and numerical checks of the sign,
//! divisibility and reciprocity patterns observed in the data.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde::Serialize;

pub use crate::algebra::KPolynomial;
use crate::algebra::{eulerian_poly, factorial, stirling2, Assignment, Var};
use crate::error::{Error, Result};
use crate::genfun::{generating_function, Family, Series};
use crate::oracle::{self, MatchShape, OracleOptions};
use crate::series::egf_counts;

/// Which counting sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Target {
    /// no matches
    A,
    /// match starts `{s, s+1}`
    U,
    /// two non-overlapping matches and no others
    V,
}

impl Target {
    pub fn series(self) -> Series {
        match self {
            Target::A => Series::A,
            Target::U => Series::R,
            Target::V => Series::S,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Target::A => "A",
            Target::U => "U",
            Target::V => "V",
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" => Ok(Target::A),
            "U" | "R" => Ok(Target::U),
            "V" | "S" => Ok(Target::V),
            _ => Err(Error::InvalidInput(format!("unknown target `{s}` (expected A, U or V)"))),
        }
    }
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// The unique polynomial of degree `< points.len()` through `points`
/// (Newton divided differences).
pub fn interpolate_at(points: &[(i64, BigInt)]) -> Result<KPolynomial> {
    let mut xs: Vec<i64> = points.iter().map(|p| p.0).collect();
    xs.sort_unstable();
    if xs.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidInput("interpolation nodes must be distinct".into()));
    }
    let m = points.len();
    let mut dd: Vec<BigRational> = points.iter().map(|p| BigRational::from_integer(p.1.clone())).collect();
    for level in 1..m {
        for i in (level..m).rev() {
            let den = rat(points[i].0 - points[i - level].0);
            dd[i] = (&dd[i] - &dd[i - 1]) / den;
        }
    }
    // Horner-style accumulation of the Newton form.
    let mut poly = KPolynomial::zero();
    for i in (0..m).rev() {
        poly = &(&poly * &KPolynomial::linear(points[i].0)) + &KPolynomial::new(vec![dd[i].clone()]);
    }
    Ok(poly)
}

/// Interpolate values given at `k = 1, 2, ...`.
pub fn interpolate(values: &[BigInt]) -> Result<KPolynomial> {
    let points: Vec<(i64, BigInt)> = values
        .iter()
        .enumerate()
        .map(|(i, v)| (i as i64 + 1, v.clone()))
        .collect();
    interpolate_at(&points)
}

/// One sequence value. Closed forms are used for `k ≥ 2`, the oracle at
/// `k = 1`.
pub fn sequence_value(f: Family, target: Target, n: u32, k: u32) -> Result<BigInt> {
    if k == 0 {
        return Err(Error::InvalidInput("k must be at least 1".into()));
    }
    if k == 1 {
        let opts = OracleOptions::default();
        let n = n as usize;
        return match target {
            Target::A => {
                let d = oracle::distribution_at(
                    n,
                    1,
                    &f.pattern_set(),
                    oracle::Stat::Mch,
                    &Assignment::all_ones().with(Var::X, 0),
                    &opts,
                )?;
                d.poly.evaluate(&Assignment::none())
            }
            Target::U => oracle::count_with_match_sets(n, 1, f, MatchShape::UShape, &opts),
            Target::V => oracle::count_with_match_sets(n, 1, f, MatchShape::VShape, &opts),
        };
    }
    let spec = Assignment::all_ones().with(Var::X, 0);
    let g = generating_function(f, target.series(), k, n as usize, &spec)?;
    egf_counts(&g, n as usize, &Assignment::none())
}

/// An interpolated polynomial with the evidence behind it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fit {
    pub poly: KPolynomial,
    /// `(k, value)` pairs used as nodes.
    pub nodes: Vec<(i64, BigInt)>,
    /// the spare node and its value
    pub check: (i64, BigInt),
}

/// Fit through `k = 1..=n+1` and certify the degree bound `n` at `k = n+2`.
pub fn fit(f: Family, target: Target, n: u32) -> Result<Fit> {
    let d = n as i64;
    let nodes: Vec<(i64, BigInt)> = (1..=d + 1)
        .map(|k| Ok((k, sequence_value(f, target, n, k as u32)?)))
        .collect::<Result<_>>()?;
    let poly = interpolate_at(&nodes)?;
    let spare = d + 2;
    let value = sequence_value(f, target, n, spare as u32)?;
    if poly.eval_int(spare) != BigRational::from_integer(value.clone()) {
        return Err(Error::Internal(format!(
            "{target}_{n} for family {f} is not a polynomial of degree <= {n}: \
             interpolant gives {} at k = {spare}, count is {value}",
            poly.eval_int(spare)
        )));
    }
    Ok(Fit { poly, nodes, check: (spare, value) })
}

pub fn a_poly(f: Family, n: u32) -> Result<KPolynomial> {
    Ok(fit(f, Target::A, n)?.poly)
}

pub fn u_poly(f: Family, n: u32) -> Result<KPolynomial> {
    Ok(fit(f, Target::U, n)?.poly)
}

pub fn v_poly(f: Family, n: u32) -> Result<KPolynomial> {
    Ok(fit(f, Target::V, n)?.poly)
}

fn evaluations_match(p: &KPolynomial, f: Family, target: Target, n: u32, k_max: u32) -> Result<bool> {
    for k in 2..=k_max {
        let v = sequence_value(f, target, n, k)?;
        if p.eval_int(i64::from(k)) != BigRational::from_integer(v) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The coefficient of `k^j` in `A_{n,k}` for weak rises is
/// `(-1)^{n-j} j! S(n, j)`; also checks that this polynomial reproduces the
/// counts for `k = 2..=k_max`.
pub fn stirling_identity_check(n: u32, k_max: u32) -> Result<bool> {
    let expected = KPolynomial::from_bigints((0..=n).map(|j| {
        let c = factorial(u64::from(j)) * stirling2(n, j);
        if (n - j).is_multiple_of(2) {
            c
        } else {
            -c
        }
    }));
    Ok(a_poly(Family::W, n)? == expected && evaluations_match(&expected, Family::W, Target::A, n, k_max)?)
}

/// `A_{n,k}` for family `d` is `Σ_{σ ∈ S_n} k^{des(σ)+1}`.
pub fn eulerian_identity_check(n: u32, k_max: u32) -> Result<bool> {
    let expected = eulerian_poly(n);
    Ok(a_poly(Family::D, n)? == expected && evaluations_match(&expected, Family::D, Target::A, n, k_max)?)
}

/// One numerical check of a conjectured pattern.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureCheck {
    pub name: String,
    pub n: u32,
    pub holds: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub checks: Vec<ConjectureCheck>,
}

impl ConjectureReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ConjectureCheck> {
        self.checks.iter().filter(|c| !c.holds)
    }
}

/// Nonzero coefficients from the top: first positive, then alternating,
/// with no zero gaps.
fn alternates(p: &KPolynomial) -> bool {
    let c = p.coeffs();
    !c.is_empty()
        && c.iter().rev().enumerate().all(|(i, a)| {
            if i % 2 == 0 {
                a.is_positive()
            } else {
                a.is_negative()
            }
        })
}

fn all_positive(p: &KPolynomial) -> bool {
    !p.is_zero() && p.coeffs().iter().all(Signed::is_positive)
}

/// Divide out `Π (k - a)` over `roots`, if every factor divides.
fn divide_out(p: &KPolynomial, roots: &[i64]) -> Option<KPolynomial> {
    roots.iter().try_fold(p.clone(), |acc, &a| acc.divide_root(a))
}

fn abs_coeffs(p: &KPolynomial) -> Vec<BigRational> {
    p.coeffs().iter().map(Signed::abs).collect()
}

#[derive(Clone, Copy)]
enum SignRule {
    Alternating,
    Positive,
    Unconstrained,
}

struct FormCheck {
    name: &'static str,
    family: Family,
    target: Target,
    roots: &'static [i64],
    quotient_degree: fn(u32) -> usize,
    signs: SignRule,
    first_n: u32,
}

const FORMS: &[FormCheck] = &[
    FormCheck { name: "U_r = k(k+1)(k+2)·(alternating, degree n-3)", family: Family::R, target: Target::U, roots: &[0, -1, -2], quotient_degree: |n| n as usize - 3, signs: SignRule::Alternating, first_n: 3 },
    FormCheck { name: "U_s = k(k-1)(k-2)·(positive, degree n-3)", family: Family::S, target: Target::U, roots: &[0, 1, 2], quotient_degree: |n| n as usize - 3, signs: SignRule::Positive, first_n: 3 },
    FormCheck { name: "U_w = k·(alternating, degree n-3)", family: Family::W, target: Target::U, roots: &[0], quotient_degree: |n| n as usize - 3, signs: SignRule::Alternating, first_n: 3 },
    FormCheck { name: "U_d = k(k-1)^2·(positive, degree n-3)", family: Family::D, target: Target::U, roots: &[0, 1, 1], quotient_degree: |n| n as usize - 3, signs: SignRule::Positive, first_n: 3 },
    FormCheck { name: "V_r = k(k+1)·(degree n-2)", family: Family::R, target: Target::V, roots: &[0, -1], quotient_degree: |n| n as usize - 2, signs: SignRule::Unconstrained, first_n: 4 },
    FormCheck { name: "V_s = k(k-1)·(degree n-2)", family: Family::S, target: Target::V, roots: &[0, 1], quotient_degree: |n| n as usize - 2, signs: SignRule::Unconstrained, first_n: 4 },
    FormCheck { name: "V_w = k·(alternating, degree n-3)", family: Family::W, target: Target::V, roots: &[0], quotient_degree: |n| n as usize - 3, signs: SignRule::Alternating, first_n: 4 },
    FormCheck { name: "V_d = k(k-1)^2·(positive, degree n-3)", family: Family::D, target: Target::V, roots: &[0, 1, 1], quotient_degree: |n| n as usize - 3, signs: SignRule::Positive, first_n: 4 },
];

/// Check every observed pattern for `n ≤ n_max` (at most 7).
pub fn conjecture_report(n_max: u32) -> Result<ConjectureReport> {
    if n_max > 7 {
        return Err(Error::InvalidInput("conjecture checks run for n <= 7".into()));
    }
    let mut checks = Vec::new();
    let mut push = |name: &str, n: u32, holds: bool, detail: String| {
        checks.push(ConjectureCheck { name: name.to_string(), n, holds, detail });
    };

    for n in 1..=n_max {
        let ar = a_poly(Family::R, n)?;
        let as_ = a_poly(Family::S, n)?;
        let nf = BigRational::from_integer(factorial(u64::from(n)));
        let pn = ar.scale(&nf).divide_root(0);
        let rn = as_.scale(&nf).divide_root(0);
        match (&pn, &rn) {
            (Some(p), Some(r)) => {
                let deg_ok = p.degree() + 1 == n as usize && r.degree() + 1 == n as usize;
                push(
                    "A_r = (1/n!)k·P_n(k), P_n alternating of degree n-1",
                    n,
                    deg_ok && alternates(p),
                    format!("P_{n}(k) = {p}"),
                );
                let mut low = factorial(u64::from(n - 1));
                if n % 2 == 0 {
                    low = -low;
                }
                push(
                    "P_n has constant term (-1)^{n-1}(n-1)!",
                    n,
                    p.coeff(0) == BigRational::from_integer(low),
                    format!("constant term {}", p.coeff(0)),
                );
                push(
                    "A_s = (1/n!)k·R_n(k), R_n positive of degree n-1",
                    n,
                    deg_ok && all_positive(r),
                    format!("R_{n}(k) = {r}"),
                );
                push(
                    "P_n and R_n agree up to sign",
                    n,
                    abs_coeffs(p) == abs_coeffs(r),
                    format!("P_{n} = {p}; R_{n} = {r}"),
                );
            }
            _ => push("A_r, A_s divisible by k", n, false, format!("A_r = {ar}; A_s = {as_}")),
        }
        let flipped = ar.negate_argument().scale(&rat(if n % 2 == 0 { 1 } else { -1 }));
        push(
            "A_s(k) = (-1)^n A_r(-k)",
            n,
            flipped == as_,
            format!("A_s = {as_}; (-1)^n A_r(-k) = {flipped}"),
        );
    }

    for form in FORMS {
        for n in form.first_n..=n_max {
            let p = fit(form.family, form.target, n)?.poly;
            let (holds, detail) = match divide_out(&p, form.roots) {
                None => (false, format!("{} = {} does not have the factor", form.target, p.factored())),
                Some(q) => {
                    let deg_ok = q.degree() == (form.quotient_degree)(n) && !q.is_zero();
                    let sign_ok = match form.signs {
                        SignRule::Alternating => alternates(&q),
                        SignRule::Positive => all_positive(&q),
                        SignRule::Unconstrained => q.leading().is_positive(),
                    };
                    (deg_ok && sign_ok, format!("cofactor {q}"))
                }
            };
            push(form.name, n, holds, detail);
        }
    }

    for (name, target, r_roots, s_roots, first) in [
        ("U_r and U_s cofactors agree up to sign", Target::U, &[0i64, -1, -2][..], &[0i64, 1, 2][..], 3u32),
        ("V_r and V_s cofactors agree in absolute value", Target::V, &[0, -1][..], &[0, 1][..], 4),
    ] {
        for n in first..=n_max {
            let r = divide_out(&fit(Family::R, target, n)?.poly, r_roots);
            let s = divide_out(&fit(Family::S, target, n)?.poly, s_roots);
            let (holds, detail) = match (r, s) {
                (Some(r), Some(s)) => (abs_coeffs(&r) == abs_coeffs(&s), format!("{r} vs {s}")),
                _ => (false, "factor missing".to_string()),
            };
            push(name, n, holds, detail);
        }
    }
    Ok(ConjectureReport { checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn interpolation() {
        assert_eq!(interpolate(&ints(&[1, 2, 3])).unwrap(), KPolynomial::k());
        let pent = interpolate(&ints(&[1, 5, 12, 22])).unwrap();
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(pent, KPolynomial::from_ints([0, -1, 3]).scale(&half));
        assert!(interpolate_at(&[(1, 1.into()), (1, 2.into())]).is_err());
        assert!(interpolate(&[]).unwrap().is_zero());
    }

    #[test]
    fn listed_polynomials() {
        assert_eq!(a_poly(Family::D, 4).unwrap(), KPolynomial::from_ints([0, 1, 11, 11, 1]));
        assert_eq!(a_poly(Family::W, 3).unwrap(), KPolynomial::from_ints([0, 1, -6, 6]));
        let sixth = BigRational::new(1.into(), 6.into());
        assert_eq!(u_poly(Family::S, 3).unwrap(), KPolynomial::from_ints([0, 2, -3, 1]).scale(&sixth));
        assert_eq!(v_poly(Family::W, 5).unwrap(), KPolynomial::from_ints([0, 3, -50, 90]));
        assert_eq!(a_poly(Family::R, 1).unwrap(), KPolynomial::k());
    }

    #[test]
    fn identities() {
        for n in 0..=4 {
            assert!(stirling_identity_check(n, 4).unwrap());
            assert!(eulerian_identity_check(n, 4).unwrap());
        }
    }

    #[test]
    fn small_report() {
        let report = conjecture_report(4).unwrap();
        assert!(report.all_hold(), "{:?}", report.failures().collect::<Vec<_>>());
        assert!(conjecture_report(8).is_err());
    }

    #[test]
    fn target_parsing() {
        assert_eq!("U".parse::<Target>().unwrap(), Target::U);
        assert!("Q".parse::<Target>().is_err());
    }
}
