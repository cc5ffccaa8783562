//! Verification suites shared by `wreathmatch verify` and the test targets.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{binomial, factorial, fibonacci, gauss_binom_r, eulerian_poly, Assignment, MultiPoly, Var};
use crate::brick::{
    apply_hom, compositions, family_e_image, for_each_filled, for_each_word_free, involution,
    involution_sums, j_involution, lemma1_check, lemma2_check, BrickTabloid,
};
use crate::error::Result;
use crate::genfun::{generating_function, Family, Series};
use crate::oracle::{self, MatchShape, OracleOptions, Stat};
use crate::polyk::{conjecture_report, eulerian_identity_check, stirling_identity_check};
use crate::signed::Pattern;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Self { name: name.into(), passed, detail: detail.into() }
    }
}

fn describe_diff(expected: &MultiPoly, got: &MultiPoly) -> String {
    if expected == got {
        "equal".into()
    } else {
        format!("oracle {expected}; closed form {got}")
    }
}

/// The specialization used for slot `n` when comparing with the oracle.
fn comparison_spec(f: Family, n: usize, opts: &OracleOptions) -> Assignment {
    let spec = oracle::default_spec(n, opts);
    if f.tracks_r() {
        spec
    } else {
        spec.with(Var::R, 1)
    }
}

/// Closed forms of `D, A, B, N, R, S` against brute force, slot by slot.
pub fn oracle_gf(families: &[Family], ks: &[u32], n_max: usize, opts: &OracleOptions) -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    for &f in families {
        for &k in ks {
            let ps = f.pattern_set();
            let mut built: Vec<(Assignment, Vec<(Series, crate::series::PqEgf)>)> = Vec::new();
            for n in 0..=n_max {
                let spec = comparison_spec(f, n, opts);
                if !built.iter().any(|(s, _)| *s == spec) {
                    let series = [Series::D, Series::A, Series::B, Series::N, Series::R, Series::S]
                        .into_iter()
                        .map(|s| Ok((s, generating_function(f, s, k, n_max, &spec)?)))
                        .collect::<Result<Vec<_>>>()?;
                    built.push((spec, series));
                }
                let gfs = &built.iter().find(|(s, _)| *s == spec).expect("built above").1;
                let d = oracle::distribution_at(n, k, &ps, Stat::Mch, &spec, opts)?.poly;
                let nl = oracle::distribution_at(n, k, &ps, Stat::Nlap, &spec, opts)?.poly;
                let a = d.substitute(&Assignment::none().with(Var::X, 0));
                let b = oracle::shape_distribution(n, k, &ps, MatchShape::ExactlyEnd, &spec, opts)?;
                let u = oracle::shape_distribution(n, k, &ps, MatchShape::UShape, &spec, opts)?;
                let v = oracle::shape_distribution(n, k, &ps, MatchShape::VShape, &spec, opts)?;
                for (series, gf) in gfs {
                    let expected = match series {
                        Series::D => &d,
                        Series::A => &a,
                        Series::B => &b,
                        Series::N => &nl,
                        Series::R => &u,
                        Series::S => &v,
                        _ => unreachable!("only the compared series are built"),
                    };
                    let got = gf.coeff(n);
                    let label = if spec.is_empty() { String::new() } else { format!(" at {spec}") };
                    out.push(CheckOutcome::new(
                        format!("{series} family {f} k={k} n={n}{label}"),
                        expected == got,
                        describe_diff(expected, got),
                    ));
                }
            }
        }
    }
    Ok(out)
}

/// The involution properties and the four-way sum equality, plus `J`.
pub fn involution_suite(families: &[Family], ks: &[u32], n_max: u32, j_n_max: u32) -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    let opts = OracleOptions::default();
    for &f in families {
        for &k in ks {
            for n in 0..=n_max {
                let mut objects = 0u64;
                let mut bad_inverse = 0u64;
                let mut bad_sign = 0u64;
                let mut bad_weight = 0u64;
                for_each_filled(n, k, f, |c| {
                    objects += 1;
                    let i = involution(c);
                    if involution(&i) != *c {
                        bad_inverse += 1;
                    }
                    if i != *c {
                        if i.sign() != -c.sign() {
                            bad_sign += 1;
                        }
                        if i.weight_monomial() != c.weight_monomial() {
                            bad_weight += 1;
                        }
                    }
                });
                let tag = format!("family {f} k={k} n={n}");
                out.push(CheckOutcome::new(
                    format!("involution self-inverse {tag}"),
                    bad_inverse == 0,
                    format!("{bad_inverse} of {objects} objects fail"),
                ));
                out.push(CheckOutcome::new(
                    format!("involution sign-reversing {tag}"),
                    bad_sign == 0,
                    format!("{bad_sign} of {objects} objects fail"),
                ));
                out.push(CheckOutcome::new(
                    format!("involution weight-preserving {tag}"),
                    bad_weight == 0,
                    format!("{bad_weight} of {objects} objects fail"),
                ));

                let (all, fixed) = involution_sums(n, k, f);
                let hom = apply_hom(&|b| family_e_image(f, k, b).ok(), n)?;
                let spec = if f.tracks_r() { Assignment::none() } else { Assignment::none().with(Var::R, 1) };
                let brute = oracle::distribution_at(n as usize, k, &f.pattern_set(), Stat::Mch, &spec, &opts)?.poly;
                let equal = all == fixed && fixed == hom && hom == brute;
                let detail = if equal {
                    format!("{objects} objects; all four sums equal")
                } else {
                    format!("all {all}; fixed {fixed}; hom {hom}; oracle {brute}")
                };
                out.push(CheckOutcome::new(format!("four-way sum {tag}"), equal, detail));
            }
        }
    }
    for n in 0..=j_n_max {
        let mut bad = 0u64;
        let mut objects = 0u64;
        for_each_word_free(n, |c| {
            objects += 1;
            let j = j_involution(c);
            if j_involution(&j) != *c || (j != *c && (j.signed_weight(2) != -c.signed_weight(2))) {
                bad += 1;
            }
        });
        out.push(CheckOutcome::new(
            format!("J involution n={n}"),
            bad == 0,
            format!("{bad} of {objects} objects fail"),
        ));
        for k in 1..=5u32 {
            let got = crate::brick::j_fixed_point_sum(n, k);
            let expected = eulerian_poly(n).eval_int(i64::from(k)).to_integer();
            out.push(CheckOutcome::new(
                format!("J fixed points give sum k^(des+1) n={n} k={k}"),
                got == expected,
                format!("fixed-point sum {got}, expected {expected}"),
            ));
        }
    }
    Ok(out)
}

pub fn lemma_suite(lemma1_n_max: u32, lemma2_max: u32) -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    for n in 0..=lemma1_n_max {
        let tabloids = compositions(n);
        let failures: Vec<String> = tabloids
            .iter()
            .filter(|b| !lemma1_check(&BrickTabloid::new((*b).clone()).expect("composition")))
            .map(|b| format!("{b:?}"))
            .collect();
        out.push(CheckOutcome::new(
            format!("increasing fillings of brick tabloids n={n}"),
            failures.is_empty(),
            if failures.is_empty() {
                format!("{} tabloids", tabloids.len())
            } else {
                format!("fails for {}", failures.join(" "))
            },
        ));
    }
    for n in 0..=lemma2_max {
        for k in 1..=lemma2_max {
            out.push(CheckOutcome::new(
                format!("weakly increasing words n={n} k={k}"),
                lemma2_check(n, k),
                format!("compared with {}", gauss_binom_r(n + k - 1, n)),
            ));
        }
    }
    out
}

pub fn identity_suite(n_max: u32, k_max: u32) -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    for n in 0..=n_max {
        out.push(CheckOutcome::new(
            format!("Stirling coefficients of A (weak rises) n={n}"),
            stirling_identity_check(n, k_max)?,
            format!("k = 1..{}", k_max),
        ));
        out.push(CheckOutcome::new(
            format!("Eulerian polynomial equals A (unequal-letter rises) n={n}"),
            eulerian_identity_check(n, k_max)?,
            format!("k = 1..{}", k_max),
        ));
    }
    Ok(out)
}

pub fn conjecture_suite(n_max: u32) -> Result<Vec<CheckOutcome>> {
    Ok(conjecture_report(n_max)?
        .checks
        .into_iter()
        .map(|c| CheckOutcome::new(format!("{} (n={})", c.name, c.n), c.holds, c.detail))
        .collect())
}

/// `Σ_{j=0}^n j! (k-1)^j binom(n, j)^2`.
pub fn single_pattern_avoiders(n: u64, k: u64) -> BigInt {
    (0..=n)
        .map(|j| factorial(j) * BigInt::from(k - 1).pow(j as u32) * binomial(n, j).pow(2))
        .sum()
}

pub fn k1_formula(n: u32) -> BigInt {
    fibonacci(2 * n + 1)
}

/// `n! Σ_{j=0}^n binom(n, j)^{-1}` (exact rational).
pub fn k2_formula(n: u64) -> BigRational {
    let s: BigRational = (0..=n)
        .map(|j| BigRational::new(BigInt::one(), binomial(n, j)))
        .fold(BigRational::zero(), |a, b| a + b);
    s * BigRational::from_integer(factorial(n))
}

/// `n! + n! Σ_{j=1}^n 1/j` (exact rational).
pub fn k3_formula(n: u64) -> BigRational {
    let h: BigRational = (1..=n)
        .map(|j| BigRational::new(BigInt::one(), BigInt::from(j)))
        .fold(BigRational::zero(), |a, b| a + b);
    let f = BigRational::from_integer(factorial(n));
    &f + &f * h
}

fn exact(t: [u32; 2], u: [u32; 2]) -> Pattern {
    Pattern::unreduced(t.to_vec(), u.to_vec()).expect("valid length-2 pattern")
}

/// The three pattern sets of `C_2 ≀ S_2` with closed-form avoidance counts.
pub fn k_pattern_sets() -> [Vec<Pattern>; 3] {
    [
        vec![exact([1, 2], [0, 0]), exact([1, 2], [0, 1]), exact([2, 1], [1, 0])],
        vec![exact([1, 2], [0, 1]), exact([1, 2], [1, 0]), exact([2, 1], [0, 1])],
        vec![exact([1, 2], [0, 0]), exact([1, 2], [0, 1]), exact([2, 1], [0, 0])],
    ]
}

pub fn avoidance_suite(n_max: u32, k_max: u32, kn_max: u32) -> Result<Vec<CheckOutcome>> {
    let opts = OracleOptions::default();
    let mut out = Vec::new();
    for k in 1..=k_max {
        for tau in [[1, 2], [2, 1]] {
            for a in 0..k {
                for b in 0..k {
                    let p = exact(tau, [a, b]);
                    for n in 0..=n_max {
                        let got = oracle::avoid_count_exact(n as usize, k, std::slice::from_ref(&p), &opts)?;
                        let expected = single_pattern_avoiders(u64::from(n), u64::from(k));
                        out.push(CheckOutcome::new(
                            format!("avoiders of {p} k={k} n={n}"),
                            got == expected,
                            format!("brute force {got}, formula {expected}"),
                        ));
                    }
                }
            }
        }
    }
    let sets = k_pattern_sets();
    for n in 0..=kn_max {
        let counts: Vec<BigInt> = sets
            .iter()
            .map(|s| oracle::avoid_count_exact(n as usize, 2, s, &opts))
            .collect::<Result<_>>()?;
        let formulas = [
            BigRational::from_integer(k1_formula(n)),
            k2_formula(u64::from(n)),
            k3_formula(u64::from(n)),
        ];
        for (i, (got, expected)) in counts.iter().zip(&formulas).enumerate() {
            out.push(CheckOutcome::new(
                format!("K^{} n={n}", i + 1),
                BigRational::from_integer(got.clone()) == *expected,
                format!("brute force {got}, formula {expected}"),
            ));
        }
    }
    Ok(out)
}
