//! Closed-form generating functions for the four built-in pattern families.
//!
//! Every constructor takes the alphabet size `k`, a truncation order and a
//! partial specialization of `p, q, r, x` (pass `Assignment::none()` for the
//! full polynomial).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{
    bracket_k_power, gauss_binom_r, Assignment, Monomial, MultiPoly, Var,
};
use crate::error::{Error, Result};
use crate::series::{egf_inverse, egf_mul, egf_shift_mul_t, PqEgf};
use crate::signed::PatternSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    /// rises
    #[serde(rename = "r")]
    R,
    /// weak rises
    #[serde(rename = "w")]
    W,
    /// strict rises
    #[serde(rename = "s")]
    S,
    /// rises with unequal letters
    #[serde(rename = "d")]
    D,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::R, Family::W, Family::S, Family::D];

    pub fn tag(self) -> char {
        match self {
            Family::R => 'r',
            Family::W => 'w',
            Family::S => 's',
            Family::D => 'd',
        }
    }

    pub fn pattern_set(self) -> PatternSet {
        match self {
            Family::R => PatternSet::rises(),
            Family::W => PatternSet::weak_rises(),
            Family::S => PatternSet::strict_rises(),
            Family::D => PatternSet::distinct_rises(),
        }
    }

    /// Family `d` is only available at `r = 1`.
    pub fn tracks_r(self) -> bool {
        self != Family::D
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tag())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "r" => Ok(Family::R),
            "w" => Ok(Family::W),
            "s" => Ok(Family::S),
            "d" => Ok(Family::D),
            _ => Err(Error::InvalidInput(format!("unknown family `{s}` (expected r, w, s or d)"))),
        }
    }
}

/// The named series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Series {
    D,
    A,
    B,
    N,
    P,
    G,
    H,
    /// counted by `U_{n,k}`
    R,
    /// counted by `V_{n,k}`
    S,
}

impl Series {
    pub const ALL: [Series; 9] = [
        Series::D,
        Series::A,
        Series::B,
        Series::N,
        Series::P,
        Series::G,
        Series::H,
        Series::R,
        Series::S,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Series::D => "D",
            Series::A => "A",
            Series::B => "B",
            Series::N => "N",
            Series::P => "P",
            Series::G => "G",
            Series::H => "H",
            Series::R => "R",
            Series::S => "S",
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl FromStr for Series {
    type Err = Error;

    /// Accepts the series letter; `U` and `V` name the `R` and `S` series.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "D" => Ok(Series::D),
            "A" => Ok(Series::A),
            "B" => Ok(Series::B),
            "N" => Ok(Series::N),
            "P" => Ok(Series::P),
            "G" => Ok(Series::G),
            "H" => Ok(Series::H),
            "R" | "U" => Ok(Series::R),
            "S" | "V" => Ok(Series::S),
            _ => Err(Error::InvalidInput(format!("unknown series `{s}`"))),
        }
    }
}

fn check_k(k: u32) -> Result<()> {
    if k < 2 {
        return Err(Error::Unsupported(format!(
            "closed forms need k >= 2 (got k = {k}); use the oracle for k = 1"
        )));
    }
    Ok(())
}

fn check_spec(f: Family, spec: &Assignment) -> Result<()> {
    match spec.get(Var::R) {
        Some(r) if !f.tracks_r() && r != 1 => Err(Error::Unsupported(format!(
            "family d has no r-refinement (asked for r = {r})"
        ))),
        _ => Ok(()),
    }
}

/// The weight `C_n` attached to a single brick of length `n`.
pub fn family_weight(f: Family, n: u32, k: u32) -> Result<MultiPoly> {
    check_k(k)?;
    if n == 0 {
        return Err(Error::InvalidInput("family weight needs n >= 1".into()));
    }
    Ok(match f {
        Family::R => gauss_binom_r(n + k - 1, n),
        Family::W => bracket_k_power(k, n),
        Family::S => gauss_binom_r(k, n).mul_monomial(Monomial::var(Var::R, n * (n - 1) / 2)),
        Family::D => MultiPoly::constant(u64::from(k) * u64::from(k - 1).pow(n - 1)),
    })
}

/// `[k]_r`, or the integer `k` for family `d`.
fn k_bracket(f: Family, k: u32) -> MultiPoly {
    if f.tracks_r() {
        bracket_k_power(k, 1)
    } else {
        MultiPoly::constant(k)
    }
}

fn p_power(n: u32) -> MultiPoly {
    MultiPoly::var_pow(Var::P, n * n.saturating_sub(1) / 2)
}

fn sign(n: u32) -> i64 {
    if n.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Builds the series whose slot `n ≥ 1` is `c(n) · p^{binom(n,2)} C_n`.
fn weighted(
    f: Family,
    k: u32,
    order: usize,
    spec: &Assignment,
    constant: MultiPoly,
    c: impl Fn(u32) -> MultiPoly,
) -> Result<PqEgf> {
    check_k(k)?;
    check_spec(f, spec)?;
    let mut coeffs = vec![constant];
    for n in 1..=order as u32 {
        let factor = c(n);
        if factor.is_zero() {
            coeffs.push(MultiPoly::zero());
            continue;
        }
        let w = family_weight(f, n, k)?.substitute(spec);
        coeffs.push(&(&factor * &p_power(n).substitute(spec)) * &w);
    }
    PqEgf::from_coeffs(coeffs, spec)
}

/// Denominator of `D`, with the `1 - x` prefactor cancelled:
/// slot `n ≥ 1` is `-(x-1)^{n-1} p^{binom(n,2)} C_n`.
fn denominator(f: Family, k: u32, order: usize, spec: &Assignment) -> Result<PqEgf> {
    let x_minus_1 = MultiPoly::var(Var::X) - MultiPoly::one();
    weighted(f, k, order, spec, MultiPoly::one(), |n| -x_minus_1.pow(n - 1))
}

/// `Σ q^inv p^coinv r^{||w||} x^{mch}` over `C_k ≀ S_n`.
pub fn gf_d(f: Family, k: u32, order: usize, spec: &Assignment) -> Result<PqEgf> {
    egf_inverse(&denominator(f, k, order, spec)?)
}

/// `P = 1 + Σ_{n≥1} (-1)^n p^{binom(n,2)} C_n t^n/[n]!`, so that `A = 1/P`.
pub fn gf_p(f: Family, k: u32, order: usize, spec: &Assignment) -> Result<PqEgf> {
    let spec = spec.without(Var::X);
    weighted(f, k, order, &spec, MultiPoly::one(), |n| MultiPoly::constant(sign(n)))
}

/// `G = Σ_{n≥2} (n-1)(-1)^n p^{binom(n,2)} C_n t^n/[n]!`.
pub fn gf_g(f: Family, k: u32, order: usize, spec: &Assignment) -> Result<PqEgf> {
    let spec = spec.without(Var::X);
    weighted(f, k, order, &spec, MultiPoly::zero(), |n| {
        MultiPoly::constant(i64::from(n - 1) * sign(n))
    })
}

/// `H = -Σ_{n≥3} binom(n-1, 2)(-1)^n p^{binom(n,2)} C_n t^n/[n]!`.
pub fn gf_h(f: Family, k: u32, order: usize, spec: &Assignment) -> Result<PqEgf> {
    let spec = spec.without(Var::X);
    weighted(f, k, order, &spec, MultiPoly::zero(), |n| {
        let m = i64::from(n.saturating_sub(1));
        MultiPoly::constant(-(m * (m - 1) / 2) * sign(n))
    })
}

/// Elements with no matches.
pub fn gf_a(f: Family, k: u32, order: usize, spec: &Assignment) -> Result<PqEgf> {
    egf_inverse(&gf_p(f, k, order, spec)?)
}

/// `[k]_r t - 1`.
fn kt_minus_one(f: Family, k: u32, order: usize, spec: &Assignment) -> PqEgf {
    let one = PqEgf::one(order, spec);
    egf_shift_mul_t(&one, &k_bracket(f, k)).sub(&one).expect("same order")
}

/// Elements whose only match starts at position `n - 1`:
/// `B = ([k]_r t - 1) A + 1`.
pub fn gf_b(f: Family, k: u32, order: usize, spec: &Assignment) -> Result<PqEgf> {
    let spec = spec.without(Var::X);
    let a = gf_a(f, k, order, &spec)?;
    let one = PqEgf::one(order, &spec);
    egf_mul(&kt_minus_one(f, k, order, &spec), &a)?.add(&one)
}

/// `Σ q^inv p^coinv r^{||w||} x^{nlap}`: `N = A / (1 - x B)`.
pub fn gf_n(f: Family, k: u32, order: usize, spec: &Assignment) -> Result<PqEgf> {
    let free_x = spec.without(Var::X);
    let a = gf_a(f, k, order, &free_x)?;
    let b = gf_b(f, k, order, &free_x)?;
    let one = PqEgf::one(order, &free_x);
    let denom = one.sub(&b.scale(&MultiPoly::var(Var::X)))?;
    Ok(egf_mul(&a, &egf_inverse(&denom)?)?.substitute(spec))
}

/// The `R` and `S` series by the closed forms in `P, G, H`.
fn r_s_closed(f: Family, k: u32, order: usize, spec: &Assignment) -> Result<(PqEgf, PqEgf)> {
    let p = gf_p(f, k, order, spec)?;
    let g = gf_g(f, k, order, spec)?;
    let h = gf_h(f, k, order, spec)?;
    let a = egf_inverse(&p)?;
    let a2 = egf_mul(&a, &a)?;
    let a3 = egf_mul(&a2, &a)?;
    let ktm1 = kt_minus_one(f, k, order, p.spec());
    let r = egf_mul(&ktm1.add(&p)?.sub(&g)?, &a2)?;
    let inner = h.add(&g)?.sub(&ktm1)?.sub(&p)?;
    let s = egf_mul(&egf_mul(&g, &g)?.add(&egf_mul(&p, &inner)?)?, &a3)?;
    Ok((r, s))
}

/// The `R` and `S` series extracted from `N` and `D`:
/// `R = (N - D)|_{x}`, `S = D|_{x^2} - R`.
fn r_s_extracted(f: Family, k: u32, order: usize, spec: &Assignment) -> Result<(PqEgf, PqEgf)> {
    let free_x = spec.without(Var::X);
    let d = gf_d(f, k, order, &free_x)?;
    let n = gf_n(f, k, order, &free_x)?;
    let r = n.sub(&d)?.coeff_of_x(1);
    let s = d.coeff_of_x(2).sub(&r)?;
    Ok((r, s))
}

fn r_and_s(f: Family, k: u32, order: usize, spec: &Assignment) -> Result<(PqEgf, PqEgf)> {
    let spec = spec.without(Var::X);
    let (r1, s1) = r_s_closed(f, k, order, &spec)?;
    let (r2, s2) = r_s_extracted(f, k, order, &spec)?;
    for (name, a, b) in [("R", &r1, &r2), ("S", &s1, &s2)] {
        if let Some(n) = (0..=order).find(|&n| a.coeff(n) != b.coeff(n)) {
            return Err(Error::Internal(format!(
                "{name} series disagree for family {f}, k = {k} at slot {n}:\n  closed:    {}\n  extracted: {}",
                a.coeff(n),
                b.coeff(n)
            )));
        }
    }
    Ok((r1, s1))
}

/// Elements whose match starts are exactly `{s, s+1}`.
pub fn gf_r(f: Family, k: u32, order: usize, spec: &Assignment) -> Result<PqEgf> {
    Ok(r_and_s(f, k, order, spec)?.0)
}

/// Elements with exactly two matches, non-overlapping.
pub fn gf_s(f: Family, k: u32, order: usize, spec: &Assignment) -> Result<PqEgf> {
    Ok(r_and_s(f, k, order, spec)?.1)
}

pub fn generating_function(
    f: Family,
    series: Series,
    k: u32,
    order: usize,
    spec: &Assignment,
) -> Result<PqEgf> {
    let build = match series {
        Series::D => gf_d,
        Series::A => gf_a,
        Series::B => gf_b,
        Series::N => gf_n,
        Series::P => gf_p,
        Series::G => gf_g,
        Series::H => gf_h,
        Series::R => gf_r,
        Series::S => gf_s,
    };
    build(f, k, order, spec)
}
