//! Truncated `p,q`-exponential generating functions.
//!
//! Slot `n` of a [`PqEgf`] stores `[n]_{p,q}! · [t^n] F`, so products become
//! `p,q`-binomial convolutions and every coefficient stays a polynomial.
//!
//! A series may be built under a partial specialization of `p, q, r, x`.
//! Only the `p, q` part affects the arithmetic (through the binomials), so
//! two series can be combined when those values agree.

use std::fmt;

use num_bigint::BigInt;

use crate::algebra::{pq_int, Assignment, Monomial, MultiPoly, Var};
use crate::error::{Error, Result};

pub const DEFAULT_ORDER: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PqEgf {
    spec: Assignment,
    coeffs: Vec<MultiPoly>,
}

/// Rows `0..=order` of the `p,q`-Pascal triangle
/// `binom(n, j) = p^{n-j} binom(n-1, j-1) + q^j binom(n-1, j)`.
pub(crate) fn pq_binom_table(order: usize, spec: &Assignment) -> Vec<Vec<MultiPoly>> {
    let mut rows: Vec<Vec<MultiPoly>> = vec![vec![MultiPoly::one()]];
    for n in 1..=order {
        let prev = &rows[n - 1];
        let mut row = Vec::with_capacity(n + 1);
        for j in 0..=n {
            let mut v = MultiPoly::zero();
            if j >= 1 {
                v += &prev[j - 1].mul_monomial(Monomial::var(Var::P, (n - j) as u32));
            }
            if j < n {
                v += &prev[j].mul_monomial(Monomial::var(Var::Q, j as u32));
            }
            row.push(v.substitute(spec));
        }
        rows.push(row);
    }
    rows
}

impl PqEgf {
    pub fn zero(order: usize, spec: &Assignment) -> Self {
        Self { spec: *spec, coeffs: vec![MultiPoly::zero(); order + 1] }
    }

    pub fn one(order: usize, spec: &Assignment) -> Self {
        let mut s = Self::zero(order, spec);
        s.coeffs[0] = MultiPoly::one();
        s
    }

    /// The series `t` (slot 1 equal to 1).
    pub fn t(order: usize, spec: &Assignment) -> Self {
        let mut s = Self::zero(order, spec);
        if order >= 1 {
            s.coeffs[1] = MultiPoly::one();
        }
        s
    }

    /// Build from normalized slots; the slots are specialized by `spec`.
    pub fn from_coeffs(coeffs: Vec<MultiPoly>, spec: &Assignment) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidInput("a series needs at least the constant slot".into()));
        }
        let coeffs = coeffs.iter().map(|c| c.substitute(spec)).collect();
        Ok(Self { spec: *spec, coeffs })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn spec(&self) -> &Assignment {
        &self.spec
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &MultiPoly {
        &self.coeffs[n]
    }

    fn check_compatible(&self, other: &PqEgf) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch(self.order(), other.order()));
        }
        for v in [Var::P, Var::Q] {
            if self.spec.get(v) != other.spec.get(v) {
                return Err(Error::SpecializationMismatch);
            }
        }
        Ok(())
    }

    fn zip_with(&self, other: &PqEgf, f: impl Fn(&MultiPoly, &MultiPoly) -> MultiPoly) -> Result<Self> {
        self.check_compatible(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f(a, b)).collect();
        Ok(Self { spec: self.spec.merge(&other.spec), coeffs })
    }

    pub fn add(&self, other: &PqEgf) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &PqEgf) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn neg(&self) -> Self {
        Self { spec: self.spec, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    /// Multiply every slot by the scalar polynomial `s`.
    pub fn scale(&self, s: &MultiPoly) -> Self {
        let s = s.substitute(&self.spec);
        Self { spec: self.spec, coeffs: self.coeffs.iter().map(|c| c * &s).collect() }
    }

    /// Further specialize; already-fixed variables keep their values.
    pub fn substitute(&self, a: &Assignment) -> Self {
        let spec = a.merge(&self.spec);
        Self { spec, coeffs: self.coeffs.iter().map(|c| c.substitute(&spec)).collect() }
    }

    /// Slotwise coefficient of `x^m`.
    pub fn coeff_of_x(&self, m: u32) -> Self {
        Self { spec: self.spec, coeffs: self.coeffs.iter().map(|c| c.coeff_of_x(m)).collect() }
    }

    /// Keep slots `0..=order`.
    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.truncate(order + 1);
        Self { spec: self.spec, coeffs }
    }
}

impl fmt::Display for PqEgf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, c) in self.coeffs.iter().enumerate() {
            writeln!(f, "[{n}] {c}")?;
        }
        Ok(())
    }
}

/// `(FG)_n = Σ_j binom(n, j)_{p,q} F_j G_{n-j}`.
pub fn egf_mul(f: &PqEgf, g: &PqEgf) -> Result<PqEgf> {
    f.check_compatible(g)?;
    let order = f.order();
    let binom = pq_binom_table(order, &f.spec);
    let coeffs = (0..=order)
        .map(|n| {
            let mut acc = MultiPoly::zero();
            for j in 0..=n {
                if f.coeffs[j].is_zero() || g.coeffs[n - j].is_zero() {
                    continue;
                }
                acc += &(&binom[n][j] * &(&f.coeffs[j] * &g.coeffs[n - j]));
            }
            acc
        })
        .collect();
    Ok(PqEgf { spec: f.spec.merge(&g.spec), coeffs })
}

/// Multiplicative inverse of a series with constant slot 1.
pub fn egf_inverse(f: &PqEgf) -> Result<PqEgf> {
    if !f.coeffs[0].is_one() {
        return Err(Error::NonUnitConstant);
    }
    let order = f.order();
    let binom = pq_binom_table(order, &f.spec);
    let mut g: Vec<MultiPoly> = Vec::with_capacity(order + 1);
    g.push(MultiPoly::one());
    for n in 1..=order {
        let mut acc = MultiPoly::zero();
        for j in 1..=n {
            if f.coeffs[j].is_zero() || g[n - j].is_zero() {
                continue;
            }
            acc -= &(&binom[n][j] * &(&f.coeffs[j] * &g[n - j]));
        }
        g.push(acc);
    }
    Ok(PqEgf { spec: f.spec, coeffs: g })
}

/// The series `s·t·F`: slot `n` is `[n]_{p,q} · s · F_{n-1}`.
pub fn egf_shift_mul_t(f: &PqEgf, s: &MultiPoly) -> PqEgf {
    let s = s.substitute(&f.spec);
    let mut coeffs = vec![MultiPoly::zero(); f.order() + 1];
    for n in 1..=f.order() {
        coeffs[n] = &(&pq_int(n as u32).substitute(&f.spec) * &s) * &f.coeffs[n - 1];
    }
    PqEgf { spec: f.spec, coeffs }
}

/// The integer in slot `n` after substituting `a` (on top of the series'
/// own specialization).
pub fn egf_counts(f: &PqEgf, n: usize, a: &Assignment) -> Result<BigInt> {
    if n > f.order() {
        return Err(Error::InvalidInput(format!("slot {n} beyond truncation order {}", f.order())));
    }
    f.coeffs[n].evaluate(&f.spec.merge(a))
}
