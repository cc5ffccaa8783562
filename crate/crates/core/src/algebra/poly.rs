use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};

use crate::error::{Error, Result};

/// The four formal variables every series coefficient lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    P,
    Q,
    R,
    X,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::P, Var::Q, Var::R, Var::X];

    pub fn index(self) -> usize {
        match self {
            Var::P => 0,
            Var::Q => 1,
            Var::R => 2,
            Var::X => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::P => "p",
            Var::Q => "q",
            Var::R => "r",
            Var::X => "x",
        }
    }
}

impl FromStr for Var {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "p" => Ok(Var::P),
            "q" => Ok(Var::Q),
            "r" => Ok(Var::R),
            "x" => Ok(Var::X),
            other => Err(Error::InvalidInput(format!("unknown variable `{other}`"))),
        }
    }
}

/// Exponent vector `(e_p, e_q, e_r, e_x)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub [u32; 4]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; 4]);

    pub fn var(v: Var, e: u32) -> Self {
        let mut m = [0; 4];
        m[v.index()] = e;
        Monomial(m)
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.0[v.index()]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(self, other: Monomial) -> Monomial {
        let mut m = self.0;
        for (a, b) in m.iter_mut().zip(other.0) {
            *a += b;
        }
        Monomial(m)
    }

    fn div(self, other: Monomial) -> Option<Monomial> {
        let mut m = self.0;
        for (a, b) in m.iter_mut().zip(other.0) {
            *a = a.checked_sub(b)?;
        }
        Some(Monomial(m))
    }

    /// Graded lexicographic key; a well-order, so exact division terminates.
    fn grlex(&self) -> (u32, [u32; 4]) {
        (self.degree(), self.0)
    }
}

/// Partial assignment of integer values to `p, q, r, x`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Assignment(pub [Option<i64>; 4]);

impl Assignment {
    /// Assign nothing.
    pub fn none() -> Self {
        Self::default()
    }

    /// `p = q = r = 1`, `x` left free.
    pub fn counts() -> Self {
        Self([Some(1), Some(1), Some(1), None])
    }

    /// Every variable set to 1.
    pub fn all_ones() -> Self {
        Self([Some(1); 4])
    }

    pub fn with(mut self, v: Var, value: i64) -> Self {
        self.0[v.index()] = Some(value);
        self
    }

    pub fn without(mut self, v: Var) -> Self {
        self.0[v.index()] = None;
        self
    }

    pub fn get(&self, v: Var) -> Option<i64> {
        self.0[v.index()]
    }

    pub fn is_set(&self, v: Var) -> bool {
        self.get(v).is_some()
    }

    /// Overlay `other` on top of `self`.
    pub fn merge(mut self, other: &Assignment) -> Self {
        for v in Var::ALL {
            if let Some(val) = other.get(v) {
                self.0[v.index()] = Some(val);
            }
        }
        self
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(Option::is_none)
    }
}

impl FromStr for Assignment {
    type Err = Error;

    /// Parses `p=1,q=1,x=0`; an empty string is the empty assignment.
    fn from_str(s: &str) -> Result<Self> {
        let mut a = Assignment::none();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (name, value) = part
                .split_once('=')
                .ok_or_else(|| Error::InvalidInput(format!("expected var=value, got `{part}`")))?;
            let v: Var = name.parse()?;
            let value: i64 = value
                .trim()
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad integer in `{part}`")))?;
            a.0[v.index()] = Some(value);
        }
        Ok(a)
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = Var::ALL
            .iter()
            .filter_map(|v| self.get(*v).map(|val| format!("{}={}", v.name(), val)))
            .collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Sparse polynomial in `p, q, r, x` with arbitrary-precision integer
/// coefficients. Zero coefficients are never stored, so derived equality is
/// structural equality of polynomials.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        Self::term(Monomial::ONE, c)
    }

    pub fn var(v: Var) -> Self {
        Self::term(Monomial::var(v, 1), 1)
    }

    pub fn var_pow(v: Var, e: u32) -> Self {
        Self::term(Monomial::var(v, e), 1)
    }

    pub fn term<T: Into<BigInt>>(m: Monomial, c: T) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn from_terms<I, T>(it: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, T)>,
        T: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (m, c) in it {
            p.add_term(m, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::ONE).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Value of a polynomial with no variables left, `None` otherwise.
    pub fn constant_value(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exp(v) > 0)
    }

    /// Variables that occur with positive exponent.
    pub fn free_vars(&self) -> Vec<Var> {
        Var::ALL.into_iter().filter(|v| self.contains_var(*v)).collect()
    }

    pub fn scale<T: Into<BigInt>>(&self, c: T) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, v)| (*m, v * &c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: Monomial) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Replace each assigned variable by its integer value.
    pub fn substitute(&self, a: &Assignment) -> Self {
        if a.is_empty() {
            return self.clone();
        }
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut exps = m.0;
            let mut c = c.clone();
            for v in Var::ALL {
                if let Some(val) = a.get(v) {
                    let e = exps[v.index()];
                    if e > 0 {
                        c *= Pow::pow(&BigInt::from(val), e);
                    }
                    exps[v.index()] = 0;
                }
            }
            out.add_term(Monomial(exps), c);
        }
        out
    }

    /// Coefficient of `v^m`, as a polynomial in the remaining variables.
    pub fn coeff_of(&self, v: Var, m: u32) -> Self {
        let mut out = Self::zero();
        for (k, c) in &self.terms {
            if k.exp(v) == m {
                let mut e = k.0;
                e[v.index()] = 0;
                out.add_term(Monomial(e), c.clone());
            }
        }
        out
    }

    /// `self|_{x^m}`.
    pub fn coeff_of_x(&self, m: u32) -> Self {
        self.coeff_of(Var::X, m)
    }

    /// Evaluate a fully specialized polynomial.
    pub fn evaluate(&self, a: &Assignment) -> Result<BigInt> {
        let s = self.substitute(a);
        s.constant_value().ok_or_else(|| {
            let names: Vec<_> = s.free_vars().iter().map(|v| v.name()).collect();
            Error::Unspecialized(names.join(","))
        })
    }

    fn leading(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().max_by_key(|(m, _)| m.grlex())
    }

    /// Exact division. A nonzero remainder is reported as an internal error:
    /// every quotient this crate forms is known to be a polynomial.
    pub fn div_exact(&self, d: &MultiPoly) -> Result<MultiPoly> {
        let (lm_d, lc_d) = d
            .leading()
            .map(|(m, c)| (*m, c.clone()))
            .ok_or_else(|| Error::Internal("division by the zero polynomial".into()))?;
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero();
        while let Some((lm, lc)) = rem.leading().map(|(m, c)| (*m, c.clone())) {
            let m = lm.div(lm_d);
            let (c, r) = lc.div_rem(&lc_d);
            match m {
                Some(m) if r.is_zero() => {
                    let t = MultiPoly::term(m, c);
                    rem -= &(&t * d);
                    quot += &t;
                }
                _ => {
                    return Err(Error::Internal(format!(
                        "inexact polynomial division: ({self}) / ({d})"
                    )))
                }
            }
        }
        Ok(quot)
    }
}

impl From<i64> for MultiPoly {
    fn from(c: i64) -> Self {
        MultiPoly::constant(c)
    }
}

impl From<BigInt> for MultiPoly {
    fn from(c: BigInt) -> Self {
        MultiPoly::constant(c)
    }
}

impl AddAssign<&MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&MultiPoly> for MultiPoly {
    fn sub_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c);
        }
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        if self.is_zero() || rhs.is_zero() {
            return MultiPoly::zero();
        }
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(*mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl fmt::Display for MultiPoly {
    /// Terms in ascending graded order, e.g. `1 + 2*x + x^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<_> = self.terms.iter().collect();
        keys.sort_by_key(|(m, _)| m.grlex());
        for (i, (m, c)) in keys.into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let vars: Vec<String> = Var::ALL
                .iter()
                .filter(|v| m.exp(**v) > 0)
                .map(|v| match m.exp(*v) {
                    1 => v.name().to_string(),
                    e => format!("{}^{}", v.name(), e),
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{}*{}", abs, vars.join("*"))?;
            }
        }
        Ok(())
    }
}
