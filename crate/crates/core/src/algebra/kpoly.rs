use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Polynomial in the single indeterminate `k` with exact rational
/// coefficients, stored in ascending degree with no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct KPolynomial {
    coeffs: Vec<BigRational>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl KPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints<I: IntoIterator<Item = i64>>(coeffs: I) -> Self {
        Self::new(coeffs.into_iter().map(rat).collect())
    }

    pub fn from_bigints<I: IntoIterator<Item = BigInt>>(coeffs: I) -> Self {
        Self::new(coeffs.into_iter().map(BigRational::from_integer).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_ints([1])
    }

    /// The polynomial `k`.
    pub fn k() -> Self {
        Self::from_ints([0, 1])
    }

    /// `k - a`.
    pub fn linear(a: i64) -> Self {
        Self::from_ints([-a, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> BigRational {
        self.coeffs.get(j).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, k: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * k + c)
    }

    pub fn eval_int(&self, k: i64) -> BigRational {
        self.eval(&rat(k))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `p(-k)`.
    pub fn negate_argument(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(j, c)| if j % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Every coefficient is an integer.
    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Divide by `k - a` if it is a factor.
    pub fn divide_root(&self, a: i64) -> Option<Self> {
        if self.is_zero() || !self.eval_int(a).is_zero() {
            return None;
        }
        // synthetic division
        let a = rat(a);
        let n = self.coeffs.len();
        let mut out = vec![BigRational::zero(); n - 1];
        let mut carry = BigRational::zero();
        for j in (1..n).rev() {
            carry = &self.coeffs[j] + carry * &a;
            out[j - 1] = carry.clone();
        }
        Some(Self::new(out))
    }

    /// Multiplicity of `k - a` as a factor.
    pub fn root_multiplicity(&self, a: i64) -> usize {
        let mut m = 0;
        let mut cur = self.clone();
        while let Some(next) = cur.divide_root(a) {
            m += 1;
            cur = next;
        }
        m
    }

    /// Split into `content * primitive`, where `primitive` has coprime integer
    /// coefficients and positive leading coefficient.
    pub fn content_and_primitive(&self) -> (BigRational, KPolynomial) {
        if self.is_zero() {
            return (BigRational::zero(), KPolynomial::zero());
        }
        let lcm_den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(lcm_den.clone())).to_integer())
            .collect();
        let mut g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if ints.last().is_some_and(Signed::is_negative) {
            g = -g;
        }
        let prim = KPolynomial::from_bigints(ints.iter().map(|c| c / &g));
        (BigRational::new(g, lcm_den), prim)
    }

    /// Factored rendering: rational content, linear factors `(k - a)` for
    /// small integer roots, then the primitive cofactor. Roots are searched
    /// in `[-3, 3]`.
    pub fn factored(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut rest = self.clone();
        let mut factors: Vec<(i64, usize)> = Vec::new();
        for a in [0, 1, -1, 2, -2, 3, -3] {
            let m = rest.root_multiplicity(a);
            for _ in 0..m {
                rest = rest.divide_root(a).expect("root just verified");
            }
            if m > 0 {
                factors.push((a, m));
            }
        }
        let (content, prim) = rest.content_and_primitive();
        let mut s = String::new();
        if content.is_negative() {
            s.push('-');
        }
        let abs = content.abs();
        let prim_is_one = prim.degree() == 0;
        if !abs.is_one() || (factors.is_empty() && prim_is_one) {
            if abs.is_integer() {
                s.push_str(&abs.to_string());
            } else {
                s.push_str(&format!("({abs})"));
            }
        }
        for (a, m) in &factors {
            let base = match a.cmp(&0) {
                std::cmp::Ordering::Equal => "k".to_string(),
                std::cmp::Ordering::Greater => format!("(k-{a})"),
                std::cmp::Ordering::Less => format!("(k+{})", -a),
            };
            s.push_str(&base);
            if *m > 1 {
                s.push_str(&format!("^{m}"));
            }
        }
        if !prim_is_one {
            if factors.is_empty() && abs.is_one() {
                s.push_str(&prim.to_string());
            } else {
                s.push_str(&format!("({prim})"));
            }
        }
        s
    }

    /// Coefficients as exact strings, ascending degree.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

impl Add for &KPolynomial {
    type Output = KPolynomial;
    fn add(self, rhs: &KPolynomial) -> KPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        KPolynomial::new((0..n).map(|j| self.coeff(j) + rhs.coeff(j)).collect())
    }
}

impl Sub for &KPolynomial {
    type Output = KPolynomial;
    fn sub(self, rhs: &KPolynomial) -> KPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &KPolynomial {
    type Output = KPolynomial;
    fn neg(self) -> KPolynomial {
        KPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &KPolynomial {
    type Output = KPolynomial;
    fn mul(self, rhs: &KPolynomial) -> KPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return KPolynomial::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        KPolynomial::new(out)
    }
}

impl fmt::Display for KPolynomial {
    /// Descending powers, e.g. `3651k^4 - 6490k^3 + 24`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let coef = if abs.is_integer() {
                abs.to_string()
            } else {
                format!("({abs})")
            };
            match j {
                0 => write!(f, "{coef}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{coef}")?;
                    }
                    write!(f, "k")?;
                    if j > 1 {
                        write!(f, "^{j}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
