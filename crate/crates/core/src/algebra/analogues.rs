//! `p,q`-analogues of integers, factorials, binomials and multinomials, the
//! Gaussian binomial in `r`, and a handful of classical integer sequences.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::kpoly::KPolynomial;
use super::poly::{Monomial, MultiPoly, Var};
use crate::error::{Error, Result};
use crate::signed::{descents, next_permutation};

/// `[n]_{p,q} = p^{n-1} + p^{n-2} q + ... + q^{n-1}`; `[0]_{p,q} = 0`.
pub fn pq_int(n: u32) -> MultiPoly {
    MultiPoly::from_terms((0..n).map(|i| (Monomial([n - 1 - i, i, 0, 0]), 1)))
}

/// `[n]_{p,q}!`.
pub fn pq_factorial(n: u32) -> MultiPoly {
    (1..=n).fold(MultiPoly::one(), |acc, i| &acc * &pq_int(i))
}

/// `[n]!/([j]![n-j]!)`, by exact division.
pub fn pq_binom(n: u32, j: u32) -> Result<MultiPoly> {
    if j > n {
        return Err(Error::InvalidInput(format!("binomial ({n} choose {j}) with j > n")));
    }
    pq_multinom(n, &[j, n - j])
}

/// `[n]!/([a_1]! ... [a_m]!)`, by exact division.
pub fn pq_multinom(n: u32, parts: &[u32]) -> Result<MultiPoly> {
    let total: u32 = parts.iter().sum();
    if total != n {
        return Err(Error::InvalidInput(format!(
            "multinomial parts {parts:?} sum to {total}, not {n}"
        )));
    }
    let den = parts
        .iter()
        .fold(MultiPoly::one(), |acc, a| &acc * &pq_factorial(*a));
    pq_factorial(n).div_exact(&den)
}

/// Gaussian binomial `binom(n, j)_r` as a polynomial in `r`; zero when `j > n`.
pub fn gauss_binom_r(n: u32, j: u32) -> MultiPoly {
    if j > n {
        return MultiPoly::zero();
    }
    // Row-by-row q-Pascal: [m, i] = [m-1, i-1] + r^i [m-1, i].
    let mut row: Vec<MultiPoly> = vec![MultiPoly::one()];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m as usize + 1);
        for i in 0..=m {
            let mut v = MultiPoly::zero();
            if i >= 1 {
                v += &row[i as usize - 1];
            }
            if i < m {
                v += &row[i as usize].mul_monomial(Monomial::var(Var::R, i));
            }
            next.push(v);
        }
        row = next;
    }
    row.swap_remove(j as usize)
}

/// `[k]_{r^m} = 1 + r^m + r^{2m} + ... + r^{m(k-1)}`.
pub fn bracket_k_power(k: u32, m: u32) -> MultiPoly {
    MultiPoly::from_terms((0..k).map(|i| (Monomial::var(Var::R, m * i), 1)))
}

pub fn binomial(n: u64, j: u64) -> BigInt {
    if j > n {
        return BigInt::zero();
    }
    let j = j.min(n - j);
    (0..j).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Stirling numbers of the second kind, `S(n, j) = j S(n-1, j) + S(n-1, j-1)`.
pub fn stirling2(n: u32, j: u32) -> BigInt {
    let mut row = vec![BigInt::one()];
    for m in 1..=n as usize {
        let mut next = vec![BigInt::zero(); m + 1];
        for i in 1..=m {
            let stay = if i < m { &row[i] * i } else { BigInt::zero() };
            next[i] = stay + &row[i - 1];
        }
        row = next;
    }
    row.get(j as usize).cloned().unwrap_or_else(BigInt::zero)
}

/// Fibonacci numbers with `F_0 = 0`, `F_1 = F_2 = 1`.
pub fn fibonacci(n: u32) -> BigInt {
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for _ in 0..n {
        let c = &a + &b;
        a = std::mem::replace(&mut b, c);
    }
    a
}

/// `Σ_{σ ∈ S_n} k^{des(σ)+1}`, by enumerating `S_n`. The empty permutation
/// contributes `1`, matching the count of the empty signed permutation.
pub fn eulerian_poly(n: u32) -> KPolynomial {
    if n == 0 {
        return KPolynomial::one();
    }
    let mut counts = vec![0i64; n as usize + 1];
    let mut sigma: Vec<u32> = (1..=n).collect();
    loop {
        counts[descents(&sigma) + 1] += 1;
        if !next_permutation(&mut sigma) {
            break;
        }
    }
    KPolynomial::from_ints(counts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Assignment;

    fn q_to_r(p: &MultiPoly) -> MultiPoly {
        MultiPoly::from_terms(p.terms().map(|(m, c)| (Monomial([0, 0, m.0[1], 0]), c.clone())))
    }

    #[test]
    fn pq_integers() {
        let p = MultiPoly::var(Var::P);
        let q = MultiPoly::var(Var::Q);
        assert_eq!(pq_int(3), p.pow(2) + &p * &q + q.pow(2));
        assert_eq!(pq_int(0), MultiPoly::zero());
        assert_eq!(pq_factorial(0), MultiPoly::one());
    }

    #[test]
    fn pq_binomial_examples() {
        assert_eq!(pq_binom(5, 0).unwrap(), MultiPoly::one());
        // inv over rearrangements of 1100: 0,1,2,2,3,4
        let at_p1 = pq_binom(4, 2)
            .unwrap()
            .substitute(&Assignment::none().with(Var::P, 1));
        let expected = MultiPoly::from_terms(
            [(0, 1), (1, 1), (2, 2), (3, 1), (4, 1)].map(|(e, c)| (Monomial([0, e, 0, 0]), c)),
        );
        assert_eq!(at_p1, expected);
        assert!(matches!(pq_binom(2, 3), Err(Error::InvalidInput(_))));
        assert!(pq_multinom(4, &[1, 1]).is_err());
    }

    #[test]
    fn pq_binomial_symmetry_and_row_sums() {
        for n in 0..8 {
            let mut sum = BigInt::zero();
            for j in 0..=n {
                let b = pq_binom(n, j).unwrap();
                assert_eq!(b, pq_binom(n, n - j).unwrap());
                sum += b.evaluate(&Assignment::all_ones()).unwrap();
            }
            assert_eq!(sum, BigInt::from(1u64 << n));
        }
    }

    #[test]
    fn gauss_binomial_matches_pq_binomial_at_p1() {
        for n in 0..8 {
            for j in 0..=n {
                let via_div = pq_binom(n, j).unwrap().substitute(&Assignment::none().with(Var::P, 1));
                assert_eq!(gauss_binom_r(n, j), q_to_r(&via_div));
            }
        }
    }

    #[test]
    fn gauss_binomial_examples() {
        let r = MultiPoly::var(Var::R);
        assert_eq!(gauss_binom_r(3, 2), MultiPoly::one() + r.clone() + r.pow(2));
        assert_eq!(gauss_binom_r(6, 6), MultiPoly::one());
        assert_eq!(gauss_binom_r(2, 3), MultiPoly::zero());
        assert_eq!(bracket_k_power(2, 3), MultiPoly::one() + r.pow(3));
    }

    #[test]
    fn weakly_increasing_sequences_give_gauss_binomial() {
        // brute force over 0 <= a_1 <= ... <= a_n <= k-1
        fn walk(n: u32, k: u32, lo: u32, sum: u32, acc: &mut MultiPoly) {
            if n == 0 {
                acc.add_term(Monomial::var(Var::R, sum), 1.into());
                return;
            }
            for a in lo..k {
                walk(n - 1, k, a, sum + a, acc);
            }
        }
        for n in 0..=6 {
            for k in 1..=6 {
                let mut acc = MultiPoly::zero();
                walk(n, k, 0, 0, &mut acc);
                assert_eq!(acc, gauss_binom_r(n + k - 1, n), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn strictly_increasing_sequences_give_shifted_gauss_binomial() {
        fn walk(n: u32, k: u32, lo: u32, sum: u32, acc: &mut MultiPoly) {
            if n == 0 {
                acc.add_term(Monomial::var(Var::R, sum), 1.into());
                return;
            }
            for a in lo..k {
                walk(n - 1, k, a + 1, sum + a, acc);
            }
        }
        for n in 0..=6u32 {
            for k in 0..=6u32 {
                let mut acc = MultiPoly::zero();
                walk(n, k, 0, 0, &mut acc);
                let shift = Monomial::var(Var::R, n * n.saturating_sub(1) / 2);
                assert_eq!(acc, gauss_binom_r(k, n).mul_monomial(shift), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn integer_sequences() {
        assert_eq!(stirling2(3, 2), BigInt::from(3));
        assert_eq!(stirling2(0, 0), BigInt::one());
        assert_eq!(stirling2(5, 0), BigInt::zero());
        assert_eq!(stirling2(5, 3), BigInt::from(25));
        assert_eq!(fibonacci(1), BigInt::one());
        assert_eq!(fibonacci(2), BigInt::one());
        assert_eq!(fibonacci(3), BigInt::from(2));
        assert_eq!(fibonacci(13), BigInt::from(233));
        assert_eq!(binomial(6, 2), BigInt::from(15));
        assert_eq!(binomial(2, 6), BigInt::zero());
        assert_eq!(factorial(5), BigInt::from(120));
    }

    #[test]
    fn eulerian_polynomials() {
        assert_eq!(eulerian_poly(1), KPolynomial::from_ints([0, 1]));
        assert_eq!(eulerian_poly(3), KPolynomial::from_ints([0, 1, 4, 1]));
        assert_eq!(eulerian_poly(5), KPolynomial::from_ints([0, 1, 26, 66, 26, 1]));
    }
}
