//! Exact polynomial arithmetic: sparse integer polynomials in `p, q, r, x`,
//! rational polynomials in `k`, and the `p,q`-analogues built on them.

mod analogues;
mod kpoly;
mod poly;

pub use analogues::{
    binomial, bracket_k_power, eulerian_poly, factorial, fibonacci, gauss_binom_r, pq_binom,
    pq_factorial, pq_int, pq_multinom, stirling2,
};
pub use kpoly::KPolynomial;
pub use poly::{Assignment, Monomial, MultiPoly, Var};
