//! Exact enumeration and generating functions for bi-matches of length-2
//! patterns in the wreath product `C_k ≀ S_n`.
//!
//! The crate is organised bottom-up:
//!
//! - [`signed`]: signed permutations `(σ, w)`, patterns, reductions and the
//!   rise/descent statistics.
//! - [`algebra`]: sparse integer polynomials in `p, q, r, x` and the
//!   `p,q`-analogues built on them.
//! - [`series`]: truncated `p,q`-exponential generating functions stored with
//!   polynomial coefficients.
//! - [`genfun`]: the closed-form generating functions `D, A, B, N, P, G, H, R, S`
//!   for the four built-in pattern families.
//! - [`brick`]: brick tabloids, the `h`-to-`e` transition and the
//!   sign-reversing involutions behind the closed forms.
//! - [`oracle`]: brute-force enumeration used as ground truth.
//! - [`polyk`]: polynomials in `k` recovered by interpolation, plus the
//!   Stirling/Eulerian identities and conjecture checks.
//! - [`cli`]: report generation behind the `wreathmatch` binary.

pub mod algebra;
pub mod brick;
pub mod cli;
pub mod error;
pub mod genfun;
pub mod oracle;
pub mod polyk;
pub mod series;
pub mod signed;

pub use algebra::{Assignment, Monomial, MultiPoly, Var};
pub use error::{Error, Result};
pub use genfun::Family;
pub use polyk::KPolynomial;
pub use series::PqEgf;
pub use signed::{Pattern, PatternSet, SignedPermutation};
