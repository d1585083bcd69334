//! Exact rational and real-quadratic arithmetic.
//!
//! Every decision made in this crate that matters mathematically (signs,
//! equalities, divisibility) goes through this module, which is
//! integer-backed and exact. [`Rational`] is an arbitrary-precision
//! fraction kept in canonical form; [`QuadExt`] extends it with a single
//! square-root symbol `√m`.

mod quadext;

pub use quadext::QuadExt;

use num_bigint::BigInt;
use num_integer::Roots;
use thiserror::Error;

/// Arbitrary-precision rational in canonical form: positive denominator,
/// numerator and denominator coprime. Both properties are maintained by
/// the backing implementation after every operation.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("radicand mismatch: √{0} vs √{1}")]
    RadicandMismatch(u64, u64),
    #[error("radicand {0} is not a squarefree integer ≥ 2")]
    InvalidRadicand(u64),
    #[error("radicand {0} exceeds the supported bound {1}")]
    RadicandTooLarge(u64, u64),
    #[error("{0} is a perfect square ({1}²), so its square root is rational")]
    PerfectSquare(u64, u64),
    #[error("division by zero")]
    DivisionByZero,
}

/// Shorthand for `num/den` as a [`Rational`].
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Floor of √n over unsigned integers.
pub fn isqrt(n: u64) -> u64 {
    n.sqrt()
}

/// The exact root when `n` is a perfect square.
pub fn perfect_square_root(n: u64) -> Option<u64> {
    let r = isqrt(n);
    (r * r == n).then_some(r)
}

/// Decomposes `n ≥ 1` as `f²·m` with `m` squarefree, by trial division.
///
/// Trial division runs to √n, so this is only intended for the small
/// radicands that occur here (callers enforce a bound of 10⁶).
pub fn squarefree_decompose(n: u64) -> (u64, u64) {
    assert!(n >= 1, "squarefree_decompose needs n >= 1");
    let mut rest = n;
    let mut square_part = 1u64;
    let mut free_part = 1u64;
    let mut d = 2u64;
    while d * d <= rest {
        if rest.is_multiple_of(d) {
            let mut e = 0u32;
            while rest.is_multiple_of(d) {
                rest /= d;
                e += 1;
            }
            square_part *= d.pow(e / 2);
            if e % 2 == 1 {
                free_part *= d;
            }
        }
        d += 1;
    }
    // whatever remains is prime (or 1) with exponent one
    free_part *= rest;
    (square_part, free_part)
}

pub fn is_squarefree(n: u64) -> bool {
    squarefree_decompose(n).0 == 1
}
