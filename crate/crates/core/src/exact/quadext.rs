//! Elements `p + q·√m` of a real quadratic field, with exact arithmetic,
//! exact sign decisions, and truncated decimal output.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{is_squarefree, rat, ExactError, Rational};

/// Largest radicand accepted by the squarefree trial-division check.
pub const MAX_RADICAND: u64 = 1_000_000;

/// An element `p + q·√m` of `Q(√m)` with `m` squarefree and ≥ 2.
///
/// Values with different radicands never combine: every binary operation
/// checks `m` and reports a mismatch as an error. Equality is
/// component-wise, which is sound because `√m` is irrational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadExt {
    m: u64,
    p: Rational,
    q: Rational,
}

impl QuadExt {
    /// Builds `p + q·√m`, validating that `m` is squarefree and ≥ 2.
    pub fn new(m: u64, p: Rational, q: Rational) -> Result<Self, ExactError> {
        if m > MAX_RADICAND {
            return Err(ExactError::RadicandTooLarge(m, MAX_RADICAND));
        }
        if m < 2 || !is_squarefree(m) {
            return Err(ExactError::InvalidRadicand(m));
        }
        Ok(QuadExt { m, p, q })
    }

    /// Same-field constructor for results of operations; skips the
    /// radicand check, which already held for the operands.
    fn with_parts(&self, p: Rational, q: Rational) -> Self {
        QuadExt { m: self.m, p, q }
    }

    /// The rational `r` viewed inside `Q(√m)`.
    pub fn from_rational(m: u64, r: Rational) -> Result<Self, ExactError> {
        Self::new(m, r, Rational::zero())
    }

    /// The integer `v` viewed inside `Q(√m)`.
    pub fn from_int(m: u64, v: i64) -> Result<Self, ExactError> {
        Self::from_rational(m, rat(v, 1))
    }

    /// `√k` for any nonsquare `k ≥ 2`, reduced to `f·√m` with `m` the
    /// squarefree part of `k`.
    pub fn sqrt(k: u64) -> Result<Self, ExactError> {
        if k > MAX_RADICAND {
            return Err(ExactError::RadicandTooLarge(k, MAX_RADICAND));
        }
        let (f, m) = super::squarefree_decompose(k);
        if m == 1 {
            return Err(ExactError::PerfectSquare(k, f));
        }
        Self::new(m, Rational::zero(), rat(f as i64, 1))
    }

    pub fn zero(m: u64) -> Result<Self, ExactError> {
        Self::from_int(m, 0)
    }

    pub fn one(m: u64) -> Result<Self, ExactError> {
        Self::from_int(m, 1)
    }

    pub fn radicand(&self) -> u64 {
        self.m
    }

    pub fn rational_part(&self) -> &Rational {
        &self.p
    }

    pub fn radical_part(&self) -> &Rational {
        &self.q
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.p.is_one() && self.q.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.q.is_zero()
    }

    fn check_same_field(&self, other: &Self) -> Result<(), ExactError> {
        if self.m != other.m {
            return Err(ExactError::RadicandMismatch(self.m, other.m));
        }
        Ok(())
    }

    /// Component-wise sum.
    pub fn add(&self, other: &Self) -> Result<Self, ExactError> {
        self.check_same_field(other)?;
        Ok(self.with_parts(&self.p + &other.p, &self.q + &other.q))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, ExactError> {
        self.check_same_field(other)?;
        Ok(self.with_parts(&self.p - &other.p, &self.q - &other.q))
    }

    /// `(p₁p₂ + q₁q₂·m) + (p₁q₂ + p₂q₁)·√m`.
    pub fn mul(&self, other: &Self) -> Result<Self, ExactError> {
        self.check_same_field(other)?;
        let m = rat(self.m as i64, 1);
        let p = &self.p * &other.p + &self.q * &other.q * &m;
        let q = &self.p * &other.q + &other.p * &self.q;
        Ok(self.with_parts(p, q))
    }

    pub fn neg(&self) -> Self {
        self.with_parts(-&self.p, -&self.q)
    }

    /// Scales by a rational factor.
    pub fn scale(&self, r: &Rational) -> Self {
        self.with_parts(&self.p * r, &self.q * r)
    }

    /// Conjugate `p − q·√m`.
    pub fn conjugate(&self) -> Self {
        self.with_parts(self.p.clone(), -&self.q)
    }

    /// Field norm `p² − m·q²`; zero only for the zero element.
    pub fn norm(&self) -> Rational {
        let m = rat(self.m as i64, 1);
        &self.p * &self.p - &self.q * &self.q * &m
    }

    /// Multiplicative inverse, conjugate over norm. Exact:
    /// `x.mul(&x.inv()?)` is one.
    pub fn inv(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let n = self.norm();
        // √m irrational, so the norm of a nonzero element cannot vanish
        assert!(
            !n.is_zero(),
            "nonzero element of Q(√{}) with zero norm",
            self.m
        );
        Ok(self.with_parts(&self.p / &n, -&self.q / &n))
    }

    pub fn div(&self, other: &Self) -> Result<Self, ExactError> {
        self.mul(&other.inv()?)
    }

    /// Exact sign of the real number `p + q·√m`: −1, 0 or +1.
    ///
    /// When `p` and `q` disagree in sign, the decision compares `p²`
    /// against `m·q²` as rationals; no approximation is involved.
    pub fn sign(&self) -> i32 {
        sign_of_parts(&self.p, &self.q, self.m)
    }

    /// Decimal expansion truncated toward zero to exactly `digits`
    /// fractional digits, computed by integer square-root scaling.
    ///
    /// Truncation means the printed magnitude never exceeds the true
    /// magnitude, and differs from it by less than one unit in the last
    /// place. A value that truncates to zero is printed without a sign.
    pub fn to_decimal(&self, digits: u32) -> String {
        assert!(digits >= 1, "to_decimal needs at least one digit");
        let sign = self.sign();
        let zeros = "0".repeat(digits as usize);
        if sign == 0 {
            return format!("0.{zeros}");
        }
        let (p, q) = if sign < 0 {
            (-&self.p, -&self.q)
        } else {
            (self.p.clone(), self.q.clone())
        };
        // |x|·10^digits = u + v√m; find its floor exactly.
        let scale = Rational::from_integer(BigInt::from(10u32).pow(digits));
        let u = &p * &scale;
        let v = &q * &scale;
        let mut t = u.floor().to_integer() + floor_sqrt_multiple(&v, self.m);
        // floor(a)+floor(b) is the true floor or one less; settle exactly.
        let candidate = &t + BigInt::from(1);
        let shifted = &u - Rational::from_integer(candidate.clone());
        if sign_of_parts(&shifted, &v, self.m) >= 0 {
            t = candidate;
        }
        debug_assert!(!t.is_negative());
        let digits_str = t.to_string();
        let pad = (digits as usize + 1).saturating_sub(digits_str.len());
        let padded = format!("{}{}", "0".repeat(pad), digits_str);
        let split = padded.len() - digits as usize;
        let body = format!("{}.{}", &padded[..split], &padded[split..]);
        if sign < 0 && !t.is_zero() {
            format!("-{body}")
        } else {
            body
        }
    }

    /// Nearest-enough `f64`, for reporting only.
    pub fn to_f64(&self) -> f64 {
        self.to_decimal(30).parse().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q.is_zero() {
            return write!(f, "{}", self.p);
        }
        if self.p.is_zero() {
            return write!(f, "{}·√{}", self.q, self.m);
        }
        if self.q.is_negative() {
            write!(f, "{} - {}·√{}", self.p, -&self.q, self.m)
        } else {
            write!(f, "{} + {}·√{}", self.p, self.q, self.m)
        }
    }
}

fn rational_sign(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_negative() {
        -1
    } else {
        1
    }
}

/// Exact sign of `p + q·√m`.
fn sign_of_parts(p: &Rational, q: &Rational, m: u64) -> i32 {
    let sp = rational_sign(p);
    let sq = rational_sign(q);
    if sq == 0 {
        return sp;
    }
    if sp == 0 {
        return sq;
    }
    if sp == sq {
        return sp;
    }
    // opposite signs: |p| vs |q|√m decided by squaring
    let p2 = p * p;
    let mq2 = q * q * rat(m as i64, 1);
    assert!(p2 != mq2, "p² = m·q² is impossible for irrational √m");
    if p2 > mq2 {
        sp
    } else {
        sq
    }
}

/// floor(v·√m) for rational `v`, via integer square roots.
fn floor_sqrt_multiple(v: &Rational, m: u64) -> BigInt {
    if v.is_zero() {
        return BigInt::zero();
    }
    let vn = v.numer();
    let vd = v.denom();
    // floor(√(vn²·m)/vd) = isqrt((vn²·m) div vd²)
    let scaled = vn * vn * BigInt::from(m);
    let base = (scaled / (vd * vd)).sqrt();
    if v.is_negative() {
        // v√m is irrational (v ≠ 0), so floor(−y) = −floor(y) − 1
        -base - 1
    } else {
        base
    }
}
