//! High-precision binary floating point backing all coordinate work.
//!
//! Precision is a process-wide setting (default 192 mantissa bits) so
//! that accumulated error stays far below the 1e−9 identity tolerances
//! even for figures built from pairs up to 10⁶.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::atomic::{AtomicUsize, Ordering as AtomicOrdering};

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::exact::Rational;

pub const DEFAULT_PRECISION_BITS: usize = 192;
const MIN_PRECISION_BITS: usize = 64;
const RM: RoundingMode = RoundingMode::ToEven;

static PRECISION_BITS: AtomicUsize = AtomicUsize::new(DEFAULT_PRECISION_BITS);

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constants cache"));
}

/// Sets the working precision for all subsequent [`Real`] operations.
/// Values below 64 bits (about 19 decimal digits) are clamped up.
pub fn set_precision_bits(bits: usize) {
    PRECISION_BITS.store(bits.max(MIN_PRECISION_BITS), AtomicOrdering::SeqCst);
}

pub fn precision_bits() -> usize {
    PRECISION_BITS.load(AtomicOrdering::SeqCst)
}

/// A finite high-precision real number.
#[derive(Clone, Debug)]
pub struct Real(BigFloat);

impl Real {
    fn p() -> usize {
        precision_bits()
    }

    pub fn zero() -> Self {
        Real(BigFloat::from_i64(0, Self::p()))
    }

    pub fn one() -> Self {
        Real(BigFloat::from_i64(1, Self::p()))
    }

    pub fn from_int(v: i64) -> Self {
        Real(BigFloat::from_i64(v, Self::p()))
    }

    pub fn from_u64(v: u64) -> Self {
        Real(BigFloat::from_u64(v, Self::p()))
    }

    /// Exact for style parameters and powers of two; not meant for data
    /// that deserves exactness.
    pub fn from_f64(v: f64) -> Self {
        Real(BigFloat::from_f64(v, Self::p()))
    }

    pub fn from_bigint(v: &BigInt) -> Self {
        if let Some(small) = v.to_i128() {
            Real(BigFloat::from_i128(small, Self::p()))
        } else {
            let s = v.to_string();
            CONSTS.with(|cc| {
                Real(BigFloat::parse(
                    &s,
                    Radix::Dec,
                    Self::p(),
                    RM,
                    &mut cc.borrow_mut(),
                ))
            })
        }
    }

    pub fn from_rational(v: &Rational) -> Self {
        &Self::from_bigint(v.numer()) / &Self::from_bigint(v.denom())
    }

    pub fn pi() -> Self {
        CONSTS.with(|cc| Real(cc.borrow_mut().pi(Self::p(), RM)))
    }

    pub fn sqrt(&self) -> Self {
        Real(self.0.sqrt(Self::p(), RM))
    }

    pub fn sin(&self) -> Self {
        CONSTS.with(|cc| Real(self.0.sin(Self::p(), RM, &mut cc.borrow_mut())))
    }

    pub fn cos(&self) -> Self {
        CONSTS.with(|cc| Real(self.0.cos(Self::p(), RM, &mut cc.borrow_mut())))
    }

    pub fn abs(&self) -> Self {
        Real(self.0.abs())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative() && !self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive() && !self.0.is_zero()
    }

    pub fn max(&self, other: &Real) -> Real {
        if self >= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    pub fn min(&self, other: &Real) -> Real {
        if self <= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    /// Nearest `f64`, for reports and rendering only.
    pub fn to_f64(&self) -> f64 {
        format!("{}", self.0).parse().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl PartialEq for Real {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.0.partial_cmp(&other.0)
    }
}

impl Add for &Real {
    type Output = Real;
    fn add(self, rhs: &Real) -> Real {
        Real(self.0.add(&rhs.0, Real::p(), RM))
    }
}

impl Sub for &Real {
    type Output = Real;
    fn sub(self, rhs: &Real) -> Real {
        Real(self.0.sub(&rhs.0, Real::p(), RM))
    }
}

impl Mul for &Real {
    type Output = Real;
    fn mul(self, rhs: &Real) -> Real {
        Real(self.0.mul(&rhs.0, Real::p(), RM))
    }
}

impl Div for &Real {
    type Output = Real;
    fn div(self, rhs: &Real) -> Real {
        Real(self.0.div(&rhs.0, Real::p(), RM))
    }
}

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real(self.0.clone().neg())
    }
}

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real(self.0.neg())
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Real> for Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                (&self).$method(rhs)
            }
        }
        impl $trait<Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
forward_owned_binop!(Div, div);
