//! Scalar kinds used throughout the crate.
//!
//! Two base kinds exist and the caller always picks one explicitly:
//! exact rationals ([`Rat`], arbitrary precision, no rounding ever) and
//! high-precision binary floats ([`Real`], [`Cpx`]) whose precision in bits
//! travels with every value. First-order jets ([`jet::Jet`]) and truncated
//! Taylor jets ([`taylor::TaylorJet`]) lift either kind to carry derivatives.

pub mod complex;
pub mod jet;
pub mod real;
pub mod taylor;

pub use complex::Cpx;
pub use jet::Jet;
pub use real::Real;
pub use taylor::TaylorJet;

use std::ops::{Add, Div, Mul, Neg, Sub};

/// Exact arbitrary-precision rational scalar.
pub type Rat = rug::Rational;
/// Exact arbitrary-precision integer.
pub type Int = rug::Integer;

/// Default precision for approximate scalars, in bits.
pub const DEFAULT_PREC: u32 = 128;

/// Shorthand for building a rational from a ratio of machine integers.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::from((num, den))
}

/// Shorthand for an integer-valued rational.
pub fn rat_int(v: i64) -> Rat {
    Rat::from(v)
}

/// The scalar interface shared by exact rationals, high-precision complex
/// numbers, and jets over either.
///
/// Approximate scalars carry a precision; constructors therefore take an
/// existing value (`self`) as a prototype whose context (precision) the new
/// value inherits. For `Rat` the prototype is ignored.
pub trait Scalar:
    Clone
    + PartialEq
    + std::fmt::Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn from_i64_like(&self, v: i64) -> Self;
    fn from_rat_like(&self, v: &Rat) -> Self;
    fn is_zero(&self) -> bool;
    /// Integer power, negative exponents allowed for invertible values.
    fn powi(&self, e: i64) -> Self;
    /// Rough magnitude used for pivot selection; exactness not required.
    fn mag(&self) -> f64;
}

impl Scalar for Rat {
    fn zero_like(&self) -> Self {
        Rat::new()
    }
    fn one_like(&self) -> Self {
        Rat::from(1)
    }
    fn from_i64_like(&self, v: i64) -> Self {
        Rat::from(v)
    }
    fn from_rat_like(&self, v: &Rat) -> Self {
        v.clone()
    }
    fn is_zero(&self) -> bool {
        *self.numer() == 0
    }
    fn powi(&self, e: i64) -> Self {
        if e == 0 {
            return Rat::from(1);
        }
        let p = self.clone().pow_exact(e.unsigned_abs());
        if e < 0 {
            Rat::from(1) / p
        } else {
            p
        }
    }
    fn mag(&self) -> f64 {
        self.to_f64().abs()
    }
}

/// Exact integer power of a rational by repeated squaring.
trait PowExact {
    fn pow_exact(self, e: u64) -> Self;
}

impl PowExact for Rat {
    fn pow_exact(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Rat::from(1);
        while e > 0 {
            if e & 1 == 1 {
                acc *= &base;
            }
            e >>= 1;
            if e > 0 {
                let b = base.clone();
                base *= b;
            }
        }
        acc
    }
}

/// Exact factorial as a rational.
pub fn factorial(n: u64) -> Rat {
    let mut acc = Int::from(1);
    for k in 2..=n {
        acc *= k;
    }
    Rat::from(acc)
}

/// Exact binomial coefficient; zero for k > n.
pub fn binomial(n: u64, k: u64) -> Int {
    if k > n {
        return Int::from(0);
    }
    let k = k.min(n - k);
    let mut num = Int::from(1);
    let mut den = Int::from(1);
    for i in 0..k {
        num *= n - i;
        den *= i + 1;
    }
    num / den
}
