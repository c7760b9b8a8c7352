//! High-precision real scalar backed by MPFR.
//!
//! Every value carries its precision in bits; binary operations allocate at
//! the larger of the two operand precisions, so precision never degrades
//! silently.

use super::Rat;
use rug::Float;
use std::cmp::Ordering;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Clone, Debug)]
pub struct Real(pub(crate) Float);

impl Real {
    pub fn new(prec: u32) -> Self {
        Real(Float::new(prec.max(53)))
    }

    pub fn from_i64(v: i64, prec: u32) -> Self {
        Real(Float::with_val(prec.max(53), v))
    }

    pub fn from_f64(v: f64, prec: u32) -> Self {
        Real(Float::with_val(prec.max(53), v))
    }

    pub fn from_rat(v: &Rat, prec: u32) -> Self {
        Real(Float::with_val(prec.max(53), v))
    }

    pub fn pi(prec: u32) -> Self {
        Real(Float::with_val(prec.max(53), rug::float::Constant::Pi))
    }

    pub fn prec(&self) -> u32 {
        self.0.prec()
    }

    /// Same numeric value re-rounded to a different precision.
    pub fn with_prec(&self, prec: u32) -> Self {
        let mut f = self.0.clone();
        f.set_prec(prec.max(53));
        Real(f)
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        self.0.is_finite()
    }

    pub fn is_sign_negative(&self) -> bool {
        self.0.is_sign_negative()
    }

    pub fn abs(&self) -> Self {
        Real(self.0.clone().abs())
    }

    pub fn sqrt(&self) -> Self {
        Real(self.0.clone().sqrt())
    }

    pub fn exp(&self) -> Self {
        Real(self.0.clone().exp())
    }

    pub fn ln(&self) -> Self {
        Real(self.0.clone().ln())
    }

    /// Base-2 logarithm; useful for valid-bit accounting.
    pub fn log2(&self) -> Self {
        Real(self.0.clone().log2())
    }

    pub fn sin(&self) -> Self {
        Real(self.0.clone().sin())
    }

    pub fn cos(&self) -> Self {
        Real(self.0.clone().cos())
    }

    pub fn sin_cos(&self) -> (Self, Self) {
        let (s, c) = self.0.clone().sin_cos(Float::new(self.0.prec()));
        (Real(s), Real(c))
    }

    /// Two-argument arctangent of self / x, in (-pi, pi].
    pub fn atan2(&self, x: &Real) -> Self {
        Real(self.0.clone().atan2(&x.0))
    }

    pub fn floor(&self) -> Self {
        Real(self.0.clone().floor())
    }

    pub fn recip(&self) -> Self {
        Real(self.0.clone().recip())
    }

    pub fn powi(&self, e: i64) -> Self {
        let p = self.0.prec();
        let mut base = if e < 0 { self.recip() } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = Real::from_i64(1, p);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn min(&self, other: &Real) -> Self {
        if self <= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    pub fn max(&self, other: &Real) -> Self {
        if self >= other {
            self.clone()
        } else {
            other.clone()
        }
    }
}

fn join_prec(a: &Real, b: &Real) -> u32 {
    a.0.prec().max(b.0.prec())
}

macro_rules! real_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl<'a, 'b> $trait<&'b Real> for &'a Real {
            type Output = Real;
            fn $method(self, rhs: &'b Real) -> Real {
                let p = join_prec(self, rhs);
                let mut x = self.0.clone();
                if x.prec() != p {
                    x.set_prec(p);
                }
                Real(x $op &rhs.0)
            }
        }
        impl $trait for Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a Real> for Real {
            type Output = Real;
            fn $method(self, rhs: &'a Real) -> Real {
                (&self).$method(rhs)
            }
        }
        impl<'a> $trait<Real> for &'a Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                self.$method(&rhs)
            }
        }
    };
}

real_binop!(Add, add, +);
real_binop!(Sub, sub, -);
real_binop!(Mul, mul, *);
real_binop!(Div, div, /);

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real(-self.0)
    }
}

impl<'a> Neg for &'a Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real(-self.0.clone())
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

impl std::fmt::Display for Real {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precision_is_preserved_by_ops() {
        let a = Real::from_i64(1, 256);
        let b = Real::from_i64(3, 128);
        assert_eq!((&a / &b).prec(), 256);
    }

    #[test]
    fn ln_exp_roundtrip() {
        let x = Real::from_rat(&Rat::from((7, 5)), 192);
        let y = x.ln().exp();
        let err = (&x - &y).abs();
        assert!(err.to_f64() < 1e-50);
    }

    #[test]
    fn integer_powers() {
        let x = Real::from_rat(&Rat::from((3, 2)), 128);
        let v = x.powi(-3);
        assert!((v.to_f64() - (2.0f64 / 3.0).powi(3)).abs() < 1e-15);
    }
}
