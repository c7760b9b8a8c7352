//! First-order jets (dual numbers) over any scalar kind.
//!
//! A jet a + eps*b with eps^2 = 0 propagates one derivative through
//! rational operations; seeding b = 1 at the probe variable turns any
//! evaluation into the operator x d/dx when combined with a final
//! multiplication by x.

use super::{Rat, Scalar};
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Clone, Debug, PartialEq)]
pub struct Jet<T> {
    pub val: T,
    pub der: T,
}

impl<T: Scalar> Jet<T> {
    pub fn constant(val: T) -> Self {
        let der = val.zero_like();
        Jet { val, der }
    }

    /// The probe variable itself: value v, derivative 1.
    pub fn variable(val: T) -> Self {
        let der = val.one_like();
        Jet { val, der }
    }
}

impl<T: Scalar> Add for Jet<T> {
    type Output = Jet<T>;
    fn add(self, rhs: Jet<T>) -> Jet<T> {
        Jet {
            val: self.val + rhs.val,
            der: self.der + rhs.der,
        }
    }
}

impl<T: Scalar> Sub for Jet<T> {
    type Output = Jet<T>;
    fn sub(self, rhs: Jet<T>) -> Jet<T> {
        Jet {
            val: self.val - rhs.val,
            der: self.der - rhs.der,
        }
    }
}

impl<T: Scalar> Mul for Jet<T> {
    type Output = Jet<T>;
    fn mul(self, rhs: Jet<T>) -> Jet<T> {
        let der = self.val.clone() * rhs.der.clone() + self.der * rhs.val.clone();
        Jet {
            val: self.val * rhs.val,
            der,
        }
    }
}

impl<T: Scalar> Div for Jet<T> {
    type Output = Jet<T>;
    fn div(self, rhs: Jet<T>) -> Jet<T> {
        let val = self.val.clone() / rhs.val.clone();
        // (b - (a/c) d) / c
        let der = (self.der - val.clone() * rhs.der) / rhs.val;
        Jet { val, der }
    }
}

impl<T: Scalar> Neg for Jet<T> {
    type Output = Jet<T>;
    fn neg(self) -> Jet<T> {
        Jet {
            val: -self.val,
            der: -self.der,
        }
    }
}

impl<T: Scalar> Scalar for Jet<T> {
    fn zero_like(&self) -> Self {
        Jet::constant(self.val.zero_like())
    }
    fn one_like(&self) -> Self {
        Jet::constant(self.val.one_like())
    }
    fn from_i64_like(&self, v: i64) -> Self {
        Jet::constant(self.val.from_i64_like(v))
    }
    fn from_rat_like(&self, v: &Rat) -> Self {
        Jet::constant(self.val.from_rat_like(v))
    }
    fn is_zero(&self) -> bool {
        self.val.is_zero() && self.der.is_zero()
    }
    fn powi(&self, e: i64) -> Self {
        // d/dx x^e = e x^(e-1), valid for negative e on invertible values
        let val = self.val.powi(e);
        let der = self.val.from_i64_like(e) * self.val.powi(e - 1) * self.der.clone();
        Jet { val, der }
    }
    fn mag(&self) -> f64 {
        self.val.mag()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn dual_number_axioms() {
        // (a+eps b)(c+eps d) = ac + eps(ad+bc)
        let x = Jet {
            val: rat(2, 1),
            der: rat(3, 1),
        };
        let y = Jet {
            val: rat(5, 1),
            der: rat(7, 1),
        };
        let z = x.clone() * y.clone();
        assert_eq!(z.val, rat(10, 1));
        assert_eq!(z.der, rat(2 * 7 + 3 * 5, 1));
        let w = z / y;
        assert_eq!(w.val, x.val);
        assert_eq!(w.der, x.der);
    }

    #[test]
    fn power_rule_including_negative() {
        let x = Jet::variable(rat(3, 2));
        let y = x.powi(-2);
        assert_eq!(y.val, rat(4, 9));
        // -2 * (3/2)^-3 = -2 * 8/27 = -16/27
        assert_eq!(y.der, rat(-16, 27));
    }
}
