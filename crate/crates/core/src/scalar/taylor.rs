//! Truncated Taylor jets: value plus derivatives up to a fixed order.
//!
//! Coefficients are stored in the monomial basis of the displacement h,
//! f(x0 + h) = sum c_m h^m, so the m-th derivative is m! * c_m. Iterated
//! differential operators (the Jacobi second-order operator, operator
//! Vandermondes) are applied by evaluating on a jet of sufficient order.

use super::{Rat, Scalar};
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Clone, Debug, PartialEq)]
pub struct TaylorJet<T> {
    /// c[m] is the coefficient of h^m; length = order + 1.
    pub c: Vec<T>,
}

impl<T: Scalar> TaylorJet<T> {
    pub fn constant(val: T, order: usize) -> Self {
        let mut c = Vec::with_capacity(order + 1);
        let z = val.zero_like();
        c.push(val);
        for _ in 0..order {
            c.push(z.clone());
        }
        TaylorJet { c }
    }

    /// The expansion of the variable itself: x0 + h.
    pub fn variable(val: T, order: usize) -> Self {
        let mut j = TaylorJet::constant(val, order);
        if order >= 1 {
            j.c[1] = j.c[0].one_like();
        }
        j
    }

    pub fn order(&self) -> usize {
        self.c.len() - 1
    }

    pub fn value(&self) -> &T {
        &self.c[0]
    }

    /// m-th derivative at the expansion point: m! * c_m.
    pub fn derivative(&self, m: usize) -> T {
        let mut f = self.c[0].one_like();
        for i in 2..=m {
            f = f * self.c[0].from_i64_like(i as i64);
        }
        self.c[m].clone() * f
    }

    /// Multiplicative inverse; requires an invertible constant term.
    pub fn inv(&self) -> Self {
        let n = self.c.len();
        let mut out = Vec::with_capacity(n);
        let a0 = self.c[0].clone();
        let inv0 = a0.one_like() / a0;
        out.push(inv0.clone());
        for m in 1..n {
            // b_m = -inv0 * sum_{j=1..m} a_j b_{m-j}
            let mut s = self.c[0].zero_like();
            for j in 1..=m {
                s = s + self.c[j].clone() * out[m - j].clone();
            }
            out.push(-(inv0.clone() * s));
        }
        TaylorJet { c: out }
    }
}

impl<T: Scalar> Add for TaylorJet<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        debug_assert_eq!(self.c.len(), rhs.c.len());
        TaylorJet {
            c: self
                .c
                .into_iter()
                .zip(rhs.c)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl<T: Scalar> Sub for TaylorJet<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        debug_assert_eq!(self.c.len(), rhs.c.len());
        TaylorJet {
            c: self
                .c
                .into_iter()
                .zip(rhs.c)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl<T: Scalar> Mul for TaylorJet<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let n = self.c.len();
        debug_assert_eq!(n, rhs.c.len());
        let z = self.c[0].zero_like();
        let mut out = vec![z; n];
        for i in 0..n {
            if self.c[i].is_zero() {
                continue;
            }
            for j in 0..n - i {
                out[i + j] = out[i + j].clone() + self.c[i].clone() * rhs.c[j].clone();
            }
        }
        TaylorJet { c: out }
    }
}

impl<T: Scalar> Div for TaylorJet<T> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv()
    }
}

impl<T: Scalar> Neg for TaylorJet<T> {
    type Output = Self;
    fn neg(self) -> Self {
        TaylorJet {
            c: self.c.into_iter().map(|a| -a).collect(),
        }
    }
}

impl<T: Scalar> Scalar for TaylorJet<T> {
    fn zero_like(&self) -> Self {
        TaylorJet::constant(self.c[0].zero_like(), self.order())
    }
    fn one_like(&self) -> Self {
        TaylorJet::constant(self.c[0].one_like(), self.order())
    }
    fn from_i64_like(&self, v: i64) -> Self {
        TaylorJet::constant(self.c[0].from_i64_like(v), self.order())
    }
    fn from_rat_like(&self, v: &Rat) -> Self {
        TaylorJet::constant(self.c[0].from_rat_like(v), self.order())
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(|a| a.is_zero())
    }
    fn powi(&self, e: i64) -> Self {
        let mut base = if e < 0 { self.inv() } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = self.one_like();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * base.clone();
            }
            k >>= 1;
            if k > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
    fn mag(&self) -> f64 {
        self.c[0].mag()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn derivatives_of_reciprocal() {
        // f(x) = 1/x at x = 2: f' = -1/4, f'' = 1/4
        let x = TaylorJet::variable(rat(2, 1), 2);
        let f = x.powi(-1);
        assert_eq!(*f.value(), rat(1, 2));
        assert_eq!(f.derivative(1), rat(-1, 4));
        assert_eq!(f.derivative(2), rat(1, 4));
    }

    #[test]
    fn series_inverse_roundtrip() {
        let x = TaylorJet::variable(rat(3, 1), 4);
        let f = x.clone() * x.clone() + x.clone();
        let g = f.clone() * f.inv();
        assert_eq!(*g.value(), rat(1, 1));
        for m in 1..=4 {
            assert!(g.c[m].is_zero());
        }
    }
}
