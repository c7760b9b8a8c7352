//! High-precision complex scalar with principal-branch transcendentals.

use super::real::Real;
use super::{Rat, Scalar};
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Clone, Debug, PartialEq)]
pub struct Cpx {
    pub re: Real,
    pub im: Real,
}

impl Cpx {
    pub fn new(re: Real, im: Real) -> Self {
        Cpx { re, im }
    }

    pub fn zero(prec: u32) -> Self {
        Cpx::new(Real::new(prec), Real::new(prec))
    }

    pub fn one(prec: u32) -> Self {
        Cpx::new(Real::from_i64(1, prec), Real::new(prec))
    }

    pub fn from_i64(v: i64, prec: u32) -> Self {
        Cpx::new(Real::from_i64(v, prec), Real::new(prec))
    }

    pub fn from_f64(v: f64, prec: u32) -> Self {
        Cpx::new(Real::from_f64(v, prec), Real::new(prec))
    }

    pub fn from_rat(v: &Rat, prec: u32) -> Self {
        Cpx::new(Real::from_rat(v, prec), Real::new(prec))
    }

    pub fn from_real(re: Real) -> Self {
        let p = re.prec();
        Cpx::new(re, Real::new(p))
    }

    pub fn i(prec: u32) -> Self {
        Cpx::new(Real::new(prec), Real::from_i64(1, prec))
    }

    pub fn prec(&self) -> u32 {
        self.re.prec().max(self.im.prec())
    }

    pub fn with_prec(&self, prec: u32) -> Self {
        Cpx::new(self.re.with_prec(prec), self.im.with_prec(prec))
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Cpx::new(self.re.clone(), -&self.im)
    }

    pub fn norm_sqr(&self) -> Real {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn abs(&self) -> Real {
        self.norm_sqr().sqrt()
    }

    /// Principal argument in (-pi, pi].
    pub fn arg(&self) -> Real {
        self.im.atan2(&self.re)
    }

    pub fn recip(&self) -> Self {
        let n = self.norm_sqr();
        Cpx::new(&self.re / &n, -&(&self.im / &n))
    }

    pub fn exp(&self) -> Self {
        let m = self.re.exp();
        let (s, c) = self.im.sin_cos();
        Cpx::new(&m * &c, &m * &s)
    }

    /// Principal logarithm: ln|z| + i arg z.
    pub fn ln(&self) -> Self {
        Cpx::new(self.abs().ln(), self.arg())
    }

    /// Principal square root.
    pub fn sqrt(&self) -> Self {
        if self.im.is_zero() && !self.re.is_sign_negative() {
            return Cpx::from_real(self.re.sqrt());
        }
        let r = self.abs().sqrt();
        let half = Real::from_rat(&Rat::from((1, 2)), self.prec());
        let theta = &self.arg() * &half;
        let (s, c) = theta.sin_cos();
        Cpx::new(&r * &c, &r * &s)
    }

    /// z^w = exp(w ln z) on the principal branch.
    pub fn pow(&self, w: &Cpx) -> Self {
        (self.ln() * w.clone()).exp()
    }

    pub fn mul_real(&self, r: &Real) -> Self {
        Cpx::new(&self.re * r, &self.im * r)
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }
}

macro_rules! cpx_delegate {
    ($trait:ident, $method:ident) => {
        impl $trait for Cpx {
            type Output = Cpx;
            fn $method(self, rhs: Cpx) -> Cpx {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a Cpx> for Cpx {
            type Output = Cpx;
            fn $method(self, rhs: &'a Cpx) -> Cpx {
                (&self).$method(rhs)
            }
        }
        impl<'a> $trait<Cpx> for &'a Cpx {
            type Output = Cpx;
            fn $method(self, rhs: Cpx) -> Cpx {
                self.$method(&rhs)
            }
        }
    };
}

impl<'a, 'b> Add<&'b Cpx> for &'a Cpx {
    type Output = Cpx;
    fn add(self, rhs: &'b Cpx) -> Cpx {
        Cpx::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'a, 'b> Sub<&'b Cpx> for &'a Cpx {
    type Output = Cpx;
    fn sub(self, rhs: &'b Cpx) -> Cpx {
        Cpx::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'a, 'b> Mul<&'b Cpx> for &'a Cpx {
    type Output = Cpx;
    fn mul(self, rhs: &'b Cpx) -> Cpx {
        let re = &(&self.re * &rhs.re) - &(&self.im * &rhs.im);
        let im = &(&self.re * &rhs.im) + &(&self.im * &rhs.re);
        Cpx::new(re, im)
    }
}

impl<'a, 'b> Div<&'b Cpx> for &'a Cpx {
    type Output = Cpx;
    fn div(self, rhs: &'b Cpx) -> Cpx {
        self * &rhs.recip()
    }
}

cpx_delegate!(Add, add);
cpx_delegate!(Sub, sub);
cpx_delegate!(Mul, mul);
cpx_delegate!(Div, div);

impl Neg for Cpx {
    type Output = Cpx;
    fn neg(self) -> Cpx {
        Cpx::new(-self.re, -self.im)
    }
}

impl<'a> Neg for &'a Cpx {
    type Output = Cpx;
    fn neg(self) -> Cpx {
        Cpx::new(-&self.re, -&self.im)
    }
}

impl Scalar for Cpx {
    fn zero_like(&self) -> Self {
        Cpx::zero(self.prec())
    }
    fn one_like(&self) -> Self {
        Cpx::one(self.prec())
    }
    fn from_i64_like(&self, v: i64) -> Self {
        Cpx::from_i64(v, self.prec())
    }
    fn from_rat_like(&self, v: &Rat) -> Self {
        Cpx::from_rat(v, self.prec())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn powi(&self, e: i64) -> Self {
        let mut base = if e < 0 { self.recip() } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = self.one_like();
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
    fn mag(&self) -> f64 {
        let (re, im) = self.to_f64_pair();
        re.hypot(im)
    }
}

impl std::fmt::Display for Cpx {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else {
            write!(f, "({} + {}i)", self.re, self.im)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: &Cpx, b: &Cpx, tol: f64) -> bool {
        (a - b).mag() < tol
    }

    #[test]
    fn exp_ln_roundtrip() {
        let z = Cpx::new(Real::from_f64(0.7, 192), Real::from_f64(-1.3, 192));
        assert!(close(&z.ln().exp(), &z, 1e-50));
    }

    #[test]
    fn principal_sqrt() {
        let z = Cpx::from_i64(-4, 128);
        let s = z.sqrt();
        assert!((s.re.to_f64()).abs() < 1e-30);
        assert!((s.im.to_f64() - 2.0).abs() < 1e-30);
    }

    #[test]
    fn powi_negative() {
        let z = Cpx::new(Real::from_i64(1, 128), Real::from_i64(1, 128));
        let w = z.powi(-2);
        // (1+i)^-2 = 1/(2i) = -i/2
        assert!((w.re.to_f64()).abs() < 1e-30);
        assert!((w.im.to_f64() + 0.5).abs() < 1e-30);
    }
}
