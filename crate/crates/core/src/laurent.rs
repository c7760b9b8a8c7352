//! Laurent polynomials with exact rational coefficients.
//!
//! This is the canonical form of the residue sums: finitely many monomials
//! x^m with m ranging over the strict signature mu, plus whatever arises
//! from sums and products of such forms. Zero coefficients are never stored.

use crate::scalar::{Rat, Scalar};
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentPolynomial {
    coeffs: BTreeMap<i64, Rat>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        LaurentPolynomial {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(0, Rat::from(1))
    }

    pub fn monomial(exp: i64, coeff: Rat) -> Self {
        let mut coeffs = BTreeMap::new();
        if *coeff.numer() != 0 {
            coeffs.insert(exp, coeff);
        }
        LaurentPolynomial { coeffs }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, Rat)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: i64, coeff: Rat) {
        if *coeff.numer() == 0 {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(Rat::new);
        *entry += coeff;
        if *entry.numer() == 0 {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = i64> + '_ {
        self.coeffs.keys().copied()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rat)> + '_ {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, exp: i64) -> Rat {
        self.coeffs.get(&exp).cloned().unwrap_or_default()
    }

    /// Shift all exponents by m (multiplication by x^m).
    pub fn shifted(&self, m: i64) -> Self {
        LaurentPolynomial {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e + m, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if *c.numer() == 0 {
            return Self::zero();
        }
        LaurentPolynomial {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&e, v)| (e, Rat::from(v * c)))
                .collect(),
        }
    }

    /// The operator x d/dx: multiplies the coefficient of x^m by m.
    pub fn apply_x_d_dx(&self) -> Self {
        LaurentPolynomial {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(&e, _)| e != 0)
                .map(|(&e, c)| (e, Rat::from(c * Rat::from(e))))
                .collect(),
        }
    }

    /// Multiply the coefficient of x^m by w(m); realizes diagonal operators
    /// such as (x d/dx)^r or q-difference operators on the monomial basis.
    pub fn apply_diagonal(&self, mut weight: impl FnMut(i64) -> Rat) -> Self {
        let mut out = Self::zero();
        for (&e, c) in &self.coeffs {
            out.add_term(e, Rat::from(c * weight(e)));
        }
        out
    }

    /// Evaluate at a point of any scalar kind. Negative exponents require an
    /// invertible point.
    pub fn eval<T: Scalar>(&self, x: &T) -> T {
        let mut acc = x.zero_like();
        for (&e, c) in &self.coeffs {
            acc = acc + x.powi(e) * x.from_rat_like(c);
        }
        acc
    }

    /// Evaluate exactly at a rational point.
    pub fn eval_rat(&self, x: &Rat) -> Rat {
        self.eval(x)
    }
}

impl Add for LaurentPolynomial {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (e, c) in rhs.coeffs {
            self.add_term(e, c);
        }
        self
    }
}

impl Sub for LaurentPolynomial {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        for (e, c) in rhs.coeffs {
            self.add_term(e, -c);
        }
        self
    }
}

impl Neg for LaurentPolynomial {
    type Output = Self;
    fn neg(self) -> Self {
        LaurentPolynomial {
            coeffs: self.coeffs.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for LaurentPolynomial {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut out = Self::zero();
        for (&e1, c1) in &self.coeffs {
            for (&e2, c2) in &rhs.coeffs {
                out.add_term(e1 + e2, Rat::from(c1 * c2));
            }
        }
        out
    }
}

impl std::fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.coeffs.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match e {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*x")?,
                _ => write!(f, "{c}*x^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn cancellation_drops_terms() {
        let mut p = LaurentPolynomial::monomial(2, rat(1, 2));
        p.add_term(2, rat(-1, 2));
        assert!(p.is_zero());
    }

    #[test]
    fn evaluation_with_negative_exponents() {
        let p = LaurentPolynomial::from_terms([(-1, rat(1, 1)), (1, rat(1, 1))]);
        assert_eq!(p.eval_rat(&rat(2, 1)), rat(5, 2));
    }

    #[test]
    fn x_d_dx_kills_constants() {
        let p = LaurentPolynomial::from_terms([(0, rat(7, 1)), (3, rat(2, 1))]);
        let d = p.apply_x_d_dx();
        assert_eq!(d.coeff(0), rat(0, 1));
        assert_eq!(d.coeff(3), rat(6, 1));
    }
}
