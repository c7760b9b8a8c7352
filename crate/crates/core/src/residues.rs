//! Residue-sum and quadrature evaluation of the contour-integral
//! representations of normalized characters.
//!
//! All the integrands have simple poles exactly at the strict signature
//! mu = lambda + delta (shifted by one for the symplectic family), so every
//! integral collapses to a finite exact sum; quadrature over an explicit
//! rectangle exists only to validate the contour reasoning.

use crate::error::{argument, domain, Error, Result};
use crate::laurent::LaurentPolynomial;
use crate::scalar::{factorial, rat_int, Cpx, Rat, Real, Scalar};
use crate::signature::Signature;

/// Which integral representation to evaluate.
#[derive(Clone, Debug, PartialEq)]
pub enum ResidueFamily {
    /// Normalized Schur with filling 1^{N-1}.
    Schur1,
    /// Normalized Schur with geometric filling, ratio q.
    SchurQ(Rat),
    /// Normalized symplectic with filling 1^{N-1}.
    Symplectic1,
    /// Normalized symplectic with geometric filling, ratio q.
    SymplecticQ(Rat),
    /// Normalized multivariate Jacobi polynomial, parameters a, b > -1.
    Jacobi { a: Rat, b: Rat },
}

/// S_lambda(x; N, 1) * (x-1)^{N-1} / (N-1)! as an exact Laurent polynomial:
/// sum_i x^{mu_i} / prod_{j != i} (mu_i - mu_j), supported exactly on mu.
pub fn schur_laurent(lambda: &Signature) -> Result<LaurentPolynomial> {
    let mu = lambda.to_strict();
    let n = mu.len();
    if n == 0 {
        return Ok(LaurentPolynomial::one());
    }
    let mut p = LaurentPolynomial::zero();
    for i in 0..n {
        let mut den = Rat::from(1);
        for j in 0..n {
            if j != i {
                den *= Rat::from(mu.part(i) - mu.part(j));
            }
        }
        p.add_term(mu.part(i), Rat::from(1) / den);
    }
    Ok(p)
}

fn q_int(q: &Rat, m: i64) -> Rat {
    // [m]_q = (q^m - 1)/(q - 1)
    (q.powi(m) - Rat::from(1)) / (q.clone() - Rat::from(1))
}

fn q_factorial(q: &Rat, m: i64) -> Rat {
    let mut acc = Rat::from(1);
    for j in 1..=m {
        acc *= q_int(q, j);
    }
    acc
}

/// (a; q)_k = prod_{i=0}^{k-1} (1 - a q^i), exact.
pub fn q_pochhammer<T: Scalar>(a: &T, q: &Rat, k: usize) -> T {
    let mut acc = a.one_like();
    for i in 0..k {
        acc = acc * (a.one_like() - a.clone() * a.from_rat_like(&q.powi(i as i64)));
    }
    acc
}

fn check_q(q: &Rat) -> Result<()> {
    if *q.numer() == 0 {
        return argument("q must be nonzero");
    }
    if *q.denom() == 1 && (*q == 1 || *q == -1) {
        return argument("q must differ from +-1 for the q-families");
    }
    if q < &Rat::new() {
        return argument("q restricted to positive rationals");
    }
    Ok(())
}

/// Exact residue-sum evaluation of the family's contour integral at x.
pub fn residue_eval<T: Scalar>(
    family: &ResidueFamily,
    lambda: &Signature,
    x: &T,
) -> Result<T> {
    let n = lambda.len() as i64;
    if n == 0 {
        return Ok(x.one_like());
    }
    let mu = lambda.to_strict();
    match family {
        ResidueFamily::Schur1 => {
            if x.is_zero() || *x == x.one_like() {
                return domain("x must avoid {0, 1}");
            }
            let p = schur_laurent(lambda)?;
            let pref = x.from_rat_like(&factorial(n as u64 - 1))
                / (x.clone() - x.one_like()).powi(n - 1);
            Ok(pref * p.eval(x))
        }
        ResidueFamily::SchurQ(q) => {
            check_q(q)?;
            if x.is_zero() {
                return domain("x must be nonzero");
            }
            for i in 0..n - 1 {
                if *x == x.from_rat_like(&q.powi(i)) {
                    return domain(format!("x coincides with the excluded point q^{i}"));
                }
            }
            // S = [N-1]_q! q^C(N-1,2) (q-1)^{N-1} / prod_{i=1}^{N-1}(x - q^{i-1})
            //     * sum_k x^{mu_k} / prod_{j!=k} (q^{mu_k} - q^{mu_j})
            let mut sum = x.zero_like();
            for k in 0..mu.len() {
                let mut den = Rat::from(1);
                for j in 0..mu.len() {
                    if j != k {
                        den *= q.powi(mu.part(k)) - q.powi(mu.part(j));
                    }
                }
                sum = sum + x.powi(mu.part(k)) * x.from_rat_like(&(Rat::from(1) / den));
            }
            let c2 = (n - 1) * (n - 2) / 2;
            let cnum = q_factorial(q, n - 1) * q.powi(c2)
                * (q.clone() - Rat::from(1)).powi(n - 1);
            let mut denprod = x.one_like();
            for i in 0..n - 1 {
                denprod = denprod * (x.clone() - x.from_rat_like(&q.powi(i)));
            }
            Ok(x.from_rat_like(&cnum) / denprod * sum)
        }
        ResidueFamily::Symplectic1 => {
            lambda.require_nonnegative()?;
            if x.is_zero() {
                return domain("x must be nonzero");
            }
            if *x == x.one_like() || *x == x.from_i64_like(-1) {
                return domain("x must avoid {1, -1}");
            }
            // m_i = lambda_i + N - i + 1
            let m: Vec<i64> = mu.parts().iter().map(|&v| v + 1).collect();
            let mut sum = x.zero_like();
            for k in 0..m.len() {
                let mut den = Rat::from(1);
                for j in 0..m.len() {
                    if j != k {
                        den *= rat_int(m[k] - m[j]);
                    }
                    den *= rat_int(m[k] + m[j]);
                }
                sum = sum
                    + (x.powi(m[k]) - x.powi(-m[k])) * x.from_rat_like(&(Rat::from(1) / den));
            }
            let xi = x.powi(-1);
            let pref = x.from_rat_like(&(Rat::from(2) * factorial(2 * n as u64 - 1)))
                / ((x.clone() - xi.clone())
                    * (x.clone() + xi - x.from_i64_like(2)).powi(n - 1));
            Ok(pref * sum)
        }
        ResidueFamily::SymplecticQ(q) => {
            lambda.require_nonnegative()?;
            check_q(q)?;
            if x.is_zero() {
                return domain("x must be nonzero");
            }
            if *x == x.one_like() || *x == x.from_i64_like(-1) {
                return domain("x must avoid {1, -1}");
            }
            // General determinantal-class route: the printed theorem prefactor
            // is reconstructed from the class data (theta_i = q^i,
            // g(x;m) = x^{m+1} - x^{-m-1}, alpha, beta, c_N of the symplectic
            // class), which the univariate-definition tests pin down.
            let qm1 = q.clone() - Rat::from(1);
            let alpha = |m: i64| -> Rat {
                (q.powi(m + 1) + q.powi(-m - 1) - Rat::from(2)) / (qm1.clone() * qm1.clone())
            };
            let beta = |m: i64| -> Rat { (q.powi(m + 1) - q.powi(-m - 1)) / qm1.clone() };
            let mut sum = x.zero_like();
            for k in 0..mu.len() {
                let mk = mu.part(k);
                let mut den = beta(mk);
                for j in 0..mu.len() {
                    if j != k {
                        den *= alpha(mk) - alpha(mu.part(j));
                    }
                }
                sum = sum
                    + (x.powi(mk + 1) - x.powi(-mk - 1))
                        * x.from_rat_like(&(Rat::from(1) / den));
            }
            // c_{N-1}/c_N for c_N = (q-1)^{N^2} / ((-1)^C(N,2) Delta(q..q^N))
            let mut c_ratio = Rat::from(1) / qm1.powi(2 * n - 1);
            // Delta(q,...,q^N) / Delta(q,...,q^{N-1}) = prod_{i=1}^{N-1} (q^i - q^N)
            let mut vand_ratio = Rat::from(1);
            for i in 1..n {
                vand_ratio *= q.powi(i) - q.powi(n);
            }
            let sign = if (n - 1) % 2 == 1 { -1 } else { 1 };
            c_ratio *= vand_ratio * Rat::from(sign);
            // prod_{j=1}^{N-1} (x - theta_j), theta_j = q^j
            let mut theta_prod = x.one_like();
            for j in 1..n {
                theta_prod = theta_prod * (x.clone() - x.from_rat_like(&q.powi(j)));
            }
            // A-ratio -> X conversion: dd(q..q^N) Delta(x, q..q^{N-1}) /
            //                          (dd(x, q..q^{N-1}) Delta(q..q^N))
            let conv = symplectic_weyl_ratio(x, q, n)?;
            Ok(conv * x.from_rat_like(&c_ratio) / theta_prod * sum)
        }
        ResidueFamily::Jacobi { a, b } => {
            jacobi_residue(lambda, a, b, x)
        }
    }
}

/// dd(q,...,q^N) * Delta(x, q,...,q^{N-1}) / (dd(x, q,...,q^{N-1}) * Delta(q,...,q^N))
/// where dd is the symplectic Weyl denominator and Delta the Vandermonde.
fn symplectic_weyl_ratio<T: Scalar>(x: &T, q: &Rat, n: i64) -> Result<T> {
    // dd(z_1..z_m) = prod_i (z_i - z_i^-1) prod_{i<j} (z_i + z_i^-1 - z_j - z_j^-1)
    // Ratios are organized so every factor is either pure-rational or a
    // single factor in x.
    // dd(q..q^N)/dd(q..q^{N-1}) = (q^N - q^-N) prod_{i=1}^{N-1} (q^i + q^-i - q^N - q^-N)
    let mut dd_ratio = q.powi(n) - q.powi(-n);
    for i in 1..n {
        dd_ratio *= q.powi(i) + q.powi(-i) - q.powi(n) - q.powi(-n);
    }
    // dd(x, q..q^{N-1}) / dd(q..q^{N-1}) = (x - x^-1) prod_{i=1}^{N-1} (x + x^-1 - q^i - q^-i)
    let xi = x.powi(-1);
    let mut dd_x = x.clone() - xi.clone();
    for i in 1..n {
        dd_x = dd_x * (x.clone() + xi.clone() - x.from_rat_like(&(q.powi(i) + q.powi(-i))));
    }
    if dd_x.is_zero() {
        return domain("x makes the symplectic Weyl denominator vanish");
    }
    // Delta(x, q..q^{N-1}) / Delta(q..q^{N-1}) = prod_{i=1}^{N-1} (x - q^i)
    let mut v_x = x.one_like();
    for i in 1..n {
        v_x = v_x * (x.clone() - x.from_rat_like(&q.powi(i)));
    }
    // Delta(q..q^N)/Delta(q..q^{N-1}) = prod_{i=1}^{N-1}(q^i - q^N)
    let mut v_ratio = Rat::from(1);
    for i in 1..n {
        v_ratio *= q.powi(i) - q.powi(n);
    }
    Ok(x.from_rat_like(&dd_ratio) * v_x / (dd_x * x.from_rat_like(&v_ratio)))
}

/// Pochhammer (rising factorial) of a rational: a (a+1) ... (a+k-1).
fn poch(a: &Rat, k: i64) -> Rat {
    let mut acc = Rat::from(1);
    for i in 0..k {
        acc *= a.clone() + Rat::from(i);
    }
    acc
}

/// The classical Jacobi polynomial p_m(x; a, b) through its terminating
/// hypergeometric series; exact for rational data.
pub fn jacobi_poly<T: Scalar>(m: i64, a: &Rat, b: &Rat, x: &T) -> T {
    // Gamma(m+a+1)/(Gamma(m+1) Gamma(a+1)) = Poch(a+1, m)/m!
    let lead = poch(&(a.clone() + Rat::from(1)), m) / factorial(m as u64);
    let t = (x.one_like() - x.clone()) * x.from_rat_like(&Rat::from((1, 2)));
    let mut sum = x.zero_like();
    let mut coeff = Rat::from(1); // (-m)_k (m+a+b+1)_k / ((a+1)_k k!)
    let mut tpow = x.one_like();
    for k in 0..=m {
        sum = sum + tpow.clone() * x.from_rat_like(&coeff);
        if k < m {
            let kk = Rat::from(k);
            let upd = (Rat::from(-m) + kk.clone())
                * (Rat::from(m) + a.clone() + b.clone() + Rat::from(1) + kk.clone())
                / ((a.clone() + Rat::from(1) + kk.clone()) * (kk + Rat::from(1)));
            coeff *= upd;
            tpow = tpow * t.clone();
        }
    }
    sum * x.from_rat_like(&lead)
}

/// Normalized Jacobi J_lambda(z; N, a, b) by the residue sum of its contour
/// representation, with the prefactor reconstructed from the class data
/// (the printed constant is fixed against N = 1 and lambda = 0).
fn jacobi_residue<T: Scalar>(lambda: &Signature, a: &Rat, b: &Rat, z: &T) -> Result<T> {
    lambda.require_nonnegative()?;
    if *a <= Rat::from(-1) || *b <= Rat::from(-1) {
        return argument("jacobi parameters must satisfy a, b > -1");
    }
    if z.is_zero() {
        return domain("z must be nonzero");
    }
    if *z == z.one_like() {
        return domain("z must differ from 1");
    }
    let n = lambda.len() as i64;
    let mu = lambda.to_strict();
    let abp1 = a.clone() + b.clone() + Rat::from(1);
    let alpha = |m: i64| -> Rat { Rat::from(m) * (Rat::from(m) + abp1.clone()) };
    // beta(m) = Gamma(m+a+1)/(Gamma(m+1) Gamma(a)) = Poch(a, m+1)/m!
    let beta = |m: i64| -> Rat { poch(a, m + 1) / factorial(m as u64) };
    let x = (z.clone() + z.powi(-1)) * z.from_rat_like(&Rat::from((1, 2)));
    let mut sum = z.zero_like();
    for k in 0..mu.len() {
        let mk = mu.part(k);
        let mut den = beta(mk);
        for j in 0..mu.len() {
            if j != k {
                den *= alpha(mk) - alpha(mu.part(j));
            }
        }
        sum = sum + jacobi_poly(mk, a, b, &x) * z.from_rat_like(&(Rat::from(1) / den));
    }
    // c_{N-1}/c_N with
    // c_N = prod_{r=1}^N Gamma(r)Gamma(a)/Gamma(r+a)
    //       * prod_{1<=i<j<=N} 1/((j-i)(2N-i-j+a+b+1))
    // The Gamma part of the ratio is Gamma(N+a)/(Gamma(N)Gamma(a)) = Poch(a,N)/(N-1)!.
    let mut c_ratio = poch(a, n) / factorial(n as u64 - 1);
    for i in 1..=n {
        for j in i + 1..=n {
            c_ratio *= Rat::from(j - i)
                * (Rat::from(2 * n - i - j) + abp1.clone());
        }
    }
    for i in 1..n {
        for j in i + 1..n {
            c_ratio /= Rat::from(j - i)
                * (Rat::from(2 * (n - 1) - i - j) + abp1.clone());
        }
    }
    // theta_i = 1: prod (x - 1)^{N-1}
    let xm1 = x - z.one_like();
    if xm1.is_zero() {
        return domain("z + 1/z = 2 puts the argument on the confluent point");
    }
    Ok(z.from_rat_like(&c_ratio) / xm1.powi(n - 1) * sum)
}

/// Rectangular contour for quadrature validation.
#[derive(Clone, Debug)]
pub struct RectContour {
    pub left: f64,
    pub right: f64,
    pub half_height: f64,
    pub samples_per_unit: u32,
}

impl RectContour {
    /// A contour enclosing all poles of the Theorem-integrand for lambda,
    /// with margin 1 on each side.
    pub fn enclosing(lambda: &Signature) -> Self {
        let mu = lambda.to_strict();
        let lo = mu.parts().last().copied().unwrap_or(0) as f64;
        let hi = mu.parts().first().copied().unwrap_or(0) as f64;
        RectContour {
            left: lo - 1.0,
            right: hi + 1.0,
            half_height: 1.0,
            samples_per_unit: 512,
        }
    }
}

/// Trapezoid quadrature of the Schur-1 integrand over the rectangle, checked
/// by Richardson extrapolation; must match `residue_eval(Schur1)`.
pub fn contour_quadrature(lambda: &Signature, x: &Cpx, contour: &RectContour) -> Result<Cpx> {
    let n = lambda.len();
    if n == 0 {
        return Ok(x.one_like());
    }
    let mu = lambda.to_strict();
    let (lo, hi) = (
        *mu.parts().last().unwrap() as f64,
        *mu.parts().first().unwrap() as f64,
    );
    if contour.left >= lo || contour.right <= hi {
        return argument(format!(
            "contour [{}, {}] does not enclose the poles [{}, {}]",
            contour.left, contour.right, lo, hi
        ));
    }
    if contour.half_height <= 0.0 {
        return argument("half_height must be positive");
    }
    if contour.samples_per_unit < 4 {
        return argument("need at least 4 samples per unit length");
    }
    if x.is_zero() || *x == x.one_like() {
        return domain("x must avoid {0, 1}");
    }
    let prec = x.prec();
    let lnx = x.ln();
    let integrand = |z: &Cpx| -> Result<Cpx> {
        let mut den = z.one_like();
        for &m in mu.parts() {
            den = den * (z - &Cpx::from_i64(m, prec));
        }
        if den.mag() < 1e-12 {
            return Err(Error::Quadrature(format!(
                "pole on or near the contour at z = {:?}",
                z.to_f64_pair()
            )));
        }
        Ok((&lnx * z).exp() / den)
    };

    // corners, counterclockwise
    let corners = [
        Cpx::new(
            Real::from_f64(contour.right, prec),
            Real::from_f64(-contour.half_height, prec),
        ),
        Cpx::new(
            Real::from_f64(contour.right, prec),
            Real::from_f64(contour.half_height, prec),
        ),
        Cpx::new(
            Real::from_f64(contour.left, prec),
            Real::from_f64(contour.half_height, prec),
        ),
        Cpx::new(
            Real::from_f64(contour.left, prec),
            Real::from_f64(-contour.half_height, prec),
        ),
    ];

    let integrate = |subdiv: u32| -> Result<Cpx> {
        let mut total = Cpx::zero(prec);
        for s in 0..4 {
            let a = &corners[s];
            let b = &corners[(s + 1) % 4];
            let len = (b - a).mag();
            let m = ((len * subdiv as f64).ceil() as usize).max(4);
            let dz = (b - a) * Cpx::from_rat(&Rat::from((1, m as i64)), prec);
            // composite trapezoid on the segment
            let mut acc = (integrand(a)? + integrand(b)?)
                * Cpx::from_rat(&Rat::from((1, 2)), prec);
            for t in 1..m {
                let z = a + &(&dz * &Cpx::from_i64(t as i64, prec));
                acc = acc + integrand(&z)?;
            }
            total = total + acc * dz;
        }
        Ok(total)
    };

    let coarse = integrate(contour.samples_per_unit)?;
    let fine = integrate(contour.samples_per_unit * 2)?;
    // Richardson step for the O(h^2) trapezoid error
    let third = Cpx::from_rat(&Rat::from((1, 3)), prec);
    let extrap = &fine + &((&fine - &coarse) * third);

    let two_pi_i = Cpx::new(Real::new(prec), &Real::pi(prec) * &Real::from_i64(2, prec));
    let pref = Cpx::from_rat(&factorial(n as u64 - 1), prec)
        / (x - &Cpx::one(prec)).powi(n as i64 - 1);
    Ok(pref * extrap / two_pi_i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use crate::symfunc::{normalized_character, CharFamily};

    fn sig(parts: &[i64]) -> Signature {
        Signature::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn laurent_single_box() {
        // lambda=(1,0): mu=(2,0): x^2/2 - 1/2
        let p = schur_laurent(&sig(&[1, 0])).unwrap();
        assert_eq!(p.coeff(2), rat(1, 2));
        assert_eq!(p.coeff(0), rat(-1, 2));
        // times 1!/(x-1) at x=3: (9/2-1/2)/2 = 2
        assert_eq!(p.eval_rat(&rat(3, 1)), rat(4, 1));
    }

    #[test]
    fn laurent_zero_signature_n3() {
        // S == 1 identity: coefficients of (x-1)^2/2!
        let p = schur_laurent(&sig(&[0, 0, 0])).unwrap();
        assert_eq!(p.coeff(2), rat(1, 2));
        assert_eq!(p.coeff(1), rat(-1, 1));
        assert_eq!(p.coeff(0), rat(1, 2));
    }

    #[test]
    fn laurent_support_size() {
        let l = sig(&[3, 1, 0, -2]);
        let p = schur_laurent(&l).unwrap();
        assert_eq!(p.num_terms(), 4);
        let mu = l.to_strict();
        assert_eq!(p.support().collect::<Vec<_>>(), {
            let mut v = mu.parts().to_vec();
            v.reverse();
            v
        });
    }

    #[test]
    fn laurent_shift_invariance() {
        let l = sig(&[2, 0, -1]);
        let p = schur_laurent(&l).unwrap();
        let q = schur_laurent(&l.shifted(3)).unwrap();
        assert_eq!(p.shifted(3), q);
    }

    #[test]
    fn schur1_residue_matches_branching() {
        // S_(1,0)(2; 2, 1) = (2+1)/2 = 3/2
        let v: Rat = residue_eval(&ResidueFamily::Schur1, &sig(&[1, 0]), &rat(2, 1)).unwrap();
        assert_eq!(v, rat(3, 2));
    }

    #[test]
    fn schur_q_residue_single_box() {
        // S_(1,0)(x; 2, q) = s(x,1)/s(1,q) = (x+1)/(1+q); x=3, q=1/2 -> 8/3
        let v: Rat = residue_eval(
            &ResidueFamily::SchurQ(rat(1, 2)),
            &sig(&[1, 0]),
            &rat(3, 1),
        )
        .unwrap();
        assert_eq!(v, rat(8, 3));
    }

    #[test]
    fn schur_q_residue_matches_oracle() {
        let l = sig(&[2, 0, -1]);
        let q = rat(2, 3);
        let x = rat(5, 2);
        let v: Rat = residue_eval(&ResidueFamily::SchurQ(q.clone()), &l, &x).unwrap();
        let o = normalized_character(CharFamily::Schur, &l, &[x], &q).unwrap();
        assert_eq!(v, o);
    }

    #[test]
    fn symplectic1_residue_matches_oracle() {
        let l = sig(&[1, 0]);
        let x = rat(2, 1);
        let v: Rat = residue_eval(&ResidueFamily::Symplectic1, &l, &x).unwrap();
        let o = normalized_character(CharFamily::Symplectic, &l, &[x], &rat(1, 1)).unwrap();
        assert_eq!(v, o);
    }

    #[test]
    fn symplectic_q_residue_matches_oracle() {
        for parts in [&[0i64, 0][..], &[1, 0], &[2, 1], &[3, 1]] {
            let l = sig(parts);
            let q = rat(1, 2);
            let x = rat(3, 1);
            let v: Rat = residue_eval(&ResidueFamily::SymplecticQ(q.clone()), &l, &x).unwrap();
            let o = normalized_character(CharFamily::Symplectic, &l, &[x], &q).unwrap();
            assert_eq!(v, o);
        }
    }

    #[test]
    fn jacobi_residue_trivial_cases() {
        let a = rat(1, 3);
        let b = rat(1, 4);
        // lambda = 0 (any N): J == 1
        for n in 1..=3 {
            let v: Rat = residue_eval(
                &ResidueFamily::Jacobi {
                    a: a.clone(),
                    b: b.clone(),
                },
                &Signature::zero(n),
                &rat(3, 1),
            )
            .unwrap();
            assert_eq!(v, rat(1, 1), "N = {n}");
        }
    }

    #[test]
    fn jacobi_residue_n1_matches_direct() {
        // N=1: J_lambda(z;1,a,b) = p_m((z+1/z)/2)/p_m(1), m = lambda_1
        let a = rat(1, 2);
        let b = rat(1, 2);
        let z = rat(2, 1);
        let x = rat(5, 4); // (2 + 1/2)/2
        for m in 1..=3i64 {
            let l = sig(&[m]);
            let v: Rat = residue_eval(
                &ResidueFamily::Jacobi {
                    a: a.clone(),
                    b: b.clone(),
                },
                &l,
                &z,
            )
            .unwrap();
            let direct = jacobi_poly(m + 0, &a, &b, &x) / jacobi_poly(m, &a, &b, &rat(1, 1));
            assert_eq!(v, direct, "m = {m}");
        }
    }

    #[test]
    fn excluded_points_error() {
        assert!(residue_eval::<Rat>(&ResidueFamily::Schur1, &sig(&[1, 0]), &rat(1, 1)).is_err());
        assert!(residue_eval::<Rat>(&ResidueFamily::Schur1, &sig(&[1, 0]), &rat(0, 1)).is_err());
        assert!(
            residue_eval::<Rat>(&ResidueFamily::SymplecticQ(rat(1, 2)), &sig(&[1, 0]), &rat(-1, 1))
                .is_err()
        );
    }
}
