//! Exact evaluation oracles for Schur and symplectic characters and their
//! normalized ratios.
//!
//! The branching-rule evaluator is the independent oracle everything else is
//! tested against; the confluent bialternant ratio is the workhorse that
//! handles repeated specialization points by derivative rows.

use crate::error::{argument, domain, Error, Result};
use crate::linalg::{det_bareiss, Matrix};
use crate::scalar::{Rat, Scalar};
use crate::signature::{PointWithMultiplicity, Signature};
use std::collections::HashMap;

/// Which bialternant family a ratio refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CharFamily {
    Schur,
    Symplectic,
}

/// Evaluate s_lambda(x_1..x_N) by the iterated branching rule over
/// interlacing signatures. Exact; serves as the independent oracle.
pub fn schur_branching(lambda: &Signature, xs: &[Rat]) -> Result<Rat> {
    let n = lambda.len();
    if xs.len() != n {
        return argument(format!("need {} variables, got {}", n, xs.len()));
    }
    if lambda.parts().last().map_or(false, |&p| p < 0) && xs.iter().any(|x| *x.numer() == 0) {
        return domain("zero variable with a negative signature part");
    }
    let mut memo: Vec<HashMap<Vec<i64>, Rat>> = vec![HashMap::new(); n + 1];
    Ok(branch_rec(lambda.parts(), xs, &mut memo))
}

fn branch_rec(parts: &[i64], xs: &[Rat], memo: &mut Vec<HashMap<Vec<i64>, Rat>>) -> Rat {
    let level = parts.len();
    if level == 0 {
        return Rat::from(1);
    }
    if let Some(v) = memo[level].get(parts) {
        return v.clone();
    }
    let x = &xs[level - 1];
    let total: i64 = parts.iter().sum();
    let mut acc = Rat::new();
    for mu in interlacing_below(parts) {
        let sub = branch_rec(&mu, xs, memo);
        let w: i64 = mu.iter().sum();
        acc += sub * x.powi(total - w);
    }
    memo[level].insert(parts.to_vec(), acc.clone());
    acc
}

/// All signatures of length M-1 interlacing below `parts` (length M).
/// The interlacing set is exactly the product of intervals
/// [parts[i+1], parts[i]].
pub fn interlacing_below(parts: &[i64]) -> Vec<Vec<i64>> {
    let m = parts.len();
    if m == 0 {
        return vec![];
    }
    let mut out = vec![Vec::new()];
    for i in 0..m - 1 {
        let (lo, hi) = (parts[i + 1], parts[i]);
        let mut next = Vec::with_capacity(out.len() * (hi - lo + 1) as usize);
        for prefix in &out {
            for v in lo..=hi {
                let mut p = prefix.clone();
                p.push(v);
                next.push(p);
            }
        }
        out = next;
    }
    out
}

fn falling_factorial(a: i64, r: usize) -> Rat {
    let mut acc = Rat::from(1);
    for s in 0..r as i64 {
        acc *= Rat::from(a - s);
    }
    acc
}

/// d^r/dx^r of x^a, as (coefficient, new exponent).
fn monomial_derivative(a: i64, r: usize) -> (Rat, i64) {
    (falling_factorial(a, r), a - r as i64)
}

/// Row of the confluent numerator/denominator matrix: the r-th derivative of
/// g(x; m) for each exponent datum m in `exps`, evaluated at `x`.
fn confluent_row<T: Scalar>(
    family: CharFamily,
    x: &T,
    r: usize,
    exps: &[i64],
) -> Result<Vec<T>> {
    let mut row = Vec::with_capacity(exps.len());
    for &m in exps {
        let v = match family {
            CharFamily::Schur => {
                let (c, e) = monomial_derivative(m, r);
                if e < 0 && x.is_zero() {
                    return domain("confluent evaluation at 0 with negative exponent");
                }
                x.powi(e) * x.from_rat_like(&c)
            }
            CharFamily::Symplectic => {
                // g(x; m) = x^m - x^-m
                if x.is_zero() {
                    return domain("symplectic evaluation at 0");
                }
                let (c1, e1) = monomial_derivative(m, r);
                let (c2, e2) = monomial_derivative(-m, r);
                x.powi(e1) * x.from_rat_like(&c1) - x.powi(e2) * x.from_rat_like(&c2)
            }
        };
        row.push(v);
    }
    Ok(row)
}

/// The bialternant ratio det[g-rows] / det[denominator-rows] with confluent
/// (derivative) rows for repeated points. Equals s_lambda / chi_lambda at the
/// expanded point list; exact over rationals.
pub fn confluent_ratio<T: Scalar>(
    family: CharFamily,
    lambda: &Signature,
    points: &[PointWithMultiplicity<T>],
) -> Result<T> {
    let n = lambda.len();
    let total: usize = points.iter().map(|p| p.multiplicity).sum();
    if total != n {
        return argument(format!(
            "multiplicities sum to {total}, signature length is {n}"
        ));
    }
    if n == 0 {
        return argument("confluent ratio of the empty signature needs a scalar prototype; use weyl_dim instead");
    }
    for (i, p) in points.iter().enumerate() {
        if p.multiplicity == 0 {
            return argument("zero multiplicity point");
        }
        for q in &points[i + 1..] {
            if p.point == q.point {
                return argument("repeated points must be merged into one multiplicity");
            }
        }
    }
    if family == CharFamily::Symplectic {
        lambda.require_nonnegative()?;
    }

    let mu = lambda.to_strict();
    // numerator exponent data and denominator exponent data per column
    let (num_exps, den_exps): (Vec<i64>, Vec<i64>) = match family {
        CharFamily::Schur => (
            mu.parts().to_vec(),
            (0..n).map(|j| (n - 1 - j) as i64).collect(),
        ),
        CharFamily::Symplectic => (
            mu.parts().iter().map(|&m| m + 1).collect(),
            (0..n).map(|j| (n - j) as i64).collect(),
        ),
    };

    let mut num_rows = Vec::with_capacity(n);
    let mut den_rows = Vec::with_capacity(n);
    for p in points {
        for r in 0..p.multiplicity {
            num_rows.push(confluent_row(family, &p.point, r, &num_exps)?);
            den_rows.push(confluent_row(family, &p.point, r, &den_exps)?);
        }
    }
    let num = det_bareiss(&Matrix::from_rows(num_rows));
    let den = det_bareiss(&Matrix::from_rows(den_rows));
    if den.is_zero() {
        let at = points
            .iter()
            .map(|p| format!("{:?}^{}", p.point.mag(), p.multiplicity))
            .collect::<Vec<_>>()
            .join(", ");
        return Err(Error::Singular(format!(
            "confluent denominator vanished at points [{at}]"
        )));
    }
    Ok(num / den)
}

/// Mode for principal specializations.
#[derive(Clone, Debug, PartialEq)]
pub enum DimMode {
    /// All variables equal to 1.
    Q1,
    /// Geometric progression with the given ratio.
    Geometric(Rat),
}

/// s_lambda(1^N) or s_lambda(1, q, ..., q^{N-1}), as an exact product.
pub fn weyl_dim(lambda: &Signature, mode: &DimMode) -> Result<Rat> {
    let n = lambda.len() as i64;
    match mode {
        DimMode::Q1 => {
            let mut acc = Rat::from(1);
            for i in 0..lambda.len() {
                for j in i + 1..lambda.len() {
                    let (i64i, i64j) = (i as i64 + 1, j as i64 + 1);
                    acc *= Rat::from((
                        (lambda.part(i) - i64i) - (lambda.part(j) - i64j),
                        i64j - i64i,
                    ));
                }
            }
            Ok(acc)
        }
        DimMode::Geometric(q) => {
            if *q.numer() == 0 {
                return argument("q must be nonzero");
            }
            if *q == 1 {
                return weyl_dim(lambda, &DimMode::Q1);
            }
            let mu = lambda.to_strict();
            let mut acc = Rat::from(1);
            for i in 0..lambda.len() {
                for j in i + 1..lambda.len() {
                    let num = q.powi(mu.part(i)) - q.powi(mu.part(j));
                    let den = q.powi(n - 1 - i as i64) - q.powi(n - 1 - j as i64);
                    if *den.numer() == 0 {
                        return argument(format!("q = {q} makes a denominator factor vanish"));
                    }
                    acc *= num / den;
                }
            }
            Ok(acc)
        }
    }
}

/// chi_lambda(1^N) or chi_lambda(q, q^2, ..., q^N) for the symplectic group
/// Sp(2N), as an exact product.
pub fn symplectic_dim(lambda: &Signature, mode: &DimMode) -> Result<Rat> {
    lambda.require_nonnegative()?;
    let n = lambda.len() as i64;
    match mode {
        DimMode::Q1 => {
            // Weyl dimension formula for Sp(2N) with m_i = lambda_i + N - i + 1
            let m: Vec<i64> = (0..lambda.len())
                .map(|i| lambda.part(i) + n - i as i64)
                .collect();
            let mut acc = Rat::from(1);
            for i in 0..m.len() {
                let b = n - i as i64;
                acc *= Rat::from((m[i], b));
                for j in i + 1..m.len() {
                    let bj = n - j as i64;
                    acc *= Rat::from(((m[i] - m[j]) * (m[i] + m[j]), (b - bj) * (b + bj)));
                }
            }
            Ok(acc)
        }
        DimMode::Geometric(q) => {
            if *q.numer() == 0 {
                return argument("q must be nonzero");
            }
            if *q == 1 {
                return symplectic_dim(lambda, &DimMode::Q1);
            }
            // chi(q..q^N) = A^s_mu(q..q^N) (q^{1+..+N})^N / (prod_{i<j}(q^{i+j}-1) prod_i (q^{2i}-1))
            // with A^s_mu(q..q^N) given by the explicit product.
            let m: Vec<i64> = (0..lambda.len())
                .map(|i| lambda.part(i) + n - i as i64)
                .collect();
            let mut asym = Rat::from(1);
            for i in 0..m.len() {
                asym *= q.powi(m[i]) - q.powi(-m[i]);
                for j in i + 1..m.len() {
                    asym *= q.powi(m[i]) + q.powi(-m[i]) - q.powi(m[j]) - q.powi(-m[j]);
                }
            }
            // Delta(q, ..., q^N) with sign (-1)^binom(N,2) folded in:
            // prod_{i<j} (q^i - q^j), i<j ascending exponents
            let mut vand = Rat::from(1);
            for i in 1..=n {
                for j in i + 1..=n {
                    vand *= q.powi(i) - q.powi(j);
                }
            }
            let sign = if (n * (n - 1) / 2) % 2 == 1 { -1 } else { 1 };
            let a_ratio = asym / (vand * Rat::from(sign));
            // now chi = A^s * (x_1...x_N)^N / (prod_{i<j}(x_i x_j - 1) prod_i (x_i^2-1))
            let mut denom = Rat::from(1);
            for i in 1..=n {
                denom *= q.powi(2 * i) - Rat::from(1);
                for j in i + 1..=n {
                    denom *= q.powi(i + j) - Rat::from(1);
                }
            }
            let prodpow = q.powi(n * (n + 1) / 2).powi(n);
            Ok(a_ratio * prodpow / denom)
        }
    }
}

/// Group a list of values (the generic variables followed by the geometric
/// filling) into distinct points with multiplicities.
fn group_points<T: Scalar>(values: Vec<T>) -> Vec<PointWithMultiplicity<T>> {
    let mut out: Vec<PointWithMultiplicity<T>> = Vec::new();
    for v in values {
        if let Some(p) = out.iter_mut().find(|p| p.point == v) {
            p.multiplicity += 1;
        } else {
            out.push(PointWithMultiplicity::simple(v));
        }
    }
    out
}

/// Normalized Schur function S_lambda(xs; N, q) or normalized symplectic
/// character X_lambda(xs; N, q): the character at (xs, geometric filling)
/// divided by the fully specialized value.
pub fn normalized_character<T: Scalar>(
    family: CharFamily,
    lambda: &Signature,
    xs: &[T],
    q: &Rat,
) -> Result<T> {
    let n = lambda.len();
    let k = xs.len();
    if k > n {
        return argument(format!("k = {k} variables exceed N = {n}"));
    }
    if k == 0 {
        return argument("need at least one generic variable (the prototype scalar)");
    }
    if *q.numer() == 0 {
        return argument("q must be nonzero");
    }
    let proto = &xs[0];
    let mut values: Vec<T> = xs.to_vec();
    match family {
        CharFamily::Schur => {
            // filling 1, q, ..., q^{N-1-k}
            for i in 0..n - k {
                values.push(proto.from_rat_like(&q.powi(i as i64)));
            }
        }
        CharFamily::Symplectic => {
            // filling q, q^2, ..., q^{N-k}
            for i in 1..=n - k {
                values.push(proto.from_rat_like(&q.powi(i as i64)));
            }
        }
    }
    let points = group_points(values);
    let num = confluent_ratio(family, lambda, &points)?;
    let den = match family {
        CharFamily::Schur => weyl_dim(lambda, &DimMode::Geometric(q.clone()))?,
        CharFamily::Symplectic => symplectic_dim(lambda, &DimMode::Geometric(q.clone()))?,
    };
    if *den.numer() == 0 {
        return Err(Error::Singular("fully specialized character vanished".into()));
    }
    Ok(num / proto.from_rat_like(&den))
}

/// The signature nu in GT_{2N} with nu_i = lambda_i + 1 for i <= N and
/// nu_i = -lambda_{2N-i+1} for i > N, realizing the symplectic character as
/// a normalized Schur function of doubled rank.
pub fn symplectic_signature_embed(lambda: &Signature) -> Result<Signature> {
    lambda.require_nonnegative()?;
    let n = lambda.len();
    let mut parts = Vec::with_capacity(2 * n);
    for i in 0..n {
        parts.push(lambda.part(i) + 1);
    }
    for i in n..2 * n {
        parts.push(-lambda.part(2 * n - i - 1));
    }
    Signature::new(parts)
}

/// Skew principal specialization s_{lambda/mu}(1^m) via the Jacobi-Trudi
/// determinant of binomial coefficients. Requires nonnegative lambda, mu.
pub fn skew_dim_ones(lambda: &Signature, mu: &Signature, m: usize) -> Result<Rat> {
    lambda.require_nonnegative()?;
    mu.require_nonnegative()?;
    let n = lambda.len();
    if mu.len() > n {
        return argument("mu longer than lambda");
    }
    if n == 0 {
        return Ok(Rat::from(1));
    }
    let mu_part = |j: usize| if j < mu.len() { mu.part(j) } else { 0 };
    let h_ones = |r: i64| -> Rat {
        if r < 0 {
            return Rat::new();
        }
        if m == 0 {
            return if r == 0 { Rat::from(1) } else { Rat::new() };
        }
        Rat::from(crate::scalar::binomial((r + m as i64 - 1) as u64, m as u64 - 1))
    };
    let rows = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| h_ones(lambda.part(i) - mu_part(j) - i as i64 + j as i64))
                .collect()
        })
        .collect();
    Ok(det_bareiss(&Matrix::from_rows(rows)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn sig(parts: &[i64]) -> Signature {
        Signature::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn branching_single_box() {
        // s_(1,0)(x,y) = x + y
        let v = schur_branching(&sig(&[1, 0]), &[rat(2, 1), rat(3, 1)]).unwrap();
        assert_eq!(v, rat(5, 1));
    }

    #[test]
    fn branching_21() {
        // s_(2,1)(x,y) = x^2 y + x y^2; at (2,3) -> 12 + 18 = 30
        let v = schur_branching(&sig(&[2, 1]), &[rat(2, 1), rat(3, 1)]).unwrap();
        assert_eq!(v, rat(30, 1));
    }

    #[test]
    fn branching_zero_signature() {
        let v = schur_branching(&sig(&[0, 0, 0]), &[rat(2, 1), rat(-7, 3), rat(1, 5)]).unwrap();
        assert_eq!(v, rat(1, 1));
    }

    #[test]
    fn branching_symmetric() {
        let l = sig(&[3, 1, -2]);
        let a = schur_branching(&l, &[rat(2, 1), rat(5, 3), rat(-1, 2)]).unwrap();
        let b = schur_branching(&l, &[rat(-1, 2), rat(2, 1), rat(5, 3)]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn branching_homogeneity() {
        let l = sig(&[2, 0, -1]);
        let xs = [rat(2, 1), rat(3, 1), rat(5, 1)];
        let c = rat(7, 2);
        let scaled: Vec<_> = xs.iter().map(|x| Rat::from(x * &c)).collect();
        let a = schur_branching(&l, &scaled).unwrap();
        let b = schur_branching(&l, &xs).unwrap();
        assert_eq!(a, b * c.powi(l.weight()));
    }

    #[test]
    fn branching_rejects_zero_with_negative_part() {
        assert!(schur_branching(&sig(&[1, -1]), &[rat(0, 1), rat(2, 1)]).is_err());
    }

    #[test]
    fn confluent_matches_branching_distinct() {
        let l = sig(&[1, 0]);
        let pts = vec![
            PointWithMultiplicity::simple(rat(5, 1)),
            PointWithMultiplicity::simple(rat(1, 1)),
        ];
        let r = confluent_ratio(CharFamily::Schur, &l, &pts).unwrap();
        assert_eq!(r, rat(6, 1)); // x + 1 at x=5
    }

    #[test]
    fn confluent_full_multiplicity_counts_patterns() {
        // s_(2,1,0)(1,1,1) = 8
        let l = sig(&[2, 1, 0]);
        let pts = vec![PointWithMultiplicity::new(rat(1, 1), 3)];
        let r = confluent_ratio(CharFamily::Schur, &l, &pts).unwrap();
        assert_eq!(r, rat(8, 1));
    }

    #[test]
    fn symplectic_dimension_sp4() {
        // chi_(1,0) at (1,1) is the dimension of the defining rep of Sp(4): 4
        let l = sig(&[1, 0]);
        let pts = vec![PointWithMultiplicity::new(rat(1, 1), 2)];
        let r = confluent_ratio(CharFamily::Symplectic, &l, &pts).unwrap();
        assert_eq!(r, rat(4, 1));
        assert_eq!(symplectic_dim(&l, &DimMode::Q1).unwrap(), rat(4, 1));
    }

    #[test]
    fn weyl_dim_geometric_single_box() {
        // s_(1,0)(1, q) = 1 + q
        let q = rat(3, 7);
        let v = weyl_dim(&sig(&[1, 0]), &DimMode::Geometric(q.clone())).unwrap();
        assert_eq!(v, Rat::from(1) + q);
    }

    #[test]
    fn weyl_dim_pattern_count() {
        assert_eq!(weyl_dim(&sig(&[2, 1, 0]), &DimMode::Q1).unwrap(), rat(8, 1));
    }

    #[test]
    fn symplectic_dim_geometric_matches_confluent() {
        let l = sig(&[2, 1]);
        let q = rat(1, 2);
        let byprod = symplectic_dim(&l, &DimMode::Geometric(q.clone())).unwrap();
        let pts = vec![
            PointWithMultiplicity::simple(q.clone()),
            PointWithMultiplicity::simple(Rat::from(&q * &q)),
        ];
        let byconf = confluent_ratio(CharFamily::Symplectic, &l, &pts).unwrap();
        assert_eq!(byprod, byconf);
    }

    #[test]
    fn normalized_character_at_ones_is_one() {
        let l = sig(&[3, 1, 0]);
        let v =
            normalized_character(CharFamily::Schur, &l, &[rat(1, 1)], &rat(1, 1)).unwrap();
        assert_eq!(v, rat(1, 1));
        let vs =
            normalized_character(CharFamily::Symplectic, &l, &[rat(1, 1)], &rat(1, 1)).unwrap();
        assert_eq!(vs, rat(1, 1));
    }

    #[test]
    fn normalized_schur_single_box() {
        // S_(1,0)(x; 2, 1) = (x+1)/2, at x=3 -> 2
        let v = normalized_character(CharFamily::Schur, &sig(&[1, 0]), &[rat(3, 1)], &rat(1, 1))
            .unwrap();
        assert_eq!(v, rat(2, 1));
    }

    #[test]
    fn embed_example() {
        let nu = symplectic_signature_embed(&sig(&[1, 0])).unwrap();
        assert_eq!(nu.parts(), &[2, 1, 0, -1]);
        let nu0 = symplectic_signature_embed(&sig(&[0, 0])).unwrap();
        assert_eq!(nu0.parts(), &[1, 1, 0, 0]);
    }

    #[test]
    fn embed_identity_at_q1() {
        // X_lambda(x; N, 1) = 2/(x+1) * S_nu(x; 2N, 1)
        let l = sig(&[1, 0]);
        let nu = symplectic_signature_embed(&l).unwrap();
        let x = rat(2, 1);
        let lhs =
            normalized_character(CharFamily::Symplectic, &l, &[x.clone()], &rat(1, 1)).unwrap();
        let s = normalized_character(CharFamily::Schur, &nu, &[x.clone()], &rat(1, 1)).unwrap();
        let rhs = rat(2, 1) / (x + Rat::from(1)) * s;
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn symplectic_inversion_symmetry() {
        // chi is invariant under x -> 1/x
        let l = sig(&[2, 1]);
        let mk = |a: Rat, b: Rat| {
            vec![
                PointWithMultiplicity::simple(a),
                PointWithMultiplicity::simple(b),
            ]
        };
        let v1 = confluent_ratio(CharFamily::Symplectic, &l, &mk(rat(2, 1), rat(5, 3))).unwrap();
        let v2 = confluent_ratio(CharFamily::Symplectic, &l, &mk(rat(1, 2), rat(5, 3))).unwrap();
        assert_eq!(v1, v2);
    }

    #[test]
    fn skew_dim_total_patterns() {
        // s_{(2,1,0)/empty}(1^3) = 8
        let l = sig(&[2, 1, 0]);
        let v = skew_dim_ones(&l, &Signature::zero(0), 3).unwrap();
        assert_eq!(v, rat(8, 1));
    }
}
