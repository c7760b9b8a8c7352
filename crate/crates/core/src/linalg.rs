//! Dense determinants over any scalar kind.
//!
//! Exact scalars go through fraction-free (Bareiss) elimination to bound
//! intermediate swell; approximate scalars use plain elimination with
//! magnitude pivoting plus a validity estimate obtained by re-running at a
//! higher precision.

use crate::error::{Error, Result};
use crate::scalar::{Cpx, Scalar};

/// Row-major square matrix.
#[derive(Clone, Debug)]
pub struct Matrix<T> {
    pub n: usize,
    pub data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Matrix {
            n,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn at(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.n + j]
    }

    fn at_mut(&mut self, i: usize, j: usize) -> &mut T {
        &mut self.data[i * self.n + j]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.n {
            self.data.swap(a * self.n + j, b * self.n + j);
        }
    }
}

/// Fraction-free Gaussian elimination (Bareiss). Exact over rationals and
/// integers; over floats it degenerates to ordinary elimination with an
/// extra exact division, which is harmless.
pub fn det_bareiss<T: Scalar>(m: &Matrix<T>) -> T {
    let n = m.n;
    if n == 0 {
        // empty product convention
        return m
            .data
            .first()
            .map(|t| t.one_like())
            .unwrap_or_else(|| panic!("cannot build 1 for empty 0x0 matrix without a prototype"));
    }
    let mut a = m.clone();
    let one = a.data[0].one_like();
    let mut prev = one.clone();
    let mut sign = false;
    for k in 0..n - 1 {
        // pivot: largest magnitude among the exactly-nonzero entries of column k
        let mut piv = None;
        let mut best = -1.0f64;
        for i in k..n {
            if a.at(i, k).is_zero() {
                continue;
            }
            let s = a.at(i, k).mag();
            let s = if s.is_nan() { f64::INFINITY } else { s };
            if piv.is_none() || s > best {
                piv = Some(i);
                best = s;
            }
        }
        let Some(piv) = piv else {
            return a.data[0].zero_like();
        };
        if piv != k {
            a.swap_rows(piv, k);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a.at(k, k).clone() * a.at(i, j).clone()
                    - a.at(i, k).clone() * a.at(k, j).clone();
                *a.at_mut(i, j) = num / prev.clone();
            }
            *a.at_mut(i, k) = a.data[0].zero_like();
        }
        prev = a.at(k, k).clone();
    }
    let d = a.at(n - 1, n - 1).clone();
    if sign {
        -d
    } else {
        d
    }
}

/// Determinant of a complex matrix together with an estimate of how many
/// result bits survive the elimination, measured by re-running at doubled
/// precision and comparing.
pub fn det_with_validity(m: &Matrix<Cpx>, prec: u32) -> (Cpx, f64) {
    let lo = det_at_prec(m, prec);
    let hi = det_at_prec(m, prec * 2);
    let diff = (&lo - &hi).mag();
    let scale = hi.mag();
    let valid_bits = if diff == 0.0 {
        prec as f64
    } else if scale == 0.0 {
        0.0
    } else {
        (-(diff / scale).log2()).clamp(0.0, prec as f64)
    };
    (hi, valid_bits)
}

fn det_at_prec(m: &Matrix<Cpx>, prec: u32) -> Cpx {
    let data = m.data.iter().map(|z| z.with_prec(prec)).collect();
    det_bareiss(&Matrix { n: m.n, data })
}

/// Determinant that must be computed with at least `min_valid_bits` of
/// agreement between two precisions; escalates from `start_prec` by
/// doubling up to `max_prec`.
pub fn det_escalating(
    m: &Matrix<Cpx>,
    start_prec: u32,
    max_prec: u32,
    min_valid_bits: f64,
) -> Result<(Cpx, u32)> {
    let mut prec = start_prec;
    loop {
        let (d, valid) = det_with_validity(m, prec);
        if valid >= min_valid_bits {
            return Ok((d, prec));
        }
        if prec >= max_prec {
            return Err(Error::Precision(format!(
                "determinant retains only {valid:.1} valid bits at {prec} bits (need {min_valid_bits})"
            )));
        }
        prec = (prec * 2).min(max_prec);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Rat};

    fn rmat(rows: &[&[i64]]) -> Matrix<Rat> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| rat(v, 1)).collect())
                .collect(),
        )
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let m = rmat(&[&[2, 1, 3], &[0, -1, 4], &[5, 2, 0]]);
        // det = 2*(-1*0-4*2) - 1*(0*0-4*5) + 3*(0*2+1*5) = -16+20+15 = 19
        assert_eq!(det_bareiss(&m), rat(19, 1));
    }

    #[test]
    fn singular_matrix() {
        let m = rmat(&[&[1, 2], &[2, 4]]);
        assert_eq!(det_bareiss(&m), rat(0, 1));
    }

    #[test]
    fn pivoting_handles_zero_leading_entry() {
        let m = rmat(&[&[0, 1], &[1, 0]]);
        assert_eq!(det_bareiss(&m), rat(-1, 1));
    }
}
