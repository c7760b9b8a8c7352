//! Signatures: the weakly (and strictly) decreasing integer tuples indexing
//! characters of the unitary and symplectic groups.

use crate::error::{argument, Error, Result};
use serde::{Deserialize, Serialize};

/// A weakly decreasing tuple of integers. The empty signature is allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Signature {
    parts: Vec<i64>,
}

impl Signature {
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return argument(format!("parts not weakly decreasing: {parts:?}"));
        }
        Ok(Signature { parts })
    }

    pub fn zero(n: usize) -> Self {
        Signature {
            parts: vec![0; n],
        }
    }

    /// The staircase in GT_{2n} indexing the six-vertex partition function:
    /// (n-1, n-1, n-2, n-2, ..., 1, 1, 0, 0).
    pub fn asm_staircase(n: usize) -> Self {
        let mut parts = Vec::with_capacity(2 * n);
        for k in (0..n).rev() {
            parts.push(k as i64);
            parts.push(k as i64);
        }
        Signature { parts }
    }

    /// The dense-loop half staircase of width l: lambda_i = floor((l-i)/2).
    pub fn loop_staircase(l: usize) -> Self {
        let parts = (1..=l).map(|i| ((l - i) / 2) as i64).collect();
        Signature { parts }
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    pub fn part(&self, i: usize) -> i64 {
        self.parts[i]
    }

    /// Sum of the parts (the "size" |lambda|, possibly negative).
    pub fn weight(&self) -> i64 {
        self.parts.iter().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.parts.last().map_or(true, |&p| p >= 0)
    }

    pub fn require_nonnegative(&self) -> Result<&Self> {
        if self.is_nonnegative() {
            Ok(self)
        } else {
            argument(format!("signature has a negative part: {:?}", self.parts))
        }
    }

    /// All parts equal to zero?
    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(|&p| p == 0)
    }

    /// Shift every part by the same integer.
    pub fn shifted(&self, m: i64) -> Self {
        Signature {
            parts: self.parts.iter().map(|&p| p + m).collect(),
        }
    }

    /// The strict signature mu = lambda + delta, mu_i = lambda_i + N - i.
    pub fn to_strict(&self) -> StrictSignature {
        let n = self.parts.len() as i64;
        StrictSignature {
            parts: self
                .parts
                .iter()
                .enumerate()
                .map(|(i, &p)| p + n - 1 - i as i64)
                .collect(),
        }
    }

    /// Does `self` (length M-1) interlace `upper` (length M)?
    pub fn interlaces(&self, upper: &Signature) -> bool {
        if self.len() + 1 != upper.len() {
            return false;
        }
        (0..self.len()).all(|i| upper.parts[i + 1] <= self.parts[i] && self.parts[i] <= upper.parts[i])
    }
}

impl std::fmt::Display for Signature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write_parts(f, &self.parts)
    }
}

/// A strictly decreasing tuple of integers, normally arising as lambda+delta.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StrictSignature {
    parts: Vec<i64>,
}

impl StrictSignature {
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::Argument(format!(
                "parts not strictly decreasing: {parts:?}"
            )));
        }
        Ok(StrictSignature { parts })
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    pub fn part(&self, i: usize) -> i64 {
        self.parts[i]
    }

    /// Inverse of [`Signature::to_strict`]: lambda_i = mu_i - N + i.
    pub fn to_signature(&self) -> Signature {
        let n = self.parts.len() as i64;
        Signature {
            parts: self
                .parts
                .iter()
                .enumerate()
                .map(|(i, &p)| p - n + 1 + i as i64)
                .collect(),
        }
    }
}

impl std::fmt::Display for StrictSignature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write_parts(f, &self.parts)
    }
}

fn write_parts(f: &mut std::fmt::Formatter<'_>, parts: &[i64]) -> std::fmt::Result {
    write!(f, "(")?;
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{p}")?;
    }
    write!(f, ")")
}

/// A specialization point together with its multiplicity in a confluent
/// evaluation. Multiplicity m contributes derivative rows of orders 0..m-1.
#[derive(Clone, Debug)]
pub struct PointWithMultiplicity<T> {
    pub point: T,
    pub multiplicity: usize,
}

impl<T> PointWithMultiplicity<T> {
    pub fn new(point: T, multiplicity: usize) -> Self {
        PointWithMultiplicity {
            point,
            multiplicity,
        }
    }

    pub fn simple(point: T) -> Self {
        PointWithMultiplicity {
            point,
            multiplicity: 1,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strict_roundtrip() {
        let l = Signature::new(vec![3, 1, 1, -2]).unwrap();
        let mu = l.to_strict();
        assert_eq!(mu.parts(), &[6, 3, 2, -2]);
        assert_eq!(mu.to_signature(), l);
    }

    #[test]
    fn rejects_non_monotone() {
        assert!(Signature::new(vec![1, 2]).is_err());
        assert!(StrictSignature::new(vec![2, 2]).is_err());
    }

    #[test]
    fn staircases() {
        assert_eq!(Signature::asm_staircase(2).parts(), &[1, 1, 0, 0]);
        assert_eq!(Signature::loop_staircase(4).parts(), &[1, 1, 0, 0]);
        assert_eq!(Signature::loop_staircase(5).parts(), &[2, 1, 1, 0, 0]);
    }

    #[test]
    fn interlacing() {
        let top = Signature::new(vec![2, 1, 0]).unwrap();
        assert!(Signature::new(vec![2, 0]).unwrap().interlaces(&top));
        assert!(!Signature::new(vec![3, 0]).unwrap().interlaces(&top));
    }
}
