//! Exact and high-precision machinery for normalized Schur, symplectic and
//! Jacobi characters: bialternant oracles, residue-sum contour integrals,
//! multivariate operator-determinant formulas, steepest-descent asymptotics,
//! and the statistical-mechanics observables built from them (lozenge
//! tilings / GUE corners, the six-vertex model with domain-wall boundaries,
//! dense-loop currents, and character limits of the infinite unitary group).

pub mod error;
pub mod laurent;
pub mod linalg;
pub mod scalar;
pub mod signature;
pub mod symfunc;

pub use error::{Error, Result};
pub use laurent::LaurentPolynomial;
pub use scalar::{Cpx, Jet, Rat, Real, Scalar, TaylorJet, DEFAULT_PREC};
pub use signature::{PointWithMultiplicity, Signature, StrictSignature};
