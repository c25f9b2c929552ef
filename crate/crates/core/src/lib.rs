//! Exact Alexander-type invariants of complements of singular hypersurfaces.
//!
//! * [`laurent`]: one-variable Laurent polynomials and cyclotomic tools.
//! * [`matrix`]: dense matrices over the Laurent ring.
//! * [`cycmod`]: finitely generated modules over `Q[t, t^-1]`.
//! * [`brieskorn`]: monodromy of Brieskorn–Pham singularities and joins.
//! * [`pencil`]: reduced Burau representation and pencil quotients.
//! * [`certify`]: divisibility and vanishing certificates.
//!
//! Polynomial and matrix types are generic over the coefficient [`Scalar`];
//! the aliases below fix the choices used by the higher-level modules.

pub mod brieskorn;
pub mod certify;
pub mod cycmod;
pub mod error;
pub mod laurent;
pub mod matrix;
pub mod pencil;
pub mod scalar;

pub use error::{Error, Result};
pub use laurent::LaurentPoly;
pub use matrix::LaurentMatrix;
pub use scalar::{Field, ParseScalar, Scalar};

pub use num_bigint::BigInt;

/// Exact rational coefficients.
pub type Rational = num_rational::BigRational;
/// Laurent polynomial over `Q`.
pub type Poly = LaurentPoly<Rational>;
/// Laurent polynomial over `Z`.
pub type IntPoly = LaurentPoly<BigInt>;
/// Matrix over `Q[t, t^-1]`.
pub type Matrix = LaurentMatrix<Rational>;
/// Matrix over `Z[t, t^-1]`.
pub type IntMatrix = LaurentMatrix<BigInt>;
