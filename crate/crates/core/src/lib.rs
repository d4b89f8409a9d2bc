//! Exact combinatorics of the hyperbolic Pascal simplex built on the
//! hypercube honeycomb {4,3,3,5}.
//!
//! * [`census`]: per-level counts and value sums of the ten vertex classes,
//!   plus the coefficient matrices that advance them.
//! * [`exact_linear`]: characteristic/minimal polynomials and Sturm root
//!   isolation over any field (rationals in practice).
//! * [`recurrence`]: verification and Berlekamp–Massey discovery of linear
//!   recurrences.
//! * [`hpt`]: explicit rows of the hyperbolic Pascal triangles {4,q}.
//! * [`vertex_figure`]: exact icosahedron and 600-cell models and the
//!   neighbour classification that fixes the interior growth coefficients.
//! * [`verify`]: the checks behind `hps verify`.

pub mod census;
pub mod cli;
pub mod error;
pub mod exact_linear;
pub mod golden;
pub mod hpt;
pub mod recurrence;
pub mod scalar;
pub mod verify;
pub mod vertex_figure;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use error::{Error, Result};

pub type Rational = BigRational;
pub type RationalMatrix = exact_linear::Matrix<BigRational>;
pub type IntPolynomial = exact_linear::Polynomial<BigInt>;
pub type RationalPolynomial = exact_linear::Polynomial<BigRational>;
pub type RationalRootInterval = exact_linear::RootInterval<BigRational>;
pub type Golden = golden::GoldenNumber<BigRational>;

pub type F64Matrix = exact_linear::Matrix<f64>;
pub type F64Polynomial = exact_linear::Polynomial<f64>;
