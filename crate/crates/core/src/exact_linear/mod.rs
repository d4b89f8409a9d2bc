//! Exact linear algebra and polynomial machinery.
//!
//! Everything here is generic over the scalar; the crate root exposes the
//! arbitrary-precision instantiations used by the rest of the library.

mod matrix;
mod polynomial;
mod roots;

pub use matrix::{annihilator, char_poly, min_poly, Matrix};
pub use polynomial::{poly_product, Polynomial};
pub use roots::{
    cauchy_bound, isolate_dominant_root, isolate_real_roots, to_decimal, RootInterval, SturmChain,
};
