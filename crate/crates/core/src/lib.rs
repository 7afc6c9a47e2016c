//! Exact computer algebra for continued fractions of algebraic power
//! series over finite fields of characteristic 2.
//!
//! The crate builds, expands and cross-verifies a family of
//! hyperquadratic continued fractions in F(q) = F_q((1/T)) whose partial
//! quotients all have the form lambda * T:
//!
//! * [`gf`] — exact arithmetic in F_{p^s}, including the Frobenius map.
//! * [`poly`] — dense polynomials over F_q in T.
//! * [`series`] — truncated Laurent series in 1/T with precision bounds.
//! * [`contfrac`] — the continued fraction algorithm, continuants,
//!   convergents and periodicity detection.
//! * [`hyperquad`] — the Fibonacci-like polynomials F_n, the defining
//!   algebraic equations, the recursive leading-coefficient stream and an
//!   independent fixed-point root oracle.
//! * [`autoseq`] — automaticity analysis of the coefficient sequence:
//!   generating series, Frobenius-affine relation search and p-kernels.

pub mod autoseq;
pub mod contfrac;
pub mod error;
pub mod gf;
pub mod hyperquad;
pub mod poly;
pub mod series;

pub use error::{Error, Result};
pub use gf::{Field, FieldElem};
pub use poly::Poly;
pub use series::LaurentSeries;
