//! Exact reduction compiler from Diophantine equations to instances of the
//! problem "does some automorphism of `X` map the point `x` into `Z`?".
//!
//! The pipeline, stage by stage:
//!
//! 1. [`reducer::four_squares_transform`] (optional) turns solvability over
//!    the naturals into solvability over the integers.
//! 2. [`smoothing::smooth_lift`] replaces `f` by `c(y^2 - y) + f^2` with the
//!    least `c` making the affine hypersurface smooth, certified by a
//!    reduced Gröbner basis `{1}` of the Jacobian ideal.
//! 3. [`reducer::compile_instance`] homogenizes the result, builds the
//!    lattice set `S` and its image `S'` on the elliptic curve 37A1, and
//!    emits an [`reducer::InstanceDescriptor`].
//! 4. [`oracle`] checks the defining equivalences by bounded brute force.

pub mod cli;
pub mod elliptic;
pub mod error;
pub mod groebner;
pub mod lattice;
pub mod oracle;
pub mod poly;
pub mod reducer;
pub mod serial;
pub mod smoothing;

pub use error::{Error, Result};
pub use poly::{parse_poly, Polynomial, Rational, VarRegistry};
