//! Multivariate interpolation over finite fields and its use for decoding
//! arbitrary cyclic codes.
//!
//! The crate builds, for a cyclic code with base set `R_C = {r_1, …, r_s}`,
//! polynomials `L(x_1, …, x_s)` with `L(S_{r_1}, …, S_{r_s})` equal to an
//! unknown syndrome or to a coefficient of the error locator, for every
//! correctable error pattern. Decoding then needs only the known syndromes.
//!
//! Modules, bottom-up:
//! - [`field`]: `GF(p^e)` arithmetic, cyclotomic cosets, minimal polynomials.
//! - [`poly`]: dense univariate and sparse multivariate polynomials.
//! - [`code`]: cyclic codes, error patterns, syndromes.
//! - [`interp`]: the finite-field delta function and interpolation builders.
//! - [`repr`]: unknown-syndrome and locator-coefficient representations.
//! - [`decoder`]: the two decoding pipelines.
//! - [`cli`]: the command-line front end.

pub mod cli;
pub mod code;
pub mod decoder;
pub mod error;
pub mod field;
pub mod interp;
pub mod poly;
pub mod repr;

pub use code::{CodeSpec, CyclicCode, ErrorPattern, SyndromeTuple};
pub use error::{Error, Result};
pub use field::{Element, Field};
pub use poly::{SparseMultiPoly, UniPoly};
