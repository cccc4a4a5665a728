//! Evaluation codes obtained by evaluating linear systems of conics on the
//! point set `Δ = {(x, a x^2) : x != 0, Tr(a) = 0}` of the affine plane over
//! GF(2^h), with exhaustive tools for intersection spectra, the auxiliary
//! plane curves used to count them, and code parameters.

pub mod cli;
pub mod codes;
pub mod constructions;
pub mod curves;
pub mod error;
pub mod field;
pub mod geometry;
pub mod report;
pub mod spectrum;
pub mod verify;

pub use error::{Error, FieldError, Result};
pub use field::{ExtElem, Extension, Fe, Field, Gf2h};
