// `!(x > a)` is used deliberately so NaN inputs are rejected.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod approximant;
pub mod cli;
pub mod error;
pub mod explicit_formula;
pub mod io;
pub mod numeric;
pub mod sieve;
pub mod squarefree;
pub mod tightness;
pub mod zeta;

pub use error::{Error, Result};
