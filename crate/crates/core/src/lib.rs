//! Numerical core for the class `A_β` of normalized analytic functions with
//! `Re(β f(z)/z + (1-β) f'(z)) > 0` on the unit disk.
//!
//! The crate is `no_std` (it needs `alloc`) and pure: every operation is a
//! function of its arguments. It provides
//!
//! * the extremal function `f̃` and its boundary value `f̃(-1)` ([`extremal`]),
//! * truncated power series and the Carathéodory-to-member coefficient map
//!   ([`series`]),
//! * the Bohr and Bohr–Rogosinski radius equations and a certified
//!   bracketing solver ([`radii`], [`roots`]),
//! * closed-form Fekete–Szegő and logarithmic-coefficient bounds ([`bounds`]),
//! * Monte-Carlo verification of every inequality above through class members
//!   generated by atomic Herglotz measures ([`verify`]).
#![no_std]
// `!(x > 0.0)` deliberately rejects NaN along with nonpositive values
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bounds;
mod error;
pub mod extremal;
pub mod quad;
pub mod radii;
pub mod roots;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use extremal::{BetaParam, ExtremalEvalConfig};
pub use num_complex::Complex64;
