//! Hermitian self-orthogonal generalized Reed–Solomon codes over GF(q²).
//!
//! The crate is `no_std` (it needs `alloc`) and purely computational:
//!
//! - [`gf`]: table-driven arithmetic in GF(q²) with its subfield GF(q).
//! - [`linalg`]: matrices over the field, rank, and the column-minor MDS check.
//! - [`codes`]: Hermitian inner products, GRS generator matrices, the
//!   self-orthogonality criterion and the minimum-distance oracle.
//! - [`family_subgroup`]: codes of length λ(q²−1)/s on cosets of a
//!   multiplicative subgroup with trace-defined column scalars.
//! - [`family_complement`]: codes of length q² − s(q+1) on the complement of
//!   cosets of the (q+1)-st roots of unity.
//! - [`quantum`]: the Hermitian construction parameter map and table rows.
//! - [`verify`]: the check suite that turns a constructed code into evidence.
//!
//! IO, reports and the command-line front end live in the `qmds` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod arith;
pub mod codes;
mod error;
pub mod family_complement;
pub mod family_subgroup;
pub mod gf;
pub mod linalg;
pub mod quantum;
pub mod verify;

pub use codes::GrsSpec;
pub use error::{Error, Result};
pub use gf::{Elem, Field};
pub use linalg::CodeMatrix;
pub use quantum::QuantumParams;
