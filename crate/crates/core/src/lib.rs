//! Gray codes and Hamilton cycles for involutions of the classical Weyl
//! groups of types A, B and D.
//!
//! The crate generates cyclic Gray codes over all involutions of the
//! symmetric group (type A), the signed permutation group (type B) and the
//! even-signed permutation group (type D), verifies them against
//! independent brute-force enumeration, and checks that consecutive
//! entries are joined by edges of the corresponding Cayley graph.
//!
//! Two families of codes are provided:
//!
//! - recursive codes with Hamming distance 3 for all three types
//!   ([`recursive`]);
//! - distance-2 codes: the layered construction for type B and
//!   search-assisted cycles for type D at ranks 4 and 5 ([`optimal`]),
//!   together with the binary Gray codes they are built from.
//!
//! The `invcodes` binary exposes generation, counting, enumeration,
//! verification and Hamilton search on the command line.

#![forbid(unsafe_code)]

pub mod cayley;
pub mod code;
pub mod counting;
pub mod error;
pub mod optimal;
pub mod perm;
pub mod recursive;
pub mod report;

pub use code::CodeList;
pub use error::{Error, Result};
pub use perm::{classify_move, CycleForm, GroupType, MoveClass, Relabeling, SignedPerm};
pub use report::{ValidationReport, Violation};
