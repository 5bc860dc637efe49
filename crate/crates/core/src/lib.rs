//! Finite-group toolkit: Cayley-table groups, automorphism groups, N.I.
//! detection, order-2 automorphism construction and order arithmetic for the
//! odd-order automorphism problem.

pub mod abelian;
pub mod arith;
pub mod aut;
pub mod cases;
pub mod catalog;
pub mod error;
pub mod extend;
pub mod format;
pub mod group;
pub mod linalg;
pub mod scan;
pub mod structure;

pub use error::{Error, Result};
pub use group::{ActionSpec, Automorphism, Elem, Group, GroupMap, Subgroup};
