//! Exact enumeration of 2-factors in rectangular grids `P_m x P_n`, thick
//! cylinders `P_m x C_n` and Moebius strips of height `m` by the transfer
//! matrix method.
//!
//! Columns of a 2-factor are coded as words over six letters ([`codes`]).
//! Gluing consecutive columns is governed by the digraph `D*_m` on outlet
//! words ([`transfer`]); counts are traces and entries of its matrix powers
//! ([`counting`]). The [`series`] module fits exact recurrences and
//! estimates growth constants, and [`oracle`] enumerates 2-factors of small
//! explicit graphs by brute force to cross-check everything.

pub mod codes;
pub mod counting;
pub mod error;
pub mod oracle;
pub mod output;
pub mod report;
pub mod series;
pub mod tables;
pub mod transfer;

pub use codes::{AlphaWord, BinaryWord, Letter};
pub use counting::{CountResult, Counter, GraphFamily};
pub use error::{Error, Result};
pub use transfer::Transfer;
