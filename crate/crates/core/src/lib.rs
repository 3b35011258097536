//! Exact arithmetic and verification of symmetric-function identities at doubled
//! variable sets, with the higher-order Fibonacci and Lucas sequences they produce.

pub mod cli;
pub mod combinat;
pub mod cyclotomic;
pub mod error;
pub mod exactalg;
pub mod identities;
pub mod sequences;
pub mod symfun;
