//! Quaternion unit gain graphs: exact left row rank, girth, cycle types,
//! structural reductions and rank-girth classification checks.

pub mod error;
pub mod graph;
pub mod qlinalg;
pub mod quat;
pub mod reduce;
pub mod theorems;

pub use error::{Error, Result};
