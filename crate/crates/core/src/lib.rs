//! Exact-arithmetic kernel for mock-Lie (Jacobi-Jordan) superalgebras over Q.

#![allow(clippy::needless_range_loop)]

pub mod catalog;
pub mod cli;
pub mod error;
pub mod extensions;
pub mod forms;
pub mod kernel;
pub mod report;
pub mod representation;
pub mod superalgebra;

pub use error::{Error, Result};
pub use report::CheckReport;
pub use superalgebra::SuperAlgebra;
