//! Finite categories with magmal structure, and decision procedures for
//! when such a structure is cocartesian.

pub mod category;
pub mod characterize;
pub mod concrete;
pub mod error;
pub mod fixtures;
pub mod functor;
pub mod magmal;
pub mod report;
pub mod splitting;
pub mod universal;

pub use error::{Error, Result, SearchLimit};
