//! Galois points of hypersurfaces over finite fields.

pub mod algebra;
pub mod classify;
pub mod error;
pub mod funcfield;
pub mod galois;
pub mod geometry;
pub mod oracle;
pub mod par;
pub mod report;

pub use error::{Error, Result};
