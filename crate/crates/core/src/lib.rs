//! Exact computer algebra for singular holomorphic foliations on the
//! complex plane and the projective plane.

pub mod algebra;
pub mod catalog;
pub mod cli;
pub mod dicritical;
pub mod error;
pub mod foliation;
pub mod indices;
pub mod integral;
pub mod local;

pub use error::{Error, Result};
