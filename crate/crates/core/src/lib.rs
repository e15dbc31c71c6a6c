//! Equivariant K-classes and cohomology classes of matrix orbit closures.

pub mod cohomology;
pub mod error;
pub mod exactpoly;
pub mod kclass;
pub mod matroid;
pub mod oracle;
pub mod rng;
pub mod symfunc;
pub mod tensor;
pub mod verify;

pub use error::{Error, Result};
