//! Exact symmetric-function toolkit for the K-theoretic Grothendieck
//! families: tableau combinatorics, truncated symmetric polynomials, basis
//! conversions, specializations with interval enclosures, Toeplitz total
//! nonnegativity, and measures on partitions.

pub mod arith;
pub mod error;
pub mod groth;
pub mod measures;
pub mod polyring;
pub mod shapes;
pub mod special;
pub mod tableaux;
pub mod tnn;
pub mod value;

pub use arith::Q;
pub use error::{Error, Result};
pub use shapes::{ExtendedSkewShape, Partition};
pub use value::SpecValue;
