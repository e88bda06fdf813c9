//! Exact detection of projective, affine and similarity equivalences of
//! rational curves, implicit planar curves, implicit algebraic surfaces and
//! rational ruled surfaces, by reduction to equivalences of finite subsets
//! of the projective line.
//!
//! The pipelines share one pattern: associate to each input a binary form
//! whose roots are a distinguished finite subset of ℙ¹ (stall parameters,
//! ideal points, intersections with the absolute conic, ...), compute the
//! Möbius maps matching the two forms, and lift each candidate back to the
//! ambient space, keeping exactly those that verify.

pub mod arith;
pub mod groebner;
pub mod linalg;
pub mod poly;

mod error;

pub use error::{Error, Result};
