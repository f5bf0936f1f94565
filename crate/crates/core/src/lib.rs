//! Exact combinatorics for the depth-zero branching law of Iwahori-spherical
//! representations of `GL_n` over a p-adic field.
//!
//! Given a Zelevinsky multisegment `a`, [`branching::branch`] returns the
//! multiplicity of every principal-series constituent `π_μ` of the `K/K_+`
//! module `St(⟨a⟩)^{K_+}`. The supporting layers are:
//!
//! - [`partition`]: partitions, dominance, conjugation, Kostka numbers and the
//!   sign Pieri rule.
//! - [`symgroup`]: `S_n` characters (Murnaghan–Nakayama), used as an
//!   independent oracle.
//! - [`hecke`]: type-A Coxeter combinatorics, the Iwahori–Hecke algebra,
//!   parabolically induced modules and Kazhdan–Lusztig polynomials.
//! - [`multiseg`]: segments, elementary operations, the order `b ≤ a`,
//!   decomposition numbers `m(b;a)` and the Zelevinsky involution.
//! - [`branching`]: the generic decomposition and the general algorithm.
//! - [`render`]: stable text, JSON and DOT output.

pub mod branching;
pub mod error;
pub mod hecke;
pub mod multiseg;
pub mod partition;
pub mod poly;
pub mod render;
pub mod symgroup;

pub use error::{Error, Result};
pub use hecke::WeylElement;
pub use multiseg::{Multisegment, Segment};
pub use partition::{Partition, PartitionVector};
pub use poly::IntPolynomial;
