//! Exact computations in sum-rank metric spaces over finite fields.
//!
//! The crate covers the ambient space `Π = ⊕ F_q^{n_i x m_i}` with the
//! sum-rank metric, ball volumes and the Singleton / sphere-packing /
//! code-anticode bounds, optimal linear anticodes and their classification,
//! hybrid ball-times-full-space anticodes, and the line-cover rank bound used
//! to classify them. Everything that can be checked by enumeration at small
//! sizes comes with a brute-force counterpart.

pub mod error;
pub mod gf;
pub mod anticode;
pub mod bounds;
pub mod classify;
pub mod matrix;
pub mod meshulam;
pub mod sumrank;

pub use error::{Error, Result};
pub use gf::{Elem, Field};
pub use matrix::{Matrix, Subspace};
pub use anticode::{AnticodeSpec, BlockFactor};
pub use bounds::{BigCount, WeightComposition};
pub use sumrank::{LinearSpace, Profile, SumRankVector};
