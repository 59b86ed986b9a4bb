//! Exact computational models of one-dimensional stable local rings.
//!
//! Three model classes are implemented:
//!
//! - numerical-semigroup rings `k[[S]]` at monomial level ([`numsg`],
//!   [`relideal`], [`ringlab`]),
//! - finite-dimensional structure-constant algebras over small finite fields
//!   ([`quadalg`]),
//! - Nagata idealizations `V⋆V^r` over a truncated DVR ([`idealization`]).
//!
//! [`sweep`] runs the exhaustive invariant suite over all semigroups up to a
//! genus, data-parallel when the `parallel` feature is enabled.

pub mod error;
pub mod idealization;
pub mod numsg;
pub mod par;
pub mod quadalg;
pub mod relideal;
pub mod ringlab;
pub mod sweep;

pub use error::{Error, Result};
pub use numsg::NumericalSemigroup;
pub use par::Execution;
pub use relideal::RelativeIdeal;
