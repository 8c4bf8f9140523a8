//! Exact partition combinatorics: hook lengths, boundary words, the
//! Littlewood decomposition, `z`-asymmetric partition classes, truncated
//! q-series over `ℚ` and `ℚ[v]`, and a catalog of generating-function
//! identities and hook-count congruences checked coefficient by coefficient.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod classes;
pub mod error;
pub mod littlewood;
pub mod partition;
pub mod series;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
pub use littlewood::{decompose, recompose, CoreVector, Decomposition};
pub use partition::{FrobeniusCoords, HookMultiset, Partition};
pub use series::{Coefficient, Ring, TruncatedSeries};
pub use word::BoundaryWord;
