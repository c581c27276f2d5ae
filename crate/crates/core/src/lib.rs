//! Exact observables on Young diagrams and the change of basis between
//! normalized symmetric-group characters and Boolean cumulants.
//!
//! Two independent routes produce the same coefficients:
//!
//! * [`basischange`] solves for them by exact linear algebra over
//!   evaluations on Young diagrams;
//! * [`heiscalc`] derives them by rewriting diagrams in the center of
//!   Khovanov's Heisenberg category (bubble moves, curl resolution and the
//!   dotted-strand permutation expansion).
//!
//! Everything is exact rational arithmetic. The [`cli`] module is the
//! command-line front end shipped as the `boolean-kerov` binary.

pub mod basischange;
pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod exactmath;
pub mod heiscalc;
pub mod observables;

pub use error::{Error, Result};
