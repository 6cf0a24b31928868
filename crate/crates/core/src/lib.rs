//! Kirillov polynomials: counts of nilpotent matrices of a fixed Jordan type
//! over finite fields.
//!
//! Two families are covered. For strictly upper-triangular matrices (type A)
//! the counts come from a recursion over removable cells of Young diagrams and
//! are checked against brute-force censuses. For the 7-dimensional
//! representation of `g2` they come from an exhaustive census over the six
//! positive-root coordinates followed by exact interpolation in `q`.
//!
//! Census kernels run on rayon when the `parallel` feature is enabled (the
//! default) and fall back to a sequential loop otherwise. Results are
//! identical either way.

pub mod cli;
pub mod error;
pub mod field;
pub mod g2;
pub mod intpoly;
pub mod matrix;
pub mod par;
pub mod partition;
pub mod typea;

pub use error::{Error, Result};
pub use field::FieldCtx;
pub use intpoly::{IntPoly, IrreducibilityVerdict, MultiPoly, SplitForm};
pub use matrix::FMatrix;
pub use partition::Partition;
