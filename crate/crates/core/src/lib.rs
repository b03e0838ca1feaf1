//! Exact arithmetic for the binomial-convolution operators `T_r` on sequences.
//!
//! `(T_r a)_n = sum_k C(n,k) r^(n-k) a_k` acts on sequence prefixes, on
//! ordinary and exponential generating functions, and on constant-coefficient
//! recurrences, where it translates every characteristic root by `r`.

pub mod error;
pub mod exactnum;
pub mod families;
pub mod models;
pub mod recurrence;
pub mod series;
pub mod transform;
pub mod verify;

pub use error::{Error, Result};
pub use exactnum::{Domain, RatPoly, Scalar};
pub use recurrence::{CharPoly, Recurrence};
pub use series::{SeriesKind, TruncSeries};
pub use transform::{
    apply_transform, compose_transforms, inverse_transform, iterated_binomial, SequencePrefix,
};
