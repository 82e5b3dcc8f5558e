//! Exact enumeration of total cyclic orders on `[n]` whose consecutive
//! triples `(i, i+1, i+2)` have prescribed orientations.
//!
//! Class sizes come from polynomial-time array recurrences ([`engine`]),
//! checked against exhaustive enumeration ([`oracle`]) and against
//! permutation descent classes through an explicit bijection
//! ([`bijection`]).

pub mod bijection;
pub mod classical;
pub mod cli;
pub mod count;
pub mod density;
pub mod dump;
pub mod engine;
pub mod error;
pub mod oracle;
pub mod order;
pub mod perm;
pub mod phi;
pub mod poly;
pub mod sign;
pub mod verify;

pub use error::{Error, Result};
pub use order::CyclicOrder;
pub use perm::Permutation;
pub use poly::HomoPoly;
pub use sign::{Sign, SignWord};
