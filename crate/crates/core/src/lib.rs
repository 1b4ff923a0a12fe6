//! Counting genus-one fibered knots in lens spaces.
//!
//! A genus-one fibered knot in `M` is the lift of the axis of a closed
//! 3-braid whose double branched cover is `M`. For a lens space
//! `L(α, β)` the branch set is forced to be the two-bridge link
//! `b(α, β)`, so counting knots reduces to counting inequivalent 3-braid
//! axes of that link.
//!
//! * [`twobridge`]: fractions `b(α, β)`, their equivalences and Conway
//!   notation.
//! * [`braid`]: words in `B₃`, Garside normal form and conjugacy.
//! * [`cover`]: the Burau image at `t = -1`, closure determinants and the
//!   homology of the double branched cover.
//! * [`classify`]: axis counts, witness braids and closure identification.
//! * [`verify`]: exhaustive cross-checks of the classification.
//! * [`census`]: tables of counts over all fractions up to a bound.

pub mod braid;
pub mod census;
pub mod classify;
pub mod cover;
mod error;
mod par;
pub mod twobridge;
pub mod verify;

pub use braid::BraidWord;
pub use error::{Error, Result};
pub use par::Execution;
pub use twobridge::Fraction;
