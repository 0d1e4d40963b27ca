//! Exact verification toolkit for the quaternionic model of the
//! canonical formula F_x(a) : F_y(b) = F_x(b) : F_{a^-1}(y).
//!
//! The toolkit builds the finite quaternion groups Q, 2T and 2O with
//! exact arithmetic over Q(sqrt 2), materializes the small groups around
//! them (symmetric, alternating, cyclic, Sl2 over prime fields), and
//! mechanically checks the model's identities: the valence map
//! Phi_x(a) = 2^{-1/2}(x - a), the anti-automorphism lambda, Jordan
//! ratios under both sign conventions, exact sequences and their
//! splittings, automorphism groups, and the three-strand braid group
//! through the reduced Burau representation. Where a computation
//! contradicts a documented claim, the verification report records a
//! discrepancy with the computed witness rather than a failure.
//!
//! No floating point is used anywhere in the kernel; every comparison is
//! exact.

pub mod braid;
pub mod catalog;
pub mod cf;
pub mod error;
pub mod expr;
pub mod group;
pub mod quat;
pub mod report;
pub mod scalar;
pub mod search;
pub mod verify;

pub use error::{Error, Result};
pub use quat::{Quat, RatioConvention};
pub use scalar::{Rat, ScalarQ};
