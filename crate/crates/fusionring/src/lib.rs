//! Exact arithmetic in the Grothendieck ring of a family of spherical
//! categories whose simple objects are labelled by Young diagrams.
//!
//! The ring carries two distinguished bases: the simple classes `X_λ` and the
//! Hecke-idempotent classes `Y_λ`. Everything is computed through a ring
//! isomorphism onto the ring of symmetric functions, so the crate is organised
//! as a small exact symmetric-functions engine plus the layer on top of it:
//!
//! * [`partition`] — Young-diagram arithmetic (containment, conjugation,
//!   horizontal/vertical strips, enumeration).
//! * [`lr`] — Littlewood-Richardson coefficients by lattice-word tableau
//!   enumeration, with a shared memo table and an optional on-disk cache.
//! * [`symfunc`] — sparse expansions in the Schur and power-sum bases,
//!   multiplication, the Hall inner product, skew operators and
//!   finite-variable monomial evaluation.
//! * [`plethysm`] — plethysm of symmetric functions and the operators `L`,
//!   `L⁻¹`, `L†` together with the branching coefficients `b_{r,λ}`.
//! * [`grothendieck`] — characters `Φ(X_λ)`, fusion coefficients `R_{μ,ν}^λ`
//!   by three independent routes, and the `X ↔ Y` basis changes.
//! * [`genfun`] — finite-truncation verification of the generating-function
//!   identities (Cauchy, dual Cauchy, the character generating function).
//! * [`pairings`] — fixed-point-free involutions of `{1..2n}`: the basis
//!   index set of the diagram algebra and its transversal/ideal split.
//! * [`verify`] — the cross-validation suites run by the CLI `verify`
//!   command and the acceptance tests.
//!
//! All coefficients are arbitrary-precision (`BigInt` on the Schur side,
//! `BigRational` on the power-sum side); nothing is ever rounded. Bulk loops
//! in [`verify`] and [`genfun`] are data-parallel via rayon when the
//! `parallel` feature (on by default) is enabled, and fall back to sequential
//! iteration otherwise; see [`exec`].

pub mod exec;
pub mod genfun;
pub mod grothendieck;
pub mod lr;
pub mod pairings;
pub mod partition;
pub mod plethysm;
pub mod symfunc;
pub mod verify;

use thiserror::Error;

/// Errors surfaced by the library's fallible operations.
///
/// Most operations here are total on their documented domains; the variants
/// below are the contract violations that calling code can meaningfully
/// handle.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A power-sum expansion was asked to convert to the Schur basis but the
    /// resulting coefficients are not integers.
    #[error("conversion to the Schur basis produced non-integral coefficients")]
    NonIntegralResult,
    /// Plethysm `g[f]` was invoked with an inner operand `f` carrying a
    /// negative coefficient; the monomial-substitution definition only
    /// applies to nonnegative `f`.
    #[error("plethysm inner operand has a negative coefficient")]
    NegativeInnerOperand,
    /// Operand sizes are inconsistent with the requested operation.
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    /// Monomial evaluation was rejected because `n_vars * degree` exceeds the
    /// configured guard bound.
    #[error("monomial evaluation guard exceeded: {0}")]
    EvalGuardExceeded(String),
    /// A sequence of images does not describe a fixed-point-free involution.
    #[error("invalid pairing: {0}")]
    InvalidPairing(String),
}

pub use partition::Partition;
pub use symfunc::{PowerSumExpansion, SchurExpansion};
