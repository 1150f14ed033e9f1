//! Schur stability of complex trinomials `a·ζⁿ + b·ζᵐ + c`.
//!
//! The crate decides whether all roots of a trinomial lie in the open unit
//! disc, counts roots in arbitrary discs without computing them, and
//! parametrizes the projected stability region. The counting machinery works
//! on an open interval `(P − ω(r), P + ω(r))` built from the coefficient
//! arguments and the angles of the triangle with side lengths `|a|rⁿ`,
//! `|b|rᵐ`, `|c|`; the number of integers in that interval equals the number
//! of roots in the disc of radius `r`.
//!
//! Modules:
//! - [`trinomial`]: domain types, monic scaling and exponent reduction.
//! - [`interval`]: integer counting on open pivot intervals.
//! - [`bohl`]: triangle classification and disc root counts.
//! - [`region`]: the stability test, region classification and the
//!   `(x, y, s, t)` parametrization.
//! - [`oracle`]: independent ground truth via simultaneous root iteration.
//! - [`recurrence`]: the two-delay linear recurrence driven by the same
//!   coefficients.
//!
//! All types are immutable values and all operations are pure functions; they
//! may be used freely from any number of threads.

pub mod bohl;
pub mod error;
pub mod interval;
pub mod oracle;
pub mod recurrence;
pub mod region;
pub mod tolerance;
pub mod trinomial;

pub use error::{Error, Result};
pub use region::{is_schur_stable, Certificate, RegionClass, RegionTag, StabilityVerdict};
pub use tolerance::Tolerances;
pub use trinomial::{classify_degenerate, normalize, Complex, NormalizedTrinomial, Trinomial};
