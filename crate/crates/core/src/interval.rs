//! Integer counting on open pivot intervals `(P − ω, P + ω)`.
//!
//! The counting rules used by the disc counts live here: cardinality of the
//! open interval, parity for pivots on the half-integer lattice, and the
//! admissible pivot variation that preserves the count.

use crate::error::{Error, Result};
use crate::tolerance::Tolerances;
use serde::Serialize;

/// Open interval `(pivot − half_width, pivot + half_width)`; empty when the
/// half-width is zero.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BohlInterval {
    pivot: f64,
    half_width: f64,
}

impl BohlInterval {
    pub fn new(pivot: f64, half_width: f64) -> Result<Self> {
        if !pivot.is_finite() || !half_width.is_finite() || half_width < 0.0 {
            return Err(Error::InvalidHalfWidth(half_width));
        }
        Ok(Self { pivot, half_width })
    }

    pub fn pivot(&self) -> f64 {
        self.pivot
    }

    pub fn half_width(&self) -> f64 {
        self.half_width
    }

    pub fn lower(&self) -> f64 {
        self.pivot - self.half_width
    }

    pub fn upper(&self) -> f64 {
        self.pivot + self.half_width
    }

    pub fn is_empty(&self) -> bool {
        self.half_width == 0.0
    }
}

/// Cardinality of `I ∩ ℤ` plus a flag raised when a boundary point sat within
/// `int_tol` of an integer: the open-interval count is still reported, but
/// the verdict is numerically on the fence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntegerCount {
    pub count: u64,
    pub boundary_marginal: bool,
}

fn snap(x: f64, tol: Tolerances) -> (f64, bool) {
    let r = x.round();
    if (x - r).abs() <= tol.int_tol {
        (r, true)
    } else {
        (x, false)
    }
}

/// Number of integers strictly inside the open interval.
///
/// Boundaries within `int_tol` of an integer are snapped onto it before the
/// floor/ceil count, so the boundary integer is always excluded; the snap is
/// reported through `boundary_marginal`.
pub fn count_integers(iv: BohlInterval, tol: Tolerances) -> IntegerCount {
    if iv.is_empty() {
        return IntegerCount {
            count: 0,
            boundary_marginal: false,
        };
    }
    let (lo, lo_hit) = snap(iv.lower(), tol);
    let (hi, hi_hit) = snap(iv.upper(), tol);
    let count = (hi.ceil() - lo.floor() - 1.0).max(0.0) as u64;
    IntegerCount {
        count,
        boundary_marginal: lo_hit || hi_hit,
    }
}

/// Whether the lower and upper boundary points are integers (within `int_tol`).
pub fn boundary_is_integer(iv: BohlInterval, tol: Tolerances) -> (bool, bool) {
    (snap(iv.lower(), tol).1, snap(iv.upper(), tol).1)
}

/// Admissible pivot variation `ν/2` with `ν = min{2ω − (k−1), k+1 − 2ω}`.
///
/// Requires `#I = k`, non-integer boundary points, and a pivot on the
/// half-integer lattice. Any shift `|P − P′| < ν/2` preserves the count and
/// keeps the boundaries non-integer; a shift of exactly `ν/2` puts a boundary
/// on an integer; a shift in `(ν/2, 1/2]` changes the count.
pub fn admissible_pivot_shift(iv: BohlInterval, k: u64, tol: Tolerances) -> Result<f64> {
    let doubled = 2.0 * iv.pivot();
    if (doubled - doubled.round()).abs() > tol.int_tol {
        return Err(Error::PreconditionViolated(format!(
            "pivot {} is not on the half-integer lattice",
            iv.pivot()
        )));
    }
    let (lo_hit, hi_hit) = boundary_is_integer(iv, tol);
    if lo_hit || hi_hit {
        return Err(Error::PreconditionViolated(
            "boundary points must not be integers".into(),
        ));
    }
    let actual = count_integers(iv, tol).count;
    if actual != k {
        return Err(Error::PreconditionViolated(format!(
            "interval contains {actual} integers, expected {k}"
        )));
    }
    let len = 2.0 * iv.half_width();
    let nu = (len - (k as f64 - 1.0)).min(k as f64 + 1.0 - len);
    Ok(nu / 2.0)
}
