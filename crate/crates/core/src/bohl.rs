//! Root counts in discs from triangle geometry and pivot intervals.
//!
//! For a monic, exponent-reduced trinomial and a radius `r`, the three
//! quantities `rⁿ`, `|b|rᵐ`, `|c|` either form a (possibly degenerate)
//! triangle or one of them strictly dominates the other two. In the triangle
//! case the number of roots in the open disc `D_r` is the number of integers
//! in the open interval `(P − ω(r), P + ω(r))` with
//!
//! ```text
//! P = (n(β − γ + π) − m(α − γ + π)) / 2π,   ω(r) = (n·ω₁ + m·ω₂) / 2π,
//! ```
//!
//! where `α, β, γ` are the coefficient arguments (`α = 0` here) and `ω₁, ω₂`
//! are the triangle angles opposite `rⁿ` and `|b|rᵐ`. In the dominance case
//! the count is `0`, `m` or `n` according to which side dominates. One
//! degenerate configuration needs an override: when `|b|rᵐ = rⁿ + |c|`,
//! `r^{n−m} > m|b|/n` and `P + ω(r)` is an integer, the count is `m` rather
//! than the open-interval value.

use crate::error::{Error, Result};
use crate::interval::{count_integers, BohlInterval};
use crate::tolerance::Tolerances;
use crate::trinomial::{arg_unchecked, NormalizedTrinomial};
use serde::Serialize;
use std::f64::consts::PI;

/// Outcome of testing three side lengths against the triangle inequality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TriangleClass {
    Triangle,
    /// One side equals the sum of the other two (within tolerance).
    Degenerate,
    NoTriangleADominates,
    NoTriangleBDominates,
    NoTriangleCDominates,
}

/// Side lengths with their opposite angles; angles of a degenerate triangle
/// are snapped to the exact `{π, 0, 0}` pattern.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriangleGeometry {
    pub side_a: f64,
    pub side_b: f64,
    pub side_c: f64,
    pub omega1: f64,
    pub omega2: f64,
    pub omega3: f64,
    pub degenerate: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum TieSide {
    A,
    B,
    C,
}

fn classify_detailed(
    side_a: f64,
    side_b: f64,
    side_c: f64,
    tol: Tolerances,
) -> Result<(TriangleClass, Option<TieSide>)> {
    for (side, name) in [(side_a, "a"), (side_b, "b"), (side_c, "c")] {
        if side <= 0.0 || !side.is_finite() {
            return Err(Error::ZeroSide(name));
        }
    }
    let eps = tol.tri_tol * side_a.max(side_b).max(side_c);
    let excess = [
        (side_a - (side_b + side_c), TieSide::A),
        (side_b - (side_a + side_c), TieSide::B),
        (side_c - (side_a + side_b), TieSide::C),
    ];
    for (e, side) in excess {
        if e > eps {
            let class = match side {
                TieSide::A => TriangleClass::NoTriangleADominates,
                TieSide::B => TriangleClass::NoTriangleBDominates,
                TieSide::C => TriangleClass::NoTriangleCDominates,
            };
            return Ok((class, None));
        }
    }
    for (e, side) in excess {
        if e.abs() <= eps {
            return Ok((TriangleClass::Degenerate, Some(side)));
        }
    }
    Ok((TriangleClass::Triangle, None))
}

/// Strict triangle, degenerate triangle, or which side dominates. Ties within
/// `tri_tol` of the largest side route to the degenerate branch.
pub fn classify_triangle(
    side_a: f64,
    side_b: f64,
    side_c: f64,
    tol: Tolerances,
) -> Result<TriangleClass> {
    classify_detailed(side_a, side_b, side_c, tol).map(|(class, _)| class)
}

/// Angles from the Law of Cosines, `arccos` arguments clamped to `[−1, 1]`.
pub fn triangle_angles(
    side_a: f64,
    side_b: f64,
    side_c: f64,
    tol: Tolerances,
) -> Result<TriangleGeometry> {
    let (class, tie) = classify_detailed(side_a, side_b, side_c, tol)?;
    let (omega1, omega2, omega3, degenerate) = match class {
        TriangleClass::Triangle => {
            let cos1 = ((side_b * side_b + side_c * side_c - side_a * side_a)
                / (2.0 * side_b * side_c))
                .clamp(-1.0, 1.0);
            let cos2 = ((side_a * side_a + side_c * side_c - side_b * side_b)
                / (2.0 * side_a * side_c))
                .clamp(-1.0, 1.0);
            let cos3 = ((side_a * side_a + side_b * side_b - side_c * side_c)
                / (2.0 * side_a * side_b))
                .clamp(-1.0, 1.0);
            (cos1.acos(), cos2.acos(), cos3.acos(), false)
        }
        TriangleClass::Degenerate => match tie.expect("degenerate class carries the tie side") {
            TieSide::A => (PI, 0.0, 0.0, true),
            TieSide::B => (0.0, PI, 0.0, true),
            TieSide::C => (0.0, 0.0, PI, true),
        },
        _ => return Err(Error::NotATriangle),
    };
    Ok(TriangleGeometry {
        side_a,
        side_b,
        side_c,
        omega1,
        omega2,
        omega3,
        degenerate,
    })
}

/// Pivot `P` of the counting interval; independent of the radius.
///
/// For real coefficients this lands on the quadrant table
/// `(n−m)/2`, `n − m/2`, `n/2`, `0` (first through fourth quadrant of
/// `(b, c)`).
pub fn pivot(t: &NormalizedTrinomial) -> f64 {
    let beta = arg_unchecked(t.b());
    let gamma = arg_unchecked(t.c());
    (t.n() as f64 * (beta - gamma + PI) - t.m() as f64 * (PI - gamma)) / (2.0 * PI)
}

/// Side lengths `(rⁿ, |b|rᵐ, |c|)` rescaled by the largest.
///
/// The rescaling keeps every quantity inside the normal floating-point range
/// for any exponent size; triangle classification and the Law of Cosines are
/// scale-invariant, so downstream angles are unaffected.
fn scaled_sides(t: &NormalizedTrinomial, r: f64) -> (f64, f64, f64) {
    let log_a = t.n() as f64 * r.ln();
    let log_b = t.b().norm().ln() + t.m() as f64 * r.ln();
    let log_c = t.c().norm().ln();
    let log_max = log_a.max(log_b).max(log_c);
    let rescale = |l: f64| (l - log_max).exp().max(1e-300);
    (rescale(log_a), rescale(log_b), rescale(log_c))
}

/// Half-width `ω(r) = (n·ω₁ + m·ω₂)/2π` of the counting interval.
pub fn omega_r(t: &NormalizedTrinomial, r: f64, tol: Tolerances) -> Result<f64> {
    if r <= 0.0 || !r.is_finite() {
        return Err(Error::InvalidParameters(format!("radius must be positive, got {r}")));
    }
    let (sa, sb, sc) = scaled_sides(t, r);
    let geometry = triangle_angles(sa, sb, sc, tol)?;
    Ok((t.n() as f64 * geometry.omega1 + t.m() as f64 * geometry.omega2) / (2.0 * PI))
}

/// Root count in the open disc of radius `r`, with supporting detail.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BohlCount {
    pub count: u64,
    /// Some decision (triangle tie, boundary integrality) fell within
    /// tolerance of a tie; the verdict may sit on a root of modulus `r`.
    pub marginal: bool,
    /// The counting interval, absent in the side-dominance cases.
    pub interval: Option<BohlInterval>,
    pub triangle: TriangleClass,
}

/// Counts the roots of the trinomial in the open disc `D_r` without
/// computing any roots.
pub fn count_roots_in_disc(t: &NormalizedTrinomial, r: f64, tol: Tolerances) -> Result<BohlCount> {
    if r <= 0.0 || !r.is_finite() {
        return Err(Error::InvalidParameters(format!("radius must be positive, got {r}")));
    }
    let (sa, sb, sc) = scaled_sides(t, r);
    let (class, tie) = classify_detailed(sa, sb, sc, tol)?;
    let (n, m) = (t.n() as u64, t.m() as u64);
    match class {
        TriangleClass::NoTriangleCDominates => Ok(BohlCount {
            count: 0,
            marginal: false,
            interval: None,
            triangle: class,
        }),
        TriangleClass::NoTriangleBDominates => Ok(BohlCount {
            count: m,
            marginal: false,
            interval: None,
            triangle: class,
        }),
        TriangleClass::NoTriangleADominates => Ok(BohlCount {
            count: n,
            marginal: false,
            interval: None,
            triangle: class,
        }),
        TriangleClass::Triangle | TriangleClass::Degenerate => {
            let p = pivot(t);
            let omega = match tie {
                // Exact degenerate half-widths keep the integer-boundary
                // detection sharp.
                Some(TieSide::A) => n as f64 / 2.0,
                Some(TieSide::B) => m as f64 / 2.0,
                Some(TieSide::C) => 0.0,
                None => omega_r(t, r, tol)?,
            };
            let interval = BohlInterval::new(p, omega)?;
            let counted = count_integers(interval, tol);

            // Override for |b|rᵐ = rⁿ + |c| with r^{n−m} > m|b|/n and an
            // integer upper boundary: the count is m, not the open-interval
            // value. Evaluated in log space so large exponents cannot
            // overflow.
            let mut count = counted.count;
            if tie == Some(TieSide::B) && counted.boundary_marginal {
                let threshold = (t.m() as f64 * t.b().norm() / t.n() as f64).ln();
                if (t.n() - t.m()) as f64 * r.ln() > threshold {
                    count = m;
                }
            }
            Ok(BohlCount {
                count,
                marginal: class == TriangleClass::Degenerate || counted.boundary_marginal,
                interval: Some(interval),
                triangle: class,
            })
        }
    }
}
