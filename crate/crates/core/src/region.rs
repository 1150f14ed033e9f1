//! The stability region: projection to real representatives, region
//! classification, the full Schur test, and the `(x, y, s, t)`
//! parametrization.
//!
//! A monic reduced trinomial projects to the plane point
//! `(x, y) = (|b|, (−1)ⁿ|c|)`. The projected stability region splits into two
//! pieces in the quadrant selected by the parity of `n`:
//!
//! - `Γ`: `x + |y| < 1`, where the leading power dominates the unit circle
//!   and every phase choice is stable;
//! - `Δ`: `x + |y| ≥ 1` with the sides `(1, x, |y|)` forming a (possibly
//!   degenerate) triangle and `2ω(x, y) > n − 1`.
//!
//! A trinomial is stable iff its projection lands in `Γ ∪ Δ` and its pivot
//! offset `t` stays within `π/n` (on `Γ`, automatic) or strictly within
//! `π(2ω − n + 1)/n` (on `Δ`).

use crate::bohl::{self, BohlCount};
use crate::error::{Error, Result};
use crate::interval::BohlInterval;
use crate::tolerance::Tolerances;
use crate::trinomial::{
    arg_unchecked, classify_degenerate, gcd, normalize, Complex, NormalizedTrinomial, Trinomial,
};
use serde::Serialize;
use std::f64::consts::PI;

/// Projected real representative `(x, y) = (|b|, (−1)ⁿ|c|)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegionPoint {
    pub x: f64,
    pub y: f64,
    pub n: u32,
    pub m: u32,
}

impl RegionPoint {
    /// Validates the sign convention: `x > 0` and `sign(y) = (−1)ⁿ`.
    pub fn new(x: f64, y: f64, n: u32, m: u32) -> Result<Self> {
        if m == 0 || n <= m || gcd(n, m) != 1 {
            return Err(Error::InvalidExponents { n, m });
        }
        if x <= 0.0 || !x.is_finite() || !y.is_finite() {
            return Err(Error::InvalidParameters(format!(
                "x must be positive and y finite, got x={x}, y={y}"
            )));
        }
        let sign_ok = if n.is_multiple_of(2) { y > 0.0 } else { y < 0.0 };
        if !sign_ok {
            return Err(Error::InvalidParameters(format!(
                "y must carry the sign (-1)^n, got y={y} for n={n}"
            )));
        }
        Ok(Self { x, y, n, m })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RegionTag {
    /// Inside the Cohn square `|u| + |v| < 1` but outside the `Γ` quadrant.
    Cohn,
    Gamma,
    Delta,
    Outside,
}

/// Region membership with the interval half-width `ω(u, v)` where the
/// triangle exists, and a flag for classifications decided within tolerance
/// of a boundary.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RegionClass {
    pub tag: RegionTag,
    pub omega: Option<f64>,
    pub marginal: bool,
}

/// `Π_n`: the projection onto the real representative.
pub fn project(t: &NormalizedTrinomial) -> RegionPoint {
    let sign = if t.n().is_multiple_of(2) { 1.0 } else { -1.0 };
    RegionPoint {
        x: t.b().norm(),
        y: sign * t.c().norm(),
        n: t.n(),
        m: t.m(),
    }
}

/// Half-width `ω(u, v)` for the triangle with sides `(1, u, |v|)`:
///
/// ```text
/// ω(u, v) = (n·arccos((u² + v² − 1)/(2u|v|)) + m·arccos((1 − u² + v²)/(2|v|))) / 2π
/// ```
///
/// `arccos` arguments are clamped to `[−1, 1]`; side configurations beyond
/// the triangle inequality by more than the tolerance are rejected.
pub fn omega_uv(u: f64, v: f64, n: u32, m: u32, tol: Tolerances) -> Result<f64> {
    let av = v.abs();
    if av == 0.0 {
        return Err(Error::ZeroCoefficient("v"));
    }
    if u <= 0.0 || u.is_nan() {
        return Err(Error::PreconditionViolated(format!(
            "u must be positive, got {u}"
        )));
    }
    let guard = tol.tri_tol * 1.0f64.max(u).max(av);
    if u + av < 1.0 - guard || u > 1.0 + av + guard || av > 1.0 + u + guard {
        return Err(Error::NotATriangle);
    }
    let arg1 = ((u * u + v * v - 1.0) / (2.0 * u * av)).clamp(-1.0, 1.0);
    let arg2 = ((1.0 - u * u + v * v) / (2.0 * av)).clamp(-1.0, 1.0);
    Ok((n as f64 * arg1.acos() + m as f64 * arg2.acos()) / (2.0 * PI))
}

/// Classifies an arbitrary plane point against the projected region.
///
/// Points of the Cohn square that fall outside the `Γ` quadrant are tagged
/// [`RegionTag::Cohn`]; the boundary curve `2ω = n − 1` is excluded from `Δ`
/// (points within `int_tol` of it are `Outside` and marginal), while the
/// degenerate-triangle line `u + |v| = 1` belongs to `Δ`.
pub fn classify_point(u: f64, v: f64, n: u32, m: u32, tol: Tolerances) -> RegionClass {
    let au = u.abs();
    let av = v.abs();
    let sum = au + av;
    let even = n.is_multiple_of(2);
    let eps = tol.tri_tol * 1.0f64.max(au).max(av);
    let near_unit_sum = (sum - 1.0).abs() <= eps;

    let gamma_quadrant = u >= 0.0 && if even { v >= 0.0 } else { v <= 0.0 };
    let delta_quadrant = u > 0.0 && if even { v > 0.0 } else { v < 0.0 };

    if gamma_quadrant && sum < 1.0 {
        return RegionClass {
            tag: RegionTag::Gamma,
            omega: None,
            marginal: near_unit_sum,
        };
    }
    if delta_quadrant && sum >= 1.0 {
        if u > 1.0 + av + eps || av > 1.0 + u + eps {
            return RegionClass {
                tag: RegionTag::Outside,
                omega: None,
                marginal: false,
            };
        }
        // Degenerate side configurations snap to exact half-widths.
        let omega = if near_unit_sum {
            n as f64 / 2.0
        } else if (u - (1.0 + av)).abs() <= eps {
            m as f64 / 2.0
        } else if (av - (1.0 + u)).abs() <= eps {
            0.0
        } else {
            omega_uv(u, v, n, m, tol).expect("triangle inequality checked above")
        };
        let excess = 2.0 * omega - (n as f64 - 1.0);
        if excess > tol.int_tol {
            return RegionClass {
                tag: RegionTag::Delta,
                omega: Some(omega),
                marginal: near_unit_sum,
            };
        }
        return RegionClass {
            tag: RegionTag::Outside,
            omega: Some(omega),
            marginal: near_unit_sum || excess.abs() <= tol.int_tol,
        };
    }
    if sum < 1.0 {
        return RegionClass {
            tag: RegionTag::Cohn,
            omega: None,
            marginal: near_unit_sum,
        };
    }
    RegionClass {
        tag: RegionTag::Outside,
        omega: None,
        marginal: near_unit_sum,
    }
}

/// Region membership of a projected representative.
pub fn classify_region(p: &RegionPoint, tol: Tolerances) -> RegionClass {
    classify_point(p.x, p.y, p.n, p.m, tol)
}

/// The `|t|` bound of the parametrization: `π/n` on `Γ` (inclusive),
/// `π(2ω − n + 1)/n` on `Δ` (strict); none elsewhere.
pub fn t_bound(class: &RegionClass, n: u32) -> Option<f64> {
    match class.tag {
        RegionTag::Gamma => Some(PI / n as f64),
        RegionTag::Delta => class
            .omega
            .map(|w| PI * (2.0 * w - n as f64 + 1.0) / n as f64),
        _ => None,
    }
}

/// Which coefficient of the degenerate table was zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DegenerateCase {
    /// `a = 0, b ≠ 0`: the trinomial collapses to `b·ζᵐ + c`.
    MissingLeading,
    /// `a = b = 0`: only the constant remains.
    ConstantOnly,
    /// `b = 0`: pure power equation `a·ζⁿ + c`.
    MissingMiddle,
    /// `c = 0`: `ζᵐ` factors out.
    MissingConstant,
}

/// Machine-checkable evidence for a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Certificate {
    /// A coefficient was zero; stable iff `ratio < 1`.
    DegenerateTable { case: DegenerateCase, ratio: f64 },
    /// `x + |y| < 1`: all `n` roots lie in the unit disc for every phase.
    CohnMembership { x: f64, y: f64 },
    /// Counting interval at `r = 1` (absent when a side dominates) and its
    /// integer count; stability would require the count `n`.
    BohlCount {
        interval: Option<BohlInterval>,
        count: u64,
    },
    /// Parametrization coordinates; `|t|` meets the recorded region's bound.
    Parametrization {
        region: RegionTag,
        x: f64,
        y: f64,
        s: f64,
        t: f64,
    },
}

/// Stability verdict plus its certificate; `marginal` records that a
/// deciding comparison fell within numerical tolerance of a tie.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StabilityVerdict {
    pub stable: bool,
    pub certificate: Certificate,
    pub marginal: bool,
}

fn bohl_certificate(counted: &BohlCount) -> Certificate {
    Certificate::BohlCount {
        interval: counted.interval,
        count: counted.count,
    }
}

/// Decides Schur stability of an arbitrary trinomial.
///
/// Pipeline: degenerate table, normalization, the Viète quick reject
/// `|c| ≥ 1`, projection, region classification, and on `Δ` the strict `|t|`
/// bound of the parametrization. Unstable verdicts carry the Bohl count at
/// `r = 1` as evidence.
pub fn is_schur_stable(t: &Trinomial, tol: Tolerances) -> Result<StabilityVerdict> {
    if let Some(verdict) = classify_degenerate(t, tol)? {
        return Ok(verdict);
    }
    let nt = normalize(t)?;
    let n = nt.n();

    let c_mod = nt.c().norm();
    if c_mod >= 1.0 {
        let counted = bohl::count_roots_in_disc(&nt, 1.0, tol)?;
        return Ok(StabilityVerdict {
            stable: false,
            certificate: bohl_certificate(&counted),
            marginal: counted.marginal || (c_mod - 1.0).abs() <= tol.int_tol,
        });
    }

    let point = project(&nt);
    let class = classify_region(&point, tol);
    match class.tag {
        RegionTag::Gamma => Ok(StabilityVerdict {
            stable: true,
            certificate: Certificate::CohnMembership {
                x: point.x,
                y: point.y,
            },
            marginal: class.marginal,
        }),
        RegionTag::Delta => {
            let params = decompose_parameters(&nt);
            let two_omega = 2.0 * class.omega.expect("delta classification carries omega");
            debug_assert!(two_omega <= n as f64 + 1e-9);
            let bound = PI * (two_omega - n as f64 + 1.0) / n as f64;
            // The comparison lives on the pivot scale: |P_g − P_f| = n|t|/2π
            // against ν/2 = (2ω − n + 1)/2, where int_tol applies.
            let shift = n as f64 * params.t.abs() / (2.0 * PI);
            let nu_half = (two_omega - (n as f64 - 1.0)) / 2.0;
            let marginal = class.marginal || (shift - nu_half).abs() <= tol.int_tol;
            if params.t.abs() < bound {
                Ok(StabilityVerdict {
                    stable: true,
                    certificate: Certificate::Parametrization {
                        region: RegionTag::Delta,
                        x: params.x,
                        y: params.y,
                        s: params.s,
                        t: params.t,
                    },
                    marginal,
                })
            } else {
                let counted = bohl::count_roots_in_disc(&nt, 1.0, tol)?;
                Ok(StabilityVerdict {
                    stable: false,
                    certificate: bohl_certificate(&counted),
                    marginal: marginal || counted.marginal,
                })
            }
        }
        RegionTag::Cohn | RegionTag::Outside => {
            let counted = bohl::count_roots_in_disc(&nt, 1.0, tol)?;
            Ok(StabilityVerdict {
                stable: false,
                certificate: bohl_certificate(&counted),
                marginal: class.marginal || counted.marginal,
            })
        }
    }
}

/// The parametrization coordinates of a trinomial.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Parameters {
    pub x: f64,
    pub y: f64,
    pub s: f64,
    pub t: f64,
}

fn mod_inverse(a: i64, modulus: i64) -> i64 {
    let (mut old_r, mut r) = (a.rem_euclid(modulus), modulus);
    let (mut old_s, mut s) = (1i64, 0i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    old_s.rem_euclid(modulus)
}

/// Canonical coordinates `(x, y, s, t)` with
/// `b = x·e^{it}·e^{−i(n−m)s}` and `c = y·e^{−ins}`, `y = (−1)ⁿ|c|`.
///
/// The rotation `s` is determined modulo `2π/n`; because `gcd(n − m, n) = 1`
/// the admissible choices sweep `t` through a grid of spacing `2π/n`, so the
/// minimizer satisfies `|t| ≤ π/n`. Ties at `|t| = π/n` resolve toward
/// `t ≥ 0`.
pub fn decompose_parameters(t: &NormalizedTrinomial) -> Parameters {
    let (n, m) = (t.n(), t.m());
    let x = t.b().norm();
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    let y = sign * t.c().norm();

    // c = y·e^{−ins} fixes s modulo 2π/n.
    let phase = arg_unchecked(t.c() / Complex::new(y, 0.0));
    let s0 = -phase / n as f64;
    // b = x·e^{it}·e^{−i(n−m)s} then fixes t for each choice of s.
    let t0 = arg_unchecked(t.b()) + (n - m) as f64 * s0;

    let step = 2.0 * PI / n as f64;
    let mut j = (-t0 / step).round() as i64;
    let mut offset = t0 + j as f64 * step;
    if offset <= -step / 2.0 + 1e-12 * step {
        offset += step;
        j += 1;
    }

    // Recover which n-th root of unity produced the chosen grid point:
    // j ≡ (n − m)·k (mod n).
    let k = (j.rem_euclid(n as i64) * mod_inverse((n - m) as i64, n as i64)).rem_euclid(n as i64);
    let s = (s0 + k as f64 * step).rem_euclid(2.0 * PI);
    Parameters { x, y, s, t: offset }
}

/// The trinomial `ζⁿ + x·e^{it}·e^{−i(n−m)s}·ζᵐ + y·e^{−ins}`.
pub fn compose_parameters(
    x: f64,
    y: f64,
    s: f64,
    t: f64,
    n: u32,
    m: u32,
) -> Result<NormalizedTrinomial> {
    if x <= 0.0 || !x.is_finite() {
        return Err(Error::InvalidParameters(format!(
            "x must be positive, got {x}"
        )));
    }
    if y == 0.0 || !y.is_finite() {
        return Err(Error::InvalidParameters(format!(
            "y must be nonzero, got {y}"
        )));
    }
    if !s.is_finite() || !t.is_finite() {
        return Err(Error::InvalidParameters("s and t must be finite".into()));
    }
    let b = Complex::from_polar(x, t - (n - m) as f64 * s);
    let c = Complex::new(y, 0.0) * Complex::from_polar(1.0, -(n as f64) * s);
    NormalizedTrinomial::new(n, m, b, c)
}

fn sign_term(x: f64, y: f64, n: u32, m: u32) -> f64 {
    // Sign of (−1)^m · xⁿ · y^{n−m}, tracked without forming the powers.
    let mut sign = if m % 2 == 1 { -1.0 } else { 1.0 };
    if x == 0.0 || y == 0.0 {
        return 0.0;
    }
    if x < 0.0 && n % 2 == 1 {
        sign = -sign;
    }
    if y < 0.0 && (n - m) % 2 == 1 {
        sign = -sign;
    }
    sign
}

/// Real-coefficient stability of `ζⁿ + x·ζᵐ + y`: condition (C₁)
/// `|x| + |y| < 1`, or (C₂) with the angle inequality
/// `n·arccos((1 + x² − y²)/2|x|) + (n−m)·arccos((1 − x² + y²)/2|y|) < π`.
///
/// Requires `gcd(n, m) = 1` and nonzero `x`, `y`.
pub fn real_stability_c1_c2(x: f64, y: f64, n: u32, m: u32) -> bool {
    let (ax, ay) = (x.abs(), y.abs());
    if ax + ay < 1.0 {
        return true;
    }
    if !(ax - 1.0 < ay && ay < 1.0) {
        return false;
    }
    if sign_term(x, y, n, m) >= 0.0 {
        return false;
    }
    let a1 = ((1.0 + x * x - y * y) / (2.0 * ax)).clamp(-1.0, 1.0);
    let a2 = ((1.0 - x * x + y * y) / (2.0 * ay)).clamp(-1.0, 1.0);
    n as f64 * a1.acos() + (n - m) as f64 * a2.acos() < PI
}

/// Variant characterization (C₁) or (C₂′):
/// `n·arccos((1 − x² − y²)/2|x||y|) − m·arccos((1 − x² + y²)/2|y|) < π`.
pub fn real_stability_c1_c2prime(x: f64, y: f64, n: u32, m: u32) -> bool {
    let (ax, ay) = (x.abs(), y.abs());
    if ax + ay < 1.0 {
        return true;
    }
    if sign_term(x, y, n, m) >= 0.0 {
        return false;
    }
    let a1 = ((1.0 - x * x - y * y) / (2.0 * ax * ay)).clamp(-1.0, 1.0);
    let a2 = ((1.0 - x * x + y * y) / (2.0 * ay)).clamp(-1.0, 1.0);
    n as f64 * a1.acos() - m as f64 * a2.acos() < PI
}

/// Stability of the four real sign combinations around a projected point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignFlipTable {
    /// `ζⁿ + x·ζᵐ + y`
    pub original: bool,
    /// `ζⁿ + x·ζᵐ − y`
    pub c_flipped: bool,
    /// `ζⁿ − x·ζᵐ + y`
    pub b_flipped: bool,
    /// `ζⁿ − x·ζᵐ − y`
    pub both_flipped: bool,
}

/// Verdicts for `(±x, ±y)` given a point of `Γ ∪ Δ`.
///
/// On `Γ` all four combinations stay inside the Cohn square and are stable.
/// On `Δ` exactly one flip partner is stable: the image of the point under
/// the `s = π` angular flow, which flips `b` iff `n − m` is odd and `c` iff
/// `n` is odd.
pub fn sign_flip_table(x: f64, y: f64, n: u32, m: u32, tol: Tolerances) -> Result<SignFlipTable> {
    let point = RegionPoint::new(x, y, n, m)?;
    let class = classify_region(&point, tol);
    match class.tag {
        RegionTag::Gamma => Ok(SignFlipTable {
            original: true,
            c_flipped: true,
            b_flipped: true,
            both_flipped: true,
        }),
        RegionTag::Delta => {
            let flips_b = (n - m) % 2 == 1;
            let flips_c = n % 2 == 1;
            Ok(SignFlipTable {
                original: true,
                c_flipped: !flips_b && flips_c,
                b_flipped: flips_b && !flips_c,
                both_flipped: flips_b && flips_c,
            })
        }
        _ => Err(Error::NotInProjection),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const TOL: Tolerances = Tolerances::new(1e-9, 1e-9, 1e-8);

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    fn nt(n: u32, m: u32, b: Complex, cc: Complex) -> NormalizedTrinomial {
        NormalizedTrinomial::new(n, m, b, cc).unwrap()
    }

    fn polar(modulus: f64, angle: f64) -> Complex {
        Complex::from_polar(modulus, angle)
    }

    #[test]
    fn projection_examples() {
        let p = project(&nt(4, 3, c(0.0, -2.0), c(0.3, 0.4)));
        assert_eq!((p.x, p.y), (2.0, 0.5));

        let p = project(&nt(11, 10, -polar(1.0, 0.6), polar(0.05, 0.6).scale(-1.0)));
        assert!((p.x - 1.0).abs() < 1e-15);
        assert!((p.y + 0.05).abs() < 1e-15);

        let p = project(&nt(3, 1, c(1.0, 0.0), c(1.0, 0.0)));
        assert_eq!((p.x, p.y), (1.0, -1.0));
    }

    #[test]
    fn omega_uv_closed_forms() {
        // Unimodular u = 1: 2ω = (n + m)·arccos(|v|/2)/π.
        for (n, m, av) in [(3u32, 2u32, 0.4), (5, 4, 0.7), (4, 1, 0.5)] {
            let v = if n % 2 == 0 { av } else { -av };
            let omega = omega_uv(1.0, v, n, m, TOL).unwrap();
            let expected = (n + m) as f64 * (av / 2.0).acos() / (2.0 * PI);
            assert!((omega - expected).abs() < 1e-12);
        }
        // Degenerate u + |v| = 1: both arccos arguments saturate, ω = n/2.
        let omega = omega_uv(0.3, 0.7, 4, 3, TOL).unwrap();
        assert!((omega - 2.0).abs() < 1e-7);

        assert_eq!(omega_uv(1.0, 0.0, 3, 2, TOL), Err(Error::ZeroCoefficient("v")));
        assert_eq!(omega_uv(0.2, 0.3, 3, 2, TOL), Err(Error::NotATriangle));
    }

    #[test]
    fn classify_examples() {
        let class = classify_point(0.3, 0.3, 4, 3, TOL);
        assert_eq!(class.tag, RegionTag::Gamma);

        // A deep Δ instance: thin lobe high on the degree-11 family.
        let class = classify_point(1.0, -0.05, 11, 10, TOL);
        assert_eq!(class.tag, RegionTag::Delta);
        assert!(2.0 * class.omega.unwrap() > 10.0);

        // Unimodular |b| = 1 with m < n − 1 never reaches Δ.
        let class = classify_point(1.0, 0.5, 4, 1, TOL);
        assert_eq!(class.tag, RegionTag::Outside);

        // Cohn square outside the Γ quadrant.
        let class = classify_point(0.3, -0.3, 4, 3, TOL);
        assert_eq!(class.tag, RegionTag::Cohn);
        let class = classify_point(-0.4, 0.2, 4, 3, TOL);
        assert_eq!(class.tag, RegionTag::Cohn);

        // Dominant-side configurations in the Δ quadrant.
        let class = classify_point(2.4, 0.9, 4, 3, TOL);
        assert_eq!(class.tag, RegionTag::Outside);
        assert!(class.omega.is_none());
    }

    #[test]
    fn delta_lobe_endpoints_for_kuruklis_family() {
        // m = n − 1, u = 1: Δ membership is arccos(|v|/2) > (n−1)π/(2n−1).
        for n in 2u32..9 {
            let threshold = 2.0 * ((n as f64 - 1.0) * PI / (2.0 * n as f64 - 1.0)).cos();
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            let inside = classify_point(1.0, sign * (threshold - 1e-3), n, n - 1, TOL);
            assert_eq!(inside.tag, RegionTag::Delta, "n={n}");
            let outside = classify_point(1.0, sign * (threshold + 1e-3), n, n - 1, TOL);
            assert_eq!(outside.tag, RegionTag::Outside, "n={n}");
        }
    }

    #[test]
    fn phase_sensitive_verdicts() {
        // ζ¹¹ + ζ¹⁰ − 0.05 is stable.
        let t = Trinomial::monic(11, 10, c(1.0, 0.0), c(-0.05, 0.0)).unwrap();
        let v = is_schur_stable(&t, TOL).unwrap();
        assert!(v.stable && !v.marginal);

        // ζ¹¹ − e^{i0.6}ζ¹⁰ − 0.05e^{i0.6} is not, despite the same moduli.
        let t = Trinomial::monic(11, 10, -polar(1.0, 0.6), polar(0.05, 0.6).scale(-1.0)).unwrap();
        let v = is_schur_stable(&t, TOL).unwrap();
        assert!(!v.stable && !v.marginal);
        assert!(matches!(v.certificate, Certificate::BohlCount { count, .. } if count < 11));
    }

    #[test]
    fn lambert_family() {
        // ζ² + ζ + c stable iff 0 < c < 1.
        for k in -19i32..=19 {
            let cc = k as f64 * 0.05;
            let t = Trinomial::monic(2, 1, c(1.0, 0.0), c(cc, 0.0)).unwrap();
            let v = is_schur_stable(&t, TOL).unwrap();
            assert_eq!(v.stable, cc > 0.0, "c = {cc}");
        }
    }

    #[test]
    fn quick_reject_large_constant() {
        let t = Trinomial::monic(5, 2, c(0.3, 0.0), c(1.2, 0.1)).unwrap();
        let v = is_schur_stable(&t, TOL).unwrap();
        assert!(!v.stable);
        let t = Trinomial::monic(5, 2, c(0.3, 0.0), c(1.0, 0.0)).unwrap();
        let v = is_schur_stable(&t, TOL).unwrap();
        assert!(!v.stable && v.marginal);
    }

    #[test]
    fn decompose_canonical_cases() {
        // Already canonical: b = x > 0, c = (−1)ⁿ|c|.
        let p = decompose_parameters(&nt(4, 3, c(0.8, 0.0), c(0.4, 0.0)));
        assert_eq!((p.x, p.y), (0.8, 0.4));
        assert!(p.s.abs() < 1e-12 && p.t.abs() < 1e-12);

        let p = decompose_parameters(&nt(3, 2, c(0.8, 0.0), c(-0.4, 0.0)));
        assert_eq!((p.x, p.y), (0.8, -0.4));
        assert!(p.s.abs() < 1e-12 && p.t.abs() < 1e-12);

        // b rotated by exactly π/n sits on the |t| boundary.
        let p = decompose_parameters(&nt(5, 2, polar(0.7, PI / 5.0), c(-0.3, 0.0)));
        assert!((p.t.abs() - PI / 5.0).abs() < 1e-12);
    }

    #[test]
    fn compose_matches_theorem_items() {
        // Γ point, t = 0, s = π with n even: ζⁿ − xζᵐ + y is stable.
        let composed = compose_parameters(0.4, 0.3, PI, 0.0, 4, 3).unwrap();
        assert!((composed.b() - c(-0.4, 0.0)).norm() < 1e-12);
        assert!((composed.c() - c(0.3, 0.0)).norm() < 1e-12);
        let v = is_schur_stable(&composed.to_trinomial(), TOL).unwrap();
        assert!(v.stable);

        // Δ point of the (4, 3) lobe: the c sign flip leaves the region.
        let t = Trinomial::monic(4, 3, c(0.8, 0.0), c(-0.4, 0.0)).unwrap();
        assert!(!is_schur_stable(&t, TOL).unwrap().stable);
        let base = Trinomial::monic(4, 3, c(0.8, 0.0), c(0.4, 0.0)).unwrap();
        assert!(is_schur_stable(&base, TOL).unwrap().stable);
    }

    #[test]
    fn kuruklis_bound_matches_closed_form() {
        // m = n − 1, |b| = 1: the Δ bound reduces to
        // ((2n−1)·arccos(|c|/2) − (n−1)π)/n.
        for n in 2u32..9 {
            let av: f64 = 0.2;
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            let class = classify_point(1.0, sign * av, n, n - 1, TOL);
            let expected = ((2.0 * n as f64 - 1.0) * (av / 2.0).acos() - (n as f64 - 1.0) * PI)
                / n as f64;
            match t_bound(&class, n) {
                Some(bound) => assert!((bound - expected).abs() < 1e-12, "n={n}"),
                None => assert!(expected <= 0.0, "n={n}"),
            }
        }
    }

    #[test]
    fn real_condition_examples() {
        assert!(real_stability_c1_c2(0.4, -0.3, 3, 1));
        // ζ² + ζ − 0.5 violates the sign pattern (−1)ᵐxⁿy^{n−m} < 0 outside
        // the Cohn square, and indeed has a root beyond the circle.
        assert!(!real_stability_c1_c2(1.0, -0.5, 2, 1));
        assert!(!real_stability_c1_c2prime(1.0, -0.5, 2, 1));
        // ζ² + ζ + 0.5 is the stable Lambert instance.
        assert!(real_stability_c1_c2(1.0, 0.5, 2, 1));
        assert!(real_stability_c1_c2prime(1.0, 0.5, 2, 1));
    }

    #[test]
    fn real_conditions_agree_on_a_grid() {
        // 61 cells over [−2, 2]: the odd denominator keeps grid sums off the
        // exact boundary lines |x| ± |y| = 1 where strict inequalities tie.
        for (n, m) in [(3u32, 1u32), (3, 2), (4, 3), (5, 2)] {
            for i in 0..61 {
                for j in 0..61 {
                    let x = -2.0 + (i as f64 + 0.5) * (4.0 / 61.0);
                    let y = -2.0 + (j as f64 + 0.5) * (4.0 / 61.0);
                    let t = Trinomial::monic(n, m, c(x, 0.0), c(y, 0.0)).unwrap();
                    let v = is_schur_stable(&t, TOL).unwrap();
                    if v.marginal {
                        continue;
                    }
                    let c2 = real_stability_c1_c2(x, y, n, m);
                    let c2p = real_stability_c1_c2prime(x, y, n, m);
                    assert_eq!(c2, c2p, "(n,m)=({n},{m}) at ({x},{y})");
                    assert_eq!(v.stable, c2, "(n,m)=({n},{m}) at ({x},{y})");
                }
            }
        }
    }

    #[test]
    fn sign_flip_examples() {
        // Γ point: all four combinations stable.
        let table = sign_flip_table(0.3, 0.3, 4, 3, TOL).unwrap();
        assert_eq!(
            table,
            SignFlipTable {
                original: true,
                c_flipped: true,
                b_flipped: true,
                both_flipped: true
            }
        );

        // Δ₀, n even: only the b flip stays stable.
        let table = sign_flip_table(0.8, 0.4, 4, 3, TOL).unwrap();
        assert_eq!(
            table,
            SignFlipTable {
                original: true,
                c_flipped: false,
                b_flipped: true,
                both_flipped: false
            }
        );

        // Δ₁ with odd n and odd m: only the c flip stays stable.
        let table = sign_flip_table(0.8, -0.4, 3, 1, TOL).unwrap();
        assert_eq!(
            table,
            SignFlipTable {
                original: true,
                c_flipped: true,
                b_flipped: false,
                both_flipped: false
            }
        );

        // Δ₁ with odd n and even m: only the double flip stays stable.
        let table = sign_flip_table(0.8, -0.4, 3, 2, TOL).unwrap();
        assert_eq!(
            table,
            SignFlipTable {
                original: true,
                c_flipped: false,
                b_flipped: false,
                both_flipped: true
            }
        );

        assert_eq!(
            sign_flip_table(1.9, 0.9, 4, 3, TOL),
            Err(Error::NotInProjection)
        );
        assert!(sign_flip_table(0.3, -0.3, 4, 3, TOL).is_err());
    }

    proptest! {
        /// compose ∘ decompose reproduces the coefficients to 1e−12.
        #[test]
        fn decompose_round_trip(
            n in 2u32..13,
            mseed in 0u32..12,
            bm in 0.05f64..3.0, ba in -PI..PI,
            cm in 0.05f64..3.0, ca in -PI..PI,
        ) {
            let m = 1 + mseed % (n - 1);
            prop_assume!(gcd(n, m) == 1);
            let t = nt(n, m, polar(bm, ba), polar(cm, ca));
            let p = decompose_parameters(&t);
            prop_assert!(p.t.abs() <= PI / n as f64 + 1e-12);
            prop_assert!((0.0..2.0 * PI + 1e-12).contains(&p.s));
            let back = compose_parameters(p.x, p.y, p.s, p.t, n, m).unwrap();
            let scale = bm.max(cm).max(1.0);
            prop_assert!((back.b() - t.b()).norm() < 1e-12 * scale);
            prop_assert!((back.c() - t.c()).norm() < 1e-12 * scale);
        }

        /// The verdict is invariant under the angular flow.
        #[test]
        fn verdict_rotation_invariance(
            s in 0.0f64..2.0 * PI,
            bm in 0.05f64..2.0, ba in -PI..PI,
            cm in 0.05f64..0.99, ca in -PI..PI,
        ) {
            let (n, m) = (5u32, 3u32);
            let b = polar(bm, ba);
            let cc = polar(cm, ca);
            let base = is_schur_stable(&Trinomial::monic(n, m, b, cc).unwrap(), TOL).unwrap();
            let flowed = Trinomial::monic(
                n,
                m,
                b * polar(1.0, -((n - m) as f64) * s),
                cc * polar(1.0, -(n as f64) * s),
            )
            .unwrap();
            let rotated = is_schur_stable(&flowed, TOL).unwrap();
            prop_assume!(!base.marginal && !rotated.marginal);
            prop_assert_eq!(base.stable, rotated.stable);
        }
    }
}
