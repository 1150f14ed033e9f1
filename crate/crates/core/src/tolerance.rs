/// Numerical decision thresholds.
///
/// Pivots and interval boundaries come out of `arccos` and `atan2`
/// evaluations, so exact ties (integer boundary points, degenerate triangles)
/// are smeared over a few ulps. Every tie-sensitive comparison in the crate
/// goes through one of these thresholds, and verdicts decided inside a
/// threshold band are flagged marginal rather than claimed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Absolute distance below which a real value is treated as an integer
    /// (interval boundary points, half-integer pivot checks, `2ω = n−1`).
    pub int_tol: f64,
    /// Triangle classification tolerance, relative to the largest side; ties
    /// route to the degenerate branch.
    pub tri_tol: f64,
    /// Residual bound for oracle roots, relative to the coefficient scale.
    pub res_tol: f64,
}

impl Tolerances {
    pub const fn new(int_tol: f64, tri_tol: f64, res_tol: f64) -> Self {
        Self {
            int_tol,
            tri_tol,
            res_tol,
        }
    }
}

impl Default for Tolerances {
    fn default() -> Self {
        Self::new(1e-9, 1e-9, 1e-8)
    }
}
