//! Independent ground truth: compute all roots of a trinomial and measure
//! them directly.
//!
//! Roots come from Ehrlich–Aberth simultaneous iteration; the polynomial is
//! sparse, so evaluation is three powers regardless of degree and no dense
//! linear algebra is involved. Trinomials with a zero middle or constant
//! coefficient factor into pure power equations and are solved in closed
//! form. Initial guesses are deterministic, so the oracle is reproducible.

use crate::error::{Error, Result};
use crate::trinomial::{Complex, Trinomial};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Roots within this absolute distance of the measuring circle make a sample
/// numerically ambiguous; equivalence suites exclude such draws.
pub const UNIT_CIRCLE_MARGIN: f64 = 1e-6;

/// Degree cap honored by the randomized oracle suites. Root finding itself
/// accepts larger degrees; the Bohl counting path has no cap at all.
pub const SUITE_DEGREE_CAP: u32 = 64;

const MAX_SWEEPS: usize = 500;
const UPDATE_TOL: f64 = 1e-13;

/// All `n` roots of a trinomial, with multiplicity.
#[derive(Debug, Clone, PartialEq)]
pub struct RootSet {
    pub roots: Vec<Complex>,
    /// `|f(root)|` per root.
    pub residuals: Vec<f64>,
    pub converged: bool,
}

impl RootSet {
    pub fn max_modulus(&self) -> f64 {
        self.roots.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

/// Tally of roots against the circle `|ζ| = r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiscTally {
    /// Roots with modulus strictly below `r`.
    pub inside: u64,
    /// Roots within [`UNIT_CIRCLE_MARGIN`] of the circle itself.
    pub margin: u64,
}

/// Stability verdict read directly off the root moduli.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralVerdict {
    pub stable: bool,
    /// Largest root modulus within [`UNIT_CIRCLE_MARGIN`] of one.
    pub marginal: bool,
    pub max_modulus: f64,
}

/// The `k`-th roots of `w`.
fn roots_of(w: Complex, k: u32) -> Vec<Complex> {
    let modulus = w.norm().powf(1.0 / k as f64);
    let base = w.arg();
    (0..k)
        .map(|j| {
            Complex::from_polar(
                modulus,
                (base + 2.0 * std::f64::consts::PI * j as f64) / k as f64,
            )
        })
        .collect()
}

fn derivative_at(t: &Trinomial, z: Complex) -> Complex {
    t.a * t.n as f64 * z.powu(t.n - 1) + t.b * t.m as f64 * z.powu(t.m - 1)
}

fn finish(t: &Trinomial, roots: Vec<Complex>, converged: bool) -> RootSet {
    let residuals = roots.iter().map(|&z| t.eval(z).norm()).collect();
    RootSet {
        roots,
        residuals,
        converged,
    }
}

/// Finds the `n` roots of `a·ζⁿ + b·ζᵐ + c` (with multiplicity).
///
/// Simultaneous iteration from guesses on the circle of radius
/// `|c/a|^{1/n}`, converged when the largest update falls below `1e−13`
/// relative to the root scale or after 500 sweeps; the best iterate is
/// returned either way, with `converged` recording which.
pub fn find_roots(t: &Trinomial) -> Result<RootSet> {
    if t.a.norm() == 0.0 {
        return Err(Error::ZeroCoefficient("a"));
    }
    if t.b.norm() == 0.0 && t.c.norm() == 0.0 {
        return Ok(finish(t, vec![Complex::new(0.0, 0.0); t.n as usize], true));
    }
    if t.b.norm() == 0.0 {
        // a·ζⁿ + c = 0.
        return Ok(finish(t, roots_of(-t.c / t.a, t.n), true));
    }
    if t.c.norm() == 0.0 {
        // ζᵐ · (a·ζ^{n−m} + b) = 0.
        let mut roots = vec![Complex::new(0.0, 0.0); t.m as usize];
        roots.extend(roots_of(-t.b / t.a, t.n - t.m));
        return Ok(finish(t, roots, true));
    }

    let n = t.n as usize;
    let radius = (t.c / t.a).norm().powf(1.0 / t.n as f64);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_b071);
    let mut roots: Vec<Complex> = (0..n)
        .map(|k| {
            // Fixed offset keeps the guesses away from the roots-of-unity
            // symmetry axes; the jitter breaks remaining degeneracies.
            let angle = 2.0 * std::f64::consts::PI * k as f64 / n as f64
                + 0.31
                + rng.random_range(0.0..0.01);
            Complex::from_polar(radius, angle)
        })
        .collect();

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        let mut max_update = 0.0f64;
        for i in 0..n {
            let z = roots[i];
            let value = t.eval(z);
            if value.norm() == 0.0 {
                continue;
            }
            let newton = value / derivative_at(t, z);
            let mut repulsion = Complex::new(0.0, 0.0);
            for (j, &other) in roots.iter().enumerate() {
                if j != i && (z - other).norm_sqr() > 0.0 {
                    repulsion += (z - other).inv();
                }
            }
            let denom = Complex::new(1.0, 0.0) - newton * repulsion;
            let step = if denom.norm() > 1e-300 {
                newton / denom
            } else {
                newton
            };
            roots[i] = z - step;
            max_update = max_update.max(step.norm() / (1.0 + roots[i].norm()));
        }
        if max_update < UPDATE_TOL {
            converged = true;
            break;
        }
    }
    Ok(finish(t, roots, converged))
}

/// Counts roots with modulus strictly below `r`, plus the number sitting
/// within [`UNIT_CIRCLE_MARGIN`] of the circle.
pub fn count_in_disc(rs: &RootSet, r: f64) -> Result<DiscTally> {
    if !rs.converged {
        return Err(Error::NotConverged);
    }
    let mut inside = 0;
    let mut margin = 0;
    for z in &rs.roots {
        let modulus = z.norm();
        if modulus < r {
            inside += 1;
        }
        if (modulus - r).abs() < UNIT_CIRCLE_MARGIN {
            margin += 1;
        }
    }
    Ok(DiscTally { inside, margin })
}

/// Whether every root modulus is strictly below one.
pub fn spectral_stable(t: &Trinomial) -> Result<SpectralVerdict> {
    let rs = find_roots(t)?;
    if !rs.converged {
        return Err(Error::NotConverged);
    }
    let max_modulus = rs.max_modulus();
    Ok(SpectralVerdict {
        stable: max_modulus < 1.0,
        marginal: (max_modulus - 1.0).abs() < UNIT_CIRCLE_MARGIN,
        max_modulus,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    fn sorted_moduli(rs: &RootSet) -> Vec<f64> {
        let mut v: Vec<f64> = rs.roots.iter().map(|z| z.norm()).collect();
        v.sort_by(f64::total_cmp);
        v
    }

    #[test]
    fn roots_of_unity_with_tiny_middle_term() {
        // ζ⁵ − 1 with b pushed to zero and to 1e−12: both give the fifth
        // roots of unity to high accuracy.
        for b in [0.0, 1e-12] {
            let t = Trinomial::monic(5, 2, c(b, 0.0), c(-1.0, 0.0)).unwrap();
            let rs = find_roots(&t).unwrap();
            assert!(rs.converged);
            assert_eq!(rs.roots.len(), 5);
            for z in &rs.roots {
                assert!((z.norm() - 1.0).abs() < 1e-9);
                assert!((z.powu(5) - c(1.0, 0.0)).norm() < 1e-9);
            }
        }
    }

    #[test]
    fn perfect_square_double_root() {
        let t = Trinomial::monic(2, 1, c(1.0, 0.0), c(0.25, 0.0)).unwrap();
        let rs = find_roots(&t).unwrap();
        for z in &rs.roots {
            assert!((z - c(-0.5, 0.0)).norm() < 1e-5);
        }
    }

    #[test]
    fn zero_constant_factors_out() {
        let t = Trinomial::monic(5, 2, c(0.7, 0.2), c(0.0, 0.0)).unwrap();
        let rs = find_roots(&t).unwrap();
        let moduli = sorted_moduli(&rs);
        assert_eq!(moduli[0], 0.0);
        assert_eq!(moduli[1], 0.0);
        let expected = c(0.7, 0.2).norm().powf(1.0 / 3.0);
        for m in &moduli[2..] {
            assert!((m - expected).abs() < 1e-12);
        }
    }

    #[test]
    fn disc_tally_bounds() {
        let t = Trinomial::monic(7, 3, c(0.4, -0.1), c(0.3, 0.2)).unwrap();
        let rs = find_roots(&t).unwrap();
        let big = 1.0 + c(0.4, -0.1).norm() + c(0.3, 0.2).norm();
        assert_eq!(count_in_disc(&rs, big).unwrap().inside, 7);
        assert_eq!(count_in_disc(&rs, 1e-9).unwrap().inside, 0);
    }

    #[test]
    fn spectral_examples() {
        let t = Trinomial::monic(11, 10, c(1.0, 0.0), c(-0.05, 0.0)).unwrap();
        assert!(spectral_stable(&t).unwrap().stable);

        let t = Trinomial::monic(2, 1, c(1.0, 0.0), c(-0.5, 0.0)).unwrap();
        assert!(!spectral_stable(&t).unwrap().stable);

        // Inside the Cohn domain |b| + |c| < 1.
        let t = Trinomial::monic(9, 4, c(0.1, 0.0), c(0.1, 0.0)).unwrap();
        assert!(spectral_stable(&t).unwrap().stable);
    }

    #[test]
    fn not_converged_is_reported() {
        let rs = RootSet {
            roots: vec![c(0.0, 0.0)],
            residuals: vec![0.0],
            converged: false,
        };
        assert_eq!(count_in_disc(&rs, 1.0), Err(Error::NotConverged));
    }

    proptest! {
        /// Residuals and the Viète sum/product identities hold on converged
        /// random trinomials.
        #[test]
        fn viete_identities(
            n in 2u32..13,
            bm in 0.05f64..3.0, ba in 0.0f64..std::f64::consts::TAU,
            cm in 0.05f64..3.0, ca in 0.0f64..std::f64::consts::TAU,
            mseed in 0u32..12,
        ) {
            let m = 1 + mseed % (n - 1);
            let t = Trinomial::monic(n, m, Complex::from_polar(bm, ba), Complex::from_polar(cm, ca)).unwrap();
            let rs = find_roots(&t).unwrap();
            prop_assume!(rs.converged);
            let scale = 1.0f64.max(bm).max(cm);
            for r in &rs.residuals {
                prop_assert!(*r < 1e-8 * scale, "residual {r}");
            }
            let product: Complex = rs.roots.iter().product();
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            prop_assert!((product * sign - t.c).norm() < 1e-8 * scale.powi(2));
            let sum: Complex = rs.roots.iter().sum();
            let expected_sum = if m == n - 1 { -t.b } else { Complex::new(0.0, 0.0) };
            prop_assert!((sum - expected_sum).norm() < 1e-7 * scale);
        }

        /// The angular flow rotates the root set rigidly: roots of
        /// (b·e^{−i(n−m)s}, c·e^{−ins}) are e^{−is} times the roots of (b, c).
        #[test]
        fn angular_flow_rotates_roots(s in 0.0f64..std::f64::consts::TAU) {
            let b = c(0.6, 0.3);
            let cc = c(-0.2, 0.4);
            let t = Trinomial::monic(5, 3, b, cc).unwrap();
            let flow = Trinomial::monic(
                5,
                3,
                b * Complex::from_polar(1.0, -2.0 * s),
                cc * Complex::from_polar(1.0, -5.0 * s),
            )
            .unwrap();
            let base = find_roots(&t).unwrap();
            let rotated = find_roots(&flow).unwrap();
            prop_assume!(base.converged && rotated.converged);
            let phase = Complex::from_polar(1.0, -s);
            let mut expected: Vec<Complex> = base.roots.iter().map(|z| z * phase).collect();
            for z in &rotated.roots {
                let (idx, dist) = expected
                    .iter()
                    .enumerate()
                    .map(|(i, w)| (i, (z - w).norm()))
                    .min_by(|a, b| a.1.total_cmp(&b.1))
                    .unwrap();
                prop_assert!(dist < 1e-8, "unmatched root {z}");
                expected.swap_remove(idx);
            }
        }
    }
}
