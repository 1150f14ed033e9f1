//! Domain types for trinomials and their normal form.
//!
//! A [`Trinomial`] is `a·ζⁿ + b·ζᵐ + c` with arbitrary complex coefficients.
//! The counting and region machinery works on the [`NormalizedTrinomial`]
//! normal form `ζⁿ + b·ζᵐ + c` with `gcd(n, m) = 1`, obtained by
//! [`normalize`]: dividing through by `a` preserves the roots, and when
//! `gcd(n, m) = ℓ > 1` the substitution `ζ ↦ ζ^ℓ` maps the root moduli to
//! their `ℓ`-th powers, so Schur stability is preserved in both steps.

use crate::error::{Error, Result};
use crate::region::{Certificate, DegenerateCase, StabilityVerdict};
use crate::tolerance::Tolerances;

pub type Complex = num_complex::Complex<f64>;

/// Argument of a nonzero complex number in `(−π, π]`.
///
/// Zero is an error rather than a silent `0.0`: every caller feeds the result
/// into a pivot formula where a fabricated argument would corrupt the count.
pub fn argument(z: Complex) -> Result<f64> {
    if z.re == 0.0 && z.im == 0.0 {
        return Err(Error::UndefinedArgument);
    }
    Ok(arg_unchecked(z))
}

/// Argument in `(−π, π]` for values already known to be nonzero.
pub(crate) fn arg_unchecked(z: Complex) -> f64 {
    // Flush a negative-zero imaginary part so the branch cut lands on +π.
    let im = if z.im == 0.0 { 0.0 } else { z.im };
    im.atan2(z.re)
}

pub(crate) fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The trinomial `a·ζⁿ + b·ζᵐ + c` with `n > m ≥ 1`.
///
/// Coefficients may be any complex values, including zero; operations declare
/// their own nonzero preconditions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Trinomial {
    pub n: u32,
    pub m: u32,
    pub a: Complex,
    pub b: Complex,
    pub c: Complex,
}

impl Trinomial {
    pub fn new(n: u32, m: u32, a: Complex, b: Complex, c: Complex) -> Result<Self> {
        if m == 0 || n <= m || n > i32::MAX as u32 {
            return Err(Error::InvalidExponents { n, m });
        }
        Ok(Self { n, m, a, b, c })
    }

    /// `ζⁿ + b·ζᵐ + c`.
    pub fn monic(n: u32, m: u32, b: Complex, c: Complex) -> Result<Self> {
        Self::new(n, m, Complex::new(1.0, 0.0), b, c)
    }

    pub fn eval(&self, z: Complex) -> Complex {
        self.a * z.powu(self.n) + self.b * z.powu(self.m) + self.c
    }
}

/// The normal form `ζⁿ + b·ζᵐ + c` with `gcd(n, m) = 1` and nonzero `b`, `c`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalizedTrinomial {
    n: u32,
    m: u32,
    b: Complex,
    c: Complex,
    reduction: u32,
}

impl NormalizedTrinomial {
    /// Builds the normal form directly; `reduction` is recorded as 1.
    pub fn new(n: u32, m: u32, b: Complex, c: Complex) -> Result<Self> {
        if m == 0 || n <= m || n > i32::MAX as u32 {
            return Err(Error::InvalidExponents { n, m });
        }
        if gcd(n, m) != 1 {
            return Err(Error::PreconditionViolated(format!(
                "exponents must be coprime, got n={n}, m={m}"
            )));
        }
        if b.norm() == 0.0 {
            return Err(Error::DegenerateCoefficient("b"));
        }
        if c.norm() == 0.0 {
            return Err(Error::DegenerateCoefficient("c"));
        }
        Ok(Self {
            n,
            m,
            b,
            c,
            reduction: 1,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn b(&self) -> Complex {
        self.b
    }

    pub fn c(&self) -> Complex {
        self.c
    }

    /// The factor `ℓ = gcd(n, m)` divided out of the original exponents.
    pub fn reduction(&self) -> u32 {
        self.reduction
    }

    pub fn eval(&self, z: Complex) -> Complex {
        z.powu(self.n) + self.b * z.powu(self.m) + self.c
    }

    pub fn to_trinomial(&self) -> Trinomial {
        Trinomial {
            n: self.n,
            m: self.m,
            a: Complex::new(1.0, 0.0),
            b: self.b,
            c: self.c,
        }
    }
}

/// Monic scaling plus exponent reduction.
///
/// Returns `(n/ℓ, m/ℓ, b/a, c/a)` with `ℓ = gcd(n, m)`; the input is Schur
/// stable iff the output is. Division by `a` is one complex division with a
/// single rounding step; downstream comparisons all carry explicit
/// tolerances.
pub fn normalize(t: &Trinomial) -> Result<NormalizedTrinomial> {
    if t.a.norm() == 0.0 {
        return Err(Error::DegenerateCoefficient("a"));
    }
    if t.b.norm() == 0.0 {
        return Err(Error::DegenerateCoefficient("b"));
    }
    if t.c.norm() == 0.0 {
        return Err(Error::DegenerateCoefficient("c"));
    }
    let ell = gcd(t.n, t.m);
    Ok(NormalizedTrinomial {
        n: t.n / ell,
        m: t.m / ell,
        b: t.b / t.a,
        c: t.c / t.a,
        reduction: ell,
    })
}

/// Resolves trinomials with a zero coefficient from the closed-form table.
///
/// Returns `Ok(None)` when all three coefficients are nonzero so the main
/// pipeline proceeds. The all-zero trinomial is an error: it is the zero
/// function, not a polynomial with a stability verdict.
///
/// The four branches (with `ρ` the deciding ratio, stable iff `ρ < 1`):
/// - `a = 0, b ≠ 0`: `b·ζᵐ + c`, all root moduli `(|c|/|b|)^{1/m}`, `ρ = |c|/|b|`;
/// - `a = 0, b = 0`: constant `c`, `ρ = |c|`;
/// - `a ≠ 0, b = 0`: `a·ζⁿ + c`, all root moduli `(|c|/|a|)^{1/n}`, `ρ = |c|/|a|`;
/// - `c = 0`: `ζᵐ·(a·ζ^{n−m} + b)`, nonzero root moduli `(|b|/|a|)^{1/(n−m)}`,
///   `ρ = |b|/|a|`.
pub fn classify_degenerate(t: &Trinomial, tol: Tolerances) -> Result<Option<StabilityVerdict>> {
    let (na, nb, nc) = (t.a.norm(), t.b.norm(), t.c.norm());
    let (case, ratio) = if na == 0.0 && nb == 0.0 && nc == 0.0 {
        return Err(Error::AllCoefficientsZero);
    } else if na == 0.0 && nb != 0.0 {
        (DegenerateCase::MissingLeading, nc / nb)
    } else if na == 0.0 {
        (DegenerateCase::ConstantOnly, nc)
    } else if nb == 0.0 {
        (DegenerateCase::MissingMiddle, nc / na)
    } else if nc == 0.0 {
        (DegenerateCase::MissingConstant, nb / na)
    } else {
        return Ok(None);
    };
    Ok(Some(StabilityVerdict {
        stable: ratio < 1.0,
        certificate: Certificate::DegenerateTable { case, ratio },
        marginal: (ratio - 1.0).abs() <= tol.int_tol,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    #[test]
    fn argument_range_and_zero() {
        assert_eq!(argument(c(1.0, 0.0)).unwrap(), 0.0);
        assert_eq!(argument(c(-1.0, 0.0)).unwrap(), std::f64::consts::PI);
        // Negative-zero imaginary part must not flip onto the −π branch.
        assert_eq!(argument(c(-1.0, -0.0)).unwrap(), std::f64::consts::PI);
        assert!(argument(c(0.0, -2.0)).unwrap() < 0.0);
        assert_eq!(argument(c(0.0, 0.0)), Err(Error::UndefinedArgument));
    }

    #[test]
    fn exponent_validation() {
        assert!(Trinomial::monic(3, 1, c(1.0, 0.0), c(1.0, 0.0)).is_ok());
        assert!(Trinomial::monic(3, 3, c(1.0, 0.0), c(1.0, 0.0)).is_err());
        assert!(Trinomial::monic(3, 0, c(1.0, 0.0), c(1.0, 0.0)).is_err());
        assert!(NormalizedTrinomial::new(6, 4, c(1.0, 0.0), c(1.0, 0.0)).is_err());
    }

    #[test]
    fn normalize_reduces_exponents() {
        let t = Trinomial::monic(6, 4, c(0.3, 0.1), c(0.2, -0.4)).unwrap();
        let nt = normalize(&t).unwrap();
        assert_eq!((nt.n(), nt.m(), nt.reduction()), (3, 2, 2));
        assert_eq!(nt.b(), c(0.3, 0.1));
        assert_eq!(nt.c(), c(0.2, -0.4));

        let t = Trinomial::monic(12, 9, c(1.0, 0.0), c(0.5, 0.0)).unwrap();
        let nt = normalize(&t).unwrap();
        assert_eq!((nt.n(), nt.m(), nt.reduction()), (4, 3, 3));
    }

    #[test]
    fn normalize_scales_to_monic() {
        let t = Trinomial::new(3, 1, c(2.0, 0.0), c(0.0, 2.0), c(-1.0, 0.0)).unwrap();
        let nt = normalize(&t).unwrap();
        assert_eq!((nt.n(), nt.m(), nt.reduction()), (3, 1, 1));
        assert_eq!(nt.b(), c(0.0, 1.0));
        assert_eq!(nt.c(), c(-0.5, 0.0));
    }

    #[test]
    fn normalize_is_idempotent() {
        let t = Trinomial::monic(10, 4, c(0.3, 0.7), c(-0.2, 0.1)).unwrap();
        let once = normalize(&t).unwrap();
        let again = normalize(&once.to_trinomial()).unwrap();
        assert_eq!(again.reduction(), 1);
        assert_eq!((once.n(), once.m()), (again.n(), again.m()));
        assert_eq!(once.b(), again.b());
        assert_eq!(once.c(), again.c());
    }

    #[test]
    fn normalize_rejects_zero_coefficients() {
        let t = Trinomial::monic(3, 1, c(0.0, 0.0), c(1.0, 0.0)).unwrap();
        assert_eq!(normalize(&t), Err(Error::DegenerateCoefficient("b")));
        let t = Trinomial::new(3, 1, c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0)).unwrap();
        assert_eq!(normalize(&t), Err(Error::DegenerateCoefficient("a")));
    }

    #[test]
    fn degenerate_table() {
        let tol = Tolerances::default();
        // a = 0: b·ζᵐ + c with |c|/|b| = 0.5.
        let t = Trinomial::new(3, 1, c(0.0, 0.0), c(2.0, 0.0), c(1.0, 0.0)).unwrap();
        let v = classify_degenerate(&t, tol).unwrap().unwrap();
        assert!(v.stable && !v.marginal);

        // ζⁿ alone: the only root is 0 with multiplicity n.
        let t = Trinomial::monic(4, 2, c(0.0, 0.0), c(0.0, 0.0)).unwrap();
        let v = classify_degenerate(&t, tol).unwrap().unwrap();
        assert!(v.stable);

        // ζⁿ + ζᵐ: |b|/|a| = 1 is not strictly inside the disc.
        let t = Trinomial::monic(4, 2, c(1.0, 0.0), c(0.0, 0.0)).unwrap();
        let v = classify_degenerate(&t, tol).unwrap().unwrap();
        assert!(!v.stable && v.marginal);

        // Constant c only.
        let t = Trinomial::new(2, 1, c(0.0, 0.0), c(0.0, 0.0), c(0.5, 0.0)).unwrap();
        let v = classify_degenerate(&t, tol).unwrap().unwrap();
        assert!(v.stable);

        let t = Trinomial::new(2, 1, c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)).unwrap();
        assert_eq!(classify_degenerate(&t, tol), Err(Error::AllCoefficientsZero));

        // All coefficients nonzero: not degenerate.
        let t = Trinomial::monic(2, 1, c(1.0, 0.0), c(0.5, 0.0)).unwrap();
        assert!(classify_degenerate(&t, tol).unwrap().is_none());
    }
}
