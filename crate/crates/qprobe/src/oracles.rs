//! Independent reference computations used by the test suites.
//!
//! Everything here deliberately avoids the production code paths it is used
//! to check: the symbolic differentiation below knows nothing about the
//! structured recurrences in [`crate::kernel_poly`], the quadrature oracles
//! use plain adaptive Simpson instead of the production panel rules, and the
//! finite-difference oracle touches only the kernel definition itself.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Numerator coefficients of `d^m/ds^m (1/sqrt(s^2+t^2))` over the common
/// denominator `(s^2+t^2)^{(2m+1)/2}`, computed by generic term-by-term
/// symbolic differentiation. Entry `a` of the result multiplies
/// `s^a t^{m-a}`.
pub fn symbolic_kernel_numerator(m: usize) -> Vec<BigRational> {
    // Terms are (coeff, s_power, e) representing coeff * s^a * (s^2+t^2)^{-e/2}.
    // d/ds maps it to  a*coeff s^{a-1} u^{-e/2}  -  e*coeff s^{a+1} u^{-(e+2)/2}.
    let mut terms: Vec<(BigRational, usize, usize)> =
        vec![(BigRational::one(), 0, 1)];
    for _ in 0..m {
        let mut next: Vec<(BigRational, usize, usize)> = Vec::new();
        for (c, a, e) in &terms {
            if *a > 0 {
                next.push((c * BigRational::from_integer(BigInt::from(*a)), a - 1, *e));
            }
            next.push((
                -(c * BigRational::from_integer(BigInt::from(*e))),
                a + 1,
                e + 2,
            ));
        }
        terms = next;
    }
    // Bring every term to the common denominator exponent 2m+1 by expanding
    // the numerator factor (s^2+t^2)^k, then collect by s-power.
    let target_e = 2 * m + 1;
    let mut by_s_power = vec![BigRational::zero(); m + 1];
    for (c, a, e) in terms {
        debug_assert!(e <= target_e && (target_e - e) % 2 == 0);
        let k = (target_e - e) / 2;
        for j in 0..=k {
            // C(k, j) s^{2j} t^{2(k-j)}
            let binom = crate::kernel_poly::binomial(k, j as isize);
            let s_pow = a + 2 * j;
            if s_pow <= m {
                by_s_power[s_pow] += &c * BigRational::from_integer(binom);
            } else {
                unreachable!("degree overflow in symbolic expansion");
            }
        }
    }
    by_s_power
}

/// `m`-th order central finite difference of `f` at `x` with spacing `h`.
fn central_difference(f: impl Fn(f64) -> f64, m: usize, x: f64, h: f64) -> f64 {
    if m == 0 {
        return f(x);
    }
    let mut acc = 0.0;
    let mut binom = 1.0f64;
    for k in 0..=m {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let offset = (m as f64) / 2.0 - k as f64;
        acc += sign * binom * f(x + offset * h);
        binom = binom * (m - k) as f64 / (k + 1) as f64;
    }
    acc / h.powi(m as i32)
}

/// Finite-difference value of `d^m/ds^m (1/sqrt(s^2+t^2))` with two levels
/// of Richardson extrapolation. Step sizes grow with the order: high-order
/// central differences in f64 need coarse steps to stay clear of roundoff.
pub fn finite_difference_kernel_derivative(m: usize, s: f64, t: f64) -> f64 {
    let f = |x: f64| 1.0 / (x * x + t * t).sqrt();
    let scale = (s * s + t * t).sqrt().max(1.0);
    // Tuned per order; the central difference is O(h^2), so two Richardson
    // levels give O(h^6) and leave roundoff ~ eps/h^m as the binding error.
    let base = match m {
        0 | 1 => 0.01,
        2 => 0.02,
        3 => 0.04,
        4 => 0.07,
        5 => 0.10,
        _ => 0.13,
    };
    let h = base * scale;
    let d1 = central_difference(f, m, s, h);
    let d2 = central_difference(f, m, s, 2.0 * h);
    let d4 = central_difference(f, m, s, 4.0 * h);
    // First level removes the h^2 term, second the h^4 term.
    let r1 = (4.0 * d1 - d2) / 3.0;
    let r2 = (4.0 * d2 - d4) / 3.0;
    (16.0 * r1 - r2) / 15.0
}

/// Adaptive Simpson quadrature on `[a, b]`; plain recursive bisection with
/// an absolute tolerance. Slow but dependable, for oracle use only.
pub fn adaptive_simpson(f: &impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    fn simpson(fa: f64, fm: f64, fb: f64, a: f64, b: f64) -> f64 {
        (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    }
    #[allow(clippy::too_many_arguments)]
    fn recurse(
        f: &impl Fn(f64) -> f64,
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        tol: f64,
        depth: usize,
    ) -> f64 {
        let m = 0.5 * (a + b);
        let lm = 0.5 * (a + m);
        let rm = 0.5 * (m + b);
        let flm = f(lm);
        let frm = f(rm);
        let left = simpson(fa, flm, fm, a, m);
        let right = simpson(fm, frm, fb, m, b);
        let err = left + right - whole;
        if depth == 0 || err.abs() <= 15.0 * tol {
            return left + right + err / 15.0;
        }
        recurse(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1)
            + recurse(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1)
    }
    let fa = f(a);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let fb = f(b);
    let whole = simpson(fa, fm, fb, a, b);
    recurse(f, a, b, fa, fm, fb, whole, tol, 48)
}

/// Surface-quadrature value of the single-layer multiplier at degree `n` on
/// the unit sphere. Rotates the evaluation point to the north pole, where
/// the kernel depends only on colatitude; the substitution `u = 1 - 2v^2`
/// removes the endpoint singularity exactly.
pub fn single_layer_multiplier_quadrature(n: usize) -> f64 {
    // (S Y_n)(north pole) = sigma_S(n) * Y_n(north pole) for the zonal mode,
    // and the integral reduces to  1/2 * int_{-1}^{1} P_n(u) / sqrt(2-2u) du
    // with P_n the Legendre polynomial; after u = 1-2v^2 the integrand is the
    // polynomial P_n(1-2v^2).
    let f = |v: f64| legendre_p(n, 1.0 - 2.0 * v * v);
    adaptive_simpson(&f, 0.0, 1.0, 1e-13)
}

/// Surface-quadrature value of the adjoint-double-layer multiplier at
/// degree `n` on the unit sphere, by the same polar reduction. The kernel
/// `dPhi/dnu(x)` on the sphere equals `-1/(4pi) * 1/(2 sqrt(2) sqrt(1-u))`,
/// so after `u = 1 - 2v^2` the integrand is again polynomial.
pub fn adjoint_double_layer_multiplier_quadrature(n: usize) -> f64 {
    let f = |v: f64| -0.5 * legendre_p(n, 1.0 - 2.0 * v * v);
    adaptive_simpson(&f, 0.0, 1.0, 1e-13)
}

/// Plain (unnormalized) Legendre polynomial by the three-term recurrence.
pub fn legendre_p(n: usize, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut pm1 = 1.0;
    let mut p = x;
    for k in 1..n {
        let next = ((2 * k + 1) as f64 * x * p - k as f64 * pm1) / (k + 1) as f64;
        pm1 = p;
        p = next;
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simpson_integrates_polynomials() {
        let v = adaptive_simpson(&|x: f64| x * x * x - 2.0 * x + 1.0, 0.0, 2.0, 1e-12);
        assert!((v - (4.0 - 4.0 + 2.0)).abs() < 1e-10);
    }

    #[test]
    fn legendre_recurrence_values() {
        assert!((legendre_p(2, 0.5) - (3.0 * 0.25 - 1.0) / 2.0).abs() < 1e-14);
        assert!((legendre_p(5, 1.0) - 1.0).abs() < 1e-14);
    }

    #[test]
    fn layer_multiplier_oracles_match_known_values() {
        // sigma_S(n) = 1/(2n+1), sigma_K'(n) = -1/(2(2n+1)).
        for n in [0usize, 1, 2, 5, 11] {
            let s = single_layer_multiplier_quadrature(n);
            assert!((s - 1.0 / (2.0 * n as f64 + 1.0)).abs() < 1e-10, "S at {n}");
            let kp = adjoint_double_layer_multiplier_quadrature(n);
            assert!(
                (kp + 0.5 / (2.0 * n as f64 + 1.0)).abs() < 1e-10,
                "K' at {n}"
            );
        }
    }
}
