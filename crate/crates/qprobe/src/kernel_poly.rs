//! Exact arithmetic for the derivative polynomials of the inverse-distance
//! kernel.
//!
//! Repeated differentiation of `1/sqrt(s^2 + t^2)` in `s` produces
//!
//! ```text
//!   d^m/ds^m ( 1/sqrt(s^2+t^2) ) = P_m(s,t) / (s^2+t^2)^{(2m+1)/2}
//! ```
//!
//! where `P_m` is a bivariate polynomial of total degree `m` whose
//! coefficients have a closed combinatorial form. This module implements the
//! polynomials, their closed-form coefficients, the order-raising and
//! order-lowering recurrences, and the weighted coefficient-sum identities
//! that drive the singular-integral asymptotics in [`crate::model_integrals`].
//! All coefficient work is done in exact big-rational arithmetic; floating
//! point enters only in [`eval_derivative`].

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Parity of the derivative order housed by a [`SingularityPolynomial`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// Factorial as an exact big integer.
pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// Binomial coefficient with the extended convention: `binomial(n, 0) = 1`
/// and `binomial(n, k) = 0` for `k > n` or `k < 0`. Computed by the Pascal
/// recurrence in exact arithmetic.
pub fn binomial(n: usize, k: isize) -> BigInt {
    if k < 0 || k as usize > n {
        return BigInt::zero();
    }
    let k = k as usize;
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

fn rational(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

/// `1 / 2^k` as an exact rational.
fn inv_pow2(k: usize) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2u32).pow(k as u32))
}

/// Closed-form coefficient of the derivative polynomials.
///
/// For `parity == Even` returns the coefficient of `s^{2i} t^{2(m-i)}` in
/// `P_{2m}`; for `Odd` the coefficient of `s^{2i+1} t^{2(m-i)}` in
/// `P_{2m+1}`. Requires `0 <= i <= m`.
pub fn coeff_closed_form(parity: Parity, m: usize, i: usize) -> Result<BigRational> {
    if i > m {
        return Err(Error::domain(format!(
            "coefficient index i={i} out of range for m={m}"
        )));
    }
    let sign_exp = match parity {
        Parity::Even => m - i,
        Parity::Odd => m - i + 1,
    };
    let sign = if sign_exp % 2 == 0 {
        BigRational::one()
    } else {
        -BigRational::one()
    };
    // 2^{2i-2m} with 2m >= 2i, so this is 1/2^{2(m-i)}.
    let pow = inv_pow2(2 * (m - i));
    let value = match parity {
        Parity::Even => {
            sign * pow
                * rational(factorial(2 * m))
                * rational(binomial(2 * m, (m - i) as isize))
                * rational(binomial(m + i, (m - i) as isize))
        }
        Parity::Odd => {
            sign * pow
                * rational(factorial(2 * m + 1))
                * rational(binomial(2 * m + 1, (m - i) as isize))
                * rational(binomial(m + i + 1, (m - i) as isize))
        }
    };
    Ok(value)
}

/// Bivariate polynomial `P_m(s,t)` stored in its parity-compressed form.
///
/// `coeffs[i]` multiplies `s^{2i} t^{2(q-i)}` for even order and
/// `s^{2i+1} t^{2(q-i)}` for odd order, with `q = order / 2`. Length is
/// always `order/2 + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularityPolynomial {
    order: usize,
    coeffs: Vec<BigRational>,
}

impl SingularityPolynomial {
    /// Assemble `P_m` from the closed-form coefficients.
    pub fn from_closed_form(order: usize) -> Self {
        let q = order / 2;
        let parity = if order % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        };
        let coeffs = (0..=q)
            .map(|i| coeff_closed_form(parity, q, i).expect("index in range"))
            .collect();
        SingularityPolynomial { order, coeffs }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn parity(&self) -> Parity {
        if self.order % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Coefficient list in increasing powers of `s`.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `s^{s_pow} t^{order - s_pow}`, zero when the monomial
    /// is absent (wrong parity or out of range).
    pub fn coeff_s_power(&self, s_pow: usize) -> BigRational {
        if s_pow > self.order || s_pow % 2 != self.order % 2 {
            return BigRational::zero();
        }
        let p = self.order % 2;
        self.coeffs[(s_pow - p) / 2].clone()
    }

    /// Total degree (equals the order).
    pub fn degree(&self) -> usize {
        self.order
    }

    /// Exact evaluation of `P_m(s,t)` for rational arguments.
    pub fn eval_exact(&self, s: &BigRational, t: &BigRational) -> BigRational {
        let q = self.order / 2;
        let p = self.order % 2;
        let s2 = s * s;
        let t2 = t * t;
        let mut acc = BigRational::zero();
        for (i, a) in self.coeffs.iter().enumerate() {
            let mut term = a.clone();
            for _ in 0..i {
                term *= &s2;
            }
            if p == 1 {
                term *= s;
            }
            for _ in 0..(q - i) {
                term *= &t2;
            }
            acc += term;
        }
        acc
    }

    /// Evaluation with f64 coefficients, Horner-style in `s^2`.
    pub fn eval_f64(&self, s: f64, t: f64) -> f64 {
        let q = self.order / 2;
        let p = self.order % 2;
        let s2 = s * s;
        let t2 = t * t;
        // sum_i a_i s^{2i+p} t^{2(q-i)}; iterate i downward so Horner works in s^2/t^2.
        let mut acc = 0.0;
        for i in (0..=q).rev() {
            let a = self.coeffs[i].to_f64().expect("rational fits in f64");
            acc = acc * t2 + a * s2.powi(i as i32);
        }
        // The loop above accumulates sum_i a_i s^{2i} t^{2(q-i)} since each
        // of the (q-i) remaining iterations multiplies term i by t^2.
        if p == 1 {
            acc *= s;
        }
        acc
    }

    fn to_dense(&self) -> DensePoly {
        let mut by_s = vec![BigRational::zero(); self.order + 1];
        let p = self.order % 2;
        for (i, a) in self.coeffs.iter().enumerate() {
            by_s[2 * i + p] = a.clone();
        }
        DensePoly {
            degree: self.order,
            by_s,
        }
    }

    fn from_dense(dense: &DensePoly) -> Result<Self> {
        let order = dense.degree;
        let p = order % 2;
        let q = order / 2;
        let mut coeffs = vec![BigRational::zero(); q + 1];
        for (s_pow, c) in dense.by_s.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if s_pow % 2 != p {
                return Err(Error::domain(format!(
                    "parity violation: monomial s^{s_pow} in an order-{order} polynomial"
                )));
            }
            coeffs[(s_pow - p) / 2] = c.clone();
        }
        Ok(SingularityPolynomial { order, coeffs })
    }
}

/// Dense intermediate used for the recurrence algebra. Index = power of `s`;
/// the power of `t` is `degree - s_power` (homogeneous, `t`-power even).
#[derive(Debug, Clone)]
struct DensePoly {
    degree: usize,
    by_s: Vec<BigRational>,
}

impl DensePoly {
    fn zero(degree: usize) -> Self {
        DensePoly {
            degree,
            by_s: vec![BigRational::zero(); degree + 1],
        }
    }

    /// s-derivative: degree drops by one.
    fn d_ds(&self) -> DensePoly {
        assert!(self.degree >= 1);
        let mut out = DensePoly::zero(self.degree - 1);
        for a in 1..=self.degree {
            if !self.by_s[a].is_zero() {
                out.by_s[a - 1] = &self.by_s[a] * rational(a as i64);
            }
        }
        out
    }

    /// Multiply by `s`: degree rises by one, t-powers unchanged... every
    /// monomial s^a t^{d-a} becomes s^{a+1} t^{d-a} = s^{a+1} t^{(d+1)-(a+1)}.
    fn mul_s(&self) -> DensePoly {
        let mut out = DensePoly::zero(self.degree + 1);
        for a in 0..=self.degree {
            out.by_s[a + 1] = self.by_s[a].clone();
        }
        out
    }

    /// Multiply by `(s^2 + t^2)`: degree rises by two.
    fn mul_s2_plus_t2(&self) -> DensePoly {
        let mut out = DensePoly::zero(self.degree + 2);
        for a in 0..=self.degree {
            if self.by_s[a].is_zero() {
                continue;
            }
            // s^2 * s^a t^{d-a} -> s^{a+2} t^{(d+2)-(a+2)}
            out.by_s[a + 2] += &self.by_s[a];
            // t^2 * s^a t^{d-a} -> s^a t^{(d+2)-a}
            out.by_s[a] += &self.by_s[a];
        }
        out
    }

    fn scale(&self, factor: &BigRational) -> DensePoly {
        DensePoly {
            degree: self.degree,
            by_s: self.by_s.iter().map(|c| c * factor).collect(),
        }
    }

    fn add(&self, other: &DensePoly) -> DensePoly {
        assert_eq!(self.degree, other.degree, "degree mismatch in add");
        DensePoly {
            degree: self.degree,
            by_s: self
                .by_s
                .iter()
                .zip(&other.by_s)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    fn is_zero(&self) -> bool {
        self.by_s.iter().all(|c| c.is_zero())
    }
}

/// One step of the order-raising recurrence:
/// `P_{l+1} = (s^2+t^2) dP_l/ds - (2l+1) s P_l`.
pub fn raise_order(p: &SingularityPolynomial) -> SingularityPolynomial {
    let l = p.order;
    let dense = p.to_dense();
    let first = if l >= 1 {
        dense.d_ds().mul_s2_plus_t2()
    } else {
        DensePoly::zero(l + 1)
    };
    let second = dense
        .mul_s()
        .scale(&-rational(2 * l as i64 + 1));
    let next = first.add(&second);
    SingularityPolynomial::from_dense(&next).expect("recurrence preserves parity")
}

/// Residual of the three-term relation
/// `P_m + (2m-1) s P_{m-1} + (m-1)^2 (s^2+t^2) P_{m-2}`,
/// which vanishes identically for the true sequence. Returns the residual's
/// dense coefficients (in increasing `s` power) so callers can assert
/// exact vanishing; orders must be consecutive and `m >= 2`.
pub fn three_term_residual(
    p_m: &SingularityPolynomial,
    p_m1: &SingularityPolynomial,
    p_m2: &SingularityPolynomial,
) -> Result<Vec<BigRational>> {
    let m = p_m.order;
    if m < 2 {
        return Err(Error::domain("three-term relation needs order >= 2"));
    }
    if p_m1.order + 1 != m || p_m2.order + 2 != m {
        return Err(Error::domain(format!(
            "order mismatch: got {}, {}, {} (want m, m-1, m-2)",
            p_m.order, p_m1.order, p_m2.order
        )));
    }
    let term1 = p_m.to_dense();
    let term2 = p_m1.to_dense().mul_s().scale(&rational(2 * m as i64 - 1));
    let term3 = p_m2
        .to_dense()
        .mul_s2_plus_t2()
        .scale(&rational(((m - 1) * (m - 1)) as i64));
    Ok(term1.add(&term2).add(&term3).by_s)
}

/// One step of the order-lowering recurrence: `dP_m/ds = -m^2 P_{m-1}`,
/// returning `P_{m-1}`. Requires `m >= 1`.
pub fn lower_order(p: &SingularityPolynomial) -> Result<SingularityPolynomial> {
    let m = p.order;
    if m == 0 {
        return Err(Error::domain("cannot lower order below zero"));
    }
    let scaled = p
        .to_dense()
        .d_ds()
        .scale(&-BigRational::new(BigInt::one(), BigInt::from((m * m) as u64)));
    SingularityPolynomial::from_dense(&scaled)
}

/// Check the coefficient-level recurrences that tie consecutive coefficient
/// families together. Families relating `a_{2m,.}` to `a_{2m-1,.}` and
/// `a_{2m+1,.}` to `a_{2m,.}` by first-order scaling hold for `m >= 1`; the
/// two mixed three-term families additionally need `m >= 2`.
pub fn coefficient_recurrences_hold(m: usize) -> Result<bool> {
    if m == 0 {
        return Err(Error::domain("coefficient recurrences need m >= 1"));
    }
    let even = |mm: usize, i: isize| -> BigRational {
        if i < 0 || i as usize > mm {
            BigRational::zero()
        } else {
            coeff_closed_form(Parity::Even, mm, i as usize).expect("range checked")
        }
    };
    let odd = |mm: usize, i: isize| -> BigRational {
        if i < 0 || i as usize > mm {
            BigRational::zero()
        } else {
            coeff_closed_form(Parity::Odd, mm, i as usize).expect("range checked")
        }
    };

    let mut ok = true;

    if m >= 2 {
        // a_{2m,2i} from the odd family one order below.
        for i in 0..=m {
            let lhs = even(m, i as isize);
            // P_{2m-1} = P_{2(m-1)+1}: a_{2m-1,2i-1} is odd(m-1, i-1).
            let rhs = if i == 0 {
                odd(m - 1, 0)
            } else if i < m {
                (rational(2 * i as i64 - 4 * m as i64) * odd(m - 1, i as isize - 1))
                    + (rational(2 * i as i64 + 1) * odd(m - 1, i as isize))
            } else {
                -rational(2 * m as i64) * odd(m - 1, m as isize - 1)
            };
            ok &= lhs == rhs;
        }
        // a_{2m+1,2i+1} from the even family at the same order.
        for i in 0..=m {
            let lhs = odd(m, i as isize);
            let rhs = if i < m {
                (rational(2 * i as i64 - 4 * m as i64 - 1) * even(m, i as isize))
                    + (rational(2 * i as i64 + 2) * even(m, i as isize + 1))
            } else {
                -rational(2 * m as i64 + 1) * even(m, m as isize)
            };
            ok &= lhs == rhs;
        }
    }

    // First-order scalings between adjacent parities.
    for i in 1..=m {
        let lhs = even(m, i as isize);
        let rhs = -BigRational::new(
            BigInt::from((2 * m) * (2 * m)),
            BigInt::from(2 * i),
        ) * odd(m - 1, i as isize - 1);
        ok &= lhs == rhs;
    }
    for i in 0..=m {
        let lhs = odd(m, i as isize);
        let rhs = -BigRational::new(
            BigInt::from((2 * m + 1) * (2 * m + 1)),
            BigInt::from(2 * i + 1),
        ) * even(m, i as isize);
        ok &= lhs == rhs;
    }

    Ok(ok)
}

/// Exact two-sided report for the weighted coefficient-sum identities.
///
/// `holds` is `(first, second)` where each flag asserts that *both* routes
/// to the common right-hand side agree with it exactly.
#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub order: usize,
    pub lhs_first: BigRational,
    pub rhs_first: BigRational,
    pub lhs_second: BigRational,
    pub rhs_second: BigRational,
    pub holds: (bool, bool),
}

/// Evaluate both weighted coefficient-sum identities at order `m >= 1`:
///
/// ```text
///   sum_i a_{2m,2i} / C(2m-1, m-i)            = (2m)!   / 2^{2m-1}
///   -(2/(2m+1)) sum_i a_{2m+1,2i+1}/C(2m,m-i) = (2m)!   / 2^{2m-1}
///   (m+1) sum_i a_{2m,2i} / C(2m, m-i)        = (2m+2)! / 2^{2m+1}
///   -sum_i a_{2m+1,2i+1} / C(2m+1, m-i)       = (2m+2)! / 2^{2m+1}
/// ```
pub fn weighted_sum_identities(m: usize) -> Result<IdentityReport> {
    if m == 0 {
        return Err(Error::domain("identities need m >= 1"));
    }
    let mut even_over_c2m1 = BigRational::zero();
    let mut odd_over_c2m = BigRational::zero();
    let mut even_over_c2m = BigRational::zero();
    let mut odd_over_c2m1p = BigRational::zero();
    for i in 0..=m {
        let a_even = coeff_closed_form(Parity::Even, m, i)?;
        let a_odd = coeff_closed_form(Parity::Odd, m, i)?;
        let k = (m - i) as isize;
        even_over_c2m1 += &a_even / rational(binomial(2 * m - 1, k));
        odd_over_c2m += &a_odd / rational(binomial(2 * m, k));
        even_over_c2m += &a_even / rational(binomial(2 * m, k));
        odd_over_c2m1p += &a_odd / rational(binomial(2 * m + 1, k));
    }

    let rhs_first = rational(factorial(2 * m)) * inv_pow2(2 * m - 1);
    let lhs_first = even_over_c2m1;
    let first_alt = -rational(2) / rational(2 * m as i64 + 1) * odd_over_c2m;

    let rhs_second = rational(factorial(2 * m + 2)) * inv_pow2(2 * m + 1);
    let lhs_second = rational(m as i64 + 1) * even_over_c2m;
    let second_alt = -odd_over_c2m1p;

    let holds = (
        lhs_first == rhs_first && first_alt == rhs_first,
        lhs_second == rhs_second && second_alt == rhs_second,
    );
    Ok(IdentityReport {
        order: m,
        lhs_first,
        rhs_first,
        lhs_second,
        rhs_second,
        holds,
    })
}

/// Exact check of the alternating binomial sum
/// `sum_{l=0}^{m-i} (-1)^l C(m-i, l) / (m+i+l) = 1 / (2m C(2m-1, m-i))`
/// for `m >= 1`, `0 <= i <= m`.
pub fn alternating_sum_identity(m: usize, i: usize) -> Result<bool> {
    if m == 0 {
        return Err(Error::domain("alternating sum needs m >= 1"));
    }
    if i > m {
        return Err(Error::domain(format!("i={i} out of range for m={m}")));
    }
    let mut lhs = BigRational::zero();
    for l in 0..=(m - i) {
        let sign = if l % 2 == 0 {
            BigRational::one()
        } else {
            -BigRational::one()
        };
        lhs += sign * rational(binomial(m - i, l as isize))
            / rational((m + i + l) as i64);
    }
    let rhs = BigRational::new(
        BigInt::one(),
        BigInt::from(2 * m) * binomial(2 * m - 1, (m - i) as isize),
    );
    Ok(lhs == rhs)
}

/// Floating evaluation of `d^m/ds^m (1/sqrt(s^2+t^2))`.
pub fn eval_derivative(m: usize, s: f64, t: f64) -> Result<f64> {
    let r2 = s * s + t * t;
    if r2 == 0.0 {
        return Err(Error::domain("derivative kernel undefined at the origin"));
    }
    let p = SingularityPolynomial::from_closed_form(m);
    Ok(p.eval_f64(s, t) / r2.powf(m as f64 + 0.5))
}

/// As [`eval_derivative`] but reusing an assembled polynomial; used in the
/// quadrature hot loops.
pub fn eval_derivative_with(p: &SingularityPolynomial, s: f64, t: f64) -> f64 {
    let r2 = s * s + t * t;
    p.eval_f64(s, t) / r2.powf(p.order() as f64 + 0.5)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles;

    fn rat(n: i64) -> BigRational {
        rational(n)
    }

    #[test]
    fn closed_form_base_cases() {
        assert_eq!(coeff_closed_form(Parity::Even, 0, 0).unwrap(), rat(1));
        assert_eq!(coeff_closed_form(Parity::Odd, 0, 0).unwrap(), rat(-1));
        assert_eq!(coeff_closed_form(Parity::Even, 1, 0).unwrap(), rat(-1));
        assert_eq!(coeff_closed_form(Parity::Even, 1, 1).unwrap(), rat(2));
        assert!(coeff_closed_form(Parity::Even, 1, 2).is_err());
    }

    #[test]
    fn leading_coefficients_are_signed_factorials() {
        for m in 0..12 {
            assert_eq!(
                coeff_closed_form(Parity::Even, m, m).unwrap(),
                rational(factorial(2 * m))
            );
            assert_eq!(
                coeff_closed_form(Parity::Odd, m, m).unwrap(),
                -rational(factorial(2 * m + 1))
            );
        }
    }

    #[test]
    fn low_order_polynomials_explicit() {
        let p0 = SingularityPolynomial::from_closed_form(0);
        assert_eq!(p0.coeffs(), &[rat(1)]);

        let p1 = SingularityPolynomial::from_closed_form(1);
        assert_eq!(p1.coeffs(), &[rat(-1)]); // -s

        let p2 = SingularityPolynomial::from_closed_form(2);
        // 2 s^2 - t^2, stored as [a_{2,0}, a_{2,2}] = [-1, 2].
        assert_eq!(p2.coeffs(), &[rat(-1), rat(2)]);

        let p3 = SingularityPolynomial::from_closed_form(3);
        // -6 s^3 + 9 s t^2, stored as [9, -6].
        assert_eq!(p3.coeffs(), &[rat(9), rat(-6)]);
    }

    #[test]
    fn raising_matches_closed_form() {
        let mut p = SingularityPolynomial::from_closed_form(0);
        for m in 1..=25 {
            p = raise_order(&p);
            assert_eq!(p, SingularityPolynomial::from_closed_form(m), "order {m}");
        }
    }

    #[test]
    fn closed_form_matches_symbolic_differentiation() {
        // Independent oracle: generic term-by-term symbolic differentiation,
        // no use of the structured recurrences.
        for m in 0..=12 {
            let oracle = oracles::symbolic_kernel_numerator(m);
            let p = SingularityPolynomial::from_closed_form(m);
            for s_pow in 0..=m {
                assert_eq!(
                    p.coeff_s_power(s_pow),
                    oracle[s_pow],
                    "order {m}, s-power {s_pow}"
                );
            }
        }
    }

    #[test]
    fn three_term_residual_vanishes() {
        for m in 2..=20 {
            let res = three_term_residual(
                &SingularityPolynomial::from_closed_form(m),
                &SingularityPolynomial::from_closed_form(m - 1),
                &SingularityPolynomial::from_closed_form(m - 2),
            )
            .unwrap();
            assert!(res.iter().all(|c| c.is_zero()), "order {m}");
        }
    }

    #[test]
    fn three_term_needs_order_two() {
        let p1 = SingularityPolynomial::from_closed_form(1);
        let p0 = SingularityPolynomial::from_closed_form(0);
        assert!(three_term_residual(&p1, &p0, &p0).is_err());
    }

    #[test]
    fn lowering_matches_closed_form() {
        assert_eq!(
            lower_order(&SingularityPolynomial::from_closed_form(1)).unwrap(),
            SingularityPolynomial::from_closed_form(0)
        );
        assert_eq!(
            lower_order(&SingularityPolynomial::from_closed_form(2)).unwrap(),
            SingularityPolynomial::from_closed_form(1)
        );
        for m in 1..=20 {
            assert_eq!(
                lower_order(&SingularityPolynomial::from_closed_form(m)).unwrap(),
                SingularityPolynomial::from_closed_form(m - 1),
                "order {m}"
            );
        }
        assert!(lower_order(&SingularityPolynomial::from_closed_form(0)).is_err());
    }

    #[test]
    fn coefficient_recurrences_small_orders() {
        assert!(coefficient_recurrences_hold(0).is_err());
        for m in 1..=12 {
            assert!(coefficient_recurrences_hold(m).unwrap(), "m = {m}");
        }
    }

    #[test]
    fn weighted_sums_order_one() {
        let r = weighted_sum_identities(1).unwrap();
        // -1/1 + 2/1 = 1 = 2!/2
        assert_eq!(r.lhs_first, rat(1));
        assert_eq!(r.rhs_first, rat(1));
        // 2(-1/2 + 2) = 3 = 4!/8
        assert_eq!(r.lhs_second, rat(3));
        assert_eq!(r.rhs_second, rat(3));
        assert_eq!(r.holds, (true, true));
    }

    #[test]
    fn weighted_sums_sweep() {
        for m in 1..=16 {
            let r = weighted_sum_identities(m).unwrap();
            assert_eq!(r.holds, (true, true), "m = {m}");
        }
    }

    #[test]
    fn alternating_sum_small() {
        // m=1, i=1: single term 1/2; rhs 1/2.
        assert!(alternating_sum_identity(1, 1).unwrap());
        // m=1, i=0: 1 - 1/2 = 1/2.
        assert!(alternating_sum_identity(1, 0).unwrap());
        for m in 1..=10 {
            for i in 0..=m {
                assert!(alternating_sum_identity(m, i).unwrap(), "m={m} i={i}");
            }
        }
    }

    #[test]
    fn derivative_values() {
        assert!((eval_derivative(0, 3.0, 4.0).unwrap() - 0.2).abs() < 1e-15);
        assert!((eval_derivative(1, 3.0, 4.0).unwrap() - (-3.0 / 125.0)).abs() < 1e-15);
        assert!(eval_derivative(2, 0.0, 0.0).is_err());
    }

    #[test]
    fn derivative_matches_finite_differences() {
        // Fixed annulus points, 0.5 <= s^2+t^2 <= 4.
        let pts = [
            (0.7, 1.3),
            (-0.9, 0.8),
            (1.1, -0.4),
            (0.3, 0.9),
            (-1.2, -1.1),
            (1.7, 0.2),
            (0.5, -0.6),
            (-0.8, 1.5),
            (1.0, 1.0),
            (0.6, -1.8),
        ];
        for m in 0..=6 {
            for &(s, t) in &pts {
                let exact = eval_derivative(m, s, t).unwrap();
                let fd = oracles::finite_difference_kernel_derivative(m, s, t);
                let denom = exact.abs().max(1e-30);
                assert!(
                    ((exact - fd) / denom).abs() < 1e-6,
                    "m={m} s={s} t={t}: exact {exact:.12e} vs fd {fd:.12e}"
                );
            }
        }
    }

    #[test]
    fn derivative_parity_in_s() {
        let pts = [(0.9, 1.1), (1.3, -0.5), (0.8, 0.7)];
        for m in 0..=8 {
            let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
            for &(s, t) in &pts {
                let a = eval_derivative(m, s, t).unwrap();
                let b = eval_derivative(m, -s, t).unwrap();
                assert!((b - sign * a).abs() <= 1e-12 * a.abs().max(1.0));
            }
        }
    }
}
