//! Airy function `Ai` and its derivative on the real line.
//!
//! Three regimes:
//!
//! * `-SERIES_NEG <= x <= SERIES_POS`: the Maclaurin expansion
//!   `Ai = c1 f(x) - c2 g(x)` with the two entire series `f`, `g`;
//! * `x > SERIES_POS`: the asymptotic expansion with prefactor `e^{-zeta}`,
//!   `zeta = (2/3) x^{3/2}`;
//! * `x < -SERIES_NEG`: the oscillatory asymptotic expansion.
//!
//! Within `BLEND_WIDTH` past each switch point the two neighbouring methods,
//! both accurate there, are mixed with a smooth weight.
//!
//! With `f64` the absolute error is below `1e-10` on `[-30, 30]`, the range
//! accepted by [`ai`], [`ai_prime`] and [`airy`]. Kernels that need `Ai` far
//! out on the decaying side use [`airy_scaled`], which returns
//! `Ai(x) e^{zeta}` for any `x >= 0` and never underflows.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// `Ai(0) = 3^{-2/3} / Gamma(2/3)`.
pub const AI_ZERO: f64 = 0.355_028_053_887_817_2;
/// `-Ai'(0) = 3^{-1/3} / Gamma(1/3)`.
pub const NEG_AI_PRIME_ZERO: f64 = 0.258_819_403_792_806_8;

/// Lower end of the range accepted by the checked entry points.
pub const SUPPORTED_MIN: f64 = -30.0;
/// Upper end of the range accepted by the checked entry points.
pub const SUPPORTED_MAX: f64 = 30.0;

/// Above this the decaying asymptotic expansion takes over.
pub const SERIES_POS: f64 = 5.0;
/// Below `-SERIES_NEG` the oscillatory expansion takes over.
pub const SERIES_NEG: f64 = 7.0;
/// Width of the bands past each switch point where both are mixed.
pub const BLEND_WIDTH: f64 = 1.0;

const MAX_SERIES_TERMS: usize = 200;

const MAX_ASYMPTOTIC_TERMS: usize = 48;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AiryValue<T> {
    pub x: T,
    pub ai: T,
    pub ai_prime: T,
}

fn check_range<T: Real>(x: T) -> Result<()> {
    let xf = x.to_f64_lossy();
    if !xf.is_finite() {
        return Err(Error::NonFinite(format!("Airy argument {xf}")));
    }
    if !(SUPPORTED_MIN..=SUPPORTED_MAX).contains(&xf) {
        return Err(Error::OutOfRange {
            what: "Airy argument",
            value: xf,
            lo: SUPPORTED_MIN,
            hi: SUPPORTED_MAX,
        });
    }
    Ok(())
}

/// `Ai(x)` for `x` in `[-30, 30]`.
pub fn ai<T: Real>(x: T) -> Result<T> {
    airy(x).map(|v| v.ai)
}

/// `Ai'(x)` for `x` in `[-30, 30]`.
pub fn ai_prime<T: Real>(x: T) -> Result<T> {
    airy(x).map(|v| v.ai_prime)
}

/// `Ai(x)` and `Ai'(x)` together for `x` in `[-30, 30]`.
pub fn airy<T: Real>(x: T) -> Result<AiryValue<T>> {
    check_range(x)?;
    let (ai, ai_prime) = airy_unchecked(x);
    Ok(AiryValue { x, ai, ai_prime })
}

/// Exponentially scaled pair `(Ai(x) e^{zeta}, Ai'(x) e^{zeta})`,
/// `zeta = (2/3) x^{3/2}`, for any finite `x >= 0`.
pub fn airy_scaled<T: Real>(x: T) -> Result<(T, T)> {
    if !x.is_finite() {
        return Err(Error::NonFinite(format!("Airy argument {}", x.to_f64_lossy())));
    }
    if x < T::zero() {
        return Err(Error::OutOfRange {
            what: "scaled Airy argument",
            value: x.to_f64_lossy(),
            lo: 0.0,
            hi: f64::INFINITY,
        });
    }
    Ok(airy_scaled_unchecked(x))
}

/// `(2/3) x^{3/2}` for `x >= 0`.
#[inline]
pub fn zeta<T: Real>(x: T) -> T {
    T::lit(2.0 / 3.0) * x * x.sqrt()
}

/// Evaluates `Ai` and `Ai'` without the range check. Accurate on
/// `[-30, 30]`; beyond that the asymptotic forms remain valid but the
/// unscaled value underflows for large positive `x`.
pub(crate) fn airy_unchecked<T: Real>(x: T) -> (T, T) {
    let pos = T::lit(SERIES_POS);
    let neg = -T::lit(SERIES_NEG);
    let width = T::lit(BLEND_WIDTH);
    if x >= pos + width {
        let (a, d) = asymptotic_positive(x);
        let e = (-zeta(x)).exp();
        (a * e, d * e)
    } else if x <= neg - width {
        asymptotic_negative(-x)
    } else if x > pos {
        blend(series(x), asymptotic(x), (x - pos) / width)
    } else if x < neg {
        blend(series(x), asymptotic(x), (neg - x) / width)
    } else {
        series(x)
    }
}

pub(crate) fn airy_scaled_unchecked<T: Real>(x: T) -> (T, T) {
    let pos = T::lit(SERIES_POS);
    let width = T::lit(BLEND_WIDTH);
    if x >= pos + width {
        asymptotic_positive(x)
    } else {
        let e = zeta(x).exp();
        let (a, d) = series(x);
        let scaled = (a * e, d * e);
        if x > pos {
            blend(scaled, asymptotic_positive(x), (x - pos) / width)
        } else {
            scaled
        }
    }
}

/// Quintic smoothstep mix of two evaluations, `w = 0` giving `first`.
/// The switch between regimes is C^2, so finite-difference derivatives do
/// not see the (tiny) jump between methods.
fn blend<T: Real>(first: (T, T), second: (T, T), w: T) -> (T, T) {
    let w = w * w * w * (w * (w * T::lit(6.0) - T::lit(15.0)) + T::lit(10.0));
    let v = T::one() - w;
    (v * first.0 + w * second.0, v * first.1 + w * second.1)
}

/// `(Ai(x), Ai'(x))` from a power series about the nearest integer anchor
/// `k` in `[-SERIES_NEG, SERIES_POS]`, with anchor values from
/// [`maclaurin`] and Taylor coefficients from the Airy equation
/// `a_{n+2} = (k a_n + a_{n-1}) / ((n+1)(n+2))`.
///
/// Summing the Maclaurin series directly at `|x| ~ 5` loses about three
/// digits to cancellation, and that rounding noise is not smooth in `x`.
/// Re-expanding about fixed anchors confines the error to a per-panel
/// constant, so the result is smooth inside each unit panel.
pub fn series<T: Real>(x: T) -> (T, T) {
    let lo = -T::lit(SERIES_NEG);
    let hi = T::lit(SERIES_POS);
    let anchor = x.round().max(lo).min(hi);
    if anchor == T::zero() {
        return maclaurin(x);
    }
    let (a0, a1) = maclaurin(anchor);
    let h = x - anchor;

    // a_{n-1}, a_n, a_{n+1} rolling window; value and derivative sums
    let mut prev = T::zero();
    let mut cur = a0;
    let mut next = a1;
    let mut hn = T::one();
    let mut value = a0;
    let mut deriv = a1;
    let mut n = 0usize;
    loop {
        let nf = T::from_usize_exact(n);
        let after = (anchor * cur + prev) / ((nf + T::one()) * (nf + T::lit(2.0)));
        prev = cur;
        cur = next;
        next = after;
        hn *= h;
        n += 1;
        // cur is a_n, next is a_{n+1}
        let dv = cur * hn;
        let dd = T::from_usize_exact(n + 1) * next * hn;
        let before = (value, deriv);
        value += dv;
        deriv += dd;
        if (value, deriv) == before || n > MAX_SERIES_TERMS {
            break;
        }
    }
    (value, deriv)
}

/// `(Ai(x), Ai'(x))` from the Maclaurin series alone. Terms are accumulated
/// until they no longer change the partial sums.
pub fn maclaurin<T: Real>(x: T) -> (T, T) {
    let x3 = x * x * x;
    // f and f'
    let mut tf = T::one();
    let mut sf = T::one();
    let mut pf = x * x / T::lit(2.0);
    let mut sfp = pf;
    // g and g'
    let mut tg = x;
    let mut sg = x;
    let mut rg = T::one();
    let mut sgp = T::one();

    for k in 0..MAX_SERIES_TERMS {
        let k3 = T::from_usize_exact(3 * k);
        let one = T::one();
        let two = T::lit(2.0);
        let three = T::lit(3.0);
        let four = T::lit(4.0);
        tf = tf * x3 / ((k3 + two) * (k3 + three));
        tg = tg * x3 / ((k3 + three) * (k3 + four));
        rg = rg * x3 / ((k3 + one) * (k3 + three));
        // p_{k+1} = p_k x^3 / (3k (3k + 2)), starting from p_1
        let kk = T::from_usize_exact(3 * (k + 1));
        pf = pf * x3 / (kk * (kk + two));

        let before = (sf, sg, sfp, sgp);
        sf += tf;
        sg += tg;
        sfp += pf;
        sgp += rg;
        if (sf, sg, sfp, sgp) == before {
            break;
        }
    }
    let c1 = T::lit(AI_ZERO);
    let c2 = T::lit(NEG_AI_PRIME_ZERO);
    (c1 * sf - c2 * sg, c1 * sfp - c2 * sgp)
}

/// `(Ai(x), Ai'(x))` from the asymptotic expansion alone (decaying form for
/// `x > 0`, oscillatory form for `x < 0`). Meaningless near the origin.
pub fn asymptotic<T: Real>(x: T) -> (T, T) {
    if x > T::zero() {
        let (a, d) = asymptotic_positive(x);
        let e = (-zeta(x)).exp();
        (a * e, d * e)
    } else {
        asymptotic_negative(-x)
    }
}

/// Coefficients `u_k` of the Airy asymptotic expansions together with
/// `v_k = -(6k+1)/(6k-1) u_k`.
fn asymptotic_coefficients<T: Real>() -> ([T; MAX_ASYMPTOTIC_TERMS], [T; MAX_ASYMPTOTIC_TERMS]) {
    let mut u = [T::one(); MAX_ASYMPTOTIC_TERMS];
    let mut v = [T::one(); MAX_ASYMPTOTIC_TERMS];
    for k in 1..MAX_ASYMPTOTIC_TERMS {
        let kf = T::from_usize_exact(k);
        let six_k = T::lit(6.0) * kf;
        u[k] = u[k - 1] * (six_k - T::lit(5.0)) * (six_k - T::lit(3.0)) * (six_k - T::one())
            / ((T::lit(2.0) * kf - T::one()) * T::lit(216.0) * kf);
        v[k] = -(six_k + T::one()) / (six_k - T::one()) * u[k];
    }
    (u, v)
}

/// Sums `sum_k (-1)^k c_k / zeta^k` with optimal truncation (stop at the
/// smallest term or when terms drop below machine precision).
fn alternating_sum<T: Real>(coeffs: &[T], zeta: T, stride: usize, offset: usize) -> T {
    let mut sum = T::zero();
    let mut last = T::infinity();
    let mut sign = T::one();
    let step = zeta.powi(stride as i32);
    let mut power = zeta.powi(offset as i32);
    let mut k = offset;
    while k < coeffs.len() {
        let term = coeffs[k] / power;
        power *= step;
        if term.abs() > last {
            break;
        }
        sum += sign * term;
        if term.abs() <= T::epsilon() * sum.abs() {
            break;
        }
        last = term.abs();
        sign = -sign;
        k += stride;
    }
    sum
}

/// Returns `(Ai(x) e^{zeta}, Ai'(x) e^{zeta})` from the decaying expansion.
fn asymptotic_positive<T: Real>(x: T) -> (T, T) {
    let (u, v) = asymptotic_coefficients::<T>();
    let z = zeta(x);
    let q = x.sqrt().sqrt();
    let norm = T::one() / (T::lit(2.0) * T::PI().sqrt());
    let a = norm / q * alternating_sum(&u, z, 1, 0);
    let d = -norm * q * alternating_sum(&v, z, 1, 0);
    (a, d)
}

/// `(Ai(-z), Ai'(-z))` for large `z > 0`.
fn asymptotic_negative<T: Real>(z: T) -> (T, T) {
    let (u, v) = asymptotic_coefficients::<T>();
    let zt = zeta(z);
    let phase = zt - T::FRAC_PI_4();
    let (s, c) = phase.sin_cos();
    let q = z.sqrt().sqrt();
    let norm = T::one() / T::PI().sqrt();

    let ue = alternating_sum(&u, zt, 2, 0);
    let uo = alternating_sum(&u, zt, 2, 1);
    let ve = alternating_sum(&v, zt, 2, 0);
    let vo = alternating_sum(&v, zt, 2, 1);

    let a = norm / q * (c * ue + s * uo);
    let d = norm * q * (s * ve - c * vo);
    (a, d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn value_at_origin() {
        let v = airy(0.0f64).unwrap();
        assert!((v.ai - 0.355_028_053_887_817).abs() < 1e-15);
        assert!((v.ai_prime + 0.258_819_403_792_806_8).abs() < 1e-15);
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(matches!(ai(30.5f64), Err(Error::OutOfRange { .. })));
        assert!(matches!(ai(-31.0f64), Err(Error::OutOfRange { .. })));
        assert!(matches!(ai_prime(f64::NAN), Err(Error::NonFinite(_))));
        assert!(airy_scaled(-0.1f64).is_err());
    }

    #[test]
    fn positive_and_decreasing_on_positive_axis() {
        let mut prev = f64::INFINITY;
        for i in 0..=3000 {
            let x = i as f64 * 0.01;
            let a = ai(x).unwrap();
            assert!(a > 0.0, "Ai({x}) = {a}");
            assert!(a < prev, "not decreasing at {x}");
            prev = a;
        }
    }

    #[test]
    fn first_zero() {
        // bisection on the evaluator itself
        let (mut lo, mut hi) = (-2.5f64, -2.2f64);
        for _ in 0..100 {
            let mid = 0.5 * (lo + hi);
            if ai(mid).unwrap() > 0.0 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        assert!((0.5 * (lo + hi) + 2.338_107_410_459_767).abs() < 1e-9);
    }

    #[test]
    fn scaled_matches_unscaled() {
        for &x in &[0.0f64, 1.0, 4.5, 5.5, 12.0, 29.0] {
            let (a, d) = airy_scaled(x).unwrap();
            let e = (-zeta(x)).exp();
            let v = airy(x).unwrap();
            assert!((a * e - v.ai).abs() <= 1e-14 * v.ai.abs().max(1e-300));
            assert!((d * e - v.ai_prime).abs() <= 1e-14 * v.ai_prime.abs().max(1e-300));
        }
    }

    #[test]
    fn single_precision_is_usable() {
        let a = ai(1.0f32).unwrap();
        assert!((a - 0.135_292_42).abs() < 1e-6);
    }
}
