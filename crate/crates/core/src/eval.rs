//! Evaluation of `P_m` by two independent routes.
//!
//! The forward route uses the three-term recurrence obtained by
//! multiplying the generating function through by `(1 - 2zt + t^2)`:
//!
//! ```text
//! P_m(z) = 2z P_{m-1}(z) - P_{m-2}(z) + b_m,    P_{-1} = P_{-2} = 0
//! ```
//!
//! driven by the binomial weights `b_k`. The backward route is a
//! Clenshaw-style summation of the U-basis series
//! `sum_k c_k U_k(z)` with `c_k = b_{m-k}`, using
//! `U_{k+1} = 2z U_k - U_{k-1}`. The two routes share no code and serve
//! as oracles for each other.

use num_complex::Complex64;
use num_traits::Float;

use crate::error::Result;
use crate::params::{check_theta, Params};
use crate::series::ChebSeries;
use crate::weights::binomial_weights;

/// An evaluation point: either `z` in the complex plane or an angle
/// `theta` in `(0, pi)` standing for `z = cos(theta)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EvalPoint {
    Z(Complex64),
    Angle(f64),
}

impl EvalPoint {
    pub fn z(value: Complex64) -> Self {
        EvalPoint::Z(value)
    }

    pub fn real(x: f64) -> Self {
        EvalPoint::Z(Complex64::new(x, 0.0))
    }

    /// Requires `0 < theta < pi`.
    pub fn angle(theta: f64) -> Result<Self> {
        Ok(EvalPoint::Angle(check_theta(theta)?))
    }

    pub fn to_z(&self) -> Complex64 {
        match self {
            EvalPoint::Z(z) => *z,
            EvalPoint::Angle(theta) => Complex64::new(theta.cos(), 0.0),
        }
    }
}

/// `P_m(z)` by the forward three-term recurrence.
pub fn eval_recurrence(params: &Params, point: &EvalPoint) -> Result<Complex64> {
    let b = binomial_weights(params.alpha(), params.degree())?;
    let z = point.to_z();
    let two_z = z * 2.0;
    let mut p_prev2 = Complex64::new(0.0, 0.0);
    let mut p_prev1 = Complex64::new(0.0, 0.0);
    let mut p = Complex64::new(0.0, 0.0);
    for &bk in b.values() {
        p = two_z * p_prev1 - p_prev2 + bk;
        p_prev2 = p_prev1;
        p_prev1 = p;
    }
    Ok(p)
}

/// `P_m(z)` by backward Clenshaw summation of the U-basis series.
///
/// At `z = 1` and `z = -1` the exact values `U_k(+-1) = (+-1)^k (k+1)`
/// are summed directly.
pub fn eval_series(series: &ChebSeries, point: &EvalPoint) -> Complex64 {
    let z = point.to_z();
    if z.im == 0.0 && (z.re == 1.0 || z.re == -1.0) {
        return Complex64::new(eval_series_endpoint(series.weights(), z.re), 0.0);
    }
    let c = series.weights();
    let two_z = z * 2.0;
    let mut b_k1 = Complex64::new(0.0, 0.0);
    let mut b_k2 = Complex64::new(0.0, 0.0);
    for &ck in c.iter().rev() {
        let b_k = two_z * b_k1 - b_k2 + ck;
        b_k2 = b_k1;
        b_k1 = b_k;
    }
    // U_{-1} = 0, so running the recurrence down to k = 0 leaves the value
    // in b_0 directly.
    b_k1
}

/// Real fast path of [`eval_series`] for `z` on the real axis.
pub fn eval_series_real(series: &ChebSeries, x: f64) -> f64 {
    if x == 1.0 || x == -1.0 {
        return eval_series_endpoint(series.weights(), x);
    }
    let two_x = 2.0 * x;
    let mut b_k1 = 0.0;
    let mut b_k2 = 0.0;
    for &ck in series.weights().iter().rev() {
        let b_k = two_x * b_k1 - b_k2 + ck;
        b_k2 = b_k1;
        b_k1 = b_k;
    }
    b_k1
}

fn eval_series_endpoint(c: &[f64], x: f64) -> f64 {
    let mut acc = 0.0;
    let mut sign = 1.0;
    for (k, &ck) in c.iter().enumerate() {
        acc += ck * sign * (k as f64 + 1.0);
        if x < 0.0 {
            sign = -sign;
        }
    }
    acc
}

/// `(P_m(z), P_m'(z))` by simultaneous forward recurrences; the
/// derivative satisfies `P'_m = 2 P_{m-1} + 2z P'_{m-1} - P'_{m-2}`.
pub fn eval_with_derivative(params: &Params, z: Complex64) -> Result<(Complex64, Complex64)> {
    let (value, deriv, _) = eval_with_derivative_scaled(params, z)?;
    Ok((value, deriv))
}

/// As [`eval_with_derivative`], also returning the largest intermediate
/// magnitude `max_k |P_k(z)|`. That magnitude sets the round-off floor of
/// the evaluation and is the right yardstick for residual checks at
/// points where `P_m` itself is tiny.
pub(crate) fn eval_with_derivative_scaled(
    params: &Params,
    z: Complex64,
) -> Result<(Complex64, Complex64, f64)> {
    let b = binomial_weights(params.alpha(), params.degree())?;
    let two_z = z * 2.0;
    let mut p_prev2 = Complex64::new(0.0, 0.0);
    let mut p_prev1 = Complex64::new(0.0, 0.0);
    let mut d_prev2 = Complex64::new(0.0, 0.0);
    let mut d_prev1 = Complex64::new(0.0, 0.0);
    let mut p = Complex64::new(0.0, 0.0);
    let mut d = Complex64::new(0.0, 0.0);
    let mut scale = 0.0f64;
    for &bk in b.values() {
        p = two_z * p_prev1 - p_prev2 + bk;
        d = p_prev1 * 2.0 + two_z * d_prev1 - d_prev2;
        p_prev2 = p_prev1;
        p_prev1 = p;
        d_prev2 = d_prev1;
        d_prev1 = d;
        scale = scale.max(p.norm());
    }
    Ok((p, d, scale.max(1.0)))
}
