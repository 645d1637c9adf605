//! Construction, evaluation, and zero analysis of the polynomial family
//! generated by `1 / ((1 - t)^alpha * (1 - 2zt + t^2))`.
//!
//! The coefficient of `t^m` in that power series is a degree-`m` polynomial
//! `P_m(z)` equal to a binomially weighted combination of Chebyshev
//! polynomials of the second kind:
//!
//! ```text
//! P_m(z) = sum_{k=0}^{m} C(alpha + m - k - 1, m - k) * U_k(z)
//! ```
//!
//! The crate provides three mutually independent evaluation routes
//! (forward recurrence, Clenshaw summation of the U-series, and a
//! Laplace-type integral plus trigonometric closed form valid for
//! `z = cos(theta)`), locates and classifies the zeros of `P_m`, and
//! runs the scans that witness the key inequality
//!
//! ```text
//! (1/pi) * I(alpha, m, theta)  <  sin^alpha(theta/2) / (sin(theta) * (1 - cos(theta))^alpha)
//! ```
//!
//! for `theta` in `(K/m, pi)` together with the bounded count of zeros
//! outside the real interval `(-1, 1)` when `0 < alpha < 1`.
//!
//! The crate is `no_std` compatible (requires `alloc`); the `std` feature
//! (on by default) switches float math to the platform libm.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod error;
pub mod eval;
pub mod gamma;
pub mod lemma;
pub mod params;
pub mod quad;
pub mod represent;
pub mod series;
pub mod weights;
pub mod zeros;

mod eigen;

pub use error::{Error, Result};
pub use eval::{eval_recurrence, eval_series, eval_series_real, eval_with_derivative, EvalPoint};
pub use gamma::{gamma, gamma_upper, GammaPair};
pub use lemma::{lemma_lhs, lemma_rhs, scan_lemma, verify_split_bounds, LemmaScanReport, SplitBounds};
pub use params::Params;
pub use represent::{integral_term, pm_via_representation, trig_term, LaplaceIntegrand, RepresentationReport};
pub use series::ChebSeries;
pub use weights::{binomial_weights, BinomialWeights};
pub use zeros::{
    all_zeros, critical_angles, outside_count_sweep, sign_pattern, zeros_in_interval,
    CriticalAngles, SweepEntry, ZeroMethod, ZeroReport,
};

/// Complex double-precision scalar used throughout.
pub type Complex = num_complex::Complex64;
