//! Generalized binomial weights `b_k = C(alpha + k - 1, k)`, the power
//! series coefficients of `(1 - t)^(-alpha)`.

use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Weights `b_0 .. b_m` computed by the exact product recurrence
/// `b_k = b_{k-1} * (alpha + k - 1) / k`, never through gamma-function
/// ratios (which overflow and break the recurrence identity).
#[derive(Debug, Clone, PartialEq)]
pub struct BinomialWeights {
    alpha: f64,
    values: Vec<f64>,
}

/// Computes `b_0 .. b_m` for `alpha > 0`.
pub fn binomial_weights(alpha: f64, m: u32) -> Result<BinomialWeights> {
    if !alpha.is_finite() || alpha <= 0.0 {
        return Err(Error::InvalidAlpha(alpha));
    }
    let mut values = Vec::with_capacity(m as usize + 1);
    values.push(1.0);
    for k in 1..=m as u64 {
        let prev = values[k as usize - 1];
        values.push(prev * (alpha + k as f64 - 1.0) / k as f64);
    }
    Ok(BinomialWeights { alpha, values })
}

impl BinomialWeights {
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Largest index `m`.
    pub fn degree(&self) -> u32 {
        (self.values.len() - 1) as u32
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_case() {
        // (1 - t)^(-1) is the geometric series: all weights 1.
        let w = binomial_weights(1.0, 3).unwrap();
        assert_eq!(w.values(), &[1.0, 1.0, 1.0, 1.0]);
    }

    #[test]
    fn half_alpha_by_hand() {
        // b_k = b_{k-1} (alpha + k - 1)/k for alpha = 1/2:
        // 1, 1/2, 3/8, 5/16
        let w = binomial_weights(0.5, 3).unwrap();
        assert_eq!(w.values(), &[1.0, 0.5, 0.375, 0.3125]);
    }

    #[test]
    fn degree_zero() {
        let w = binomial_weights(0.5, 0).unwrap();
        assert_eq!(w.values(), &[1.0]);
    }

    #[test]
    fn rejects_nonpositive_alpha() {
        assert!(binomial_weights(0.0, 3).is_err());
        assert!(binomial_weights(-0.5, 3).is_err());
    }

    #[test]
    fn unit_interval_weights_decrease() {
        for &alpha in &[0.1, 0.5, 0.9] {
            let w = binomial_weights(alpha, 50).unwrap();
            for pair in w.values().windows(2) {
                assert!(pair[1] < pair[0], "alpha={alpha}: not strictly decreasing");
                assert!(pair[1] > 0.0 && pair[1] <= 1.0);
            }
        }
    }
}
