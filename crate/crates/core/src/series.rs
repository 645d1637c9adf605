//! `P_m` as a weighted series over the Chebyshev-U basis.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::params::Params;
use crate::weights::binomial_weights;

/// Monomial coefficient extraction is capped here: coefficients reach
/// `2^m` and the monomial basis loses relative accuracy quickly.
pub const MONOMIAL_DEGREE_MAX: u32 = 30;

/// `P_m` represented by weights `c_0 .. c_m` on `U_0 .. U_m`, where
/// `c_k = b_{m-k}`. The leading weight `c_m = b_0 = 1`, so the degree is
/// exactly `m` with leading monomial coefficient `2^m`.
#[derive(Debug, Clone, PartialEq)]
pub struct ChebSeries {
    params: Params,
    weights: Vec<f64>,
}

impl ChebSeries {
    pub fn new(params: Params) -> Result<Self> {
        let b = binomial_weights(params.alpha(), params.degree())?;
        let mut weights: Vec<f64> = b.values().to_vec();
        weights.reverse();
        Ok(ChebSeries { params, weights })
    }

    pub fn params(&self) -> Params {
        self.params
    }

    /// Weight on `U_k` at index `k`; length `m + 1`.
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn degree(&self) -> u32 {
        self.params.degree()
    }

    /// Coefficients in the monomial basis, constant term first.
    ///
    /// Provided for inspection only and capped at degree
    /// [`MONOMIAL_DEGREE_MAX`]; evaluation and root finding stay in the
    /// U-basis.
    pub fn monomial_coefficients(&self) -> Result<Vec<f64>> {
        let m = self.degree();
        if m > MONOMIAL_DEGREE_MAX {
            return Err(Error::DegreeTooLarge { degree: m, max: MONOMIAL_DEGREE_MAX });
        }
        let n = m as usize;
        let mut acc = vec![0.0; n + 1];
        // U_{k+1} = 2 z U_k - U_{k-1} in coefficient space.
        let mut u_prev = vec![0.0; n + 1]; // U_{k-1}
        let mut u_cur = vec![0.0; n + 1]; // U_k
        u_cur[0] = 1.0;
        for k in 0..=n {
            for (a, u) in acc.iter_mut().zip(u_cur.iter()) {
                *a += self.weights[k] * u;
            }
            if k == n {
                break;
            }
            let mut u_next = vec![0.0; n + 1];
            for j in 0..n {
                u_next[j + 1] = 2.0 * u_cur[j];
            }
            for j in 0..=n {
                u_next[j] -= u_prev[j];
            }
            u_prev = u_cur;
            u_cur = u_next;
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_are_reversed_binomials() {
        let s = ChebSeries::new(Params::new(0.5, 3).unwrap()).unwrap();
        assert_eq!(s.weights(), &[0.3125, 0.375, 0.5, 1.0]);
        assert_eq!(s.weights().len(), 4);
        assert_eq!(*s.weights().last().unwrap(), 1.0);
    }

    #[test]
    fn monomial_small_degrees() {
        // P_1 = 2z + alpha, P_2 = 4z^2 + 2 alpha z + alpha(alpha+1)/2 - 1.
        let alpha = 0.5;
        let s1 = ChebSeries::new(Params::new(alpha, 1).unwrap()).unwrap();
        assert_eq!(s1.monomial_coefficients().unwrap(), vec![alpha, 2.0]);
        let s2 = ChebSeries::new(Params::new(alpha, 2).unwrap()).unwrap();
        let c = s2.monomial_coefficients().unwrap();
        let expected = vec![alpha * (alpha + 1.0) / 2.0 - 1.0, 2.0 * alpha, 4.0];
        for (a, b) in c.iter().zip(expected.iter()) {
            assert!((a - b).abs() < 1e-15, "{c:?} vs {expected:?}");
        }
    }

    #[test]
    fn monomial_leading_coefficient_is_power_of_two() {
        for m in [5u32, 12, 30] {
            let s = ChebSeries::new(Params::new(0.3, m).unwrap()).unwrap();
            let c = s.monomial_coefficients().unwrap();
            assert_eq!(*c.last().unwrap(), (2.0f64).powi(m as i32));
        }
    }

    #[test]
    fn monomial_rejects_large_degree() {
        let s = ChebSeries::new(Params::new(0.5, 31).unwrap()).unwrap();
        assert!(matches!(
            s.monomial_coefficients(),
            Err(Error::DegreeTooLarge { degree: 31, max: 30 })
        ));
    }
}
