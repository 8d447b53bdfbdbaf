//! Power series in `1/n`, truncated at a fixed order.

use std::ops::{Add, Mul, Sub};

use crate::poly::Polynomial;
use crate::scalar::Scalar;

/// `a_0 + a_1/n + ... + a_order/n^order`.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> TruncatedSeries<T> {
    /// Pads or truncates `coeffs` to `order + 1` terms.
    pub fn new(mut coeffs: Vec<T>, order: usize) -> Self {
        coeffs.resize(order + 1, T::zero());
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![T::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &T {
        &self.coeffs[i]
    }

    pub fn scale(&self, c: &T) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    /// Multiplies by `n^-k`.
    pub fn shift(&self, k: usize) -> Self {
        let order = self.order();
        let mut coeffs = vec![T::zero(); k.min(order + 1)];
        coeffs.extend(self.coeffs.iter().take((order + 1).saturating_sub(k)).cloned());
        TruncatedSeries { coeffs }
    }

    /// `p(n) / n^deg(p)` expanded in `1/n`.
    pub fn from_poly_over_leading_power(p: &Polynomial<T>, order: usize) -> Self {
        let Some(deg) = p.degree() else {
            return Self::zero(order);
        };
        Self::new((0..=deg).rev().map(|i| p.coeff(i)).collect(), order)
    }

    /// `(1 + h/n)^alpha` by the generalized binomial series.
    pub fn binomial_power(h: &T, alpha: &T, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut binom = T::one();
        let mut h_pow = T::one();
        for k in 0..=order {
            coeffs.push(binom.clone() * h_pow.clone());
            let k_t = T::from_int(k as i64);
            binom = binom * (alpha.clone() - k_t.clone()) / (k_t + T::one());
            h_pow = h_pow * h.clone();
        }
        TruncatedSeries { coeffs }
    }

    /// Evaluates the truncated sum at a given `1/n`.
    pub fn eval_inverse(&self, inv_n: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * inv_n.clone() + c.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

impl<T: Scalar> Add for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;

    fn add(self, rhs: Self) -> TruncatedSeries<T> {
        let order = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=order)
                .map(|i| self.coeffs[i].clone() + rhs.coeffs[i].clone())
                .collect(),
        }
    }
}

impl<T: Scalar> Sub for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;

    fn sub(self, rhs: Self) -> TruncatedSeries<T> {
        self + &rhs.scale(&-T::one())
    }
}

impl<T: Scalar> Mul for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;

    fn mul(self, rhs: Self) -> TruncatedSeries<T> {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![T::zero(); order + 1];
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                coeffs[i + j] = coeffs[i + j].clone() + self.coeffs[i].clone() * rhs.coeffs[j].clone();
            }
        }
        TruncatedSeries { coeffs }
    }
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use proptest::prelude::*;

    use super::*;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(BigInt::from(a), BigInt::from(b))
    }

    #[test]
    fn binomial_series_exact() {
        // (1 + 2/n)^3 = 1 + 6/n + 12/n^2 + 8/n^3
        let s = TruncatedSeries::binomial_power(&q(2, 1), &q(3, 1), 5);
        assert_eq!(s.coeffs(), &[q(1, 1), q(6, 1), q(12, 1), q(8, 1), q(0, 1), q(0, 1)]);
        // (1 + 1/n)^(-1) = 1 - 1/n + 1/n^2 - ...
        let s = TruncatedSeries::binomial_power(&q(1, 1), &q(-1, 1), 3);
        assert_eq!(s.coeffs(), &[q(1, 1), q(-1, 1), q(1, 1), q(-1, 1)]);
        // (1 + 1/n)^(1/2): 1 + 1/2 x - 1/8 x^2 + 1/16 x^3
        let s = TruncatedSeries::binomial_power(&q(1, 1), &q(1, 2), 3);
        assert_eq!(s.coeffs(), &[q(1, 1), q(1, 2), q(-1, 8), q(1, 16)]);
    }

    #[test]
    fn products_and_shifts() {
        let a = TruncatedSeries::binomial_power(&q(1, 1), &q(1, 2), 4);
        assert_eq!(&a * &a, TruncatedSeries::new(vec![q(1, 1), q(1, 1)], 4));
        let s = TruncatedSeries::new(vec![q(1, 1), q(2, 1), q(3, 1)], 3);
        assert_eq!(s.shift(2).coeffs(), &[q(0, 1), q(0, 1), q(1, 1), q(2, 1)]);
        assert_eq!(s.shift(9), TruncatedSeries::zero(3));
        assert!((&s - &s).is_zero());
    }

    #[test]
    fn polynomial_over_power() {
        // (n+1)(n+2) / n^2 = 1 + 3/n + 2/n^2
        let p: Polynomial<BigRational> = &Polynomial::linear(1) * &Polynomial::linear(2);
        let s = TruncatedSeries::from_poly_over_leading_power(&p, 3);
        assert_eq!(s.coeffs(), &[q(1, 1), q(3, 1), q(2, 1), q(0, 1)]);
    }

    proptest! {
        #[test]
        fn float_binomial_series_converges(h in -2.0f64..2.0, alpha in -8.0f64..8.0, n in 200.0f64..1000.0) {
            let s = TruncatedSeries::binomial_power(&h, &alpha, 12);
            let approx = s.eval_inverse(&(1.0 / n));
            let exact = (1.0 + h / n).powf(alpha);
            prop_assert!((approx / exact - 1.0).abs() < 1e-12);
        }
    }
}
