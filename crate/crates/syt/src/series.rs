//! Truncated formal power series with exact rational coefficients, used for
//! the exponential generating functions (secant, tangent, `x/sin x`) and the
//! strip generating-function identities.

use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Zero};

use crate::arith::factorial;

/// A power series truncated at a fixed order: coefficients of
/// `x^0 .. x^(order-1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<BigRational>,
}

impl Series {
    /// The zero series truncated at `order` terms.
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![BigRational::zero(); order],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order > 0 {
            s.coeffs[0] = BigRational::one();
        }
        s
    }

    /// The monomial `x^k`.
    pub fn x_power(k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k < order {
            s.coeffs[k] = BigRational::one();
        }
        s
    }

    /// Builds from explicit coefficients.
    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        Self { coeffs }
    }

    /// Builds from a coefficient function.
    pub fn from_fn(order: usize, f: impl Fn(usize) -> BigRational) -> Self {
        Self {
            coeffs: (0..order).map(f).collect(),
        }
    }

    /// `sin x` truncated at `order`.
    pub fn sin(order: usize) -> Self {
        Self::from_fn(order, |k| {
            if k % 2 == 1 {
                let sign = if k % 4 == 1 { 1 } else { -1 };
                BigRational::new(BigInt::from(sign), BigInt::from(factorial(k)))
            } else {
                BigRational::zero()
            }
        })
    }

    /// `cos x` truncated at `order`.
    pub fn cos(order: usize) -> Self {
        Self::from_fn(order, |k| {
            if k % 2 == 0 {
                let sign = if k % 4 == 0 { 1 } else { -1 };
                BigRational::new(BigInt::from(sign), BigInt::from(factorial(k)))
            } else {
                BigRational::zero()
            }
        })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    ///
    /// # Panics
    /// Panics if the constant term vanishes.
    pub fn inverse(&self) -> Series {
        let order = self.order();
        assert!(order > 0 && !self.coeffs[0].is_zero(), "series is not invertible");
        let c0 = self.coeffs[0].clone();
        let mut inv = Series::zero(order);
        inv.coeffs[0] = BigRational::one() / &c0;
        for k in 1..order {
            // c0 * inv_k = -(sum of self_j * inv_{k-j} for j >= 1).
            let mut acc = BigRational::zero();
            for j in 1..=k {
                acc += &self.coeffs[j] * &inv.coeffs[k - j];
            }
            inv.coeffs[k] = -acc / &c0;
        }
        inv
    }

    /// Series division `self / divisor`; the divisor must be invertible.
    pub fn div(&self, divisor: &Series) -> Series {
        self * &divisor.inverse()
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        Series::from_fn(order, |k| self.coeff(k) + rhs.coeff(k))
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        Series::from_fn(order, |k| self.coeff(k) - rhs.coeff(k))
    }
}

impl Neg for Series {
    type Output = Series;
    fn neg(mut self) -> Series {
        for c in &mut self.coeffs {
            *c = -c.clone();
        }
        self
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        let mut out = Series::zero(order);
        for i in 0..order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..order - i {
                if rhs.coeffs[j].is_zero() {
                    continue;
                }
                let delta = &self.coeffs[i] * &rhs.coeffs[j];
                out.coeffs[i + j] += delta;
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn sin_cos_pythagoras_truncated() {
        let order = 12;
        let s = Series::sin(order);
        let c = Series::cos(order);
        let sum = &(&s * &s) + &(&c * &c);
        assert_eq!(sum, Series::one(order));
    }

    #[test]
    fn inverse_of_cos_starts_like_secant() {
        let sec = Series::cos(8).inverse();
        // sec x = 1 + x^2/2 + 5x^4/24 + 61x^6/720 + ...
        assert_eq!(sec.coeff(0), rat(1, 1));
        assert_eq!(sec.coeff(2), rat(1, 2));
        assert_eq!(sec.coeff(4), rat(5, 24));
        assert_eq!(sec.coeff(6), rat(61, 720));
        assert_eq!(sec.coeff(1), rat(0, 1));
    }

    #[test]
    fn division_undoes_multiplication() {
        let a = Series::cos(10);
        let b = Series::from_fn(10, |k| rat(k as i64 + 1, 2));
        let prod = &a * &b;
        assert_eq!(prod.div(&a), b);
    }
}
