//! Dense integer polynomials in `q`, with the exact `q`-analogues
//! (`[n]_q`, `[n]_q!`, `q`-binomials) used throughout `q`-enumeration.
//!
//! Division is exact or fails loudly: every quotient taken here is an
//! integer polynomial on mathematical grounds, so a nonzero remainder means
//! a formula was transcribed wrongly.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num::{BigInt, One, Signed, Zero};

/// A polynomial in `q` with integer coefficients, stored densely from the
/// constant term up.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::from_coeffs(vec![BigInt::from(c)])
    }

    /// The monomial `q^k`.
    pub fn q_power(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        Self { coeffs }
    }

    /// Builds from coefficients (constant term first), trimming zeros.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `q^k`.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Value at `q = 1` (for a generating function, the total count).
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Value at `q = -1`.
    pub fn eval_minus_one(&self) -> BigInt {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 0 { c.clone() } else { -c.clone() })
            .sum()
    }

    /// Adds `q^k * other` into `self`.
    pub fn add_shifted(&mut self, other: &QPoly, k: usize) {
        if other.is_zero() {
            return;
        }
        let need = other.coeffs.len() + k;
        if self.coeffs.len() < need {
            self.coeffs.resize(need, BigInt::zero());
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            self.coeffs[i + k] += c;
        }
        self.trim();
    }

    /// Exact division.
    ///
    /// # Panics
    /// Panics if `divisor` is zero or does not divide `self` exactly.
    pub fn div_exact(&self, divisor: &QPoly) -> QPoly {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut rem = self.coeffs.clone();
        let d = divisor.coeffs.len() - 1;
        let lead = divisor.coeffs[d].clone();
        assert!(
            rem.len() >= d + 1,
            "exact division failed: degree too small ({self} / {divisor})"
        );
        let mut quot = vec![BigInt::zero(); rem.len() - d];
        for k in (0..quot.len()).rev() {
            let top = rem[k + d].clone();
            if top.is_zero() {
                continue;
            }
            let (q, r) = num::Integer::div_rem(&top, &lead);
            assert!(
                r.is_zero(),
                "exact division failed: leading coefficient ({self} / {divisor})"
            );
            quot[k] = q.clone();
            for (i, c) in divisor.coeffs.iter().enumerate() {
                let delta = c * &q;
                rem[k + i] -= delta;
            }
        }
        assert!(
            rem.iter().all(|c| c.is_zero()),
            "exact division failed: nonzero remainder ({self} / {divisor})"
        );
        QPoly::from_coeffs(quot)
    }

    /// `[n]_q = 1 + q + ... + q^(n-1)`.
    pub fn q_int(n: usize) -> QPoly {
        QPoly::from_coeffs(vec![BigInt::one(); n])
    }

    /// `[n]_q! = [1]_q [2]_q ... [n]_q`.
    pub fn q_factorial(n: usize) -> QPoly {
        let mut acc = QPoly::one();
        for k in 1..=n {
            acc = &acc * &QPoly::q_int(k);
        }
        acc
    }

    /// Gaussian binomial coefficient; zero when `k > n`.
    pub fn q_binomial(n: usize, k: usize) -> QPoly {
        if k > n {
            return QPoly::zero();
        }
        let mut num = QPoly::one();
        let mut den = QPoly::one();
        for i in 0..k.min(n - k) {
            num = &num * &QPoly::q_int(n - i);
            den = &den * &QPoly::q_int(i + 1);
        }
        num.div_exact(&den)
    }

    /// Gaussian multinomial `[n; k_1, ..., k_t]_q` (the parts must sum to `n`).
    pub fn q_multinomial(parts: &[usize]) -> QPoly {
        let mut acc = QPoly::one();
        let mut total = 0;
        for &p in parts {
            total += p;
            acc = &acc * &QPoly::q_binomial(total, p);
        }
        acc
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        out.add_shifted(rhs, 0);
        out
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        self.add_shifted(rhs, 0);
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        self + &(-rhs.clone())
    }
}

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(mut self) -> QPoly {
        for c in &mut self.coeffs {
            *c = -c.clone();
        }
        self
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if k == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
