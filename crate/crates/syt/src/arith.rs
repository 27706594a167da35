//! Exact integer and rational arithmetic helpers shared by the counting
//! formulas: factorials, binomials, and rational determinants.

use num::bigint::Sign;
use num::{BigInt, BigRational, BigUint, One, Signed, Zero};

/// `n!` as a big unsigned integer.
pub fn factorial(n: usize) -> BigUint {
    let mut acc = BigUint::one();
    for k in 2..=n {
        acc *= BigUint::from(k);
    }
    acc
}

/// Double factorial `n!! = n (n-2) (n-4) ...`, with `(-1)!! = 0!! = 1`.
pub fn double_factorial(n: isize) -> BigUint {
    if n <= 0 {
        return BigUint::one();
    }
    let mut acc = BigUint::one();
    let mut k = n as usize;
    while k > 1 {
        acc *= BigUint::from(k);
        k -= 2;
    }
    acc
}

/// Binomial coefficient `C(n, k)`, zero for `k > n`.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Binomial coefficient for a signed upper argument (zero when `n < 0`).
pub fn binomial_signed(n: isize, k: usize) -> BigUint {
    if n < 0 {
        BigUint::zero()
    } else {
        binomial(n as usize, k)
    }
}

/// Multinomial coefficient `(Σ parts)! / Π parts!`.
pub fn multinomial(parts: &[usize]) -> BigUint {
    let mut acc = BigUint::one();
    let mut total = 0usize;
    for &p in parts {
        total += p;
        acc *= binomial(total, p);
    }
    acc
}

/// `1 / n!` as a rational; zero when `n` is negative. This is the standard
/// convention that makes determinant entries `1 / (a - b)!` vanish for
/// out-of-range index differences.
pub fn inv_factorial(n: isize) -> BigRational {
    if n < 0 {
        BigRational::zero()
    } else {
        BigRational::new(BigInt::one(), BigInt::from(factorial(n as usize)))
    }
}

/// Exact determinant of a square rational matrix by fraction-free-pivoted
/// Gaussian elimination.
///
/// # Panics
/// Panics if the matrix is not square.
pub fn det_rational(matrix: &[Vec<BigRational>]) -> BigRational {
    let n = matrix.len();
    for row in matrix {
        assert_eq!(row.len(), n, "determinant requires a square matrix");
    }
    let mut m: Vec<Vec<BigRational>> = matrix.to_vec();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let pivot_val = m[col][col].clone();
        det *= pivot_val.clone();
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &pivot_val;
            for c in col..n {
                let delta = &factor * &m[col][c];
                m[r][c] -= delta;
            }
        }
    }
    det
}

/// Converts an exact rational known to be a nonnegative integer into a count.
///
/// # Panics
/// Panics if the value has a nontrivial denominator or is negative; every
/// call site computes a quantity that is an integer on mathematical grounds,
/// so a failure here means a formula was transcribed wrongly.
pub fn rational_to_count(value: &BigRational, context: &str) -> BigUint {
    assert!(
        value.is_integer(),
        "{context}: expected an integer, got {value}"
    );
    let numer = value.to_integer();
    assert!(
        !numer.is_negative(),
        "{context}: expected a nonnegative value, got {numer}"
    );
    numer.to_biguint().expect("nonnegative by the check above")
}

/// Converts a signed integer known to be nonnegative into a count.
///
/// # Panics
/// Panics if the value is negative.
pub fn int_to_count(value: &BigInt, context: &str) -> BigUint {
    match value.sign() {
        Sign::Minus => panic!("{context}: expected a nonnegative value, got {value}"),
        _ => value.to_biguint().expect("nonnegative by the check above"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorials_and_binomials() {
        assert_eq!(factorial(0), BigUint::one());
        assert_eq!(factorial(5), BigUint::from(120u32));
        assert_eq!(binomial(10, 3), BigUint::from(120u32));
        assert_eq!(binomial(3, 7), BigUint::zero());
        assert_eq!(multinomial(&[2, 3, 1]), BigUint::from(60u32));
        assert_eq!(double_factorial(7), BigUint::from(105u32));
        assert_eq!(double_factorial(-1), BigUint::one());
    }

    #[test]
    fn determinant_of_singular_and_regular_matrices() {
        let q = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
        let singular = vec![vec![q(1, 1), q(2, 1)], vec![q(2, 1), q(4, 1)]];
        assert!(det_rational(&singular).is_zero());
        let m = vec![vec![q(0, 1), q(1, 2)], vec![q(1, 3), q(1, 1)]];
        assert_eq!(det_rational(&m), q(-1, 6));
    }
}
