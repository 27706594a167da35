//! Diagonal strips: staircase-like skew diagrams of bounded width.
//!
//! A width-`m` strip with `n` rows has row `i` spanning columns `n-i+1`
//! through `n+m-i`, so each row sits one column left of the row above it.
//! With `k = floor(m/2)`, the family is refined by a head partition `lambda`
//! capping the right ends of the top `k` rows (row `i` ends at column
//! `n+m-k-1+lambda_i`) and a tail partition `mu` anchoring the left ends of
//! the bottom `k` rows (row `n+1-j` starts at column `k-mu_j+1`).  Row counts
//! come from a `k x k` determinant whose entries are alternating double sums
//! of the normalized alternating-permutation numbers `A_i / i!`, with closed
//! forms for widths up to five and generating functions for strips whose
//! rows (after the first) all have the same length and shift.

use num::{BigInt, BigRational, BigUint, One, Zero};

use crate::arith::{det_rational, factorial, inv_factorial, rational_to_count};
use crate::diagram::Diagram;
use crate::formulas::{andre_numbers, euler_number_signed, f_skew_det, tangent_number};
use crate::partition::Partition;
use crate::series::Series;

/// The strip diagram of width `m` with `n` rows, head `lambda`, and tail `mu`.
///
/// # Panics
/// Panics if the head or tail has more than `floor(m/2)` parts or if some row
/// of the requested strip would be empty.
pub fn strip_diagram(m: usize, n: usize, head: &Partition, tail: &Partition) -> Diagram {
    assert!(m >= 1, "strip width must be positive");
    assert!(n >= 1, "strip must have at least one row");
    let k = m / 2;
    assert!(
        head.len() <= k && tail.len() <= k,
        "head and tail may have at most {k} parts for width {m}"
    );
    let mut cells = Vec::new();
    for i in 1..=n {
        let start = if i + k > n {
            k as isize - tail.part(n + 1 - i) as isize + 1
        } else {
            (n - i + 1) as isize
        };
        let end = if i <= k {
            (n + m - k - 1 + head.part(i)) as isize
        } else {
            (n + m - i) as isize
        };
        assert!(start <= end, "row {i} of the width-{m} strip is empty");
        for j in start..=end {
            cells.push((i as isize, j));
        }
    }
    Diagram::new(cells)
}

/// The basic width-`m` strip with `n` rows: the skew shape
/// `(n+m-1, n+m-2, ..., m) / (n-1, n-2, ..., 1)`.
pub fn basic_strip(m: usize, n: usize) -> Diagram {
    let stair = Partition::staircase(m / 2 + 1);
    strip_diagram(m, n, &stair, &stair)
}

/// `A_i / i!` for `i = 0..=max`, the volume normalization of the
/// alternating-permutation numbers.
fn volume_table(max: isize) -> Vec<BigRational> {
    if max < 0 {
        return Vec::new();
    }
    let numbers = andre_numbers(max as usize);
    numbers
        .iter()
        .enumerate()
        .map(|(i, a)| {
            BigRational::new(BigInt::from(a.clone()), BigInt::from(factorial(i)))
        })
        .collect()
}

/// Table lookup returning zero for negative indices.
fn vol(table: &[BigRational], index: isize) -> BigRational {
    if index < 0 {
        BigRational::zero()
    } else {
        table[index as usize].clone()
    }
}

/// `(-1)^{n/2}` for even `n`, zero for odd `n`.
fn eps(n: usize) -> BigInt {
    if n % 2 == 1 {
        BigInt::zero()
    } else if (n / 2) % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

fn alternating_sign(i: usize) -> BigRational {
    if i % 2 == 0 {
        BigRational::one()
    } else {
        -BigRational::one()
    }
}

/// Shared shape of the even-width kernel: an alternating double sum over
/// `A_{index+2i+2j+1}/(p-2i)!(q-2j)!` plus boundary corrections that switch
/// on according to the parity of `p + shift` and `q + shift`.
fn kernel_even_with(index: isize, p: usize, q: usize, shift: usize) -> BigRational {
    let table = volume_table(index + (p + q) as isize + 1);
    let mut total = BigRational::zero();
    for i in 0..=p / 2 {
        for j in 0..=q / 2 {
            total += alternating_sign(i + j)
                * vol(&table, index + 2 * (i + j) as isize + 1)
                * inv_factorial(p as isize - 2 * i as isize)
                * inv_factorial(q as isize - 2 * j as isize);
        }
    }
    let ep = eps(p + shift);
    let eq = eps(q + shift);
    if !ep.is_zero() {
        for j in 0..=q / 2 {
            total += BigRational::from(ep.clone())
                * alternating_sign(j)
                * vol(&table, index + p as isize + 2 * j as isize + 1)
                * inv_factorial(q as isize - 2 * j as isize);
        }
    }
    if !eq.is_zero() {
        for i in 0..=p / 2 {
            total += BigRational::from(eq.clone())
                * alternating_sign(i)
                * vol(&table, index + 2 * i as isize + q as isize + 1)
                * inv_factorial(p as isize - 2 * i as isize);
        }
    }
    total += BigRational::from(ep * eq) * vol(&table, index + (p + q) as isize + 1);
    total
}

/// Determinant kernel for even-width strips, with corrections keyed to the
/// parity of `p` and `q` themselves.
pub fn strip_kernel_even(index: isize, p: usize, q: usize) -> BigRational {
    kernel_even_with(index, p, q, 0)
}

/// Variant of the even kernel whose values are zigzag volumes: corrections
/// are keyed to the parity of `p+1` and `q+1`, and
/// `zigzag_kernel(2n-1, p, q)` equals `f^Z / |Z|!` for the zigzag `Z` with
/// `2n + p + q` cells and descent set `{p+2, p+4, ..., p+2n-2}`, while
/// `zigzag_kernel(2n, p, q)` does the same for the zigzag with `2n+p+q+1`
/// cells and descent set `{p+2, ..., p+2n} + {p+2n+1, ..., p+2n+q}`.
pub fn zigzag_kernel(index: isize, p: usize, q: usize) -> BigRational {
    kernel_even_with(index, p, q, 1)
}

/// Determinant kernel for odd-width strips: the same alternating double sum
/// built from `A_i/i! * (2^i - 1)/(2^i (2^{i+1} - 1))`, with single sums in
/// `A_i/(i! (2^{i+1} - 1))` switched on by the parity of `p` and `q`.
pub fn strip_kernel_odd(index: isize, p: usize, q: usize) -> BigRational {
    let table = volume_table(index + (p + q) as isize + 1);
    let half = |i: isize| -> BigRational {
        // A_i / (i! (2^{i+1} - 1))
        if i < 0 {
            return BigRational::zero();
        }
        vol(&table, i)
            / BigRational::from((BigInt::one() << (i as usize + 1)) - BigInt::one())
    };
    let reduced = |i: isize| -> BigRational {
        // (2^i - 1) / 2^i times the previous
        if i < 0 {
            return BigRational::zero();
        }
        half(i) * BigRational::new((BigInt::one() << i as usize) - BigInt::one(), BigInt::one() << i as usize)
    };
    let mut total = BigRational::zero();
    for i in 0..=p / 2 {
        for j in 0..=q / 2 {
            total += alternating_sign(i + j)
                * reduced(index + 2 * (i + j) as isize + 1)
                * inv_factorial(p as isize - 2 * i as isize)
                * inv_factorial(q as isize - 2 * j as isize);
        }
    }
    let ep = eps(p);
    let eq = eps(q);
    if !ep.is_zero() {
        for j in 0..=q / 2 {
            total += BigRational::from(ep.clone())
                * alternating_sign(j)
                * half(index + p as isize + 2 * j as isize + 1)
                * inv_factorial(q as isize - 2 * j as isize);
        }
    }
    if !eq.is_zero() {
        for i in 0..=p / 2 {
            total += BigRational::from(eq.clone())
                * alternating_sign(i)
                * half(index + 2 * i as isize + q as isize + 1)
                * inv_factorial(p as isize - 2 * i as isize);
        }
    }
    total += BigRational::from(ep * eq) * reduced(index + (p + q) as isize + 1);
    total
}

/// The number of standard tableaux of a strip diagram, by the `k x k`
/// determinant `(-1)^{C(k,2)} |D|! det[K(2n-m+1, lambda_i+k-i, mu_j+k-j)]`
/// where `K` is the even or odd kernel according to the parity of `m`.
///
/// For odd widths any head and tail are accepted. For even widths only the
/// basic staircase head and tail `(k, ..., 1)` are: the even kernel's
/// single-sum boundary terms activate exactly at even arguments, which the
/// staircase avoids, and no convention for them reproduces the direct count
/// (every variant tried disagrees with exhaustive enumeration on shapes such
/// as the 10-cell width-4 strip with head `(1)` and tail `(2, 1)`).
///
/// # Panics
/// Panics if `m < 2`, if an odd `m` exceeds `2n + 1` (the odd kernel has no
/// meaning at negative indices), if an even `m` is paired with a non-staircase
/// head or tail, or if the determinant does not produce a nonnegative integer.
pub fn f_strip_det(m: usize, n: usize, head: &Partition, tail: &Partition) -> BigUint {
    assert!(m >= 2, "the strip determinant needs width at least 2");
    if m % 2 == 1 {
        assert!(2 * n + 1 >= m, "odd width {m} needs at least {} rows", (m - 1) / 2);
    } else {
        let staircase = Partition::staircase(m / 2 + 1);
        assert!(
            *head == staircase && *tail == staircase,
            "even width {m} is only supported with the staircase head and tail"
        );
    }
    let k = m / 2;
    let diagram = strip_diagram(m, n, head, tail);
    let index = 2 * n as isize - m as isize + 1;
    let kernel: fn(isize, usize, usize) -> BigRational = if m % 2 == 0 {
        strip_kernel_even
    } else {
        strip_kernel_odd
    };
    let matrix: Vec<Vec<BigRational>> = (1..=k)
        .map(|i| {
            (1..=k)
                .map(|j| kernel(index, head.part(i) + k - i, tail.part(j) + k - j))
                .collect()
        })
        .collect();
    let det = det_rational(&matrix);
    let sign = if (k * (k - 1) / 2) % 2 == 1 {
        -BigRational::one()
    } else {
        BigRational::one()
    };
    let value = sign * BigRational::from(BigInt::from(factorial(diagram.size()))) * det;
    rational_to_count(&value, "strip determinant")
}

fn rat_factorial(n: usize) -> BigRational {
    BigRational::from(BigInt::from(factorial(n)))
}

fn rat_pow2(e: usize) -> BigRational {
    BigRational::from(BigInt::one() << e)
}

fn rat_pow2_minus_1(e: usize) -> BigRational {
    BigRational::from((BigInt::one() << e) - BigInt::one())
}

fn rat_tangent(n: usize) -> BigRational {
    BigRational::from(BigInt::from(tangent_number(n)))
}

fn rat_euler(subscript: usize) -> BigRational {
    assert!(subscript % 2 == 0, "Euler numbers carry even subscripts");
    BigRational::from(euler_number_signed(subscript / 2))
}

/// Count for the width-3 strip with empty head and tail (the basic strip
/// minus its northeast and southwest corner cells):
/// `(3n-2)! T_n / ((2n-1)! 2^{2n-2})`.
pub fn f_strip3_trimmed(n: usize) -> BigUint {
    assert!(n >= 1, "the trimmed width-3 strip needs at least one row");
    let value = rat_factorial(3 * n - 2) * rat_tangent(n)
        / (rat_factorial(2 * n - 1) * rat_pow2(2 * n - 2));
    rational_to_count(&value, "trimmed width-3 strip")
}

/// Count for the width-3 strip with a single head cell and empty tail:
/// `(3n-1)! T_n / ((2n-1)! 2^{2n-1})`.
pub fn f_strip3_head_cell(n: usize) -> BigUint {
    assert!(n >= 1, "the width-3 strip needs at least one row");
    let value = rat_factorial(3 * n - 1) * rat_tangent(n)
        / (rat_factorial(2 * n - 1) * rat_pow2(2 * n - 1));
    rational_to_count(&value, "width-3 strip with one head cell")
}

/// Count for the basic width-3 strip:
/// `(3n)! (2^{2n-1} - 1) T_n / ((2n-1)! 2^{2n-1} (2^{2n} - 1))`.
pub fn f_strip3(n: usize) -> BigUint {
    assert!(n >= 1, "the basic width-3 strip needs at least one row");
    let value = rat_factorial(3 * n) * rat_pow2_minus_1(2 * n - 1) * rat_tangent(n)
        / (rat_factorial(2 * n - 1) * rat_pow2(2 * n - 1) * rat_pow2_minus_1(2 * n));
    rational_to_count(&value, "basic width-3 strip")
}

/// Count for the width-4 strip with empty head and tail, which has `n+1`
/// rows and `4n-2` cells:
/// `(4n-2)! (T_n^2/(2n-1)!^2 + E_{2n-2} E_{2n} / ((2n-2)!(2n)!))`.
pub fn f_strip4_trimmed(n: usize) -> BigUint {
    assert!(n >= 1, "the trimmed width-4 strip needs a positive parameter");
    let tangent_part = rat_tangent(n) * rat_tangent(n)
        / (rat_factorial(2 * n - 1) * rat_factorial(2 * n - 1));
    let euler_part = rat_euler(2 * n - 2) * rat_euler(2 * n)
        / (rat_factorial(2 * n - 2) * rat_factorial(2 * n));
    let value = rat_factorial(4 * n - 2) * (tangent_part + euler_part);
    rational_to_count(&value, "trimmed width-4 strip")
}

/// Count for the basic width-4 strip:
/// `(4n)! (E_{2n}^2/(2n)!^2 - E_{2n-2} E_{2n+2} / ((2n-2)!(2n+2)!))`.
pub fn f_strip4(n: usize) -> BigUint {
    assert!(n >= 1, "the basic width-4 strip needs at least one row");
    let square_part =
        rat_euler(2 * n) * rat_euler(2 * n) / (rat_factorial(2 * n) * rat_factorial(2 * n));
    let cross_part = rat_euler(2 * n - 2) * rat_euler(2 * n + 2)
        / (rat_factorial(2 * n - 2) * rat_factorial(2 * n + 2));
    let value = rat_factorial(4 * n) * (square_part - cross_part);
    rational_to_count(&value, "basic width-4 strip")
}

/// Count for the width-5 strip with empty head and tail:
/// `(5n-6)! T_{n-1}^2 / ((2n-3)!^2 2^{4n-6} (2^{2n-2} - 1))`.
pub fn f_strip5_trimmed(n: usize) -> BigUint {
    assert!(n >= 2, "the trimmed width-5 strip needs at least two rows");
    let value = rat_factorial(5 * n - 6) * rat_tangent(n - 1) * rat_tangent(n - 1)
        / (rat_factorial(2 * n - 3)
            * rat_factorial(2 * n - 3)
            * rat_pow2(4 * n - 6)
            * rat_pow2_minus_1(2 * n - 2));
    rational_to_count(&value, "trimmed width-5 strip")
}

/// The skew diagram with `rows` rows, `a` cells in the top row, `b` cells in
/// every other row, and each row shifted `c-1` columns left of the row above.
pub fn stanley_strip(a: usize, b: usize, c: usize, rows: usize) -> Diagram {
    assert!(a >= 1 && b >= 1 && c >= 1, "row lengths and shift base must be positive");
    assert!(rows >= 1, "the strip needs at least one row");
    let mut cells = Vec::new();
    for i in 1..=rows {
        let len = if i == 1 { a } else { b };
        let start = 1 + (rows - i) * (c - 1);
        for j in start..start + len {
            cells.push((i as isize, j as isize));
        }
    }
    Diagram::new(cells)
}

/// The number of standard tableaux of [`stanley_strip`]`(a, b, c, rows)`,
/// via the skew determinant.
pub fn f_stanley_strip(a: usize, b: usize, c: usize, rows: usize) -> BigUint {
    assert!(rows >= 1, "the strip needs at least one row");
    let outer: Vec<usize> = (1..=rows)
        .map(|i| (rows - i) * (c - 1) + if i == 1 { a } else { b })
        .collect();
    let inner: Vec<usize> = (1..=rows)
        .map(|i| (rows - i) * (c - 1))
        .filter(|&v| v > 0)
        .collect();
    f_skew_det(&Partition::new(outer), &Partition::new(inner))
}

/// The exponential-style generating function `sum_{rows>=1} f^D x^rows /
/// |D|!` over the strips with fixed `a`, `b`, `c`, with `order` coefficients.
pub fn stanley_strip_series(a: usize, b: usize, c: usize, order: usize) -> Series {
    let mut coeffs = vec![BigRational::zero(); order];
    for rows in 1..order {
        let count = BigRational::from(BigInt::from(f_stanley_strip(a, b, c, rows)));
        let size = a + (rows - 1) * b;
        coeffs[rows] = count / rat_factorial(size);
    }
    Series::from_coeffs(coeffs)
}

/// Closed form for [`stanley_strip_series`] when `c <= b < 2c`:
/// `[x sum_j (-x)^j/(a+jc)!] / [(b-c)! - x sum_j (-x)^j/(b+jc)!]`.
pub fn stanley_strip_series_closed(a: usize, b: usize, c: usize, order: usize) -> Series {
    assert!(c <= b && b < 2 * c, "the closed form needs c <= b < 2c");
    let x = Series::x_power(1, order);
    let head = Series::from_fn(order, |j| {
        alternating_sign(j) * inv_factorial((a + j * c) as isize)
    });
    let body = Series::from_fn(order, |j| {
        alternating_sign(j) * inv_factorial((b + j * c) as isize)
    });
    let constant = Series::from_fn(order, |j| {
        if j == 0 {
            rat_factorial(b - c)
        } else {
            BigRational::zero()
        }
    });
    let numerator = &x * &head;
    let denominator = &constant - &(&x * &body);
    numerator.div(&denominator)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formulas::f_zigzag;
    use crate::oracle;

    fn stair(k: usize) -> Partition {
        Partition::staircase(k + 1)
    }

    fn empty() -> Partition {
        Partition::new(vec![])
    }

    fn rows_of(d: &Diagram) -> Vec<(usize, usize, usize)> {
        d.rows()
            .into_iter()
            .map(|(r, cols)| (r, cols[0], *cols.last().unwrap()))
            .collect()
    }

    #[test]
    fn the_marked_width_6_example_has_the_documented_rows() {
        let d = strip_diagram(
            6,
            7,
            &Partition::new(vec![4, 2, 1]),
            &Partition::new(vec![3, 3, 1]),
        );
        assert_eq!(d.size(), 44);
        assert_eq!(
            rows_of(&d),
            vec![
                (1, 7, 13),
                (2, 6, 11),
                (3, 5, 10),
                (4, 4, 9),
                (5, 3, 8),
                (6, 1, 7),
                (7, 1, 6),
            ]
        );
    }

    #[test]
    fn the_basic_strip_is_the_shifted_row_staircase() {
        for m in 1..=6 {
            for n in 1..=4 {
                let d = basic_strip(m, n);
                let expected: Vec<(usize, usize, usize)> =
                    (1..=n).map(|i| (i, n - i + 1, n + m - i)).collect();
                assert_eq!(rows_of(&d), expected, "m={m} n={n}");
            }
        }
    }

    #[test]
    fn the_strip_determinant_matches_the_direct_count_on_basic_strips() {
        for m in 2..=6 {
            let stair_part = stair(m / 2);
            for n in 1..=4 {
                if m % 2 == 1 && 2 * n + 1 < m {
                    continue;
                }
                let direct = oracle::count_syt(&basic_strip(m, n));
                let det = f_strip_det(m, n, &stair_part, &stair_part);
                assert_eq!(det, direct, "m={m} n={n}");
            }
        }
    }

    #[test]
    fn the_frozen_width_6_kernel_table_and_count_are_reproduced() {
        let rat = |num: i64, den: i64| {
            BigRational::new(BigInt::from(num), BigInt::from(den))
        };
        assert_eq!(strip_kernel_even(-1, 1, 1), rat(1, 1));
        assert_eq!(strip_kernel_even(-1, 3, 1), rat(-1, 3));
        assert_eq!(strip_kernel_even(-1, 3, 3), rat(5, 72));
        assert_eq!(strip_kernel_even(-1, 5, 1), rat(2, 15));
        assert_eq!(strip_kernel_even(-1, 5, 3), rat(-23, 720));
        assert_eq!(strip_kernel_even(-1, 5, 5), rat(8497, 604800));
        assert_eq!(
            f_strip_det(6, 2, &stair(3), &stair(3)),
            BigUint::from(429u32)
        );
    }

    #[test]
    fn the_zigzag_kernel_gives_zigzag_volumes() {
        // Odd index: 2n + p + q cells, descents {p+2, p+4, ..., p+2n-2}.
        let odd_case = |n: usize, p: usize, q: usize| {
            let size = 2 * n + p + q;
            let descents: Vec<usize> = (1..n).map(|t| p + 2 * t).collect();
            BigRational::new(
                BigInt::from(f_zigzag(size, &descents)),
                BigInt::from(factorial(size)),
            )
        };
        assert_eq!(zigzag_kernel(1, 1, 1), odd_case(1, 1, 1));
        assert_eq!(zigzag_kernel(3, 1, 1), odd_case(2, 1, 1));
        assert_eq!(
            zigzag_kernel(3, 1, 1),
            BigRational::new(BigInt::from(19), BigInt::from(720))
        );
        assert_eq!(zigzag_kernel(5, 2, 1), odd_case(3, 2, 1));
        assert_eq!(zigzag_kernel(3, 2, 2), odd_case(2, 2, 2));

        // Even index: 2n + p + q + 1 cells, descents
        // {p+2, ..., p+2n} followed by {p+2n+1, ..., p+2n+q}.
        let even_case = |n: usize, p: usize, q: usize| {
            let size = 2 * n + p + q + 1;
            let mut descents: Vec<usize> = (1..=n).map(|t| p + 2 * t).collect();
            descents.extend(p + 2 * n + 1..=p + 2 * n + q);
            BigRational::new(
                BigInt::from(f_zigzag(size, &descents)),
                BigInt::from(factorial(size)),
            )
        };
        assert_eq!(zigzag_kernel(2, 1, 1), even_case(1, 1, 1));
        assert_eq!(
            zigzag_kernel(2, 2, 1),
            BigRational::new(BigInt::from(1), BigInt::from(72))
        );
        assert_eq!(zigzag_kernel(2, 2, 1), even_case(1, 2, 1));
        assert_eq!(zigzag_kernel(4, 1, 2), even_case(2, 1, 2));
        assert_eq!(zigzag_kernel(4, 2, 2), even_case(2, 2, 2));
    }

    #[test]
    fn the_width_3_closed_forms_match_the_direct_counts() {
        assert_eq!(f_strip3(2), BigUint::from(14u32));
        assert_eq!(f_strip3(3), BigUint::from(744u32));
        for n in 1..=4 {
            assert_eq!(
                f_strip3_trimmed(n),
                oracle::count_syt(&strip_diagram(3, n, &empty(), &empty())),
                "trimmed n={n}"
            );
            assert_eq!(
                f_strip3_head_cell(n),
                oracle::count_syt(&strip_diagram(
                    3,
                    n,
                    &Partition::new(vec![1]),
                    &empty()
                )),
                "head cell n={n}"
            );
            assert_eq!(
                f_strip3(n),
                oracle::count_syt(&basic_strip(3, n)),
                "basic n={n}"
            );
        }
    }

    #[test]
    fn the_width_4_closed_forms_match_the_direct_counts() {
        assert_eq!(f_strip4(2), BigUint::from(42u32));
        for n in 1..=3 {
            // The trimmed width-4 strip with parameter n has n+1 rows.
            assert_eq!(
                f_strip4_trimmed(n),
                oracle::count_syt(&strip_diagram(4, n + 1, &empty(), &empty())),
                "trimmed n={n}"
            );
            assert_eq!(
                f_strip4(n),
                oracle::count_syt(&basic_strip(4, n)),
                "basic n={n}"
            );
        }
    }

    #[test]
    fn the_width_5_closed_form_matches_the_direct_counts() {
        for n in 2..=4 {
            assert_eq!(
                f_strip5_trimmed(n),
                oracle::count_syt(&strip_diagram(5, n, &empty(), &empty())),
                "trimmed n={n}"
            );
        }
        assert_eq!(f_strip5_trimmed(2), BigUint::from(2u32));
        assert_eq!(f_strip5_trimmed(3), BigUint::from(42u32));
    }

    #[test]
    fn the_strip_determinant_covers_heads_and_tails_beyond_the_basic_ones() {
        let cases: Vec<(usize, usize, Vec<usize>, Vec<usize>)> = vec![
            (3, 2, vec![1], vec![1]),
            (3, 3, vec![1], vec![1]),
            (3, 2, vec![2], vec![1]),
            (3, 3, vec![2], vec![2]),
            (3, 3, vec![5], vec![2]),
            (3, 4, vec![4], vec![]),
            (5, 3, vec![2, 1], vec![2, 1]),
            (5, 4, vec![2, 1], vec![2, 1]),
            (5, 3, vec![2, 2], vec![2, 1]),
            (5, 3, vec![1], vec![]),
            (5, 4, vec![2], vec![2, 2]),
            (5, 3, vec![4, 2], vec![2, 1]),
            (5, 3, vec![5, 2], vec![2, 1]),
            (5, 2, vec![4, 4], vec![3, 3]),
            (7, 3, vec![2, 2, 2], vec![]),
        ];
        for (m, n, head, tail) in cases {
            let head = Partition::new(head);
            let tail = Partition::new(tail);
            let direct = oracle::count_syt(&strip_diagram(m, n, &head, &tail));
            assert_eq!(
                f_strip_det(m, n, &head, &tail),
                direct,
                "m={m} n={n} head={head:?} tail={tail:?}"
            );
        }
    }

    #[test]
    fn the_stanley_strip_has_the_documented_shape() {
        let d = stanley_strip(5, 4, 3, 4);
        assert_eq!(
            rows_of(&d),
            vec![(1, 7, 11), (2, 5, 8), (3, 3, 6), (4, 1, 4)]
        );
        // One row of b = c gives a zigzag; compare against the descent-class count.
        for rows in 1..=4 {
            let a = 3;
            let c = 2;
            let size = a + (rows - 1) * c;
            let descents: Vec<usize> = (1..rows).map(|t| t * c).collect();
            assert_eq!(
                f_stanley_strip(a, c, c, rows),
                f_zigzag(size, &descents),
                "rows={rows}"
            );
        }
    }

    #[test]
    fn the_stanley_series_closed_form_matches_the_row_by_row_sum() {
        for (a, b, c) in [(3, 3, 2), (4, 4, 3), (3, 2, 2)] {
            let direct = stanley_strip_series(a, b, c, 13);
            let closed = stanley_strip_series_closed(a, b, c, 13);
            for t in 0..13 {
                assert_eq!(
                    direct.coeff(t),
                    closed.coeff(t),
                    "a={a} b={b} c={c} coefficient {t}"
                );
            }
        }
    }

    #[test]
    fn the_stanley_counts_match_the_direct_counts_at_desk_scale() {
        for (a, b, c) in [(3, 3, 2), (4, 4, 3), (3, 2, 2)] {
            for rows in 1..=4 {
                let size = a + (rows - 1) * b;
                if size > 12 {
                    continue;
                }
                assert_eq!(
                    f_stanley_strip(a, b, c, rows),
                    oracle::count_syt(&stanley_strip(a, b, c, rows)),
                    "a={a} b={b} c={c} rows={rows}"
                );
            }
        }
    }

    #[test]
    fn equal_row_strips_invert_the_alternating_factorial_sum() {
        // 1 + sum_{rows >= 1} f x^rows / (rows*a)! =
        //   (1 - x/(a-c)! * sum_j (-x)^j/(a+jc)!)^{-1}
        for (a, c) in [(3, 2), (4, 3)] {
            let order = 10;
            let mut coeffs = vec![BigRational::zero(); order];
            coeffs[0] = BigRational::one();
            for rows in 1..order {
                coeffs[rows] =
                    BigRational::from(BigInt::from(f_stanley_strip(a, a, c, rows)))
                        / rat_factorial(rows * a);
            }
            let lhs = Series::from_coeffs(coeffs);

            let x = Series::x_power(1, order);
            let inner_sum = Series::from_fn(order, |j| {
                alternating_sign(j) * inv_factorial((a + j * c) as isize)
                    * inv_factorial((a - c) as isize)
            });
            let one = Series::one(order);
            let rhs = one.div(&(&one - &(&x * &inner_sum)));
            for t in 0..order {
                assert_eq!(lhs.coeff(t), rhs.coeff(t), "a={a} c={c} coefficient {t}");
            }
        }
    }

    #[test]
    fn the_basic_width_3_series_is_x_over_sine() {
        let order = 12;
        let sine_over_x = Series::from_fn(order, |t| {
            if t % 2 == 0 {
                alternating_sign(t / 2) * inv_factorial(t as isize + 1)
            } else {
                BigRational::zero()
            }
        });
        let ratio = sine_over_x.inverse();
        for n in 1..=4 {
            assert_eq!(
                ratio.coeff(2 * n),
                BigRational::new(
                    BigInt::from(f_strip3(n)),
                    BigInt::from(factorial(3 * n))
                ),
                "n={n}"
            );
        }
        for t in (1..order).step_by(2) {
            assert!(ratio.coeff(t).is_zero(), "odd coefficient {t}");
        }
        for n in 1..=4 {
            assert_eq!(f_stanley_strip(3, 3, 2, n), f_strip3(n), "family match n={n}");
        }
    }
}
