//! Counts of standard tableaux for truncated shapes — ordinary or shifted
//! diagrams with cells deleted from the north-east corner — and a few other
//! non-classical shapes with product formulas.
//!
//! The highlights, each checked against the brute-force oracle:
//! * shifted staircases minus a corner cell or corner square, via Catalan
//!   ratios and a two-factor shifted product;
//! * rectangles minus a corner square, counted by superfactorial ratios;
//! * rectangles minus a staircase, via binomials and an explicit ratio of
//!   `E`-products;
//! * a square minus a domino and a rectangle minus most of its first row;
//! * the four-cell-per-row shifted strip, counted by odd-indexed Pell
//!   numbers;
//! * three rows with the middle cell of the second row removed, the simplest
//!   non-line-convex shape with a closed form.

use num::{BigInt, BigRational, BigUint, One};

use crate::arith::{binomial, factorial, rational_to_count};
use crate::diagram::Diagram;
use crate::formulas::{catalan, g_shifted, pell_number, superfactorial};
use crate::partition::{Partition, StrictPartition};

/// The ordinary shape `outer` with `cut.part(i)` cells removed from the east
/// end of row `i` — the rows stay left-justified.
///
/// # Panics
/// Panics if the cut is wider than the row it trims.
pub fn truncated_shape(outer: &Partition, cut: &Partition) -> Diagram {
    let mut cells = Vec::new();
    for i in 1..=outer.len() {
        let keep = outer
            .part(i)
            .checked_sub(cut.part(i))
            .expect("cut exceeds a row of the shape");
        for j in 1..=keep {
            cells.push((i as isize, j as isize));
        }
    }
    Diagram::new(cells)
}

/// The shifted shape `outer` (row `i` occupying columns `i..i + part - 1`)
/// with `cut.part(i)` cells removed from the east end of row `i`.
///
/// # Panics
/// Panics if the cut is as wide as the row it trims, which would empty it.
pub fn truncated_shifted_shape(outer: &StrictPartition, cut: &Partition) -> Diagram {
    let mut cells = Vec::new();
    for i in 1..=outer.len() {
        let keep = outer
            .part(i)
            .checked_sub(cut.part(i))
            .expect("cut exceeds a row of the shape");
        assert!(keep > 0, "cut empties row {i} of the shifted shape");
        for j in i..i + keep {
            cells.push((i as isize, j as isize));
        }
    }
    Diagram::new(cells)
}

/// The number of standard tableaux of the shifted staircase `(n, ..., 1)`,
/// as the product `N! prod_i i!/(2i+1)!` over `0 <= i < n` with `N = C(n+1,2)`.
pub fn g_staircase(n: usize) -> BigUint {
    let size = n * (n + 1) / 2;
    let mut value = BigRational::from(BigInt::from(factorial(size)));
    for i in 0..n {
        value *= BigRational::new(BigInt::from(factorial(i)), BigInt::from(factorial(2 * i + 1)));
    }
    rational_to_count(&value, "shifted staircase product")
}

/// The number of standard tableaux of the shifted staircase `(n, ..., 1)`
/// with its north-east corner cell removed: `g * C_n C_{n-2} / (2 C_{2n-3})`
/// in Catalan numbers, where `g` counts the full staircase.
pub fn g_staircase_minus_cell(n: usize) -> BigUint {
    assert!(n >= 2, "removing the corner cell needs a staircase with at least 2 rows");
    let value = BigRational::from(BigInt::from(g_staircase(n)))
        * BigRational::from(BigInt::from(catalan(n)))
        * BigRational::from(BigInt::from(catalan(n - 2)))
        / (BigRational::from(BigInt::from(2u32)) * BigRational::from(BigInt::from(catalan(2 * n - 3))));
    rational_to_count(&value, "staircase minus corner cell")
}

/// The number of standard tableaux of the shifted staircase `(m+2k, ..., 1)`
/// with a `(k-1) x (k-1)` square removed from its north-east corner.
///
/// The count is `g^a g^b N! M! / ((N-M-1)! (2M+1)!)` where `a` is the strict
/// partition `(m+k+1, ..., m+3, m+1, ..., 1)`, `b` is `(m+k+1, ..., m+3,
/// m+1)`, `N` is the size of the shape and `M = k(2m+k+3)/2 - 1`.
pub fn g_staircase_minus_square(m: usize, k: usize) -> BigUint {
    assert!(k >= 1, "the removed square needs a defined side");
    let mut upper: Vec<usize> = ((m + 3)..=(m + k + 1)).rev().collect();
    let mut a_parts = upper.clone();
    a_parts.extend((1..=m + 1).rev());
    upper.push(m + 1);
    let ga = g_shifted(&StrictPartition::new(a_parts));
    let gb = g_shifted(&StrictPartition::new(upper));
    let n_rows = m + 2 * k;
    let size = n_rows * (n_rows + 1) / 2 - (k - 1) * (k - 1);
    let m_split = k * (2 * m + k + 3) / 2 - 1;
    let value = BigRational::from(BigInt::from(ga * gb))
        * BigRational::from(BigInt::from(factorial(size)))
        * BigRational::from(BigInt::from(factorial(m_split)))
        / BigRational::from(BigInt::from(factorial(size - m_split - 1)))
        / BigRational::from(BigInt::from(factorial(2 * m_split + 1)));
    rational_to_count(&value, "staircase minus corner square")
}

/// The number of standard tableaux of the `rows x width` rectangle, as the
/// superfactorial ratio `(rows*width)! F_rows F_width / F_{rows+width}`.
pub fn f_rectangle(rows: usize, width: usize) -> BigUint {
    let value = BigRational::from(BigInt::from(factorial(rows * width)))
        * BigRational::from(BigInt::from(superfactorial(rows)))
        * BigRational::from(BigInt::from(superfactorial(width)))
        / BigRational::from(BigInt::from(superfactorial(rows + width)));
    rational_to_count(&value, "rectangle by superfactorials")
}

/// The number of standard tableaux of the rectangle `(n+k-1)^(m+k-1)` with a
/// `(k-1) x (k-1)` square removed from its north-east corner:
/// `N! (mk-1)! (nk-1)! (m+n-1)! k / (mk+nk-1)!` times the superfactorial
/// ratio `F_{m-1} F_{n-1} F_{k-1} / F_{m+n+k-1}`, with `N` the size.
pub fn f_rect_minus_square(m: usize, n: usize, k: usize) -> BigUint {
    assert!(m >= 1 && n >= 1 && k >= 1, "all three parameters must be positive");
    let size = (n + k - 1) * (m + k - 1) - (k - 1) * (k - 1);
    let value = BigRational::from(BigInt::from(factorial(size)))
        * BigRational::from(BigInt::from(factorial(m * k - 1)))
        * BigRational::from(BigInt::from(factorial(n * k - 1)))
        * BigRational::from(BigInt::from(factorial(m + n - 1)))
        * BigRational::from(BigInt::from(k))
        / BigRational::from(BigInt::from(factorial(m * k + n * k - 1)))
        * BigRational::from(BigInt::from(superfactorial(m - 1)))
        * BigRational::from(BigInt::from(superfactorial(n - 1)))
        * BigRational::from(BigInt::from(superfactorial(k - 1)))
        / BigRational::from(BigInt::from(superfactorial(m + n + k - 1)));
    rational_to_count(&value, "rectangle minus corner square")
}

/// The number of standard tableaux of the rectangle `(n+1)^(m+1)` with its
/// single north-east corner cell removed — the square-removal count at
/// square side 1.
pub fn f_rect_minus_cell(m: usize, n: usize) -> BigUint {
    f_rect_minus_square(m, n, 2)
}

/// The number of standard tableaux of the `n x n` square with a horizontal
/// domino removed from its north-east corner, for `n >= 2`.
pub fn f_square_minus_domino(n: usize) -> BigUint {
    assert!(n >= 2, "the square must be at least 2 x 2");
    let tn4 = factorial(3 * n - 4);
    let fn2 = superfactorial(n - 2);
    let value = BigRational::from(BigInt::from(factorial(n * n - 2)))
        * BigRational::from(BigInt::from(&tn4 * &tn4))
        * BigRational::from(BigInt::from(6u32))
        / BigRational::from(BigInt::from(factorial(6 * n - 8)))
        / BigRational::from(BigInt::from(factorial(2 * n - 2)))
        / BigRational::from(BigInt::from(factorial(n - 2) * factorial(n - 2)))
        * BigRational::from(BigInt::from(&fn2 * &fn2))
        / BigRational::from(BigInt::from(superfactorial(2 * n - 4)));
    rational_to_count(&value, "square minus domino")
}

/// The number of standard tableaux of the `(k+1) x n` rectangle with all but
/// two cells of its first row removed, for `n >= 2`:
/// `(kn-k)! (kn+n)! / (kn+n-k)!` times `F_k F_n / F_{n+k}`.
pub fn f_rect_minus_almost_row(n: usize, k: usize) -> BigUint {
    assert!(n >= 2, "the surviving part of the first row has 2 cells");
    let value = BigRational::from(BigInt::from(factorial(k * n - k)))
        * BigRational::from(BigInt::from(factorial(k * n + n)))
        / BigRational::from(BigInt::from(factorial(k * n + n - k)))
        * BigRational::from(BigInt::from(superfactorial(k)))
        * BigRational::from(BigInt::from(superfactorial(n)))
        / BigRational::from(BigInt::from(superfactorial(n + k)));
    rational_to_count(&value, "rectangle minus almost a row")
}

/// The ratio ingredient of the staircase-removal count: for even `r` a double
/// product over line indices, for odd `r` a factorial ratio times the even
/// value below it.
fn panova_e(r: usize, p: usize, s: usize) -> BigRational {
    if r % 2 == 1 {
        let half = (r - 1) / 2;
        return BigRational::new(BigInt::from(factorial(half + s)), BigInt::from(factorial(p - half + s)))
            * panova_e(r - 1, p, s);
    }
    let mut value = BigRational::one();
    for l in (r + 1)..(2 * p - r + 2) {
        let base = BigRational::from(BigInt::from(l + 2 * s));
        for _ in 0..r / 2 {
            value /= base.clone();
        }
    }
    for l in 2..=r {
        let base = BigRational::from(BigInt::from((l + 2 * s) * (2 * p - l + 2 * s + 2)));
        for _ in 0..l / 2 {
            value /= base.clone();
        }
    }
    value
}

/// The number of standard tableaux of the `m x n` rectangle with the
/// staircase `(k, ..., 1)` removed from its north-east corner, for
/// `m >= n > k >= 1`: a binomial times a rectangle count, a shifted
/// staircase-segment count, and a ratio of `E`-products.
pub fn f_rect_minus_staircase(m: usize, n: usize, k: usize) -> BigUint {
    assert!(m >= n && n > k && k >= 1, "the parameters must satisfy m >= n > k >= 1");
    let size = m * n - k * (k + 1) / 2;
    let s = n - k - 1;
    let parts: Vec<usize> = (0..=k).map(|i| m - i).filter(|&p| p > 0).collect();
    let value = BigRational::from(BigInt::from(binomial(size, m * s)))
        * BigRational::from(BigInt::from(f_rectangle(m, s)))
        * BigRational::from(BigInt::from(g_shifted(&StrictPartition::new(parts))))
        * panova_e(k + 1, m, s)
        / panova_e(k + 1, m, 0);
    rational_to_count(&value, "rectangle minus staircase")
}

/// The truncated shifted shape with `n` rows of four cells each, row `i`
/// occupying columns `i..i+3`.
pub fn shifted_strip(n: usize) -> Diagram {
    let mut cells = Vec::new();
    for i in 1..=n as isize {
        for j in i..i + 4 {
            cells.push((i, j));
        }
    }
    Diagram::new(cells)
}

/// The number of standard tableaux of the four-cell-per-row shifted strip
/// with `n` rows: the Pell number of index `2n - 1`.
pub fn f_shifted_strip(n: usize) -> BigUint {
    assert!(n >= 1, "the strip needs at least one row");
    pell_number(2 * n - 1)
}

/// Three left-justified rows of lengths `m+3, 3, 3` with the middle cell of
/// the second row removed — a non-line-convex diagram.
pub fn three_rows_minus_middle_box(m: usize) -> Diagram {
    let mut cells = Vec::new();
    for j in 1..=(m as isize + 3) {
        cells.push((1, j));
    }
    cells.push((2, 1));
    cells.push((2, 3));
    for j in 1..=3 {
        cells.push((3, j));
    }
    Diagram::new(cells)
}

/// The number of standard tableaux of the three-row diagram with the middle
/// cell of its second row removed: `(m+5)/10 * C(m+2,2) * C(m+9,2)`.
pub fn f_three_rows_minus_middle_box(m: usize) -> BigUint {
    let value = BigRational::new(BigInt::from(m + 5), BigInt::from(10u32))
        * BigRational::from(BigInt::from(binomial(m + 2, 2)))
        * BigRational::from(BigInt::from(binomial(m + 9, 2)));
    rational_to_count(&value, "three rows minus middle box")
}
