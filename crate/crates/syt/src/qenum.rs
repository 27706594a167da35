//! Generating functions for tableau statistics.
//!
//! Each statistic on standard tableaux — descent set, major index, inversion
//! and weak inversion numbers, sign — can be summed into a polynomial in `q`
//! (or `t` for descent counts), and for many shape families that polynomial
//! has a closed form:
//!
//! * rectangular-frame determinants: `sum q^maj = [n]_q! det(1 / [s_{j+1} - s_i]_q!)`
//!   over a descent class or a zigzag,
//! * the `q`-analogue of the hook length formula:
//!   `sum q^maj = q^(sum_j C(la'_j, 2)) [n]_q! / prod_c [h_c]_q`,
//! * `q`-binomial differences for two-row shapes, `q`-Catalan and `q`-Motzkin
//!   sums for bounded height, and a shifted product formula for the comajor
//!   index.
//!
//! The enumeration-side functions here work on any diagram; the closed forms
//! are checked against them in the tests.

use std::collections::BTreeMap;

use num::{BigInt, BigRational, BigUint, Zero};

use crate::arith::{binomial, rational_to_count};
use crate::diagram::Diagram;
use crate::oracle::enumerate_syt;
use crate::partition::{Partition, StrictPartition};
use crate::perm::Perm;
use crate::qpoly::QPoly;

/// Sum of `q^maj(T)` over the standard tableaux of a diagram.
pub fn maj_gf(diagram: &Diagram) -> QPoly {
    let mut acc = QPoly::zero();
    for t in enumerate_syt(diagram) {
        acc.add_shifted(&QPoly::one(), t.maj());
    }
    acc
}

/// Sum of `q^(n*des(T) - maj(T))` (the comajor index) over the standard tableaux of a diagram.
pub fn comaj_gf(diagram: &Diagram) -> QPoly {
    let n = diagram.size();
    let mut acc = QPoly::zero();
    for t in enumerate_syt(diagram) {
        let des = t.des_set();
        let comaj: usize = des.iter().map(|&i| n - i).sum();
        acc.add_shifted(&QPoly::one(), comaj);
    }
    acc
}

/// Sum of `q^inv(T)` over the standard tableaux of a diagram.
pub fn inv_gf(diagram: &Diagram) -> QPoly {
    let mut acc = QPoly::zero();
    for t in enumerate_syt(diagram) {
        acc.add_shifted(&QPoly::one(), t.inv());
    }
    acc
}

/// Sum of `q^winv(T)` over the standard tableaux of a diagram.
pub fn winv_gf(diagram: &Diagram) -> QPoly {
    let mut acc = QPoly::zero();
    for t in enumerate_syt(diagram) {
        acc.add_shifted(&QPoly::one(), t.winv());
    }
    acc
}

/// Sum of `t^des(T)` over the standard tableaux of a diagram.
pub fn des_gf(diagram: &Diagram) -> QPoly {
    let mut acc = QPoly::zero();
    for t in enumerate_syt(diagram) {
        acc.add_shifted(&QPoly::one(), t.des_set().len());
    }
    acc
}

/// Joint distribution of `(des, maj)`: entry `d` is the sum of `q^maj` over tableaux with `d` descents.
pub fn des_maj_gf(diagram: &Diagram) -> Vec<QPoly> {
    let mut rows: Vec<QPoly> = Vec::new();
    for t in enumerate_syt(diagram) {
        let des = t.des_set().len();
        if rows.len() <= des {
            rows.resize(des + 1, QPoly::zero());
        }
        rows[des].add_shifted(&QPoly::one(), t.maj());
    }
    if rows.is_empty() {
        rows.push(QPoly::one());
    }
    rows
}

/// How many standard tableaux of a diagram have each descent set.
pub fn des_set_counts(diagram: &Diagram) -> BTreeMap<Vec<usize>, BigUint> {
    let mut counts = BTreeMap::new();
    for t in enumerate_syt(diagram) {
        *counts.entry(t.des_set()).or_insert_with(BigUint::zero) += 1u32;
    }
    counts
}

/// Sum of `q^maj(pi)` over all permutations of `n`; equals `[n]_q!`.
pub fn perm_maj_gf(n: usize) -> QPoly {
    let mut acc = QPoly::zero();
    for pi in Perm::all(n) {
        acc.add_shifted(&QPoly::one(), pi.maj());
    }
    acc
}

/// Sum of `q^inv(pi)` over all permutations of `n`; equals `[n]_q!`.
pub fn perm_inv_gf(n: usize) -> QPoly {
    let mut acc = QPoly::zero();
    for pi in Perm::all(n) {
        acc.add_shifted(&QPoly::one(), pi.inv());
    }
    acc
}

/// Sum of `q^maj(pi)` over permutations of `n` whose inverse has descent set contained in `s`.
pub fn inverse_descent_within_maj_gf(n: usize, s: &[usize]) -> QPoly {
    let mut acc = QPoly::zero();
    for pi in Perm::all(n) {
        let des = pi.inverse().des_set();
        if des.iter().all(|d| s.contains(d)) {
            acc.add_shifted(&QPoly::one(), pi.maj());
        }
    }
    acc
}

/// Sum of `q^maj(pi)` over permutations of `n` whose inverse has descent set exactly `s`.
pub fn inverse_descent_class_maj_gf(n: usize, s: &[usize]) -> QPoly {
    let mut acc = QPoly::zero();
    for pi in Perm::all(n) {
        if pi.inverse().des_set() == s {
            acc.add_shifted(&QPoly::one(), pi.maj());
        }
    }
    acc
}

/// Sum of `q^inv(pi)` over permutations of `n` whose inverse has descent set exactly `s`.
pub fn inverse_descent_class_inv_gf(n: usize, s: &[usize]) -> QPoly {
    let mut acc = QPoly::zero();
    for pi in Perm::all(n) {
        if pi.inverse().des_set() == s {
            acc.add_shifted(&QPoly::one(), pi.inv());
        }
    }
    acc
}

/// The Gaussian multinomial for the composition cut by `s` inside `n`:
/// the maj generating function of the permutations whose inverse descends only within `s`.
pub fn shuffle_multinomial_gf(n: usize, s: &[usize]) -> QPoly {
    let mut parts = Vec::new();
    let mut prev = 0;
    for &b in s {
        assert!(prev < b && b < n, "descent positions must rise inside 1..n");
        parts.push(b - prev);
        prev = b;
    }
    parts.push(n - prev);
    QPoly::q_multinomial(&parts)
}

/// Determinant of a matrix of polynomials by cofactor expansion along the first row.
fn qpoly_det(matrix: &[Vec<QPoly>]) -> QPoly {
    let k = matrix.len();
    if k == 0 {
        return QPoly::one();
    }
    if k == 1 {
        return matrix[0][0].clone();
    }
    let mut det = QPoly::zero();
    for (j, entry) in matrix[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<QPoly>> = matrix[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        let term = entry * &qpoly_det(&minor);
        if j % 2 == 0 {
            det = &det + &term;
        } else {
            det = &det - &term;
        }
    }
    det
}

/// `[n]_q! det(1 / [s_{j+1} - s_i]_q!)` with `s_0 = 0`, `s_{k+1} = n`:
/// the maj generating function of a descent class, and of the zigzag with rise set `s`.
pub fn descent_class_det_factorial_gf(n: usize, s: &[usize]) -> QPoly {
    let mut bounds = vec![0];
    bounds.extend_from_slice(s);
    bounds.push(n);
    for w in bounds.windows(2) {
        assert!(w[0] < w[1], "descent positions must rise inside 1..n");
    }
    let k = bounds.len() - 1;
    // Clearing the denominators: each entry [n]_q! / [s_{j+1} - s_i]_q! is the
    // polynomial [s_{j+1} - s_i + 1]_q ... [n]_q (zero when the argument is
    // negative), so the determinant carries an exact factor [n]_q!^(k-1).
    let matrix: Vec<Vec<QPoly>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    let hi = bounds[j + 1] as isize;
                    let lo = bounds[i] as isize;
                    if hi < lo {
                        return QPoly::zero();
                    }
                    let mut acc = QPoly::one();
                    for m in (hi - lo + 1)..=(n as isize) {
                        acc = &acc * &QPoly::q_int(m as usize);
                    }
                    acc
                })
                .collect()
        })
        .collect();
    let mut denom = QPoly::one();
    let factorial_n = QPoly::q_factorial(n);
    for _ in 1..k {
        denom = &denom * &factorial_n;
    }
    qpoly_det(&matrix).div_exact(&denom)
}

/// `det([n - s_i choose s_{j+1} - s_i]_q)`: the same descent-class maj generating function
/// written with Gaussian binomial entries.
pub fn descent_class_det_binomial_gf(n: usize, s: &[usize]) -> QPoly {
    let mut bounds = vec![0];
    bounds.extend_from_slice(s);
    bounds.push(n);
    let k = bounds.len() - 1;
    let matrix: Vec<Vec<QPoly>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    if bounds[j + 1] < bounds[i] {
                        QPoly::zero()
                    } else {
                        QPoly::q_binomial(n - bounds[i], bounds[j + 1] - bounds[i])
                    }
                })
                .collect()
        })
        .collect();
    qpoly_det(&matrix)
}

/// Maj generating function of the hook `(n - k, 1^k)`: `q^C(k+1, 2) [n - 1 choose k]_q`.
pub fn hook_maj_gf(n: usize, k: usize) -> QPoly {
    assert!(k < n, "the hook needs a first row, so k < n");
    let shift = k * (k + 1) / 2;
    let mut acc = QPoly::zero();
    acc.add_shifted(&QPoly::q_binomial(n - 1, k), shift);
    acc
}

/// Joint `(des, maj)` distribution over all hooks of size `n`:
/// the coefficient of `t^d` in `prod_{i=1}^{n-1} (1 + t q^i)`, returned by descent count.
pub fn hooks_joint_des_maj_gf(n: usize) -> Vec<QPoly> {
    let mut rows = vec![QPoly::one()];
    for i in 1..n {
        let mut next = vec![QPoly::zero(); rows.len() + 1];
        for (d, poly) in rows.iter().enumerate() {
            next[d] = &next[d] + poly;
            next[d + 1].add_shifted(poly, i);
        }
        rows = next;
    }
    rows
}

/// The `q`-Catalan polynomial `C_m(q) = [2m choose m]_q / [m + 1]_q`.
pub fn q_catalan(m: usize) -> QPoly {
    QPoly::q_binomial(2 * m, m).div_exact(&QPoly::q_int(m + 1))
}

/// Maj generating function of the two-row shape `(n - k, k)`:
/// `[n choose k]_q - [n choose k - 1]_q`.
pub fn two_row_maj_gf(n: usize, k: usize) -> QPoly {
    assert!(2 * k <= n, "the second row cannot be longer than the first");
    if k == 0 {
        return QPoly::one();
    }
    &QPoly::q_binomial(n, k) - &QPoly::q_binomial(n, k - 1)
}

/// Maj generating function over tableaux of height at most two and size `n`:
/// `[n choose floor(n/2)]_q`.
pub fn height_two_maj_gf(n: usize) -> QPoly {
    QPoly::q_binomial(n, n / 2)
}

/// Maj generating function over tableaux of height at most three and size `n`:
/// the `q`-Motzkin sum `sum_k q^k [n choose 2k]_q C_k(q)`.
pub fn height_three_maj_gf(n: usize) -> QPoly {
    let mut acc = QPoly::zero();
    for k in 0..=(n / 2) {
        let term = &QPoly::q_binomial(n, 2 * k) * &q_catalan(k);
        acc.add_shifted(&term, k);
    }
    acc
}

/// The inversion `q`-Catalan polynomials: `C~_0 = 1`,
/// `C~_{n+1} = sum_k q^k C~_k C~_{n-k}`.
pub fn inv_q_catalan(n: usize) -> QPoly {
    let mut table: Vec<QPoly> = vec![QPoly::one()];
    for m in 0..n {
        let mut next = QPoly::zero();
        for k in 0..=m {
            let term = &table[k] * &table[m - k];
            next.add_shifted(&term, k);
        }
        table.push(next);
    }
    table.pop().unwrap()
}

/// Descent generating function of the two-row shape `(m, k)` with `m >= k >= 1`:
/// `sum_d (m - k + 1)/k C(k, d) C(m, d - 1) t^d`.
pub fn two_row_des_gf(m: usize, k: usize) -> QPoly {
    assert!(m >= k && k >= 1, "the rows must satisfy m >= k >= 1");
    let mut coeffs = vec![BigInt::zero()];
    let scale = BigRational::new(BigInt::from(m - k + 1), BigInt::from(k));
    for d in 1..=k {
        let c = &scale
            * BigRational::from_integer(BigInt::from(
                binomial(k, d) * binomial(m, d - 1),
            ));
        coeffs.push(BigInt::from(rational_to_count(&c, "two-row descent coefficient")));
    }
    QPoly::from_coeffs(coeffs)
}

/// How many standard tableaux of an ordinary shape have a descent at one fixed
/// position (the count is the same for every position `1 <= k <= n - 1`):
/// `(1/2 - (sum_i C(la_i, 2) - sum_j C(la'_j, 2)) / (n(n-1))) f^la`.
pub fn single_position_descent_count(la: &Partition) -> BigUint {
    let n = la.diagram().size();
    assert!(n >= 2, "a descent needs at least two entries");
    let count = crate::formulas::f_ordinary(la);
    let spread = row_column_spread(la);
    let pairs = BigInt::from(n * (n - 1));
    let fraction = BigRational::new(&pairs / 2 - spread, pairs);
    rational_to_count(
        &(fraction * BigRational::from_integer(BigInt::from(count))),
        "single-position descent count",
    )
}

/// Average number of descents over the standard tableaux of an ordinary shape:
/// `(n - 1)/2 - (sum_i C(la_i, 2) - sum_j C(la'_j, 2)) / n`.
pub fn expected_des(la: &Partition) -> BigRational {
    let n = la.diagram().size();
    assert!(n >= 1, "the shape must be nonempty");
    let spread = BigRational::from_integer(row_column_spread(la));
    BigRational::new(BigInt::from(n - 1), BigInt::from(2))
        - spread / BigRational::from_integer(BigInt::from(n))
}

/// `sum_i C(la_i, 2) - sum_j C(la'_j, 2)`.
fn row_column_spread(la: &Partition) -> BigInt {
    let rows: BigUint = la.parts().iter().map(|&p| binomial(p, 2)).sum();
    let cols: BigUint = la
        .conjugate()
        .parts()
        .iter()
        .map(|&p| binomial(p, 2))
        .sum();
    BigInt::from(rows) - BigInt::from(cols)
}

/// The `q`-analogue of the hook length formula for an ordinary shape:
/// `sum q^maj = q^(sum_j C(la'_j, 2)) [n]_q! / prod_c [h_c]_q`.
pub fn q_hook_maj_gf(la: &Partition) -> QPoly {
    q_hook_tuple_maj_gf(std::slice::from_ref(la))
}

/// The `q`-hook formula for a tuple of ordinary shapes, drawn as one diagram:
/// `sum q^maj = q^(sum C(column, 2)) [n]_q! / prod [h_c]_q` with `n` the total size,
/// the column sum over all components, and the hooks taken within each component.
pub fn q_hook_tuple_maj_gf(components: &[Partition]) -> QPoly {
    let n: usize = components.iter().map(|la| la.diagram().size()).sum();
    let mut shift = 0usize;
    let mut hooks = QPoly::one();
    for la in components {
        for &col in la.conjugate().parts() {
            shift += col * (col - 1) / 2;
        }
        for (i, &part) in la.parts().iter().enumerate() {
            for j in 1..=part {
                hooks = &hooks * &QPoly::q_int(la.hook_length(i + 1, j));
            }
        }
    }
    let mut num = QPoly::zero();
    num.add_shifted(&QPoly::q_factorial(n), shift);
    num.div_exact(&hooks)
}

/// Comajor-index generating function for a shifted shape:
/// `sum q^(n*des - maj) = [n]_q! / prod_i [la_i]_q! * prod_{i<j} (q^la_j - q^la_i) / (1 - q^(la_i + la_j))`.
pub fn shifted_comaj_gf(la: &StrictPartition) -> QPoly {
    let n = la.as_partition().diagram().size();
    let parts = la.parts();
    // Assemble numerator and denominator fully before the one exact division:
    // the pairwise factors only cancel against the whole product.
    let mut num = QPoly::q_factorial(n);
    let mut den = QPoly::one();
    for &p in parts {
        den = &den * &QPoly::q_factorial(p);
    }
    let power = |k: usize| {
        let mut p = QPoly::zero();
        p.add_shifted(&QPoly::one(), k);
        p
    };
    for i in 0..parts.len() {
        for j in (i + 1)..parts.len() {
            num = &num * &(&power(parts[j]) - &power(parts[i]));
            den = &den * &(&QPoly::one() - &power(parts[i] + parts[j]));
        }
    }
    num.div_exact(&den)
}

/// Sum of the signs of all standard tableaux of all ordinary shapes of `n`:
/// `2^floor(n/2)`.
pub fn total_sign_sum(n: usize) -> BigInt {
    let mut acc = BigInt::zero();
    for la in Partition::all(n) {
        for t in enumerate_syt(&la.diagram()) {
            acc += BigInt::from(t.sign());
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shape::ShapeSpec;
    use num::One;

    fn subsets(n: usize) -> Vec<Vec<usize>> {
        let mut out = vec![vec![]];
        for i in 1..n {
            let mut with: Vec<Vec<usize>> = out
                .iter()
                .map(|s| {
                    let mut t = s.clone();
                    t.push(i);
                    t
                })
                .collect();
            out.append(&mut with);
        }
        out
    }

    #[test]
    fn maj_and_inv_on_permutations_both_give_the_q_factorial() {
        for n in 0..=6 {
            let factorial = QPoly::q_factorial(n);
            assert_eq!(perm_maj_gf(n), factorial, "maj at n={n}");
            assert_eq!(perm_inv_gf(n), factorial, "inv at n={n}");
        }
    }

    #[test]
    fn shuffles_with_bounded_inverse_descents_give_the_q_multinomial() {
        for n in 1..=6 {
            for s in subsets(n) {
                assert_eq!(
                    inverse_descent_within_maj_gf(n, &s),
                    shuffle_multinomial_gf(n, &s),
                    "n={n}, s={s:?}"
                );
            }
        }
    }

    #[test]
    fn descent_classes_match_both_determinants_for_maj_and_inv() {
        for n in 1..=6 {
            for s in subsets(n) {
                let by_maj = inverse_descent_class_maj_gf(n, &s);
                let by_inv = inverse_descent_class_inv_gf(n, &s);
                let det_factorial = descent_class_det_factorial_gf(n, &s);
                let det_binomial = descent_class_det_binomial_gf(n, &s);
                assert_eq!(by_maj, det_factorial, "factorial det, n={n}, s={s:?}");
                assert_eq!(by_maj, det_binomial, "binomial det, n={n}, s={s:?}");
                assert_eq!(by_maj, by_inv, "maj vs inv, n={n}, s={s:?}");
            }
        }
    }

    #[test]
    fn zigzag_maj_and_winv_match_the_descent_class_determinant() {
        for n in 1..=6 {
            for s in subsets(n) {
                let spec = format!(
                    "zz:{n}:{}",
                    s.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
                );
                let diagram = ShapeSpec::parse(&spec).unwrap().materialize().unwrap();
                let det = descent_class_det_factorial_gf(n, &s);
                assert_eq!(maj_gf(&diagram), det, "maj, n={n}, s={s:?}");
                assert_eq!(winv_gf(&diagram), det, "winv, n={n}, s={s:?}");
            }
        }
    }

    #[test]
    fn zigzag_descent_sets_mirror_inverse_descent_sets_of_shuffles() {
        for n in 1..=6 {
            for s in subsets(n) {
                let spec = format!(
                    "zz:{n}:{}",
                    s.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
                );
                let diagram = ShapeSpec::parse(&spec).unwrap().materialize().unwrap();
                let mut from_perms: BTreeMap<Vec<usize>, BigUint> = BTreeMap::new();
                for pi in Perm::all(n) {
                    if pi.des_set() == s {
                        *from_perms
                            .entry(pi.inverse().des_set())
                            .or_insert_with(BigUint::zero) += 1u32;
                    }
                }
                assert_eq!(des_set_counts(&diagram), from_perms, "n={n}, s={s:?}");
            }
        }
    }

    #[test]
    fn hook_descent_sets_run_over_the_k_subsets_exactly_once() {
        for n in 2..=7 {
            let mut joint: Vec<QPoly> = Vec::new();
            for k in 0..n {
                let mut row_parts = vec![n - k];
                row_parts.extend(std::iter::repeat(1).take(k));
                let diagram = Partition::new(row_parts).diagram();
                let counts = des_set_counts(&diagram);
                assert!(
                    counts.values().all(|c| *c == BigUint::one()),
                    "each descent set once, n={n}, k={k}"
                );
                assert_eq!(counts.len(), binomial(n - 1, k).try_into().unwrap());
                assert_eq!(maj_gf(&diagram), hook_maj_gf(n, k), "maj, n={n}, k={k}");
                for (d, poly) in des_maj_gf(&diagram).into_iter().enumerate() {
                    if joint.len() <= d {
                        joint.resize(d + 1, QPoly::zero());
                    }
                    joint[d] = &joint[d] + &poly;
                }
            }
            assert_eq!(joint, hooks_joint_des_maj_gf(n), "joint product, n={n}");
        }
    }

    #[test]
    fn two_row_maj_is_a_q_binomial_difference_and_squares_are_q_catalan() {
        for n in 1..=8 {
            for k in 0..=(n / 2) {
                let mut parts = vec![n - k];
                if k > 0 {
                    parts.push(k);
                }
                let diagram = Partition::new(parts).diagram();
                assert_eq!(maj_gf(&diagram), two_row_maj_gf(n, k), "n={n}, k={k}");
            }
        }
        for m in 1..=4 {
            let diagram = Partition::new(vec![m, m]).diagram();
            let mut shifted = QPoly::zero();
            shifted.add_shifted(&q_catalan(m), m);
            assert_eq!(maj_gf(&diagram), shifted, "square m={m}");
        }
    }

    #[test]
    fn bounded_height_maj_sums_are_q_binomial_and_q_motzkin() {
        for n in 1..=7 {
            let mut height2 = QPoly::zero();
            let mut height3 = QPoly::zero();
            for la in Partition::all(n) {
                if la.len() <= 2 {
                    height2 = &height2 + &maj_gf(&la.diagram());
                }
                if la.len() <= 3 {
                    height3 = &height3 + &maj_gf(&la.diagram());
                }
            }
            assert_eq!(height2, height_two_maj_gf(n), "height 2, n={n}");
            assert_eq!(height3, height_three_maj_gf(n), "height 3, n={n}");
        }
    }

    #[test]
    fn bounded_height_descent_sets_match_pattern_avoiding_involutions() {
        for n in 1..=6 {
            for height in 2..=4usize {
                let pattern: Vec<usize> = (1..=height + 1).rev().collect();
                let mut from_tableaux: BTreeMap<Vec<usize>, BigUint> = BTreeMap::new();
                for la in Partition::all(n) {
                    if la.len() <= height {
                        for (set, count) in des_set_counts(&la.diagram()) {
                            *from_tableaux.entry(set).or_insert_with(BigUint::zero) += count;
                        }
                    }
                }
                let mut from_involutions: BTreeMap<Vec<usize>, BigUint> = BTreeMap::new();
                for pi in Perm::all(n) {
                    if pi.is_involution() && pi.avoids(&pattern) {
                        *from_involutions
                            .entry(pi.des_set())
                            .or_insert_with(BigUint::zero) += 1u32;
                    }
                }
                assert_eq!(from_tableaux, from_involutions, "n={n}, height={height}");
            }
        }
    }

    #[test]
    fn inversions_on_squares_give_the_recursive_q_catalan() {
        for n in 0..=5 {
            let diagram = if n == 0 {
                Diagram::empty()
            } else {
                Partition::new(vec![n, n]).diagram()
            };
            assert_eq!(inv_gf(&diagram), inv_q_catalan(n), "n={n}");
        }
    }

    #[test]
    fn two_row_inversion_gfs_square_summed_give_the_q_catalan() {
        for n in 1..=7 {
            let mut acc = QPoly::zero();
            for k in 0..=(n / 2) {
                let mut parts = vec![n - k];
                if k > 0 {
                    parts.push(k);
                }
                let g = inv_gf(&Partition::new(parts).diagram());
                let square = &g * &g;
                let d = n - 2 * k;
                acc.add_shifted(&square, if d < 2 { 0 } else { d * (d - 1) / 2 });
            }
            assert_eq!(acc, inv_q_catalan(n), "n={n}");
        }
    }

    #[test]
    fn two_row_descent_counts_follow_the_binomial_formula() {
        for m in 1..=6 {
            for k in 1..=m.min(9 - m) {
                let diagram = Partition::new(vec![m, k]).diagram();
                assert_eq!(des_gf(&diagram), two_row_des_gf(m, k), "m={m}, k={k}");
            }
        }
    }

    #[test]
    fn descents_at_a_fixed_position_do_not_depend_on_the_position() {
        for n in 2..=7 {
            for la in Partition::all(n) {
                let expected = single_position_descent_count(&la);
                let tableaux = enumerate_syt(&la.diagram());
                for k in 1..n {
                    let count = tableaux
                        .iter()
                        .filter(|t| t.des_set().contains(&k))
                        .count();
                    assert_eq!(
                        BigUint::from(count),
                        expected,
                        "la={:?}, k={k}",
                        la.parts()
                    );
                }
                let total: usize = tableaux.iter().map(|t| t.des_set().len()).sum();
                let average = BigRational::new(BigInt::from(total), BigInt::from(tableaux.len()));
                assert_eq!(average, expected_des(&la), "average, la={:?}", la.parts());
            }
        }
    }

    fn compositions(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in 1..=n {
            for mut rest in compositions(n - first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }

    #[test]
    fn descent_windows_agree_for_compositions_with_the_same_parts() {
        // Rearranging the parts of a composition carries the surviving
        // positions of one cut to the surviving positions of the other
        // (blocks of equal size correspond, interior offsets match), and the
        // descent sets restricted to the survivors keep the same distribution
        // under that matching.
        for n in [5usize, 6] {
            for la in Partition::all(n) {
                let tableaux = enumerate_syt(&la.diagram());
                // Encode Des(T) minus the cuts as (block size, index among
                // blocks of that size, offset inside the block) triples.
                let window = |comp: &[usize]| -> BTreeMap<Vec<(usize, usize, usize)>, usize> {
                    let mut blocks = Vec::new();
                    let mut seen: BTreeMap<usize, usize> = BTreeMap::new();
                    let mut start = 0;
                    for &size in comp {
                        let occurrence = seen.entry(size).or_insert(0);
                        blocks.push((size, *occurrence, start));
                        *occurrence += 1;
                        start += size;
                    }
                    let mut counts = BTreeMap::new();
                    for t in &tableaux {
                        let des = t.des_set();
                        let mut kept: Vec<(usize, usize, usize)> = Vec::new();
                        for &(size, occurrence, start) in &blocks {
                            for offset in 1..size {
                                if des.contains(&(start + offset)) {
                                    kept.push((size, occurrence, offset));
                                }
                            }
                        }
                        kept.sort_unstable();
                        *counts.entry(kept).or_insert(0) += 1;
                    }
                    counts
                };
                let mut by_partition: BTreeMap<
                    Vec<usize>,
                    BTreeMap<Vec<(usize, usize, usize)>, usize>,
                > = BTreeMap::new();
                for comp in compositions(n) {
                    let mut sorted = comp.clone();
                    sorted.sort_unstable_by(|a, b| b.cmp(a));
                    let counts = window(&comp);
                    match by_partition.entry(sorted) {
                        std::collections::btree_map::Entry::Vacant(slot) => {
                            slot.insert(counts);
                        }
                        std::collections::btree_map::Entry::Occupied(seen) => {
                            assert_eq!(
                                *seen.get(),
                                counts,
                                "la={:?}, comp={comp:?}",
                                la.parts()
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn the_q_hook_formula_matches_enumeration_on_ordinary_shapes() {
        for n in 1..=7 {
            for la in Partition::all(n) {
                assert_eq!(
                    maj_gf(&la.diagram()),
                    q_hook_maj_gf(&la),
                    "la={:?}",
                    la.parts()
                );
            }
        }
        let two_one = q_hook_maj_gf(&Partition::new(vec![2, 1]));
        assert_eq!(two_one, QPoly::from_coeffs(vec![0.into(), 1.into(), 1.into()]));
    }

    #[test]
    fn the_q_hook_formula_extends_to_drawn_tuples() {
        let single_cells = [Partition::new(vec![1]), Partition::new(vec![1])];
        assert_eq!(
            q_hook_tuple_maj_gf(&single_cells),
            QPoly::from_coeffs(vec![1.into(), 1.into()])
        );
        let tuples: Vec<Vec<Partition>> = vec![
            vec![Partition::new(vec![2, 1]), Partition::new(vec![1])],
            vec![Partition::new(vec![2]), Partition::new(vec![2])],
            vec![
                Partition::new(vec![1]),
                Partition::new(vec![1]),
                Partition::new(vec![1]),
            ],
            vec![Partition::new(vec![2, 2]), Partition::new(vec![2])],
            vec![Partition::new(vec![3, 1]), Partition::new(vec![1, 1])],
        ];
        for components in tuples {
            let drawn = crate::rimhook::draw_tuple(&components);
            assert_eq!(
                maj_gf(&drawn),
                q_hook_tuple_maj_gf(&components),
                "components={:?}",
                components.iter().map(|c| c.parts().to_vec()).collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn the_shifted_comaj_product_matches_enumeration() {
        let shapes = [
            vec![2, 1],
            vec![3, 1],
            vec![3, 2],
            vec![4, 1],
            vec![3, 2, 1],
            vec![4, 2],
            vec![4, 3],
            vec![4, 2, 1],
            vec![5, 2, 1],
            vec![4, 3, 1],
        ];
        for parts in shapes {
            let la = StrictPartition::new(parts.clone());
            assert_eq!(
                comaj_gf(&la.diagram()),
                shifted_comaj_gf(&la),
                "la={parts:?}"
            );
        }
        let three_one = shifted_comaj_gf(&StrictPartition::new(vec![3, 1]));
        assert_eq!(three_one, QPoly::from_coeffs(vec![0.into(), 1.into(), 1.into()]));
    }

    #[test]
    fn signs_summed_over_all_shapes_give_a_power_of_two() {
        for n in 1..=8 {
            assert_eq!(
                total_sign_sum(n),
                BigInt::from(2u32).pow((n / 2) as u32),
                "n={n}"
            );
        }
    }
}
