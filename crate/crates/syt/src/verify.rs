//! Cross-check suites behind the `verify` command: each suite replays a family
//! of closed forms, bijections, or generating functions against the
//! brute-force oracle and exhaustive reference computations at a requested
//! scale, and reports how many identities it checked and which ones failed.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num::{BigInt, BigRational, BigUint, One};

use crate::arith::multinomial;
use crate::diagram::{Cell, Diagram};
use crate::formulas::{
    andre_numbers, andre_numbers_by_series, f_ordinary, f_ordinary_det, f_ordinary_hook,
    f_ordinary_product, f_skew_det, f_zigzag, f_zigzag_det_binomial_bound,
    f_zigzag_det_binomial_top, g_shifted, g_shifted_det, g_shifted_hook, g_shifted_product,
    height_at_most_2, height_at_most_3, height_at_most_4, height_at_most_5, sum_f_squared,
    total_syt,
};
use crate::jdt::{rectify_map, rs_inverse, rs_pair, tableau_to_map, SlidePolicy};
use crate::oracle;
use crate::partition::{Partition, StrictPartition};
use crate::perm::Perm;
use crate::qenum::{
    comaj_gf, des_gf, des_maj_gf, des_set_counts, descent_class_det_binomial_gf,
    descent_class_det_factorial_gf, expected_des, height_three_maj_gf, height_two_maj_gf,
    hook_maj_gf, hooks_joint_des_maj_gf, inv_gf, inv_q_catalan, inverse_descent_class_inv_gf,
    inverse_descent_class_maj_gf, inverse_descent_within_maj_gf, maj_gf, perm_inv_gf, perm_maj_gf,
    q_hook_maj_gf, shifted_comaj_gf, shuffle_multinomial_gf, single_position_descent_count,
    total_sign_sum, two_row_des_gf, two_row_maj_gf, winv_gf,
};
use crate::qpoly::QPoly;
use crate::rimhook::{
    drawn_tuple_tableaux, f_r_direct, f_r_hook, f_r_quotient, fomin_lulov_bound,
    is_rim_hook_tableau, r_core, r_quotient, rim_hook_tableaux, sum_f_r, sum_f_r_squared,
};
use crate::sampling::{
    column_insertion_sort, hook_walk_sample, slide_sort, PointerTableau, SeedRng,
};
use crate::shape::ShapeSpec;
use crate::strips::{
    basic_strip, f_strip3, f_strip3_head_cell, f_strip3_trimmed, f_strip4, f_strip4_trimmed,
    f_strip5_trimmed, f_strip_det, stanley_strip_series, stanley_strip_series_closed,
    strip_diagram,
};
use crate::tableau::Tableau;
use crate::truncated::{
    f_rect_minus_almost_row, f_rect_minus_cell, f_rect_minus_square, f_rect_minus_staircase,
    f_rectangle, f_shifted_strip, f_square_minus_domino, f_three_rows_minus_middle_box,
    g_staircase, g_staircase_minus_cell, g_staircase_minus_square, shifted_strip,
    three_rows_minus_middle_box, truncated_shape, truncated_shifted_shape,
};
use crate::words::{
    braid_factor_count, evaluate_word, is_unimodal, is_vexillary, modified_weak_order_chain_count,
    reduced_word_count, reduced_words, shifted_tableau_to_reduced_word, shuffle_permutation,
    signed_longest_reduced_word_count, sorted_code, tableau_to_reduced_word,
    unimodal_interval_chain_count, unimodal_permutation,
};

/// The outcome of one verification suite: a name, the number of identities
/// checked, and a label for each one that failed.
pub struct SuiteReport {
    pub name: &'static str,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &'static str) -> Self {
        SuiteReport { name, checks: 0, failures: Vec::new() }
    }

    /// Record one checked identity, keeping its label if it failed.
    fn check(&mut self, ok: bool, label: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(label());
        }
    }

    /// Whether every checked identity held.
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// The individual suite names accepted alongside `all`.
pub const SCOPES: [&str; 5] = ["formulas", "bijections", "q", "rimhook", "words"];

/// Run the requested scope at the given scale.  Suites run one after another
/// and every report is returned, pass or fail.
pub fn run_scope(scope: &str, max_size: usize) -> Result<Vec<SuiteReport>, String> {
    match scope {
        "all" => Ok(vec![
            formulas_suite(max_size),
            bijections_suite(max_size),
            q_suite(max_size),
            rimhook_suite(max_size),
            words_suite(max_size),
        ]),
        "formulas" => Ok(vec![formulas_suite(max_size)]),
        "bijections" => Ok(vec![bijections_suite(max_size)]),
        "q" => Ok(vec![q_suite(max_size)]),
        "rimhook" => Ok(vec![rimhook_suite(max_size)]),
        "words" => Ok(vec![words_suite(max_size)]),
        other => Err(format!(
            "unknown scope {other:?}: expected all, formulas, bijections, q, rimhook, or words"
        )),
    }
}

/// All subsets of `{1, ..., n-1}`, each sorted increasingly.
fn subsets(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for i in 1..n {
        for j in 0..out.len() {
            let mut s = out[j].clone();
            s.push(i);
            out.push(s);
        }
    }
    out
}

/// Every subpartition of `la`, the empty partition and `la` itself included.
fn subpartitions(la: &Partition) -> Vec<Partition> {
    let mut out = Vec::new();
    for m in 0..=la.size() {
        for mu in Partition::all(m) {
            if la.contains(&mu) {
                out.push(mu);
            }
        }
    }
    out
}

fn counting_formula_checks(r: &mut SuiteReport, max_size: usize) {
    // Ordinary shapes: hook product, rational product, determinant, and the
    // direct count agree.
    for n in 0..=max_size {
        for la in Partition::all(n) {
            let f = f_ordinary_hook(&la);
            let ok = f == f_ordinary_product(&la)
                && f == f_ordinary_det(&la)
                && f == oracle::count_syt(&la.diagram());
            r.check(ok, || format!("ordinary count at {:?}", la.parts()));
        }
    }
    // Skew shapes: the determinant matches the direct count for every subshape.
    for n in 0..=max_size.min(8) {
        for la in Partition::all(n) {
            for mu in subpartitions(&la) {
                let d = la.diagram().difference(&mu.diagram());
                r.check(f_skew_det(&la, &mu) == oracle::count_syt(&d), || {
                    format!("skew count at {:?} / {:?}", la.parts(), mu.parts())
                });
            }
        }
    }
    // Shifted shapes: hook product, bare product, determinant, and the direct
    // count agree.
    for n in 0..=max_size {
        for la in StrictPartition::all(n) {
            let g = g_shifted_hook(&la);
            let ok = g == g_shifted_product(&la)
                && g == g_shifted_det(&la)
                && g == oracle::count_syt(&la.diagram());
            r.check(ok, || format!("shifted count at {:?}", la.parts()));
        }
    }
}

fn zigzag_checks(r: &mut SuiteReport, max_size: usize) {
    // Zigzags: the three determinants, the direct count, and the descent
    // class of the rise set all agree.
    for n in 1..=max_size.min(7) {
        let perms = Perm::all(n);
        for s in subsets(n) {
            let d = ShapeSpec::Zigzag { n, s: s.clone() }.materialize().unwrap();
            let v = f_zigzag(n, &s);
            let by_class = perms.iter().filter(|p| p.des_set() == s).count();
            let ok = v == f_zigzag_det_binomial_top(n, &s)
                && v == f_zigzag_det_binomial_bound(n, &s)
                && v == oracle::count_syt(&d)
                && v == BigUint::from(by_class);
            r.check(ok, || format!("zigzag count at n={n}, rises {s:?}"));
        }
    }
    // Alternating counts: the pairwise recursion and the secant-tangent
    // series agree, and both match the alternating zigzags directly.
    let by_recursion = andre_numbers(12);
    r.check(by_recursion == andre_numbers_by_series(12), || {
        "alternating numbers, recursion vs series".into()
    });
    for k in 1..=max_size.min(8) {
        let s: Vec<usize> = (1..k).step_by(2).collect();
        let d = ShapeSpec::Zigzag { n: k, s }.materialize().unwrap();
        r.check(by_recursion[k] == oracle::count_syt(&d), || {
            format!("alternating number at {k}")
        });
    }
}

fn thin_shape_checks(r: &mut SuiteReport, max_size: usize) {
    // Sums over all shapes of a given size: the involution count, the
    // factorial, and the bounded-height closed forms.
    for n in 0..=max_size.min(10) {
        let counts: Vec<(usize, BigUint)> =
            Partition::all(n).iter().map(|la| (la.len(), f_ordinary(la))).collect();
        let total: BigUint = counts.iter().map(|(_, f)| f.clone()).sum();
        r.check(total == total_syt(n), || format!("total count at n={n}"));
        let squares: BigUint = counts.iter().map(|(_, f)| f * f).sum();
        r.check(squares == sum_f_squared(n), || format!("squared total at n={n}"));
        for h in 2..=5usize {
            let bounded: BigUint =
                counts.iter().filter(|(len, _)| *len <= h).map(|(_, f)| f.clone()).sum();
            let formula = match h {
                2 => height_at_most_2(n),
                3 => height_at_most_3(n),
                4 => height_at_most_4(n),
                _ => height_at_most_5(n),
            };
            r.check(bounded == formula, || format!("height at most {h} at n={n}"));
        }
    }
}

fn strip_checks(r: &mut SuiteReport, max_size: usize) {
    // Basic strips: the determinant matches the direct count.
    for m in 2..=max_size.min(6) {
        let stair = Partition::staircase(m / 2 + 1);
        for n in 1..=4 {
            if m % 2 == 1 && 2 * n + 1 < m {
                continue;
            }
            let direct = oracle::count_syt(&basic_strip(m, n));
            r.check(f_strip_det(m, n, &stair, &stair) == direct, || {
                format!("basic strip determinant at m={m}, n={n}")
            });
        }
    }
    // Odd-width strips with heads and tails beyond the basic ones.
    let cases: Vec<(usize, usize, Vec<usize>, Vec<usize>)> = vec![
        (3, 2, vec![1], vec![1]),
        (3, 3, vec![2], vec![2]),
        (3, 4, vec![4], vec![]),
        (5, 3, vec![2, 1], vec![2, 1]),
        (5, 3, vec![2, 2], vec![2, 1]),
        (5, 4, vec![2], vec![2, 2]),
        (7, 3, vec![2, 2, 2], vec![]),
    ];
    for (m, n, head, tail) in cases {
        let head = Partition::new(head);
        let tail = Partition::new(tail);
        let direct = oracle::count_syt(&strip_diagram(m, n, &head, &tail));
        let ok = f_strip_det(m, n, &head, &tail) == direct;
        r.check(ok, || {
            format!(
                "strip determinant at m={m}, n={n}, head {:?}, tail {:?}",
                head.parts(),
                tail.parts()
            )
        });
    }
    // Closed forms for widths 3, 4, and 5.
    let cap = if max_size >= 5 { 3 } else { 2 };
    let empty = Partition::empty();
    let one = Partition::new(vec![1]);
    for n in 1..=cap {
        r.check(f_strip3(n) == oracle::count_syt(&basic_strip(3, n)), || {
            format!("width-3 closed form at n={n}")
        });
        r.check(f_strip4(n) == oracle::count_syt(&basic_strip(4, n)), || {
            format!("width-4 closed form at n={n}")
        });
        let trimmed = strip_diagram(3, n, &empty, &empty);
        r.check(f_strip3_trimmed(n) == oracle::count_syt(&trimmed), || {
            format!("trimmed width-3 closed form at n={n}")
        });
        let head_cell = strip_diagram(3, n, &one, &empty);
        r.check(f_strip3_head_cell(n) == oracle::count_syt(&head_cell), || {
            format!("width-3 head-cell closed form at n={n}")
        });
        let trimmed4 = strip_diagram(4, n + 1, &empty, &empty);
        r.check(f_strip4_trimmed(n) == oracle::count_syt(&trimmed4), || {
            format!("trimmed width-4 closed form at n={n}")
        });
    }
    for n in 2..=cap.max(2) {
        let trimmed5 = strip_diagram(5, n, &empty, &empty);
        r.check(f_strip5_trimmed(n) == oracle::count_syt(&trimmed5), || {
            format!("trimmed width-5 closed form at n={n}")
        });
    }
    // Diagonal strips: the reciprocal-series generating function reproduces
    // the row-by-row counts.
    let order = if max_size >= 6 { 13 } else { 9 };
    for (a, b, c) in [(3, 3, 2), (4, 4, 3), (3, 2, 2)] {
        let direct = stanley_strip_series(a, b, c, order);
        let closed = stanley_strip_series_closed(a, b, c, order);
        let ok = (0..order).all(|t| direct.coeff(t) == closed.coeff(t));
        r.check(ok, || format!("diagonal strip series at a={a}, b={b}, c={c}"));
    }
}

fn truncated_checks(r: &mut SuiteReport) {
    // Every truncated closed form at small instances, against the direct
    // count.
    for n in 2..=4usize {
        let outer: Vec<usize> = (1..=n).rev().collect();
        let staircase = StrictPartition::new(outer.clone());
        r.check(g_staircase(n) == oracle::count_syt(&staircase.diagram()), || {
            format!("shifted staircase at n={n}")
        });
        let cut = truncated_shifted_shape(&staircase, &Partition::new(vec![1]));
        r.check(g_staircase_minus_cell(n) == oracle::count_syt(&cut), || {
            format!("staircase minus corner cell at n={n}")
        });
    }
    for (m, k, side) in [(0usize, 2usize, 2usize), (1, 2, 2), (0, 3, 3)] {
        let rows = m + 2 * k;
        let outer: Vec<usize> = (1..=rows).rev().collect();
        let cut = Partition::rectangle(side - 1, side - 1);
        let d = truncated_shifted_shape(&StrictPartition::new(outer), &cut);
        r.check(g_staircase_minus_square(m, k) == oracle::count_syt(&d), || {
            format!("staircase minus square at m={m}, k={k}")
        });
    }
    for (rows, width) in [(2usize, 2usize), (2, 3), (3, 3)] {
        let direct = oracle::count_syt(&Partition::rectangle(rows, width).diagram());
        r.check(f_rectangle(rows, width) == direct, || {
            format!("rectangle at {rows} x {width}")
        });
    }
    for (m, n, k) in [(1usize, 1usize, 2usize), (2, 2, 2), (1, 2, 3)] {
        let outer = Partition::rectangle(m + k - 1, n + k - 1);
        let cut = Partition::rectangle(k - 1, k - 1);
        let d = truncated_shape(&outer, &cut);
        r.check(f_rect_minus_square(m, n, k) == oracle::count_syt(&d), || {
            format!("rectangle minus square at m={m}, n={n}, k={k}")
        });
    }
    for (m, n) in [(1usize, 1usize), (2, 1), (2, 2)] {
        let outer = Partition::rectangle(m + 1, n + 1);
        let d = truncated_shape(&outer, &Partition::new(vec![1]));
        r.check(f_rect_minus_cell(m, n) == oracle::count_syt(&d), || {
            format!("rectangle minus corner cell at m={m}, n={n}")
        });
    }
    for n in 2..=3usize {
        let d = truncated_shape(&Partition::rectangle(n, n), &Partition::new(vec![2]));
        r.check(f_square_minus_domino(n) == oracle::count_syt(&d), || {
            format!("square minus domino at n={n}")
        });
    }
    for (n, k) in [(2usize, 1usize), (3, 1), (2, 2)] {
        let outer = Partition::rectangle(k + 1, n);
        let cut = if n > 2 { Partition::new(vec![n - 2]) } else { Partition::empty() };
        let d = truncated_shape(&outer, &cut);
        r.check(f_rect_minus_almost_row(n, k) == oracle::count_syt(&d), || {
            format!("rectangle minus almost-row at n={n}, k={k}")
        });
    }
    for (m, n, k) in [(2usize, 2usize, 1usize), (3, 2, 1), (3, 3, 2)] {
        let cut: Vec<usize> = (1..=k).rev().collect();
        let d = truncated_shape(&Partition::rectangle(m, n), &Partition::new(cut));
        r.check(f_rect_minus_staircase(m, n, k) == oracle::count_syt(&d), || {
            format!("rectangle minus staircase at m={m}, n={n}, k={k}")
        });
    }
    for n in 1..=3usize {
        r.check(f_shifted_strip(n) == oracle::count_syt(&shifted_strip(n)), || {
            format!("shifted strip at n={n}")
        });
    }
    for m in 0..=1usize {
        let direct = oracle::count_syt(&three_rows_minus_middle_box(m));
        r.check(f_three_rows_minus_middle_box(m) == direct, || {
            format!("three rows minus middle box at m={m}")
        });
    }
}

fn formulas_suite(max_size: usize) -> SuiteReport {
    let mut r = SuiteReport::new("formulas");
    counting_formula_checks(&mut r, max_size);
    zigzag_checks(&mut r, max_size);
    thin_shape_checks(&mut r, max_size);
    strip_checks(&mut r, max_size);
    truncated_checks(&mut r);
    r
}

/// The sorted cell set of a tableau.
fn cells_of(t: &Tableau) -> Vec<Cell> {
    let mut cells: Vec<Cell> = t.entries().map(|(c, _)| c).collect();
    cells.sort_unstable();
    cells
}

/// Check one sorting procedure on all fillings of a shape: outputs standard
/// and of the same shape, the pointer pair injective, and every fiber of size
/// exactly the hook product.
fn sorting_checks(
    r: &mut SuiteReport,
    la: &Partition,
    fillings: &[Tableau],
    label: &str,
    sort: impl Fn(&Tableau) -> (Tableau, PointerTableau),
) {
    let hook_product: BigUint =
        la.hook_lengths().iter().flatten().map(|&h| BigUint::from(h)).product();
    let f = f_ordinary(la);
    let mut outputs: BTreeSet<(String, String)> = BTreeSet::new();
    let mut fibers: BTreeMap<String, BigUint> = BTreeMap::new();
    let mut sorted_ok = true;
    for filling in fillings {
        let (t, pointers) = sort(filling);
        if !t.is_standard() || cells_of(&t) != cells_of(filling) {
            sorted_ok = false;
        }
        let text = t.to_text();
        *fibers.entry(text.clone()).or_default() += BigUint::one();
        outputs.insert((text, pointers.to_text()));
    }
    r.check(sorted_ok, || format!("{label} outputs at {:?}", la.parts()));
    r.check(outputs.len() == fillings.len(), || {
        format!("{label} injectivity at {:?}", la.parts())
    });
    let fiber_ok =
        BigUint::from(fibers.len()) == f && fibers.values().all(|c| *c == hook_product);
    r.check(fiber_ok, || format!("{label} fibers at {:?}", la.parts()));
}

fn bijections_suite(max_size: usize) -> SuiteReport {
    let mut r = SuiteReport::new("bijections");
    // The insertion correspondence: standard pairs of equal shape, inverted
    // exactly, exhausting all pairs, with the longest monotone subsequences
    // read off the first row and column.
    for n in 1..=max_size.min(7) {
        let perms = Perm::all(n);
        let total = perms.len();
        let mut seen: BTreeSet<(String, String)> = BTreeSet::new();
        let mut pairs_ok = true;
        let mut monotone_ok = true;
        for pi in perms {
            let (p, q) = rs_pair(&pi);
            let cells = cells_of(&p);
            if !(p.is_standard() && q.is_standard() && cells == cells_of(&q)) {
                pairs_ok = false;
            }
            if rs_inverse(&p, &q) != pi {
                pairs_ok = false;
            }
            let d = Diagram::from_cells(cells);
            if d.width() != pi.lis() || d.height() != pi.lds() {
                monotone_ok = false;
            }
            seen.insert((p.to_text(), q.to_text()));
        }
        r.check(pairs_ok, || format!("insertion pairs at n={n}"));
        r.check(seen.len() == total, || format!("insertion exhaustiveness at n={n}"));
        r.check(monotone_ok, || format!("monotone subsequence lengths at n={n}"));
    }
    // Sliding a skew tableau to a straight shape does not depend on the order
    // the inner corners are consumed in.
    for n in 1..=max_size.min(6) {
        for la in Partition::all(n) {
            for mu in subpartitions(&la) {
                if mu.is_empty() || mu.size() == la.size() {
                    continue;
                }
                let d = la.diagram().difference(&mu.diagram());
                for t in oracle::enumerate_syt(&d) {
                    let map = tableau_to_map(&t);
                    let a = rectify_map(map.clone(), SlidePolicy::LexMin);
                    let b = rectify_map(map.clone(), SlidePolicy::LexMax);
                    let c = rectify_map(map, SlidePolicy::ColMin);
                    r.check(a == b && a == c, || {
                        format!(
                            "slide order independence at {:?} / {:?}",
                            la.parts(),
                            mu.parts()
                        )
                    });
                }
            }
        }
    }
    // The two sorting procedures act bijectively on all fillings.
    for n in 1..=max_size.min(7) {
        for la in Partition::all(n) {
            let fillings = oracle::all_fillings(&la.diagram());
            sorting_checks(&mut r, &la, &fillings, "column insertion", column_insertion_sort);
            sorting_checks(&mut r, &la, &fillings, "row slides", slide_sort);
        }
    }
    // The hook walk sampler is statistically uniform on three reference
    // shapes at significance 1e-6.
    let cases: &[(&[usize], f64)] = &[(&[2, 2], 23.93), (&[3, 2], 33.38), (&[2, 2, 1], 33.38)];
    for &(parts, threshold) in cases {
        let lambda = Partition::new(parts.to_vec());
        let all = oracle::enumerate_syt(&lambda.diagram());
        let index: HashMap<&Tableau, usize> =
            all.iter().enumerate().map(|(i, t)| (t, i)).collect();
        let mut counts = vec![0usize; all.len()];
        let samples = 10_000;
        let mut rng = SeedRng::new(2024);
        for _ in 0..samples {
            let t = hook_walk_sample(&lambda, &mut rng);
            counts[index[&t]] += 1;
        }
        let expected = samples as f64 / all.len() as f64;
        let chi2: f64 = counts.iter().map(|&c| (c as f64 - expected).powi(2) / expected).sum();
        r.check(chi2 < threshold, || {
            format!("hook walk uniformity at {:?}: chi2 = {chi2:.2}", lambda.parts())
        });
    }
    r
}

fn q_suite(max_size: usize) -> SuiteReport {
    let mut r = SuiteReport::new("q");
    let perm_cap = max_size.min(6);
    let shape_cap = max_size.min(8);
    // Major index and inversions over the whole symmetric group.
    for n in 0..=perm_cap {
        let factorial = QPoly::q_factorial(n);
        r.check(perm_maj_gf(n) == factorial && perm_inv_gf(n) == factorial, || {
            format!("permutation statistics at n={n}")
        });
    }
    for n in 1..=perm_cap {
        for s in subsets(n) {
            // Shuffles: bounding the inverse descents gives the q-multinomial.
            r.check(
                inverse_descent_within_maj_gf(n, &s) == shuffle_multinomial_gf(n, &s),
                || format!("shuffle distribution at n={n}, s={s:?}"),
            );
            // Exact inverse descent classes: both determinants, and the same
            // answer for the major index and inversions.
            let by_maj = inverse_descent_class_maj_gf(n, &s);
            let ok = by_maj == descent_class_det_factorial_gf(n, &s)
                && by_maj == descent_class_det_binomial_gf(n, &s)
                && by_maj == inverse_descent_class_inv_gf(n, &s);
            r.check(ok, || format!("descent class determinants at n={n}, s={s:?}"));
            // Zigzags carry the class distribution for the major index and
            // the weak inversion count, and their descent sets mirror the
            // class exactly.
            let diagram = ShapeSpec::Zigzag { n, s: s.clone() }.materialize().unwrap();
            r.check(maj_gf(&diagram) == by_maj && winv_gf(&diagram) == by_maj, || {
                format!("zigzag statistics at n={n}, s={s:?}")
            });
            let mut from_perms: BTreeMap<Vec<usize>, BigUint> = BTreeMap::new();
            for pi in Perm::all(n) {
                if pi.inverse().des_set() == s {
                    *from_perms.entry(pi.des_set()).or_default() += BigUint::one();
                }
            }
            r.check(des_set_counts(&diagram) == from_perms, || {
                format!("zigzag descent sets at n={n}, s={s:?}")
            });
        }
    }
    // Hooks: the major index distribution and the joint distribution with the
    // descent count.
    for n in 2..=max_size.min(7) {
        let mut joint: Vec<QPoly> = Vec::new();
        for k in 0..n {
            let mut row_parts = vec![n - k];
            row_parts.extend(std::iter::repeat(1).take(k));
            let diagram = Partition::new(row_parts).diagram();
            r.check(maj_gf(&diagram) == hook_maj_gf(n, k), || {
                format!("hook major index at n={n}, k={k}")
            });
            for (d, poly) in des_maj_gf(&diagram).into_iter().enumerate() {
                if joint.len() <= d {
                    joint.resize(d + 1, QPoly::zero());
                }
                joint[d] = &joint[d] + &poly;
            }
        }
        r.check(joint == hooks_joint_des_maj_gf(n), || {
            format!("hook joint distribution at n={n}")
        });
    }
    // Two-row shapes, squares, and their bounded-height sums.
    for n in 1..=shape_cap {
        for k in 0..=(n / 2) {
            let parts = if k == 0 { vec![n] } else { vec![n - k, k] };
            let diagram = Partition::new(parts).diagram();
            r.check(maj_gf(&diagram) == two_row_maj_gf(n, k), || {
                format!("two-row major index at n={n}, k={k}")
            });
        }
    }
    for n in 0..=max_size.min(5) {
        let diagram =
            if n == 0 { Diagram::empty() } else { Partition::rectangle(2, n).diagram() };
        r.check(inv_gf(&diagram) == inv_q_catalan(n), || {
            format!("square inversion distribution at n={n}")
        });
    }
    for n in 1..=max_size.min(7) {
        let mut height2 = QPoly::zero();
        let mut height3 = QPoly::zero();
        for la in Partition::all(n) {
            if la.len() <= 3 {
                let gf = maj_gf(&la.diagram());
                if la.len() <= 2 {
                    height2 += &gf;
                }
                height3 += &gf;
            }
        }
        r.check(height2 == height_two_maj_gf(n), || format!("height two at n={n}"));
        r.check(height3 == height_three_maj_gf(n), || format!("height three at n={n}"));
    }
    // Two-row inversion distributions squared sum to the recursive q-Catalan.
    for n in 1..=max_size.min(7) {
        let mut acc = QPoly::zero();
        for k in 0..=(n / 2) {
            let parts = if k == 0 { vec![n] } else { vec![n - k, k] };
            let gf = inv_gf(&Partition::new(parts).diagram());
            let d = n - 2 * k;
            let shift = if d < 2 { 0 } else { d * (d - 1) / 2 };
            let term = &QPoly::q_power(shift) * &(&gf * &gf);
            acc += &term;
        }
        r.check(acc == inv_q_catalan(n), || format!("squared two-row sum at n={n}"));
    }
    // Two-row descent counts.
    for m in 1..=max_size.min(6) {
        for k in 1..=m.min(9 - m) {
            let diagram = Partition::new(vec![m, k]).diagram();
            r.check(des_gf(&diagram) == two_row_des_gf(m, k), || {
                format!("two-row descent count at m={m}, k={k}")
            });
        }
    }
    // Descents at one fixed position are position-independent, and the
    // expected count follows from them.
    for n in 2..=max_size.min(7) {
        for la in Partition::all(n) {
            let tableaux = oracle::enumerate_syt(&la.diagram());
            let single = single_position_descent_count(&la);
            let position_ok = (1..n).all(|k| {
                let at_k = tableaux.iter().filter(|t| t.des_set().contains(&k)).count();
                BigUint::from(at_k) == single
            });
            r.check(position_ok, || format!("fixed-position descents at {:?}", la.parts()));
            let total: usize = tableaux.iter().map(|t| t.des_set().len()).sum();
            let average =
                BigRational::new(BigInt::from(total), BigInt::from(tableaux.len()));
            r.check(average == expected_des(&la), || {
                format!("expected descents at {:?}", la.parts())
            });
        }
    }
    // The q-analogue of the hook product matches enumeration shape by shape.
    for n in 1..=max_size.min(7) {
        for la in Partition::all(n) {
            r.check(maj_gf(&la.diagram()) == q_hook_maj_gf(&la), || {
                format!("hook-product major index at {:?}", la.parts())
            });
        }
    }
    // The shifted product matches the complementary major index.
    for n in 1..=shape_cap {
        for la in StrictPartition::all(n) {
            r.check(comaj_gf(&la.diagram()) == shifted_comaj_gf(&la), || {
                format!("shifted complementary major index at {:?}", la.parts())
            });
        }
    }
    // Signs summed over all shapes of a given size give a power of two.
    for n in 1..=shape_cap {
        let mut total = BigInt::from(0);
        for la in Partition::all(n) {
            for t in oracle::enumerate_syt(&la.diagram()) {
                total += BigInt::from(t.sign());
            }
        }
        r.check(total == total_sign_sum(n), || format!("sign sum at n={n}"));
    }
    r
}

fn rimhook_suite(max_size: usize) -> SuiteReport {
    let mut r = SuiteReport::new("rimhook");
    // Counts three ways, grounded by the exhaustive tableau list, with the
    // counting bound alongside.
    for step in 2..=4usize {
        for total in (step..=max_size).step_by(step) {
            for la in Partition::all(total) {
                let direct = f_r_direct(&la, step);
                let ok = direct == f_r_quotient(&la, step) && direct == f_r_hook(&la, step);
                r.check(ok, || format!("strip counts at {:?}, r={step}", la.parts()));
                let tableaux = rim_hook_tableaux(&la, step);
                let listed = BigUint::from(tableaux.len()) == direct
                    && tableaux.iter().all(|t| is_rim_hook_tableau(&la, step, t));
                r.check(listed, || format!("strip tableau list at {:?}, r={step}", la.parts()));
                r.check(fomin_lulov_bound(&la, step), || {
                    format!("strip count bound at {:?}, r={step}", la.parts())
                });
            }
        }
    }
    // Totals over all shapes of each size.
    for step in 2..=4usize {
        for n in 1..=(max_size / step) {
            let total = step * n;
            let mut sum = BigUint::from(0u32);
            let mut squares = BigUint::from(0u32);
            for la in Partition::all(total) {
                let f = f_r_direct(&la, step);
                squares += &f * &f;
                sum += f;
            }
            r.check(sum == sum_f_r(n, step), || format!("strip total at n={n}, r={step}"));
            r.check(squares == sum_f_r_squared(n, step), || {
                format!("squared strip total at n={n}, r={step}")
            });
        }
    }
    // Cores and quotients: sizes balance and the core is a fixed point.
    for step in 2..=5usize {
        for n in 0..=max_size {
            for la in Partition::all(n) {
                let core = r_core(&la, step);
                let quotient_size: usize =
                    r_quotient(&la, step).iter().map(|p| p.size()).sum();
                let ok = core.size() + step * quotient_size == la.size()
                    && r_core(&core, step) == core;
                r.check(ok, || format!("core and quotient at {:?}, r={step}", la.parts()));
            }
        }
    }
    // Tableaux of a drawn tuple are counted by the multinomial times the
    // component counts.
    let tuples: Vec<Vec<Partition>> = vec![
        vec![Partition::new(vec![1]), Partition::new(vec![1])],
        vec![Partition::new(vec![2, 1]), Partition::new(vec![1])],
        vec![Partition::new(vec![2]), Partition::new(vec![2])],
        vec![Partition::new(vec![2, 1]), Partition::new(vec![2]), Partition::new(vec![1])],
    ];
    for components in tuples {
        let sizes: Vec<usize> = components.iter().map(|p| p.size()).collect();
        let expected: BigUint =
            multinomial(&sizes) * components.iter().map(f_ordinary).product::<BigUint>();
        let listed = drawn_tuple_tableaux(&components).len();
        r.check(BigUint::from(listed) == expected, || {
            format!("drawn tuple count at {sizes:?}")
        });
    }
    r
}

fn words_suite(max_size: usize) -> SuiteReport {
    let mut r = SuiteReport::new("words");
    // The longest element: its reduced words are counted by the staircase.
    for n in 2..=max_size.min(7) {
        r.check(
            reduced_word_count(&Perm::longest(n)) == f_ordinary(&Partition::staircase(n)),
            || format!("longest element count at n={n}"),
        );
    }
    // The sorted inversion code counts the reduced words exactly for the
    // permutations avoiding 2143.
    for n in 1..=max_size.min(6) {
        for pi in Perm::all(n) {
            let agree = reduced_word_count(&pi) == f_ordinary(&sorted_code(&pi));
            r.check(agree == is_vexillary(&pi), || {
                format!("sorted code count at {:?}", pi.images())
            });
        }
    }
    // Shuffles: the tableaux of the shape map onto the reduced words of the
    // dominant permutation, one to one.
    for size in 1..=max_size.min(7) {
        for la in Partition::all(size) {
            let k = la.len();
            let l = k + la.part(1);
            let pi = shuffle_permutation(&la, k, l);
            let tableaux = oracle::enumerate_syt(&la.diagram());
            let words: BTreeSet<Vec<usize>> =
                tableaux.iter().map(|t| tableau_to_reduced_word(t, k)).collect();
            let evaluate_ok =
                words.iter().all(|w| w.len() == size && evaluate_word(l, w) == pi);
            let ok = evaluate_ok
                && words.len() == tableaux.len()
                && BigUint::from(tableaux.len()) == reduced_word_count(&pi);
            r.check(ok, || format!("shuffle words at {:?}", la.parts()));
        }
    }
    // Braid moves: across all reduced words of the longest element, there is
    // one adjacent braid factor per word on average.
    for n in 3..=max_size.min(5) {
        let words = reduced_words(&Perm::longest(n));
        let total: usize = words.iter().map(|w| braid_factor_count(w)).sum();
        r.check(total == words.len(), || format!("braid factor total at n={n}"));
    }
    // The signed longest element is counted by the square shape.
    let signed_cap = if max_size >= 6 { 3 } else { 2 };
    for n in 1..=signed_cap {
        r.check(
            signed_longest_reduced_word_count(n) == f_ordinary(&Partition::rectangle(n, n)),
            || format!("signed longest element at n={n}"),
        );
    }
    // Maximal chains in the modified weak order match the shifted staircase.
    for n in 2..=max_size.min(5) {
        r.check(
            modified_weak_order_chain_count(n) == g_shifted(&StrictPartition::staircase(n - 1)),
            || format!("modified weak order chains at n={n}"),
        );
    }
    // Unimodal targets: shifted tableaux map onto distinct reduced words, and
    // interval chains recover the shifted count.
    let ambient = max_size.min(5).max(2);
    for (la, n) in shifted_shapes_within(ambient) {
        let pi = unimodal_permutation(&la, n);
        let tableaux = oracle::enumerate_syt(&la.diagram());
        let words: BTreeSet<Vec<usize>> =
            tableaux.iter().map(shifted_tableau_to_reduced_word).collect();
        let ok = is_unimodal(&pi)
            && pi.inv() == la.size()
            && words.len() == tableaux.len()
            && words.iter().all(|w| evaluate_word(n, w) == pi);
        r.check(ok, || format!("unimodal words at {:?}", la.parts()));
        r.check(unimodal_interval_chain_count(&la, n) == g_shifted(&la), || {
            format!("unimodal chains at {:?}", la.parts())
        });
    }
    r
}

/// Strict partitions whose shifted diagram fits inside the staircase of the
/// symmetric group on `n` letters, paired with that ambient size.
fn shifted_shapes_within(n: usize) -> Vec<(StrictPartition, usize)> {
    let mut out = Vec::new();
    for size in 1..=n * (n - 1) / 2 {
        for la in StrictPartition::all(size) {
            if la.parts().iter().enumerate().all(|(i, &p)| i + 1 + p <= n) {
                out.push((la, n));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes_at_desk_scale() {
        let reports = run_scope("all", 5).unwrap();
        assert_eq!(reports.len(), 5);
        for report in &reports {
            assert!(report.passed(), "suite {} failed: {:?}", report.name, report.failures);
            assert!(report.checks > 0, "suite {} checked nothing", report.name);
        }
        let names: Vec<&str> = reports.iter().map(|r| r.name).collect();
        assert_eq!(names, SCOPES.to_vec());
    }

    #[test]
    fn unknown_scopes_are_rejected_and_known_ones_accepted() {
        assert!(run_scope("nonsense", 3).is_err());
        for scope in SCOPES {
            let reports = run_scope(scope, 3).unwrap();
            assert_eq!(reports.len(), 1);
            assert_eq!(reports[0].name, scope);
            assert!(reports[0].passed(), "{:?}", reports[0].failures);
        }
    }

    #[test]
    fn failures_are_reported_with_their_labels() {
        let mut report = SuiteReport::new("formulas");
        report.check(true, || unreachable!());
        report.check(false, || "two plus two is five".to_string());
        assert_eq!(report.checks, 2);
        assert!(!report.passed());
        assert_eq!(report.failures, vec!["two plus two is five".to_string()]);
    }
}
