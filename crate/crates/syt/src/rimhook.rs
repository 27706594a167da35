//! Rim hook (border strip) combinatorics: boundary words, `r`-cores and
//! `r`-quotients, and the enumeration of standard rim hook tableaux.
//!
//! The boundary of a partition, walked from the southwest end to the
//! northeast end, spells a binary word with east steps recorded as 1 and
//! north steps as 0; the word extends conceptually by 0s to the left and 1s
//! to the right. Position `p` carries the *natural index*
//! `#(1s weakly left) − #(0s strictly right)`, which increases by exactly 1
//! per step and is invariant under padding, so it gives canonical
//! coordinates. Removing an `r`-rim hook is exactly the exchange of a 1 at
//! index `i` with a 0 at index `i + r`; iterating until no exchange is
//! possible produces the `r`-core, and the subwords on the `r` residue
//! classes of the natural index spell the `r`-quotient.
//!
//! A standard `r`-rim hook tableau of shape `λ ⊢ rn` labels cells with
//! `1..n`, each label filling one rim hook, so that every prefix of labels
//! forms a partition shape. Their number `f_r^λ` is nonzero exactly when
//! the `r`-core is empty, and then equals the number of standard tableau
//! tuples of the `r`-quotient `(λ⁰, …, λ^{r−1})`:
//! `binom(n; |λ⁰|, …)·∏ f^{λⁱ}`, or equivalently
//! `n! / ∏_{r | h_c} (h_c/r)` over the cells whose hook length is divisible
//! by `r`.

use std::collections::{BTreeMap, HashMap};

use num::BigUint;

use crate::arith::{binomial, double_factorial, factorial, multinomial};
use crate::diagram::{Cell, Diagram};
use crate::formulas::f_ordinary;
use crate::partition::Partition;
use crate::tableau::Tableau;

/// The boundary word of a partition with its natural-index anchor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryWord {
    bits: Vec<bool>,
    first_index: isize,
}

impl BoundaryWord {
    /// The boundary word of `λ`: southwest to northeast, east = 1 (true),
    /// north = 0 (false).
    pub fn from_partition(la: &Partition) -> Self {
        let parts = la.parts();
        let mut bits = Vec::new();
        for i in (0..parts.len()).rev() {
            let next = if i + 1 < parts.len() { parts[i + 1] } else { 0 };
            bits.extend(std::iter::repeat(true).take(parts[i] - next));
            bits.push(false);
        }
        let first_index = 1 - parts.len() as isize;
        BoundaryWord { bits, first_index }
    }

    /// The word as booleans (true = east step).
    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// The natural index of position `p`.
    pub fn natural_index(&self, p: usize) -> isize {
        self.first_index + p as isize
    }

    /// The partition spelled by the word: each north step closes a row
    /// whose length is the number of east steps before it.
    pub fn to_partition(&self) -> Partition {
        let mut rows = Vec::new();
        let mut easts = 0;
        for &b in &self.bits {
            if b {
                easts += 1;
            } else {
                rows.push(easts);
            }
        }
        rows.reverse();
        while rows.last() == Some(&0) {
            rows.pop();
        }
        Partition::new(rows)
    }

    /// All single `r`-rim-hook removals: each swaps a 1 with the 0 exactly
    /// `r` positions to its right. Returns the resulting partitions.
    pub fn hook_removals(&self, r: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        for p in 0..self.bits.len().saturating_sub(r) {
            if self.bits[p] && !self.bits[p + r] {
                let mut next = self.clone();
                next.bits[p] = false;
                next.bits[p + r] = true;
                out.push(next.to_partition());
            }
        }
        out
    }
}

/// The `r`-core: what remains after removing `r`-rim hooks as long as
/// possible. The result does not depend on the removal order.
pub fn r_core(la: &Partition, r: usize) -> Partition {
    assert!(r >= 1, "strip size must be positive");
    let mut word = BoundaryWord::from_partition(la);
    loop {
        let mut changed = false;
        for p in 0..word.bits.len().saturating_sub(r) {
            if word.bits[p] && !word.bits[p + r] {
                word.bits[p] = false;
                word.bits[p + r] = true;
                changed = true;
            }
        }
        if !changed {
            return word.to_partition();
        }
    }
}

/// The `r`-quotient `(λ⁰, …, λ^{r−1})`: component `i` is spelled by the
/// subword of positions with natural index `≡ i (mod r)`.
pub fn r_quotient(la: &Partition, r: usize) -> Vec<Partition> {
    assert!(r >= 1, "strip size must be positive");
    let word = BoundaryWord::from_partition(la);
    let mut classes: Vec<Vec<bool>> = vec![Vec::new(); r];
    for (p, &b) in word.bits.iter().enumerate() {
        let class = word.natural_index(p).rem_euclid(r as isize) as usize;
        classes[class].push(b);
    }
    classes
        .into_iter()
        .map(|bits| BoundaryWord { bits, first_index: 0 }.to_partition())
        .collect()
}

/// The number of standard `r`-rim hook tableaux of shape `λ`, by dynamic
/// programming over single-hook removals.
pub fn f_r_direct(la: &Partition, r: usize) -> BigUint {
    fn go(la: &Partition, r: usize, memo: &mut HashMap<Vec<usize>, BigUint>) -> BigUint {
        if la.is_empty() {
            return BigUint::from(1u32);
        }
        if let Some(v) = memo.get(la.parts()) {
            return v.clone();
        }
        let word = BoundaryWord::from_partition(la);
        let mut total = BigUint::from(0u32);
        for smaller in word.hook_removals(r) {
            total += go(&smaller, r, memo);
        }
        memo.insert(la.parts().to_vec(), total.clone());
        total
    }
    assert!(r >= 1, "strip size must be positive");
    go(la, r, &mut HashMap::new())
}

/// `f_r^λ` through the `r`-quotient: the multinomial over the component
/// sizes times the product of the component counts.
pub fn f_r_quotient(la: &Partition, r: usize) -> BigUint {
    let quotient = r_quotient(la, r);
    if !r_core(la, r).is_empty() {
        return BigUint::from(0u32);
    }
    let sizes: Vec<usize> = quotient.iter().map(|q| q.size()).collect();
    let mut result = multinomial(&sizes);
    for q in &quotient {
        result *= f_ordinary(q);
    }
    result
}

/// `f_r^λ` through hook lengths: `(|λ|/r)! / ∏ (h_c/r)` over the cells
/// with `r | h_c`, and 0 when the `r`-core is nonempty.
pub fn f_r_hook(la: &Partition, r: usize) -> BigUint {
    if !r_core(la, r).is_empty() {
        return BigUint::from(0u32);
    }
    let n = la.size() / r;
    let mut numerator = factorial(n);
    let mut denominator = BigUint::from(1u32);
    for row in la.hook_lengths() {
        for h in row {
            if h % r == 0 {
                denominator *= BigUint::from(h / r);
            }
        }
    }
    let rem = &numerator % &denominator;
    assert!(rem == BigUint::from(0u32), "hook quotient product must divide");
    numerator /= denominator;
    numerator
}

/// `Σ_{λ ⊢ rn} f_r^λ = Σ_k binom(n, 2k)·(2k−1)!!·r^(n−k)`.
pub fn sum_f_r(n: usize, r: usize) -> BigUint {
    let mut total = BigUint::from(0u32);
    for k in 0..=n / 2 {
        total += binomial(n, 2 * k)
            * double_factorial(2 * k as isize - 1)
            * BigUint::from(r).pow((n - k) as u32);
    }
    total
}

/// `Σ_{λ ⊢ rn} (f_r^λ)² = rⁿ·n!`.
pub fn sum_f_r_squared(n: usize, r: usize) -> BigUint {
    BigUint::from(r).pow(n as u32) * factorial(n)
}

/// Checks `f_r^λ ≤ rⁿ·n!·(f^λ/(rn)!)^(1/r)` for `λ ⊢ rn`, compared exactly
/// as integers after raising both sides to the `r`-th power:
/// `(f_r^λ)^r·(rn)! ≤ (rⁿ·n!)^r·f^λ`.
pub fn fomin_lulov_bound(la: &Partition, r: usize) -> bool {
    let size = la.size();
    assert!(r >= 1 && size % r == 0, "the strip length must divide the size");
    let n = size / r;
    let lhs = f_r_hook(la, r).pow(r as u32) * factorial(size);
    let rhs = (BigUint::from(r).pow(n as u32) * factorial(n)).pow(r as u32) * f_ordinary(la);
    lhs <= rhs
}

/// All standard `r`-rim hook tableaux of shape `λ`, as cell-to-label maps
/// with labels `1..|λ|/r`.
pub fn rim_hook_tableaux(la: &Partition, r: usize) -> Vec<BTreeMap<Cell, usize>> {
    fn go(
        la: &Partition,
        r: usize,
        label: usize,
        current: &mut BTreeMap<Cell, usize>,
        out: &mut Vec<BTreeMap<Cell, usize>>,
    ) {
        if la.is_empty() {
            out.push(current.clone());
            return;
        }
        for smaller in BoundaryWord::from_partition(la).hook_removals(r) {
            let removed: Vec<Cell> = la
                .diagram()
                .cells()
                .iter()
                .copied()
                .filter(|&(i, j)| j > smaller.part(i))
                .collect();
            for &c in &removed {
                current.insert(c, label);
            }
            go(&smaller, r, label - 1, current, out);
            for &c in &removed {
                current.remove(&c);
            }
        }
    }
    assert!(r >= 1 && la.size() % r == 0, "size must be a multiple of the strip size");
    let mut out = Vec::new();
    go(la, r, la.size() / r, &mut BTreeMap::new(), &mut out);
    out
}

/// Whether a labeling of the cells of `λ` is a standard `r`-rim hook
/// tableau: every label class is a rim hook of `r` cells (connected, no
/// 2×2 block) and every prefix of labels forms a partition shape.
pub fn is_rim_hook_tableau(la: &Partition, r: usize, labels: &BTreeMap<Cell, usize>) -> bool {
    let diagram = la.diagram();
    if labels.len() != diagram.size()
        || !diagram.cells().iter().all(|c| labels.contains_key(c))
    {
        return false;
    }
    if la.size() % r != 0 {
        return false;
    }
    let n = la.size() / r;
    let mut classes: BTreeMap<usize, Vec<Cell>> = BTreeMap::new();
    for (&c, &v) in labels {
        classes.entry(v).or_default().push(c);
    }
    if classes.len() != n || classes.keys().copied().ne(1..=n) {
        return false;
    }
    let mut prefix: Vec<Cell> = Vec::new();
    for j in 1..=n {
        let class = &classes[&j];
        if class.len() != r || !is_rim_hook(class) {
            return false;
        }
        prefix.extend(class.iter().copied());
        if !is_partition_cellset(&prefix) {
            return false;
        }
    }
    true
}

/// Whether a cell set is a single rim hook: edge-connected with no 2×2
/// block.
fn is_rim_hook(cells: &[Cell]) -> bool {
    let d = Diagram::from_cells(cells.iter().copied());
    if d.path_components().len() != 1 {
        return false;
    }
    !d.cells().iter().any(|&(i, j)| {
        d.contains((i + 1, j)) && d.contains((i, j + 1)) && d.contains((i + 1, j + 1))
    })
}

/// Whether a cell set is the diagram of a partition (top-left justified).
fn is_partition_cellset(cells: &[Cell]) -> bool {
    let mut rows: BTreeMap<usize, usize> = BTreeMap::new();
    let mut seen = std::collections::BTreeSet::new();
    for &c in cells {
        if !seen.insert(c) {
            return false;
        }
        *rows.entry(c.0).or_default() += 1;
    }
    let lens: Vec<usize> = rows.values().copied().collect();
    if rows.keys().copied().ne(1..=rows.len()) {
        return false;
    }
    if !lens.windows(2).all(|w| w[0] >= w[1]) {
        return false;
    }
    cells.iter().all(|&(i, j)| j >= 1 && j <= lens[i - 1])
}

/// A rim hook tableau as `/`-joined rows of labels (comma-separated when
/// any label has two digits).
pub fn rim_tableau_text(la: &Partition, labels: &BTreeMap<Cell, usize>) -> String {
    let wide = labels.values().any(|&v| v >= 10);
    la.parts()
        .iter()
        .enumerate()
        .map(|(i, &len)| {
            let row: Vec<String> =
                (1..=len).map(|j| labels[&(i + 1, j)].to_string()).collect();
            row.join(if wide { "," } else { "" })
        })
        .collect::<Vec<_>>()
        .join("/")
}

/// Draws a tuple of partitions as one diagram with mutually incomparable
/// components: component 1 is placed northeast-most, component `i` is
/// shifted down by the total height of the earlier components and right by
/// the total width of the later ones.
pub fn draw_tuple(components: &[Partition]) -> Diagram {
    let heights: Vec<usize> = components.iter().map(|p| p.len()).collect();
    let widths: Vec<usize> = components.iter().map(|p| p.part(1)).collect();
    let mut cells = Vec::new();
    for (i, comp) in components.iter().enumerate() {
        let row_offset: usize = heights[..i].iter().sum();
        let col_offset: usize = widths[i + 1..].iter().sum();
        for (r, &len) in comp.parts().iter().enumerate() {
            for c in 1..=len {
                cells.push((row_offset + r + 1, col_offset + c));
            }
        }
    }
    Diagram::from_cells(cells)
}

/// A standard tableau on the drawn diagram of a partition tuple, from the
/// labels of a rim hook tableau read hook by hook — not needed for
/// counting, so the crate instead relies on [`draw_tuple`] plus ordinary
/// enumeration.
pub fn drawn_tuple_tableaux(components: &[Partition]) -> Vec<Tableau> {
    crate::oracle::enumerate_syt(&draw_tuple(components))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn boundary_word_of_a_small_partition() {
        let w = BoundaryWord::from_partition(&p(&[3, 1]));
        assert_eq!(w.bits(), &[true, false, true, true, false]);
        assert_eq!(w.natural_index(0), -1);
        assert_eq!(w.to_partition(), p(&[3, 1]));
    }

    #[test]
    fn boundary_word_round_trips() {
        for n in 0..=8 {
            for la in Partition::all(n) {
                assert_eq!(BoundaryWord::from_partition(&la).to_partition(), la);
            }
        }
    }

    #[test]
    fn core_and_quotient_of_the_worked_partition() {
        let la = p(&[6, 4, 2, 2, 2, 1]);
        assert_eq!(r_core(&la, 2), p(&[2, 1]));
        assert_eq!(r_quotient(&la, 2), vec![p(&[2]), p(&[3, 2])]);
    }

    #[test]
    fn size_splits_into_core_plus_r_times_quotient() {
        for n in 0..=8 {
            for la in Partition::all(n) {
                for r in 2..=4 {
                    let core = r_core(&la, r).size();
                    let quotient: usize =
                        r_quotient(&la, r).iter().map(|q| q.size()).sum();
                    assert_eq!(n, core + r * quotient, "{la} with r = {r}");
                }
            }
        }
    }

    #[test]
    fn the_three_counts_agree_and_vanish_exactly_off_empty_core() {
        for rn in 0..=8 {
            for r in 2..=4 {
                if rn % r != 0 {
                    continue;
                }
                for la in Partition::all(rn) {
                    let direct = f_r_direct(&la, r);
                    assert_eq!(direct, f_r_quotient(&la, r), "{la} r={r}");
                    assert_eq!(direct, f_r_hook(&la, r), "{la} r={r}");
                    let vanishes = direct == BigUint::from(0u32);
                    assert_eq!(vanishes, !r_core(&la, r).is_empty(), "{la} r={r}");
                }
            }
        }
        assert_eq!(f_r_direct(&p(&[4, 2]), 2), BigUint::from(3u32));
    }

    #[test]
    fn hook_divisibility_matches_the_quotient() {
        let la = p(&[5, 5, 4]);
        let r = 2;
        assert!(r_core(&la, r).is_empty());
        let mut reduced: Vec<usize> = la
            .hook_lengths()
            .iter()
            .flatten()
            .filter(|&&h| h % r == 0)
            .map(|&h| h / r)
            .collect();
        reduced.sort();
        let mut quotient_hooks: Vec<usize> = r_quotient(&la, r)
            .iter()
            .flat_map(|q| q.hook_lengths().into_iter().flatten())
            .collect();
        quotient_hooks.sort();
        assert_eq!(reduced.len(), la.size() / r);
        assert_eq!(reduced, quotient_hooks);
    }

    #[test]
    fn rim_hook_tableaux_are_enumerated_and_validated() {
        let cases: &[(&[usize], usize, &str)] = &[
            (&[5, 5, 4], 2, "11336/24556/2477"),
            (&[5, 4, 3], 3, "11333/1244/224"),
        ];
        for &(parts, r, frozen) in cases {
            let la = p(parts);
            let all = rim_hook_tableaux(&la, r);
            let expected: usize =
                format!("{}", f_r_direct(&la, r)).parse().unwrap();
            assert_eq!(all.len(), expected);
            for t in &all {
                assert!(is_rim_hook_tableau(&la, r, t));
            }
            let texts: Vec<String> =
                all.iter().map(|t| rim_tableau_text(&la, t)).collect();
            assert!(texts.contains(&frozen.to_string()), "{frozen} missing");
        }
    }

    #[test]
    fn the_validator_rejects_a_broken_labeling() {
        let la = p(&[5, 4, 3]);
        let mut labels = rim_hook_tableaux(&la, 3)
            .into_iter()
            .find(|t| rim_tableau_text(&la, t) == "11333/1244/224")
            .unwrap();
        // Swapping two labels breaks the prefix-shape property.
        for (_, v) in labels.iter_mut() {
            *v = match *v {
                1 => 4,
                4 => 1,
                other => other,
            };
        }
        assert!(!is_rim_hook_tableau(&la, 3, &labels));
    }

    #[test]
    fn sums_over_all_shapes_match_the_closed_forms() {
        for (n, r) in [(1, 2), (2, 2), (3, 2), (2, 3), (1, 4), (2, 4)] {
            let mut total = BigUint::from(0u32);
            let mut total_sq = BigUint::from(0u32);
            for la in Partition::all(r * n) {
                let f = f_r_direct(&la, r);
                total += &f;
                total_sq += &f * &f;
            }
            assert_eq!(total, sum_f_r(n, r), "sum at n={n} r={r}");
            assert_eq!(total_sq, sum_f_r_squared(n, r), "square sum at n={n} r={r}");
        }
        assert_eq!(sum_f_r(2, 2), BigUint::from(6u32));
        assert_eq!(sum_f_r_squared(2, 2), BigUint::from(8u32));
    }

    #[test]
    fn the_strip_count_bound_holds_and_is_tight_for_single_strips() {
        for r in 1..=4usize {
            for n in 1..=12 / r {
                for la in Partition::all(r * n) {
                    assert!(fomin_lulov_bound(&la, r), "la={:?}, r={r}", la.parts());
                }
            }
        }
        // (4,2) with r=2: 3²·720 ≤ (2³·6)²·9.
        assert!(fomin_lulov_bound(&p(&[4, 2]), 2));
    }

    #[test]
    fn drawn_tuples_place_the_first_component_northeast() {
        let d = draw_tuple(&[p(&[2]), p(&[1])]);
        assert_eq!(d.cells(), &[(1, 2), (1, 3), (2, 1)]);
        // The components are order-incomparable, so the count factors.
        assert_eq!(oracle::count_syt(&d), BigUint::from(3u32));
        assert_eq!(drawn_tuple_tableaux(&[p(&[2]), p(&[1])]).len(), 3);
    }
}
