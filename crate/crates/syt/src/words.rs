//! Reduced words of permutations and their tableau bijections.
//!
//! A reduced word for `pi` is a shortest product of adjacent transpositions
//! `s_{a_1} ... s_{a_m} = pi` (here evaluated with the rightmost letter
//! applied first, each `s_i` swapping positions `i, i+1`); its length is the
//! inversion number.  Reduced word counts meet tableau counts several times
//! over:
//!
//! * a boundary walk turns each shape `la` inside a `k x (l-k)` box into a
//!   shuffle permutation whose reduced words biject with `SYT(la)`,
//! * the longest element of the symmetric group has `f^staircase` reduced
//!   words, and its signed (hyperoctahedral) counterpart has `f^square` many,
//! * `pi` has exactly `f^(sorted Lehmer code)` reduced words precisely when
//!   it avoids the pattern 2143,
//! * maximal chains in a modified weak order, and intervals of unimodal
//!   permutations, count standard tableaux of shifted shapes.

use std::collections::HashMap;

use num::{BigUint, One, Zero};

use crate::partition::{Partition, StrictPartition};
use crate::perm::Perm;
use crate::tableau::Tableau;

/// Evaluates a word of adjacent transpositions, rightmost letter first.
pub fn evaluate_word(n: usize, word: &[usize]) -> Perm {
    let mut acc = Perm::identity(n);
    for &a in word.iter().rev() {
        acc = acc.swap_positions(a);
    }
    acc
}

/// Positions `i` such that the value `i + 1` appears before the value `i`.
fn left_descents(pi: &Perm) -> Vec<usize> {
    let inv = pi.inverse();
    (1..pi.n()).filter(|&i| inv.apply(i + 1) < inv.apply(i)).collect()
}

/// How many reduced words a permutation has.
pub fn reduced_word_count(pi: &Perm) -> BigUint {
    fn rec(pi: &Perm, memo: &mut HashMap<Perm, BigUint>) -> BigUint {
        if let Some(hit) = memo.get(pi) {
            return hit.clone();
        }
        let descents = left_descents(pi);
        let count = if descents.is_empty() {
            BigUint::one()
        } else {
            let mut acc = BigUint::zero();
            for i in descents {
                acc += rec(&pi.swap_values(i), memo);
            }
            acc
        };
        memo.insert(pi.clone(), count.clone());
        count
    }
    rec(pi, &mut HashMap::new())
}

/// All reduced words of a permutation, each evaluating back to it.
pub fn reduced_words(pi: &Perm) -> Vec<Vec<usize>> {
    let descents = left_descents(pi);
    if descents.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in descents {
        for mut word in reduced_words(&pi.swap_values(i)) {
            word.push(i);
            out.push(word);
        }
    }
    out
}

/// How many contiguous three-letter braid factors (`s_i s_{i+1} s_i` or
/// `s_{i+1} s_i s_{i+1}`) a word contains.
pub fn braid_factor_count(word: &[usize]) -> usize {
    word.windows(3)
        .filter(|w| w[0] == w[2] && w[0].abs_diff(w[1]) == 1)
        .count()
}

/// The boundary-walk permutation of a shape inside a `k x (l - k)` box.
///
/// Rows are labeled `1..=k` from the bottom up and columns `k+1..=l` from
/// left to right; walking the shape's southeast boundary from the bottom-left
/// corner of the box to its top-right corner reads off the one-line notation,
/// a horizontal step contributing its column label and a vertical step its
/// row label.  The result shuffles `1..k` and `k+1..l`, and its inversions
/// correspond to the cells of the shape.
pub fn shuffle_permutation(la: &Partition, k: usize, l: usize) -> Perm {
    assert!(k <= l, "the box height cannot exceed the total size");
    let width = l - k;
    assert!(la.len() <= k, "the shape must fit the box height");
    assert!(la.part(1) <= width, "the shape must fit the box width");
    let mut images = Vec::with_capacity(l);
    for i in (1..=k).rev() {
        let lower = if i == k { 0 } else { la.part(i + 1) };
        for c in lower + 1..=la.part(i) {
            images.push(k + c);
        }
        images.push(k + 1 - i);
    }
    for c in la.part(1) + 1..=width {
        images.push(k + c);
    }
    Perm::new(images)
}

/// The reduced word read off a standard tableau in a `k`-row box: the entry
/// `j` in cell `(r, c)` places the letter `k + c - r` at position `j` from
/// the right.
pub fn tableau_to_reduced_word(t: &Tableau, k: usize) -> Vec<usize> {
    let n = t.size();
    let mut word = vec![0; n];
    for ((r, c), j) in t.entries() {
        assert!(k + c > r, "the cell must lie in a box of height {k}");
        word[n - j] = k + c - r;
    }
    word
}

/// The Lehmer code of a permutation, sorted into a partition.
pub fn sorted_code(pi: &Perm) -> Partition {
    let images = pi.images();
    let mut code: Vec<usize> = (0..images.len())
        .map(|i| (i + 1..images.len()).filter(|&j| images[j] < images[i]).count())
        .collect();
    code.sort_unstable_by(|a, b| b.cmp(a));
    code.retain(|&c| c > 0);
    Partition::new(code)
}

/// Whether a permutation avoids the pattern 2143 — equivalently, whether its
/// reduced word count is the tableau count of its sorted Lehmer code.
pub fn is_vexillary(pi: &Perm) -> bool {
    pi.avoids(&[2, 1, 4, 3])
}

/// A signed permutation as the images of `1..=n`, each with a sign.
type Signed = Vec<i64>;

/// Right multiplication generators of the hyperoctahedral group: index `0`
/// negates the first entry, index `i >= 1` swaps entries `i` and `i + 1`.
fn signed_generator(w: &Signed, i: usize) -> Signed {
    let mut next = w.clone();
    if i == 0 {
        next[0] = -next[0];
    } else {
        next.swap(i - 1, i);
    }
    next
}

/// How many reduced words the longest signed permutation `[-1, ..., -n]` has.
///
/// Lengths are breadth-first distances from the identity in the Cayley graph
/// of the generators; reduced words are geodesics, counted by a dynamic
/// program along the levels.
pub fn signed_longest_reduced_word_count(n: usize) -> BigUint {
    assert!(n >= 1, "the group needs at least one generator");
    let identity: Signed = (1..=n as i64).collect();
    let mut dist: HashMap<Signed, usize> = HashMap::new();
    let mut paths: HashMap<Signed, BigUint> = HashMap::new();
    dist.insert(identity.clone(), 0);
    paths.insert(identity.clone(), BigUint::one());
    let mut frontier = vec![identity];
    let mut level = 0;
    while !frontier.is_empty() {
        level += 1;
        let mut next_frontier: Vec<Signed> = Vec::new();
        for w in &frontier {
            let count = paths[w].clone();
            for i in 0..n {
                let v = signed_generator(w, i);
                match dist.get(&v) {
                    None => {
                        dist.insert(v.clone(), level);
                        paths.insert(v.clone(), count.clone());
                        next_frontier.push(v);
                    }
                    Some(&d) if d == level => {
                        *paths.get_mut(&v).unwrap() += &count;
                    }
                    Some(_) => {}
                }
            }
        }
        frontier = next_frontier;
    }
    let longest: Signed = (1..=n as i64).map(|v| -v).collect();
    paths[&longest].clone()
}

/// How many maximal chains the modified weak order has from the identity to
/// the longest permutation: covers are `s_i * pi` raising the length where
/// the letter moved left lands ahead of smaller letters only.  The count is
/// the number of standard tableaux of the shifted staircase.
pub fn modified_weak_order_chain_count(n: usize) -> BigUint {
    fn rec(pi: &Perm, memo: &mut HashMap<Perm, BigUint>) -> BigUint {
        if pi == &Perm::longest(pi.n()) {
            return BigUint::one();
        }
        if let Some(hit) = memo.get(pi) {
            return hit.clone();
        }
        let inv = pi.inverse();
        let mut acc = BigUint::zero();
        for i in 1..pi.n() {
            let p = inv.apply(i);
            // The cover moves the letter i + 1 to position p; it must pass
            // i (which sits before i + 1) and exceed everything before p.
            if p < inv.apply(i + 1) && (1..p).all(|j| pi.apply(j) < i) {
                acc += rec(&pi.swap_values(i), memo);
            }
        }
        memo.insert(pi.clone(), acc.clone());
        acc
    }
    rec(&Perm::identity(n), &mut HashMap::new())
}

/// Whether the inverse descent set is a prefix `{1, ..., j}`.
pub fn is_unimodal(pi: &Perm) -> bool {
    let des = pi.inverse().des_set();
    des.iter().enumerate().all(|(k, &d)| d == k + 1)
}

/// The boundary-walk permutation of a shifted shape inside the staircase
/// `(n-1, ..., 1)`.
///
/// Rows are labeled `1, 2, ...` from the top down and columns `2, 3, ...`
/// from left to right; walking the southeast boundary from the diagonal end
/// of the bottom row up to the top-right corner reads off the one-line
/// notation as in the box walk.  The result is unimodal, and its inversions
/// correspond to the cells of the shape.
pub fn unimodal_permutation(la: &StrictPartition, n: usize) -> Perm {
    let parts = la.parts();
    let rows = parts.len();
    for (i, &p) in parts.iter().enumerate() {
        assert!(i + 1 + p <= n, "the shape must fit the staircase of {}", n - 1);
    }
    let row_end = |i: usize| i + parts[i - 1] - 1;
    let mut images = Vec::with_capacity(n);
    for i in (1..=rows).rev() {
        let lower = if i == rows { i } else { row_end(i + 1) + 1 };
        for c in lower..=row_end(i) {
            images.push(c + 1);
        }
        images.push(i);
    }
    let after = if rows == 0 { 0 } else { row_end(1) };
    for c in after + 1..=n - 1 {
        images.push(c + 1);
    }
    if rows == 0 {
        images.insert(0, 1);
    }
    Perm::new(images)
}

/// The reduced word read off a standard tableau of shifted shape: the entry
/// `j` in cell `(r, c)` (diagonal `c - r + 1` from the left) places the
/// letter `c - r + 1` at position `j` from the right.
pub fn shifted_tableau_to_reduced_word(t: &Tableau) -> Vec<usize> {
    let n = t.size();
    let mut word = vec![0; n];
    for ((r, c), j) in t.entries() {
        assert!(c >= r, "shifted cells lie weakly above the diagonal");
        word[n - j] = c - r + 1;
    }
    word
}

/// How many maximal chains of unimodal permutations climb from the identity
/// to the walk permutation of a shifted shape: covers swap adjacent positions,
/// raise the length, and stay unimodal and below the top.  The count is the
/// number of standard tableaux of the shifted shape.
pub fn unimodal_interval_chain_count(la: &StrictPartition, n: usize) -> BigUint {
    let top = unimodal_permutation(la, n);
    let top_inv = top.inv();
    fn below(pi: &Perm, top: &Perm, top_inv: usize) -> bool {
        // pi <= top in the right weak order.
        let rest = pi.inverse().compose(top);
        pi.inv() + rest.inv() == top_inv
    }
    fn rec(
        pi: &Perm,
        top: &Perm,
        top_inv: usize,
        memo: &mut HashMap<Perm, BigUint>,
    ) -> BigUint {
        if pi == top {
            return BigUint::one();
        }
        if let Some(hit) = memo.get(pi) {
            return hit.clone();
        }
        let mut acc = BigUint::zero();
        for i in 1..pi.n() {
            if pi.apply(i) < pi.apply(i + 1) {
                let sigma = pi.swap_positions(i);
                if is_unimodal(&sigma) && below(&sigma, top, top_inv) {
                    acc += rec(&sigma, top, top_inv, memo);
                }
            }
        }
        memo.insert(pi.clone(), acc.clone());
        acc
    }
    rec(&Perm::identity(n), &top, top_inv, &mut HashMap::new())
}
