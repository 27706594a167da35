//! Permutations in one-line notation, their statistics, and brute-force
//! enumeration — the oracle side of zigzag, bijection, and reduced-word
//! counting.

use std::fmt;

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<usize>);

impl Perm {
    /// Builds a permutation from its images.
    ///
    /// # Panics
    /// Panics if the images are not a bijection on `1..=n`.
    pub fn new(images: Vec<usize>) -> Self {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            assert!(v >= 1 && v <= n && !seen[v], "not a permutation of 1..={n}");
            seen[v] = true;
        }
        Self(images)
    }

    pub fn identity(n: usize) -> Self {
        Self((1..=n).collect())
    }

    /// The longest element `[n, n-1, ..., 1]`.
    pub fn longest(n: usize) -> Self {
        Self((1..=n).rev().collect())
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// `π(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Perm(inv)
    }

    /// Composition `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.n(), other.n());
        Perm((1..=self.n()).map(|i| self.apply(other.apply(i))).collect())
    }

    /// Right multiplication by the adjacent transposition `s_i`: swaps the
    /// entries in positions `i` and `i + 1`.
    pub fn swap_positions(&self, i: usize) -> Perm {
        assert!(i >= 1 && i < self.n());
        let mut images = self.0.clone();
        images.swap(i - 1, i);
        Perm(images)
    }

    /// Left multiplication by `s_i`: swaps the values `i` and `i + 1`.
    pub fn swap_values(&self, i: usize) -> Perm {
        assert!(i >= 1 && i < self.n());
        let mut images = self.0.clone();
        for v in &mut images {
            if *v == i {
                *v = i + 1;
            } else if *v == i + 1 {
                *v = i;
            }
        }
        Perm(images)
    }

    /// Descent set `{i : π(i) > π(i+1)}`.
    pub fn des_set(&self) -> Vec<usize> {
        (1..self.n()).filter(|&i| self.0[i - 1] > self.0[i]).collect()
    }

    pub fn des(&self) -> usize {
        self.des_set().len()
    }

    pub fn maj(&self) -> usize {
        self.des_set().iter().sum()
    }

    /// Inversion number, which is also the Coxeter length.
    pub fn inv(&self) -> usize {
        let mut count = 0;
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                if self.0[i] > self.0[j] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn is_involution(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| self.0[v - 1] == i + 1)
    }

    /// Whether some `|pattern|` positions are order-isomorphic to `pattern`.
    pub fn contains_pattern(&self, pattern: &[usize]) -> bool {
        let k = pattern.len();
        if k > self.n() {
            return false;
        }
        contains_rec(&self.0, pattern, 0, &mut Vec::with_capacity(k))
    }

    pub fn avoids(&self, pattern: &[usize]) -> bool {
        !self.contains_pattern(pattern)
    }

    /// Length of the longest increasing subsequence.
    pub fn lis(&self) -> usize {
        longest_monotone(&self.0, |a, b| a < b)
    }

    /// Length of the longest decreasing subsequence.
    pub fn lds(&self) -> usize {
        longest_monotone(&self.0, |a, b| a > b)
    }

    /// All permutations of `1..=n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut images: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Perm(images.clone()));
            if !next_permutation(&mut images) {
                return out;
            }
        }
    }
}

fn contains_rec(images: &[usize], pattern: &[usize], start: usize, picked: &mut Vec<usize>) -> bool {
    if picked.len() == pattern.len() {
        return order_isomorphic(picked, pattern);
    }
    // Prune: not enough entries left.
    if images.len() - start < pattern.len() - picked.len() {
        return false;
    }
    for i in start..images.len() {
        picked.push(images[i]);
        if partial_consistent(picked, pattern) && contains_rec(images, pattern, i + 1, picked) {
            picked.pop();
            return true;
        }
        picked.pop();
    }
    false
}

fn order_isomorphic(a: &[usize], b: &[usize]) -> bool {
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            if (a[i] < a[j]) != (b[i] < b[j]) {
                return false;
            }
        }
    }
    true
}

fn partial_consistent(picked: &[usize], pattern: &[usize]) -> bool {
    let k = picked.len();
    (0..k - 1).all(|i| (picked[i] < picked[k - 1]) == (pattern[i] < pattern[k - 1]))
}

fn longest_monotone(seq: &[usize], before: impl Fn(usize, usize) -> bool) -> usize {
    let mut best = vec![1usize; seq.len()];
    for i in 0..seq.len() {
        for j in 0..i {
            if before(seq[j], seq[i]) {
                best[i] = best[i].max(best[j] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

fn next_permutation(seq: &mut [usize]) -> bool {
    let n = seq.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| seq[i] < seq[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| seq[j] > seq[i]).unwrap();
    seq.swap(i, j);
    seq[i + 1..].reverse();
    true
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() < 10 {
            for v in &self.0 {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let body: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
            write!(f, "[{}]", body.join(","))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn statistics_match_hand_computation() {
        let pi = Perm::new(vec![9, 1, 4, 3, 7, 5, 2, 6, 8]);
        assert_eq!(pi.des_set(), vec![1, 3, 5, 6]);
        assert_eq!(pi.inverse().des_set(), vec![2, 3, 6, 8]);
        let pi = Perm::new(vec![3, 1, 2]);
        assert_eq!(pi.inv(), 2);
        assert_eq!(pi.maj(), 1);
        assert!(!pi.is_involution());
        assert!(Perm::new(vec![2, 1, 3]).is_involution());
    }

    #[test]
    fn enumeration_is_lexicographic_and_complete() {
        let all = Perm::all(3);
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], Perm::identity(3));
        assert_eq!(all[5], Perm::longest(3));
        assert_eq!(Perm::all(5).len(), 120);
    }

    #[test]
    fn pattern_containment_is_order_isomorphism() {
        let pi = Perm::new(vec![3, 1, 4, 2]);
        assert!(pi.contains_pattern(&[2, 1, 3]));
        assert!(pi.contains_pattern(&[3, 1, 4, 2]));
        assert!(pi.avoids(&[1, 2, 3]));
        // 321-avoiding iff longest decreasing subsequence < 3.
        for pi in Perm::all(5) {
            assert_eq!(pi.avoids(&[3, 2, 1]), pi.lds() < 3);
        }
    }

    #[test]
    fn group_operations() {
        let pi = Perm::new(vec![2, 4, 1, 3]);
        assert_eq!(pi.compose(&pi.inverse()), Perm::identity(4));
        assert_eq!(pi.swap_positions(1), Perm::new(vec![4, 2, 1, 3]));
        assert_eq!(pi.swap_values(1), Perm::new(vec![1, 4, 2, 3]));
        // Coxeter length equals the inversion number.
        assert_eq!(Perm::longest(4).inv(), 6);
    }
}
