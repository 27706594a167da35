//! Integer partitions and strict partitions, with the generation and
//! hook-length machinery the counting formulas are built on.

use std::fmt;

use crate::diagram::Diagram;

/// An integer partition: a weakly decreasing sequence of positive parts.
/// The empty partition is allowed and has size 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition from its parts.
    ///
    /// # Panics
    /// Panics if the parts are not weakly decreasing or contain a zero.
    pub fn new(parts: Vec<usize>) -> Self {
        Self::try_new(parts).expect("invalid partition")
    }

    /// Fallible constructor used by the shape-string parser.
    pub fn try_new(parts: Vec<usize>) -> Result<Self, String> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(format!("parts must be weakly decreasing, got {parts:?}"));
            }
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(format!("parts must be positive, got {parts:?}"));
        }
        Ok(Self(parts))
    }

    /// The empty partition.
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// The staircase `(n-1, n-2, ..., 1)`.
    pub fn staircase(n: usize) -> Self {
        Self((1..n).rev().collect())
    }

    /// The rectangle with `rows` rows of length `width`.
    pub fn rectangle(rows: usize, width: usize) -> Self {
        if width == 0 {
            Self::empty()
        } else {
            Self(vec![width; rows])
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// The Young diagram of the partition: row `i` occupies columns
    /// `1..=λ_i`.
    pub fn diagram(&self) -> Diagram {
        Diagram::from_cells(
            self.0
                .iter()
                .enumerate()
                .flat_map(|(i, &len)| (1..=len).map(move |j| (i + 1, j))),
        )
    }

    /// Number of (positive) parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// The part at 1-based row index `i`, zero when `i` exceeds the length.
    pub fn part(&self, i: usize) -> usize {
        if i >= 1 && i <= self.0.len() {
            self.0[i - 1]
        } else {
            0
        }
    }

    /// The conjugate partition (columns become rows).
    pub fn conjugate(&self) -> Partition {
        if self.0.is_empty() {
            return Partition::empty();
        }
        let width = self.0[0];
        let cols = (1..=width)
            .map(|j| self.0.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition(cols)
    }

    /// Whether `inner` fits inside `self` row by row.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner
            .0
            .iter()
            .enumerate()
            .all(|(i, &p)| self.part(i + 1) >= p)
    }

    /// Hook length of the cell in row `i`, column `j` (1-based):
    /// `λ_i + λ'_j - i - j + 1`.
    pub fn hook_length(&self, i: usize, j: usize) -> usize {
        let col_len = self.0.iter().filter(|&&p| p >= j).count();
        self.part(i) + col_len - i - j + 1
    }

    /// All hook lengths, row by row.
    pub fn hook_lengths(&self) -> Vec<Vec<usize>> {
        let conj = self.conjugate();
        self.0
            .iter()
            .enumerate()
            .map(|(i0, &row_len)| {
                (1..=row_len)
                    .map(|j| row_len + conj.part(j) - (i0 + 1) - j + 1)
                    .collect()
            })
            .collect()
    }

    /// All partitions of `n`, in reverse lexicographic order
    /// (so `(n)` first and `(1^n)` last).
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut parts = Vec::new();
        gen_partitions(n, n, &mut parts, &mut out);
        out
    }

    /// All partitions of `n` with at most `rows` parts.
    pub fn all_with_height(n: usize, rows: usize) -> Vec<Partition> {
        Self::all(n).into_iter().filter(|p| p.len() <= rows).collect()
    }
}

fn gen_partitions(left: usize, max_part: usize, parts: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if left == 0 {
        out.push(Partition(parts.clone()));
        return;
    }
    for p in (1..=max_part.min(left)).rev() {
        parts.push(p);
        gen_partitions(left - p, p, parts, out);
        parts.pop();
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", body.join(","))
    }
}

/// A strict partition: strictly decreasing positive parts. Indexes the
/// shifted shapes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StrictPartition(Vec<usize>);

impl StrictPartition {
    /// Builds a strict partition from its parts.
    ///
    /// # Panics
    /// Panics if the parts are not strictly decreasing or contain a zero.
    pub fn new(parts: Vec<usize>) -> Self {
        Self::try_new(parts).expect("invalid strict partition")
    }

    /// Fallible constructor used by the shape-string parser.
    pub fn try_new(parts: Vec<usize>) -> Result<Self, String> {
        for w in parts.windows(2) {
            if w[0] <= w[1] {
                return Err(format!("parts must be strictly decreasing, got {parts:?}"));
            }
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(format!("parts must be positive, got {parts:?}"));
        }
        Ok(Self(parts))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// The staircase `(n, n-1, ..., 1)` as a strict partition.
    pub fn staircase(n: usize) -> Self {
        Self((1..=n).rev().collect())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// The part at 1-based index `i`, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i >= 1 && i <= self.0.len() {
            self.0[i - 1]
        } else {
            0
        }
    }

    /// The underlying (automatically strict) partition.
    pub fn as_partition(&self) -> Partition {
        Partition::new(self.0.clone())
    }

    /// The shifted diagram: row `i` occupies columns `i..=λ_i+i-1`.
    pub fn diagram(&self) -> Diagram {
        Diagram::from_cells(
            self.0
                .iter()
                .enumerate()
                .flat_map(|(i, &len)| (i + 1..i + 1 + len).map(move |j| (i + 1, j))),
        )
    }

    /// All strict partitions of `n`, largest first part first.
    pub fn all(n: usize) -> Vec<StrictPartition> {
        let mut out = Vec::new();
        let mut parts = Vec::new();
        gen_strict(n, n, &mut parts, &mut out);
        out
    }
}

fn gen_strict(left: usize, max_part: usize, parts: &mut Vec<usize>, out: &mut Vec<StrictPartition>) {
    if left == 0 {
        out.push(StrictPartition(parts.clone()));
        return;
    }
    for p in (1..=max_part.min(left)).rev() {
        parts.push(p);
        let next_max = p.saturating_sub(1);
        gen_strict(left - p, next_max, parts, out);
        parts.pop();
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})*", body.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugate_and_hooks() {
        let la = Partition::new(vec![4, 3, 1]);
        assert_eq!(la.conjugate(), Partition::new(vec![3, 2, 2, 1]));
        assert_eq!(
            la.hook_lengths(),
            vec![vec![6, 4, 3, 1], vec![4, 2, 1], vec![1]]
        );
        assert_eq!(la.conjugate().conjugate(), la);
    }

    #[test]
    fn generation_counts_match_the_partition_numbers() {
        // p(0..12) = 1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77.
        let expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77];
        for (n, &want) in expected.iter().enumerate() {
            assert_eq!(Partition::all(n).len(), want, "p({n})");
        }
        // Strict partition counts q(0..10) = 1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10.
        let expected_strict = [1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10];
        for (n, &want) in expected_strict.iter().enumerate() {
            assert_eq!(StrictPartition::all(n).len(), want, "q({n})");
        }
    }

    #[test]
    fn invalid_parts_are_rejected() {
        assert!(Partition::try_new(vec![2, 3]).is_err());
        assert!(Partition::try_new(vec![2, 0]).is_err());
        assert!(StrictPartition::try_new(vec![3, 3]).is_err());
    }
}
