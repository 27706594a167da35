//! Random generation of standard Young tableaux and the two sorting
//! bijections that prove the hook length formula bijectively.
//!
//! The hook-walk sampler draws a uniformly random standard tableau of a
//! given partition shape: a uniform cell starts a walk that jumps to a
//! uniform other cell of the current hook until it reaches a corner, the
//! corner receives the largest remaining entry, and the process repeats on
//! the shrunken shape. Each tableau is produced with probability
//! `∏ h_c / n!`, which is constant, hence uniform.
//!
//! The two sorting procedures turn an arbitrary filling of a partition
//! shape into a pair (standard tableau, pointer tableau) injectively,
//! establishing `n! = Σ_T ∏ h_c` with the sum over standard tableaux — the
//! fiber over each `T` has exactly `∏ h_c` pointer tableaux.

use std::collections::BTreeMap;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::diagram::{Cell, Diagram};
use crate::partition::Partition;
use crate::tableau::Tableau;

/// A deterministic seeded random source with unbiased range sampling.
pub struct SeedRng {
    inner: ChaCha8Rng,
}

impl SeedRng {
    /// A generator with a fixed 64-bit seed.
    pub fn new(seed: u64) -> Self {
        SeedRng { inner: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// The next raw 64-bit output.
    pub fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    /// A uniform integer in `0..n`, by rejection sampling: draws below the
    /// largest multiple of `n` are reduced, larger draws are retried.
    ///
    /// # Panics
    /// Panics if `n` is zero.
    pub fn below(&mut self, n: usize) -> usize {
        assert!(n > 0, "empty range");
        let n64 = n as u64;
        let threshold = (u64::MAX / n64) * n64;
        loop {
            let x = self.inner.next_u64();
            if x < threshold {
                return (x % n64) as usize;
            }
        }
    }
}

/// The row lengths of a top-left-justified diagram.
///
/// # Panics
/// Panics if the diagram is not an ordinary partition shape.
fn partition_rows(shape: &Diagram) -> Vec<usize> {
    let rows = shape.rows();
    let mut lens = Vec::new();
    for (i, (&r, cols)) in rows.iter().enumerate() {
        assert_eq!(r, i + 1, "rows must be contiguous from 1");
        assert_eq!(cols[0], 1, "rows must start in column 1");
        assert_eq!(*cols.last().unwrap(), cols.len(), "rows must be contiguous");
        lens.push(cols.len());
    }
    assert!(lens.windows(2).all(|w| w[0] >= w[1]), "row lengths must weakly decrease");
    lens
}

/// Draws a uniformly random standard tableau of shape `λ` by hook walks.
pub fn hook_walk_sample(lambda: &Partition, rng: &mut SeedRng) -> Tableau {
    let mut rows: Vec<usize> = lambda.parts().to_vec();
    let mut values: BTreeMap<Cell, usize> = BTreeMap::new();
    let mut remaining = lambda.size();
    while remaining > 0 {
        // Uniform starting cell, in row-major order.
        let mut k = rng.below(remaining);
        let mut cell = (0, 0);
        for (i, &len) in rows.iter().enumerate() {
            if k < len {
                cell = (i + 1, k + 1);
                break;
            }
            k -= len;
        }
        // Walk to a uniform other cell of the hook until at a corner.
        loop {
            let (r, c) = cell;
            let mut others: Vec<Cell> = (c + 1..=rows[r - 1]).map(|j| (r, j)).collect();
            others.extend((r + 1..=rows.len()).filter(|&i| rows[i - 1] >= c).map(|i| (i, c)));
            if others.is_empty() {
                break;
            }
            cell = others[rng.below(others.len())];
        }
        values.insert(cell, remaining);
        rows[cell.0 - 1] -= 1;
        if *rows.last().unwrap() == 0 {
            rows.pop();
        }
        remaining -= 1;
    }
    let shape = Diagram::from_cells(values.keys().copied());
    Tableau::new(shape, values.values().copied().collect())
}

/// A tableau of relocation pointers parallel to a partition shape: entry
/// `j > 0` points `j` columns right, `-i < 0` points `i` rows down, and `0`
/// points at the cell itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointerTableau {
    rows: Vec<Vec<isize>>,
}

impl PointerTableau {
    /// A pointer tableau from its rows.
    ///
    /// # Panics
    /// Panics if the row lengths do not weakly decrease.
    pub fn from_rows(rows: Vec<Vec<isize>>) -> Self {
        assert!(
            rows.windows(2).all(|w| w[0].len() >= w[1].len()),
            "row lengths must weakly decrease"
        );
        PointerTableau { rows }
    }

    /// The rows of pointers.
    pub fn rows(&self) -> &[Vec<isize>] {
        &self.rows
    }

    /// Rows joined by `/` with comma-separated entries.
    pub fn to_text(&self) -> String {
        self.rows
            .iter()
            .map(|row| row.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(","))
            .collect::<Vec<_>>()
            .join("/")
    }
}

/// Row-sorted working state for the column-insertion sort.
struct SortState {
    rows: Vec<Vec<usize>>,
}

impl SortState {
    /// Inserts `v` into row `r` (1-based) keeping it sorted; returns the
    /// 1-based column where `v` landed.
    fn sorted_insert(&mut self, r: usize, v: usize) -> usize {
        if self.rows.len() < r {
            self.rows.push(Vec::new());
        }
        let row = &mut self.rows[r - 1];
        let pos = row.partition_point(|&x| x < v);
        row.insert(pos, v);
        pos + 1
    }

    /// The position `(row, column)` of the smallest entry lying strictly
    /// below a larger entry, if any.
    fn smallest_column_violation(&self) -> Option<(usize, usize)> {
        let mut best: Option<(usize, (usize, usize))> = None;
        for r in 1..self.rows.len() {
            for (j, &v) in self.rows[r].iter().enumerate() {
                if self.rows[r - 1][j] > v && best.map_or(true, |(bv, _)| v < bv) {
                    best = Some((v, (r + 1, j + 1)));
                }
            }
        }
        best.map(|(_, pos)| pos)
    }

    /// Swaps the entries at `(k, x)` and `(k-1, y)`, re-sorting both rows;
    /// returns the new column of the entry that moved down into row `k`.
    fn exchange(&mut self, k: usize, x: usize, y: usize) -> usize {
        let a = self.rows[k - 1].remove(x - 1);
        let b = self.rows[k - 2].remove(y - 1);
        let pos_down = self.rows[k - 1].partition_point(|&v| v < b);
        self.rows[k - 1].insert(pos_down, b);
        let pos_up = self.rows[k - 2].partition_point(|&v| v < a);
        self.rows[k - 2].insert(pos_up, a);
        pos_down + 1
    }
}

/// Sorts an arbitrary filling of a partition shape into a standard tableau
/// plus a pointer tableau, by inserting its columns right to left.
pub fn column_insertion_sort(filling: &Tableau) -> (Tableau, PointerTableau) {
    let lens = partition_rows(filling.shape());
    let width = lens.first().copied().unwrap_or(0);
    let mut state = SortState { rows: Vec::new() };
    let mut pointers: Vec<Vec<isize>> = Vec::new();
    for j in (1..=width).rev() {
        let column: Vec<usize> = (1..=lens.len())
            .filter(|&i| lens[i - 1] >= j)
            .map(|i| filling.value_at((i, j)))
            .collect();
        let d = insert_column(&mut state, &column);
        for (i, &di) in d.iter().enumerate() {
            if pointers.len() <= i {
                pointers.push(Vec::new());
            }
            pointers[i].insert(0, di);
        }
    }
    let t = rows_to_tableau(&state.rows);
    (t, PointerTableau::from_rows(pointers))
}

/// Inserts one new leftmost column of entries into the sorted state and
/// restores standardness by exchanges; returns the final displacement row
/// `d` destined for the pointer tableau.
fn insert_column(state: &mut SortState, column: &[usize]) -> Vec<isize> {
    let mut d: Vec<isize> = Vec::with_capacity(column.len());
    for (i, &v) in column.iter().enumerate() {
        let col = state.sorted_insert(i + 1, v);
        d.push(col as isize - 1);
    }
    while let Some((k, x)) = state.smallest_column_violation() {
        let y = (d[k - 2] + 1) as usize;
        let y_new = state.exchange(k, x, y);
        let dk = d[k - 1];
        d[k - 2] = if dk >= 0 {
            if dk as usize == x - 1 {
                -1
            } else {
                dk
            }
        } else {
            -(-dk + 1)
        };
        d[k - 1] = y_new as isize - 1;
    }
    d
}

/// Builds a tableau from explicit sorted rows of a partition shape.
fn rows_to_tableau(rows: &[Vec<usize>]) -> Tableau {
    let mut cells = Vec::new();
    let mut values = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            cells.push((i + 1, j + 1));
            values.push(v);
        }
    }
    Tableau::new(Diagram::from_cells(cells), values)
}

/// Sorts an arbitrary filling of a partition shape into a standard tableau
/// plus a pointer tableau by value-carrying slides, treating cells in the
/// column-by-column order: rightmost column first, each column bottom to
/// top.
pub fn slide_sort(filling: &Tableau) -> (Tableau, PointerTableau) {
    let lens = partition_rows(filling.shape());
    let mut values: BTreeMap<Cell, usize> = filling.entries().collect();
    let mut pointers: BTreeMap<Cell, isize> =
        values.keys().map(|&c| (c, 0)).collect();
    let mut order: Vec<Cell> = values.keys().copied().collect();
    order.sort_by(|a, b| b.1.cmp(&a.1).then(b.0.cmp(&a.0)));
    for &(i0, j0) in &order {
        // Slide the value at (i0, j0) southeast into sorted position.
        let m = values[&(i0, j0)];
        let (mut i, mut j) = (i0, j0);
        loop {
            let south = (i + 1, j);
            let east = (i, j + 1);
            let sv = values.get(&south).copied();
            let ev = values.get(&east).copied();
            let step = match (sv, ev) {
                (None, None) => None,
                (Some(s), None) => (s < m).then_some((south, s)),
                (None, Some(e)) => (e < m).then_some((east, e)),
                (Some(s), Some(e)) => {
                    let (c, v) = if s < e { (south, s) } else { (east, e) };
                    (v < m).then_some((c, v))
                }
            };
            match step {
                Some((c, v)) => {
                    values.insert((i, j), v);
                    (i, j) = c;
                }
                None => {
                    values.insert((i, j), m);
                    break;
                }
            }
        }
        let (i1, j1) = (i, j);
        for i in i0..i1 {
            let below = pointers[&(i + 1, j0)];
            pointers.insert((i, j0), below - 1);
        }
        pointers.insert((i1, j0), (j1 - j0) as isize);
    }
    let shape = Diagram::from_cells(values.keys().copied());
    let t = Tableau::new(shape, values.values().copied().collect());
    let p_rows: Vec<Vec<isize>> = (1..=lens.len())
        .map(|i| (1..=lens[i - 1]).map(|j| pointers[&(i, j)]).collect())
        .collect();
    (t, PointerTableau::from_rows(p_rows))
}
