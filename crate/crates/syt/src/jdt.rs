//! Jeu de taquin: forward slides, rectification, and the slide-based
//! Robinson–Schensted correspondence.
//!
//! Slides operate on tableaux of skew shape. An *inner corner* of the cell
//! set `D` is a cell `c ∉ D` such that `D ∪ {c}` is again a skew shape and
//! some cell of `D` lies weakly southeast of `c`. A forward slide moves the
//! hole at an inner corner southeast — always into the smaller of its two
//! neighbors — until it exits the shape; rectification repeats slides until
//! the cell `(1,1)` belongs to the shape, at which point the shape is an
//! ordinary partition shape. The rectified tableau does not depend on the
//! order in which inner corners are chosen, which the tests and the
//! verification suites exercise by comparing several corner policies.

use std::collections::BTreeMap;

use crate::diagram::{Cell, Diagram};
use crate::perm::Perm;
use crate::sampling::SeedRng;
use crate::tableau::Tableau;

/// A tableau kept as a plain cell map, the working representation for
/// slides (which move cells outside any fixed normalized frame).
pub type CellMap = BTreeMap<Cell, usize>;

/// How rectification picks among the available inner corners.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SlidePolicy {
    /// Smallest `(row, column)` — the default.
    LexMin,
    /// Largest `(row, column)` (the southeast-most corner).
    LexMax,
    /// Smallest `(column, row)`.
    ColMin,
    /// Uniformly random corner, driven by the given seed.
    Random(u64),
}

/// Whether a set of cells forms a skew shape: rows and columns occupy
/// contiguous intervals, and both the left and right ends of the rows move
/// weakly left going down.
pub fn is_skew_cellset(cells: &CellMap) -> bool {
    is_skew_cells(cells.keys().copied())
}

fn is_skew_cells(cells: impl IntoIterator<Item = Cell>) -> bool {
    let mut rows: BTreeMap<usize, (usize, usize, usize)> = BTreeMap::new(); // row -> (min, max, count)
    let mut cols: BTreeMap<usize, (usize, usize, usize)> = BTreeMap::new();
    for (r, c) in cells {
        let row = rows.entry(r).or_insert((c, c, 0));
        row.0 = row.0.min(c);
        row.1 = row.1.max(c);
        row.2 += 1;
        let col = cols.entry(c).or_insert((r, r, 0));
        col.0 = col.0.min(r);
        col.1 = col.1.max(r);
        col.2 += 1;
    }
    let contiguous =
        |m: &BTreeMap<usize, (usize, usize, usize)>| m.values().all(|&(lo, hi, k)| hi - lo + 1 == k);
    if !contiguous(&rows) || !contiguous(&cols) {
        return false;
    }
    let mut prev: Option<(usize, usize)> = None;
    for &(lo, hi, _) in rows.values() {
        if let Some((plo, phi)) = prev {
            if lo > plo || hi > phi {
                return false;
            }
        }
        prev = Some((lo, hi));
    }
    true
}

/// The inner corners of a cell set, in lexicographic order.
pub fn inner_corners(cells: &CellMap) -> Vec<Cell> {
    let mut out = Vec::new();
    if cells.is_empty() {
        return out;
    }
    // Candidates sit immediately northwest of the shape: (i, j) with a cell
    // of D weakly southeast. It suffices to scan the bounding rectangle.
    let max_row = cells.keys().map(|c| c.0).max().unwrap();
    let max_col = cells.keys().map(|c| c.1).max().unwrap();
    for i in 1..=max_row {
        for j in 1..=max_col {
            let c = (i, j);
            if cells.contains_key(&c) {
                continue;
            }
            if !cells.keys().any(|&(r2, c2)| r2 >= i && c2 >= j) {
                continue;
            }
            let mut with: Vec<Cell> = cells.keys().copied().collect();
            with.push(c);
            if is_skew_cells(with) {
                out.push(c);
            }
        }
    }
    out
}

/// Slides the hole from the inner corner `c_in` southeast out of the
/// tableau, mutating it in place. Returns the vacated cell.
///
/// # Panics
/// Panics if `c_in` is already occupied.
pub fn forward_slide(t: &mut CellMap, c_in: Cell) -> Cell {
    assert!(!t.contains_key(&c_in), "slide must start at a hole");
    let mut c = c_in;
    loop {
        let south = (c.0 + 1, c.1);
        let east = (c.0, c.1 + 1);
        let has_south = t.contains_key(&south);
        let has_east = t.contains_key(&east);
        if !has_south && !has_east {
            return c;
        }
        let next = if has_south && (!has_east || t[&south] < t[&east]) {
            south
        } else {
            east
        };
        let v = t.remove(&next).expect("neighbor just checked");
        t.insert(c, v);
        c = next;
    }
}

/// Rectifies a skew tableau by repeated forward slides until `(1,1)` is
/// occupied; the result is an ordinary-shape standard tableau, independent
/// of the corner policy.
pub fn rectify_map(mut t: CellMap, policy: SlidePolicy) -> Tableau {
    let mut rng = match policy {
        SlidePolicy::Random(seed) => Some(SeedRng::new(seed)),
        _ => None,
    };
    while !t.is_empty() && !t.contains_key(&(1, 1)) {
        let corners = inner_corners(&t);
        assert!(!corners.is_empty(), "a skew shape off the origin has inner corners");
        let c = match policy {
            SlidePolicy::LexMin => corners[0],
            SlidePolicy::LexMax => corners[corners.len() - 1],
            SlidePolicy::ColMin => {
                *corners.iter().min_by_key(|&&(r, c)| (c, r)).unwrap()
            }
            SlidePolicy::Random(_) => {
                corners[rng.as_mut().unwrap().below(corners.len())]
            }
        };
        forward_slide(&mut t, c);
    }
    map_to_tableau(&t)
}

/// Rectifies a tableau (given on any skew cell set) with the default
/// corner policy.
pub fn rectify(t: &Tableau) -> Tableau {
    rectify_map(tableau_to_map(t), SlidePolicy::LexMin)
}

/// Converts a tableau into the working cell-map representation.
pub fn tableau_to_map(t: &Tableau) -> CellMap {
    t.entries().collect()
}

/// Converts a cell map back into a tableau on its normalized diagram.
pub fn map_to_tableau(t: &CellMap) -> Tableau {
    let shape = Diagram::from_cells(t.keys().copied());
    // The keys were already sorted row-major; normalization preserves order.
    Tableau::new(shape, t.values().copied().collect())
}

/// The antidiagonal tableau of a permutation: cell `(i, n+1-i)` in column
/// `j = n+1-i` holds `π(j)`.
pub fn antidiagonal_tableau(pi: &Perm) -> Tableau {
    let n = pi.n();
    let cells: Vec<Cell> = (1..=n).map(|i| (i, n + 1 - i)).collect();
    let shape = Diagram::from_cells(cells);
    let values = (1..=n).map(|i| pi.apply(n + 1 - i)).collect();
    Tableau::new(shape, values)
}

/// The Robinson–Schensted pair of a permutation, computed by rectifying the
/// antidiagonal tableaux of `π` and `π⁻¹`.
pub fn rs_pair(pi: &Perm) -> (Tableau, Tableau) {
    let p = rectify(&antidiagonal_tableau(pi));
    let q = rectify(&antidiagonal_tableau(&pi.inverse()));
    (p, q)
}

/// Inverts the Robinson–Schensted correspondence by reverse row insertion.
///
/// # Panics
/// Panics if the two tableaux do not have the same ordinary shape or are
/// not standard.
pub fn rs_inverse(p: &Tableau, q: &Tableau) -> Perm {
    assert_eq!(p.shape(), q.shape(), "P and Q must have the same shape");
    assert!(p.is_standard() && q.is_standard(), "P and Q must be standard");
    let n = p.size();
    // rows[r] = the entries of row r+1 of P, in column order.
    let shape_rows = p.shape().rows();
    let mut rows: Vec<Vec<usize>> = shape_rows
        .iter()
        .map(|(&r, cols)| cols.iter().map(|&c| p.value_at((r, c))).collect())
        .collect();
    let mut images = vec![0; n];
    for k in (1..=n).rev() {
        let (r0, _) = q.cell_of(k);
        let row_idx = r0 - 1;
        let mut x = rows[row_idx].pop().expect("corner entry to remove");
        for r in (0..row_idx).rev() {
            // Reverse-bump: replace the rightmost entry smaller than x.
            let pos = rows[r]
                .iter()
                .rposition(|&y| y < x)
                .expect("reverse insertion always finds a smaller entry");
            std::mem::swap(&mut x, &mut rows[r][pos]);
        }
        images[k - 1] = x;
    }
    Perm::new(images)
}
