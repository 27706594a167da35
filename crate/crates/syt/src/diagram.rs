//! Diagrams: finite sets of cells in the plane, the common ground for every
//! shape family.
//!
//! Cells are `(row, column)` pairs in matrix orientation (row 1 at the top,
//! column 1 at the left). Diagrams are kept normalized so that the smallest
//! occupied row and the smallest occupied column are both 1. Cells are
//! partially ordered componentwise: `(i, j) ≤ (i', j')` iff `i ≤ i'` and
//! `j ≤ j'`; a standard tableau is exactly a linear extension of this order
//! restricted to the diagram.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// A cell `(row, column)`, 1-based in a normalized diagram.
pub type Cell = (usize, usize);

/// A finite set of cells, normalized and sorted row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    cells: Vec<Cell>,
}

impl Diagram {
    /// Builds a diagram from any collection of cells, translating it so the
    /// minimal occupied row and column are both 1.
    ///
    /// # Panics
    /// Panics if the same cell appears twice.
    pub fn new(cells: impl IntoIterator<Item = (isize, isize)>) -> Self {
        let raw: Vec<(isize, isize)> = cells.into_iter().collect();
        if raw.is_empty() {
            return Self { cells: Vec::new() };
        }
        let min_row = raw.iter().map(|c| c.0).min().unwrap();
        let min_col = raw.iter().map(|c| c.1).min().unwrap();
        let mut cells: Vec<Cell> = raw
            .iter()
            .map(|&(r, c)| ((r - min_row + 1) as usize, (c - min_col + 1) as usize))
            .collect();
        cells.sort_unstable();
        let before = cells.len();
        cells.dedup();
        assert_eq!(before, cells.len(), "duplicate cells in diagram");
        Self { cells }
    }

    /// Builds a diagram from 1-based cells that are already normalized.
    pub fn from_cells(cells: impl IntoIterator<Item = Cell>) -> Self {
        Self::new(cells.into_iter().map(|(r, c)| (r as isize, c as isize)))
    }

    pub fn empty() -> Self {
        Self { cells: Vec::new() }
    }

    /// The cells in row-major order.
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.cells.binary_search(&cell).is_ok()
    }

    /// Largest occupied row index (0 for the empty diagram).
    pub fn height(&self) -> usize {
        self.cells.iter().map(|c| c.0).max().unwrap_or(0)
    }

    /// Largest occupied column index (0 for the empty diagram).
    pub fn width(&self) -> usize {
        self.cells.iter().map(|c| c.1).max().unwrap_or(0)
    }

    /// Occupied rows in order, each with its sorted column list.
    pub fn rows(&self) -> BTreeMap<usize, Vec<usize>> {
        let mut rows: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &(r, c) in &self.cells {
            rows.entry(r).or_default().push(c);
        }
        rows
    }

    /// Occupied columns in order, each with its sorted row list.
    pub fn columns(&self) -> BTreeMap<usize, Vec<usize>> {
        let mut cols: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &(r, c) in &self.cells {
            cols.entry(c).or_default().push(r);
        }
        cols
    }

    /// Whether every row and every column occupies a contiguous interval.
    pub fn is_line_convex(&self) -> bool {
        self.rows().values().all(|cols| is_interval(cols))
            && self.columns().values().all(|rows| is_interval(rows))
    }

    /// Connected components under edge-adjacency (cells sharing a side),
    /// each normalized, ordered by their smallest original cell.
    pub fn path_components(&self) -> Vec<Diagram> {
        self.components(|a, b| {
            (a.0 == b.0 && a.1.abs_diff(b.1) == 1) || (a.1 == b.1 && a.0.abs_diff(b.0) == 1)
        })
    }

    /// Connected components under comparability (cells related by the
    /// componentwise order), each normalized, ordered by their smallest
    /// original cell.
    ///
    /// The tableau count of a diagram factors over these components as a
    /// multinomial times the component counts, so they are the right notion
    /// of independence for enumeration.
    pub fn order_components(&self) -> Vec<Diagram> {
        self.components(|a, b| cells_comparable(a, b))
    }

    fn components(&self, related: impl Fn(Cell, Cell) -> bool) -> Vec<Diagram> {
        let n = self.cells.len();
        let mut assigned = vec![usize::MAX; n];
        let mut count = 0;
        for start in 0..n {
            if assigned[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            assigned[start] = count;
            while let Some(i) = stack.pop() {
                for j in 0..n {
                    if assigned[j] == usize::MAX && related(self.cells[i], self.cells[j]) {
                        assigned[j] = count;
                        stack.push(j);
                    }
                }
            }
            count += 1;
        }
        (0..count)
            .map(|k| {
                Diagram::from_cells(
                    self.cells
                        .iter()
                        .zip(&assigned)
                        .filter(|&(_, &a)| a == k)
                        .map(|(&c, _)| c),
                )
            })
            .collect()
    }

    /// The transpose `(i, j) ↦ (j, i)` (reflection in the main diagonal).
    pub fn transpose(&self) -> Diagram {
        Diagram::new(self.cells.iter().map(|&(r, c)| (c as isize, r as isize)))
    }

    /// Reflection in the antidiagonal, `(i, j) ↦ (-j, -i)`.
    pub fn antitranspose(&self) -> Diagram {
        Diagram::new(self.cells.iter().map(|&(r, c)| (-(c as isize), -(r as isize))))
    }

    /// Rotation by 180 degrees.
    pub fn rotate180(&self) -> Diagram {
        Diagram::new(self.cells.iter().map(|&(r, c)| (-(r as isize), -(c as isize))))
    }

    /// Rotation by 90 degrees clockwise.
    pub fn rotate90(&self) -> Diagram {
        Diagram::new(self.cells.iter().map(|&(r, c)| (c as isize, -(r as isize))))
    }

    /// Reflection in a vertical axis (reverses each row).
    pub fn flip_horizontal(&self) -> Diagram {
        Diagram::new(self.cells.iter().map(|&(r, c)| (r as isize, -(c as isize))))
    }

    /// Reflection in a horizontal axis (reverses each column).
    pub fn flip_vertical(&self) -> Diagram {
        Diagram::new(self.cells.iter().map(|&(r, c)| (-(r as isize), c as isize)))
    }

    /// Cells of `self` minus the cells of `other` (kept in place, then
    /// renormalized).
    pub fn difference(&self, other: &Diagram) -> Diagram {
        let other_set: BTreeSet<Cell> = other.cells.iter().copied().collect();
        Diagram::from_cells(self.cells.iter().copied().filter(|c| !other_set.contains(c)))
    }

    /// ASCII picture, one row per line with `.` for absent cells.
    pub fn ascii(&self) -> String {
        let mut out = String::new();
        let rows = self.rows();
        let width = self.width();
        for r in 1..=self.height() {
            let cols: BTreeSet<usize> = rows.get(&r).into_iter().flatten().copied().collect();
            for c in 1..=width {
                out.push(if cols.contains(&c) { '#' } else { '.' });
            }
            // Trim trailing dots for readability.
            while out.ends_with('.') {
                out.pop();
            }
            out.push('\n');
        }
        out
    }
}

/// Whether two cells are comparable in the componentwise order.
pub fn cells_comparable(a: Cell, b: Cell) -> bool {
    (a.0 <= b.0 && a.1 <= b.1) || (b.0 <= a.0 && b.1 <= a.1)
}

fn is_interval(sorted: &[usize]) -> bool {
    sorted.windows(2).all(|w| w[1] == w[0] + 1)
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self
            .cells
            .iter()
            .map(|&(r, c)| format!("({r},{c})"))
            .collect();
        write!(f, "{{{}}}", body.join(""))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_translates_to_the_origin() {
        let d = Diagram::new([(3, 5), (3, 6), (4, 5)]);
        assert_eq!(d.cells(), &[(1, 1), (1, 2), (2, 1)]);
        assert_eq!(d.size(), 3);
        assert!(d.contains((2, 1)));
        assert!(!d.contains((2, 2)));
    }

    #[test]
    fn path_and_order_components_can_differ() {
        // Two diagonally placed cells: edge-disconnected but order-connected.
        let d = Diagram::from_cells([(1, 1), (2, 2)]);
        assert_eq!(d.path_components().len(), 2);
        assert_eq!(d.order_components().len(), 1);
    }

    #[test]
    fn skew_example_with_two_components_of_each_kind() {
        // Rows 1-2 sit strictly northeast of rows 3-4, so the diagram is
        // disconnected in both senses.
        let d = Diagram::from_cells([
            (1, 4),
            (1, 5),
            (2, 4),
            (2, 5),
            (2, 6),
            (3, 1),
            (3, 2),
            (3, 3),
            (4, 1),
        ]);
        assert_eq!(d.path_components().len(), 2);
        assert_eq!(d.order_components().len(), 2);
    }

    #[test]
    fn order_components_of_a_scattered_diagram() {
        // Cells (1,3),(1,4) form one comparability component; (2,2),(3,1),(4,2)
        // hang together through (4,2) even though (2,2) and (3,1) are
        // incomparable to each other.
        let d = Diagram::from_cells([(1, 3), (1, 4), (2, 2), (3, 1), (4, 2)]);
        let order = d.order_components();
        assert_eq!(order.len(), 2);
        assert_eq!(d.path_components().len(), 4);
        let sizes: Vec<usize> = order.iter().map(|c| c.size()).collect();
        assert_eq!(sizes, vec![2, 3]);
    }

    #[test]
    fn line_convexity_detects_a_gap_in_a_column() {
        // Path-connected but column 1 occupies rows {1, 3}.
        let d = Diagram::from_cells([(1, 1), (1, 2), (2, 2), (3, 1), (3, 2), (3, 3), (3, 4)]);
        assert_eq!(d.path_components().len(), 1);
        assert!(!d.is_line_convex());
    }

    #[test]
    fn transforms_are_involutive_or_of_order_four() {
        let d = Diagram::from_cells([(1, 1), (1, 2), (1, 3), (2, 1), (2, 2)]);
        assert_eq!(d.transpose().transpose(), d);
        assert_eq!(d.rotate180().rotate180(), d);
        assert_eq!(d.antitranspose().antitranspose(), d);
        assert_eq!(d.flip_horizontal().flip_horizontal(), d);
        assert_eq!(
            d.rotate90().rotate90().rotate90().rotate90(),
            d
        );
        // Transpose of a partition diagram is the conjugate's diagram.
        assert_eq!(
            d.transpose().cells(),
            &[(1, 1), (1, 2), (2, 1), (2, 2), (3, 1)]
        );
    }
}
