//! Bijective fillings of diagrams, standardness, and the descent / inversion
//! statistics defined on them.

use std::fmt;

use crate::diagram::{Cell, Diagram};
use crate::perm::Perm;

/// A bijective filling of a diagram with `1..=n`.
///
/// Standardness (entries increasing toward the southeast) is a queryable
/// property rather than a construction invariant, because the sorting
/// bijections start from arbitrary fillings.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    shape: Diagram,
    /// `values[k]` is the entry in `shape.cells()[k]` (row-major order).
    values: Vec<usize>,
}

/// All statistics of one tableau in a single record.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StatRecord {
    pub des_set: Vec<usize>,
    pub des: usize,
    pub maj: usize,
    pub inv: usize,
    pub winv: usize,
    pub sign: i8,
}

impl Tableau {
    /// Builds a tableau from row-major values.
    ///
    /// # Panics
    /// Panics if `values` is not a bijection onto `1..=n`.
    pub fn new(shape: Diagram, values: Vec<usize>) -> Self {
        let n = shape.size();
        assert_eq!(values.len(), n, "one value per cell");
        let mut seen = vec![false; n + 1];
        for &v in &values {
            assert!(v >= 1 && v <= n && !seen[v], "values must be a bijection onto 1..={n}");
            seen[v] = true;
        }
        Self { shape, values }
    }

    /// Builds a tableau from per-row value lists (rows in top-to-bottom
    /// order, each row's values in column order).
    pub fn from_rows(shape: Diagram, rows: &[Vec<usize>]) -> Result<Self, String> {
        let shape_rows = shape.rows();
        if rows.len() != shape_rows.len() {
            return Err(format!(
                "expected {} rows, got {}",
                shape_rows.len(),
                rows.len()
            ));
        }
        let mut values = vec![0; shape.size()];
        for ((row_idx, cols), row_vals) in shape_rows.iter().zip(rows) {
            if cols.len() != row_vals.len() {
                return Err(format!(
                    "row {row_idx} has {} cells but {} values were given",
                    cols.len(),
                    row_vals.len()
                ));
            }
            for (&col, &v) in cols.iter().zip(row_vals) {
                let k = shape
                    .cells()
                    .binary_search(&(*row_idx, col))
                    .expect("cell from shape.rows()");
                values[k] = v;
            }
        }
        let n = shape.size();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v < 1 || v > n || seen[v] {
                return Err(format!("values must be a bijection onto 1..={n}"));
            }
            seen[v] = true;
        }
        Ok(Self { shape, values })
    }

    pub fn shape(&self) -> &Diagram {
        &self.shape
    }

    pub fn size(&self) -> usize {
        self.values.len()
    }

    /// Entry at a cell.
    ///
    /// # Panics
    /// Panics if the cell is not in the shape.
    pub fn value_at(&self, cell: Cell) -> usize {
        let k = self
            .shape
            .cells()
            .binary_search(&cell)
            .unwrap_or_else(|_| panic!("cell {cell:?} not in shape"));
        self.values[k]
    }

    /// The cell holding `value`.
    pub fn cell_of(&self, value: usize) -> Cell {
        let k = self
            .values
            .iter()
            .position(|&v| v == value)
            .unwrap_or_else(|| panic!("value {value} not in tableau"));
        self.shape.cells()[k]
    }

    /// `(cell, value)` pairs in row-major cell order.
    pub fn entries(&self) -> impl Iterator<Item = (Cell, usize)> + '_ {
        self.shape.cells().iter().copied().zip(self.values.iter().copied())
    }

    /// Cells of `1..=n` in value order.
    pub fn cells_by_value(&self) -> Vec<Cell> {
        let mut by_value = vec![(0, 0); self.values.len()];
        for (cell, v) in self.entries() {
            by_value[v - 1] = cell;
        }
        by_value
    }

    /// Whether entries increase along the componentwise order: for every
    /// comparable pair of cells, the northwest one holds the smaller entry.
    /// For diagrams with gaps this is stronger than comparing adjacent
    /// neighbors, and it is the standardness notion under which tableaux are
    /// linear extensions of the cell order.
    pub fn is_standard(&self) -> bool {
        let cells = self.shape.cells();
        for a in 0..cells.len() {
            for b in 0..cells.len() {
                let (ca, cb) = (cells[a], cells[b]);
                if ca != cb && ca.0 <= cb.0 && ca.1 <= cb.1 && self.values[a] > self.values[b] {
                    return false;
                }
            }
        }
        true
    }

    /// Descent set: `i` such that `i + 1` lies in a strictly lower row.
    pub fn des_set(&self) -> Vec<usize> {
        let by_value = self.cells_by_value();
        (1..self.size())
            .filter(|&i| by_value[i - 1].0 < by_value[i].0)
            .collect()
    }

    /// Major index: the sum of the descents.
    pub fn maj(&self) -> usize {
        self.des_set().iter().sum()
    }

    /// Inversion number: pairs `i < j` with `j` strictly south and strictly
    /// west of `i`.
    pub fn inv(&self) -> usize {
        let by_value = self.cells_by_value();
        count_pairs(&by_value, |a, b| b.0 > a.0 && b.1 < a.1)
    }

    /// Weak inversion number: pairs `i < j` with `j` strictly south and
    /// weakly west of `i`.
    pub fn winv(&self) -> usize {
        let by_value = self.cells_by_value();
        count_pairs(&by_value, |a, b| b.0 > a.0 && b.1 <= a.1)
    }

    /// `(-1)^inv`.
    pub fn sign(&self) -> i8 {
        if self.inv() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// All statistics at once.
    pub fn stats(&self) -> StatRecord {
        let des_set = self.des_set();
        StatRecord {
            des: des_set.len(),
            maj: des_set.iter().sum(),
            des_set,
            inv: self.inv(),
            winv: self.winv(),
            sign: self.sign(),
        }
    }

    /// The ballot word: the row index of each of `1..=n` in turn.
    pub fn ballot(&self) -> Vec<usize> {
        self.cells_by_value().iter().map(|c| c.0).collect()
    }

    /// Rebuilds an ordinary-shape standard tableau from its ballot word
    /// (entry `i` goes to the end of row `word[i-1]`). Returns `None` if the
    /// word is not a ballot sequence.
    pub fn from_ballot(word: &[usize]) -> Option<Tableau> {
        let height = *word.iter().max()?;
        let mut row_len = vec![0usize; height + 1];
        let mut cells = Vec::new();
        let mut values = Vec::new();
        for (i, &r) in word.iter().enumerate() {
            if r == 0 {
                return None;
            }
            row_len[r] += 1;
            // Prefix counts must stay weakly decreasing by row.
            if r > 1 && row_len[r] > row_len[r - 1] {
                return None;
            }
            cells.push((r, row_len[r]));
            values.push(i + 1);
        }
        let mut paired: Vec<(Cell, usize)> = cells.into_iter().zip(values).collect();
        paired.sort_unstable();
        let shape = Diagram::from_cells(paired.iter().map(|&(c, _)| c));
        Some(Tableau::new(shape, paired.into_iter().map(|(_, v)| v).collect()))
    }

    /// Reading word: rows from bottom to top, each left to right. For a
    /// zigzag shape this bijects standard tableaux with the permutations
    /// whose descent set matches the zigzag's rise set.
    pub fn reading_word(&self) -> Perm {
        let rows = self.shape.rows();
        let mut images = Vec::with_capacity(self.size());
        for (&r, cols) in rows.iter().rev() {
            for &c in cols {
                images.push(self.value_at((r, c)));
            }
        }
        Perm::new(images)
    }

    /// Row-major text form: rows joined by `/`; entries are concatenated
    /// digits when every entry is below 10 and comma-separated otherwise.
    pub fn to_text(&self) -> String {
        let wide = self.size() >= 10;
        let rows = self.shape.rows();
        let mut parts = Vec::new();
        for (&r, cols) in &rows {
            let vals: Vec<String> = cols
                .iter()
                .map(|&c| self.value_at((r, c)).to_string())
                .collect();
            parts.push(if wide { vals.join(",") } else { vals.concat() });
        }
        parts.join("/")
    }

    /// Parses the text form back onto a known shape.
    pub fn from_text(shape: &Diagram, text: &str) -> Result<Tableau, String> {
        let mut rows = Vec::new();
        for chunk in text.split('/') {
            let row: Result<Vec<usize>, String> = if chunk.contains(',') {
                chunk
                    .split(',')
                    .map(|tok| {
                        tok.trim()
                            .parse::<usize>()
                            .map_err(|_| format!("bad entry {tok:?}"))
                    })
                    .collect()
            } else {
                chunk
                    .trim()
                    .chars()
                    .map(|ch| {
                        ch.to_digit(10)
                            .map(|d| d as usize)
                            .ok_or_else(|| format!("bad digit {ch:?}"))
                    })
                    .collect()
            };
            rows.push(row?);
        }
        Tableau::from_rows(shape.clone(), &rows)
    }
}

fn count_pairs(by_value: &[Cell], pred: impl Fn(Cell, Cell) -> bool) -> usize {
    let mut count = 0;
    for i in 0..by_value.len() {
        for j in i + 1..by_value.len() {
            if pred(by_value[i], by_value[j]) {
                count += 1;
            }
        }
    }
    count
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shape::ShapeSpec;

    fn tableau(shape: &str, text: &str) -> Tableau {
        let d = ShapeSpec::parse(shape).unwrap().materialize().unwrap();
        Tableau::from_text(&d, text).unwrap()
    }

    #[test]
    fn statistics_of_the_running_example() {
        let t = tableau("4,3,1", "1258/346/7");
        assert!(t.is_standard());
        let stats = t.stats();
        assert_eq!(stats.des_set, vec![2, 5, 6]);
        assert_eq!(stats.des, 3);
        assert_eq!(stats.maj, 13);
        assert_eq!(stats.inv, 5);
        // winv = inv + Σ_j C(λ'_j, 2) = 5 + 3 + 1 + 1 + 0.
        assert_eq!(stats.winv, 10);
        assert_eq!(stats.sign, -1);
    }

    #[test]
    fn ballot_word_round_trips() {
        let t = tableau("4,3,1", "1258/346/7");
        let word = t.ballot();
        assert_eq!(word, vec![1, 1, 2, 2, 1, 2, 3, 1]);
        assert_eq!(Tableau::from_ballot(&word).unwrap(), t);
        // Not a ballot sequence: row 2 before row 1.
        assert!(Tableau::from_ballot(&[2, 1]).is_none());
    }

    #[test]
    fn standardness_respects_order_not_just_adjacency() {
        // Cells (1,1) and (2,2) are comparable even though not adjacent.
        let d = ShapeSpec::parse("cells:(1,1)(2,2)").unwrap().materialize().unwrap();
        let good = Tableau::from_rows(d.clone(), &[vec![1], vec![2]]).unwrap();
        let bad = Tableau::from_rows(d, &[vec![2], vec![1]]).unwrap();
        assert!(good.is_standard());
        assert!(!bad.is_standard());
    }

    #[test]
    fn reading_word_of_a_zigzag_tableau() {
        let d = ShapeSpec::parse("zz:9:1,3,5,6").unwrap().materialize().unwrap();
        let t = Tableau::from_rows(
            d,
            &[vec![2, 6, 8], vec![5], vec![3, 7], vec![1, 4], vec![9]],
        )
        .unwrap();
        assert!(t.is_standard());
        let pi = t.reading_word();
        assert_eq!(pi.images(), &[9, 1, 4, 3, 7, 5, 2, 6, 8]);
        // Reading from the southwest end makes the rise set the descent set.
        assert_eq!(pi.des_set(), vec![1, 3, 5, 6]);
    }

    #[test]
    fn text_form_uses_commas_for_wide_tableaux() {
        let t = tableau("4,3,1", "1258/346/7");
        assert_eq!(t.to_text(), "1258/346/7");
        let d = ShapeSpec::parse("6,4").unwrap().materialize().unwrap();
        let wide = Tableau::from_rows(
            d.clone(),
            &[vec![1, 2, 3, 4, 5, 10], vec![6, 7, 8, 9]],
        )
        .unwrap();
        assert_eq!(wide.to_text(), "1,2,3,4,5,10/6,7,8,9");
        assert_eq!(Tableau::from_text(&d, &wide.to_text()).unwrap(), wide);
    }
}
