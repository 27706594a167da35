//! Shape families and the ASCII shape grammar.
//!
//! The grammar, used by the CLI and round-tripped by `Display`:
//!
//! | text                    | shape                                         |
//! |-------------------------|-----------------------------------------------|
//! | `4,3,1`                 | ordinary partition shape                      |
//! | `6,4,3,1/4,2,1`         | skew shape (outer/inner)                      |
//! | `4,3,1*`                | shifted shape of a strict partition           |
//! | `zz:9:1,3,5,6`          | zigzag of size 9 with rises after 1, 3, 5, 6  |
//! | `4,4,2,1\1`             | ordinary shape truncated from the row ends    |
//! | `4,3,2,1*\1,1`          | shifted shape truncated from the row ends     |
//! | `cells:(1,1)(2,1)(2,2)` | explicit cell list                            |

use std::error::Error;
use std::fmt;

use crate::diagram::Diagram;
use crate::partition::{Partition, StrictPartition};

/// Error for malformed shape strings or semantically invalid shapes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapeError(pub String);

impl fmt::Display for ShapeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid shape: {}", self.0)
    }
}

impl Error for ShapeError {}

fn err<T>(msg: impl Into<String>) -> Result<T, ShapeError> {
    Err(ShapeError(msg.into()))
}

/// A shape description in one of the supported families.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ShapeSpec {
    /// Ordinary partition shape `[λ]`.
    Ordinary(Partition),
    /// Skew shape `[λ/μ]` with `μ ⊆ λ`.
    Skew(Partition, Partition),
    /// Shifted shape `[λ*]`: row `i` occupies columns `i .. λ_i + i - 1`.
    Shifted(StrictPartition),
    /// Zigzag of size `n`: cell `i+1` lies above cell `i` exactly when
    /// `i ∈ s`, otherwise to its right.
    Zigzag { n: usize, s: Vec<usize> },
    /// Ordinary shape with `κ_i` cells removed from the right end of row `i`.
    TruncatedOrdinary(Partition, Partition),
    /// Shifted shape with `κ_i` cells removed from the right end of row `i`.
    TruncatedShifted(StrictPartition, Partition),
    /// Explicit list of cells.
    Cells(Vec<(usize, usize)>),
}

impl ShapeSpec {
    /// Parses the ASCII shape grammar.
    pub fn parse(text: &str) -> Result<ShapeSpec, ShapeError> {
        let text = text.trim();
        if text.is_empty() {
            return err("empty shape string");
        }
        if let Some(rest) = text.strip_prefix("zz:") {
            let Some((n_str, s_str)) = rest.split_once(':') else {
                return err(format!("zigzag must look like zz:<n>:<list>, got {text:?}"));
            };
            let n: usize = n_str
                .parse()
                .map_err(|_| ShapeError(format!("bad zigzag size {n_str:?}")))?;
            if n == 0 {
                return err("zigzag size must be positive");
            }
            let s = if s_str.is_empty() {
                Vec::new()
            } else {
                parse_number_list(s_str)?
            };
            for w in s.windows(2) {
                if w[0] >= w[1] {
                    return err(format!("zigzag rise set must be strictly increasing, got {s:?}"));
                }
            }
            if s.iter().any(|&x| x == 0 || x >= n) {
                return err(format!("zigzag rises must lie in 1..{}", n - 1));
            }
            return Ok(ShapeSpec::Zigzag { n, s });
        }
        if let Some(rest) = text.strip_prefix("cells:") {
            return parse_cells(rest);
        }
        if let Some((left, right)) = text.split_once('\\') {
            let kappa = Partition::try_new(parse_number_list(right)?).map_err(ShapeError)?;
            return if let Some(stripped) = left.strip_suffix('*') {
                let la =
                    StrictPartition::try_new(parse_number_list(stripped)?).map_err(ShapeError)?;
                Ok(ShapeSpec::TruncatedShifted(la, kappa))
            } else {
                let la = Partition::try_new(parse_number_list(left)?).map_err(ShapeError)?;
                Ok(ShapeSpec::TruncatedOrdinary(la, kappa))
            };
        }
        if let Some((outer, inner)) = text.split_once('/') {
            let la = Partition::try_new(parse_number_list(outer)?).map_err(ShapeError)?;
            let mu = Partition::try_new(parse_number_list(inner)?).map_err(ShapeError)?;
            return Ok(ShapeSpec::Skew(la, mu));
        }
        if let Some(stripped) = text.strip_suffix('*') {
            let la = StrictPartition::try_new(parse_number_list(stripped)?).map_err(ShapeError)?;
            return Ok(ShapeSpec::Shifted(la));
        }
        let la = Partition::try_new(parse_number_list(text)?).map_err(ShapeError)?;
        Ok(ShapeSpec::Ordinary(la))
    }

    /// The shape's cells in its defining coordinate frame (1-based, but not
    /// necessarily starting at row 1 / column 1 — a skew shape keeps the
    /// outer partition's frame, which is what jeu de taquin needs).
    pub fn cells_raw(&self) -> Result<Vec<(usize, usize)>, ShapeError> {
        match self {
            ShapeSpec::Ordinary(la) => Ok(partition_cells(la)),
            ShapeSpec::Skew(la, mu) => {
                if !la.contains(mu) {
                    return err(format!("inner shape {mu} does not fit inside {la}"));
                }
                let mut cells = Vec::new();
                for i in 1..=la.len() {
                    for j in mu.part(i) + 1..=la.part(i) {
                        cells.push((i, j));
                    }
                }
                Ok(cells)
            }
            ShapeSpec::Shifted(la) => Ok(shifted_cells(la)),
            ShapeSpec::Zigzag { n, s } => Ok(zigzag_cells(*n, s)),
            ShapeSpec::TruncatedOrdinary(la, kappa) => {
                let mut cells = Vec::new();
                for i in 1..=la.len() {
                    let (lam, kap) = (la.part(i), kappa.part(i));
                    if kap > lam {
                        return err(format!("truncation {kappa} exceeds row {i} of {la}"));
                    }
                    for j in 1..=lam - kap {
                        cells.push((i, j));
                    }
                }
                Ok(cells)
            }
            ShapeSpec::TruncatedShifted(la, kappa) => {
                let mut cells = Vec::new();
                for i in 1..=la.len() {
                    let (lam, kap) = (la.part(i), kappa.part(i));
                    if kap > lam {
                        return err(format!("truncation {kappa} exceeds row {i} of {la}"));
                    }
                    for j in i..i + lam - kap {
                        cells.push((i, j));
                    }
                }
                Ok(cells)
            }
            ShapeSpec::Cells(cells) => {
                if cells.is_empty() {
                    return err("cell list must be nonempty");
                }
                if cells.iter().any(|&(r, c)| r == 0 || c == 0) {
                    return err("cells are 1-based");
                }
                let mut seen = cells.clone();
                seen.sort_unstable();
                if seen.windows(2).any(|w| w[0] == w[1]) {
                    return err("duplicate cells");
                }
                Ok(cells.clone())
            }
        }
    }

    /// The normalized diagram of this shape.
    pub fn materialize(&self) -> Result<Diagram, ShapeError> {
        Ok(Diagram::from_cells(self.cells_raw()?))
    }

    /// Number of cells.
    pub fn size(&self) -> Result<usize, ShapeError> {
        Ok(self.cells_raw()?.len())
    }
}

fn partition_cells(la: &Partition) -> Vec<(usize, usize)> {
    let mut cells = Vec::new();
    for i in 1..=la.len() {
        for j in 1..=la.part(i) {
            cells.push((i, j));
        }
    }
    cells
}

fn shifted_cells(la: &StrictPartition) -> Vec<(usize, usize)> {
    let mut cells = Vec::new();
    for i in 1..=la.len() {
        for j in i..i + la.part(i) {
            cells.push((i, j));
        }
    }
    cells
}

fn zigzag_cells(n: usize, s: &[usize]) -> Vec<(usize, usize)> {
    // Walk the chain from its southwest end; step up after cell i when
    // i ∈ s, otherwise step right. Then shift into the positive quadrant.
    let mut pos = (0isize, 0isize);
    let mut raw = vec![pos];
    for i in 1..n {
        if s.contains(&i) {
            pos = (pos.0 - 1, pos.1);
        } else {
            pos = (pos.0, pos.1 + 1);
        }
        raw.push(pos);
    }
    let min_row = raw.iter().map(|c| c.0).min().unwrap();
    raw.into_iter()
        .map(|(r, c)| ((r - min_row + 1) as usize, (c + 1) as usize))
        .collect()
}

/// The composition `(s_1, s_2 - s_1, ..., n - s_k)` encoding the row lengths
/// of the zigzag, from the top row down.
pub fn zigzag_composition(n: usize, s: &[usize]) -> Vec<usize> {
    let mut bounds = vec![0];
    bounds.extend_from_slice(s);
    bounds.push(n);
    bounds.windows(2).map(|w| w[1] - w[0]).collect()
}

fn parse_number_list(text: &str) -> Result<Vec<usize>, ShapeError> {
    text.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<usize>()
                .map_err(|_| ShapeError(format!("bad number {tok:?}")))
        })
        .collect()
}

fn parse_cells(text: &str) -> Result<ShapeSpec, ShapeError> {
    let mut cells = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let Some(stripped) = rest.strip_prefix('(') else {
            return err(format!("expected '(' in cell list at {rest:?}"));
        };
        let Some((body, tail)) = stripped.split_once(')') else {
            return err(format!("unclosed cell in {text:?}"));
        };
        let Some((r, c)) = body.split_once(',') else {
            return err(format!("cell must be (row,col), got ({body})"));
        };
        let r: usize = r
            .trim()
            .parse()
            .map_err(|_| ShapeError(format!("bad row {r:?}")))?;
        let c: usize = c
            .trim()
            .parse()
            .map_err(|_| ShapeError(format!("bad column {c:?}")))?;
        cells.push((r, c));
        rest = tail.trim();
    }
    if cells.is_empty() {
        return err("cell list must be nonempty");
    }
    Ok(ShapeSpec::Cells(cells))
}

impl fmt::Display for ShapeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |parts: &[usize]| {
            parts
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        match self {
            ShapeSpec::Ordinary(la) => write!(f, "{}", join(la.parts())),
            ShapeSpec::Skew(la, mu) => write!(f, "{}/{}", join(la.parts()), join(mu.parts())),
            ShapeSpec::Shifted(la) => write!(f, "{}*", join(la.parts())),
            ShapeSpec::Zigzag { n, s } => write!(f, "zz:{}:{}", n, join(s)),
            ShapeSpec::TruncatedOrdinary(la, kappa) => {
                write!(f, "{}\\{}", join(la.parts()), join(kappa.parts()))
            }
            ShapeSpec::TruncatedShifted(la, kappa) => {
                write!(f, "{}*\\{}", join(la.parts()), join(kappa.parts()))
            }
            ShapeSpec::Cells(cells) => {
                write!(f, "cells:")?;
                for (r, c) in cells {
                    write!(f, "({r},{c})")?;
                }
                Ok(())
            }
        }
    }
}
