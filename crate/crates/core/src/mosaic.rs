//! Rectangular arrays of tiles and the predicates that make them knot mosaics.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, ParseError, ParseErrorKind, Result};
use crate::tile::Tile;

/// An `rows x cols` array of tiles stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mosaic {
    rows: usize,
    cols: usize,
    cells: Vec<Tile>,
}

impl Mosaic {
    pub fn new(rows: usize, cols: usize, cells: Vec<Tile>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyDimension { rows, cols });
        }
        if cells.len() != rows * cols {
            return Err(Error::CellCount {
                rows,
                cols,
                expected: rows * cols,
                actual: cells.len(),
            });
        }
        Ok(Mosaic { rows, cols, cells })
    }

    /// Builds a mosaic from tile indices, rejecting anything outside `0..=10`.
    pub fn from_indices(rows: usize, cols: usize, indices: &[u8]) -> Result<Self> {
        let cells = indices
            .iter()
            .map(|&i| {
                Tile::new(i)
                    .ok_or_else(|| Error::Domain(format!("tile index {i} is not in 0..=10")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(rows, cols, cells)
    }

    pub fn blank(rows: usize, cols: usize) -> Result<Self> {
        Self::new(rows, cols, vec![Tile::BLANK; rows * cols])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn cells(&self) -> &[Tile] {
        &self.cells
    }

    pub fn get(&self, row: usize, col: usize) -> Tile {
        self.cells[row * self.cols + col]
    }

    pub fn row(&self, row: usize) -> &[Tile] {
        &self.cells[row * self.cols..(row + 1) * self.cols]
    }

    /// True iff every pair of neighbouring tiles agrees on the presence of a
    /// connection point along their common edge.
    pub fn is_suitably_connected(&self) -> bool {
        for r in 0..self.rows {
            for c in 0..self.cols {
                let p = self.get(r, c).profile();
                if c + 1 < self.cols && p.east() != self.get(r, c + 1).profile().west() {
                    return false;
                }
                if r + 1 < self.rows && p.south() != self.get(r + 1, c).profile().north() {
                    return false;
                }
            }
        }
        true
    }

    /// True iff no connection point lies on the outer boundary.
    pub fn has_clean_boundary(&self) -> bool {
        let top = self.row(0).iter().all(|t| !t.profile().north());
        let bottom = self.row(self.rows - 1).iter().all(|t| !t.profile().south());
        let sides = (0..self.rows).all(|r| {
            !self.get(r, 0).profile().west() && !self.get(r, self.cols - 1).profile().east()
        });
        top && bottom && sides
    }

    pub fn is_knot_mosaic(&self) -> bool {
        self.is_suitably_connected() && self.has_clean_boundary()
    }

    /// Reflects the mosaic across its main diagonal, reflecting every tile
    /// along with it.
    pub fn transpose(&self) -> Mosaic {
        let mut cells = Vec::with_capacity(self.cells.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                cells.push(self.get(r, c).transposed());
            }
        }
        Mosaic {
            rows: self.cols,
            cols: self.rows,
            cells,
        }
    }

    /// Places `other` to the right of `self`. Both must be knot mosaics with
    /// the same number of rows.
    pub fn concat_horizontal(&self, other: &Mosaic) -> Result<Mosaic> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "horizontal concatenation needs equal row counts, got {} and {}",
                self.rows, other.rows
            )));
        }
        if !self.is_knot_mosaic() || !other.is_knot_mosaic() {
            return Err(Error::NotKnotMosaic);
        }
        let cols = self.cols + other.cols;
        let mut cells = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            cells.extend_from_slice(self.row(r));
            cells.extend_from_slice(other.row(r));
        }
        Ok(Mosaic {
            rows: self.rows,
            cols,
            cells,
        })
    }

    /// Places `other` below `self`. Both must be knot mosaics with the same
    /// number of columns.
    pub fn concat_vertical(&self, other: &Mosaic) -> Result<Mosaic> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "vertical concatenation needs equal column counts, got {} and {}",
                self.cols, other.cols
            )));
        }
        if !self.is_knot_mosaic() || !other.is_knot_mosaic() {
            return Err(Error::NotKnotMosaic);
        }
        let mut cells = self.cells.clone();
        cells.extend_from_slice(&other.cells);
        Ok(Mosaic {
            rows: self.rows + other.rows,
            cols: self.cols,
            cells,
        })
    }

    /// Renders one row per line. The plain form is the grid file format
    /// (space separated indices); the pretty form uses one glyph per tile.
    pub fn render(&self, pretty: bool) -> String {
        let mut out = String::with_capacity(self.cells.len() * 3);
        for r in 0..self.rows {
            for (c, t) in self.row(r).iter().enumerate() {
                if pretty {
                    out.push(t.glyph());
                } else {
                    if c > 0 {
                        out.push(' ');
                    }
                    out.push_str(&t.index().to_string());
                }
            }
            out.push('\n');
        }
        out
    }

    /// Parses the grid file format: `#` starts a comment line, every other
    /// non-empty line is a row of whitespace separated tile indices.
    pub fn parse(text: &str) -> std::result::Result<Mosaic, ParseError> {
        let mut cells = Vec::new();
        let mut cols = 0;
        let mut rows = 0;
        for (lineno, line) in text.lines().enumerate() {
            let line_no = lineno + 1;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let mut width = 0;
            for (i, token) in trimmed.split_whitespace().enumerate() {
                let tile = token
                    .parse::<u8>()
                    .ok()
                    .and_then(Tile::new)
                    .ok_or_else(|| ParseError {
                        line: line_no,
                        column: i + 1,
                        kind: ParseErrorKind::InvalidTile(token.to_string()),
                    })?;
                cells.push(tile);
                width += 1;
            }
            if rows == 0 {
                cols = width;
            } else if width != cols {
                return Err(ParseError {
                    line: line_no,
                    column: 0,
                    kind: ParseErrorKind::RaggedRow {
                        expected: cols,
                        actual: width,
                    },
                });
            }
            rows += 1;
        }
        if rows == 0 {
            return Err(ParseError {
                line: 0,
                column: 0,
                kind: ParseErrorKind::Empty,
            });
        }
        Ok(Mosaic { rows, cols, cells })
    }
}

impl FromStr for Mosaic {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Mosaic::parse(s)
    }
}

impl fmt::Display for Mosaic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}
