//! Dense matrices over a [`FiniteField`] and the vector matroid of a matrix.

use std::fmt::Write as _;

use thiserror::Error;

use crate::gf::{FieldError, FiniteField};
use crate::matroid::{check_cap, Matroid, MatroidError};
use crate::parse::{content_lines, key_value, ParseError};
use crate::subset::GroundSubset;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("expected {expected} entries, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("entry {0} is not a field element")]
    InvalidEntry(u32),
    #[error("matrices are over different fields")]
    FieldMismatch,
}

#[derive(Clone, PartialEq, Eq)]
pub struct FieldMatrix {
    field: FiniteField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl std::fmt::Debug for FieldMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "FieldMatrix({:?}, {}x{}, {:?})",
            self.field, self.rows, self.cols, self.data
        )
    }
}

impl FieldMatrix {
    pub fn new(
        field: FiniteField,
        rows: usize,
        cols: usize,
        data: Vec<u32>,
    ) -> Result<Self, MatrixError> {
        if data.len() != rows * cols {
            return Err(MatrixError::DimensionMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        if let Some(&bad) = data.iter().find(|&&a| !field.contains(a)) {
            return Err(MatrixError::InvalidEntry(bad));
        }
        Ok(FieldMatrix {
            field,
            rows,
            cols,
            data,
        })
    }

    pub fn from_rows(field: FiniteField, rows: &[Vec<u32>]) -> Result<Self, MatrixError> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(MatrixError::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend_from_slice(r);
        }
        Self::new(field, rows.len(), cols, data)
    }

    pub fn zeros(field: FiniteField, rows: usize, cols: usize) -> Self {
        FieldMatrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: FiniteField, size: usize) -> Self {
        let mut m = Self::zeros(field, size, size);
        for i in 0..size {
            m.data[i * size + i] = 1;
        }
        m
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        assert!(self.field.contains(v));
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field.clone(), self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c);
            }
        }
        t
    }

    /// Submatrix formed by the given 0-based columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut data = Vec::with_capacity(self.rows * cols.len());
        for r in 0..self.rows {
            data.extend(cols.iter().map(|&c| self.get(r, c)));
        }
        FieldMatrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: cols.len(),
            data,
        }
    }

    pub fn mul(&self, other: &FieldMatrix) -> Result<FieldMatrix, MatrixError> {
        if self.field != other.field {
            return Err(MatrixError::FieldMismatch);
        }
        if self.cols != other.rows {
            return Err(MatrixError::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let f = &self.field;
        let mut out = Self::zeros(f.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = 0;
                for k in 0..self.cols {
                    acc = f.add(acc, f.mul(self.get(i, k), other.get(k, j)));
                }
                out.data[i * other.cols + j] = acc;
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&a| a == 0)
    }

    /// Reduced row echelon form together with the pivot columns.
    ///
    /// Pivots are taken on the first nonzero entry of each column.
    pub fn rref(&self) -> (FieldMatrix, Vec<usize>) {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(piv) = (row..m.rows).find(|&r| m.get(r, col) != 0) else {
                continue;
            };
            m.swap_rows(row, piv);
            let inv = f.inv(m.get(row, col)).expect("pivot is nonzero");
            for c in col..m.cols {
                let v = f.mul(m.get(row, c), inv);
                m.data[row * m.cols + c] = v;
            }
            for r in 0..m.rows {
                let factor = m.get(r, col);
                if r == row || factor == 0 {
                    continue;
                }
                let neg = f.neg(factor);
                for c in col..m.cols {
                    let v = f.add(m.get(r, c), f.mul(neg, m.get(row, c)));
                    m.data[r * m.cols + c] = v;
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Rows spanning `{x : A x^T = 0}`; there are `cols - rank` of them and
    /// they are linearly independent.
    pub fn kernel_basis(&self) -> FieldMatrix {
        let f = &self.field;
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Self::zeros(f.clone(), free.len(), self.cols);
        for (i, &fc) in free.iter().enumerate() {
            k.data[i * self.cols + fc] = 1;
            for (pr, &pc) in pivots.iter().enumerate() {
                k.data[i * self.cols + pc] = f.neg(r.get(pr, fc));
            }
        }
        k
    }

    /// The nonzero rows of the reduced row echelon form: a basis of the row
    /// space.
    pub fn row_basis(&self) -> FieldMatrix {
        let (r, pivots) = self.rref();
        FieldMatrix {
            field: self.field.clone(),
            rows: pivots.len(),
            cols: self.cols,
            data: r.data[..pivots.len() * self.cols].to_vec(),
        }
    }

    /// Rank of the columns indexed by a subset (1-based labels).
    pub fn column_rank(&self, s: GroundSubset) -> usize {
        let cols: Vec<usize> = s.labels().map(|e| e - 1).collect();
        self.select_columns(&cols).rank()
    }

    /// The vector matroid on the column labels `1..=cols`: a set of columns
    /// is independent iff the columns are linearly independent.
    pub fn vector_matroid(&self) -> Result<Matroid, MatroidError> {
        check_cap(self.cols)?;
        let r = self.rank();
        let bases = GroundSubset::all_of_size(self.cols, r)
            .filter(|&s| self.column_rank(s) == r)
            .collect();
        Ok(Matroid::from_bases_unchecked(self.cols, bases))
    }

    /// Text rendering: a `p=.. m=.. rows=.. cols=..` header followed by rows
    /// of compact-encoded entries.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "p={} m={} rows={} cols={}\n",
            self.field.characteristic(),
            self.field.degree(),
            self.rows,
            self.cols
        );
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(u32::to_string).collect();
            let _ = writeln!(out, "{}", row.join(" "));
        }
        out
    }

    pub fn parse(text: &str) -> Result<FieldMatrix, ParseError> {
        let mut lines = content_lines(text);
        let (hl, header) = lines
            .next()
            .ok_or_else(|| ParseError::new(1, "empty matrix file"))?;
        let toks: Vec<&str> = header.split_whitespace().collect();
        if toks.len() != 4 {
            return Err(ParseError::new(
                hl,
                "expected header `p=<int> m=<int> rows=<int> cols=<int>`",
            ));
        }
        let p = key_value(toks[0], "p", hl)?;
        let m = key_value(toks[1], "m", hl)?;
        let rows = key_value(toks[2], "rows", hl)?;
        let cols = key_value(toks[3], "cols", hl)?;
        let field = FiniteField::new(
            u32::try_from(p).map_err(|_| ParseError::new(hl, "characteristic too large"))?,
            u32::try_from(m).map_err(|_| ParseError::new(hl, "extension degree too large"))?,
        )
        .map_err(|e: FieldError| ParseError::new(hl, e.to_string()))?;
        let mut data = Vec::with_capacity(rows * cols);
        let mut seen = 0;
        let mut last_line = hl;
        for (line, body) in lines {
            last_line = line;
            seen += 1;
            if seen > rows {
                return Err(ParseError::new(line, format!("more than {rows} rows")));
            }
            let entries: Vec<&str> = body.split_whitespace().collect();
            if entries.len() != cols {
                return Err(ParseError::new(
                    line,
                    format!("expected {cols} entries, found {}", entries.len()),
                ));
            }
            for tok in entries {
                data.push(
                    field
                        .parse_element(tok)
                        .map_err(|e| ParseError::new(line, e.to_string()))?,
                );
            }
        }
        if seen != rows {
            return Err(ParseError::new(
                last_line,
                format!("expected {rows} rows, found {seen}"),
            ));
        }
        Ok(FieldMatrix {
            field,
            rows,
            cols,
            data,
        })
    }
}
