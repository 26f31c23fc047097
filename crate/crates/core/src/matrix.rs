//! Dense exact-rational matrices with rows and columns keyed by shapes.

use std::collections::HashMap;
use std::fmt::Write as _;

use num_traits::{One, Zero};
use serde::de::DeserializeOwned;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::par::{self, Exec};
use crate::rational::{self, Rational};
use crate::shapes::ShapeKey;

/// An `R × C` matrix: a function from `rows × cols` to the rationals.
#[derive(Clone, Debug)]
pub struct IndexedMatrix<R: ShapeKey, C: ShapeKey> {
    rows: Vec<R>,
    cols: Vec<C>,
    entries: Vec<Rational>,
    row_index: HashMap<R, usize>,
    col_index: HashMap<C, usize>,
}

impl<R: ShapeKey, C: ShapeKey> PartialEq for IndexedMatrix<R, C> {
    /// Key-wise equality: the same key sets with the same entries, in any order.
    fn eq(&self, other: &Self) -> bool {
        if self.rows.len() != other.rows.len() || self.cols.len() != other.cols.len() {
            return false;
        }
        self.rows
            .iter()
            .all(|r| other.row_index.contains_key(r) && self.cols.iter().all(|c| other.get(r, c) == self.get(r, c)))
    }
}

fn index_of<K: ShapeKey>(keys: &[K]) -> Result<HashMap<K, usize>> {
    let mut map = HashMap::with_capacity(keys.len());
    for (i, k) in keys.iter().enumerate() {
        if map.insert(k.clone(), i).is_some() {
            return Err(Error::InvalidInput(format!("duplicate key {k}")));
        }
    }
    Ok(map)
}

impl<R: ShapeKey, C: ShapeKey> IndexedMatrix<R, C> {
    pub fn new(rows: Vec<R>, cols: Vec<C>, entries: Vec<Vec<Rational>>) -> Result<Self> {
        if entries.len() != rows.len() || entries.iter().any(|row| row.len() != cols.len()) {
            return Err(Error::InvalidInput(format!("entry grid does not match {} x {} keys", rows.len(), cols.len())));
        }
        Ok(IndexedMatrix {
            row_index: index_of(&rows)?,
            col_index: index_of(&cols)?,
            rows,
            cols,
            entries: entries.into_iter().flatten().collect(),
        })
    }

    pub fn zeros(rows: Vec<R>, cols: Vec<C>) -> Self {
        let grid = vec![vec![Rational::zero(); cols.len()]; rows.len()];
        Self::new(rows, cols, grid).expect("distinct keys")
    }

    /// Builds every entry from `f(row, col)`, one row per task.
    pub fn from_fn<F>(rows: Vec<R>, cols: Vec<C>, exec: Exec, f: F) -> Self
    where
        F: Fn(&R, &C) -> Rational + Sync + Send,
    {
        let grid = par::map(exec, &rows, |r| cols.iter().map(|c| f(r, c)).collect::<Vec<_>>());
        Self::new(rows, cols, grid).expect("distinct keys")
    }

    pub fn rows(&self) -> &[R] {
        &self.rows
    }

    pub fn cols(&self) -> &[C] {
        &self.cols
    }

    pub fn row_position(&self, key: &R) -> Option<usize> {
        self.row_index.get(key).copied()
    }

    pub fn col_position(&self, key: &C) -> Option<usize> {
        self.col_index.get(key).copied()
    }

    pub fn at(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols.len() + j]
    }

    pub fn get(&self, row: &R, col: &C) -> Option<&Rational> {
        let i = self.row_position(row)?;
        let j = self.col_position(col)?;
        Some(self.at(i, j))
    }

    pub fn set(&mut self, row: &R, col: &C, value: Rational) -> Result<()> {
        let i = self.row_position(row).ok_or_else(|| Error::OutOfRange(format!("row {row}")))?;
        let j = self.col_position(col).ok_or_else(|| Error::OutOfRange(format!("column {col}")))?;
        let width = self.cols.len();
        self.entries[i * width + j] = value;
        Ok(())
    }

    pub fn row_entries(&self, i: usize) -> &[Rational] {
        let w = self.cols.len();
        &self.entries[i * w..(i + 1) * w]
    }

    pub fn transpose(&self) -> IndexedMatrix<C, R> {
        let grid =
            (0..self.cols.len()).map(|j| (0..self.rows.len()).map(|i| self.at(i, j).clone()).collect()).collect();
        IndexedMatrix::new(self.cols.clone(), self.rows.clone(), grid).expect("distinct keys")
    }

    /// Exact product, matching `self`'s columns with `other`'s rows by key.
    pub fn mul<K: ShapeKey>(&self, other: &IndexedMatrix<C, K>, exec: Exec) -> Result<IndexedMatrix<R, K>> {
        if self.cols.len() != other.rows.len() {
            return Err(Error::SizeMismatch { left: self.cols.len(), right: other.rows.len() });
        }
        let perm: Vec<usize> = self
            .cols
            .iter()
            .map(|c| other.row_position(c).ok_or_else(|| Error::OutOfRange(format!("inner key {c}"))))
            .collect::<Result<_>>()?;
        let out_cols = other.cols.len();
        let indices: Vec<usize> = (0..self.rows.len()).collect();
        let grid = par::map(exec, &indices, |&i| {
            let mut row = vec![Rational::zero(); out_cols];
            for (j, a) in self.row_entries(i).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (slot, b) in row.iter_mut().zip(other.row_entries(perm[j])) {
                    if !b.is_zero() {
                        *slot += a * b;
                    }
                }
            }
            row
        });
        IndexedMatrix::new(self.rows.clone(), other.cols.clone(), grid)
    }

    pub fn map_entries(&self, f: impl Fn(&Rational) -> Rational) -> Self {
        let mut out = self.clone();
        out.entries = self.entries.iter().map(f).collect();
        out
    }

    /// JSON form `{ "rows": [...], "cols": [...], "entries": [[[num, den], ...], ...] }`.
    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = (0..self.rows.len())
            .map(|i| Value::Array(self.row_entries(i).iter().map(rational::to_json).collect()))
            .collect();
        json!({ "rows": self.rows, "cols": self.cols, "entries": entries })
    }

    /// CSV with the column keys as header and entries as `p/q` text.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let header = std::iter::once(String::new()).chain(self.cols.iter().map(|c| c.to_string()));
        w.write_record(header).expect("in-memory write");
        for (i, r) in self.rows.iter().enumerate() {
            let line = std::iter::once(r.to_string()).chain(self.row_entries(i).iter().map(rational::to_text));
            w.write_record(line).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 keys")
    }

    /// Aligned text table in the layout of printed tables: a `~` corner,
    /// keys written as digit strings.
    pub fn to_ascii(&self) -> String {
        if self.rows.len() == 1 && self.cols.len() == 1 && self.rows[0].is_empty() && self.cols[0].is_empty() {
            return format!("{}\n", rational::to_text(self.at(0, 0)));
        }
        let mut cells: Vec<Vec<String>> = Vec::with_capacity(self.rows.len() + 1);
        cells.push(std::iter::once("~".to_string()).chain(self.cols.iter().map(|c| c.to_string())).collect());
        for (i, r) in self.rows.iter().enumerate() {
            cells.push(
                std::iter::once(r.to_string()).chain(self.row_entries(i).iter().map(rational::to_text)).collect(),
            );
        }
        let width = cells[0].len();
        let widths: Vec<usize> =
            (0..width).map(|j| cells.iter().map(|row| row[j].chars().count()).max().unwrap_or(0)).collect();
        let mut out = String::new();
        for row in &cells {
            let mut line = String::new();
            for (j, cell) in row.iter().enumerate() {
                if j == 0 {
                    let _ = write!(line, "{cell:<w$}", w = widths[0]);
                } else {
                    let _ = write!(line, "  {cell:>w$}", w = widths[j]);
                }
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

impl<R: ShapeKey + DeserializeOwned, C: ShapeKey + DeserializeOwned> IndexedMatrix<R, C> {
    pub fn from_json(value: &Value) -> Result<Self> {
        let bad = |what: &str| Error::InvalidInput(format!("matrix JSON: {what}"));
        let rows: Vec<R> = serde_json::from_value(value.get("rows").cloned().ok_or_else(|| bad("missing rows"))?)
            .map_err(|e| bad(&e.to_string()))?;
        let cols: Vec<C> = serde_json::from_value(value.get("cols").cloned().ok_or_else(|| bad("missing cols"))?)
            .map_err(|e| bad(&e.to_string()))?;
        let grid = value
            .get("entries")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing entries"))?
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| bad("entry row is not an array"))?
                    .iter()
                    .map(rational::from_json)
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(rows, cols, grid)
    }
}

impl<R: ShapeKey> IndexedMatrix<R, R> {
    pub fn identity(keys: Vec<R>) -> Self {
        let mut m = Self::zeros(keys.clone(), keys);
        let n = m.rows.len();
        for i in 0..n {
            m.entries[i * n + i] = Rational::one();
        }
        m
    }

    /// Square with the same row and column keys, and equal to the identity.
    pub fn is_identity(&self) -> bool {
        self.rows.len() == self.cols.len()
            && self.rows.iter().enumerate().all(|(i, r)| {
                self.col_position(r).is_some_and(|jr| {
                    (0..self.cols.len()).all(|j| {
                        let e = self.at(i, j);
                        if j == jr {
                            e.is_one()
                        } else {
                            e.is_zero()
                        }
                    })
                })
            })
    }
}
