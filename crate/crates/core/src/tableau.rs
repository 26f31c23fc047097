//! Fillings of diagrams and the border geometry they are built from:
//! horizontal strips, rim-hooks and special rim-hooks.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::{Cell, Partition};

/// A diagram (of a partition or composition) with a positive label per cell.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawFilling")]
pub struct Filling {
    shape: Vec<usize>,
    rows: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct RawFilling {
    shape: Vec<usize>,
    rows: Vec<Vec<usize>>,
}

impl TryFrom<RawFilling> for Filling {
    type Error = Error;

    fn try_from(raw: RawFilling) -> Result<Self> {
        Filling::new(raw.shape, raw.rows)
    }
}

impl Filling {
    pub fn new(shape: Vec<usize>, rows: Vec<Vec<usize>>) -> Result<Self> {
        if shape.contains(&0) {
            return Err(Error::InvalidFilling("shape has a zero part".into()));
        }
        if shape.len() != rows.len() || shape.iter().zip(&rows).any(|(&s, r)| r.len() != s) {
            return Err(Error::InvalidFilling(format!("rows {rows:?} do not fit shape {shape:?}")));
        }
        if rows.iter().flatten().any(|&v| v == 0) {
            return Err(Error::InvalidFilling("labels must be positive".into()));
        }
        Ok(Filling { shape, rows })
    }

    /// Fills row `i` of a partition-shaped diagram with the label `i`.
    pub fn row_filled(shape: &[usize]) -> Self {
        let rows = shape.iter().enumerate().map(|(i, &p)| vec![i + 1; p]).collect();
        Filling { shape: shape.to_vec(), rows }
    }

    /// Builds a filling of `shape` from a label per cell.
    pub fn from_fn(shape: &[usize], mut label: impl FnMut(Cell) -> usize) -> Result<Self> {
        let rows =
            shape.iter().enumerate().map(|(i, &p)| (1..=p).map(|j| label(Cell::new(i + 1, j))).collect()).collect();
        Filling::new(shape.to_vec(), rows)
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn label(&self, cell: Cell) -> Option<usize> {
        self.rows.get(cell.row.checked_sub(1)?)?.get(cell.col.checked_sub(1)?).copied()
    }

    pub fn max_label(&self) -> usize {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Number of occurrences of each label `1..=max`.
    pub fn content(&self) -> Vec<usize> {
        let mut counts = vec![0; self.max_label()];
        for &v in self.rows.iter().flatten() {
            counts[v - 1] += 1;
        }
        counts
    }

    pub fn cells_with(&self, label: usize) -> Vec<Cell> {
        self.cells_where(|v| v == label)
    }

    pub fn cells_where(&self, pred: impl Fn(usize) -> bool) -> Vec<Cell> {
        let mut out = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if pred(v) {
                    out.push(Cell::new(i + 1, j + 1));
                }
            }
        }
        out
    }

    /// Row lengths of the cells with labels `≤ k`, provided they form a
    /// left-justified diagram.
    pub fn prefix_shape(&self, k: usize) -> Option<Vec<usize>> {
        let mut out = Vec::with_capacity(self.rows.len());
        for row in &self.rows {
            let len = row.iter().take_while(|&&v| v <= k).count();
            if row[len..].iter().any(|&v| v <= k) {
                return None;
            }
            out.push(len);
        }
        while out.last() == Some(&0) {
            out.pop();
        }
        Some(out)
    }

    /// Row-major label string, the sort key for enumeration output.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    /// Keeps the cells with label `≤ k`; the shape must stay a diagram.
    pub fn restrict(&self, k: usize) -> Result<Filling> {
        let shape = self
            .prefix_shape(k)
            .ok_or_else(|| Error::InvalidFilling(format!("labels <= {k} do not form a diagram")))?;
        let rows = shape.iter().zip(&self.rows).map(|(&p, r)| r[..p].to_vec()).collect();
        Filling::new(shape, rows)
    }

    /// Enlarges the diagram to `shape`, writing `label` in the new cells.
    pub fn extend(&self, shape: &[usize], label: usize) -> Result<Filling> {
        let mut rows = self.rows.clone();
        rows.resize(shape.len(), Vec::new());
        for (row, &p) in rows.iter_mut().zip(shape) {
            if row.len() > p {
                return Err(Error::InvalidFilling(format!("{shape:?} does not contain {:?}", self.shape)));
            }
            row.resize(p, label);
        }
        if self.shape.len() > shape.len() {
            return Err(Error::InvalidFilling(format!("{shape:?} does not contain {:?}", self.shape)));
        }
        Filling::new(shape.to_vec(), rows)
    }

    /// Applies `f` to every label.
    pub fn relabel(&self, f: impl Fn(usize) -> usize) -> Result<Filling> {
        let rows = self.rows.iter().map(|r| r.iter().map(|&v| f(v)).collect()).collect();
        Filling::new(self.shape.clone(), rows)
    }
}

impl fmt::Display for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.max_label() >= 10;
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                let labels: Vec<String> = r.iter().map(|v| v.to_string()).collect();
                labels.join(if wide { " " } else { "" })
            })
            .collect();
        f.write_str(&rows.join("/"))
    }
}

/// Cells of `outer / inner`, in reading order.
pub fn skew_cells(outer: &[usize], inner: &[usize]) -> Vec<Cell> {
    let mut cells = Vec::new();
    for (i, &p) in outer.iter().enumerate() {
        let q = inner.get(i).copied().unwrap_or(0);
        cells.extend((q + 1..=p).map(|j| Cell::new(i + 1, j)));
    }
    cells
}

pub fn is_horizontal_strip(cells: &[Cell]) -> bool {
    let cols: BTreeSet<usize> = cells.iter().map(|c| c.col).collect();
    cols.len() == cells.len()
}

/// Nonempty and traversable by unit steps right or up from its
/// south-westernmost box.
pub fn is_rim_hook(cells: &[Cell]) -> bool {
    if cells.is_empty() {
        return false;
    }
    let mut path = cells.to_vec();
    path.sort_by(|a, b| b.row.cmp(&a.row).then(a.col.cmp(&b.col)));
    path.windows(2).all(|w| {
        let (a, b) = (w[0], w[1]);
        (a.row == b.row && b.col == a.col + 1) || (b.row + 1 == a.row && a.col == b.col)
    })
}

pub fn is_special_rim_hook(cells: &[Cell]) -> bool {
    is_rim_hook(cells) && cells.iter().any(|c| c.col == 1)
}

/// A rim-hook removed from (or added to) a diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RimHook {
    pub cells: Vec<Cell>,
}

impl RimHook {
    pub fn new(mut cells: Vec<Cell>) -> Result<Self> {
        cells.sort_by_key(|c| (c.row, c.col));
        if !is_rim_hook(&cells) {
            return Err(Error::InvalidShape(format!("not a rim-hook: {cells:?}")));
        }
        Ok(RimHook { cells })
    }

    pub fn size(&self) -> usize {
        self.cells.len()
    }

    pub fn rows(&self) -> usize {
        self.cells.iter().map(|c| c.row).collect::<BTreeSet<_>>().len()
    }

    /// `(-1)^(rows - 1)`.
    pub fn sign(&self) -> i32 {
        if self.rows() % 2 == 1 {
            1
        } else {
            -1
        }
    }

    pub fn is_special(&self) -> bool {
        self.cells.iter().any(|c| c.col == 1)
    }
}

/// Removes the rim-hook attached to `cell`: it runs along the border from
/// the bottom of the cell's column to the end of the cell's row.
pub fn remove_hook_at(lambda: &Partition, cell: Cell) -> Result<(Partition, RimHook)> {
    if !lambda.contains_cell(cell) {
        return Err(Error::OutOfRange(format!("cell {cell:?} not in {lambda}")));
    }
    let (i, j) = (cell.row, cell.col);
    let bottom = lambda.col(j);
    let mut parts: Vec<usize> = lambda.to_vec();
    for r in i..bottom {
        parts[r - 1] = lambda.row(r + 1) - 1;
    }
    parts[bottom - 1] = j - 1;
    let rest = Partition::from_unsorted(parts.into_iter().filter(|&p| p > 0).collect());
    let hook = RimHook::new(skew_cells(lambda, &rest))?;
    Ok((rest, hook))
}

/// All rim-hooks of size `l` removable from `λ`, indexed by their cell in
/// reading order.
pub fn rim_hook_removals(lambda: &Partition, l: usize) -> Vec<(Cell, Partition, RimHook)> {
    crate::shapes::diagram(lambda)
        .into_iter()
        .filter(|&c| lambda.row(c.row) - c.col + lambda.col(c.col) - c.row + 1 == l)
        .map(|c| {
            let (rest, hook) = remove_hook_at(lambda, c).expect("cell in diagram");
            (c, rest, hook)
        })
        .collect()
}

/// The special rim-hook of size `l`, if any: the hook of the column-1 cell
/// in the row whose hook length is `l`.
pub fn special_rim_hook_removal(mu: &Partition, l: usize) -> Option<(Partition, RimHook)> {
    let len = mu.len();
    (1..=len).find(|&i| mu.row(i) + len - i == l).map(|i| remove_hook_at(mu, Cell::new(i, 1)).expect("cell in diagram"))
}

/// Partitions `γ ⊆ λ` with `λ/γ` a horizontal strip of size `l`, in
/// descending lexicographic order.
pub fn horizontal_strip_removals(lambda: &Partition, l: usize) -> Vec<Partition> {
    fn go(lambda: &[usize], i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == lambda.len() {
            if left == 0 {
                out.push(Partition::from_unsorted(cur.iter().copied().filter(|&p| p > 0).collect()));
            }
            return;
        }
        let low = lambda.get(i + 1).copied().unwrap_or(0);
        let top = lambda[i];
        for g in (low..=top).rev() {
            let take = top - g;
            if take > left {
                continue;
            }
            cur.push(g);
            go(lambda, i + 1, left - take, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(lambda, 0, l, &mut Vec::new(), &mut out);
    out
}
