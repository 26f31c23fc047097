//! Partitions, compositions and their canonical orders.
//!
//! A [`Composition`] is any finite list of positive integers; a [`Partition`]
//! is one whose parts are weakly decreasing. Both are plain index objects:
//! every matrix in this crate has rows and columns keyed by them.

use std::fmt;
use std::hash::Hash;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Common interface for row/column keys of an [`IndexedMatrix`](crate::matrix::IndexedMatrix).
pub trait ShapeKey: Clone + Eq + Hash + Ord + fmt::Debug + fmt::Display + Send + Sync + Serialize + 'static {
    fn parts(&self) -> &[usize];

    fn size(&self) -> usize {
        self.parts().iter().sum()
    }

    fn len(&self) -> usize {
        self.parts().len()
    }

    fn is_empty(&self) -> bool {
        self.parts().is_empty()
    }
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    if parts.is_empty() {
        return f.write_str("()");
    }
    if parts.iter().all(|&p| p < 10) {
        for p in parts {
            write!(f, "{p}")?;
        }
        Ok(())
    } else {
        let joined: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", joined.join(","))
    }
}

/// A finite list of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition(Vec<usize>);

/// A weakly decreasing list of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidShape(format!("{parts:?} has a zero part")));
        }
        Ok(Composition(parts))
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    /// Last part `L(β)`, if any.
    pub fn last_part(&self) -> Option<usize> {
        self.0.last().copied()
    }

    /// Splits off the last part: `β ↦ (β*, L(β))`.
    pub fn truncate(&self) -> Result<(Composition, usize)> {
        match self.0.split_last() {
            Some((&last, rest)) => Ok((Composition(rest.to_vec()), last)),
            None => Err(Error::NoLastPart),
        }
    }

    /// Appends one part.
    pub fn push(&self, part: usize) -> Composition {
        assert!(part > 0, "composition parts are positive");
        let mut parts = self.0.clone();
        parts.push(part);
        Composition(parts)
    }

    pub fn sorted(&self) -> Partition {
        sort_comp(self)
    }

    pub fn is_partition(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidShape(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Sorts arbitrary positive parts; zeros are dropped.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    pub fn as_composition(&self) -> Composition {
        Composition(self.0.clone())
    }

    /// Row length `i` (1-based), zero past the last row.
    pub fn row(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// Column length `j` (1-based): the conjugate part.
    pub fn col(&self, j: usize) -> usize {
        self.0.iter().take_while(|&&p| p >= j).count()
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && self.row(cell.row) >= cell.col
    }

    /// Diagram containment `dg(other) ⊆ dg(self)`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Number of parts equal to `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        multiplicity(self, i)
    }

    /// Drops the last part.
    pub fn without_last(&self) -> Partition {
        let mut parts = self.0.clone();
        parts.pop();
        Partition(parts)
    }
}

macro_rules! shape_common {
    ($ty:ident) => {
        impl ShapeKey for $ty {
            fn parts(&self) -> &[usize] {
                &self.0
            }
        }

        impl Deref for $ty {
            type Target = [usize];
            fn deref(&self) -> &[usize] {
                &self.0
            }
        }

        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write_parts(f, &self.0)
            }
        }

        impl TryFrom<Vec<usize>> for $ty {
            type Error = Error;
            fn try_from(parts: Vec<usize>) -> Result<Self> {
                $ty::new(parts)
            }
        }

        impl From<$ty> for Vec<usize> {
            fn from(shape: $ty) -> Vec<usize> {
                shape.0
            }
        }
    };
}

shape_common!(Composition);
shape_common!(Partition);

impl From<Partition> for Composition {
    fn from(p: Partition) -> Composition {
        Composition(p.0)
    }
}

/// A box `(row, col)` of a diagram, both 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

/// Cells of `dg(α)` in reading order (top row first, left to right).
pub fn diagram(parts: &[usize]) -> Vec<Cell> {
    parts.iter().enumerate().flat_map(|(i, &len)| (1..=len).map(move |j| Cell::new(i + 1, j))).collect()
}

/// All compositions of `n` in canonical order: `C(n)` lists `(k) ⧺ C(n-k)`
/// for `k = n, n-1, …, 1`.
pub fn compositions(n: usize) -> Vec<Composition> {
    fn rec(n: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if n == 0 {
            out.push(Composition(prefix.clone()));
            return;
        }
        for k in (1..=n).rev() {
            prefix.push(k);
            rec(n - k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::with_capacity(if n == 0 { 1 } else { 1 << (n - 1) });
    rec(n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of `n` in descending lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for k in (1..=n.min(max)).rev() {
            prefix.push(k);
            rec(n - k, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Weakly decreasing rearrangement.
pub fn sort_comp(alpha: &Composition) -> Partition {
    Partition::from_unsorted(alpha.0.clone())
}

/// `(β*, L(β))`.
pub fn truncate(beta: &Composition) -> Result<(Composition, usize)> {
    beta.truncate()
}

pub fn multiplicity(lambda: &Partition, i: usize) -> usize {
    lambda.0.iter().filter(|&&p| p == i).count()
}

/// Distinct rearrangements of `mu`, in canonical composition order.
pub fn rearrangements(mu: &Partition) -> Vec<Composition> {
    fn rec(counts: &mut Vec<(usize, usize)>, left: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if left == 0 {
            out.push(Composition(prefix.clone()));
            return;
        }
        // counts are sorted by part value descending, matching C(n) order
        for idx in 0..counts.len() {
            if counts[idx].1 == 0 {
                continue;
            }
            counts[idx].1 -= 1;
            prefix.push(counts[idx].0);
            rec(counts, left - 1, prefix, out);
            prefix.pop();
            counts[idx].1 += 1;
        }
    }
    let mut counts: Vec<(usize, usize)> = Vec::new();
    for &p in mu.iter() {
        match counts.last_mut() {
            Some((v, c)) if *v == p => *c += 1,
            _ => counts.push((p, 1)),
        }
    }
    let mut out = Vec::new();
    rec(&mut counts, mu.len(), &mut Vec::new(), &mut out);
    out
}

/// Multiset union, intersection and differences of two partitions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultisetOps {
    pub union: Partition,
    pub intersection: Partition,
    /// `λ ∖ μ`
    pub difference: Partition,
    /// `λ ⊆ μ` as multisets
    pub subset: bool,
}

pub fn multiset_ops(lambda: &Partition, mu: &Partition) -> MultisetOps {
    MultisetOps {
        union: multiset_union(lambda, mu),
        intersection: multiset_intersection(lambda, mu),
        difference: multiset_difference(lambda, mu),
        subset: multiset_subset(lambda, mu),
    }
}

pub fn multiset_union(lambda: &Partition, mu: &Partition) -> Partition {
    let mut parts = lambda.0.clone();
    parts.extend_from_slice(&mu.0);
    Partition::from_unsorted(parts)
}

pub fn multiset_intersection(lambda: &Partition, mu: &Partition) -> Partition {
    let mut rest = mu.0.clone();
    let mut out = Vec::new();
    for &p in lambda.iter() {
        if let Some(pos) = rest.iter().position(|&q| q == p) {
            rest.remove(pos);
            out.push(p);
        }
    }
    Partition(out)
}

pub fn multiset_difference(lambda: &Partition, mu: &Partition) -> Partition {
    let mut rest = mu.0.clone();
    let mut out = Vec::new();
    for &p in lambda.iter() {
        if let Some(pos) = rest.iter().position(|&q| q == p) {
            rest.remove(pos);
        } else {
            out.push(p);
        }
    }
    Partition(out)
}

pub fn multiset_subset(lambda: &Partition, mu: &Partition) -> bool {
    multiset_difference(lambda, mu).is_empty()
}

/// All sub-multisets of `mu`, each as a partition.
pub fn sub_multisets(mu: &Partition) -> Vec<Partition> {
    let mut counts: Vec<(usize, usize)> = Vec::new();
    for &p in mu.iter() {
        match counts.last_mut() {
            Some((v, c)) if *v == p => *c += 1,
            _ => counts.push((p, 1)),
        }
    }
    let mut out = vec![Vec::new()];
    for (value, count) in counts {
        let mut next = Vec::with_capacity(out.len() * (count + 1));
        for base in &out {
            for take in 0..=count {
                let mut parts: Vec<usize> = base.clone();
                parts.extend(std::iter::repeat_n(value, take));
                next.push(parts);
            }
        }
        out = next;
    }
    out.into_iter().map(Partition).collect()
}

/// Parses `"3,1,1"`, `"311"`, `"(3,1,1)"`, `"[3,1,1]"`; `""` and `"()"` are empty.
pub fn parse_parts(text: &str) -> Result<Vec<usize>> {
    let trimmed = text.trim().trim_matches(|c| c == '(' || c == ')' || c == '[' || c == ']');
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    let bad = || Error::InvalidShape(format!("cannot parse parts from {text:?}"));
    if trimmed.contains(',') || trimmed.contains(' ') {
        trimmed
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<usize>().map_err(|_| bad()))
            .collect()
    } else {
        trimmed.chars().map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad)).collect()
    }
}
