//! Ordered brick tabloids, weighted brick tabloids and the `W_μ` sums that
//! invert the power-sum to monomial transition counts.

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{check_sizes, Error, Result};
use crate::framework::LocalSystem;
use crate::matrix::IndexedMatrix;
use crate::par::Exec;
use crate::rational::{from_big, int, Rational};
use crate::refine::{cbt_find, refines, weighted_factors, Brick, Cbt};
use crate::scalars::{big_w, big_z, little_z};
use crate::shapes::{
    compositions, multiset_difference, multiset_intersection, multiset_union, partitions, rearrangements,
    sub_multisets, Composition, Partition, ShapeKey,
};
use crate::tableau::Filling;

/// A tiling of `dg(shape)` by bricks of lengths `content`, each brick in one
/// row and labels weakly increasing along rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Obt {
    pub shape: Partition,
    pub content: Composition,
    #[serde(rename = "type")]
    pub kind: Partition,
    pub bricks: Vec<Brick>,
}

impl Obt {
    fn from_rows(shape: Partition, content: Composition, rows: &[Vec<usize>]) -> Obt {
        let mut bricks = Vec::with_capacity(content.len());
        for (r, row) in rows.iter().enumerate() {
            let mut col = 1;
            for &label in row {
                let len = content[label - 1];
                bricks.push(Brick { label, row: r + 1, start_col: col, len });
                col += len;
            }
        }
        bricks.sort_by_key(|b| b.label);
        let kind = content.sorted();
        Obt { shape, content, kind, bricks }
    }

    /// Brick labels of each row, left to right.
    pub fn row_labels(&self) -> Vec<Vec<usize>> {
        let mut rows = vec![Vec::new(); self.shape.len()];
        for b in &self.bricks {
            rows[b.row - 1].push(b.label);
        }
        rows
    }

    pub fn to_filling(&self) -> Filling {
        Filling::from_fn(&self.shape, |cell| {
            self.bricks
                .iter()
                .find(|b| b.row == cell.row && b.start_col <= cell.col && cell.col < b.start_col + b.len)
                .map(|b| b.label)
                .expect("bricks tile the shape")
        })
        .expect("bricks tile the shape")
    }
}

/// All of `obt(λ,β)`, sorted by reading word.
pub fn enumerate_obt(lambda: &Partition, beta: &Composition) -> Result<Vec<Obt>> {
    check_sizes(lambda.size(), beta.size())?;
    fn rec(beta: &[usize], k: usize, room: &mut [usize], rows: &mut [Vec<usize>], out: &mut Vec<Vec<Vec<usize>>>) {
        if k == beta.len() {
            out.push(rows.to_vec());
            return;
        }
        for r in 0..room.len() {
            if room[r] >= beta[k] {
                room[r] -= beta[k];
                rows[r].push(k + 1);
                rec(beta, k + 1, room, rows, out);
                rows[r].pop();
                room[r] += beta[k];
            }
        }
    }
    let mut room = lambda.to_vec();
    let mut rows = vec![Vec::new(); lambda.len()];
    let mut raw = Vec::new();
    rec(beta, 0, &mut room, &mut rows, &mut raw);
    let mut out: Vec<Obt> = raw.iter().map(|rows| Obt::from_rows(lambda.clone(), beta.clone(), rows)).collect();
    out.sort_by_cached_key(|t| t.to_filling().reading_word());
    Ok(out)
}

/// Removes the largest brick: `F(T) = (k, T*)` where the brick ended the
/// `k`-th highest row of its length and the shortened row becomes the
/// highest row of its new length.
pub fn remove_largest_brick(t: &Obt) -> Result<(usize, Obt)> {
    let (star, l) = t.content.truncate()?;
    let s = t.content.len();
    let mut rows = t.row_labels();
    let r = rows.iter().position(|row| row.last() == Some(&s)).expect("largest brick is last in its row");
    let i = t.shape[r];
    let k = t.shape[..=r].iter().filter(|&&p| p == i).count();
    let mut row = rows.remove(r);
    row.pop();
    let mut parts = t.shape.to_vec();
    parts.remove(r);
    if i > l {
        let at = parts.iter().position(|&p| p <= i - l).unwrap_or(parts.len());
        parts.insert(at, i - l);
        rows.insert(at, row);
    }
    let shape = Partition::new(parts).expect("reinserted in order");
    Ok((k, Obt::from_rows(shape, star, &rows)))
}

/// Inverse of [`remove_largest_brick`]: rebuilds an OBT of shape `λ` whose
/// last brick has length `|λ| - |T*|`.
pub fn add_largest_brick(lambda: &Partition, k: usize, t: &Obt) -> Result<Obt> {
    let diff = multiset_difference(lambda, &t.shape);
    let back = multiset_difference(&t.shape, lambda);
    if diff.len() != 1 || back.len() > 1 {
        return Err(Error::InvalidInput(format!("{lambda} is not one part longer than {}", t.shape)));
    }
    let i = diff[0];
    let l = lambda.size().checked_sub(t.shape.size()).filter(|&l| l > 0 && l <= i);
    let l = l.ok_or_else(|| Error::InvalidInput("shapes do not differ by one brick".into()))?;
    if (i > l) != (back.first() == Some(&(i - l))) {
        return Err(Error::InvalidInput("shapes do not differ by one brick".into()));
    }
    if k == 0 || k > lambda.multiplicity(i) {
        return Err(Error::OutOfRange(format!("k = {k} for part {i} of {lambda}")));
    }
    let mut rows = t.row_labels();
    let mut parts = t.shape.to_vec();
    let mut row = if i > l {
        let at = parts.iter().position(|&p| p == i - l).expect("row of length i - L");
        parts.remove(at);
        rows.remove(at)
    } else {
        Vec::new()
    };
    let s = t.content.len() + 1;
    row.push(s);
    let first = parts.iter().position(|&p| p <= i).unwrap_or(parts.len());
    parts.insert(first + k - 1, i);
    rows.insert(first + k - 1, row);
    Ok(Obt::from_rows(lambda.clone(), t.content.push(l), &rows))
}

/// `S(λ,L)` for OBTs: replace one part `i ≥ L` by `i - L`, then sort.
pub fn decrease_one_part(lambda: &Partition, l: usize) -> Vec<Partition> {
    let mut out: Vec<Partition> = Vec::new();
    for (r, &i) in lambda.iter().enumerate() {
        if i < l || (r > 0 && lambda[r - 1] == i) {
            continue;
        }
        let mut parts = lambda.to_vec();
        parts[r] = i - l;
        out.push(Partition::from_unsorted(parts.into_iter().filter(|&p| p > 0).collect()));
    }
    out
}

/// The OBT system: `wt_A = m_i(λ)`, `wt_B = (-1)^(ℓ(μ)-ℓ(δ)-1) W_{μ∖δ} / |μ|`.
#[derive(Clone, Copy, Debug, Default)]
pub struct ObtSystem;

pub fn obt_system() -> ObtSystem {
    ObtSystem
}

impl LocalSystem for ObtSystem {
    type Shape = Partition;

    fn name(&self) -> &'static str {
        "brick"
    }

    fn shapes(&self, n: usize) -> Vec<Partition> {
        partitions(n)
    }

    fn succ_a(&self, lambda: &Partition, l: usize) -> Vec<Partition> {
        decrease_one_part(lambda, l)
    }

    fn succ_b(&self, mu: &Partition, l: usize) -> Vec<Partition> {
        if l == 0 || l > mu.size() {
            return Vec::new();
        }
        sub_multisets(mu).into_iter().filter(|d| d.size() + l == mu.size()).collect()
    }

    fn weight_a(&self, lambda: &Partition, gamma: &Partition) -> Rational {
        let i = multiset_difference(lambda, gamma)[0];
        int(lambda.multiplicity(i) as i64)
    }

    fn weight_b(&self, mu: &Partition, delta: &Partition) -> Rational {
        let rest = multiset_difference(mu, delta);
        let w = from_big(big_w(&rest).expect("nonempty remainder"));
        let sign = if (mu.len() - delta.len() - 1).is_multiple_of(2) { 1 } else { -1 };
        int(sign) * w / int(mu.size() as i64)
    }
}

/// A CBT of shape `β` whose content sorts to `type`, with its weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BrickTabloid {
    #[serde(flatten)]
    pub cbt: Cbt,
    #[serde(rename = "type")]
    pub kind: Partition,
    pub weight: BigUint,
}

/// All of `bt(β,μ)`, in canonical order of contents.
pub fn enumerate_bt(beta: &Composition, mu: &Partition) -> Result<Vec<BrickTabloid>> {
    check_sizes(beta.size(), mu.size())?;
    let mut out = Vec::new();
    for alpha in rearrangements(mu) {
        if !refines(&alpha, beta) {
            continue;
        }
        let (cbt, _) = cbt_find(beta, &alpha)?.expect("refinement checked");
        let (_, weight) = weighted_factors(beta, &alpha)?;
        out.push(BrickTabloid { cbt, kind: mu.clone(), weight });
    }
    Ok(out)
}

/// `w_{β,μ}`: total weight of `bt(β,μ)`.
pub fn w_of(beta: &Composition, mu: &Partition) -> Result<BigUint> {
    Ok(enumerate_bt(beta, mu)?.into_iter().map(|t| t.weight).sum())
}

fn parity(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `A_n(λ,β) = |obt(λ,β)|` by enumeration.
pub fn brick_a_closed(n: usize) -> IndexedMatrix<Partition, Composition> {
    IndexedMatrix::from_fn(partitions(n), compositions(n), Exec::default(), |l, b| {
        int(enumerate_obt(l, b).expect("same size").len() as i64)
    })
}

/// `B_n(β,μ) = (-1)^(ℓ(μ)-ℓ(β)) w_{β,μ} / Z_β`.
pub fn brick_b_closed(n: usize) -> IndexedMatrix<Composition, Partition> {
    IndexedMatrix::from_fn(compositions(n), partitions(n), Exec::default(), |b, m| {
        let w = w_of(b, m).expect("same size");
        if w.is_zero() {
            int(0)
        } else {
            int(parity(m.len() + b.len())) * from_big(w) / from_big(big_z(b))
        }
    })
}

/// `B'_n(ν,μ) = (-1)^(ℓ(μ)-ℓ(ν)) w_{ν,μ} / z_ν`.
pub fn brick_b_square(n: usize) -> IndexedMatrix<Partition, Partition> {
    IndexedMatrix::from_fn(partitions(n), partitions(n), Exec::default(), |nu, m| {
        let w = w_of(&nu.as_composition(), m).expect("same size");
        int(parity(m.len() + nu.len())) * from_big(w) / from_big(little_z(nu))
    })
}

/// A row of length `|bricks|` tiled by `bricks` in order, with one marked
/// cell (1-based) and optionally one marked brick (1-based index).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MarkedRow {
    pub bricks: Composition,
    pub cell: usize,
    pub brick: Option<usize>,
}

impl MarkedRow {
    fn locate(&self) -> Result<(usize, usize)> {
        let mut start = 0;
        for (b, &len) in self.bricks.iter().enumerate() {
            if self.cell > start && self.cell <= start + len {
                return Ok((b, self.cell - start - 1));
            }
            start += len;
        }
        Err(Error::InvalidMarking(format!("cell {} lies outside the row", self.cell)))
    }

    fn swap_with_last(&self, b: usize, offset: usize) -> (Composition, usize) {
        let mut parts = self.bricks.to_vec();
        let last = parts.len() - 1;
        parts.swap(b, last);
        let start: usize = parts[..last].iter().sum();
        (Composition::new(parts).expect("rearranged"), start + offset + 1)
    }
}

/// `g`: swap the brick holding the marked cell with the last brick, carrying
/// the mark, and mark the brick that moved into its place.
pub fn marked_brick_bijection(t: &MarkedRow) -> Result<MarkedRow> {
    if t.brick.is_some() {
        return Err(Error::InvalidMarking("input must have no marked brick".into()));
    }
    let (b, offset) = t.locate()?;
    let (bricks, cell) = t.swap_with_last(b, offset);
    Ok(MarkedRow { bricks, cell, brick: Some(b + 1) })
}

/// `g⁻¹`: swap the marked brick with the last brick, whose marked cell
/// travels with it.
pub fn marked_brick_inverse(s: &MarkedRow) -> Result<MarkedRow> {
    let m = s.brick.ok_or_else(|| Error::InvalidMarking("no marked brick".into()))?;
    if m == 0 || m > s.bricks.len() {
        return Err(Error::InvalidMarking(format!("brick {m} does not exist")));
    }
    let (b, offset) = s.locate()?;
    if b + 1 != s.bricks.len() {
        return Err(Error::InvalidMarking("marked cell must lie in the last brick".into()));
    }
    let mut parts = s.bricks.to_vec();
    let last = parts.len() - 1;
    parts.swap(m - 1, last);
    let start: usize = parts[..m - 1].iter().sum();
    Ok(MarkedRow { bricks: Composition::new(parts).expect("rearranged"), cell: start + offset + 1, brick: None })
}

/// One member of `G(λ,μ)` with its contribution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BrickTerm {
    pub gamma: Partition,
    pub multiplicity: usize,
    pub sign: i32,
    pub w: BigUint,
    #[serde(serialize_with = "crate::rational::serialize")]
    pub value: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BrickLocal {
    pub lambda: Partition,
    pub mu: Partition,
    pub terms: Vec<BrickTerm>,
    #[serde(serialize_with = "crate::rational::serialize")]
    pub total: Rational,
}

/// `G(λ,μ)`: for `λ = μ` every `λ ∖ (i)`; for `λ ∖ μ = (i)` with
/// `ρ = μ ∖ λ`, the partition `λ ∩ μ` and each `(λ ∩ μ) ⊎ (j)`, `j ∈ ρ`,
/// `j < i`; otherwise empty.
pub fn brick_local_g(lambda: &Partition, mu: &Partition) -> Result<BrickLocal> {
    check_sizes(lambda.size(), mu.size())?;
    let n = lambda.size();
    if n == 0 {
        return Err(Error::InvalidInput("local identity needs n > 0".into()));
    }
    let mut gammas = Vec::new();
    let extra = multiset_difference(lambda, mu);
    if extra.is_empty() {
        for (r, &i) in lambda.iter().enumerate() {
            if r == 0 || lambda[r - 1] != i {
                gammas.push(multiset_difference(lambda, &Partition::new(vec![i]).expect("part")));
            }
        }
    } else if extra.len() == 1 {
        let i = extra[0];
        let rho = multiset_difference(mu, lambda);
        let common = multiset_intersection(lambda, mu);
        gammas.push(common.clone());
        for (r, &j) in rho.iter().enumerate() {
            if j < i && (r == 0 || rho[r - 1] != j) {
                gammas.push(multiset_union(&common, &Partition::new(vec![j]).expect("part")));
            }
        }
    }
    let mut terms = Vec::with_capacity(gammas.len());
    for gamma in gammas {
        let i = multiset_difference(lambda, &gamma)[0];
        let multiplicity = lambda.multiplicity(i);
        let sign = parity(mu.len() - gamma.len() - 1) as i32;
        let w = big_w(&multiset_difference(mu, &gamma))?;
        let value = int(sign as i64 * multiplicity as i64) * from_big(w.clone()) / int(n as i64);
        terms.push(BrickTerm { gamma, multiplicity, sign, w, value });
    }
    let total = terms.iter().fold(int(0), |acc, t| acc + &t.value);
    Ok(BrickLocal { lambda: lambda.clone(), mu: mu.clone(), terms, total })
}

/// `ℓ(μ) W_μ = |μ| · multinomial(ℓ(μ); m₁, m₂, …)`, checked by counting
/// marked rows on both sides.
pub fn marked_row_counts(mu: &Partition) -> (BigUint, BigUint) {
    let mut left = BigUint::zero();
    let mut right = BigUint::zero();
    for alpha in rearrangements(mu) {
        left += BigUint::from(alpha.len() * alpha.last_part().unwrap_or(0));
        right += BigUint::from(alpha.size());
    }
    (left, right)
}
