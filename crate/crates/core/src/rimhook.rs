//! Rim-hook tableaux and the character matrix `χ^λ_β` with its
//! `Z_β`-scaled inverse.

use serde::Serialize;

use crate::abacus::Abacus;
use crate::error::{check_sizes, Error, Result};
use crate::framework::LocalSystem;
use crate::rational::{frac, int, Rational};
use crate::shapes::{diagram, partitions, Cell, Composition, Partition, ShapeKey};
use crate::tableau::{remove_hook_at, rim_hook_removals, skew_cells, Filling, RimHook};

/// Each label class is a rim-hook of the right size and the cells with
/// labels `≤ k` form a partition diagram.
pub fn is_rht(f: &Filling, lambda: &Partition, beta: &Composition) -> bool {
    f.shape() == &lambda[..]
        && f.content() == beta.to_vec()
        && (1..=beta.len()).all(|k| {
            crate::tableau::is_rim_hook(&f.cells_with(k))
                && f.prefix_shape(k).is_some_and(|p| p.windows(2).all(|w| w[0] >= w[1]))
        })
}

/// Product of the signs of the label classes.
pub fn rht_sign(f: &Filling) -> i32 {
    (1..=f.max_label()).map(|k| RimHook::new(f.cells_with(k)).map(|h| h.sign()).unwrap_or(0)).product()
}

/// All RHT of shape `λ` and content `β` with their signs, built by removing
/// the last rim-hook in cell order.
pub fn enumerate_rht(lambda: &Partition, beta: &Composition) -> Result<Vec<(Filling, i32)>> {
    check_sizes(lambda.size(), beta.size())?;
    Ok(peel_rht(lambda, beta))
}

fn peel_rht(lambda: &Partition, beta: &Composition) -> Vec<(Filling, i32)> {
    let Ok((star, l)) = beta.truncate() else {
        return vec![(Filling::row_filled(&[]), 1)];
    };
    let label = beta.len();
    rim_hook_removals(lambda, l)
        .into_iter()
        .flat_map(|(_, gamma, hook)| {
            peel_rht(&gamma, &star)
                .into_iter()
                .map(|(t, s)| (t.extend(lambda, label).expect("hook lies outside"), s * hook.sign()))
                .collect::<Vec<_>>()
        })
        .collect()
}

pub fn hook_sign(lambda: &Partition, gamma: &Partition) -> i32 {
    RimHook::new(skew_cells(lambda, gamma)).map(|h| h.sign()).unwrap_or(0)
}

/// `wt_A = sgn`, `wt_B = sgn / |μ|`, both on rim-hooks.
#[derive(Clone, Copy, Debug, Default)]
pub struct RimhookSystem;

pub fn rimhook_system() -> RimhookSystem {
    RimhookSystem
}

impl LocalSystem for RimhookSystem {
    type Shape = Partition;

    fn name(&self) -> &'static str {
        "rimhook"
    }

    fn shapes(&self, n: usize) -> Vec<Partition> {
        partitions(n)
    }

    fn succ_a(&self, lambda: &Partition, l: usize) -> Vec<Partition> {
        rim_hook_removals(lambda, l).into_iter().map(|(_, g, _)| g).collect()
    }

    fn succ_b(&self, mu: &Partition, l: usize) -> Vec<Partition> {
        self.succ_a(mu, l)
    }

    fn weight_a(&self, lambda: &Partition, gamma: &Partition) -> Rational {
        int(hook_sign(lambda, gamma) as i64)
    }

    fn weight_b(&self, mu: &Partition, delta: &Partition) -> Rational {
        frac(hook_sign(mu, delta) as i64, mu.size() as i64)
    }
}

/// Reading-order number (`1..=|ν|`) of a cell: rows top to bottom, each
/// left to right.
pub fn cell_number(nu: &Partition, cell: Cell) -> usize {
    nu[..cell.row - 1].iter().sum::<usize>() + cell.col
}

/// The `c`-th border rim-hook of `ν`: the hook attached to the `c`-th cell
/// in reading order. Returns the hook and the partition left after removing it.
pub fn border_rimhook_of_cell(nu: &Partition, c: usize) -> Result<(RimHook, Partition)> {
    let cell = diagram(nu)
        .get(c.wrapping_sub(1))
        .copied()
        .ok_or_else(|| Error::OutOfRange(format!("cell number {c} for {nu}")))?;
    let (rest, hook) = remove_hook_at(nu, cell)?;
    Ok((hook, rest))
}

/// Inverse of [`border_rimhook_of_cell`]: the cell in the row of the hook's
/// north-east end and the column of its south-west end.
pub fn cell_of_border_rimhook(nu: &Partition, hook: &RimHook) -> Result<usize> {
    let sw = hook.cells.iter().max_by_key(|c| (c.row, std::cmp::Reverse(c.col))).expect("nonempty");
    let ne = hook.cells.iter().min_by_key(|c| (c.row, std::cmp::Reverse(c.col))).expect("nonempty");
    let cell = Cell::new(ne.row, sw.col);
    let c = cell_number(nu, cell);
    match border_rimhook_of_cell(nu, c) {
        Ok((h, _)) if &h == hook => Ok(c),
        _ => Err(Error::InvalidShape(format!("not a removable rim-hook of {nu}"))),
    }
}

/// One way to pass from `λ` to `μ`: remove a rim-hook of size `step` to reach
/// `gamma`, then add one of the same size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwoStep {
    pub gamma: Partition,
    pub step: usize,
    /// Bead jump down on the abacus of `λ`.
    pub remove: (usize, usize),
    /// Bead jump up on the abacus of `gamma`.
    pub add: (usize, usize),
    /// `sgn(λ/γ) · sgn(μ/γ)`.
    pub sign: i32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RimhookPairing {
    Empty,
    /// The `|λ|` shapes left by removing a rim-hook of `λ`, in cell order.
    Diagonal {
        gammas: Vec<Partition>,
    },
    Matched {
        first: TwoStep,
        second: TwoStep,
    },
}

/// The abacus ways from `λ` to `μ` (`λ ≠ μ`) using `N = max(ℓ(λ), ℓ(μ))` beads.
fn two_steps(lambda: &Partition, mu: &Partition) -> Result<Vec<TwoStep>> {
    let beads = lambda.len().max(mu.len());
    let a = Abacus::from_partition(lambda, beads)?;
    let b = Abacus::from_partition(mu, beads)?;
    let top = lambda.size() + beads + 1;
    let leave: Vec<usize> = (0..top).filter(|&p| a.is_bead(p) && !b.is_bead(p)).collect();
    let enter: Vec<usize> = (0..top).filter(|&p| !a.is_bead(p) && b.is_bead(p)).collect();
    if leave.len() != 2 || enter.len() != 2 || leave[0] + leave[1] != enter[0] + enter[1] {
        return Ok(Vec::new());
    }
    let mut ways = Vec::new();
    for (k, &down_from) in leave.iter().enumerate() {
        for (m, &down_to) in enter.iter().enumerate() {
            if down_from <= down_to {
                continue;
            }
            let (up_from, up_to) = (leave[1 - k], enter[1 - m]);
            let (mid, s1) = a.move_bead(down_from, down_to)?;
            let (end, s2) = mid.move_bead(up_from, up_to)?;
            debug_assert_eq!(&end.to_partition(), mu);
            ways.push(TwoStep {
                gamma: mid.to_partition(),
                step: down_from - down_to,
                remove: (down_from, down_to),
                add: (up_from, up_to),
                sign: s1 * s2,
            });
        }
    }
    ways.sort_by(|x, y| y.gamma.cmp(&x.gamma));
    Ok(ways)
}

pub fn rimhook_pair(lambda: &Partition, mu: &Partition) -> Result<RimhookPairing> {
    check_sizes(lambda.size(), mu.size())?;
    if lambda.is_empty() {
        return Err(Error::InvalidInput("pairing needs n > 0".into()));
    }
    if lambda == mu {
        let gammas = diagram(lambda).into_iter().map(|c| remove_hook_at(lambda, c).expect("cell").0).collect();
        return Ok(RimhookPairing::Diagonal { gammas });
    }
    let ways = two_steps(lambda, mu)?;
    match ways.len() {
        0 => Ok(RimhookPairing::Empty),
        2 => {
            let mut it = ways.into_iter();
            let (first, second) = (it.next().expect("two"), it.next().expect("two"));
            if first.sign != -second.sign {
                return Err(Error::InvalidInput(format!("ways from {lambda} to {mu} have equal signs")));
            }
            Ok(RimhookPairing::Matched { first, second })
        }
        k => Err(Error::InvalidInput(format!("{k} ways from {lambda} to {mu}"))),
    }
}

/// The other intermediate shape of the two-way pairing, for `λ ≠ μ`.
pub fn rimhook_partner(lambda: &Partition, mu: &Partition, gamma: &Partition) -> Result<Partition> {
    match rimhook_pair(lambda, mu)? {
        RimhookPairing::Matched { first, second } if &first.gamma == gamma => Ok(second.gamma),
        RimhookPairing::Matched { first, second } if &second.gamma == gamma => Ok(first.gamma),
        _ => Err(Error::InvalidInput(format!("{gamma} is not in G({lambda}, {mu})"))),
    }
}
