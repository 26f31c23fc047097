//! The refinement order on compositions, compositional brick tabloids, and
//! the incidence matrix with its signed inverse (plain and weighted).

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{check_sizes, Error, Result};
use crate::framework::LocalSystem;
use crate::matrix::IndexedMatrix;
use crate::par::Exec;
use crate::rational::{from_big, int, Rational};
use crate::scalars::big_z;
use crate::shapes::{compositions, Composition, ShapeKey};
use crate::tableau::Filling;

/// `α ≤ β`: the parts of `β` are sums of consecutive blocks of `α`.
pub fn refines(alpha: &Composition, beta: &Composition) -> bool {
    if alpha.size() != beta.size() {
        return false;
    }
    let mut it = alpha.iter();
    beta.iter().all(|&target| {
        let mut acc = 0;
        while acc < target {
            match it.next() {
                Some(&p) => acc += p,
                None => return false,
            }
        }
        acc == target
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Brick {
    pub label: usize,
    pub row: usize,
    pub start_col: usize,
    pub len: usize,
}

/// A compositional brick tabloid: bricks of lengths `content` laid in label
/// order along the rows of `shape`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cbt {
    pub shape: Composition,
    pub content: Composition,
    pub bricks: Vec<Brick>,
}

impl Cbt {
    /// `(-1)^(ℓ(content) - ℓ(shape))`: `+1` for the first brick of each row,
    /// `-1` for every other brick.
    pub fn sign(&self) -> i32 {
        self.bricks.iter().map(|b| if b.start_col == 1 { 1 } else { -1 }).product()
    }

    /// Per row, the lengths of the bricks lying in it.
    pub fn row_contents(&self) -> Vec<Composition> {
        (1..=self.shape.len())
            .map(|r| {
                Composition::new(self.bricks.iter().filter(|b| b.row == r).map(|b| b.len).collect())
                    .expect("positive brick lengths")
            })
            .collect()
    }

    pub fn to_filling(&self) -> Filling {
        let rows = self
            .shape
            .iter()
            .enumerate()
            .map(|(r, _)| self.bricks.iter().filter(|b| b.row == r + 1).flat_map(|b| vec![b.label; b.len]).collect())
            .collect();
        Filling::new(self.shape.to_vec(), rows).expect("bricks tile the shape")
    }
}

/// The unique CBT of the given shape and content, with its sign, when the
/// content refines the shape.
pub fn cbt_find(shape: &Composition, content: &Composition) -> Result<Option<(Cbt, i32)>> {
    check_sizes(shape.size(), content.size())?;
    if !refines(content, shape) {
        return Ok(None);
    }
    let mut bricks = Vec::with_capacity(content.len());
    let (mut row, mut col) = (1, 1);
    for (k, &len) in content.iter().enumerate() {
        if col > shape[row - 1] {
            row += 1;
            col = 1;
        }
        bricks.push(Brick { label: k + 1, row, start_col: col, len });
        col += len;
    }
    let cbt = Cbt { shape: shape.clone(), content: content.clone(), bricks };
    let sign = cbt.sign();
    Ok(Some((cbt, sign)))
}

/// `(Z_{shape,content}, L_{shape,content})`: products over rows of `Z` and of
/// the last brick length.
pub fn weighted_factors(shape: &Composition, content: &Composition) -> Result<(BigUint, BigUint)> {
    let (cbt, _) = cbt_find(shape, content)?
        .ok_or_else(|| Error::NotRefinement { content: content.to_string(), shape: shape.to_string() })?;
    let rows = cbt.row_contents();
    let z = rows.iter().fold(BigUint::one(), |acc, r| acc * big_z(r));
    let l = rows.iter().fold(BigUint::one(), |acc, r| acc * BigUint::from(r.last_part().expect("nonempty row")));
    Ok((z, l))
}

/// `S(λ,L)`: the prefix of `λ` left after a suffix summing to `L`.
pub fn prefix_before_suffix(lambda: &Composition, l: usize) -> Option<Composition> {
    let mut acc = 0;
    for k in (0..lambda.len()).rev() {
        acc += lambda[k];
        if acc == l {
            return Some(Composition::new(lambda[..k].to_vec()).expect("prefix"));
        }
        if acc > l {
            return None;
        }
    }
    None
}

/// `T(μ,L)`: drop the last part (`L = μ_k`, sign `+1`) or shrink it
/// (`L < μ_k`, sign `-1`).
pub fn shrink_last(mu: &Composition, l: usize) -> Option<(Composition, i32)> {
    let last = mu.last_part()?;
    let (star, _) = mu.truncate().ok()?;
    match l.cmp(&last) {
        std::cmp::Ordering::Greater => None,
        std::cmp::Ordering::Equal => Some((star, 1)),
        std::cmp::Ordering::Less if l > 0 => Some((star.push(last - l), -1)),
        std::cmp::Ordering::Less => None,
    }
}

fn shrink_sign(mu: &Composition, delta: &Composition) -> i32 {
    if delta.len() + 1 == mu.len() {
        1
    } else {
        -1
    }
}

/// The refinement system; `weighted` selects the `L`/`Z` weighted variant.
#[derive(Clone, Copy, Debug, Default)]
pub struct RefineSystem {
    pub weighted: bool,
}

pub fn refine_system() -> RefineSystem {
    RefineSystem { weighted: false }
}

pub fn weighted_system() -> RefineSystem {
    RefineSystem { weighted: true }
}

impl LocalSystem for RefineSystem {
    type Shape = Composition;

    fn name(&self) -> &'static str {
        if self.weighted {
            "refine-weighted"
        } else {
            "refine"
        }
    }

    fn shapes(&self, n: usize) -> Vec<Composition> {
        compositions(n)
    }

    fn succ_a(&self, lambda: &Composition, l: usize) -> Vec<Composition> {
        prefix_before_suffix(lambda, l).into_iter().collect()
    }

    fn succ_b(&self, mu: &Composition, l: usize) -> Vec<Composition> {
        shrink_last(mu, l).map(|(d, _)| d).into_iter().collect()
    }

    fn weight_a(&self, lambda: &Composition, _: &Composition) -> Rational {
        if self.weighted {
            int(lambda.last_part().unwrap_or(1) as i64)
        } else {
            int(1)
        }
    }

    fn weight_b(&self, mu: &Composition, delta: &Composition) -> Rational {
        let s = int(shrink_sign(mu, delta) as i64);
        if self.weighted {
            s / int(mu.last_part().unwrap_or(1) as i64)
        } else {
            s
        }
    }
}

/// `A_n(λ,β) = χ(λ ≤ β)`.
pub fn incidence_a(n: usize) -> IndexedMatrix<Composition, Composition> {
    IndexedMatrix::from_fn(compositions(n), compositions(n), Exec::default(), |l, b| int(refines(l, b) as i64))
}

/// `B_n(β,μ) = (-1)^(ℓ(β)-ℓ(μ)) χ(β ≤ μ)`.
pub fn mobius_b(n: usize) -> IndexedMatrix<Composition, Composition> {
    IndexedMatrix::from_fn(compositions(n), compositions(n), Exec::default(), |b, m| {
        if refines(b, m) {
            int(parity(b.len() + m.len()))
        } else {
            int(0)
        }
    })
}

fn parity(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `A_n(λ,β) = χ(λ ≤ β) L_{β,λ}`.
pub fn weighted_a(n: usize) -> IndexedMatrix<Composition, Composition> {
    IndexedMatrix::from_fn(compositions(n), compositions(n), Exec::default(), |l, b| {
        weighted_factors(b, l).map(|(_, w)| from_big(w)).unwrap_or_else(|_| int(0))
    })
}

/// `B_n(β,μ) = (-1)^(ℓ(β)-ℓ(μ)) χ(β ≤ μ) / Z_{μ,β}`.
pub fn weighted_b(n: usize) -> IndexedMatrix<Composition, Composition> {
    IndexedMatrix::from_fn(compositions(n), compositions(n), Exec::default(), |b, m| {
        weighted_factors(m, b).map(|(z, _)| int(parity(b.len() + m.len())) / from_big(z)).unwrap_or_else(|_| int(0))
    })
}

/// `Ā_n(λ,β) = (-1)^(n-ℓ(λ)) χ(λ ≤ β)`, an involution.
pub fn self_inverse_matrix(n: usize) -> IndexedMatrix<Composition, Composition> {
    IndexedMatrix::from_fn(compositions(n), compositions(n), Exec::default(), |l, b| {
        if refines(l, b) {
            int(parity(n + l.len()))
        } else {
            int(0)
        }
    })
}

/// Coefficient of `Ψ_λ` in `h_β`: `χ(λ ≤ β) / Z_{β,λ}`. Obtained from the
/// weighted inverse by the sign map `(-1)^ℓ` on both indices and transposing.
pub fn nsym_h_to_psi(n: usize) -> IndexedMatrix<Composition, Composition> {
    let b = weighted_b(n);
    IndexedMatrix::from_fn(compositions(n), compositions(n), Exec::default(), |beta, lambda| {
        b.get(lambda, beta).expect("square") * int(parity(beta.len() + lambda.len()))
    })
}

/// Coefficient of `h_β` in `Ψ_μ`: `(-1)^(ℓ(μ)-ℓ(β)) χ(β ≤ μ) L_{μ,β}`.
pub fn nsym_psi_to_h(n: usize) -> IndexedMatrix<Composition, Composition> {
    let a = weighted_a(n);
    IndexedMatrix::from_fn(compositions(n), compositions(n), Exec::default(), |mu, beta| {
        a.get(beta, mu).expect("square") * int(parity(mu.len() + beta.len()))
    })
}

/// `G(λ,μ)` with the sign of each member: `{μ*}` when `λ = μ`, otherwise
/// empty or `{μ*, (μ*, λ_k)}`.
pub fn local_g_refine(lambda: &Composition, mu: &Composition) -> Result<Vec<(Composition, i32)>> {
    check_sizes(lambda.size(), mu.size())?;
    if lambda.is_empty() {
        return Err(Error::InvalidInput("local identity needs n > 0".into()));
    }
    let (star, _) = mu.truncate()?;
    let k = star.len();
    if lambda.len() <= k || lambda[..k] != star[..] {
        return Ok(Vec::new());
    }
    let mut out = vec![(star.clone(), 1)];
    if lambda != mu {
        out.push((star.push(lambda[k]), -1));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::framework::local_terms;

    fn comp(p: &[usize]) -> Composition {
        Composition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn refinement_examples() {
        assert!(refines(&comp(&[2, 1, 1, 2, 1, 3, 1, 1]), &comp(&[3, 4, 3, 2])));
        assert!(refines(&comp(&[1, 3]), &comp(&[1, 3])));
        assert!(!refines(&comp(&[1, 3]), &comp(&[3, 1])));
        assert!(refines(&Composition::empty(), &Composition::empty()));
    }

    #[test]
    fn refinement_is_a_partial_order() {
        for n in 1..=7 {
            let cs = compositions(n);
            for a in &cs {
                assert!(refines(a, a));
                for b in &cs {
                    if a != b && refines(a, b) {
                        assert!(!refines(b, a));
                    }
                    for c in &cs {
                        if refines(a, b) && refines(b, c) {
                            assert!(refines(a, c));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn worked_cbt() {
        let shape = comp(&[4, 5, 5, 3]);
        let content = comp(&[3, 1, 3, 2, 5, 1, 2]);
        let (cbt, sign) = cbt_find(&shape, &content).unwrap().unwrap();
        assert_eq!(sign, -1);
        assert_eq!(
            cbt.to_filling().rows(),
            &[vec![1, 1, 1, 2], vec![3, 3, 3, 4, 4], vec![5, 5, 5, 5, 5], vec![6, 7, 7]]
        );
        let (z, l) = weighted_factors(&shape, &content).unwrap();
        assert_eq!((z, l), (BigUint::from(2700u32), BigUint::from(20u32)));
        assert_eq!(cbt_find(&comp(&[3, 1]), &comp(&[1, 3])).unwrap(), None);
        assert_eq!(cbt_find(&shape, &shape).unwrap().unwrap().1, 1);
        assert!(weighted_factors(&comp(&[3, 1]), &comp(&[1, 3])).is_err());
        let json = serde_json::to_value(&cbt).unwrap();
        assert_eq!(json["bricks"][1], serde_json::json!({"label": 2, "row": 1, "start_col": 4, "len": 1}));
    }

    #[test]
    fn cbt_uniqueness_and_sign() {
        for n in 1..=7 {
            let cs = compositions(n);
            for a in &cs {
                for b in &cs {
                    let found = cbt_find(a, b).unwrap();
                    assert_eq!(found.is_some(), refines(b, a));
                    if let Some((cbt, s)) = found {
                        assert_eq!(s as i64, parity(b.len() + a.len()));
                        let f = cbt.to_filling();
                        assert_eq!(f.content(), b.to_vec());
                        for (r, row) in f.rows().iter().enumerate() {
                            assert!(row.windows(2).all(|w| w[0] <= w[1]));
                            if r > 0 {
                                assert!(row[0] > *f.rows()[r - 1].last().unwrap());
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn weighted_diagonal_and_single_row() {
        let lam = comp(&[2, 3, 1]);
        assert_eq!(weighted_factors(&lam, &lam).unwrap(), (BigUint::from(6u32), BigUint::from(6u32)));
        let beta = comp(&[3, 4, 4]);
        let (z, l) = weighted_factors(&comp(&[11]), &beta).unwrap();
        assert_eq!((z, l), (big_z(&beta), BigUint::from(4u32)));
    }

    #[test]
    fn worked_local_sets() {
        let mu = comp(&[4, 1, 3, 6]);
        assert_eq!(
            local_g_refine(&comp(&[4, 1, 3, 2, 1, 3]), &mu).unwrap(),
            vec![(comp(&[4, 1, 3]), 1), (comp(&[4, 1, 3, 2]), -1)]
        );
        assert_eq!(local_g_refine(&mu, &mu).unwrap(), vec![(comp(&[4, 1, 3]), 1)]);
        assert!(local_g_refine(&comp(&[2, 2]), &comp(&[1, 3])).unwrap().is_empty());
        assert_eq!(prefix_before_suffix(&comp(&[3, 1, 3, 2, 5, 1, 2]), 3), Some(comp(&[3, 1, 3, 2, 5])));
        assert_eq!(shrink_last(&comp(&[4, 5, 5, 3]), 2), Some((comp(&[4, 5, 5, 1]), -1)));
    }

    #[test]
    fn local_sets_match_framework_intersection() {
        let sys = refine_system();
        for n in 1..=7 {
            let cs = compositions(n);
            for l in &cs {
                for m in &cs {
                    let mut brute: Vec<(Composition, i32)> = local_terms(&sys, l, m)
                        .unwrap()
                        .into_iter()
                        .map(|t| (t.gamma, if t.weight_b == int(1) { 1 } else { -1 }))
                        .collect();
                    brute.sort();
                    let mut fast = local_g_refine(l, m).unwrap();
                    fast.sort();
                    assert_eq!(fast, brute, "{l} {m}");
                }
            }
        }
    }

    #[test]
    fn self_inverse_and_nsym_pairs() {
        for n in 0..=7 {
            let a = self_inverse_matrix(n);
            assert!(a.mul(&a, Exec::Parallel).unwrap().is_identity(), "{n}");
        }
        for n in 0..=6 {
            let h = nsym_h_to_psi(n);
            let p = nsym_psi_to_h(n);
            assert!(h.mul(&p, Exec::Parallel).unwrap().is_identity(), "{n}");
        }
    }
}
