//! Semistandard tableaux against special rim-hook tableaux: the rectangular
//! Kostka matrix and its signed inverse.

use serde::Serialize;

use crate::error::{check_sizes, Error, Result};
use crate::framework::LocalSystem;
use crate::rational::{int, Rational};
use crate::shapes::{Composition, Partition, ShapeKey};
use crate::tableau::{
    horizontal_strip_removals, is_horizontal_strip, is_special_rim_hook, skew_cells, special_rim_hook_removal, Filling,
    RimHook,
};

pub fn is_ssyt(f: &Filling, lambda: &Partition, beta: &Composition) -> bool {
    if f.shape() != &lambda[..] || f.content() != beta.to_vec() {
        return false;
    }
    let rows = f.rows();
    let weak_rows = rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
    let strict_cols = rows.windows(2).all(|w| w[1].iter().zip(&w[0]).all(|(low, high)| low > high));
    weak_rows && strict_cols
}

/// All SSYT of shape `λ` and content `β`, sorted by reading word.
pub fn enumerate_ssyt(lambda: &Partition, beta: &Composition) -> Result<Vec<Filling>> {
    check_sizes(lambda.size(), beta.size())?;
    let mut out = peel_ssyt(lambda, beta);
    out.sort_by_key(Filling::reading_word);
    Ok(out)
}

fn peel_ssyt(lambda: &Partition, beta: &Composition) -> Vec<Filling> {
    let Ok((star, l)) = beta.truncate() else {
        return vec![Filling::row_filled(&[])];
    };
    let label = beta.len();
    horizontal_strip_removals(lambda, l)
        .iter()
        .flat_map(|gamma| {
            peel_ssyt(gamma, &star)
                .into_iter()
                .map(|t| t.extend(lambda, label).expect("strip lies outside the smaller shape"))
                .collect::<Vec<_>>()
        })
        .collect()
}

/// Each label class is a special rim-hook of the right size, the cells with
/// smaller labels form a diagram, and column 1 weakly increases downward.
pub fn is_srht(f: &Filling, mu: &Partition, beta: &Composition) -> bool {
    if f.shape() != &mu[..] || f.content() != beta.to_vec() {
        return false;
    }
    let column_one: Vec<usize> = f.rows().iter().map(|r| r[0]).collect();
    if column_one.windows(2).any(|w| w[0] > w[1]) {
        return false;
    }
    (1..=beta.len()).all(|k| {
        is_special_rim_hook(&f.cells_with(k)) && f.prefix_shape(k).is_some_and(|p| p.windows(2).all(|w| w[0] >= w[1]))
    })
}

/// The unique SRHT of shape `μ` and content `β`, with its sign, if it exists.
pub fn srht_find(mu: &Partition, beta: &Composition) -> Result<Option<(Filling, i32)>> {
    check_sizes(mu.size(), beta.size())?;
    let mut shapes = vec![mu.clone()];
    let mut sign = 1;
    for &l in beta.iter().rev() {
        let current = shapes.last().expect("nonempty");
        match special_rim_hook_removal(current, l) {
            Some((rest, hook)) => {
                sign *= hook.sign();
                shapes.push(rest);
            }
            None => return Ok(None),
        }
    }
    shapes.reverse();
    let mut f = Filling::row_filled(&[]);
    for (k, shape) in shapes.iter().enumerate().skip(1) {
        f = f.extend(shape, k)?;
    }
    Ok(Some((f, sign)))
}

pub fn srh_sign(mu: &Partition, delta: &Partition) -> i32 {
    RimHook::new(skew_cells(mu, delta)).map(|h| h.sign()).unwrap_or(0)
}

/// `wt_A = 1` on horizontal strips, `wt_B = sgn` on special rim-hooks.
#[derive(Clone, Copy, Debug, Default)]
pub struct KostkaSystem;

pub fn kostka_system() -> KostkaSystem {
    KostkaSystem
}

impl LocalSystem for KostkaSystem {
    type Shape = Partition;

    fn name(&self) -> &'static str {
        "kostka"
    }

    fn shapes(&self, n: usize) -> Vec<Partition> {
        crate::shapes::partitions(n)
    }

    fn succ_a(&self, lambda: &Partition, l: usize) -> Vec<Partition> {
        horizontal_strip_removals(lambda, l)
    }

    fn succ_b(&self, mu: &Partition, l: usize) -> Vec<Partition> {
        special_rim_hook_removal(mu, l).map(|(d, _)| d).into_iter().collect()
    }

    fn weight_a(&self, _: &Partition, _: &Partition) -> Rational {
        int(1)
    }

    fn weight_b(&self, mu: &Partition, delta: &Partition) -> Rational {
        int(srh_sign(mu, delta) as i64)
    }
}

/// `γ^i`: the shape left after removing the special rim-hook that ends in
/// row `i` of `μ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexedShape {
    pub index: usize,
    pub gamma: Partition,
    pub sign: i32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum KostkaPairing {
    Empty,
    Diagonal {
        gamma: Partition,
    },
    /// The two members of `G(λ,μ)`, lower index first.
    Matched {
        first: IndexedShape,
        second: IndexedShape,
    },
}

fn srh_shapes(mu: &Partition) -> Vec<IndexedShape> {
    (1..=mu.len())
        .map(|i| {
            let (gamma, hook) =
                crate::tableau::remove_hook_at(mu, crate::shapes::Cell::new(i, 1)).expect("column 1 cell");
            IndexedShape { index: i, gamma, sign: hook.sign() }
        })
        .collect()
}

fn strip_from(lambda: &Partition, gamma: &Partition) -> bool {
    lambda.contains(gamma) && is_horizontal_strip(&skew_cells(lambda, gamma))
}

/// The other member of `G(λ,μ)` for `γ^i`, when `λ ≠ μ`: `γ^{i+1}` if the
/// last cell of row `i` of `μ` lies in `λ`, otherwise `γ^{i-1}`.
fn partner_index(lambda: &Partition, mu: &Partition, i: usize) -> Result<usize> {
    let s = mu.len();
    if lambda.row(i) >= mu.row(i) {
        if i == s {
            return Err(Error::InvalidInput(format!("no partner: {lambda} and {mu} would be equal")));
        }
        Ok(i + 1)
    } else {
        if i == 1 {
            return Err(Error::InvalidInput(format!("no partner for the first hook of {mu} against {lambda}")));
        }
        Ok(i - 1)
    }
}

pub fn kostka_pair(lambda: &Partition, mu: &Partition) -> Result<KostkaPairing> {
    check_sizes(lambda.size(), mu.size())?;
    if lambda.is_empty() {
        return Err(Error::InvalidInput("pairing needs n > 0".into()));
    }
    if lambda == mu {
        return Ok(KostkaPairing::Diagonal { gamma: lambda.without_last() });
    }
    let gammas = srh_shapes(mu);
    let Some(hit) = gammas.iter().find(|g| strip_from(lambda, &g.gamma)) else {
        return Ok(KostkaPairing::Empty);
    };
    let j = partner_index(lambda, mu, hit.index)?;
    let other = gammas[j - 1].clone();
    debug_assert!(strip_from(lambda, &other.gamma) && other.sign == -hit.sign);
    let (first, second) = if hit.index < j { (hit.clone(), other) } else { (other, hit.clone()) };
    Ok(KostkaPairing::Matched { first, second })
}

/// The partner of `γ ∈ G(λ,μ)` for `λ ≠ μ`.
pub fn kostka_partner(lambda: &Partition, mu: &Partition, gamma: &Partition) -> Result<Partition> {
    check_sizes(lambda.size(), mu.size())?;
    if lambda == mu {
        return Err(Error::InvalidInput("the diagonal has no partner".into()));
    }
    let gammas = srh_shapes(mu);
    let hit = gammas
        .iter()
        .find(|g| &g.gamma == gamma && strip_from(lambda, gamma))
        .ok_or_else(|| Error::InvalidInput(format!("{gamma} is not in G({lambda}, {mu})")))?;
    let j = partner_index(lambda, mu, hit.index)?;
    Ok(gammas[j - 1].gamma.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::{compositions, partitions};
    use itertools::Itertools;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn comp(p: &[usize]) -> Composition {
        Composition::new(p.to_vec()).unwrap()
    }

    fn all_fillings(shape: &[usize], content: &[usize]) -> Vec<Filling> {
        let word: Vec<usize> = content.iter().enumerate().flat_map(|(k, &m)| vec![k + 1; m]).collect();
        let mut seen: Vec<Filling> = word
            .iter()
            .copied()
            .permutations(word.len())
            .unique()
            .map(|w| {
                let mut it = w.into_iter();
                Filling::from_fn(shape, |_| it.next().unwrap()).unwrap()
            })
            .collect();
        seen.sort_by_key(Filling::reading_word);
        seen
    }

    #[test]
    fn worked_tableaux() {
        let t = Filling::new(vec![4, 3], vec![vec![1, 1, 2, 2], vec![2, 3, 3]]).unwrap();
        assert!(is_ssyt(&t, &part(&[4, 3]), &comp(&[2, 3, 2])));
        let found = enumerate_ssyt(&part(&[4, 3]), &comp(&[2, 3, 2])).unwrap();
        assert_eq!(found.len(), 2);
        assert_eq!(found[0], t);
        assert_eq!(found[1].rows(), &[vec![1, 1, 2, 3], vec![2, 2, 3]]);
        assert_eq!(enumerate_ssyt(&part(&[3, 1]), &comp(&[2, 1, 1])).unwrap().len(), 2);
        assert!(enumerate_ssyt(&part(&[1, 1, 1, 1]), &comp(&[4])).unwrap().is_empty());
        let bad = Filling::new(vec![2, 2], vec![vec![1, 2], vec![1, 2]]).unwrap();
        assert!(!is_ssyt(&bad, &part(&[2, 2]), &comp(&[2, 2])));
        assert!(enumerate_ssyt(&part(&[2]), &comp(&[1])).is_err());
    }

    #[test]
    fn worked_srht() {
        let (f, s) = srht_find(&part(&[3, 3, 3]), &comp(&[3, 2, 4])).unwrap().unwrap();
        assert_eq!(f.rows(), &[vec![1, 1, 1], vec![2, 2, 3], vec![3, 3, 3]]);
        assert_eq!(s, -1);
        let (f, s) = srht_find(&part(&[3, 3, 3]), &comp(&[2, 4, 3])).unwrap().unwrap();
        assert_eq!(f.rows(), &[vec![1, 1, 2], vec![2, 2, 2], vec![3, 3, 3]]);
        assert_eq!(s, -1);
        assert!(srht_find(&part(&[3, 3, 3]), &comp(&[4, 2, 3])).unwrap().is_none());
        assert_eq!(srht_find(&part(&[2, 1, 1]), &comp(&[2, 1, 1])).unwrap().unwrap().1, 1);
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for n in 1..=5 {
            for lambda in partitions(n) {
                for beta in compositions(n) {
                    let brute: Vec<Filling> =
                        all_fillings(&lambda, &beta).into_iter().filter(|f| is_ssyt(f, &lambda, &beta)).collect();
                    assert_eq!(enumerate_ssyt(&lambda, &beta).unwrap(), brute, "{lambda} {beta}");
                    let srht: Vec<Filling> =
                        all_fillings(&lambda, &beta).into_iter().filter(|f| is_srht(f, &lambda, &beta)).collect();
                    let found: Vec<Filling> = srht_find(&lambda, &beta).unwrap().map(|(f, _)| f).into_iter().collect();
                    assert_eq!(found, srht, "{lambda} {beta}");
                }
            }
        }
    }

    #[test]
    fn strips_and_prefixes_of_enumerated_tableaux() {
        for n in 1..=6 {
            for lambda in partitions(n) {
                for beta in compositions(n) {
                    for t in enumerate_ssyt(&lambda, &beta).unwrap() {
                        for k in 1..=beta.len() {
                            let p = t.prefix_shape(k).unwrap();
                            assert!(p.windows(2).all(|w| w[0] >= w[1]));
                            assert!(is_horizontal_strip(&t.cells_with(k)));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn system_successors() {
        let sys = kostka_system();
        assert_eq!(sys.succ_a(&part(&[4, 3]), 2), vec![part(&[4, 1]), part(&[3, 2])]);
        assert_eq!(sys.succ_b(&part(&[3, 3, 3]), 4), vec![part(&[3, 2])]);
        assert!(sys.succ_b(&part(&[3, 1]), 5).is_empty());
    }

    #[test]
    fn worked_pairings() {
        let lambda = part(&[6, 4, 2, 1]);
        assert_eq!(kostka_pair(&lambda, &lambda).unwrap(), KostkaPairing::Diagonal { gamma: part(&[6, 4, 2]) });
        let KostkaPairing::Matched { first, second } = kostka_pair(&lambda, &part(&[4, 3, 3, 3])).unwrap() else {
            panic!("expected a matched pair");
        };
        // the hook ending in row 2 spans rows 2..4, the one ending in row 3 spans rows 3..4
        assert_eq!((first.index, first.gamma.clone(), first.sign), (2, part(&[4, 2, 2]), 1));
        assert_eq!((second.index, second.gamma.clone(), second.sign), (3, part(&[4, 3, 2]), -1));
        let KostkaPairing::Matched { first, second } = kostka_pair(&part(&[7, 2]), &part(&[4, 3, 2])).unwrap() else {
            panic!("expected a matched pair");
        };
        assert_eq!((first.gamma, second.gamma), (part(&[2, 1]), part(&[4, 1])));
        assert_eq!(first.sign, -second.sign);
        assert_eq!(kostka_partner(&part(&[7, 2]), &part(&[4, 3, 2]), &part(&[4, 1])).unwrap(), part(&[2, 1]));
    }

    #[test]
    fn pairing_matches_brute_force_intersection() {
        for n in 1..=8 {
            let ps = partitions(n);
            for lambda in &ps {
                let strips: Vec<Partition> = (1..=n).flat_map(|l| horizontal_strip_removals(lambda, l)).collect();
                for mu in &ps {
                    let mut g: Vec<(Partition, i32)> = (1..=n)
                        .filter_map(|l| special_rim_hook_removal(mu, l))
                        .filter(|(d, _)| strips.contains(d))
                        .map(|(d, h)| (d, h.sign()))
                        .collect();
                    g.sort();
                    match kostka_pair(lambda, mu).unwrap() {
                        KostkaPairing::Empty => assert!(g.is_empty()),
                        KostkaPairing::Diagonal { gamma } => {
                            assert_eq!(lambda, mu);
                            assert_eq!(g, vec![(gamma, 1)]);
                        }
                        KostkaPairing::Matched { first, second } => {
                            let mut got = vec![(first.gamma.clone(), first.sign), (second.gamma.clone(), second.sign)];
                            got.sort();
                            assert_eq!(g, got, "{lambda} {mu}");
                            assert_eq!(first.sign, -second.sign);
                            assert_eq!(second.index, first.index + 1);
                            assert_eq!(kostka_partner(lambda, mu, &first.gamma).unwrap(), second.gamma);
                            assert_eq!(kostka_partner(lambda, mu, &second.gamma).unwrap(), first.gamma);
                        }
                    }
                }
            }
        }
    }
}
