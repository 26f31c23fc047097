//! Scalar invariants shared by the applications: `Z_β`, `z_λ` and `W_μ`.

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::shapes::{Composition, Partition};

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// Product of the partial sums `β₁(β₁+β₂)⋯(β₁+⋯+β_s)`; `Z_() = 1`.
pub fn big_z(beta: &[usize]) -> BigUint {
    let mut partial = 0usize;
    let mut acc = BigUint::one();
    for &p in beta {
        partial += p;
        acc *= BigUint::from(partial);
    }
    acc
}

pub fn big_z_of(beta: &Composition) -> BigUint {
    big_z(beta)
}

/// `z_λ = ∏_k m_k! · k^{m_k}`.
pub fn little_z(lambda: &Partition) -> BigUint {
    let mut acc = BigUint::one();
    let mut i = 0;
    while i < lambda.len() {
        let k = lambda[i];
        let m = lambda[i..].iter().take_while(|&&p| p == k).count();
        acc *= factorial(m) * BigUint::from(k).pow(m as u32);
        i += m;
    }
    acc
}

/// Multinomial coefficient `(Σ m_i)! / ∏ m_i!`.
pub fn multinomial(counts: &[usize]) -> BigUint {
    let total: usize = counts.iter().sum();
    let denom = counts.iter().fold(BigUint::one(), |acc, &m| acc * factorial(m));
    factorial(total) / denom
}

fn multiplicities(mu: &Partition) -> Vec<usize> {
    let mut counts = Vec::new();
    let mut i = 0;
    while i < mu.len() {
        let m = mu[i..].iter().take_while(|&&p| p == mu[i]).count();
        counts.push(m);
        i += m;
    }
    counts
}

/// `W_μ = (|μ| / ℓ(μ)) · multinomial(ℓ(μ); m₁, m₂, …)`: the sum of last
/// parts over all rearrangements of `μ`.
pub fn big_w(mu: &Partition) -> Result<BigUint> {
    if mu.is_empty() {
        return Err(Error::EmptyPartition);
    }
    let size: usize = mu.iter().sum();
    let scaled = BigUint::from(size) * multinomial(&multiplicities(mu));
    let len = BigUint::from(mu.len());
    debug_assert_eq!(&scaled % &len, BigUint::from(0u8));
    Ok(scaled / len)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;
    use crate::shapes::{compositions, multiset_difference, partitions, rearrangements};

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn z_values() {
        assert_eq!(big_z(&[3, 4, 4]), BigUint::from(231u32));
        assert_eq!(big_z(&[4, 3, 4]), BigUint::from(308u32));
        assert_eq!(big_z(&[7]), BigUint::from(7u32));
        assert_eq!(big_z(&[]), BigUint::one());
        assert_eq!(big_z(&[3, 2, 2]), BigUint::from(105u32));
        assert_eq!(big_z(&[2, 3, 2]), BigUint::from(70u32));
        assert_eq!(big_z(&[2, 2, 3]), BigUint::from(56u32));
    }

    #[test]
    fn little_z_values() {
        assert_eq!(little_z(&part(&[3, 2, 2])), BigUint::from(24u32));
        assert_eq!(little_z(&part(&[6])), BigUint::from(6u32));
        assert_eq!(little_z(&part(&[1, 1, 1, 1])), BigUint::from(24u32));
        // 4!/z = 1: only the identity has cycle type 1111
        assert_eq!(factorial(4) / little_z(&part(&[1, 1, 1, 1])), BigUint::one());
    }

    #[test]
    fn w_values() {
        assert_eq!(big_w(&part(&[5])).unwrap(), BigUint::from(5u32));
        assert_eq!(big_w(&part(&[3, 1, 1])).unwrap(), BigUint::from(5u32));
        assert_eq!(big_w(&part(&[3, 1])).unwrap(), BigUint::from(4u32));
        assert_eq!(big_w(&part(&[1, 1])).unwrap(), BigUint::from(1u32));
        assert_eq!(big_w(&Partition::empty()), Err(Error::EmptyPartition));
    }

    #[test]
    fn z_truncation_recursion() {
        for n in 1..=10 {
            for beta in compositions(n) {
                let (star, _) = beta.truncate().unwrap();
                assert_eq!(big_z(&beta), BigUint::from(n) * big_z(&star));
            }
        }
    }

    #[test]
    fn harmonic_mean_identity() {
        for n in 1..=9 {
            for lambda in partitions(n) {
                let sum: Rational =
                    rearrangements(&lambda).iter().map(|b| Rational::new(1.into(), big_z(b).into())).sum();
                assert_eq!(sum, Rational::new(1.into(), little_z(&lambda).into()), "{lambda}");
            }
        }
    }

    #[test]
    fn w_closed_form_matches_enumeration_and_recursion() {
        for n in 1..=10 {
            let comps = compositions(n);
            for mu in partitions(n) {
                let w = big_w(&mu).unwrap();
                let enumerated: usize = comps.iter().filter(|a| a.sorted() == mu).map(|a| a.last_part().unwrap()).sum();
                assert_eq!(w, BigUint::from(enumerated), "{mu}");
                if mu.len() > 1 {
                    let mut distinct: Vec<usize> = mu.to_vec();
                    distinct.dedup();
                    let rec: BigUint =
                        distinct.iter().map(|&i| big_w(&multiset_difference(&mu, &part(&[i]))).unwrap()).sum();
                    assert_eq!(w, rec, "{mu}");
                }
            }
        }
    }
}
