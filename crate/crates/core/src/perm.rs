//! Permutations of finite integer sets and their canonical cycle notation.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{check_sizes, Error, Result};
use crate::scalars::{big_z, factorial};
use crate::shapes::{Composition, Partition, ShapeKey};

/// A bijection of a finite set of integers onto itself.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    map: BTreeMap<i64, i64>,
}

impl Permutation {
    pub fn identity(ground: impl IntoIterator<Item = i64>) -> Self {
        Permutation { map: ground.into_iter().map(|x| (x, x)).collect() }
    }

    /// Builds `σ` from disjoint cycles; elements of `ground` outside every
    /// cycle are fixed. An empty `ground` means the union of the cycles.
    pub fn from_cycles(ground: &[i64], cycles: &[Vec<i64>]) -> Result<Self> {
        let mut map: BTreeMap<i64, i64> = ground.iter().map(|&x| (x, x)).collect();
        if map.len() != ground.len() {
            return Err(Error::InvalidPermutation("repeated element in ground set".into()));
        }
        let mut seen = std::collections::BTreeSet::new();
        for cycle in cycles {
            if cycle.is_empty() {
                return Err(Error::InvalidPermutation("empty cycle".into()));
            }
            for (k, &x) in cycle.iter().enumerate() {
                if !seen.insert(x) {
                    return Err(Error::InvalidPermutation(format!("{x} appears twice")));
                }
                if !ground.is_empty() && !map.contains_key(&x) {
                    return Err(Error::InvalidPermutation(format!("{x} is not in the ground set")));
                }
                map.insert(x, cycle[(k + 1) % cycle.len()]);
            }
        }
        Ok(Permutation { map })
    }

    /// `ground[k] ↦ images[k]`.
    pub fn from_images(ground: &[i64], images: &[i64]) -> Result<Self> {
        check_sizes(ground.len(), images.len())?;
        let map: BTreeMap<i64, i64> = ground.iter().copied().zip(images.iter().copied()).collect();
        let mut targets: Vec<i64> = images.to_vec();
        targets.sort_unstable();
        let mut sources: Vec<i64> = ground.to_vec();
        sources.sort_unstable();
        if map.len() != ground.len() || targets != sources {
            return Err(Error::InvalidPermutation("images are not a rearrangement of the ground set".into()));
        }
        Ok(Permutation { map })
    }

    pub fn ground(&self) -> Vec<i64> {
        self.map.keys().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn apply(&self, x: i64) -> Option<i64> {
        self.map.get(&x).copied()
    }

    /// Cycles starting at their minima, ordered by decreasing minimum.
    pub fn canonical_cycles(&self) -> Vec<Vec<i64>> {
        let mut done = std::collections::BTreeSet::new();
        let mut cycles = Vec::new();
        for &start in self.map.keys() {
            if done.contains(&start) {
                continue;
            }
            let mut cycle = vec![start];
            done.insert(start);
            let mut x = self.map[&start];
            while x != start {
                cycle.push(x);
                done.insert(x);
                x = self.map[&x];
            }
            cycles.push(cycle);
        }
        cycles.reverse();
        cycles
    }

    pub fn cyc_comp(&self) -> Composition {
        Composition::new(self.canonical_cycles().iter().map(Vec::len).collect()).expect("cycles are nonempty")
    }

    pub fn cyc_part(&self) -> Partition {
        self.cyc_comp().sorted()
    }

    /// Joins two permutations of disjoint ground sets.
    pub fn disjoint_union(&self, other: &Permutation) -> Result<Permutation> {
        let mut map = self.map.clone();
        for (&k, &v) in &other.map {
            if map.insert(k, v).is_some() {
                return Err(Error::InvalidPermutation(format!("{k} lies in both ground sets")));
            }
        }
        Ok(Permutation { map })
    }

    /// Restriction to a union of cycles.
    pub fn restrict(&self, cycles: &[Vec<i64>]) -> Result<Permutation> {
        let ground: Vec<i64> = cycles.iter().flatten().copied().collect();
        let sub = Permutation::from_cycles(&[], cycles)?;
        if ground.iter().any(|x| self.apply(*x) != sub.apply(*x)) {
            return Err(Error::InvalidPermutation("not a union of cycles".into()));
        }
        Ok(sub)
    }

    /// Parses cycle notation such as `(8)(4,7,6)(3,9)`.
    pub fn parse(text: &str, ground: &[i64]) -> Result<Self> {
        let bad = || Error::InvalidPermutation(format!("cannot parse {text:?}"));
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(bad)?;
            let close = body.find(')').ok_or_else(bad)?;
            let cycle = body[..close]
                .split(',')
                .map(|s| s.trim().parse::<i64>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?;
            cycles.push(cycle);
            rest = body[close + 1..].trim_start();
        }
        Permutation::from_cycles(ground, &cycles)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in self.canonical_cycles() {
            let items: Vec<String> = cycle.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", items.join(","))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct PermutationJson {
    ground: Vec<i64>,
    cycles: Vec<Vec<i64>>,
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PermutationJson { ground: self.ground(), cycles: self.canonical_cycles() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = PermutationJson::deserialize(d)?;
        Permutation::from_cycles(&raw.ground, &raw.cycles).map_err(serde::de::Error::custom)
    }
}

/// `n! / Z_β`, the number of `σ ∈ S_n` with `cycC(σ) = β`.
pub fn count_by_cyc_comp(n: usize, beta: &Composition) -> Result<BigUint> {
    check_sizes(n, beta.size())?;
    Ok(factorial(n) / big_z(beta))
}
