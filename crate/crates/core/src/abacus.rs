//! Bead-and-gap words for partitions: rim-hooks become bead jumps.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::{Partition, ShapeKey};

/// The `N`-bead abacus of a partition. Position `p` (0-based) holds a bead
/// exactly when `p = λ_r + N - r` for some `1 ≤ r ≤ N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Abacus {
    beads: usize,
    word: Vec<bool>,
}

impl Abacus {
    pub fn from_partition(lambda: &Partition, beads: usize) -> Result<Self> {
        if beads < lambda.len() {
            return Err(Error::Abacus(format!("{beads} beads cannot hold {lambda}")));
        }
        let mut word = vec![false; beads + lambda.size() + 1];
        for r in 1..=beads {
            word[lambda.row(r) + beads - r] = true;
        }
        Ok(Abacus { beads, word })
    }

    /// Reads a word of `0`/`1` characters; trailing gaps may be omitted.
    pub fn from_word(word: &str) -> Result<Self> {
        let bits = word
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::Abacus(format!("bad character {c:?} in word"))),
            })
            .collect::<Result<Vec<bool>>>()?;
        let beads = bits.iter().filter(|&&b| b).count();
        Ok(Abacus { beads, word: bits })
    }

    pub fn beads(&self) -> usize {
        self.beads
    }

    pub fn is_bead(&self, pos: usize) -> bool {
        self.word.get(pos).copied().unwrap_or(false)
    }

    /// Bead positions in decreasing order.
    pub fn bead_positions(&self) -> Vec<usize> {
        (0..self.word.len()).rev().filter(|&p| self.word[p]).collect()
    }

    pub fn to_partition(&self) -> Partition {
        let n = self.beads;
        let parts =
            self.bead_positions().into_iter().enumerate().map(|(r, p)| p + r + 1 - n).filter(|&p| p > 0).collect();
        Partition::new(parts).expect("bead positions decrease")
    }

    pub fn beads_between(&self, a: usize, b: usize) -> usize {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        (lo + 1..hi).filter(|&p| self.is_bead(p)).count()
    }

    /// Moves the bead at `from` to the gap at `to`, returning the new abacus
    /// and the sign `(-1)^b`, `b` the beads strictly between. Moving down
    /// removes a rim-hook of size `from - to`; moving up adds one.
    pub fn move_bead(&self, from: usize, to: usize) -> Result<(Abacus, i32)> {
        if !self.is_bead(from) {
            return Err(Error::Abacus(format!("no bead at position {from}")));
        }
        if self.is_bead(to) {
            return Err(Error::Abacus(format!("position {to} is occupied")));
        }
        let sign = if self.beads_between(from, to).is_multiple_of(2) { 1 } else { -1 };
        let mut word = self.word.clone();
        if to >= word.len() {
            word.resize(to + 1, false);
        }
        word[from] = false;
        word[to] = true;
        Ok((Abacus { beads: self.beads, word }, sign))
    }

    /// The word up to its last bead.
    pub fn word(&self) -> String {
        let end = self.word.iter().rposition(|&b| b).map_or(0, |p| p + 1);
        self.word[..end].iter().map(|&b| if b { '1' } else { '0' }).collect()
    }

    /// The word padded with gaps to `len` characters.
    pub fn word_padded(&self, len: usize) -> String {
        let mut w = self.word();
        while w.len() < len {
            w.push('0');
        }
        w
    }
}

impl fmt::Display for Abacus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.word())
    }
}

#[derive(Serialize, Deserialize)]
struct AbacusJson {
    beads: usize,
    word: String,
}

impl Serialize for Abacus {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        AbacusJson { beads: self.beads, word: self.word() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Abacus {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = AbacusJson::deserialize(d)?;
        let ab = Abacus::from_word(&raw.word).map_err(serde::de::Error::custom)?;
        if ab.beads != raw.beads {
            return Err(serde::de::Error::custom(format!("word has {} beads, expected {}", ab.beads, raw.beads)));
        }
        Ok(ab)
    }
}
