//! Sign-reversing involutions on the pairs and triples counted by `A_n B_n`,
//! built by stripping to a survivor, swapping through the local pairing, and
//! restoring what was stripped.

pub mod kostka;
pub mod rimhook;

use std::collections::HashSet;
use std::hash::Hash;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{check_sizes, Error, Result};
use crate::par::{self, Exec};
use crate::scalars::factorial;
use crate::shapes::{Partition, ShapeKey};

pub use kostka::{enumerate_kostka_pairs, kostka_involution, kostka_survivor, KostkaPair};
pub use rimhook::{
    enumerate_triples, f_lambda, f_lambda_inv, f_mu_rho, f_mu_rho_inv, rht_involution, ChoiceSequence, RhtTriple,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Action {
    Strip,
    LocalPair,
    FTransport,
    Restore,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TraceStep {
    pub action: Action,
    pub before: Value,
    pub after: Value,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "output", rename_all = "snake_case")]
pub enum Outcome<T> {
    FixedPoint,
    Partner(T),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Involution<T> {
    pub outcome: Outcome<T>,
    pub trace: Vec<TraceStep>,
}

impl<T> Involution<T> {
    pub fn partner(&self) -> Option<&T> {
        match &self.outcome {
            Outcome::Partner(t) => Some(t),
            Outcome::FixedPoint => None,
        }
    }

    pub fn is_fixed(&self) -> bool {
        matches!(self.outcome, Outcome::FixedPoint)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PairingApp {
    Kostka,
    Rimhook,
}

impl FromStr for PairingApp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "kostka" => Ok(PairingApp::Kostka),
            "rimhook" => Ok(PairingApp::Rimhook),
            _ => Err(Error::InvalidInput(format!("no involution for {s:?}"))),
        }
    }
}

/// Exhaustive check of one involution on `P_{λ,μ}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairingReport {
    pub app: PairingApp,
    pub lambda: Partition,
    pub mu: Partition,
    pub objects: usize,
    pub fixed_points: usize,
    pub signed_fixed: i64,
    pub expected_fixed: i64,
    pub failures: Vec<String>,
}

impl PairingReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.signed_fixed == self.expected_fixed
    }
}

/// Shared shape of the two applications' objects.
trait Paired: Clone + Eq + Hash + Send + Sync + std::fmt::Debug {
    fn sign(&self) -> i32;
    fn shapes(&self) -> (Vec<usize>, Vec<usize>);
    fn involute(&self) -> Result<Involution<Self>>;
}

impl Paired for KostkaPair {
    fn sign(&self) -> i32 {
        KostkaPair::sign(self)
    }
    fn shapes(&self) -> (Vec<usize>, Vec<usize>) {
        (self.s.shape().to_vec(), self.t.shape().to_vec())
    }
    fn involute(&self) -> Result<Involution<Self>> {
        kostka_involution(self)
    }
}

impl Paired for RhtTriple {
    fn sign(&self) -> i32 {
        RhtTriple::sign(self)
    }
    fn shapes(&self) -> (Vec<usize>, Vec<usize>) {
        (self.s.shape().to_vec(), self.t.shape().to_vec())
    }
    fn involute(&self) -> Result<Involution<Self>> {
        rht_involution(self)
    }
}

fn check_all<T: Paired>(objects: &[T], exec: Exec) -> (usize, i64, Vec<String>) {
    let members: HashSet<&T> = objects.iter().collect();
    let results = par::map(exec, objects, |x| -> std::result::Result<Option<i32>, String> {
        let out = x.involute().map_err(|e| format!("{x:?}: {e}"))?;
        match out.outcome {
            Outcome::FixedPoint => Ok(Some(x.sign())),
            Outcome::Partner(y) => {
                if &y == x {
                    return Err(format!("{x:?} maps to itself without being fixed"));
                }
                if y.sign() != -x.sign() {
                    return Err(format!("{x:?} and its image have the same sign"));
                }
                if y.shapes() != x.shapes() {
                    return Err(format!("{x:?} changes shapes"));
                }
                if !members.contains(&y) {
                    return Err(format!("{x:?} maps outside the set: {y:?}"));
                }
                let back = y.involute().map_err(|e| format!("{y:?}: {e}"))?;
                if back.partner() != Some(x) {
                    return Err(format!("{x:?} is not restored by a second application"));
                }
                Ok(None)
            }
        }
    });
    let mut fixed = 0;
    let mut signed = 0;
    let mut failures = Vec::new();
    for r in results {
        match r {
            Ok(Some(s)) => {
                fixed += 1;
                signed += s as i64;
            }
            Ok(None) => {}
            Err(e) => failures.push(e),
        }
    }
    (fixed, signed, failures)
}

/// Enumerates all of `P_{λ,μ}` and checks that the involution is one,
/// reverses signs off its fixed points, and leaves `χ(λ=μ)` (Kostka) or
/// `n! χ(λ=μ)` (rim-hook) as the signed fixed-point count.
pub fn verify_pairing(app: PairingApp, lambda: &Partition, mu: &Partition) -> Result<PairingReport> {
    verify_pairing_with(app, lambda, mu, Exec::default())
}

pub fn verify_pairing_with(app: PairingApp, lambda: &Partition, mu: &Partition, exec: Exec) -> Result<PairingReport> {
    check_sizes(lambda.size(), mu.size())?;
    let diagonal = (lambda == mu) as i64;
    let (objects, (fixed_points, signed_fixed, failures), expected_fixed) = match app {
        PairingApp::Kostka => {
            let all = enumerate_kostka_pairs(lambda, mu)?;
            (all.len(), check_all(&all, exec), diagonal)
        }
        PairingApp::Rimhook => {
            let all = enumerate_triples(lambda, mu)?;
            let n_fact: i64 =
                factorial(lambda.size()).try_into().map_err(|_| Error::OutOfRange("n! overflows".into()))?;
            (all.len(), check_all(&all, exec), diagonal * n_fact)
        }
    };
    Ok(PairingReport {
        app,
        lambda: lambda.clone(),
        mu: mu.clone(),
        objects,
        fixed_points,
        signed_fixed,
        expected_fixed,
        failures,
    })
}
