use std::collections::HashMap;
use std::fmt;

use itertools::Itertools;

use serde::{Deserialize, Serialize};
use serde_json::json;

use super::{Action, Involution, Outcome, TraceStep};
use crate::error::{check_sizes, Error, Result};
use crate::perm::Permutation;
use crate::rimhook::{
    border_rimhook_of_cell, cell_of_border_rimhook, enumerate_rht, is_rht, rht_sign, rimhook_partner,
};
use crate::shapes::{compositions, Composition, Partition, ShapeKey};
use crate::tableau::{skew_cells, Filling, RimHook};

/// `(c_n, …, c_1)` with `1 ≤ c_k ≤ k`, most significant entry first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct ChoiceSequence(Vec<usize>);

impl ChoiceSequence {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        let n = entries.len();
        for (i, &c) in entries.iter().enumerate() {
            let k = n - i;
            if c == 0 || c > k {
                return Err(Error::InvalidChoice(format!("c_{k} = {c} is outside 1..={k}")));
            }
        }
        Ok(ChoiceSequence(entries))
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `c_k`.
    pub fn get(&self, k: usize) -> Option<usize> {
        (k >= 1 && k <= self.0.len()).then(|| self.0[self.0.len() - k])
    }

    /// Every member of `CS_n` (`n!` of them) in lexicographic order.
    pub fn all(n: usize) -> Vec<ChoiceSequence> {
        let mut out = vec![Vec::new()];
        for k in (1..=n).rev() {
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<usize>| {
                    (1..=k).map(move |c| {
                        let mut next = prefix.clone();
                        next.push(c);
                        next
                    })
                })
                .collect();
        }
        out.into_iter().map(ChoiceSequence).collect()
    }
}

impl TryFrom<Vec<usize>> for ChoiceSequence {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        ChoiceSequence::new(v)
    }
}

impl From<ChoiceSequence> for Vec<usize> {
    fn from(c: ChoiceSequence) -> Vec<usize> {
        c.0
    }
}

impl fmt::Display for ChoiceSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", items.join(","))
    }
}

/// Fills a RHT of shape `shape` from the outside in while building the
/// cycles of a permutation of `ground` from right to left. `first` fixes the
/// outermost rim-hook; otherwise the next entry picks it by cell number.
fn build(
    shape: &Partition,
    first: Option<&RimHook>,
    entries: &[usize],
    ground: &[i64],
) -> Result<(Filling, Permutation)> {
    let n = shape.size();
    let expected = n - first.is_some() as usize;
    if entries.len() != expected || ground.len() != n {
        return Err(Error::InvalidChoice(format!(
            "{} choices and {} ground elements for a shape of size {n}",
            entries.len(),
            ground.len()
        )));
    }
    let mut available: Vec<i64> = ground.to_vec();
    available.sort_unstable();
    let mut next = entries.iter().copied();
    let mut nu = shape.clone();
    let mut hooks: Vec<RimHook> = Vec::new();
    let mut cycles: Vec<Vec<i64>> = Vec::new();
    while !nu.is_empty() {
        let (hook, rest) = match (hooks.is_empty(), first) {
            (true, Some(rho)) => border_rimhook_of_cell(&nu, cell_of_border_rimhook(&nu, rho)?)?,
            _ => border_rimhook_of_cell(&nu, next.next().expect("length checked"))?,
        };
        let mut cycle = vec![available.remove(0)];
        for _ in 1..hook.size() {
            let c = next.next().expect("length checked");
            if c == 0 || c > available.len() {
                return Err(Error::InvalidChoice(format!("choice {c} with {} elements left", available.len())));
            }
            cycle.push(available.remove(c - 1));
        }
        cycles.push(cycle);
        hooks.push(hook);
        nu = rest;
    }
    let count = hooks.len();
    let filling = Filling::from_fn(shape, |cell| {
        count - hooks.iter().position(|h| h.cells.contains(&cell)).expect("hooks tile the shape")
    })?;
    cycles.reverse();
    Ok((filling, Permutation::from_cycles(ground, &cycles)?))
}

/// Reads back the choices from a filling and permutation; the first entry
/// (the outermost hook's cell number) is included only when `with_first`.
fn unbuild(s: &Filling, sigma: &Permutation, with_first: bool) -> Result<(RimHook, Vec<usize>)> {
    let shape = Partition::new(s.shape().to_vec())?;
    let content = Composition::new(s.content())?;
    if !is_rht(s, &shape, &content) {
        return Err(Error::InvalidFilling(format!("{s} is not a rim-hook tableau")));
    }
    if sigma.cyc_comp() != content {
        return Err(Error::InvalidPermutation(format!("cycle type of {sigma} is not {content}")));
    }
    if shape.is_empty() {
        return Err(Error::InvalidInput("empty shape has no outer rim-hook".into()));
    }
    let mut available = sigma.ground();
    let cycles = sigma.canonical_cycles();
    let mut out = Vec::with_capacity(shape.size());
    let mut outer = None;
    for label in (1..=content.len()).rev() {
        let nu = Partition::new(s.restrict(label)?.shape().to_vec())?;
        let hook = RimHook::new(s.cells_with(label))?;
        if label < content.len() || with_first {
            out.push(cell_of_border_rimhook(&nu, &hook)?);
        }
        if outer.is_none() {
            outer = Some(hook);
        }
        let cycle = &cycles[label - 1];
        available.retain(|&x| x != cycle[0]);
        for x in &cycle[1..] {
            let pos = available.iter().position(|y| y == x).expect("element of the ground set");
            out.push(pos + 1);
            available.remove(pos);
        }
    }
    Ok((outer.expect("nonempty shape"), out))
}

/// `F_λ`: a choice sequence of length `|λ|` gives `(S, σ)` with `S` a RHT of
/// shape `λ`, `σ ∈ S_n` and `cycC(σ) = content(S)`.
pub fn f_lambda(lambda: &Partition, c: &ChoiceSequence) -> Result<(Filling, Permutation)> {
    check_sizes(lambda.size(), c.len())?;
    let ground: Vec<i64> = (1..=lambda.size() as i64).collect();
    build(lambda, None, c.entries(), &ground)
}

pub fn f_lambda_inv(s: &Filling, sigma: &Permutation) -> Result<ChoiceSequence> {
    if s.shape().is_empty() {
        return ChoiceSequence::new(Vec::new());
    }
    let (_, entries) = unbuild(s, sigma, true)?;
    ChoiceSequence::new(entries)
}

/// `F_{μ,ρ}`: as `F_μ` with the outermost rim-hook fixed to `ρ`, over any
/// ground set of `|μ|` integers.
pub fn f_mu_rho(mu: &Partition, rho: &RimHook, c: &ChoiceSequence, ground: &[i64]) -> Result<(Filling, Permutation)> {
    build(mu, Some(rho), c.entries(), ground)
}

/// Inverse of [`f_mu_rho`]: the fixed outer rim-hook and the choices.
pub fn f_mu_rho_inv(t: &Filling, sigma: &Permutation) -> Result<(RimHook, ChoiceSequence)> {
    let (rho, entries) = unbuild(t, sigma, false)?;
    Ok((rho, ChoiceSequence::new(entries)?))
}

/// `(S, T, σ)` with `S`, `T` rim-hook tableaux of a common content equal to
/// `cycC(σ)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RhtTriple {
    #[serde(rename = "S")]
    pub s: Filling,
    #[serde(rename = "T")]
    pub t: Filling,
    pub sigma: Permutation,
}

impl RhtTriple {
    pub fn new(s: Filling, t: Filling, sigma: Permutation) -> Result<Self> {
        let content = Composition::new(s.content())?;
        for f in [&s, &t] {
            if !is_rht(f, &Partition::new(f.shape().to_vec())?, &content) {
                return Err(Error::InvalidFilling(format!("{f} is not a rim-hook tableau of content {content}")));
            }
        }
        if sigma.cyc_comp() != content {
            return Err(Error::InvalidPermutation(format!("cycle type of {sigma} is not {content}")));
        }
        Ok(RhtTriple { s, t, sigma })
    }

    pub fn content(&self) -> Composition {
        Composition::new(self.s.content()).expect("positive content")
    }

    pub fn sign(&self) -> i32 {
        rht_sign(&self.s) * rht_sign(&self.t)
    }

    fn truncated(&self, k: usize) -> Result<RhtTriple> {
        let cycles = self.sigma.canonical_cycles();
        Ok(RhtTriple {
            s: self.s.restrict(k)?,
            t: self.t.restrict(k)?,
            sigma: Permutation::from_cycles(&[], &cycles[..k])?,
        })
    }
}

/// All of `P_{λ,μ}`, grouped by content in canonical order.
pub fn enumerate_triples(lambda: &Partition, mu: &Partition) -> Result<Vec<RhtTriple>> {
    check_sizes(lambda.size(), mu.size())?;
    let n = lambda.size();
    let mut by_type: HashMap<Composition, Vec<Permutation>> = HashMap::new();
    let ground: Vec<i64> = (1..=n as i64).collect();
    for images in ground.iter().copied().permutations(n) {
        let p = Permutation::from_images(&ground, &images)?;
        by_type.entry(p.cyc_comp()).or_default().push(p);
    }
    let mut out = Vec::new();
    for beta in compositions(n) {
        let Some(perms) = by_type.get(&beta) else {
            continue;
        };
        let ss = enumerate_rht(lambda, &beta)?;
        if ss.is_empty() {
            continue;
        }
        let ts = enumerate_rht(mu, &beta)?;
        for (s, _) in &ss {
            for (t, _) in &ts {
                for p in perms {
                    out.push(RhtTriple { s: s.clone(), t: t.clone(), sigma: p.clone() });
                }
            }
        }
    }
    Ok(out)
}

fn hook_between(outer: &Partition, inner: &Partition) -> Result<RimHook> {
    RimHook::new(skew_cells(outer, inner))
}

/// The rim-hook involution on `P_{λ,μ}`; `(S, S, σ)` are its fixed points.
pub fn rht_involution(x: &RhtTriple) -> Result<Involution<RhtTriple>> {
    let x = RhtTriple::new(x.s.clone(), x.t.clone(), x.sigma.clone())?;
    if x.s == x.t {
        return Ok(Involution { outcome: Outcome::FixedPoint, trace: Vec::new() });
    }
    let ell = x.content().len();
    let mut trace = Vec::new();
    let mut k = ell;
    let mut current = x.clone();
    loop {
        let next = x.truncated(k - 1)?;
        trace.push(TraceStep { action: Action::Strip, before: json!(current), after: json!(next) });
        if next.s == next.t {
            break;
        }
        current = next;
        k -= 1;
    }
    let prime = x.truncated(k)?;
    let lam_bar = Partition::new(prime.s.shape().to_vec())?;
    let mu_bar = Partition::new(prime.t.shape().to_vec())?;
    let gamma = Partition::new(x.s.restrict(k - 1)?.shape().to_vec())?;
    let eta = hook_between(&lam_bar, &gamma)?;
    let rho = hook_between(&mu_bar, &gamma)?;
    assert!(eta != rho, "stripping stopped with equal outer rim-hooks");
    assert!(lam_bar != mu_bar, "stripping stopped on equal shapes {lam_bar}");

    let tilde = rimhook_partner(&lam_bar, &mu_bar, &gamma)?;
    let eta_t = hook_between(&lam_bar, &tilde)?;
    let rho_t = hook_between(&mu_bar, &tilde)?;
    trace.push(TraceStep {
        action: Action::LocalPair,
        before: json!({"lambda": lam_bar, "mu": mu_bar, "gamma": gamma}),
        after: json!({"gamma": tilde}),
    });

    let (_, c) = f_mu_rho_inv(&prime.t, &prime.sigma)?;
    let (t2, sigma2) = f_mu_rho(&mu_bar, &rho_t, &c, &prime.sigma.ground())?;
    let k_tilde = t2.max_label();
    let mut s2 = t2.restrict(k_tilde - 1)?.extend(&lam_bar, k_tilde)?;
    let mut t2 = t2;
    debug_assert_eq!(s2.cells_with(k_tilde), eta_t.cells);
    trace.push(TraceStep {
        action: Action::FTransport,
        before: json!({"T": prime.t, "sigma": prime.sigma, "choices": c}),
        after: json!({"S": s2, "T": t2, "sigma": sigma2}),
    });

    let cycles = x.sigma.canonical_cycles();
    let mut sigma_out = sigma2;
    for j in k + 1..=ell {
        let label = k_tilde + j - k;
        let before = json!({"S": s2, "T": t2, "sigma": sigma_out});
        s2 = s2.extend(x.s.restrict(j)?.shape(), label)?;
        t2 = t2.extend(x.t.restrict(j)?.shape(), label)?;
        sigma_out = sigma_out.disjoint_union(&Permutation::from_cycles(&[], &cycles[j - 1..j])?)?;
        trace.push(TraceStep { action: Action::Restore, before, after: json!({"S": s2, "T": t2, "sigma": sigma_out}) });
    }
    let out = RhtTriple::new(s2, t2, sigma_out)?;
    Ok(Involution { outcome: Outcome::Partner(out), trace })
}
