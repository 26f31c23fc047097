use serde::{Deserialize, Serialize};
use serde_json::json;

use super::{Action, Involution, Outcome, TraceStep};
use crate::error::{check_sizes, Error, Result};
use crate::kostka::{enumerate_ssyt, is_srht, is_ssyt, kostka_partner, srht_find};
use crate::rimhook::rht_sign;
use crate::shapes::{compositions, Composition, Partition, ShapeKey};
use crate::tableau::Filling;

/// `(S, T)` with `S` semistandard of shape `λ`, `T` a special rim-hook
/// tableau of shape `μ`, both of the same content.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KostkaPair {
    #[serde(rename = "S")]
    pub s: Filling,
    #[serde(rename = "T")]
    pub t: Filling,
    pub content: Composition,
}

fn shape_of(f: &Filling) -> Partition {
    Partition::new(f.shape().to_vec()).expect("partition shaped filling")
}

impl KostkaPair {
    pub fn new(s: Filling, t: Filling) -> Result<Self> {
        let content = Composition::new(s.content())?;
        if !is_ssyt(&s, &shape_of_checked(&s)?, &content) {
            return Err(Error::InvalidFilling(format!("{s} is not semistandard")));
        }
        if !is_srht(&t, &shape_of_checked(&t)?, &content) {
            return Err(Error::InvalidFilling(format!("{t} is not a special rim-hook tableau of content {content}")));
        }
        Ok(KostkaPair { s, t, content })
    }

    pub fn lambda(&self) -> Partition {
        shape_of(&self.s)
    }

    pub fn mu(&self) -> Partition {
        shape_of(&self.t)
    }

    pub fn sign(&self) -> i32 {
        rht_sign(&self.t)
    }

    fn validate(&self) -> Result<()> {
        let again = KostkaPair::new(self.s.clone(), self.t.clone())?;
        if again.content != self.content {
            return Err(Error::InvalidFilling("content does not match the fillings".into()));
        }
        Ok(())
    }
}

fn shape_of_checked(f: &Filling) -> Result<Partition> {
    Partition::new(f.shape().to_vec())
}

/// `(S_λ, S_λ)`: row `i` of both fillings holds `i`.
pub fn kostka_survivor(lambda: &Partition) -> KostkaPair {
    let s = Filling::row_filled(lambda);
    KostkaPair { s: s.clone(), t: s, content: lambda.as_composition() }
}

fn is_survivor(s: &Filling, t: &Filling) -> bool {
    s == t && *s == Filling::row_filled(s.shape())
}

/// All of `P_{λ,μ}`, by content in canonical order.
pub fn enumerate_kostka_pairs(lambda: &Partition, mu: &Partition) -> Result<Vec<KostkaPair>> {
    check_sizes(lambda.size(), mu.size())?;
    let mut out = Vec::new();
    for beta in compositions(lambda.size()) {
        let Some((t, _)) = srht_find(mu, &beta)? else {
            continue;
        };
        for s in enumerate_ssyt(lambda, &beta)? {
            out.push(KostkaPair { s, t: t.clone(), content: beta.clone() });
        }
    }
    Ok(out)
}

/// The canonical involution on `P_{λ,μ}`.
pub fn kostka_involution(pair: &KostkaPair) -> Result<Involution<KostkaPair>> {
    pair.validate()?;
    let (s, t) = (&pair.s, &pair.t);
    if is_survivor(s, t) {
        return Ok(Involution { outcome: Outcome::FixedPoint, trace: Vec::new() });
    }
    let ell = pair.content.len();
    let mut trace = Vec::new();
    let mut k = ell;
    let (mut cur_s, mut cur_t) = (s.clone(), t.clone());
    loop {
        let (ns, nt) = (s.restrict(k - 1)?, t.restrict(k - 1)?);
        trace.push(TraceStep {
            action: Action::Strip,
            before: json!({"S": cur_s, "T": cur_t}),
            after: json!({"S": ns, "T": nt}),
        });
        if is_survivor(&ns, &nt) {
            break;
        }
        cur_s = ns;
        cur_t = nt;
        k -= 1;
    }
    let lam_bar = shape_of(&s.restrict(k)?);
    let mu_bar = shape_of(&t.restrict(k)?);
    let gamma = shape_of(&s.restrict(k - 1)?);
    if lam_bar == mu_bar {
        return Err(Error::InvalidInput(format!("stripping stopped on equal shapes {lam_bar}")));
    }
    let tilde = kostka_partner(&lam_bar, &mu_bar, &gamma)?;
    let k_tilde = tilde.len() + 1;
    let base = Filling::row_filled(&tilde);
    let mut new_s = base.extend(&lam_bar, k_tilde)?;
    let mut new_t = base.extend(&mu_bar, k_tilde)?;
    trace.push(TraceStep {
        action: Action::LocalPair,
        before: json!({"lambda": lam_bar, "mu": mu_bar, "gamma": gamma, "S": cur_s, "T": cur_t}),
        after: json!({"gamma": tilde, "S": new_s, "T": new_t}),
    });
    for j in k + 1..=ell {
        let label = k_tilde + j - k;
        let before = json!({"S": new_s, "T": new_t});
        new_s = new_s.extend(s.restrict(j)?.shape(), label)?;
        new_t = new_t.extend(t.restrict(j)?.shape(), label)?;
        trace.push(TraceStep { action: Action::Restore, before, after: json!({"S": new_s, "T": new_t}) });
    }
    let out = KostkaPair::new(new_s, new_t)?;
    Ok(Involution { outcome: Outcome::Partner(out), trace })
}
