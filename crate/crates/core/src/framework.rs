//! Recursive construction of the matrix families `A_n`, `B_n` from a local
//! system, and the local-identity checks that certify `A_n B_n = I`.
//!
//! A local system supplies, for every shape `λ ⊢ n` and step `L`, the finite
//! sets `S(λ,L)` and `T(λ,L)` of shapes of size `n - L` together with weights.
//! The matrices then satisfy
//!
//! ```text
//! A(λ,β) = Σ_{γ ∈ S(λ,L(β))} wt_A(λ,γ) · A(γ,β*)
//! B(β,μ) = Σ_{δ ∈ T(μ,L(β))} wt_B(μ,δ) · B(β*,δ)
//! ```
//!
//! with `A_0 = B_0 = [1]`, and `A_n B_n = I` for every `n` exactly when
//! `Σ_L Σ_{γ ∈ S(λ,L) ∩ T(μ,L)} wt_A(λ,γ) wt_B(μ,γ) = χ(λ = μ)`.

use std::collections::{HashMap, HashSet};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{check_sizes, Error, Result};
use crate::matrix::IndexedMatrix;
use crate::par::{self, Exec};
use crate::rational::Rational;
use crate::shapes::{compositions, partitions, Composition, Partition, ShapeKey};

pub trait LocalSystem: Send + Sync {
    type Shape: ShapeKey;

    fn name(&self) -> &'static str;

    /// The row index set `R(n)`, in display order.
    fn shapes(&self, n: usize) -> Vec<Self::Shape>;

    fn succ_a(&self, lambda: &Self::Shape, l: usize) -> Vec<Self::Shape>;

    fn succ_b(&self, mu: &Self::Shape, l: usize) -> Vec<Self::Shape>;

    fn weight_a(&self, lambda: &Self::Shape, gamma: &Self::Shape) -> Rational;

    fn weight_b(&self, mu: &Self::Shape, delta: &Self::Shape) -> Rational;
}

pub type MatrixA<S> = IndexedMatrix<S, Composition>;
pub type MatrixB<S> = IndexedMatrix<Composition, S>;

type Steps<S> = Vec<Vec<(S, Rational)>>;

/// Memoized `A_0, …, A_m` and `B_0, …, B_m` for one system.
pub struct MatrixTower<'a, T: LocalSystem> {
    sys: &'a T,
    exec: Exec,
    a: Vec<MatrixA<T::Shape>>,
    b: Vec<MatrixB<T::Shape>>,
}

impl<'a, T: LocalSystem> MatrixTower<'a, T> {
    pub fn new(sys: &'a T, exec: Exec) -> Self {
        MatrixTower { sys, exec, a: Vec::new(), b: Vec::new() }
    }

    fn base<K: ShapeKey, J: ShapeKey>(rows: Vec<K>, cols: Vec<J>) -> IndexedMatrix<K, J> {
        IndexedMatrix::new(rows, cols, vec![vec![Rational::one()]]).expect("1 x 1 base")
    }

    fn steps(&self, shape: &T::Shape, n: usize, b_side: bool) -> Steps<T::Shape> {
        (0..=n)
            .map(|l| {
                if l == 0 {
                    return Vec::new();
                }
                let succ = if b_side { self.sys.succ_b(shape, l) } else { self.sys.succ_a(shape, l) };
                succ.into_iter()
                    .map(|g| {
                        let w = if b_side { self.sys.weight_b(shape, &g) } else { self.sys.weight_a(shape, &g) };
                        (g, w)
                    })
                    .filter(|(_, w)| !w.is_zero())
                    .collect()
            })
            .collect()
    }

    pub fn a(&mut self, n: usize) -> &MatrixA<T::Shape> {
        while self.a.len() <= n {
            let m = self.a.len();
            let next = if m == 0 { Self::base(self.sys.shapes(0), compositions(0)) } else { self.next_a(m) };
            self.a.push(next);
        }
        &self.a[n]
    }

    pub fn b(&mut self, n: usize) -> &MatrixB<T::Shape> {
        while self.b.len() <= n {
            let m = self.b.len();
            let next = if m == 0 { Self::base(compositions(0), self.sys.shapes(0)) } else { self.next_b(m) };
            self.b.push(next);
        }
        &self.b[n]
    }

    fn next_a(&self, n: usize) -> MatrixA<T::Shape> {
        let rows = self.sys.shapes(n);
        let cols = compositions(n);
        let lower = &self.a;
        let truncated: Vec<(Composition, usize)> = cols.iter().map(|c| c.truncate().expect("n >= 1")).collect();
        let grid = par::map(self.exec, &rows, |lambda| {
            let steps = self.steps(lambda, n, false);
            truncated
                .iter()
                .map(|(star, l)| {
                    let prev = &lower[n - l];
                    steps[*l].iter().filter_map(|(g, w)| prev.get(g, star).map(|v| w * v)).sum::<Rational>()
                })
                .collect::<Vec<_>>()
        });
        IndexedMatrix::new(rows, cols, grid).expect("distinct keys")
    }

    fn next_b(&self, n: usize) -> MatrixB<T::Shape> {
        let rows = compositions(n);
        let cols = self.sys.shapes(n);
        let lower = &self.b;
        let steps: Vec<Steps<T::Shape>> = par::map(self.exec, &cols, |mu| self.steps(mu, n, true));
        let grid = par::map(self.exec, &rows, |beta| {
            let (star, l) = beta.truncate().expect("n >= 1");
            let prev = &lower[n - l];
            steps
                .iter()
                .map(|st| st[l].iter().filter_map(|(d, w)| prev.get(&star, d).map(|v| w * v)).sum::<Rational>())
                .collect::<Vec<_>>()
        });
        IndexedMatrix::new(rows, cols, grid).expect("distinct keys")
    }
}

pub fn build_a<T: LocalSystem>(sys: &T, n: usize) -> MatrixA<T::Shape> {
    build_a_with(sys, n, Exec::default())
}

pub fn build_a_with<T: LocalSystem>(sys: &T, n: usize, exec: Exec) -> MatrixA<T::Shape> {
    MatrixTower::new(sys, exec).a(n).clone()
}

pub fn build_b<T: LocalSystem>(sys: &T, n: usize) -> MatrixB<T::Shape> {
    build_b_with(sys, n, Exec::default())
}

pub fn build_b_with<T: LocalSystem>(sys: &T, n: usize, exec: Exec) -> MatrixB<T::Shape> {
    MatrixTower::new(sys, exec).b(n).clone()
}

/// One summand of the local identity: `γ ∈ S(λ,L) ∩ T(μ,L)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LocalTerm<S> {
    pub step: usize,
    pub gamma: S,
    #[serde(serialize_with = "crate::rational::serialize")]
    pub weight_a: Rational,
    #[serde(serialize_with = "crate::rational::serialize")]
    pub weight_b: Rational,
}

impl<S> LocalTerm<S> {
    pub fn value(&self) -> Rational {
        &self.weight_a * &self.weight_b
    }
}

/// The set `G(λ,μ)` with its weights, ordered by step and then by shape.
pub fn local_terms<T: LocalSystem>(sys: &T, lambda: &T::Shape, mu: &T::Shape) -> Result<Vec<LocalTerm<T::Shape>>> {
    check_sizes(lambda.size(), mu.size())?;
    let n = lambda.size();
    if n == 0 {
        return Err(Error::InvalidInput("local identity needs n > 0".into()));
    }
    let mut terms = Vec::new();
    for l in 1..=n {
        let t: HashSet<T::Shape> = sys.succ_b(mu, l).into_iter().collect();
        let mut common: Vec<T::Shape> = sys.succ_a(lambda, l).into_iter().filter(|g| t.contains(g)).collect();
        common.sort();
        common.dedup();
        terms.extend(common.into_iter().map(|gamma| LocalTerm {
            step: l,
            weight_a: sys.weight_a(lambda, &gamma),
            weight_b: sys.weight_b(mu, &gamma),
            gamma,
        }));
    }
    Ok(terms)
}

pub fn local_lhs<T: LocalSystem>(sys: &T, lambda: &T::Shape, mu: &T::Shape) -> Result<Rational> {
    Ok(local_terms(sys, lambda, mu)?.iter().map(LocalTerm::value).sum())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LocalFailure<S> {
    pub lambda: S,
    pub mu: S,
    #[serde(serialize_with = "crate::rational::serialize")]
    pub value: Rational,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LocalReport<S> {
    pub system: &'static str,
    pub n: usize,
    pub pairs: usize,
    pub failures: Vec<LocalFailure<S>>,
}

impl<S> LocalReport<S> {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn verify_local<T: LocalSystem>(sys: &T, n: usize) -> LocalReport<T::Shape> {
    verify_local_with(sys, n, Exec::default())
}

/// Evaluates every local identity at size `n`, collecting all violations.
/// There are none to check at `n = 0`.
pub fn verify_local_with<T: LocalSystem>(sys: &T, n: usize, exec: Exec) -> LocalReport<T::Shape> {
    let shapes = if n == 0 { Vec::new() } else { sys.shapes(n) };
    let pairs: Vec<(T::Shape, T::Shape)> =
        shapes.iter().flat_map(|l| shapes.iter().map(move |m| (l.clone(), m.clone()))).collect();
    let failures = par::flat_map(exec, &pairs, |(lambda, mu)| {
        let expected = if lambda == mu { Rational::one() } else { Rational::zero() };
        let value = local_lhs(sys, lambda, mu).unwrap_or_else(|_| Rational::zero());
        if value == expected {
            Vec::new()
        } else {
            vec![LocalFailure { lambda: lambda.clone(), mu: mu.clone(), value }]
        }
    });
    LocalReport { system: sys.name(), n, pairs: pairs.len(), failures }
}

pub fn verify_inversion<T: LocalSystem>(sys: &T, n: usize) -> bool {
    verify_inversion_with(sys, n, Exec::default())
}

/// Exact check of `A_n B_n = I_{R(n)}`.
pub fn verify_inversion_with<T: LocalSystem>(sys: &T, n: usize, exec: Exec) -> bool {
    let mut tower = MatrixTower::new(sys, exec);
    let a = tower.a(n).clone();
    let b = tower.b(n);
    a.mul(b, exec).map(|p| p.is_identity()).unwrap_or(false)
}

/// True iff every row depends on a column `α` only through `sort(α)`.
pub fn check_sorting_condition<R: ShapeKey>(a: &IndexedMatrix<R, Composition>) -> bool {
    let mut first: HashMap<Partition, usize> = HashMap::new();
    for (j, c) in a.cols().iter().enumerate() {
        let rep = *first.entry(c.sorted()).or_insert(j);
        if rep != j && (0..a.rows().len()).any(|i| a.at(i, j) != a.at(i, rep)) {
            return false;
        }
    }
    true
}

fn sorting_violation<R: ShapeKey>(a: &IndexedMatrix<R, Composition>) -> Option<Error> {
    let mut first: HashMap<Partition, usize> = HashMap::new();
    for (j, c) in a.cols().iter().enumerate() {
        let rep = *first.entry(c.sorted()).or_insert(j);
        if let Some(i) = (0..a.rows().len()).find(|&i| rep != j && a.at(i, j) != a.at(i, rep)) {
            return Some(Error::SortingCondition {
                row: a.rows()[i].to_string(),
                first: a.cols()[rep].to_string(),
                second: c.to_string(),
            });
        }
    }
    None
}

/// `A′_n`: the restriction of `A_n` to partition-indexed columns.
pub fn square_restrict_a<R: ShapeKey>(a: &IndexedMatrix<R, Composition>) -> Result<IndexedMatrix<R, Partition>> {
    if let Some(err) = sorting_violation(a) {
        return Err(err);
    }
    let keep: Vec<usize> = (0..a.cols().len()).filter(|&j| a.cols()[j].is_partition()).collect();
    let cols: Vec<Partition> = keep.iter().map(|&j| a.cols()[j].sorted()).collect();
    let grid = (0..a.rows().len()).map(|i| keep.iter().map(|&j| a.at(i, j).clone()).collect()).collect();
    IndexedMatrix::new(a.rows().to_vec(), cols, grid)
}

/// `B′_n(ν,μ) = Σ_{sort β = ν} B_n(β,μ)`.
pub fn square_fold_b<C: ShapeKey>(b: &IndexedMatrix<Composition, C>) -> IndexedMatrix<Partition, C> {
    let n = b.rows().first().map_or(0, |r| r.size());
    let rows = partitions(n);
    let index: HashMap<&Partition, usize> = rows.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let width = b.cols().len();
    let mut grid = vec![vec![Rational::zero(); width]; rows.len()];
    for (i, beta) in b.rows().iter().enumerate() {
        let target = index[&beta.sorted()];
        for (slot, v) in grid[target].iter_mut().zip(b.row_entries(i)) {
            *slot += v;
        }
    }
    IndexedMatrix::new(rows, b.cols().to_vec(), grid).expect("distinct keys")
}
