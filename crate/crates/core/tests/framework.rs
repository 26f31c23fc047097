mod common;

use combinv::brick::obt_system;
use combinv::framework::{
    build_a, build_a_with, build_b, build_b_with, local_lhs, verify_inversion, verify_local, LocalSystem, MatrixTower,
};
use combinv::kostka::kostka_system;
use combinv::rational::{int, Rational};
use combinv::refine::{refine_system, weighted_system};
use combinv::rimhook::rimhook_system;
use combinv::shapes::Partition;
use combinv::{Exec, ShapeKey};

use common::part;

/// Wraps a system and doubles `wt_A` on shapes of one size.
struct Perturbed<T> {
    inner: T,
    size: usize,
}

impl<T: LocalSystem> LocalSystem for Perturbed<T> {
    type Shape = T::Shape;

    fn name(&self) -> &'static str {
        "perturbed"
    }
    fn shapes(&self, n: usize) -> Vec<T::Shape> {
        self.inner.shapes(n)
    }
    fn succ_a(&self, lambda: &T::Shape, l: usize) -> Vec<T::Shape> {
        self.inner.succ_a(lambda, l)
    }
    fn succ_b(&self, mu: &T::Shape, l: usize) -> Vec<T::Shape> {
        self.inner.succ_b(mu, l)
    }
    fn weight_a(&self, lambda: &T::Shape, gamma: &T::Shape) -> Rational {
        let w = self.inner.weight_a(lambda, gamma);
        if lambda.size() == self.size {
            w * int(2)
        } else {
            w
        }
    }
    fn weight_b(&self, mu: &T::Shape, delta: &T::Shape) -> Rational {
        self.inner.weight_b(mu, delta)
    }
}

fn equivalence<T: LocalSystem>(sys: &T, max: usize) {
    let mut local_ok = true;
    let mut inv_ok = verify_inversion(sys, 0);
    for n in 1..=max {
        local_ok &= verify_local(sys, n).passed();
        inv_ok &= verify_inversion(sys, n);
        assert_eq!(local_ok, inv_ok, "{} at n = {n}", sys.name());
    }
}

#[test]
fn local_identity_iff_inversion() {
    equivalence(&kostka_system(), 7);
    equivalence(&rimhook_system(), 7);
    equivalence(&refine_system(), 6);
    equivalence(&weighted_system(), 6);
    equivalence(&obt_system(), 7);
    let broken = Perturbed { inner: kostka_system(), size: 3 };
    equivalence(&broken, 5);
    assert!(verify_inversion(&broken, 2));
    assert!(!verify_inversion(&broken, 3));
    let report = verify_local(&broken, 3);
    assert!(!report.passed());
    assert!(!report.failures.is_empty());
}

#[test]
fn base_case() {
    let a = build_a(&rimhook_system(), 0);
    assert_eq!((a.rows().len(), a.cols().len()), (1, 1));
    assert_eq!(a.at(0, 0), &int(1));
    assert_eq!(build_b(&obt_system(), 0).at(0, 0), &int(1));
}

#[test]
fn modes_and_memo_agree() {
    for n in 0..=6 {
        assert_eq!(
            build_a_with(&rimhook_system(), n, Exec::Sequential),
            build_a_with(&rimhook_system(), n, Exec::Parallel)
        );
        assert_eq!(build_b_with(&obt_system(), n, Exec::Sequential), build_b_with(&obt_system(), n, Exec::Parallel));
    }
    let sys = kostka_system();
    let mut tower = MatrixTower::new(&sys, Exec::Sequential);
    let high = tower.a(6).clone();
    let low = tower.a(3).clone();
    assert_eq!(high, build_a(&sys, 6));
    assert_eq!(low, build_a(&sys, 3));
    assert_eq!(tower.b(5), &build_b(&sys, 5));
}

#[test]
fn local_lhs_values() {
    let lambda = part(&[9, 8, 6, 6, 5, 4, 4, 2]);
    let mu = part(&[9, 9, 9, 7, 5, 3, 1, 1]);
    assert_eq!(local_lhs(&rimhook_system(), &lambda, &mu).unwrap(), int(0));
    assert_eq!(local_lhs(&rimhook_system(), &lambda, &lambda).unwrap(), int(1));
    assert!(local_lhs(&kostka_system(), &part(&[2]), &Partition::new(vec![1]).unwrap()).is_err());
}
