use std::sync::Arc;

use proptest::prelude::*;
use ybx_core::braided::{build_system, ShelfVariant, SystemKind};
use ybx_core::crossed::{adjoint, from_group, ShelfCrossedModule};
use ybx_core::field::FieldSpec;
use ybx_core::group::{FiniteGroup, GroupCrossedModule};
use ybx_core::gyd::{
    braid_operator, check_gyd, check_pi_condition, check_ybe_family, gyd_braiding, sigma_gyd, BantayRep,
    ConnectingData, Exponents, GradedActionRep, GydModule, RepresentationBundle, ShelfRep,
};
use ybx_core::leibniz::{check_gyd_relations, LeibnizAlgebra, LeibnizCrossedModule, LeibnizRep};
use ybx_core::map::Map;
use ybx_core::matrix::ExactMatrix;
use ybx_core::shelf::{sigma_sd, standard_shelf, StandardShelf};

const Q: FieldSpec = FieldSpec::Rationals;

fn racks() -> Vec<ShelfCrossedModule> {
    vec![
        adjoint(&standard_shelf(&StandardShelf::Dihedral(3)).unwrap()),
        adjoint(&standard_shelf(&StandardShelf::Dihedral(4)).unwrap()),
        adjoint(&standard_shelf(&StandardShelf::CyclicMod(3)).unwrap()),
        adjoint(&standard_shelf(&StandardShelf::Projection(2)).unwrap()),
        from_group(&GroupCrossedModule::identity(&FiniteGroup::cyclic(3))).unwrap(),
    ]
}

/// `R × X` with `(r, x) ◂ s = (r · s, x)`, graded by `r` and twisted by a
/// permutation of `X`.
fn product_rep(x: &ShelfCrossedModule, tau: &[usize]) -> ShelfRep {
    let (n, k, ns) = (x.r().size(), tau.len(), x.s().size());
    ShelfRep {
        x: x.clone(),
        action: (0..n * k).map(|m| (0..ns).map(|s| x.act(m / k, s) * k + m % k).collect()).collect(),
        grading: (0..n * k).map(|m| m / k).collect(),
        twist: Some((0..n * k).map(|m| (m / k) * k + tau[m % k]).collect()),
    }
}

fn shelf_bundle(x: &ShelfCrossedModule, reps: Vec<ShelfRep>) -> RepresentationBundle {
    let sys = Arc::new(build_system(SystemKind::ShelfCrmod(x, ShelfVariant::Coass)).unwrap());
    let members = reps
        .into_iter()
        .enumerate()
        .map(|(i, r)| (format!("m{}", i + 1), GradedActionRep::Shelf(r).as_gyd(sys.clone()).unwrap()))
        .collect();
    let connecting = ConnectingData {
        pi: Map::Set(x.pi_map().clone()),
        exponents: Exponents::new(0, 1, 1, 1),
    };
    RepresentationBundle::new(sys, members, connecting).unwrap()
}

fn leibniz_modules(x: &LeibnizCrossedModule) -> Vec<GydModule> {
    let sys = Arc::new(x.system().unwrap());
    [LeibnizRep::on_k(x), LeibnizRep::on_k_plus(x)]
        .iter()
        .map(|r| r.to_gyd(x, sys.clone()).unwrap())
        .collect()
}

#[test]
fn bantay_z2_with_sign_action() {
    let z2 = FiniteGroup::cyclic(2);
    let x = GroupCrossedModule::identity(&z2);
    let a1 = ExactMatrix::from_ints(Q, 2, 2, &[1, 0, 0, -1]).unwrap();
    let rep = GradedActionRep::Group(BantayRep {
        x: x.clone(),
        field: Q,
        grades: vec![0, 1],
        action: vec![ExactMatrix::identity(Q, 2), a1],
    });
    let sys = Arc::new(rep.system().unwrap());
    let m = rep.as_gyd(sys).unwrap();
    assert!(check_gyd(&m).passed());
    let sigma = sigma_gyd(&m, &m, &rep.connecting_map().unwrap()).unwrap();
    // e_a ⊗ e_b ↦ e_b ⊗ A_{gr(b)} e_a
    let expected = ExactMatrix::from_ints(
        Q,
        4,
        4,
        &[
            1, 0, 0, 0, //
            0, 0, 1, 0, //
            0, 1, 0, 0, //
            0, 0, 0, -1,
        ],
    )
    .unwrap();
    assert_eq!(sigma, Map::Linear(expected));
}

#[test]
fn twisted_shelf_rep_braiding_form() {
    for x in racks() {
        let rep = product_rep(&x, &[1, 0]);
        let bundle = shelf_bundle(&x, vec![rep.clone()]);
        let sigma = gyd_braiding(&bundle, 0, 0).unwrap();
        let t = sigma.as_set().unwrap();
        let d = rep.grading.len();
        let f = rep.twist.as_ref().unwrap();
        for m in 0..d {
            for (n, (&fn_, &gr)) in f.iter().zip(&rep.grading).enumerate() {
                let expected = fn_ * d + rep.action[m][x.pi(gr)];
                assert_eq!(t.apply(m * d + n), expected);
            }
        }
        assert!(check_ybe_family(&bundle).unwrap().passed());
    }
}

#[test]
fn adjoint_rep_gives_self_distributive_braiding() {
    for x in racks().into_iter().take(4) {
        let bundle = shelf_bundle(&x, vec![ShelfRep::adjoint(&x)]);
        assert_eq!(gyd_braiding(&bundle, 0, 0).unwrap(), Map::Set(sigma_sd(x.r().magma())));
    }
}

#[test]
fn leibniz_braiding_forms() {
    let x = LeibnizCrossedModule::identity(&LeibnizAlgebra::l2(Q));
    let ms = leibniz_modules(&x);
    let pi = Map::Linear(x.pi_plus());
    let flip = Map::Linear(ExactMatrix::flip(Q, 2, 2));
    assert_eq!(sigma_gyd(&ms[0], &ms[0], &pi).unwrap(), flip);
    assert_eq!(sigma_gyd(&ms[1], &ms[1], &pi).unwrap(), Map::Linear(x.k_plus().sigma_lei()));

    // m ⊗ n ↦ n ⊗ m + n₍₀₎ ⊗ m ∗ π(n₍₁₎) with δ₀(k) = 1 ⊗ k on 𝔨⁺
    let rep = LeibnizRep::on_k_plus(&x);
    let (d, dk) = (rep.dim(), x.k().dim());
    let mut expected = ExactMatrix::flip(Q, d, d);
    for m in 0..d {
        for n in 0..d {
            for (r, s) in rep.delta0().column_sparse(n) {
                let (n0, k) = (r / dk, r % dk);
                let g = (0..x.g().dim()).find(|&g| !x.pi().get(g, k).is_zero());
                if let Some(g) = g {
                    let coef = Q.mul(&s, x.pi().get(g, k));
                    for (row, a) in rep.action_matrices()[g].column_sparse(m) {
                        expected.accumulate(n0 * d + row, m * d + n, &Q.mul(&coef, &a));
                    }
                }
            }
        }
    }
    assert_eq!(sigma_gyd(&ms[1], &ms[1], &pi).unwrap(), Map::Linear(expected));
}

#[test]
fn leibniz_relations_hold_on_built_in_reps() {
    for l in [LeibnizAlgebra::l2(Q), LeibnizAlgebra::abelian(Q, 2), LeibnizAlgebra::sl2(Q)] {
        let x = LeibnizCrossedModule::identity(&l);
        for m in leibniz_modules(&x) {
            assert!(check_gyd(&m).passed());
            assert!(check_gyd_relations(&x, &m).unwrap().passed());
        }
        let sys = x.system().unwrap();
        let conn = ConnectingData {
            pi: Map::Linear(x.pi_plus()),
            exponents: Exponents::new(0, 1, 1, 1),
        };
        assert!(check_pi_condition(&sys, &conn).unwrap().passed());
    }
}

fn bantay_product(g: &FiniteGroup) -> BantayRep {
    let n = g.size();
    let action = (0..n)
        .map(|a| {
            ExactMatrix::from_fn(Q, n * n, n * n, |r, c| {
                let (m, y) = (c / n, c % n);
                if r == g.conj(m, a) * n + g.mul(y, a) {
                    Q.one()
                } else {
                    Q.zero()
                }
            })
        })
        .collect();
    BantayRep {
        x: GroupCrossedModule::identity(g),
        field: Q,
        grades: (0..n * n).map(|c| c / n).collect(),
        action,
    }
}

fn bantay_conj(g: &FiniteGroup) -> BantayRep {
    let n = g.size();
    BantayRep {
        x: GroupCrossedModule::identity(g),
        field: Q,
        grades: (0..n).collect(),
        action: (0..n)
            .map(|a| ExactMatrix::from_fn(Q, n, n, |r, c| if r == g.conj(c, a) { Q.one() } else { Q.zero() }))
            .collect(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn shelf_bundles_satisfy_ybe(idx in 0usize..5, picks in proptest::collection::vec(0usize..3, 2..4)) {
        let x = &racks()[idx];
        let reps = picks
            .iter()
            .map(|p| match p {
                0 => ShelfRep::adjoint(x),
                1 => ShelfRep::doubled_with_swap(x),
                _ => product_rep(x, &[2, 0, 1]),
            })
            .collect();
        let bundle = shelf_bundle(x, reps);
        let report = check_ybe_family(&bundle).unwrap();
        prop_assert!(report.passed(), "{}", report);
    }

    #[test]
    fn bantay_bundles_satisfy_ybe(idx in 0usize..3, picks in proptest::collection::vec(any::<bool>(), 2..4)) {
        let z2 = FiniteGroup::cyclic(2);
        let g = [z2.clone(), FiniteGroup::cyclic(3), FiniteGroup::direct_product(&z2, &z2)][idx].clone();
        let x = GroupCrossedModule::identity(&g);
        let sys = Arc::new(build_system(SystemKind::GroupCrmod(&x, Q)).unwrap());
        let members = picks
            .iter()
            .enumerate()
            .map(|(i, p)| {
                let rep = if *p { bantay_product(&g) } else { bantay_conj(&g) };
                (format!("m{i}"), GradedActionRep::Group(rep).as_gyd(sys.clone()).unwrap())
            })
            .collect();
        let pi = Map::Linear(ExactMatrix::identity(Q, g.size()));
        let bundle = RepresentationBundle::new(sys, members, ConnectingData { pi, exponents: Exponents::new(1, 1, 1, 1) }).unwrap();
        prop_assert!(check_ybe_family(&bundle).unwrap().passed());
    }

    #[test]
    fn braid_relations_for_shelf_braidings(idx in 0usize..5) {
        let x = &racks()[idx];
        let n = x.r().size();
        let sigma = Map::Set(sigma_sd(x.r().magma()));
        prop_assert_eq!(
            braid_operator(&sigma, n, 3, &[1, 2, 1]).unwrap(),
            braid_operator(&sigma, n, 3, &[2, 1, 2]).unwrap()
        );
        prop_assert_eq!(
            braid_operator(&sigma, n, 4, &[1, 3]).unwrap(),
            braid_operator(&sigma, n, 4, &[3, 1]).unwrap()
        );
        prop_assert!(braid_operator(&sigma, n, 3, &[2, -2, 1, -1]).unwrap().is_identity());
    }
}

#[test]
fn pi_condition_ledger() {
    let x = adjoint(&standard_shelf(&StandardShelf::Dihedral(3)).unwrap());
    let sys = build_system(SystemKind::ShelfCrmod(&x, ShelfVariant::Coass)).unwrap();
    let pi = Map::Set(x.pi_map().clone());
    let at = |e: Exponents| check_pi_condition(&sys, &ConnectingData { pi: pi.clone(), exponents: e }).unwrap();
    assert!(at(Exponents::new(0, 1, 1, 1)).passed());
    let fail = at(Exponents::new(1, 1, 1, 1));
    assert!(!fail.passed());
    assert!(fail.first_failure().unwrap().witness.is_some());

    let g = FiniteGroup::symmetric(3);
    let gx = GroupCrossedModule::identity(&g);
    let sys = build_system(SystemKind::GroupCrmod(&gx, Q)).unwrap();
    let pi = Map::Linear(ExactMatrix::identity(Q, 6));
    let conn = ConnectingData { pi, exponents: Exponents::new(1, 1, 1, 1) };
    assert!(check_pi_condition(&sys, &conn).unwrap().passed());
}
