use std::sync::Arc;

use ybx_core::braided::{build_system, check_cybe, BraidedSystem, SystemKind};
use ybx_core::category::{enrich, reconstruct, z_functor, EnrichingStructure, YdCharacter, ZContext};
use ybx_core::field::FieldSpec;
use ybx_core::group::FiniteGroup;
use ybx_core::gyd::{check_gyd, sigma_gyd};
use ybx_core::hopf::{
    adjoint_braiding, check_yd_character, dual_group_algebra, group_algebra, AdjointKind, FinHopfAlgebra,
    HopfCharacterPair,
};
use ybx_core::map::Map;
use ybx_core::matrix::ExactMatrix;

const Q: FieldSpec = FieldSpec::Rationals;

fn f7_z3() -> (FinHopfAlgebra, HopfCharacterPair) {
    let f7 = FieldSpec::prime(7).unwrap();
    let h = group_algebra(&FiniteGroup::cyclic(3), f7);
    let zeta = vec![f7.from_i64(1), f7.from_i64(2), f7.from_i64(4)];
    let pair = HopfCharacterPair::on_group_algebra(&h, zeta, 1).unwrap();
    (h, pair)
}

fn gyd_route(h: &FinHopfAlgebra, ch: YdCharacter, over_c: bool) -> Map {
    let sys = Arc::new(h.system().unwrap());
    let unit = ch.module(sys.clone()).unwrap();
    let e = if over_c {
        EnrichingStructure::from_c(sys)
    } else {
        EnrichingStructure::from_a(sys)
    }
    .unwrap();
    let m = enrich(&unit, &e).unwrap();
    assert!(check_gyd(&m).passed());
    let pi = Map::Linear(ExactMatrix::identity(h.field(), h.dim()));
    sigma_gyd(&m, &m, &pi).unwrap()
}

#[test]
fn woronowicz_s3_reduces_on_grouplikes() {
    let g = FiniteGroup::symmetric(3);
    let h = group_algebra(&g, Q);
    let sigma = adjoint_braiding(&h, AdjointKind::Woronowicz).unwrap();
    let n = g.size();
    let expected = ExactMatrix::from_fn(Q, n * n, n * n, |r, c| {
        let (a, b) = (c / n, c % n);
        let image = b * n + g.mul(g.inv(b), g.mul(a, b));
        if r == image {
            Q.one()
        } else {
            Q.zero()
        }
    });
    assert_eq!(sigma, expected);
    let prime = adjoint_braiding(&h, AdjointKind::WoronowiczPrime).unwrap();
    assert!(check_cybe(&BraidedSystem::rank1(n, Map::Linear(prime)).unwrap()).passed());
}

#[test]
fn woronowicz_on_dual_algebra() {
    let h = dual_group_algebra(&FiniteGroup::symmetric(3), Q);
    for kind in [AdjointKind::Woronowicz, AdjointKind::WoronowiczPrime] {
        adjoint_braiding(&h, kind).unwrap();
    }
}

#[test]
fn hennings_f7_both_braidings() {
    let (h, pair) = f7_z3();
    let report = check_yd_character(&h, &pair).unwrap();
    assert!(!report.fails("pre-composed") && !report.fails("post-composed"));
    let s = adjoint_braiding(&h, AdjointKind::Hennings(&pair)).unwrap();
    let t = adjoint_braiding(&h, AdjointKind::HenningsPrime(&pair)).unwrap();
    assert_ne!(s, adjoint_braiding(&h, AdjointKind::Woronowicz).unwrap());
    assert_ne!(t, adjoint_braiding(&h, AdjointKind::WoronowiczPrime).unwrap());
}

#[test]
fn gyd_route_reproduces_adjoint_braidings() {
    let h = group_algebra(&FiniteGroup::symmetric(3), Q);
    let unit = YdCharacter {
        epsilon: Map::Linear(h.eps().clone()),
        nu: Map::Linear(h.nu().clone()),
    };
    let s = Map::Linear(adjoint_braiding(&h, AdjointKind::Woronowicz).unwrap());
    let t = Map::Linear(adjoint_braiding(&h, AdjointKind::WoronowiczPrime).unwrap());
    assert_eq!(gyd_route(&h, unit.clone(), true), s);
    assert_eq!(gyd_route(&h, unit, false), t);

    let (h, pair) = f7_z3();
    let ch = YdCharacter {
        epsilon: Map::Linear(pair.zeta().clone()),
        nu: Map::Linear(pair.eta().clone()),
    };
    let s = Map::Linear(adjoint_braiding(&h, AdjointKind::Hennings(&pair)).unwrap());
    let t = Map::Linear(adjoint_braiding(&h, AdjointKind::HenningsPrime(&pair)).unwrap());
    assert_eq!(gyd_route(&h, ch.clone(), true), s);
    assert_eq!(gyd_route(&h, ch, false), t);
}

#[test]
fn z_functor_reconstructs_yd_modules() {
    let h = group_algebra(&FiniteGroup::cyclic(3), Q);
    let sys = Arc::new(build_system(SystemKind::Hopf(&h)).unwrap());
    for e in [EnrichingStructure::from_a(sys.clone()), EnrichingStructure::from_c(sys.clone())] {
        let unit = YdCharacter {
            epsilon: Map::Linear(h.eps().clone()),
            nu: Map::Linear(h.nu().clone()),
        }
        .module(sys.clone())
        .unwrap();
        let m = enrich(&unit, &e.unwrap()).unwrap();
        let z = z_functor(ZContext::Hopf(&h), &m).unwrap();
        let (rho, delta) = reconstruct(ZContext::Hopf(&h), &z).unwrap();
        assert_eq!(&rho, m.rho());
        assert_eq!(&delta, m.delta());
    }
}
