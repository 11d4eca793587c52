use std::sync::Arc;

use ybx_core::braided::{build_system, ShelfVariant, SystemKind};
use ybx_core::category::{
    associator, check_enriching, check_hexagons, check_naturality, check_pentagon, check_triangle, enrich,
    leibniz_unit_character, reconstruct, tensor_enriching, tensor_reps, unit_maps, z_functor, Direction,
    EnrichingStructure, Unitors, ZContext,
};
use ybx_core::crossed::{adjoint, aut_augmented, from_group, ShelfCrossedModule};
use ybx_core::error::Error;
use ybx_core::field::FieldSpec;
use ybx_core::group::{FiniteGroup, GroupCrossedModule};
use ybx_core::gyd::{check_gyd, BantayRep, GradedActionRep, GydModule, ShelfRep};
use ybx_core::leibniz::{LeibnizAlgebra, LeibnizCrossedModule, LeibnizRep};
use ybx_core::map::Map;
use ybx_core::matrix::ExactMatrix;
use ybx_core::shelf::{standard_shelf, Rack, StandardShelf};

const Q: FieldSpec = FieldSpec::Rationals;

fn shelf(kind: StandardShelf) -> ybx_core::shelf::Shelf {
    standard_shelf(&kind).unwrap()
}

fn rack_crossed_modules() -> Vec<(&'static str, ShelfCrossedModule)> {
    let s3 = FiniteGroup::symmetric(3);
    let d3 = Rack::try_from(shelf(StandardShelf::Dihedral(3))).unwrap();
    vec![
        ("D3", adjoint(&shelf(StandardShelf::Dihedral(3)))),
        ("D4", adjoint(&shelf(StandardShelf::Dihedral(4)))),
        ("cyclic3", adjoint(&shelf(StandardShelf::CyclicMod(3)))),
        ("conj S3", adjoint(&shelf(StandardShelf::Conjugation(s3.clone())))),
        ("group S3", from_group(&GroupCrossedModule::identity(&s3)).unwrap()),
        ("aut D3", aut_augmented(&d3, 8).unwrap().0),
    ]
}

fn shelf_module(rep: ShelfRep) -> GydModule {
    let rep = GradedActionRep::Shelf(rep);
    rep.as_gyd(Arc::new(rep.system().unwrap())).unwrap()
}

fn perm_matrix(n: usize, f: impl Fn(usize) -> usize) -> ExactMatrix {
    ExactMatrix::from_fn(Q, n, n, |r, c| if r == f(c) { Q.one() } else { Q.zero() })
}

/// Objects of the Bantay category of `(S3, S3, Id, conj)`: the conjugation
/// module, its sign twist and the trivial one-dimensional module.
fn bantay_objects() -> (GroupCrossedModule, Vec<GydModule>) {
    let g = FiniteGroup::symmetric(3);
    let x = GroupCrossedModule::identity(&g);
    let sign = |a: usize| {
        let fixed = (0..g.size()).filter(|&b| g.mul(a, b) == g.mul(b, a)).count();
        if a == g.identity() || fixed == 3 {
            1
        } else {
            -1
        }
    };
    let conj: Vec<ExactMatrix> = (0..g.size()).map(|a| perm_matrix(6, |m| g.conj(m, a))).collect();
    let twisted: Vec<ExactMatrix> = conj.iter().enumerate().map(|(a, m)| m.scale(&Q.from_i64(sign(a)))).collect();
    let reps = vec![
        BantayRep { x: x.clone(), field: Q, grades: (0..6).collect(), action: conj },
        BantayRep { x: x.clone(), field: Q, grades: (0..6).collect(), action: twisted },
        BantayRep {
            x: x.clone(),
            field: Q,
            grades: vec![g.identity()],
            action: vec![ExactMatrix::identity(Q, 1); 6],
        },
    ];
    let sys = Arc::new(GradedActionRep::Group(reps[0].clone()).system().unwrap());
    let objects = reps
        .into_iter()
        .map(|r| GradedActionRep::Group(r).as_gyd(sys.clone()).unwrap())
        .collect();
    (x, objects)
}

#[test]
fn tilde_pentagon_on_rack_crossed_modules() {
    for (name, x) in rack_crossed_modules() {
        let m = shelf_module(ShelfRep::adjoint(&x));
        let report = check_pentagon(ZContext::ShelfTilde(&x), std::slice::from_ref(&m)).unwrap();
        assert!(report.passed(), "{name}: {report}");
        let f = associator(ZContext::ShelfTilde(&x), &m, &m, &m, Direction::Forward).unwrap();
        let g = associator(ZContext::ShelfTilde(&x), &m, &m, &m, Direction::Inverse).unwrap();
        assert!(f.compose(&g).unwrap().is_identity(), "{name}");
    }
}

#[test]
fn tilde_associator_of_non_rack_is_not_invertible() {
    let x = adjoint(&shelf(StandardShelf::ConstantMap(vec![0, 0, 1])));
    assert!(!x.is_rack_module());
    let m = shelf_module(ShelfRep::adjoint(&x));
    let inv = associator(ZContext::ShelfTilde(&x), &m, &m, &m, Direction::Inverse);
    assert!(matches!(inv, Err(Error::NotInvertible(_))));
}

#[test]
fn peripheral_pentagon_and_triangle() {
    let x = adjoint(&shelf(StandardShelf::Projection(3)));
    let m = shelf_module(ShelfRep::adjoint(&x));
    assert!(check_pentagon(ZContext::Shelf(&x), std::slice::from_ref(&m)).unwrap().passed());
    for ctx in [ZContext::Shelf(&x), ZContext::ShelfTilde(&x)] {
        let unit = ybx_core::category::shelf_character(&x, 1).unwrap().module(m.system().clone()).unwrap();
        let (left, right) = unit_maps(&x, 1, &m).unwrap();
        let unitors = Unitors { unit, left: vec![left], right: vec![right] };
        assert!(check_triangle(ctx, std::slice::from_ref(&m), Some(&unitors)).unwrap().passed());
    }
}

#[test]
fn leibniz_associator_is_invertible_and_coherent() {
    let x = LeibnizCrossedModule::identity(&LeibnizAlgebra::l2(Q));
    let sys = Arc::new(x.system().unwrap());
    let objects: Vec<GydModule> = [LeibnizRep::on_k(&x), LeibnizRep::on_k_plus(&x)]
        .iter()
        .map(|r| r.to_gyd(&x, sys.clone()).unwrap())
        .collect();
    let ctx = ZContext::Leibniz(&x);
    for a in &objects {
        for b in &objects {
            for c in &objects {
                let f = associator(ctx, a, b, c, Direction::Forward).unwrap();
                let g = associator(ctx, a, b, c, Direction::Inverse).unwrap();
                assert!(f.compose(&g).unwrap().is_identity());
                assert!(g.compose(&f).unwrap().is_identity());
            }
        }
    }
    assert!(check_pentagon(ctx, &objects).unwrap().passed());

    let unit = leibniz_unit_character(&x).module(sys.clone()).unwrap();
    assert!(check_gyd(&unit).passed());
    for m in &objects {
        let mi = tensor_reps(ctx, m, &unit).unwrap();
        assert_eq!(mi.rho(), m.rho());
        assert_eq!(mi.delta(), m.delta());
        for n in &objects {
            assert!(associator(ctx, m, n, &unit, Direction::Forward).unwrap().is_identity());
        }
    }
}

#[test]
fn bantay_category_is_braided() {
    let (x, objects) = bantay_objects();
    let ctx = ZContext::Group(&x, Q);
    let pi = Map::Linear(ExactMatrix::identity(Q, 6));
    for a in &objects {
        for b in &objects {
            assert!(check_gyd(&tensor_reps(ctx, a, b).unwrap()).passed());
        }
    }
    let report = check_hexagons(ctx, &objects, &pi).unwrap();
    assert!(report.passed(), "{report}");

    let g = FiniteGroup::symmetric(3);
    let e = g.identity();
    let proj = ExactMatrix::from_fn(Q, 1, 6, |_, c| if c == e { Q.one() } else { Q.zero() });
    let incl = proj.transpose();
    let morphisms = vec![
        (0, 2, Map::Linear(proj)),
        (2, 0, Map::Linear(incl)),
        (1, 1, Map::Linear(ExactMatrix::identity(Q, 6).scale(&Q.from_i64(2)))),
    ];
    let report = check_naturality(&objects, &morphisms, &pi).unwrap();
    assert!(report.passed(), "{report}");
}

#[test]
fn group_z_functor_reconstructs() {
    let (x, objects) = bantay_objects();
    for m in &objects {
        let z = z_functor(ZContext::Group(&x, Q), m).unwrap();
        let (rho, delta) = reconstruct(ZContext::Group(&x, Q), &z).unwrap();
        assert_eq!(&rho, m.rho());
        assert_eq!(&delta, m.delta());
    }
}

#[test]
fn enrichment_closure_and_strict_associativity() {
    for (name, x) in rack_crossed_modules() {
        let sys = Arc::new(build_system(SystemKind::ShelfCrmod(&x, ShelfVariant::Coass)).unwrap());
        let m = GradedActionRep::Shelf(ShelfRep::adjoint(&x)).as_gyd(sys.clone()).unwrap();
        let structures = vec![
            EnrichingStructure::from_a(sys.clone()).unwrap(),
            EnrichingStructure::from_c(sys.clone()).unwrap(),
            z_functor(ZContext::Shelf(&x), &m).unwrap(),
            z_functor(ZContext::ShelfTilde(&x), &m).unwrap(),
        ];
        for e in &structures {
            assert!(check_enriching(e).passed(), "{name}");
            assert!(check_gyd(&enrich(&m, e).unwrap()).passed(), "{name}");
        }
        let unit = EnrichingStructure::unit(sys.clone()).unwrap();
        let (a, b, c) = (&structures[0], &structures[1], &structures[2]);
        let left = tensor_enriching(&tensor_enriching(a, b).unwrap(), c).unwrap();
        let right = tensor_enriching(a, &tensor_enriching(b, c).unwrap()).unwrap();
        assert!(check_enriching(&left).passed(), "{name}");
        assert_eq!(left.sigma_cm(), right.sigma_cm());
        assert_eq!(left.sigma_ma(), right.sigma_ma());
        let ua = tensor_enriching(&unit, a).unwrap();
        let au = tensor_enriching(a, &unit).unwrap();
        assert_eq!(ua.sigma_cm(), a.sigma_cm());
        assert_eq!(au.sigma_ma(), a.sigma_ma());
    }
}
