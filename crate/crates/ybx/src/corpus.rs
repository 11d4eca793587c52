//! The example documents shipped in `corpus/`, regenerated by
//! `ybx export-corpus`.

use std::path::Path;
use std::sync::Arc;

use ybx_core::category::{enrich, EnrichingStructure, YdCharacter};
use ybx_core::crossed::adjoint;
use ybx_core::field::FieldSpec;
use ybx_core::group::{FiniteGroup, GroupCrossedModule};
use ybx_core::gyd::ShelfRep;
use ybx_core::hopf::{group_algebra, FinHopfAlgebra, HopfCharacterPair};
use ybx_core::leibniz::{LeibnizAlgebra, LeibnizCrossedModule, LeibnizRep};
use ybx_core::map::Map;
use ybx_core::matrix::ExactMatrix;
use ybx_core::shelf::{standard_shelf, Magma, StandardShelf};

use crate::document::{Base, Document, NamedRep, RepSpec};
use crate::error::{CliError, CliResult};

const Q: FieldSpec = FieldSpec::Rationals;

fn shelf_doc(kind: StandardShelf, rack: bool, elements: Option<Vec<String>>) -> CliResult<Document> {
    Ok(Document::Shelf {
        table: standard_shelf(&kind)?.magma().clone(),
        rack,
        elements,
    })
}

fn named(id: &str, rep: RepSpec) -> NamedRep {
    NamedRep { id: id.to_string(), rep }
}

fn bundle(base: Base, reps: Vec<NamedRep>) -> Document {
    let members = reps.iter().map(|r| r.id.clone()).collect();
    Document::Bundle {
        base,
        representations: reps,
        members,
        exponents: None,
    }
}

fn shelf_spec(r: ShelfRep) -> RepSpec {
    RepSpec::Shelf {
        action: r.action,
        grading: r.grading,
        twist: r.twist,
    }
}

fn perm_matrix(n: usize, f: impl Fn(usize) -> usize) -> ExactMatrix {
    ExactMatrix::from_fn(Q, n, n, |r, c| if r == f(c) { Q.one() } else { Q.zero() })
}

/// Conjugation, sign-twisted conjugation and trivial representations of
/// the identity crossed module of `S3`.
fn bantay_s3() -> Document {
    let g = FiniteGroup::symmetric(3);
    let x = GroupCrossedModule::identity(&g);
    let sign = |a: usize| {
        let commuting = (0..g.size()).filter(|&b| g.mul(a, b) == g.mul(b, a)).count();
        if a == g.identity() || commuting == 3 {
            1
        } else {
            -1
        }
    };
    let conj: Vec<ExactMatrix> = (0..6).map(|a| perm_matrix(6, |m| g.conj(m, a))).collect();
    let twisted = conj.iter().enumerate().map(|(a, m)| m.scale(&Q.from_i64(sign(a)))).collect();
    let reps = vec![
        named("conj", RepSpec::Bantay { grades: (0..6).collect(), action: conj }),
        named("signed", RepSpec::Bantay { grades: (0..6).collect(), action: twisted }),
        named("trivial", RepSpec::Bantay { grades: vec![g.identity()], action: vec![ExactMatrix::identity(Q, 1); 6] }),
    ];
    bundle(Base::Group { x, field: Q }, reps)
}

fn bantay_z2() -> CliResult<Document> {
    let x = GroupCrossedModule::identity(&FiniteGroup::cyclic(2));
    let sign = ExactMatrix::from_ints(Q, 2, 2, &[1, 0, 0, -1])?;
    Ok(Document::Representation {
        base: Base::Group { x, field: Q },
        rep: RepSpec::Bantay {
            grades: vec![0, 1],
            action: vec![ExactMatrix::identity(Q, 2), sign],
        },
    })
}

/// Adjoint-type modules `enrich(I, E)` over the two canonical enrichings.
fn hopf_modules(h: &FinHopfAlgebra, unit: YdCharacter) -> CliResult<Vec<NamedRep>> {
    let sys = Arc::new(h.system()?);
    let i = unit.module(sys.clone())?;
    let mut out = vec![];
    for (id, e) in [
        ("adjoint_c", EnrichingStructure::from_c(sys.clone())?),
        ("adjoint_a", EnrichingStructure::from_a(sys.clone())?),
    ] {
        let m = enrich(&i, &e)?;
        out.push(named(
            id,
            RepSpec::Module {
                dim: m.dim(),
                rho: m.rho().clone(),
                delta: m.delta().clone(),
            },
        ));
    }
    Ok(out)
}

fn hennings_f7() -> CliResult<(FinHopfAlgebra, YdCharacter)> {
    let f7 = FieldSpec::prime(7)?;
    let h = group_algebra(&FiniteGroup::cyclic(3), f7);
    let zeta = vec![f7.from_i64(1), f7.from_i64(2), f7.from_i64(4)];
    let pair = HopfCharacterPair::on_group_algebra(&h, zeta, 1)?;
    let ch = YdCharacter {
        epsilon: Map::Linear(pair.zeta().clone()),
        nu: Map::Linear(pair.eta().clone()),
    };
    Ok((h, ch))
}

fn leibniz_bundle(x: &LeibnizCrossedModule) -> Document {
    let spec = |r: LeibnizRep| RepSpec::Leibniz {
        action: r.action_matrices().to_vec(),
        delta0: r.delta0().clone(),
    };
    bundle(
        Base::Leibniz(x.clone()),
        vec![named("k", spec(LeibnizRep::on_k(x))), named("k_plus", spec(LeibnizRep::on_k_plus(x)))],
    )
}

/// Every generated example, keyed by file name.
pub fn documents() -> CliResult<Vec<(&'static str, Document)>> {
    let d3 = standard_shelf(&StandardShelf::Dihedral(3))?;
    let d3x = adjoint(&d3);
    let s3 = FiniteGroup::symmetric(3);
    let conj_s3 = adjoint(&standard_shelf(&StandardShelf::Conjugation(s3.clone()))?);
    let l2 = LeibnizAlgebra::l2(Q);
    let l2x = LeibnizCrossedModule::identity(&l2);
    let hs3 = group_algebra(&s3, Q);
    let (hf7, zeta) = hennings_f7()?;

    let adj = ShelfRep::adjoint(&d3x);
    let linear_adj: Vec<ExactMatrix> = (0..3).map(|s| perm_matrix(3, |m| adj.action[m][s])).collect();
    let linear_neg = linear_adj.iter().map(|m| m.scale(&Q.from_i64(-1))).collect();

    let hopf_unit = YdCharacter {
        epsilon: Map::Linear(hs3.eps().clone()),
        nu: Map::Linear(hs3.nu().clone()),
    };

    Ok(vec![
        ("d3.json", shelf_doc(StandardShelf::Dihedral(3), true, Some(vec!["r0".into(), "r1".into(), "r2".into()]))?),
        ("cyclic_mod3.json", shelf_doc(StandardShelf::CyclicMod(3), true, None)?),
        ("projection3.json", shelf_doc(StandardShelf::Projection(3), false, None)?),
        (
            "broken_shelf.json",
            Document::Shelf {
                table: Magma::from_fn(3, |a, b| (a + b) % 3)?,
                rack: false,
                elements: None,
            },
        ),
        (
            "s3.json",
            Document::Group {
                rows: s3.table_rows(),
                elements: Some(["e", "(12)", "(13)", "(23)", "(123)", "(132)"].map(String::from).to_vec()),
            },
        ),
        ("conj_s3_adjoint.json", Document::ShelfCrossedModule { x: conj_s3, rack_mode: true }),
        ("d3_adjoint.json", Document::ShelfCrossedModule { x: d3x.clone(), rack_mode: true }),
        (
            "z2_identity.json",
            Document::GroupCrossedModule {
                x: GroupCrossedModule::identity(&FiniteGroup::cyclic(2)),
                field: Q,
            },
        ),
        ("bantay_z2.json", bantay_z2()?),
        ("bantay_s3_bundle.json", bantay_s3()),
        (
            "d3_bundle.json",
            bundle(
                Base::Shelf { x: d3x.clone(), rack_mode: true },
                vec![
                    named("adjoint", shelf_spec(adj.clone())),
                    named("doubled", shelf_spec(ShelfRep::doubled_with_swap(&d3x))),
                ],
            ),
        ),
        (
            "d3_linear_bundle.json",
            bundle(
                Base::Shelf { x: d3x.clone(), rack_mode: true },
                vec![
                    named(
                        "adjoint",
                        RepSpec::LinearShelf {
                            field: Q,
                            grading: adj.grading.clone(),
                            action: linear_adj,
                            twist: None,
                        },
                    ),
                    named(
                        "signed",
                        RepSpec::LinearShelf {
                            field: Q,
                            grading: adj.grading.clone(),
                            action: linear_neg,
                            twist: None,
                        },
                    ),
                ],
            ),
        ),
        ("l2.json", Document::LeibnizAlgebra(l2.clone())),
        ("sl2.json", Document::LeibnizAlgebra(LeibnizAlgebra::sl2(Q))),
        ("l2_identity.json", Document::LeibnizCrossedModule(l2x.clone())),
        ("l2_bundle.json", leibniz_bundle(&l2x)),
        ("hopf_s3.json", Document::HopfAlgebra(hs3.clone())),
        ("hopf_f7_z3.json", Document::HopfAlgebra(hf7.clone())),
        ("hopf_s3_bundle.json", bundle(Base::Hopf(hs3.clone()), hopf_modules(&hs3, hopf_unit)?)),
        ("hennings_f7_bundle.json", bundle(Base::Hopf(hf7.clone()), hopf_modules(&hf7, zeta)?)),
    ])
}

/// Writes every generated document in canonical form.
pub fn export(dir: &Path) -> CliResult<usize> {
    std::fs::create_dir_all(dir).map_err(|source| CliError::Io {
        path: dir.to_path_buf(),
        source,
    })?;
    let docs = documents()?;
    for (name, doc) in &docs {
        let path = dir.join(name);
        std::fs::write(&path, doc.to_canonical()).map_err(|source| CliError::Io { path, source })?;
    }
    Ok(docs.len())
}
