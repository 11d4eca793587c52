use proptest::prelude::*;
use ybx::document::{parse_document, Base, Document, RepSpec};
use ybx::json::to_canonical;
use ybx_core::crossed::adjoint;
use ybx_core::field::FieldSpec;
use ybx_core::group::{FiniteGroup, GroupCrossedModule};
use ybx_core::matrix::ExactMatrix;
use ybx_core::shelf::{Magma, Shelf};

fn table(n: usize) -> impl Strategy<Value = Vec<Vec<usize>>> {
    proptest::collection::vec(proptest::collection::vec(0..n, n), n)
}

fn field() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![Just(FieldSpec::Rationals), Just(FieldSpec::prime(7).unwrap()), Just(FieldSpec::prime(101).unwrap())]
}

fn matrix(f: FieldSpec, rows: usize, cols: usize) -> impl Strategy<Value = ExactMatrix> {
    proptest::collection::vec((-50i64..50, 1i64..6), rows * cols).prop_map(move |entries| {
        ExactMatrix::from_fn(f, rows, cols, |r, c| {
            let (num, den) = entries[r * cols + c];
            match f {
                FieldSpec::Rationals => f.parse(&format!("{num}/{den}")).unwrap(),
                FieldSpec::Prime(_) => f.from_i64(num),
            }
        })
    })
}

fn round_trips(doc: &Document) -> Result<(), TestCaseError> {
    let text = doc.to_canonical();
    let back = parse_document(&text).unwrap();
    prop_assert_eq!(&back, doc);
    prop_assert_eq!(back.to_canonical(), text.clone());
    // key order and whitespace in the input do not matter
    let compact = serde_json::to_string(&serde_json::from_str::<serde_json::Value>(&text).unwrap()).unwrap();
    prop_assert_eq!(parse_document(&compact).unwrap().to_canonical(), text);
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn binary_tables_round_trip(n in 1usize..5, rack in any::<bool>(), rows in table(4)) {
        let rows: Vec<Vec<usize>> = rows[..n].iter().map(|r| r[..n].iter().map(|&x| x % n).collect()).collect();
        let doc = Document::Shelf { table: Magma::from_rows(&rows).unwrap(), rack, elements: None };
        round_trips(&doc)?;
    }

    #[test]
    fn bantay_representations_round_trip(f in field(), a in matrix(FieldSpec::Rationals, 3, 3), seed in 0usize..1000) {
        let x = GroupCrossedModule::identity(&FiniteGroup::cyclic(2));
        let reduce = |m: &ExactMatrix| ExactMatrix::from_fn(f, 3, 3, |r, c| match f {
            FieldSpec::Rationals => m.get(r, c).clone(),
            FieldSpec::Prime(_) => f.from_i64((r * 7 + c * 3 + seed) as i64),
        });
        let doc = Document::Representation {
            base: Base::Group { x, field: f },
            rep: RepSpec::Bantay { grades: vec![seed % 2, 0, 1], action: vec![ExactMatrix::identity(f, 3), reduce(&a)] },
        };
        round_trips(&doc)?;
    }

    #[test]
    fn leibniz_algebras_round_trip(f in field(), d in 1usize..3, seed in any::<u64>()) {
        let bracket = ExactMatrix::from_fn(f, d, d * d, |r, c| f.from_i64(((seed >> ((r * 7 + c) % 60)) & 3) as i64 - 1));
        let doc = Document::LeibnizAlgebra(ybx_core::leibniz::LeibnizAlgebra::new(bracket).unwrap());
        round_trips(&doc)?;
    }
}

#[test]
fn shelf_crossed_modules_round_trip() {
    let s = Shelf::from_fn(4, |a, b| (2 * b + 4 - a) % 4).unwrap();
    let doc = Document::ShelfCrossedModule { x: adjoint(&s), rack_mode: true };
    round_trips(&doc).unwrap();
}

#[test]
fn scalars_use_the_documented_encoding() {
    let f = FieldSpec::Rationals;
    let m = ExactMatrix::from_fn(f, 1, 3, |_, c| f.parse(["-2", "3/4", "0"][c]).unwrap());
    let v = ybx::json::matrix_value(&m);
    assert_eq!(to_canonical(&v), "[\n  [-2, \"3/4\", 0]\n]\n");
    let text = r#"{"kind": "leibniz_algebra", "field": "Q", "bracket": [["−1/2"]]}"#;
    match parse_document(text).unwrap() {
        Document::LeibnizAlgebra(l) => assert_eq!(l.bracket().get(0, 0), &f.parse("-1/2").unwrap()),
        _ => unreachable!(),
    }
}
