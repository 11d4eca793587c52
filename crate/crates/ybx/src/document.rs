//! Typed structure documents and their JSON encoding.

use std::collections::BTreeSet;
use std::path::Path;
use std::sync::Arc;

use serde_json::{json, Map as JsonMap, Value};
use ybx_core::braided::{build_system, BraidedSystem, ShelfVariant, SystemKind};
use ybx_core::crossed::ShelfCrossedModule;
use ybx_core::field::FieldSpec;
use ybx_core::group::{FiniteGroup, GroupCrossedModule};
use ybx_core::gyd::{
    standard_connecting_map, BantayRep, ConnectingData, Exponents, GradedActionRep, GydModule, LeibnizRepData,
    LinearShelfRep, RepresentationBundle, ShelfRep,
};
use ybx_core::hopf::FinHopfAlgebra;
use ybx_core::leibniz::{LeibnizAlgebra, LeibnizCrossedModule, LeibnizRep};
use ybx_core::map::{Map, Mode};
use ybx_core::matrix::ExactMatrix;
use ybx_core::shelf::{Magma, Shelf};

use crate::error::{CliError, CliResult};
use crate::json::{
    indices_value, map_from, map_value, matrix_value, table_value, to_canonical, Obj,
};

pub const KINDS: [&str; 10] = [
    "shelf",
    "rack",
    "group",
    "group_crossed_module",
    "shelf_crossed_module",
    "leibniz_algebra",
    "leibniz_crossed_module",
    "hopf_algebra",
    "representation",
    "bundle",
];

/// The algebraic data a representation lives over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Base {
    Group { x: GroupCrossedModule, field: FieldSpec },
    Shelf { x: ShelfCrossedModule, rack_mode: bool },
    Leibniz(LeibnizCrossedModule),
    Hopf(FinHopfAlgebra),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RepSpec {
    /// A shelf representation in sets, optionally twisted.
    Shelf {
        action: Vec<Vec<usize>>,
        grading: Vec<usize>,
        twist: Option<Vec<usize>>,
    },
    /// A linear shelf representation with a basis-homogeneous grading.
    LinearShelf {
        field: FieldSpec,
        grading: Vec<usize>,
        action: Vec<ExactMatrix>,
        twist: Option<ExactMatrix>,
    },
    /// A graded representation of a group crossed module.
    Bantay { grades: Vec<usize>, action: Vec<ExactMatrix> },
    /// A representation of a Leibniz crossed module.
    Leibniz { action: Vec<ExactMatrix>, delta0: ExactMatrix },
    /// An explicit module structure `(ρ, δ)` over the base system.
    Module { dim: usize, rho: Map, delta: Map },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedRep {
    pub id: String,
    pub rep: RepSpec,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    /// Kind `shelf` or `rack`; the table is not required to be self-distributive.
    Shelf {
        table: Magma,
        rack: bool,
        elements: Option<Vec<String>>,
    },
    Group {
        rows: Vec<Vec<usize>>,
        elements: Option<Vec<String>>,
    },
    GroupCrossedModule { x: GroupCrossedModule, field: FieldSpec },
    ShelfCrossedModule { x: ShelfCrossedModule, rack_mode: bool },
    LeibnizAlgebra(LeibnizAlgebra),
    LeibnizCrossedModule(LeibnizCrossedModule),
    HopfAlgebra(FinHopfAlgebra),
    Representation { base: Base, rep: RepSpec },
    Bundle {
        base: Base,
        representations: Vec<NamedRep>,
        members: Vec<String>,
        exponents: Option<Exponents>,
    },
}

pub fn load_path(path: &Path) -> CliResult<Document> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_document(&text)
}

pub fn parse_document(text: &str) -> CliResult<Document> {
    let v: Value = serde_json::from_str(text)?;
    Document::from_value(&v)
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Shelf { rack: false, .. } => "shelf",
            Document::Shelf { rack: true, .. } => "rack",
            Document::Group { .. } => "group",
            Document::GroupCrossedModule { .. } => "group_crossed_module",
            Document::ShelfCrossedModule { .. } => "shelf_crossed_module",
            Document::LeibnizAlgebra(_) => "leibniz_algebra",
            Document::LeibnizCrossedModule(_) => "leibniz_crossed_module",
            Document::HopfAlgebra(_) => "hopf_algebra",
            Document::Representation { .. } => "representation",
            Document::Bundle { .. } => "bundle",
        }
    }

    pub fn from_value(v: &Value) -> CliResult<Document> {
        parse_at("$", v)
    }

    pub fn to_value(&self) -> Value {
        let mut v = match self {
            Document::Shelf { table, elements, .. } => {
                let mut v = json!({ "table": table_value(&table.rows()) });
                if let Some(names) = elements {
                    v["elements"] = json!(names);
                }
                v
            }
            Document::Group { rows, elements } => {
                let mut v = json!({ "table": table_value(rows) });
                if let Some(names) = elements {
                    v["elements"] = json!(names);
                }
                v
            }
            Document::GroupCrossedModule { x, field } => json!({
                "field": field.to_string(),
                "k": table_value(&x.k().table_rows()),
                "g": table_value(&x.g().table_rows()),
                "pi": indices_value(x.pi_table()),
                "action": table_value(&x.action_rows()),
            }),
            Document::ShelfCrossedModule { x, rack_mode } => json!({
                "r": table_value(&x.r().rows()),
                "s": table_value(&x.s().rows()),
                "pi": indices_value(x.pi_map().table()),
                "action": table_value(&x.action().rows()),
                "rack_mode": rack_mode,
            }),
            Document::LeibnizAlgebra(l) => json!({
                "field": l.field().to_string(),
                "bracket": matrix_value(l.bracket()),
            }),
            Document::LeibnizCrossedModule(x) => json!({
                "field": x.field().to_string(),
                "k": matrix_value(x.k().bracket()),
                "g": matrix_value(x.g().bracket()),
                "pi": matrix_value(x.pi()),
                "action": Value::Array(x.action_matrices().iter().map(matrix_value).collect()),
            }),
            Document::HopfAlgebra(h) => json!({
                "field": h.field().to_string(),
                "mu": matrix_value(h.mu()),
                "nu": matrix_value(h.nu()),
                "delta": matrix_value(h.delta()),
                "eps": matrix_value(h.eps()),
                "antipode": matrix_value(h.antipode()),
            }),
            Document::Representation { base, rep } => json!({
                "base": base.to_document().to_value(),
                "rep": rep.to_value(),
            }),
            Document::Bundle {
                base,
                representations,
                members,
                exponents,
            } => {
                let reps: Vec<Value> = representations
                    .iter()
                    .map(|r| json!({ "id": r.id, "rep": r.rep.to_value() }))
                    .collect();
                let mut v = json!({
                    "base": base.to_document().to_value(),
                    "representations": reps,
                    "members": members,
                });
                if let Some(e) = exponents {
                    v["exponents"] = json!([e.a1, e.a2, e.g1, e.g2]);
                }
                v
            }
        };
        v["kind"] = json!(self.kind());
        v
    }

    pub fn to_canonical(&self) -> String {
        to_canonical(&self.to_value())
    }

    pub fn base(&self) -> Option<Base> {
        match self {
            Document::GroupCrossedModule { x, field } => Some(Base::Group { x: x.clone(), field: *field }),
            Document::ShelfCrossedModule { x, rack_mode } => Some(Base::Shelf {
                x: x.clone(),
                rack_mode: *rack_mode,
            }),
            Document::LeibnizCrossedModule(x) => Some(Base::Leibniz(x.clone())),
            Document::HopfAlgebra(h) => Some(Base::Hopf(h.clone())),
            Document::Representation { base, .. } | Document::Bundle { base, .. } => Some(base.clone()),
            _ => None,
        }
    }

    /// The bundle described by a representation (one member) or bundle
    /// document, without validation.
    pub fn bundle(&self) -> CliResult<Option<RepresentationBundle>> {
        let (base, members, exponents): (&Base, Vec<(String, &RepSpec)>, Option<Exponents>) = match self {
            Document::Representation { base, rep } => (base, vec![("rep".to_string(), rep)], None),
            Document::Bundle {
                base,
                representations,
                members,
                exponents,
            } => {
                let resolved = members
                    .iter()
                    .map(|id| {
                        representations
                            .iter()
                            .find(|r| &r.id == id)
                            .map(|r| (id.clone(), &r.rep))
                            .ok_or_else(|| CliError::Resolution(format!("bundle member {id:?} is not a defined representation")))
                    })
                    .collect::<CliResult<Vec<_>>>()?;
                (base, resolved, *exponents)
            }
            _ => return Ok(None),
        };
        let reps: Vec<&RepSpec> = members.iter().map(|(_, r)| *r).collect();
        let sys = Arc::new(base.system_for(&reps)?);
        let modules = members
            .iter()
            .map(|(id, r)| Ok((id.clone(), r.module(base, sys.clone())?)))
            .collect::<CliResult<Vec<(String, GydModule)>>>()?;
        let connecting = base.connecting(&sys, exponents)?;
        Ok(Some(RepresentationBundle::unchecked(sys, modules, connecting)?))
    }

    /// The representation data with the id it appears under.
    pub fn reps(&self) -> Vec<(String, &RepSpec)> {
        match self {
            Document::Representation { rep, .. } => vec![("rep".to_string(), rep)],
            Document::Bundle { representations, .. } => {
                representations.iter().map(|r| (r.id.clone(), &r.rep)).collect()
            }
            _ => vec![],
        }
    }
}

fn parse_at(path: &str, v: &Value) -> CliResult<Document> {
    let o = Obj::new(path, v)?;
    let kind = o.str("kind")?;
    Ok(match kind {
        "shelf" | "rack" => {
            let table = Magma::from_rows(&o.table("table")?)?;
            let elements = o.names("elements", table.size())?;
            Document::Shelf {
                table,
                rack: kind == "rack",
                elements,
            }
        }
        "group" => {
            let rows = o.table("table")?;
            let elements = o.names("elements", rows.len())?;
            Document::Group { rows, elements }
        }
        "group_crossed_module" => {
            let k = FiniteGroup::from_table(&o.table("k")?)?;
            let g = FiniteGroup::from_table(&o.table("g")?)?;
            let x = GroupCrossedModule::new(k, g, o.indices("pi")?, &o.table("action")?)?;
            Document::GroupCrossedModule { x, field: o.field("field")? }
        }
        "shelf_crossed_module" => {
            let r = Shelf::try_from(Magma::from_rows(&o.table("r")?)?)?;
            let s = Shelf::try_from(Magma::from_rows(&o.table("s")?)?)?;
            let x = ShelfCrossedModule::new(r, s, o.indices("pi")?, &o.table("action")?)?;
            Document::ShelfCrossedModule {
                x,
                rack_mode: o.bool_or("rack_mode", false)?,
            }
        }
        "leibniz_algebra" => {
            let f = o.field("field")?;
            Document::LeibnizAlgebra(LeibnizAlgebra::new(o.matrix("bracket", f)?)?)
        }
        "leibniz_crossed_module" => {
            let f = o.field("field")?;
            let k = LeibnizAlgebra::new(o.matrix("k", f)?)?;
            let g = LeibnizAlgebra::new(o.matrix("g", f)?)?;
            let x = LeibnizCrossedModule::new(k, g, o.matrix("pi", f)?, o.matrices("action", f)?)?;
            Document::LeibnizCrossedModule(x)
        }
        "hopf_algebra" => {
            let f = o.field("field")?;
            Document::HopfAlgebra(FinHopfAlgebra::unchecked(
                o.matrix("mu", f)?,
                o.matrix("nu", f)?,
                o.matrix("delta", f)?,
                o.matrix("eps", f)?,
                o.matrix("antipode", f)?,
            )?)
        }
        "representation" => {
            let base = parse_base(&o)?;
            let rep = RepSpec::parse(&o.obj("rep")?, &base)?;
            Document::Representation { base, rep }
        }
        "bundle" => {
            let base = parse_base(&o)?;
            let mut representations = Vec::new();
            let mut seen = BTreeSet::new();
            for (i, item) in o.array("representations")?.iter().enumerate() {
                let r = Obj::new(format!("{}.representations[{i}]", o.path), item)?;
                let id = r.str("id")?.to_string();
                if !seen.insert(id.clone()) {
                    return Err(CliError::schema(&r.path, format!("duplicate representation id {id:?}")));
                }
                let rep = RepSpec::parse(&r.obj("rep")?, &base)?;
                representations.push(NamedRep { id, rep });
            }
            let members = o
                .array("members")?
                .iter()
                .enumerate()
                .map(|(i, m)| {
                    m.as_str()
                        .map(str::to_string)
                        .ok_or_else(|| CliError::schema(&format!("{}.members[{i}]", o.path), "expected a representation id"))
                })
                .collect::<CliResult<Vec<_>>>()?;
            if members.is_empty() {
                return Err(CliError::schema(&o.path, "bundle without members"));
            }
            if let Some(id) = members.iter().find(|m| !seen.contains(*m)) {
                return Err(CliError::Resolution(format!("bundle member {id:?} is not a defined representation")));
            }
            let exponents = match o.opt("exponents") {
                None => None,
                Some(_) => Some(parse_exponents_list(&o.indices("exponents")?).map_err(|m| CliError::schema(&o.path, m))?),
            };
            Document::Bundle {
                base,
                representations,
                members,
                exponents,
            }
        }
        other => {
            return Err(CliError::schema(
                &format!("{path}.kind"),
                format!("unknown kind {other:?}; expected one of {}", KINDS.join(", ")),
            ))
        }
    })
}

pub fn parse_exponents_list(v: &[usize]) -> Result<Exponents, String> {
    match v {
        [a1, a2, g1, g2] => {
            let c = |x: usize| u32::try_from(x).map_err(|_| "exponent too large".to_string());
            Ok(Exponents::new(c(*a1)?, c(*a2)?, c(*g1)?, c(*g2)?))
        }
        _ => Err(format!("expected four exponents, found {}", v.len())),
    }
}

fn parse_base(o: &Obj<'_>) -> CliResult<Base> {
    let inner = parse_at(&format!("{}.base", o.path), o.get("base")?)?;
    inner
        .base()
        .filter(|_| !matches!(inner, Document::Representation { .. } | Document::Bundle { .. }))
        .ok_or_else(|| {
            CliError::schema(
                &format!("{}.base", o.path),
                format!("a {} cannot carry representations", inner.kind()),
            )
        })
}

impl Base {
    pub fn to_document(&self) -> Document {
        match self {
            Base::Group { x, field } => Document::GroupCrossedModule { x: x.clone(), field: *field },
            Base::Shelf { x, rack_mode } => Document::ShelfCrossedModule {
                x: x.clone(),
                rack_mode: *rack_mode,
            },
            Base::Leibniz(x) => Document::LeibnizCrossedModule(x.clone()),
            Base::Hopf(h) => Document::HopfAlgebra(h.clone()),
        }
    }

    pub fn system_kind(&self) -> SystemKind<'_> {
        match self {
            Base::Group { x, field } => SystemKind::GroupCrmod(x, *field),
            Base::Shelf { x, .. } => SystemKind::ShelfCrmod(x, ShelfVariant::Coass),
            Base::Leibniz(x) => SystemKind::LeibnizCrmod(x),
            Base::Hopf(h) => SystemKind::Hopf(h),
        }
    }

    /// The linear field, if the base lives over vector spaces.
    pub fn field(&self) -> Option<FieldSpec> {
        match self {
            Base::Group { field, .. } => Some(*field),
            Base::Shelf { .. } => None,
            Base::Leibniz(x) => Some(x.field()),
            Base::Hopf(h) => Some(h.field()),
        }
    }

    /// The base system, linearized when a member is a linear shelf
    /// representation.
    pub fn system_for(&self, reps: &[&RepSpec]) -> CliResult<BraidedSystem> {
        let sys = build_system(self.system_kind())?;
        let linear = reps.iter().find_map(|r| match r {
            RepSpec::LinearShelf { field, .. } => Some(*field),
            _ => None,
        });
        match (self, linear) {
            (Base::Shelf { .. }, Some(f)) => Ok(sys.linearize(f)?),
            _ => Ok(sys),
        }
    }

    /// Exponents that make the standard connecting map satisfy the condition.
    pub fn default_exponents(&self) -> Exponents {
        match self {
            Base::Group { .. } | Base::Hopf(_) => Exponents::new(1, 1, 1, 1),
            Base::Shelf { .. } | Base::Leibniz(_) => Exponents::new(0, 1, 1, 1),
        }
    }

    pub fn connecting(&self, sys: &BraidedSystem, exponents: Option<Exponents>) -> CliResult<ConnectingData> {
        let pi = standard_connecting_map(self.system_kind())?.in_mode(sys.mode())?;
        Ok(ConnectingData {
            pi,
            exponents: exponents.unwrap_or_else(|| self.default_exponents()),
        })
    }
}

impl RepSpec {
    fn parse(o: &Obj<'_>, base: &Base) -> CliResult<RepSpec> {
        let ty = o.str("type")?;
        let wrong = || CliError::schema(&o.path, format!("representation type {ty:?} does not fit this base"));
        Ok(match (ty, base) {
            ("shelf", Base::Shelf { .. }) => RepSpec::Shelf {
                action: o.table("action")?,
                grading: o.indices("grading")?,
                twist: o.opt("twist").map(|_| o.indices("twist")).transpose()?,
            },
            ("linear_shelf", Base::Shelf { .. }) => {
                let field = o.field("field")?;
                RepSpec::LinearShelf {
                    field,
                    grading: o.indices("grading")?,
                    action: o.matrices("action", field)?,
                    twist: o.opt("twist").map(|_| o.matrix("twist", field)).transpose()?,
                }
            }
            ("bantay", Base::Group { field, .. }) => RepSpec::Bantay {
                grades: o.indices("grades")?,
                action: o.matrices("action", *field)?,
            },
            ("leibniz", Base::Leibniz(x)) => RepSpec::Leibniz {
                action: o.matrices("action", x.field())?,
                delta0: o.matrix("delta0", x.field())?,
            },
            ("module", _) => {
                let dim = o.usize("dim")?;
                let sys = build_system(base.system_kind())?;
                let (dc, field) = (sys.dim(0), base.field());
                let rho = map_from(&format!("{}.rho", o.path), o.get("rho")?, field, dim)?;
                let delta = map_from(&format!("{}.delta", o.path), o.get("delta")?, field, dim * dc)?;
                RepSpec::Module { dim, rho, delta }
            }
            ("shelf" | "linear_shelf" | "bantay" | "leibniz", _) => return Err(wrong()),
            (other, _) => {
                return Err(CliError::schema(
                    &format!("{}.type", o.path),
                    format!("unknown representation type {other:?}"),
                ))
            }
        })
    }

    pub fn to_value(&self) -> Value {
        let mut m = JsonMap::new();
        let mut put = |k: &str, v: Value| {
            m.insert(k.to_string(), v);
        };
        match self {
            RepSpec::Shelf { action, grading, twist } => {
                put("type", json!("shelf"));
                put("action", table_value(action));
                put("grading", indices_value(grading));
                if let Some(t) = twist {
                    put("twist", indices_value(t));
                }
            }
            RepSpec::LinearShelf {
                field,
                grading,
                action,
                twist,
            } => {
                put("type", json!("linear_shelf"));
                put("field", json!(field.to_string()));
                put("grading", indices_value(grading));
                put("action", Value::Array(action.iter().map(matrix_value).collect()));
                if let Some(t) = twist {
                    put("twist", matrix_value(t));
                }
            }
            RepSpec::Bantay { grades, action } => {
                put("type", json!("bantay"));
                put("grades", indices_value(grades));
                put("action", Value::Array(action.iter().map(matrix_value).collect()));
            }
            RepSpec::Leibniz { action, delta0 } => {
                put("type", json!("leibniz"));
                put("action", Value::Array(action.iter().map(matrix_value).collect()));
                put("delta0", matrix_value(delta0));
            }
            RepSpec::Module { dim, rho, delta } => {
                put("type", json!("module"));
                put("dim", json!(dim));
                put("rho", map_value(rho));
                put("delta", map_value(delta));
            }
        }
        Value::Object(m)
    }

    /// The representation data in the core's terms; `None` for explicit modules.
    pub fn graded(&self, base: &Base) -> CliResult<Option<GradedActionRep>> {
        Ok(Some(match (self, base) {
            (RepSpec::Shelf { action, grading, twist }, Base::Shelf { x, .. }) => GradedActionRep::Shelf(ShelfRep {
                x: x.clone(),
                action: action.clone(),
                grading: grading.clone(),
                twist: twist.clone(),
            }),
            (
                RepSpec::LinearShelf {
                    field,
                    grading,
                    action,
                    twist,
                },
                Base::Shelf { x, .. },
            ) => GradedActionRep::LinearShelf(LinearShelfRep {
                x: x.clone(),
                field: *field,
                grading: grading.clone(),
                action: action.clone(),
                twist: twist.clone(),
            }),
            (RepSpec::Bantay { grades, action }, Base::Group { x, field }) => GradedActionRep::Group(BantayRep {
                x: x.clone(),
                field: *field,
                grades: grades.clone(),
                action: action.clone(),
            }),
            (RepSpec::Leibniz { action, delta0 }, Base::Leibniz(x)) => GradedActionRep::Leibniz(LeibnizRepData {
                x: x.clone(),
                rep: LeibnizRep::new(x, delta0.cols(), action.clone(), delta0.clone())?,
            }),
            (RepSpec::Module { .. }, _) => return Ok(None),
            _ => return Err(CliError::Usage("representation does not fit its base".into())),
        }))
    }

    pub fn module(&self, base: &Base, sys: Arc<BraidedSystem>) -> CliResult<GydModule> {
        match self {
            RepSpec::Module { dim, rho, delta } => {
                let (rho, delta) = (rho.in_mode(sys.mode())?, delta.in_mode(sys.mode())?);
                Ok(GydModule::new(sys, *dim, rho, delta)?)
            }
            _ => {
                let g = self.graded(base)?.expect("graded representation");
                if let (GradedActionRep::Shelf(_), Mode::Linear(f)) = (&g, sys.mode()) {
                    let set_sys = Arc::new(build_system(base.system_kind())?);
                    let m = g.as_gyd_unchecked(set_sys)?;
                    return Ok(GydModule::new(sys, m.dim(), m.rho().in_mode(Mode::Linear(f))?, m.delta().in_mode(Mode::Linear(f))?)?);
                }
                Ok(g.as_gyd_unchecked(sys)?)
            }
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            RepSpec::Shelf { grading, .. } | RepSpec::LinearShelf { grading, .. } => grading.len(),
            RepSpec::Bantay { grades, .. } => grades.len(),
            RepSpec::Leibniz { delta0, .. } => delta0.cols(),
            RepSpec::Module { dim, .. } => *dim,
        }
    }
}
