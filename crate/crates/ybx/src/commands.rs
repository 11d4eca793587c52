//! The subcommands, each producing an [`Outcome`].

use std::sync::Arc;
use std::time::Instant;

use serde_json::{json, Value};
use ybx_core::braided::{build_system, check_cybe, check_cybe_triple, cybe_sides, sigma_lei, BraidedSystem, ShelfVariant, SystemKind};
use ybx_core::category::{
    check_pentagon, enrich, enumerate_yd_characters, hopf_unit_character, leibniz_unit_character, EnrichingStructure,
    YdCharacter, ZContext,
};
use ybx_core::crossed::{adjoint, check_shelf_crossed_module, from_group, ShelfCrossedModule};
use ybx_core::error::Error;
use ybx_core::field::FieldSpec;
use ybx_core::group::{check_group, check_group_crossed_module, FiniteGroup, GroupCrossedModule};
use ybx_core::gyd::{
    braid_operator, check_gyd, check_pi_condition, check_ybe_family, gyd_braiding, BantayRep, Exponents, GradedActionRep,
    GydModule, RepresentationBundle, ShelfRep,
};
use ybx_core::hopf::check_hopf;
use ybx_core::leibniz::{
    check_leibniz, check_leibniz_crossed_module, check_unitarized_identities, unitarize, LeibnizCrossedModule, LeibnizRep,
};
use ybx_core::map::{Map, Mode};
use ybx_core::matrix::ExactMatrix;
use ybx_core::report::{CheckEntry, Report};
use ybx_core::shelf::{check_rack, check_shelf, sigma_sd, standard_shelf, Shelf, StandardShelf};

use crate::document::{Base, Document};
use crate::error::{CliError, CliResult};
use crate::json::map_value;

pub const DEFAULT_MAX_DIM: usize = 16;

/// The result of one subcommand: a report plus named output values.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub command: &'static str,
    pub kind: &'static str,
    pub report: Report,
    pub output: Vec<(String, Value)>,
    pub elapsed_us: u64,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        if self.report.passed() {
            0
        } else {
            1
        }
    }
}

fn run(command: &'static str, doc: &Document, f: impl FnOnce() -> CliResult<(Report, Vec<(String, Value)>)>) -> CliResult<Outcome> {
    let start = Instant::now();
    let (report, output) = f()?;
    Ok(Outcome {
        command,
        kind: doc.kind(),
        report,
        output,
        elapsed_us: micros(start),
    })
}

fn micros(start: Instant) -> u64 {
    u64::try_from(start.elapsed().as_micros()).unwrap_or(u64::MAX)
}

/// Runs a check and stamps the elapsed time on entries that lack one.
fn timed(f: impl FnOnce() -> CliResult<Report>) -> CliResult<Report> {
    let start = Instant::now();
    let mut report = f()?;
    let us = micros(start);
    for e in &mut report.entries {
        e.elapsed_us.get_or_insert(us);
    }
    Ok(report)
}

/// The dimension bound from `YBX_MAX_DIM`.
pub fn max_dim() -> CliResult<usize> {
    match std::env::var("YBX_MAX_DIM") {
        Err(_) => Ok(DEFAULT_MAX_DIM),
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| CliError::Usage(format!("YBX_MAX_DIM must be a positive integer, got {v:?}"))),
    }
}

fn guard(dims: impl IntoIterator<Item = usize>) -> CliResult<()> {
    let limit = max_dim()?;
    match dims.into_iter().max() {
        Some(found) if found > limit => Err(Error::LimitExceeded {
            what: "carrier dimension (YBX_MAX_DIM)",
            limit,
            found,
        }
        .into()),
        _ => Ok(()),
    }
}

fn guard_system(sys: &BraidedSystem) -> CliResult<()> {
    guard(sys.dims().iter().copied())
}

fn guard_bundle(b: &RepresentationBundle) -> CliResult<()> {
    guard_system(b.system())?;
    guard(b.members().iter().map(|(_, m)| m.dim()))
}

fn bundle_of(doc: &Document) -> CliResult<Option<RepresentationBundle>> {
    let bundle = doc.bundle()?;
    if let Some(b) = &bundle {
        guard_bundle(b)?;
    }
    Ok(bundle)
}

fn as_shelf(table: &ybx_core::shelf::Magma) -> CliResult<Shelf> {
    Ok(Shelf::try_from(table.clone())?)
}

/// The base structure behind any document; plain shelves and groups become
/// their adjoint or identity crossed modules.
pub fn as_base(doc: &Document) -> CliResult<Base> {
    if let Some(b) = doc.base() {
        return Ok(b);
    }
    Ok(match doc {
        Document::Shelf { table, rack, .. } => Base::Shelf {
            x: adjoint(&as_shelf(table)?),
            rack_mode: *rack,
        },
        Document::Group { rows, .. } => Base::Group {
            x: GroupCrossedModule::identity(&FiniteGroup::from_table(rows)?),
            field: FieldSpec::Rationals,
        },
        Document::LeibnizAlgebra(l) => Base::Leibniz(LeibnizCrossedModule::identity(l)),
        _ => unreachable!("every other kind carries a base"),
    })
}

pub fn base_report(base: &Base) -> Report {
    match base {
        Base::Group { x, .. } => check_group_crossed_module(x),
        Base::Shelf { x, rack_mode } => check_shelf_crossed_module(x, *rack_mode),
        Base::Leibniz(x) => {
            let mut r = check_leibniz_crossed_module(x);
            if r.passed() {
                r.extend(check_unitarized_identities(x));
            }
            r
        }
        Base::Hopf(h) => check_hopf(h),
    }
}

fn verify_report(doc: &Document) -> CliResult<Report> {
    Ok(match doc {
        Document::Shelf { table, rack, .. } => {
            let mut r = check_shelf(table);
            if *rack && r.passed() {
                r.extend(check_rack(&as_shelf(table)?).0);
            }
            r
        }
        Document::Group { rows, .. } => check_group(rows)?.0,
        Document::LeibnizAlgebra(l) => check_leibniz(l),
        Document::Representation { base, .. } | Document::Bundle { base, .. } => {
            let mut r = base_report(base).prefixed("base");
            if !r.passed() {
                return Ok(r);
            }
            for (id, rep) in doc.reps() {
                if let Some(g) = rep.graded(base)? {
                    r.extend(g.check()?.prefixed(&id));
                }
            }
            if !r.passed() {
                return Ok(r);
            }
            let bundle = bundle_of(doc)?.expect("representation document");
            r.extend(bundle.validate()?);
            if r.passed() {
                r.extend(check_ybe_family(&bundle)?);
            }
            r
        }
        other => base_report(&as_base(other)?),
    })
}

pub fn verify(doc: &Document) -> CliResult<Outcome> {
    run("verify", doc, || Ok((timed(|| verify_report(doc))?, vec![])))
}

/// The rank-one or rank-two system a non-representation document defines.
fn system_of(doc: &Document) -> CliResult<BraidedSystem> {
    let sys = match doc {
        Document::Shelf { table, .. } => BraidedSystem::rank1(table.size(), Map::Set(sigma_sd(table)))?,
        Document::Group { rows, .. } => {
            let s = standard_shelf(&StandardShelf::Conjugation(FiniteGroup::from_table(rows)?))?;
            BraidedSystem::rank1(s.size(), Map::Set(sigma_sd(s.magma())))?
        }
        Document::LeibnizAlgebra(l) => {
            let u = unitarize(l);
            BraidedSystem::rank1(u.dim(), Map::Linear(sigma_lei(u.bracket(), u.unit())?))?
        }
        other => build_system(as_base(other)?.system_kind())?,
    };
    guard_system(&sys)?;
    Ok(sys)
}

fn parse_triple(t: [usize; 3]) -> CliResult<[usize; 3]> {
    if t.contains(&0) {
        return Err(CliError::Usage("indices are one-based".into()));
    }
    Ok([t[0] - 1, t[1] - 1, t[2] - 1])
}

pub fn ybe_report(doc: &Document, triple: Option<[usize; 3]>) -> CliResult<Report> {
    match bundle_of(doc)? {
        Some(b) => match triple {
            None => Ok(check_ybe_family(&b)?),
            Some(t) => {
                let [i, j, k] = parse_triple(t)?;
                let (mi, mj, mk) = (b.member(i)?, b.member(j)?, b.member(k)?);
                let dims = [mi.dim(), mj.dim(), mk.dim()];
                let (lhs, rhs) = cybe_sides(
                    b.system().mode(),
                    &gyd_braiding(&b, i, j)?,
                    &gyd_braiding(&b, i, k)?,
                    &gyd_braiding(&b, j, k)?,
                    dims,
                )?;
                let cmp = lhs.compare(&rhs)?;
                let id = format!("ybe[{},{},{}]", t[0], t[1], t[2]);
                Ok(CheckEntry::from_comparison(id, "Yang-Baxter equation", &cmp, &dims).into())
            }
        },
        None => {
            let sys = system_of(doc)?;
            match triple {
                None => Ok(check_cybe(&sys)),
                Some(t) => {
                    let [i, j, k] = parse_triple(t)?;
                    Ok(check_cybe_triple(&sys, i, j, k)?.into())
                }
            }
        }
    }
}

pub fn ybe(doc: &Document, triple: Option<[usize; 3]>) -> CliResult<Outcome> {
    run("ybe", doc, || Ok((timed(|| ybe_report(doc, triple))?, vec![])))
}

fn mode_label(mode: Mode) -> String {
    match mode {
        Mode::Set => "set".into(),
        Mode::Linear(f) => f.to_string(),
    }
}

/// The braiding on a pair of members (bundles) or carriers (systems).
pub fn braiding_map(doc: &Document, pair: [usize; 2]) -> CliResult<Map> {
    if pair.contains(&0) {
        return Err(CliError::Usage("indices are one-based".into()));
    }
    let (i, j) = (pair[0] - 1, pair[1] - 1);
    match bundle_of(doc)? {
        Some(b) => Ok(gyd_braiding(&b, i, j)?),
        None => {
            let sys = system_of(doc)?;
            if i >= sys.rank() || j >= sys.rank() {
                return Err(CliError::Usage(format!("pair {},{} outside rank {}", pair[0], pair[1], sys.rank())));
            }
            Ok(sys.sigma(i, j).clone())
        }
    }
}

/// The document written by `braiding --out`.
pub fn braiding_document(pair: [usize; 2], map: &Map) -> Value {
    json!({
        "kind": "braiding",
        "pair": pair,
        "mode": mode_label(map.mode()),
        "dom": map.dom(),
        "map": map_value(map),
    })
}

pub fn braiding(doc: &Document, pair: [usize; 2]) -> CliResult<Outcome> {
    run("braiding", doc, || {
        let map = braiding_map(doc, pair)?;
        let output = vec![
            ("pair".to_string(), json!(pair)),
            ("mode".to_string(), json!(mode_label(map.mode()))),
            ("invertible".to_string(), json!(map.is_invertible())),
            ("map".to_string(), map_value(&map)),
        ];
        Ok((Report::new(), output))
    })
}

pub fn pi_report(doc: &Document, exponents: Exponents) -> CliResult<Report> {
    let base = as_base(doc)?;
    let reps: Vec<_> = doc.reps().into_iter().map(|(_, r)| r).collect();
    let sys = base.system_for(&reps)?;
    guard_system(&sys)?;
    let conn = base.connecting(&sys, Some(exponents))?;
    Ok(check_pi_condition(&sys, &conn)?)
}

pub fn pi_check(doc: &Document, exponents: Exponents) -> CliResult<Outcome> {
    run("pi-check", doc, || {
        let report = timed(|| pi_report(doc, exponents))?;
        let e = exponents;
        Ok((report, vec![("exponents".to_string(), json!([e.a1, e.a2, e.g1, e.g2]))]))
    })
}

fn perm_matrix(field: FieldSpec, n: usize, f: impl Fn(usize) -> usize) -> ExactMatrix {
    ExactMatrix::from_fn(field, n, n, |r, c| if r == f(c) { field.one() } else { field.zero() })
}

/// Adjoint objects used when a document has no representations of its own.
pub fn default_objects(base: &Base) -> CliResult<Vec<GydModule>> {
    let sys = Arc::new(build_system(base.system_kind())?);
    Ok(match base {
        Base::Shelf { x, .. } => vec![GradedActionRep::Shelf(ShelfRep::adjoint(x)).as_gyd_unchecked(sys)?],
        Base::Group { x, field } => {
            let nk = x.k().size();
            let rep = BantayRep {
                x: x.clone(),
                field: *field,
                grades: (0..nk).collect(),
                action: (0..x.g().size()).map(|g| perm_matrix(*field, nk, |k| x.act(k, g))).collect(),
            };
            vec![GradedActionRep::Group(rep).as_gyd_unchecked(sys)?]
        }
        Base::Hopf(h) => {
            let unit = hopf_unit_character(h).module(sys.clone())?;
            vec![enrich(&unit, &EnrichingStructure::from_c(sys)?)?]
        }
        Base::Leibniz(x) => [LeibnizRep::on_k(x), LeibnizRep::on_k_plus(x)]
            .iter()
            .map(|r| r.to_gyd(x, sys.clone()))
            .collect::<Result<_, _>>()?,
    })
}

fn context(base: &Base) -> ZContext<'_> {
    match base {
        Base::Group { x, field } => ZContext::Group(x, *field),
        Base::Shelf { x, .. } => ZContext::ShelfTilde(x),
        Base::Leibniz(x) => ZContext::Leibniz(x),
        Base::Hopf(h) => ZContext::Hopf(h),
    }
}

pub fn pentagon_report(doc: &Document) -> CliResult<Report> {
    let base = as_base(doc)?;
    let objects = match bundle_of(doc)? {
        Some(b) => b.members().iter().map(|(_, m)| m.clone()).collect(),
        None => default_objects(&base)?,
    };
    guard(objects.iter().map(|m| m.dim()))?;
    Ok(check_pentagon(context(&base), &objects)?)
}

pub fn pentagon(doc: &Document) -> CliResult<Outcome> {
    run("pentagon", doc, || Ok((timed(|| pentagon_report(doc))?, vec![])))
}

/// YD characters: one per invariant element for shelf bases, the unit
/// character otherwise.
pub fn character_list(base: &Base) -> CliResult<Vec<(String, YdCharacter)>> {
    let shelf = |x: &ShelfCrossedModule| -> Vec<(String, YdCharacter)> {
        enumerate_yd_characters(x)
            .into_iter()
            .map(|(r0, c)| (format!("point {r0}"), c))
            .collect()
    };
    Ok(match base {
        Base::Shelf { x, .. } => shelf(x),
        Base::Group { x, .. } => shelf(&from_group(x)?),
        Base::Hopf(h) => vec![("unit".to_string(), hopf_unit_character(h))],
        Base::Leibniz(x) => vec![("unit".to_string(), leibniz_unit_character(x))],
    })
}

pub fn characters(doc: &Document) -> CliResult<Outcome> {
    run("characters", doc, || {
        let base = as_base(doc)?;
        let sys = Arc::new(match &base {
            Base::Group { x, .. } => build_system(SystemKind::ShelfCrmod(&from_group(x)?, ShelfVariant::Coass))?,
            other => build_system(other.system_kind())?,
        });
        guard_system(&sys)?;
        let list = character_list(&base)?;
        let report = timed(|| {
            let mut r = Report::new();
            for (label, c) in &list {
                r.extend(check_gyd(&c.module(sys.clone())?).prefixed(&format!("character({label})")));
            }
            Ok(r)
        })?;
        let names: Vec<Value> = list.iter().map(|(l, _)| json!(l)).collect();
        Ok((
            report,
            vec![("count".to_string(), json!(list.len())), ("characters".to_string(), Value::Array(names))],
        ))
    })
}

/// The braid group operator on `strands` copies of one member or carrier.
pub fn braid_map(doc: &Document, strands: usize, word: &[i64], member: usize) -> CliResult<Map> {
    let (sigma, dim) = match bundle_of(doc)? {
        Some(b) => {
            let i = member.checked_sub(1).ok_or_else(|| CliError::Usage("members are one-based".into()))?;
            (gyd_braiding(&b, i, i)?, b.member(i)?.dim())
        }
        None => {
            let sys = system_of(doc)?;
            if sys.rank() != 1 {
                return Err(CliError::Usage("braid needs a rank-one system or a representation".into()));
            }
            (sys.sigma(0, 0).clone(), sys.dim(0))
        }
    };
    let limit = max_dim()?;
    let cube = limit.saturating_mul(limit).saturating_mul(limit);
    let total = (0..strands).try_fold(1usize, |acc, _| acc.checked_mul(dim));
    match total {
        Some(t) if t <= cube => {}
        _ => {
            return Err(Error::LimitExceeded {
                what: "braid carrier dimension (YBX_MAX_DIM cubed)",
                limit: cube,
                found: total.unwrap_or(usize::MAX),
            }
            .into())
        }
    }
    Ok(braid_operator(&sigma, dim, strands, word)?)
}

pub fn braid(doc: &Document, strands: usize, word: &[i64], member: usize) -> CliResult<Outcome> {
    run("braid", doc, || {
        let op = braid_map(doc, strands, word, member)?;
        let output = vec![
            ("strands".to_string(), json!(strands)),
            ("word".to_string(), json!(word)),
            ("identity".to_string(), json!(op.is_identity())),
            ("operator".to_string(), map_value(&op)),
        ];
        Ok((Report::new(), output))
    })
}

/// Every applicable check on the document.
pub fn report(doc: &Document) -> CliResult<Outcome> {
    run("report", doc, || {
        let mut r = timed(|| verify_report(doc))?;
        if !matches!(doc, Document::Representation { .. } | Document::Bundle { .. }) {
            r.extend(timed(|| ybe_report(doc, None))?.prefixed("ybe"));
        }
        Ok((r, vec![]))
    })
}

pub fn parse_word(text: &str) -> CliResult<Vec<i64>> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.replace('\u{2212}', "-")
                .parse::<i64>()
                .map_err(|_| CliError::Usage(format!("invalid braid letter {t:?}")))
        })
        .collect()
}

pub fn parse_list<const N: usize>(text: &str, what: &str) -> CliResult<[usize; N]> {
    let items: Vec<usize> = text
        .split(',')
        .map(|t| t.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|_| CliError::Usage(format!("{what} must be {N} comma-separated integers")))?;
    items
        .try_into()
        .map_err(|_| CliError::Usage(format!("{what} must be {N} comma-separated integers")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_and_list_parsing() {
        assert_eq!(parse_word("1 2 -1").unwrap(), vec![1, 2, -1]);
        assert_eq!(parse_word("1,\u{2212}2").unwrap(), vec![1, -2]);
        assert!(parse_word("1 x").is_err());
        assert_eq!(parse_list::<3>("1,2,3", "triple").unwrap(), [1, 2, 3]);
        assert!(parse_list::<2>("1,2,3", "pair").is_err());
    }
}
