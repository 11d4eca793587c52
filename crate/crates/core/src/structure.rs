//! Unital associative algebras and counital coassociative coalgebras given by
//! structure matrices.

use crate::error::{Error, Result};
use crate::map::{Map, Mode};
use crate::matrix::ExactMatrix;
use crate::pipeline::{Factor, Pipeline};
use crate::report::{CheckEntry, Report};

fn lin(m: &ExactMatrix) -> Map {
    Map::Linear(m.clone())
}

/// Checks `μ(μ ⊗ V) = μ(V ⊗ μ)` and `μ(ν ⊗ V) = V = μ(V ⊗ ν)` for
/// `μ : V ⊗ V → V`, `ν : 𝕜 → V`.
pub fn check_algebra(mu: &ExactMatrix, nu: &ExactMatrix) -> Result<Report> {
    let d = mu.rows();
    let f = mu.field();
    let mode = Mode::Linear(f);
    let (mu, nu) = (lin(mu), lin(nu));
    mu.check_shape("multiplication", d * d, d)?;
    nu.check_shape("unit", 1, d)?;
    nu.check_mode(mode)?;
    let mut report = Report::new();

    let left = Pipeline::new(mode, d * d * d)
        .then_tensor(&[Factor::Map(&mu), Factor::Id(d)])?
        .then(&mu)?;
    let right = Pipeline::new(mode, d * d * d)
        .then_tensor(&[Factor::Id(d), Factor::Map(&mu)])?
        .then(&mu)?;
    report.push(CheckEntry::from_comparison(
        "associativity",
        "μ(μ ⊗ V) = μ(V ⊗ μ)",
        &left.compare(&right)?,
        &[d, d, d],
    ));

    let id = Pipeline::new(mode, d);
    let left_unit = Pipeline::new(mode, d)
        .then_tensor(&[Factor::Map(&nu), Factor::Id(d)])?
        .then(&mu)?;
    let right_unit = Pipeline::new(mode, d)
        .then_tensor(&[Factor::Id(d), Factor::Map(&nu)])?
        .then(&mu)?;
    let mut cmp = left_unit.compare(&id)?;
    if cmp.holds() {
        cmp = right_unit.compare(&id)?;
    }
    report.push(CheckEntry::from_comparison("unit", "μ(ν ⊗ V) = V = μ(V ⊗ ν)", &cmp, &[d]));
    Ok(report)
}

/// Checks `(Δ ⊗ V)Δ = (V ⊗ Δ)Δ` and `(ε ⊗ V)Δ = V = (V ⊗ ε)Δ`.
pub fn check_coalgebra(delta: &ExactMatrix, eps: &ExactMatrix) -> Result<Report> {
    let d = delta.cols();
    let mode = Mode::Linear(delta.field());
    let (delta, eps) = (lin(delta), lin(eps));
    delta.check_shape("comultiplication", d, d * d)?;
    eps.check_shape("counit", d, 1)?;
    eps.check_mode(mode)?;
    let mut report = Report::new();

    let left = Pipeline::new(mode, d)
        .then(&delta)?
        .then_tensor(&[Factor::Map(&delta), Factor::Id(d)])?;
    let right = Pipeline::new(mode, d)
        .then(&delta)?
        .then_tensor(&[Factor::Id(d), Factor::Map(&delta)])?;
    report.push(CheckEntry::from_comparison(
        "coassociativity",
        "(Δ ⊗ V)Δ = (V ⊗ Δ)Δ",
        &left.compare(&right)?,
        &[d],
    ));

    let id = Pipeline::new(mode, d);
    let left_counit = Pipeline::new(mode, d)
        .then(&delta)?
        .then_tensor(&[Factor::Map(&eps), Factor::Id(d)])?;
    let right_counit = Pipeline::new(mode, d)
        .then(&delta)?
        .then_tensor(&[Factor::Id(d), Factor::Map(&eps)])?;
    let mut cmp = left_counit.compare(&id)?;
    if cmp.holds() {
        cmp = right_counit.compare(&id)?;
    }
    report.push(CheckEntry::from_comparison("counit", "(ε ⊗ V)Δ = V = (V ⊗ ε)Δ", &cmp, &[d]));
    Ok(report)
}

pub(crate) fn require_field(a: &ExactMatrix, b: &ExactMatrix) -> Result<()> {
    if a.field() != b.field() {
        Err(Error::FieldMismatch)
    } else {
        Ok(())
    }
}
