//! Leibniz algebras, their unitarizations, Leibniz crossed modules and their
//! representations.
//!
//! A bracket on a space of dimension `d` is a `d × d²` matrix with
//! `[e_i, e_j]` in column `i * d + j`. The unitarization `𝔨⁺ = 𝔨 ⊕ 𝕜·1`
//! appends the unit as the last basis vector. Actions are right actions
//! written as maps `M ⊗ 𝔤 → M`; the representation law reads
//! `m ∗ [g, g'] = (m ∗ g) ∗ g' − (m ∗ g') ∗ g`.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::braided::{sigma_coass, sigma_lei, BraidedSystem};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::gyd::GydModule;
use crate::map::{Map, Mode};
use crate::matrix::ExactMatrix;
use crate::pipeline::{Factor, Pipeline};
use crate::report::{CheckEntry, Report};

fn id(f: FieldSpec, n: usize) -> ExactMatrix {
    ExactMatrix::identity(f, n)
}

fn flip(f: FieldSpec, a: usize, b: usize) -> ExactMatrix {
    ExactMatrix::flip(f, a, b)
}

/// Entry comparing two dense maps column by column.
fn matrix_entry(id: &str, law: &str, lhs: &ExactMatrix, rhs: &ExactMatrix, dims: &[usize]) -> Result<CheckEntry> {
    Ok(CheckEntry::from_comparison(id, law, &lhs.compare_columns(rhs)?, dims))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeibnizAlgebra {
    bracket: ExactMatrix,
}

impl LeibnizAlgebra {
    /// Shape-checked constructor from a `d × d²` bracket matrix.
    pub fn new(bracket: ExactMatrix) -> Result<Self> {
        let d = bracket.rows();
        if d == 0 || bracket.cols() != d * d {
            return Err(Error::dims("bracket columns", d * d, bracket.cols()));
        }
        Ok(LeibnizAlgebra { bracket })
    }

    /// `[e_i, e_j] = Σ c e_k` for every `(i, j, k, c)`.
    pub fn from_structure_constants(field: FieldSpec, dim: usize, constants: &[(usize, usize, usize, Scalar)]) -> Result<Self> {
        let mut b = ExactMatrix::zeros(field, dim, dim * dim);
        for (i, j, k, c) in constants {
            if *i >= dim || *j >= dim || *k >= dim {
                return Err(Error::malformed("structure constant index out of range"));
            }
            let c = field.normalize(c.clone())?;
            b.accumulate(*k, i * dim + j, &c);
        }
        Self::new(b)
    }

    /// The two-dimensional algebra on `x, y` with `[x, x] = y` and all other
    /// brackets zero.
    pub fn l2(field: FieldSpec) -> Self {
        Self::from_structure_constants(field, 2, &[(0, 0, 1, field.one())]).expect("well-shaped")
    }

    pub fn abelian(field: FieldSpec, dim: usize) -> Self {
        Self::new(ExactMatrix::zeros(field, dim, dim * dim)).expect("well-shaped")
    }

    /// `𝔰𝔩₂` on `e, f, h` with `[e, f] = h`, `[h, e] = 2e`, `[h, f] = -2f`.
    pub fn sl2(field: FieldSpec) -> Self {
        let n = |k: i64| field.from_i64(k);
        Self::from_structure_constants(
            field,
            3,
            &[
                (0, 1, 2, n(1)),
                (1, 0, 2, n(-1)),
                (2, 0, 0, n(2)),
                (0, 2, 0, n(-2)),
                (2, 1, 1, n(-2)),
                (1, 2, 1, n(2)),
            ],
        )
        .expect("well-shaped")
    }

    pub fn field(&self) -> FieldSpec {
        self.bracket.field()
    }

    pub fn dim(&self) -> usize {
        self.bracket.rows()
    }

    pub fn bracket(&self) -> &ExactMatrix {
        &self.bracket
    }
}

/// Checks `[v, [w, u]] = [[v, w], u] − [[v, u], w]` on basis triples.
pub fn check_leibniz(l: &LeibnizAlgebra) -> Report {
    let (f, d) = (l.field(), l.dim());
    let b = l.bracket();
    let inner = || -> Result<CheckEntry> {
        let lhs = b.compose(&id(f, d).kron(b)?)?;
        let first = b.compose(&b.kron(&id(f, d))?)?;
        let second = first.compose(&id(f, d).kron(&flip(f, d, d))?)?;
        matrix_entry(
            "leibniz-identity",
            "[v, [w, u]] = [[v, w], u] − [[v, u], w]",
            &lhs,
            &first.sub(&second)?,
            &[d, d, d],
        )
    };
    Report::single(inner().expect("shapes agree"))
}

/// `𝔨⁺ = 𝔨 ⊕ 𝕜·1` with `[k, 1] = [1, k] = [1, 1] = 0`, the coalgebra
/// `Δ(k) = k ⊗ 1 + 1 ⊗ k`, `Δ(1) = 1 ⊗ 1`, and counit `ε(1) = 1`, `ε(k) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitalLeibnizAlgebra {
    base: LeibnizAlgebra,
    bracket: ExactMatrix,
}

pub fn unitarize(l: &LeibnizAlgebra) -> UnitalLeibnizAlgebra {
    let (f, d) = (l.field(), l.dim());
    let big = d + 1;
    let mut bracket = ExactMatrix::zeros(f, big, big * big);
    for i in 0..d {
        for j in 0..d {
            for (k, c) in l.bracket().column_sparse(i * d + j) {
                bracket.accumulate(k, i * big + j, &c);
            }
        }
    }
    UnitalLeibnizAlgebra {
        base: l.clone(),
        bracket,
    }
}

impl UnitalLeibnizAlgebra {
    pub fn base(&self) -> &LeibnizAlgebra {
        &self.base
    }

    pub fn field(&self) -> FieldSpec {
        self.base.field()
    }

    pub fn dim(&self) -> usize {
        self.base.dim() + 1
    }

    /// Index of the adjoined unit.
    pub fn unit(&self) -> usize {
        self.base.dim()
    }

    pub fn bracket(&self) -> &ExactMatrix {
        &self.bracket
    }

    pub fn nu(&self) -> ExactMatrix {
        ExactMatrix::basis_vector(self.field(), self.dim(), self.unit())
    }

    pub fn eps(&self) -> ExactMatrix {
        self.nu().transpose()
    }

    pub fn delta(&self) -> ExactMatrix {
        let (f, n, u) = (self.field(), self.dim(), self.unit());
        let mut m = ExactMatrix::zeros(f, n * n, n);
        for k in 0..u {
            m.accumulate(k * n + u, k, &f.one());
            m.accumulate(u * n + k, k, &f.one());
        }
        m.accumulate(u * n + u, u, &f.one());
        m
    }

    /// The unitarized adjoint action `a · b`: `[a, b]` on `𝔨`, `a · 1 = a`,
    /// `1 · b = ε(b) 1`.
    pub fn adjoint_action(&self) -> ExactMatrix {
        let (f, n, u) = (self.field(), self.dim(), self.unit());
        let mut m = self.bracket.clone();
        for a in 0..n {
            m.accumulate(a, a * n + u, &f.one());
        }
        m
    }

    pub fn sigma_lei(&self) -> ExactMatrix {
        sigma_lei(&self.bracket, self.unit()).expect("square bracket")
    }
}

/// `(𝔨, 𝔤, π, ·)`; `action[i]` is the matrix of `k ↦ k · g_i` on `𝔨`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeibnizCrossedModule {
    k: LeibnizAlgebra,
    g: LeibnizAlgebra,
    pi: ExactMatrix,
    action: Vec<ExactMatrix>,
}

impl LeibnizCrossedModule {
    pub fn new(k: LeibnizAlgebra, g: LeibnizAlgebra, pi: ExactMatrix, action: Vec<ExactMatrix>) -> Result<Self> {
        let f = k.field();
        if g.field() != f || pi.field() != f || action.iter().any(|a| a.field() != f) {
            return Err(Error::FieldMismatch);
        }
        let (dk, dg) = (k.dim(), g.dim());
        if (pi.rows(), pi.cols()) != (dg, dk) {
            return Err(Error::dims("crossed module map", dg * dk, pi.rows() * pi.cols()));
        }
        if action.len() != dg {
            return Err(Error::dims("number of action matrices", dg, action.len()));
        }
        if let Some(a) = action.iter().find(|a| (a.rows(), a.cols()) != (dk, dk)) {
            return Err(Error::dims("action matrix", dk * dk, a.rows() * a.cols()));
        }
        Ok(LeibnizCrossedModule { k, g, pi, action })
    }

    /// `(𝔨, 𝔨, Id, adjoint)` with `k · g = [k, g]`.
    pub fn identity(l: &LeibnizAlgebra) -> Self {
        let (f, d) = (l.field(), l.dim());
        let action = (0..d)
            .map(|i| ExactMatrix::from_fn(f, d, d, |r, c| l.bracket().get(r, c * d + i).clone()))
            .collect();
        Self::new(l.clone(), l.clone(), id(f, d), action).expect("well-shaped")
    }

    pub fn k(&self) -> &LeibnizAlgebra {
        &self.k
    }

    pub fn g(&self) -> &LeibnizAlgebra {
        &self.g
    }

    pub fn pi(&self) -> &ExactMatrix {
        &self.pi
    }

    pub fn action_matrices(&self) -> &[ExactMatrix] {
        &self.action
    }

    pub fn field(&self) -> FieldSpec {
        self.k.field()
    }

    /// `𝔨 ⊗ 𝔤 → 𝔨`.
    pub fn action_map(&self) -> ExactMatrix {
        stack_action(&self.action, self.k.dim())
    }

    pub fn k_plus(&self) -> UnitalLeibnizAlgebra {
        unitarize(&self.k)
    }

    pub fn g_plus(&self) -> UnitalLeibnizAlgebra {
        unitarize(&self.g)
    }

    /// `π` extended by `π(1) = 1`.
    pub fn pi_plus(&self) -> ExactMatrix {
        let f = self.field();
        let (dk, dg) = (self.k.dim(), self.g.dim());
        let mut m = ExactMatrix::zeros(f, dg + 1, dk + 1);
        for r in 0..dg {
            for c in 0..dk {
                m.accumulate(r, c, self.pi.get(r, c));
            }
        }
        m.accumulate(dg, dk, &f.one());
        m
    }

    /// `𝔨⁺ ⊗ 𝔤⁺ → 𝔨⁺`: the action on `𝔨`, `k · 1 = k`, `1 · g = 0`, `1 · 1 = 1`.
    pub fn action_plus(&self) -> ExactMatrix {
        let f = self.field();
        let (dk, dg) = (self.k.dim(), self.g.dim());
        let (nk, ng) = (dk + 1, dg + 1);
        let mut m = ExactMatrix::zeros(f, nk, nk * ng);
        for (i, a) in self.action.iter().enumerate() {
            for r in 0..dk {
                for c in 0..dk {
                    m.accumulate(r, c * ng + i, a.get(r, c));
                }
            }
        }
        for k in 0..nk {
            m.accumulate(k, k * ng + dg, &f.one());
        }
        m
    }

    /// The rank-two system `(𝔨⁺, 𝔤⁺)`.
    pub fn system(&self) -> Result<BraidedSystem> {
        let (kp, gp) = (self.k_plus(), self.g_plus());
        let cc = sigma_coass(&kp.delta(), &kp.eps())?;
        let aa = gp.sigma_lei();
        let ca = self.sigma_ca()?;
        BraidedSystem::rank2(kp.dim(), gp.dim(), cc.into(), ca.into(), aa.into())
    }

    /// `σ_CA(k ⊗ g) = g₍₁₎ ⊗ k · g₍₂₎` as `(A ⊗ act)(c_{C,A} ⊗ A)(C ⊗ Δ)`.
    pub fn sigma_ca(&self) -> Result<ExactMatrix> {
        let f = self.field();
        let mode = Mode::Linear(f);
        let gp = self.g_plus();
        let (nk, ng) = (self.k.dim() + 1, gp.dim());
        let delta = Map::Linear(gp.delta());
        let act = Map::Linear(self.action_plus());
        let c = Map::flip(mode, nk, ng);
        let p = Pipeline::new(mode, nk * ng)
            .then_tensor(&[Factor::Id(nk), Factor::Map(&delta)])?
            .then_tensor(&[Factor::Map(&c), Factor::Id(ng)])?
            .then_tensor(&[Factor::Id(ng), Factor::Map(&act)])?;
        Ok(p.materialize().as_linear().expect("linear").clone())
    }
}

/// Stacks per-generator matrices `A_i` into the map `M ⊗ 𝔤 → M`.
fn stack_action(action: &[ExactMatrix], dim: usize) -> ExactMatrix {
    let dg = action.len();
    let f = action.first().map_or(FieldSpec::Rationals, ExactMatrix::field);
    let mut m = ExactMatrix::zeros(f, dim, dim * dg);
    for (i, a) in action.iter().enumerate() {
        for r in 0..dim {
            for c in 0..dim {
                m.accumulate(r, c * dg + i, a.get(r, c));
            }
        }
    }
    m
}

/// Checks `m ∗ [g, g'] = (m ∗ g) ∗ g' − (m ∗ g') ∗ g` for `act : M ⊗ 𝔤 → M`.
fn representation_entry(act: &ExactMatrix, g: &LeibnizAlgebra, dim: usize) -> Result<CheckEntry> {
    let (f, dg) = (g.field(), g.dim());
    let lhs = act.compose(&id(f, dim).kron(g.bracket())?)?;
    let twice = act.compose(&act.kron(&id(f, dg))?)?;
    let swapped = twice.compose(&id(f, dim).kron(&flip(f, dg, dg))?)?;
    matrix_entry(
        "representation",
        "m ∗ [g, g'] = (m ∗ g) ∗ g' − (m ∗ g') ∗ g",
        &lhs,
        &twice.sub(&swapped)?,
        &[dim, dg, dg],
    )
}

pub fn check_leibniz_crossed_module(x: &LeibnizCrossedModule) -> Report {
    let inner = || -> Result<Report> {
        let f = x.field();
        let (dk, dg) = (x.k.dim(), x.g.dim());
        let (bk, bg, pi) = (x.k.bracket(), x.g.bracket(), &x.pi);
        let act = x.action_map();
        let mut report = Report::new();
        report.extend(check_leibniz(&x.k).prefixed("k"));
        report.extend(check_leibniz(&x.g).prefixed("g"));
        report.push(matrix_entry(
            "pi-morphism",
            "π[k, k'] = [π k, π k']",
            &pi.compose(bk)?,
            &bg.compose(&pi.kron(pi)?)?,
            &[dk, dk],
        )?);
        report.push(representation_entry(&act, &x.g, dk)?);
        let lhs = act.compose(&bk.kron(&id(f, dg))?)?;
        let left = bk
            .compose(&act.kron(&id(f, dk))?)?
            .compose(&id(f, dk).kron(&flip(f, dk, dg))?)?;
        let right = bk.compose(&id(f, dk).kron(&act)?)?;
        report.push(matrix_entry(
            "derivation",
            "[k, k'] · g = [k · g, k'] + [k, k' · g]",
            &lhs,
            &left.add(&right)?,
            &[dk, dk, dg],
        )?);
        report.push(matrix_entry(
            "peiffer",
            "k · π(k') = [k, k']",
            &act.compose(&id(f, dk).kron(pi)?)?,
            bk,
            &[dk, dk],
        )?);
        report.push(matrix_entry(
            "equivariance",
            "π(k · g) = [π(k), g]",
            &pi.compose(&act)?,
            &bg.compose(&pi.kron(&id(f, dg))?)?,
            &[dk, dg],
        )?);
        Ok(report)
    };
    inner().expect("shapes validated at construction")
}

/// The identities of the unitarized data: `k · π(k') = k · k'`,
/// `π(k · g) = π(k) · g`, `π(k · k') = π(k) · π(k')`, `Δ π = (π ⊗ π) Δ`.
pub fn check_unitarized_identities(x: &LeibnizCrossedModule) -> Report {
    let inner = || -> Result<Report> {
        let f = x.field();
        let (kp, gp) = (x.k_plus(), x.g_plus());
        let (nk, ng) = (kp.dim(), gp.dim());
        let (pi, act) = (x.pi_plus(), x.action_plus());
        let (adk, adg) = (kp.adjoint_action(), gp.adjoint_action());
        let mut report = Report::new();
        report.push(matrix_entry(
            "action-through-pi",
            "k · π(k') = k · k'",
            &act.compose(&id(f, nk).kron(&pi)?)?,
            &adk,
            &[nk, nk],
        )?);
        report.push(matrix_entry(
            "pi-of-action",
            "π(k · g) = π(k) · g",
            &pi.compose(&act)?,
            &adg.compose(&pi.kron(&id(f, ng))?)?,
            &[nk, ng],
        )?);
        report.push(matrix_entry(
            "pi-of-product",
            "π(k · k') = π(k) · π(k')",
            &pi.compose(&adk)?,
            &adg.compose(&pi.kron(&pi)?)?,
            &[nk, nk],
        )?);
        report.push(matrix_entry(
            "pi-comultiplicative",
            "Δ π = (π ⊗ π) Δ",
            &gp.delta().compose(&pi)?,
            &pi.kron(&pi)?.compose(&kp.delta())?,
            &[nk],
        )?);
        Ok(report)
    };
    inner().expect("shapes agree")
}

/// A representation of a Leibniz crossed module: right `𝔤`-action matrices
/// on `M` and `δ₀ : M → M ⊗ 𝔨`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeibnizRep {
    dim: usize,
    action: Vec<ExactMatrix>,
    delta0: ExactMatrix,
}

impl LeibnizRep {
    pub fn new(x: &LeibnizCrossedModule, dim: usize, action: Vec<ExactMatrix>, delta0: ExactMatrix) -> Result<Self> {
        let f = x.field();
        let (dk, dg) = (x.k.dim(), x.g.dim());
        if action.len() != dg {
            return Err(Error::dims("number of action matrices", dg, action.len()));
        }
        if action.iter().chain([&delta0]).any(|a| a.field() != f) {
            return Err(Error::FieldMismatch);
        }
        if let Some(a) = action.iter().find(|a| (a.rows(), a.cols()) != (dim, dim)) {
            return Err(Error::dims("action matrix", dim * dim, a.rows() * a.cols()));
        }
        if (delta0.rows(), delta0.cols()) != (dim * dk, dim) {
            return Err(Error::dims("coaction rows", dim * dk, delta0.rows()));
        }
        Ok(LeibnizRep { dim, action, delta0 })
    }

    /// `M = 𝔨` with `m ∗ g = m · g` and `δ₀ = 0`.
    pub fn on_k(x: &LeibnizCrossedModule) -> Self {
        let (f, dk) = (x.field(), x.k.dim());
        Self::new(x, dk, x.action.clone(), ExactMatrix::zeros(f, dk * dk, dk)).expect("well-shaped")
    }

    /// `M = 𝔨⁺` with the unitarized action (`1 ∗ g = 0`), `δ₀(k) = 1 ⊗ k`
    /// and `δ₀(1) = 0`.
    pub fn on_k_plus(x: &LeibnizCrossedModule) -> Self {
        let (f, dk, dg) = (x.field(), x.k.dim(), x.g.dim());
        let n = dk + 1;
        let plus = x.action_plus();
        let action = (0..dg)
            .map(|i| ExactMatrix::from_fn(f, n, n, |r, c| plus.get(r, c * (dg + 1) + i).clone()))
            .collect();
        let mut delta0 = ExactMatrix::zeros(f, n * dk, n);
        for k in 0..dk {
            delta0.accumulate(dk * dk + k, k, &f.one());
        }
        Self::new(x, n, action, delta0).expect("well-shaped")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action_matrices(&self) -> &[ExactMatrix] {
        &self.action
    }

    pub fn delta0(&self) -> &ExactMatrix {
        &self.delta0
    }

    /// `M ⊗ 𝔤 → M`.
    pub fn action_map(&self) -> ExactMatrix {
        let mut m = stack_action(&self.action, self.dim);
        if self.action.is_empty() {
            m = ExactMatrix::zeros(self.delta0.field(), self.dim, 0);
        }
        m
    }

    /// `M ⊗ 𝔤⁺ → M` with `m ∗ 1 = m`.
    pub fn action_plus(&self) -> ExactMatrix {
        let f = self.delta0.field();
        let (d, dg) = (self.dim, self.action.len());
        let ng = dg + 1;
        let mut m = ExactMatrix::zeros(f, d, d * ng);
        for (i, a) in self.action.iter().enumerate() {
            for r in 0..d {
                for c in 0..d {
                    m.accumulate(r, c * ng + i, a.get(r, c));
                }
            }
        }
        for c in 0..d {
            m.accumulate(c, c * ng + dg, &f.one());
        }
        m
    }

    /// `δ = δ₀ + (m ↦ m ⊗ 1) : M → M ⊗ 𝔨⁺`.
    pub fn delta_plus(&self, dk: usize) -> ExactMatrix {
        let f = self.delta0.field();
        let nk = dk + 1;
        let mut m = ExactMatrix::zeros(f, self.dim * nk, self.dim);
        for c in 0..self.dim {
            for (r, s) in self.delta0.column_sparse(c) {
                m.accumulate((r / dk) * nk + r % dk, c, &s);
            }
            m.accumulate(c * nk + dk, c, &f.one());
        }
        m
    }

    /// The generalized Yetter-Drinfeld module over the system of `x`.
    pub fn to_gyd(&self, x: &LeibnizCrossedModule, system: Arc<BraidedSystem>) -> Result<GydModule> {
        GydModule::new(
            system,
            self.dim,
            Map::Linear(self.action_plus()),
            Map::Linear(self.delta_plus(x.k.dim())),
        )
    }
}

pub fn check_leibniz_rep(x: &LeibnizCrossedModule, rep: &LeibnizRep) -> Result<Report> {
    let f = x.field();
    let (dk, dg, d) = (x.k.dim(), x.g.dim(), rep.dim);
    if rep.action.len() != dg || rep.delta0.rows() != d * dk {
        return Err(Error::malformed("representation does not match the crossed module"));
    }
    let act = rep.action_map();
    let d0 = &rep.delta0;
    let mut report = Report::new();
    report.push(representation_entry(&act, &x.g, d)?);
    let square = d0.kron(&id(f, dk))?.compose(d0)?;
    report.push(matrix_entry(
        "square-zero",
        "(δ₀ ⊗ 𝔨) δ₀ = 0",
        &square,
        &ExactMatrix::zeros(f, d * dk * dk, d),
        &[d],
    )?);
    let lhs = d0.compose(&act)?;
    let through_k = id(f, d).kron(&x.action_map())?.compose(&d0.kron(&id(f, dg))?)?;
    let through_m = act
        .kron(&id(f, dk))?
        .compose(&id(f, d).kron(&flip(f, dk, dg))?)?
        .compose(&d0.kron(&id(f, dg))?)?;
    report.push(matrix_entry(
        "equivariance",
        "δ₀(m ∗ g) = δ₀(m) ∗ g",
        &lhs,
        &through_k.add(&through_m)?,
        &[d, dg],
    )?);
    Ok(report)
}

/// The relations satisfied by a generalized Yetter-Drinfeld module over the
/// system of `x`, written with `f(m) = ε(m₍₁₎) m₍₀₎`:
/// `(m ∗ g') ∗ g = (m ∗ g₍₁₎) ∗ (g' · g₍₂₎)`, `δ(m ∗ g) = m₍₀₎ ∗ g₍₁₎ ⊗ m₍₁₎ · g₍₂₎`,
/// `m₍₀₎ ⊗ m₍₁₎ ⊗ m₍₂₎ = f(m₍₀₎) ⊗ Δ(m₍₁₎)`, `(m ∗ 1) ∗ g = (m ∗ g) ∗ 1`,
/// `f(m)₍₀₎ ⊗ f(m)₍₁₎ = f(m₍₀₎) ⊗ m₍₁₎`.
pub fn check_gyd_relations(x: &LeibnizCrossedModule, m: &GydModule) -> Result<Report> {
    let f = x.field();
    let mode = Mode::Linear(f);
    let (kp, gp) = (x.k_plus(), x.g_plus());
    let (nk, ng, d) = (kp.dim(), gp.dim(), m.dim());
    if m.system().dims() != [nk, ng] {
        return Err(Error::malformed("module is not over the system of this crossed module"));
    }
    let (rho, delta) = (m.rho(), m.delta());
    let lin = |a: ExactMatrix| Map::Linear(a);
    let (delta_a, delta_c) = (lin(gp.delta()), lin(kp.delta()));
    let (adj_a, act) = (lin(gp.adjoint_action()), lin(x.action_plus()));
    let flip_aa = Map::flip(mode, ng, ng);
    let flip_ca = Map::flip(mode, nk, ng);
    let eps_c = lin(kp.eps());
    let nu_a = lin(gp.nu());
    let fmap = Pipeline::new(mode, d)
        .then(delta)?
        .then_tensor(&[Factor::Id(d), Factor::Map(&eps_c)])?
        .materialize();
    let unit_act = Pipeline::new(mode, d)
        .then_tensor(&[Factor::Id(d), Factor::Map(&nu_a)])?
        .then(rho)?
        .materialize();
    let mut report = Report::new();

    let lhs = Pipeline::new(mode, d * ng * ng)
        .then_tensor(&[Factor::Map(rho), Factor::Id(ng)])?
        .then(rho)?;
    let rhs = Pipeline::new(mode, d * ng * ng)
        .then_tensor(&[Factor::Id(d), Factor::Id(ng), Factor::Map(&delta_a)])?
        .then_tensor(&[Factor::Id(d), Factor::Map(&flip_aa), Factor::Id(ng)])?
        .then_tensor(&[Factor::Id(d), Factor::Id(ng), Factor::Map(&adj_a)])?
        .then_tensor(&[Factor::Map(rho), Factor::Id(ng)])?
        .then(rho)?;
    report.push(CheckEntry::from_comparison(
        "action-relation",
        "(m ∗ g') ∗ g = (m ∗ g₍₁₎) ∗ (g' · g₍₂₎)",
        &lhs.compare(&rhs)?,
        &[d, ng, ng],
    ));

    let lhs = Pipeline::new(mode, d * ng).then(rho)?.then(delta)?;
    let rhs = Pipeline::new(mode, d * ng)
        .then_tensor(&[Factor::Map(delta), Factor::Id(ng)])?
        .then_tensor(&[Factor::Id(d), Factor::Id(nk), Factor::Map(&delta_a)])?
        .then_tensor(&[Factor::Id(d), Factor::Map(&flip_ca), Factor::Id(ng)])?
        .then_tensor(&[Factor::Map(rho), Factor::Map(&act)])?;
    report.push(CheckEntry::from_comparison(
        "coaction-of-action",
        "δ(m ∗ g) = m₍₀₎ ∗ g₍₁₎ ⊗ m₍₁₎ · g₍₂₎",
        &lhs.compare(&rhs)?,
        &[d, ng],
    ));

    let lhs = Pipeline::new(mode, d)
        .then(delta)?
        .then_tensor(&[Factor::Map(delta), Factor::Id(nk)])?;
    let rhs = Pipeline::new(mode, d)
        .then(delta)?
        .then_tensor(&[Factor::Map(&fmap), Factor::Map(&delta_c)])?;
    report.push(CheckEntry::from_comparison(
        "iterated-coaction",
        "m₍₀₎ ⊗ m₍₁₎ ⊗ m₍₂₎ = f(m₍₀₎) ⊗ Δ(m₍₁₎)",
        &lhs.compare(&rhs)?,
        &[d],
    ));

    let lhs = Pipeline::new(mode, d * ng)
        .then_tensor(&[Factor::Map(&unit_act), Factor::Id(ng)])?
        .then(rho)?;
    let rhs = Pipeline::new(mode, d * ng).then(rho)?.then(&unit_act)?;
    report.push(CheckEntry::from_comparison(
        "unit-action-commutes",
        "(m ∗ 1) ∗ g = (m ∗ g) ∗ 1",
        &lhs.compare(&rhs)?,
        &[d, ng],
    ));

    let lhs = Pipeline::new(mode, d).then(&fmap)?.then(delta)?;
    let rhs = Pipeline::new(mode, d)
        .then(delta)?
        .then_tensor(&[Factor::Map(&fmap), Factor::Id(nk)])?;
    report.push(CheckEntry::from_comparison(
        "counit-part",
        "f(m)₍₀₎ ⊗ f(m)₍₁₎ = f(m₍₀₎) ⊗ m₍₁₎",
        &lhs.compare(&rhs)?,
        &[d],
    ));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn standard_algebras_are_leibniz() {
        assert!(check_leibniz(&LeibnizAlgebra::l2(Q)).passed());
        assert!(check_leibniz(&LeibnizAlgebra::sl2(Q)).passed());
        assert!(check_leibniz(&LeibnizAlgebra::abelian(Q, 3)).passed());
    }

    #[test]
    fn corrupted_bracket_fails() {
        // [x, y] = x together with [x, x] = y breaks the identity on (x, x, y)
        let l = LeibnizAlgebra::from_structure_constants(Q, 2, &[(0, 0, 1, Q.one()), (0, 1, 0, Q.one())]).unwrap();
        let report = check_leibniz(&l);
        assert!(!report.passed());
    }

    #[test]
    fn unitarization_of_l2() {
        let u = unitarize(&LeibnizAlgebra::l2(Q));
        assert_eq!(u.dim(), 3);
        assert_eq!(u.unit(), 2);
        assert!(u.bracket().get(1, 0).is_one());
        assert!(u.bracket().column_sparse(2).is_empty());
        let coalgebra = crate::structure::check_coalgebra(&u.delta(), &u.eps()).unwrap();
        assert!(coalgebra.passed());
    }

    #[test]
    fn identity_crossed_modules() {
        for l in [LeibnizAlgebra::l2(Q), LeibnizAlgebra::sl2(Q)] {
            let x = LeibnizCrossedModule::identity(&l);
            assert!(check_leibniz_crossed_module(&x).passed());
            assert!(check_unitarized_identities(&x).passed());
        }
    }

    #[test]
    fn zero_map_crossed_module() {
        let k = LeibnizAlgebra::abelian(Q, 2);
        let g = LeibnizAlgebra::abelian(Q, 1);
        let a = ExactMatrix::from_ints(Q, 2, 2, &[1, 2, 0, 3]).unwrap();
        let x = LeibnizCrossedModule::new(k, g, ExactMatrix::zeros(Q, 1, 2), vec![a]).unwrap();
        assert!(check_leibniz_crossed_module(&x).passed());
    }

    #[test]
    fn mixed_component_matches_explicit_formula() {
        let x = LeibnizCrossedModule::identity(&LeibnizAlgebra::sl2(Q));
        let (nk, ng) = (4, 4);
        let act = x.action_plus();
        let mut expected = ExactMatrix::zeros(Q, ng * nk, nk * ng);
        for k in 0..nk {
            for g in 0..ng {
                let col = k * ng + g;
                expected.accumulate(g * nk + k, col, &Q.one());
                if k < 3 && g < 3 {
                    for (r, s) in act.column_sparse(col) {
                        expected.accumulate(3 * nk + r, col, &s);
                    }
                }
            }
        }
        assert_eq!(x.sigma_ca().unwrap(), expected);
    }

    #[test]
    fn regular_reps_pass() {
        let x = LeibnizCrossedModule::identity(&LeibnizAlgebra::l2(Q));
        assert!(check_leibniz_rep(&x, &LeibnizRep::on_k(&x)).unwrap().passed());
        assert!(check_leibniz_rep(&x, &LeibnizRep::on_k_plus(&x)).unwrap().passed());
        let bad = LeibnizRep::new(&x, 2, LeibnizRep::on_k(&x).action.clone(), {
            let mut d0 = ExactMatrix::zeros(Q, 4, 2);
            d0.set(0, 0, Q.one()).unwrap();
            d0
        })
        .unwrap();
        assert!(!check_leibniz_rep(&x, &bad).unwrap().passed());
    }
}
