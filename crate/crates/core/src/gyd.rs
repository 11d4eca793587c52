//! Generalized Yetter-Drinfeld modules over rank-two systems `(C, A)`, the
//! connecting-map condition, the braiding `σ_gYD` and braid words.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::braided::{build_system, check_braided_module, BraidedSystem, ModuleSide, ShelfVariant, SystemKind};
use crate::crossed::ShelfCrossedModule;
use crate::error::{require, Error, Result};
use crate::field::FieldSpec;
use crate::group::GroupCrossedModule;
use crate::leibniz::{check_leibniz_rep, LeibnizCrossedModule, LeibnizRep};
use crate::map::{Map, Mode};
use crate::matrix::ExactMatrix;
use crate::pipeline::{Factor, Pipeline};
use crate::report::{triple_id, CheckEntry, Report};
use crate::setfn::SetFn;

/// `(M, ρ : M ⊗ A → M, δ : M → M ⊗ C)` over a rank-two system whose
/// object 0 is `C` and object 1 is `A`.
#[derive(Clone, Debug)]
pub struct GydModule {
    system: Arc<BraidedSystem>,
    dim: usize,
    rho: Map,
    delta: Map,
}

impl GydModule {
    /// Shape and mode checks only; see [`check_gyd`] for the axioms.
    pub fn new(system: Arc<BraidedSystem>, dim: usize, rho: Map, delta: Map) -> Result<Self> {
        if system.rank() != 2 {
            return Err(Error::dims("system rank", 2, system.rank()));
        }
        if dim == 0 {
            return Err(Error::malformed("empty carrier"));
        }
        let (dc, da) = (system.dim(0), system.dim(1));
        rho.check_mode(system.mode())?;
        delta.check_mode(system.mode())?;
        rho.check_shape("action", dim * da, dim)?;
        delta.check_shape("coaction", dim, dim * dc)?;
        Ok(GydModule { system, dim, rho, delta })
    }

    pub fn system(&self) -> &Arc<BraidedSystem> {
        &self.system
    }

    pub fn mode(&self) -> Mode {
        self.system.mode()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rho(&self) -> &Map {
        &self.rho
    }

    pub fn delta(&self) -> &Map {
        &self.delta
    }

    pub fn dim_c(&self) -> usize {
        self.system.dim(0)
    }

    pub fn dim_a(&self) -> usize {
        self.system.dim(1)
    }
}

/// The braided module law over `(A; σ_AA)`, the braided comodule law over
/// `(C; σ_CC)` and the compatibility `δρ = (ρ ⊗ C)(M ⊗ σ_CA)(δ ⊗ A)`.
pub fn check_gyd(m: &GydModule) -> Report {
    let inner = || -> Result<Report> {
        let sys = &m.system;
        let (d, dc, da, mode) = (m.dim, m.dim_c(), m.dim_a(), m.mode());
        let mut report = Report::new();
        let a_sys = BraidedSystem::rank1(da, sys.sigma(1, 1).clone())?;
        let c_sys = BraidedSystem::rank1(dc, sys.sigma(0, 0).clone())?;
        let mut action = check_braided_module(&a_sys, d, ModuleSide::Action, core::slice::from_ref(&m.rho))?;
        action.entries[0].id = String::from("braided-action");
        let mut coaction = check_braided_module(&c_sys, d, ModuleSide::Coaction, core::slice::from_ref(&m.delta))?;
        coaction.entries[0].id = String::from("braided-coaction");
        report.extend(action);
        report.extend(coaction);
        let lhs = Pipeline::new(mode, d * da).then(&m.rho)?.then(&m.delta)?;
        let rhs = Pipeline::new(mode, d * da)
            .then_tensor(&[Factor::Map(&m.delta), Factor::Id(da)])?
            .then_tensor(&[Factor::Id(d), Factor::Map(sys.sigma(0, 1))])?
            .then_tensor(&[Factor::Map(&m.rho), Factor::Id(dc)])?;
        report.push(CheckEntry::from_comparison(
            "yd-compatibility",
            "δρ = (ρ ⊗ C)(M ⊗ σ_CA)(δ ⊗ A)",
            &lhs.compare(&rhs)?,
            &[d, da],
        ));
        Ok(report)
    };
    inner().expect("shapes validated at construction")
}

/// A module map `f : M → M'` between modules over the same system commuting
/// with both actions and both coactions.
pub fn check_gyd_morphism(f: &Map, m: &GydModule, n: &GydModule) -> Result<Report> {
    if !Arc::ptr_eq(&m.system, &n.system) && *m.system != *n.system {
        return Err(Error::malformed("modules over different systems"));
    }
    f.check_mode(m.mode())?;
    f.check_shape("module map", m.dim, n.dim)?;
    let (mode, dc, da) = (m.mode(), m.dim_c(), m.dim_a());
    let mut report = Report::new();
    let lhs = Pipeline::new(mode, m.dim * da).then(&m.rho)?.then(f)?;
    let rhs = Pipeline::new(mode, m.dim * da)
        .then_tensor(&[Factor::Map(f), Factor::Id(da)])?
        .then(&n.rho)?;
    report.push(CheckEntry::from_comparison(
        "morphism-action",
        "f ρ = ρ' (f ⊗ A)",
        &lhs.compare(&rhs)?,
        &[m.dim, da],
    ));
    let lhs = Pipeline::new(mode, m.dim)
        .then(&m.delta)?
        .then_tensor(&[Factor::Map(f), Factor::Id(dc)])?;
    let rhs = Pipeline::new(mode, m.dim).then(f)?.then(&n.delta)?;
    report.push(CheckEntry::from_comparison(
        "morphism-coaction",
        "(f ⊗ C) δ = δ' f",
        &lhs.compare(&rhs)?,
        &[m.dim],
    ));
    Ok(report)
}

/// Largest exponent accepted in the connecting-map condition.
pub const MAX_EXPONENT: u32 = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Exponents {
    pub a1: u32,
    pub a2: u32,
    pub g1: u32,
    pub g2: u32,
}

impl Exponents {
    pub const fn new(a1: u32, a2: u32, g1: u32, g2: u32) -> Self {
        Exponents { a1, a2, g1, g2 }
    }

    fn validate(&self) -> Result<()> {
        let max = self.a1.max(self.a2).max(self.g1).max(self.g2);
        if max > MAX_EXPONENT {
            return Err(Error::LimitExceeded {
                what: "braiding exponent",
                limit: MAX_EXPONENT as usize,
                found: max as usize,
            });
        }
        Ok(())
    }
}

impl core::fmt::Display for Exponents {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "({},{},{},{})", self.a1, self.a2, self.g1, self.g2)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectingData {
    pub pi: Map,
    pub exponents: Exponents,
}

fn then_power(mut p: Pipeline, left: usize, sigma: &Map, k: u32) -> Result<Pipeline> {
    for _ in 0..k {
        p = p.then_tensor(&[Factor::Id(left), Factor::Map(sigma)])?;
    }
    Ok(p)
}

/// Both sides of the connecting-map condition as composites `C⊗C⊗C → A⊗A⊗A`.
pub fn pi_condition_sides(sys: &BraidedSystem, conn: &ConnectingData) -> Result<(Pipeline, Pipeline)> {
    conn.exponents.validate()?;
    if sys.rank() != 2 {
        return Err(Error::dims("system rank", 2, sys.rank()));
    }
    let (dc, da, mode) = (sys.dim(0), sys.dim(1), sys.mode());
    let pi = &conn.pi;
    pi.check_mode(mode)?;
    pi.check_shape("connecting map", dc, da)?;
    let Exponents { a1, a2, g1, g2 } = conn.exponents;
    let (scc, sca, saa) = (sys.sigma(0, 0), sys.sigma(0, 1), sys.sigma(1, 1));
    let (cc, aa, ca) = (Map::flip(mode, dc, dc), Map::flip(mode, da, da), Map::flip(mode, dc, da));

    let lhs = then_power(Pipeline::new(mode, dc * dc * dc), dc, scc, g1)?
        .then_tensor(&[Factor::Map(&cc), Factor::Map(pi)])?
        .then_tensor(&[Factor::Map(pi), Factor::Map(sca)])?
        .then_tensor(&[Factor::Map(&aa), Factor::Map(pi)])?;
    let lhs = then_power(lhs, da, saa, a1)?;

    let rhs = then_power(Pipeline::new(mode, dc * dc * dc), dc, scc, g2)?
        .then_tensor(&[Factor::Id(dc), Factor::Map(pi), Factor::Id(dc)])?
        .then_tensor(&[Factor::Map(&ca), Factor::Map(pi)])?
        .then_tensor(&[Factor::Id(da), Factor::Map(pi), Factor::Id(da)])?;
    let rhs = then_power(rhs, da, saa, a2)?;
    Ok((lhs, rhs))
}

pub fn check_pi_condition(sys: &BraidedSystem, conn: &ConnectingData) -> Result<Report> {
    let (lhs, rhs) = pi_condition_sides(sys, conn)?;
    let dc = sys.dim(0);
    Ok(Report::single(CheckEntry::from_comparison(
        format!("pi-condition{}", conn.exponents),
        "connecting-map condition",
        &lhs.compare(&rhs)?,
        &[dc, dc, dc],
    )))
}

/// The connecting map used for a standard system: the identity for Hopf
/// algebras and the crossed module map otherwise (extended by `1 ↦ 1` in the
/// Leibniz case).
pub fn standard_connecting_map(kind: SystemKind<'_>) -> Result<Map> {
    Ok(match kind {
        SystemKind::Hopf(h) => Map::Linear(ExactMatrix::identity(h.field(), h.dim())),
        SystemKind::GroupCrmod(x, field) => {
            let pi = SetFn::new(x.pi_table().to_vec(), x.g().size())?;
            Map::Linear(ExactMatrix::from_setfn(field, &pi))
        }
        SystemKind::ShelfCrmod(x, _) => Map::Set(x.pi_map().clone()),
        SystemKind::LeibnizCrmod(x) => Map::Linear(x.pi_plus()),
    })
}

/// `σ_gYD = (M_j ⊗ ρ_i)(c_{M_i,M_j} ⊗ π)(M_i ⊗ δ_j)`, i.e.
/// `m ⊗ n ↦ n₍₀₎ ⊗ m ∗ π(n₍₁₎)`.
pub fn sigma_gyd(mi: &GydModule, mj: &GydModule, pi: &Map) -> Result<Map> {
    let (di, dj, mode) = (mi.dim, mj.dim, mi.mode());
    if mj.mode() != mode {
        return Err(Error::ModeMismatch);
    }
    pi.check_shape("connecting map", mj.dim_c(), mi.dim_a())?;
    let c = Map::flip(mode, di, dj);
    let p = Pipeline::new(mode, di * dj)
        .then_tensor(&[Factor::Id(di), Factor::Map(&mj.delta)])?
        .then_tensor(&[Factor::Map(&c), Factor::Map(pi)])?
        .then_tensor(&[Factor::Id(dj), Factor::Map(&mi.rho)])?;
    Ok(p.materialize())
}

/// Named GYD modules over one system together with a connecting map.
#[derive(Clone, Debug)]
pub struct RepresentationBundle {
    system: Arc<BraidedSystem>,
    members: Vec<(String, GydModule)>,
    connecting: ConnectingData,
}

impl RepresentationBundle {
    /// Validates every member with [`check_gyd`] and the connecting data
    /// with [`check_pi_condition`].
    pub fn new(system: Arc<BraidedSystem>, members: Vec<(String, GydModule)>, connecting: ConnectingData) -> Result<Self> {
        let bundle = Self::unchecked(system, members, connecting)?;
        require(bundle.validate()?)?;
        Ok(bundle)
    }

    /// Checks only that all members live over the bundle's system.
    pub fn unchecked(system: Arc<BraidedSystem>, members: Vec<(String, GydModule)>, connecting: ConnectingData) -> Result<Self> {
        if members.is_empty() {
            return Err(Error::malformed("bundle without members"));
        }
        for (name, m) in &members {
            if *m.system != *system {
                return Err(Error::malformed(format!("member {name} lives over another system")));
            }
        }
        Ok(RepresentationBundle {
            system,
            members,
            connecting,
        })
    }

    /// All member checks (prefixed by member name) and the connecting-map
    /// condition.
    pub fn validate(&self) -> Result<Report> {
        let mut report = Report::new();
        for (name, m) in &self.members {
            report.extend(check_gyd(m).prefixed(name));
        }
        report.extend(check_pi_condition(&self.system, &self.connecting)?);
        Ok(report)
    }

    pub fn system(&self) -> &Arc<BraidedSystem> {
        &self.system
    }

    pub fn members(&self) -> &[(String, GydModule)] {
        &self.members
    }

    pub fn member(&self, i: usize) -> Result<&GydModule> {
        self.members
            .get(i)
            .map(|(_, m)| m)
            .ok_or_else(|| Error::malformed(format!("member {} out of range", i + 1)))
    }

    pub fn connecting(&self) -> &ConnectingData {
        &self.connecting
    }
}

/// The braiding on `M_i ⊗ M_j` (zero-based member indices).
pub fn gyd_braiding(bundle: &RepresentationBundle, i: usize, j: usize) -> Result<Map> {
    sigma_gyd(bundle.member(i)?, bundle.member(j)?, &bundle.connecting.pi)
}

/// The Yang-Baxter equation on `M_i ⊗ M_j ⊗ M_k` for every triple of
/// members, with ids `ybe[i,j,k]` (one-based).
pub fn check_ybe_family(bundle: &RepresentationBundle) -> Result<Report> {
    let n = bundle.members.len();
    let mut braidings = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            braidings.push(gyd_braiding(bundle, i, j)?);
        }
    }
    let mode = bundle.system.mode();
    let mut report = Report::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let dims = [bundle.members[i].1.dim, bundle.members[j].1.dim, bundle.members[k].1.dim];
                let (s_ij, s_ik, s_jk) = (&braidings[i * n + j], &braidings[i * n + k], &braidings[j * n + k]);
                let cmp = crate::braided::cybe_comparison(mode, s_ij, s_ik, s_jk, dims)?;
                report.push(CheckEntry::from_comparison(
                    triple_id("ybe", i, j, k),
                    "Yang-Baxter equation",
                    &cmp,
                    &dims,
                ));
            }
        }
    }
    Ok(report)
}

/// The composite of `Id^{⊗(i-1)} ⊗ σ^{±1} ⊗ Id^{⊗(n-i-1)}` over the letters
/// of `word`, first letter applied first.
pub fn braid_pipeline(sigma: &Map, dim: usize, strands: usize, word: &[i64]) -> Result<Pipeline> {
    if strands < 2 {
        return Err(Error::malformed("a braid needs at least two strands"));
    }
    sigma.check_shape("braiding", dim * dim, dim * dim)?;
    let total = checked_power(dim, strands)?;
    let mut inverse = None;
    let mut p = Pipeline::new(sigma.mode(), total);
    for &letter in word {
        let i = letter.unsigned_abs() as usize;
        if letter == 0 || i >= strands {
            return Err(Error::malformed(format!("letter {letter} outside ±1..±{}", strands - 1)));
        }
        let left = dim.pow(i as u32 - 1);
        let right = dim.pow((strands - i - 1) as u32);
        if letter > 0 {
            p = p.then_slot(left, sigma, right)?;
        } else {
            if inverse.is_none() {
                inverse = Some(
                    sigma
                        .inverse()
                        .ok_or_else(|| Error::NotInvertible(String::from("braiding used with a negative letter")))?,
                );
            }
            p = p.then_slot(left, inverse.as_ref().expect("just set"), right)?;
        }
    }
    Ok(p)
}

pub fn braid_operator(sigma: &Map, dim: usize, strands: usize, word: &[i64]) -> Result<Map> {
    Ok(braid_pipeline(sigma, dim, strands, word)?.materialize())
}

fn checked_power(dim: usize, strands: usize) -> Result<usize> {
    (0..strands)
        .try_fold(1usize, |acc, _| acc.checked_mul(dim))
        .ok_or(Error::LimitExceeded {
            what: "tensor power dimension",
            limit: usize::MAX,
            found: usize::MAX,
        })
}

/// Bantay data of a group crossed module: a basis-homogeneous `K`-grading of
/// `𝕜^dim` and right `G`-action matrices with `A_{gh} = A_h A_g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BantayRep {
    pub x: GroupCrossedModule,
    pub field: FieldSpec,
    pub grades: Vec<usize>,
    pub action: Vec<ExactMatrix>,
}

/// A representation of a crossed module of shelves in sets, `M_r ◂ s ⊆
/// M_{r·s}`, optionally twisted by `f : M → M` preserving grades and
/// commuting with the action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShelfRep {
    pub x: ShelfCrossedModule,
    pub action: Vec<Vec<usize>>,
    pub grading: Vec<usize>,
    pub twist: Option<Vec<usize>>,
}

/// The linear counterpart of [`ShelfRep`] with a basis-homogeneous grading.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearShelfRep {
    pub x: ShelfCrossedModule,
    pub field: FieldSpec,
    pub grading: Vec<usize>,
    pub action: Vec<ExactMatrix>,
    pub twist: Option<ExactMatrix>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeibnizRepData {
    pub x: LeibnizCrossedModule,
    pub rep: LeibnizRep,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GradedActionRep {
    Group(BantayRep),
    Shelf(ShelfRep),
    LinearShelf(LinearShelfRep),
    Leibniz(LeibnizRepData),
}

impl ShelfRep {
    /// `(R, ·, Id_R)`.
    pub fn adjoint(x: &ShelfCrossedModule) -> Self {
        let n = x.r().size();
        ShelfRep {
            x: x.clone(),
            action: (0..n).map(|r| (0..x.s().size()).map(|s| x.act(r, s)).collect()).collect(),
            grading: (0..n).collect(),
            twist: None,
        }
    }

    /// Two copies of `R` graded by the projection, with `f` swapping them.
    pub fn doubled_with_swap(x: &ShelfCrossedModule) -> Self {
        let n = x.r().size();
        let ns = x.s().size();
        ShelfRep {
            x: x.clone(),
            action: (0..2 * n)
                .map(|m| (0..ns).map(|s| (m / n) * n + x.act(m % n, s)).collect())
                .collect(),
            grading: (0..2 * n).map(|m| m % n).collect(),
            twist: Some((0..2 * n).map(|m| (m + n) % (2 * n)).collect()),
        }
    }

    pub fn dim(&self) -> usize {
        self.grading.len()
    }

    fn twist_at(&self, m: usize) -> usize {
        self.twist.as_ref().map_or(m, |f| f[m])
    }

    fn check(&self) -> Result<Report> {
        let (x, d, ns, nr) = (&self.x, self.dim(), self.x.s().size(), self.x.r().size());
        if self.action.len() != d || self.action.iter().any(|row| row.len() != ns) {
            return Err(Error::dims("action table", d * ns, self.action.iter().map(Vec::len).sum()));
        }
        if self.action.iter().flatten().any(|&m| m >= d) || self.grading.iter().any(|&r| r >= nr) {
            return Err(Error::malformed("representation table entry out of range"));
        }
        if let Some(f) = &self.twist {
            if f.len() != d || f.iter().any(|&m| m >= d) {
                return Err(Error::malformed("twist map has the wrong shape"));
            }
        }
        let act = |m: usize, s: usize| self.action[m][s];
        let s_op = |a: usize, b: usize| x.s().op(a, b);
        let mut action = Vec::new();
        let mut grading = Vec::new();
        let mut twist = Vec::new();
        for m in 0..d {
            for s in 0..ns {
                for t in 0..ns {
                    if act(act(m, s), t) != act(act(m, t), s_op(s, t)) {
                        action.push(vec![m, s, t]);
                    }
                }
                if self.grading[act(m, s)] != x.act(self.grading[m], s) {
                    grading.push(vec![m, s]);
                }
                if self.twist_at(act(m, s)) != act(self.twist_at(m), s) {
                    twist.push(vec![m, s]);
                }
            }
            if self.grading[self.twist_at(m)] != self.grading[m] {
                twist.push(vec![m]);
            }
        }
        let mut report = Report::new();
        report.push(CheckEntry::from_violations("action", "(m ◂ s) ◂ t = (m ◂ t) ◂ (s ◁ t)", &action));
        report.push(CheckEntry::from_violations("grading", "gr(m ◂ s) = gr(m) · s", &grading));
        report.push(CheckEntry::from_violations("twist", "f(m ◂ s) = f(m) ◂ s, gr(f(m)) = gr(m)", &twist));
        Ok(report)
    }

    fn maps(&self) -> Result<(Map, Map)> {
        let (d, ns, nr) = (self.dim(), self.x.s().size(), self.x.r().size());
        let rho = SetFn::from_fn(d * ns, d, |p| self.action[p / ns][p % ns])?;
        let delta = SetFn::from_fn(d, d * nr, |m| self.twist_at(m) * nr + self.grading[m])?;
        Ok((rho.into(), delta.into()))
    }
}

impl BantayRep {
    pub fn dim(&self) -> usize {
        self.grades.len()
    }

    fn check(&self) -> Result<Report> {
        let (g, d) = (self.x.g(), self.dim());
        if self.action.len() != g.size() {
            return Err(Error::dims("number of action matrices", g.size(), self.action.len()));
        }
        if let Some(a) = self.action.iter().find(|a| (a.rows(), a.cols()) != (d, d) || a.field() != self.field) {
            return Err(Error::dims("action matrix", d * d, a.rows() * a.cols()));
        }
        if self.grades.iter().any(|&k| k >= self.x.k().size()) {
            return Err(Error::malformed("grade out of range"));
        }
        let mut action = Vec::new();
        if !self.action[g.identity()].is_identity() {
            action.push(vec![g.identity(), g.identity()]);
        }
        for a in 0..g.size() {
            for b in 0..g.size() {
                if self.action[g.mul(a, b)] != self.action[b].compose(&self.action[a])? {
                    action.push(vec![a, b]);
                }
            }
        }
        let mut grading = Vec::new();
        for a in 0..g.size() {
            for m in 0..d {
                let target = self.x.act(self.grades[m], a);
                if self.action[a].column_sparse(m).iter().any(|(r, _)| self.grades[*r] != target) {
                    grading.push(vec![m, a]);
                }
            }
        }
        let mut report = Report::new();
        report.push(CheckEntry::from_violations("action", "A_e = I, A_{gh} = A_h A_g", &action));
        report.push(CheckEntry::from_violations("grading", "M_k ∗ g ⊆ M_{k·g}", &grading));
        Ok(report)
    }

    fn maps(&self) -> Result<(Map, Map)> {
        let (d, ng, nk, f) = (self.dim(), self.x.g().size(), self.x.k().size(), self.field);
        let rho = ExactMatrix::from_fn(f, d, d * ng, |r, c| self.action[c % ng].get(r, c / ng).clone());
        let mut delta = ExactMatrix::zeros(f, d * nk, d);
        for m in 0..d {
            delta.accumulate(m * nk + self.grades[m], m, &f.one());
        }
        Ok((rho.into(), delta.into()))
    }
}

impl LinearShelfRep {
    pub fn dim(&self) -> usize {
        self.grading.len()
    }

    fn check(&self) -> Result<Report> {
        let (x, d, ns, f) = (&self.x, self.dim(), self.x.s().size(), self.field);
        if self.action.len() != ns {
            return Err(Error::dims("number of action matrices", ns, self.action.len()));
        }
        if let Some(a) = self.action.iter().find(|a| (a.rows(), a.cols()) != (d, d) || a.field() != f) {
            return Err(Error::dims("action matrix", d * d, a.rows() * a.cols()));
        }
        if self.grading.iter().any(|&r| r >= x.r().size()) {
            return Err(Error::malformed("grade out of range"));
        }
        let twist = match &self.twist {
            Some(t) if (t.rows(), t.cols()) != (d, d) || t.field() != f => {
                return Err(Error::dims("twist matrix", d * d, t.rows() * t.cols()))
            }
            Some(t) => t.clone(),
            None => ExactMatrix::identity(f, d),
        };
        let mut action = Vec::new();
        let mut grading = Vec::new();
        let mut twisting = Vec::new();
        for s in 0..ns {
            for t in 0..ns {
                let lhs = self.action[t].compose(&self.action[s])?;
                let rhs = self.action[x.s().op(s, t)].compose(&self.action[t])?;
                if lhs != rhs {
                    action.push(vec![s, t]);
                }
            }
            for m in 0..d {
                let target = x.act(self.grading[m], s);
                if self.action[s].column_sparse(m).iter().any(|(r, _)| self.grading[*r] != target) {
                    grading.push(vec![m, s]);
                }
            }
            if twist.compose(&self.action[s])? != self.action[s].compose(&twist)? {
                twisting.push(vec![s]);
            }
        }
        for m in 0..d {
            if twist.column_sparse(m).iter().any(|(r, _)| self.grading[*r] != self.grading[m]) {
                twisting.push(vec![m]);
            }
        }
        let mut report = Report::new();
        report.push(CheckEntry::from_violations("action", "A_t A_s = A_{s◁t} A_t", &action));
        report.push(CheckEntry::from_violations("grading", "M_r ◂ s ⊆ M_{r·s}", &grading));
        report.push(CheckEntry::from_violations("twist", "f A_s = A_s f, f(M_r) ⊆ M_r", &twisting));
        Ok(report)
    }

    fn maps(&self) -> Result<(Map, Map)> {
        let (d, ns, nr, f) = (self.dim(), self.x.s().size(), self.x.r().size(), self.field);
        let rho = ExactMatrix::from_fn(f, d, d * ns, |r, c| self.action[c % ns].get(r, c / ns).clone());
        let mut delta = ExactMatrix::zeros(f, d * nr, d);
        for m in 0..d {
            let image = match &self.twist {
                Some(t) => t.column_sparse(m),
                None => vec![(m, f.one())],
            };
            for (r, s) in image {
                delta.accumulate(r * nr + self.grading[m], m, &s);
            }
        }
        Ok((rho.into(), delta.into()))
    }
}

impl GradedActionRep {
    /// The invariants of the representation data.
    pub fn check(&self) -> Result<Report> {
        match self {
            GradedActionRep::Group(r) => r.check(),
            GradedActionRep::Shelf(r) => r.check(),
            GradedActionRep::LinearShelf(r) => r.check(),
            GradedActionRep::Leibniz(r) => check_leibniz_rep(&r.x, &r.rep),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            GradedActionRep::Group(r) => r.dim(),
            GradedActionRep::Shelf(r) => r.dim(),
            GradedActionRep::LinearShelf(r) => r.dim(),
            GradedActionRep::Leibniz(r) => r.rep.dim(),
        }
    }

    /// The system the representation lives over.
    pub fn system(&self) -> Result<BraidedSystem> {
        match self {
            GradedActionRep::Group(r) => build_system(SystemKind::GroupCrmod(&r.x, r.field)),
            GradedActionRep::Shelf(r) => build_system(SystemKind::ShelfCrmod(&r.x, ShelfVariant::Coass)),
            GradedActionRep::LinearShelf(r) => {
                build_system(SystemKind::ShelfCrmod(&r.x, ShelfVariant::Coass))?.linearize(r.field)
            }
            GradedActionRep::Leibniz(r) => r.x.system(),
        }
    }

    /// The connecting map of the underlying crossed module.
    pub fn connecting_map(&self) -> Result<Map> {
        match self {
            GradedActionRep::Group(r) => standard_connecting_map(SystemKind::GroupCrmod(&r.x, r.field)),
            GradedActionRep::Shelf(r) => standard_connecting_map(SystemKind::ShelfCrmod(&r.x, ShelfVariant::Coass)),
            GradedActionRep::LinearShelf(r) => Ok(Map::Linear(ExactMatrix::from_setfn(r.field, r.x.pi_map()))),
            GradedActionRep::Leibniz(r) => standard_connecting_map(SystemKind::LeibnizCrmod(&r.x)),
        }
    }

    /// Converts to a GYD module after validating the representation.
    pub fn as_gyd(&self, system: Arc<BraidedSystem>) -> Result<GydModule> {
        require(self.check()?)?;
        self.as_gyd_unchecked(system)
    }

    /// Converts without validating the representation data.
    pub fn as_gyd_unchecked(&self, system: Arc<BraidedSystem>) -> Result<GydModule> {
        let (rho, delta) = match self {
            GradedActionRep::Group(r) => r.maps()?,
            GradedActionRep::Shelf(r) => r.maps()?,
            GradedActionRep::LinearShelf(r) => r.maps()?,
            GradedActionRep::Leibniz(r) => return r.rep.to_gyd(&r.x, system),
        };
        GydModule::new(system, self.dim(), rho, delta)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crossed::adjoint;
    use crate::shelf::{sigma_sd, standard_shelf, StandardShelf};

    fn d3_adjoint() -> ShelfCrossedModule {
        adjoint(&standard_shelf(&StandardShelf::Dihedral(3)).unwrap())
    }

    #[test]
    fn adjoint_shelf_rep_is_gyd_and_gives_sd() {
        let x = d3_adjoint();
        let rep = GradedActionRep::Shelf(ShelfRep::adjoint(&x));
        let sys = Arc::new(rep.system().unwrap());
        let m = rep.as_gyd(sys.clone()).unwrap();
        assert!(check_gyd(&m).passed());
        let pi = rep.connecting_map().unwrap();
        let sigma = sigma_gyd(&m, &m, &pi).unwrap();
        assert_eq!(sigma, Map::Set(sigma_sd(x.r().magma())));
    }

    #[test]
    fn regraded_element_breaks_compatibility() {
        let x = d3_adjoint();
        let mut rep = ShelfRep::adjoint(&x);
        rep.grading[0] = 1;
        let rep = GradedActionRep::Shelf(rep);
        assert!(!rep.check().unwrap().passed());
        let sys = Arc::new(rep.system().unwrap());
        let report = check_gyd(&rep.as_gyd_unchecked(sys).unwrap());
        assert!(report.fails("yd-compatibility"));
        assert!(report.entry("yd-compatibility").unwrap().witness.is_some());
    }

    #[test]
    fn exponent_guard() {
        let x = d3_adjoint();
        let sys = build_system(SystemKind::ShelfCrmod(&x, ShelfVariant::Coass)).unwrap();
        let conn = ConnectingData {
            pi: Map::Set(x.pi_map().clone()),
            exponents: Exponents::new(9, 1, 1, 1),
        };
        assert!(matches!(check_pi_condition(&sys, &conn), Err(Error::LimitExceeded { .. })));
    }

    #[test]
    fn braid_words() {
        let x = d3_adjoint();
        let sigma = Map::Set(sigma_sd(x.r().magma()));
        let id = braid_operator(&sigma, 3, 3, &[]).unwrap();
        assert!(id.is_identity());
        let twice = braid_operator(&sigma, 3, 2, &[1, 1]).unwrap();
        assert_eq!(twice.as_set().unwrap().apply(1), 2 * 3);
        let a = braid_operator(&sigma, 3, 3, &[1, 2, 1]).unwrap();
        let b = braid_operator(&sigma, 3, 3, &[2, 1, 2]).unwrap();
        assert_eq!(a, b);
        let back = braid_operator(&sigma, 3, 3, &[1, -1]).unwrap();
        assert!(back.is_identity());
        assert!(braid_operator(&sigma, 3, 3, &[3]).is_err());
    }

    #[test]
    fn non_invertible_negative_letter() {
        let sigma = Map::Set(crate::braided::sigma_diagonal(2));
        assert!(matches!(braid_operator(&sigma, 2, 2, &[-1]), Err(Error::NotInvertible(_))));
    }
}
