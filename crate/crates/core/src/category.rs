//! Enriching structures, the enrichment of GYD modules, tensor products of
//! representations, associators, coherence checks and YD characters.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::braided::{cybe_comparison, BraidedSystem};
use crate::crossed::ShelfCrossedModule;
use crate::error::{require, Error, Result};
use crate::field::FieldSpec;
use crate::group::GroupCrossedModule;
use crate::gyd::{check_gyd, check_gyd_morphism, sigma_gyd, GydModule};
use crate::hopf::FinHopfAlgebra;
use crate::leibniz::LeibnizCrossedModule;
use crate::map::{Map, Mode};
use crate::matrix::ExactMatrix;
use crate::pipeline::{Factor, Pipeline};
use crate::report::{CheckEntry, Report};
use crate::setfn::SetFn;

/// An object `M` with `σ_CM : C ⊗ M → M ⊗ C` and `σ_MA : M ⊗ A → A ⊗ M`.
#[derive(Clone, Debug)]
pub struct EnrichingStructure {
    system: Arc<BraidedSystem>,
    dim: usize,
    sigma_cm: Map,
    sigma_ma: Map,
}

impl EnrichingStructure {
    pub fn new(system: Arc<BraidedSystem>, dim: usize, sigma_cm: Map, sigma_ma: Map) -> Result<Self> {
        if system.rank() != 2 {
            return Err(Error::dims("system rank", 2, system.rank()));
        }
        let (dc, da, mode) = (system.dim(0), system.dim(1), system.mode());
        sigma_cm.check_mode(mode)?;
        sigma_ma.check_mode(mode)?;
        sigma_cm.check_shape("σ_CM", dc * dim, dim * dc)?;
        sigma_ma.check_shape("σ_MA", dim * da, da * dim)?;
        Ok(EnrichingStructure {
            system,
            dim,
            sigma_cm,
            sigma_ma,
        })
    }

    /// `(A, σ_CA, σ_AA)`.
    pub fn from_a(system: Arc<BraidedSystem>) -> Result<Self> {
        let (ca, aa, da) = (system.sigma(0, 1).clone(), system.sigma(1, 1).clone(), system.dim(1));
        Self::new(system, da, ca, aa)
    }

    /// `(C, σ_CC, σ_CA)`.
    pub fn from_c(system: Arc<BraidedSystem>) -> Result<Self> {
        let (cc, ca, dc) = (system.sigma(0, 0).clone(), system.sigma(0, 1).clone(), system.dim(0));
        Self::new(system, dc, cc, ca)
    }

    /// The one-element object with identity braidings.
    pub fn unit(system: Arc<BraidedSystem>) -> Result<Self> {
        let mode = system.mode();
        let (dc, da) = (system.dim(0), system.dim(1));
        Self::new(system, 1, Map::identity(mode, dc), Map::identity(mode, da))
    }

    pub fn system(&self) -> &Arc<BraidedSystem> {
        &self.system
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn sigma_cm(&self) -> &Map {
        &self.sigma_cm
    }

    pub fn sigma_ma(&self) -> &Map {
        &self.sigma_ma
    }
}

/// The colored Yang-Baxter equation on `C⊗C⊗M`, `C⊗M⊗A` and `M⊗A⊗A`.
pub fn check_enriching(e: &EnrichingStructure) -> Report {
    let sys = &e.system;
    let (dc, da, dm, mode) = (sys.dim(0), sys.dim(1), e.dim, sys.mode());
    let instances = [
        ("cybe[C,C,M]", sys.sigma(0, 0), &e.sigma_cm, &e.sigma_cm, [dc, dc, dm]),
        ("cybe[C,M,A]", &e.sigma_cm, sys.sigma(0, 1), &e.sigma_ma, [dc, dm, da]),
        ("cybe[M,A,A]", &e.sigma_ma, &e.sigma_ma, sys.sigma(1, 1), [dm, da, da]),
    ];
    let mut report = Report::new();
    for (id, s_ij, s_ik, s_jk, dims) in instances {
        let cmp = cybe_comparison(mode, s_ij, s_ik, s_jk, dims).expect("shapes validated at construction");
        report.push(CheckEntry::from_comparison(id, "colored Yang-Baxter equation", &cmp, &dims));
    }
    report
}

fn same_system(a: &Arc<BraidedSystem>, b: &Arc<BraidedSystem>) -> Result<()> {
    if Arc::ptr_eq(a, b) || **a == **b {
        Ok(())
    } else {
        Err(Error::malformed("structures over different systems"))
    }
}

/// `N ⊗ M` with `δ' = (N ⊗ σ_CM)(δ ⊗ M)` and `ρ' = (ρ ⊗ M)(N ⊗ σ_MA)`.
pub fn enrich(n: &GydModule, e: &EnrichingStructure) -> Result<GydModule> {
    same_system(n.system(), &e.system)?;
    let (dn, dm, da, mode) = (n.dim(), e.dim, n.dim_a(), n.mode());
    let delta = Pipeline::new(mode, dn * dm)
        .then_tensor(&[Factor::Map(n.delta()), Factor::Id(dm)])?
        .then_tensor(&[Factor::Id(dn), Factor::Map(&e.sigma_cm)])?
        .materialize();
    let rho = Pipeline::new(mode, dn * dm * da)
        .then_tensor(&[Factor::Id(dn), Factor::Map(&e.sigma_ma)])?
        .then_tensor(&[Factor::Map(n.rho()), Factor::Id(dm)])?
        .materialize();
    GydModule::new(n.system().clone(), dn * dm, rho, delta)
}

/// `σ_{C,M⊗M'} = (M ⊗ σ_CM')(σ_CM ⊗ M')`, `σ_{M⊗M',A} = (σ_MA ⊗ M')(M ⊗ σ_M'A)`.
pub fn tensor_enriching(e: &EnrichingStructure, f: &EnrichingStructure) -> Result<EnrichingStructure> {
    same_system(&e.system, &f.system)?;
    let (dm, dn, mode) = (e.dim, f.dim, e.system.mode());
    let (dc, da) = (e.system.dim(0), e.system.dim(1));
    let cm = Pipeline::new(mode, dc * dm * dn)
        .then_tensor(&[Factor::Map(&e.sigma_cm), Factor::Id(dn)])?
        .then_tensor(&[Factor::Id(dm), Factor::Map(&f.sigma_cm)])?
        .materialize();
    let ma = Pipeline::new(mode, dm * dn * da)
        .then_tensor(&[Factor::Id(dm), Factor::Map(&f.sigma_ma)])?
        .then_tensor(&[Factor::Map(&e.sigma_ma), Factor::Id(dn)])?
        .materialize();
    EnrichingStructure::new(e.system.clone(), dm * dn, cm, ma)
}

/// The data needed to turn a GYD module into an enriching structure, and the
/// matching tensor product and associator of representations.
#[derive(Clone, Copy, Debug)]
pub enum ZContext<'a> {
    /// YD modules over a Hopf algebra; strict associator.
    Hopf(&'a FinHopfAlgebra),
    /// Representations of a group crossed module; strict associator.
    Group(&'a GroupCrossedModule, FieldSpec),
    /// Shelf representations with the peripheral grading
    /// `gr(m ⊗ m') = gr(m')`; strict associator.
    Shelf(&'a ShelfCrossedModule),
    /// Shelf representations with the diagonal grading
    /// `gr(m ⊗ m') = gr(m) ◁ gr(m')` and the associator
    /// `(m ⊗ m') ⊗ m'' ↦ m ◂ π(gr(m'')) ⊗ (m' ⊗ m'')`.
    ShelfTilde(&'a ShelfCrossedModule),
    /// Representations of a Leibniz crossed module with the associator
    /// `(m ⊗ m') ⊗ m'' ↦ m ∗ π(m''₍₁₎) ⊗ (m' ⊗ m''₍₀₎)`.
    Leibniz(&'a LeibnizCrossedModule),
}

impl ZContext<'_> {
    /// `C ⊗ C → C` used in `σ_CM`.
    fn mult_c(&self) -> Map {
        match *self {
            ZContext::Hopf(h) => Map::Linear(h.mu().clone()),
            ZContext::Group(x, field) => {
                let k = x.k();
                let n = k.size();
                let t = SetFn::from_fn(n * n, n, |p| k.mul(p / n, p % n)).expect("in range");
                Map::Linear(ExactMatrix::from_setfn(field, &t))
            }
            ZContext::Shelf(x) => {
                let n = x.r().size();
                Map::Set(SetFn::from_fn(n * n, n, |p| p % n).expect("in range"))
            }
            ZContext::ShelfTilde(x) => {
                let n = x.r().size();
                Map::Set(SetFn::from_fn(n * n, n, |p| x.r().op(p / n, p % n)).expect("in range"))
            }
            ZContext::Leibniz(x) => Map::Linear(x.k_plus().adjoint_action()),
        }
    }

    /// `A → A ⊗ A` used in `σ_MA`.
    fn delta_a(&self) -> Map {
        match *self {
            ZContext::Hopf(h) => Map::Linear(h.delta().clone()),
            ZContext::Group(x, field) => {
                let n = x.g().size();
                let t = SetFn::from_fn(n, n * n, |g| g * n + g).expect("in range");
                Map::Linear(ExactMatrix::from_setfn(field, &t))
            }
            ZContext::Shelf(x) | ZContext::ShelfTilde(x) => {
                let n = x.s().size();
                Map::Set(SetFn::from_fn(n, n * n, |s| s * n + s).expect("in range"))
            }
            ZContext::Leibniz(x) => Map::Linear(x.g_plus().delta()),
        }
    }
}

/// `σ_CM = (M ⊗ mult)(c_{C,M} ⊗ C)(C ⊗ δ)` and `σ_MA = (A ⊗ ρ)(c_{M,A} ⊗ A)(M ⊗ Δ)`,
/// i.e. `c ⊗ m ↦ m₍₀₎ ⊗ c m₍₁₎` and `m ⊗ a ↦ a₍₁₎ ⊗ m ∗ a₍₂₎`.
pub fn z_functor(ctx: ZContext<'_>, m: &GydModule) -> Result<EnrichingStructure> {
    require(check_gyd(m).prefixed("module"))?;
    let e = z_functor_unchecked(ctx, m)?;
    require(check_enriching(&e))?;
    Ok(e)
}

pub fn z_functor_unchecked(ctx: ZContext<'_>, m: &GydModule) -> Result<EnrichingStructure> {
    let (d, dc, da, mode) = (m.dim(), m.dim_c(), m.dim_a(), m.mode());
    let mult = ctx.mult_c().in_mode(mode)?;
    let delta_a = ctx.delta_a().in_mode(mode)?;
    mult.check_shape("multiplication on C", dc * dc, dc)?;
    delta_a.check_shape("comultiplication on A", da, da * da)?;
    let c_cm = Map::flip(mode, dc, d);
    let c_ma = Map::flip(mode, d, da);
    let cm = Pipeline::new(mode, dc * d)
        .then_tensor(&[Factor::Id(dc), Factor::Map(m.delta())])?
        .then_tensor(&[Factor::Map(&c_cm), Factor::Id(dc)])?
        .then_tensor(&[Factor::Id(d), Factor::Map(&mult)])?
        .materialize();
    let ma = Pipeline::new(mode, d * da)
        .then_tensor(&[Factor::Id(d), Factor::Map(&delta_a)])?
        .then_tensor(&[Factor::Map(&c_ma), Factor::Id(da)])?
        .then_tensor(&[Factor::Id(da), Factor::Map(m.rho())])?
        .materialize();
    EnrichingStructure::new(m.system().clone(), d, cm, ma)
}

/// Recovers `ρ = (ε ⊗ M)σ_MA` and `δ = σ_CM(ν ⊗ M)` for the Hopf and group
/// contexts.
pub fn reconstruct(ctx: ZContext<'_>, e: &EnrichingStructure) -> Result<(Map, Map)> {
    let (eps, nu) = match ctx {
        ZContext::Hopf(h) => (h.eps().clone(), h.nu().clone()),
        ZContext::Group(x, field) => (
            ExactMatrix::from_fn(field, 1, x.g().size(), |_, _| field.one()),
            ExactMatrix::basis_vector(field, x.k().size(), x.k().identity()),
        ),
        _ => return Err(Error::Unsupported(String::from("reconstruction needs a counit on A and a unit on C"))),
    };
    let d = e.dim;
    let mode = e.system.mode();
    let (eps, nu) = (Map::Linear(eps), Map::Linear(nu));
    let rho = Pipeline::new(mode, d * e.system.dim(1))
        .then(&e.sigma_ma)?
        .then_tensor(&[Factor::Map(&eps), Factor::Id(d)])?
        .materialize();
    let delta = Pipeline::new(mode, d)
        .then_tensor(&[Factor::Map(&nu), Factor::Id(d)])?
        .then(&e.sigma_cm)?
        .materialize();
    Ok((rho, delta))
}

/// `M ⊗ M'` as the enrichment of `M` by the enriching structure of `M'`.
pub fn tensor_reps(ctx: ZContext<'_>, m: &GydModule, n: &GydModule) -> Result<GydModule> {
    enrich(m, &z_functor_unchecked(ctx, n)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Inverse,
}

/// The associator `(M ⊗ M') ⊗ M'' → M ⊗ (M' ⊗ M'')` on the common index set
/// of both bracketings.
pub fn associator(ctx: ZContext<'_>, m: &GydModule, m2: &GydModule, m3: &GydModule, dir: Direction) -> Result<Map> {
    let (d1, d2, d3, mode) = (m.dim(), m2.dim(), m3.dim(), m.mode());
    let total = d1 * d2 * d3;
    match ctx {
        ZContext::Hopf(_) | ZContext::Group(..) | ZContext::Shelf(_) => Ok(Map::identity(mode, total)),
        ZContext::ShelfTilde(x) => {
            let (rho, delta) = match (m.rho(), m3.delta()) {
                (Map::Set(r), Map::Set(d)) => (r, d),
                _ => return Err(Error::Unsupported(String::from("the diagonal-grading associator is defined on sets"))),
            };
            let (nr, ns) = (x.r().size(), x.s().size());
            let forward = SetFn::from_fn(total, total, |p| {
                let (a, rest) = (p / (d2 * d3), p % (d2 * d3));
                let c = rest % d3;
                let grade = delta.apply(c) % nr;
                rho.apply(a * ns + x.pi(grade)) * d2 * d3 + rest
            })?;
            match dir {
                Direction::Forward => Ok(Map::Set(forward)),
                Direction::Inverse => forward.inverse().map(Map::Set).ok_or_else(|| {
                    Error::NotInvertible(String::from("associator of a crossed module that is not a rack module"))
                }),
            }
        }
        ZContext::Leibniz(x) => {
            let ng = x.g().dim() + 1;
            let f = x.field();
            let mut pi = x.pi_plus();
            if dir == Direction::Inverse {
                let mut s = ExactMatrix::identity(f, ng);
                for g in 0..ng - 1 {
                    s.set(g, g, f.from_i64(-1))?;
                }
                pi = s.compose(&pi)?;
            }
            let pi = Map::Linear(pi);
            let c = Map::flip(mode, d2 * d3, ng);
            let p = Pipeline::new(mode, total)
                .then_tensor(&[Factor::Id(d1 * d2), Factor::Map(m3.delta())])?
                .then_tensor(&[Factor::Id(d1 * d2 * d3), Factor::Map(&pi)])?
                .then_tensor(&[Factor::Id(d1), Factor::Map(&c)])?
                .then_tensor(&[Factor::Map(m.rho()), Factor::Id(d2 * d3)])?;
            Ok(p.materialize())
        }
    }
}

fn quad_id(name: &str, idx: &[usize]) -> String {
    let parts: Vec<String> = idx.iter().map(|i| format!("{}", i + 1)).collect();
    format!("{name}[{}]", parts.join(","))
}

/// The pentagon axiom on every quadruple of objects.
pub fn check_pentagon(ctx: ZContext<'_>, objects: &[GydModule]) -> Result<Report> {
    let n = objects.len();
    let mut report = Report::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let (u, v, w, x) = (&objects[i], &objects[j], &objects[k], &objects[l]);
                    let (du, dv, dw, dx) = (u.dim(), v.dim(), w.dim(), x.dim());
                    let mode = u.mode();
                    let uv = tensor_reps(ctx, u, v)?;
                    let vw = tensor_reps(ctx, v, w)?;
                    let wx = tensor_reps(ctx, w, x)?;
                    let a_uv_w_x = associator(ctx, &uv, w, x, Direction::Forward)?;
                    let a_u_v_wx = associator(ctx, u, v, &wx, Direction::Forward)?;
                    let a_u_v_w = associator(ctx, u, v, w, Direction::Forward)?;
                    let a_u_vw_x = associator(ctx, u, &vw, x, Direction::Forward)?;
                    let a_v_w_x = associator(ctx, v, w, x, Direction::Forward)?;
                    let total = du * dv * dw * dx;
                    let lhs = Pipeline::new(mode, total).then(&a_uv_w_x)?.then(&a_u_v_wx)?;
                    let rhs = Pipeline::new(mode, total)
                        .then_tensor(&[Factor::Map(&a_u_v_w), Factor::Id(dx)])?
                        .then(&a_u_vw_x)?
                        .then_tensor(&[Factor::Id(du), Factor::Map(&a_v_w_x)])?;
                    report.push(CheckEntry::from_comparison(
                        quad_id("pentagon", &[i, j, k, l]),
                        "pentagon axiom",
                        &lhs.compare(&rhs)?,
                        &[du, dv, dw, dx],
                    ));
                }
            }
        }
    }
    Ok(report)
}

/// A unit object with left and right unitors for each object of a list.
#[derive(Clone, Debug)]
pub struct Unitors {
    pub unit: GydModule,
    /// `λ_V : I ⊗ V → V`.
    pub left: Vec<Map>,
    /// `ρ_V : V ⊗ I → V`.
    pub right: Vec<Map>,
}

/// `(V ⊗ λ_W) α_{V,I,W} = ρ_V ⊗ W` on every pair of objects.
pub fn check_triangle(ctx: ZContext<'_>, objects: &[GydModule], unitors: Option<&Unitors>) -> Result<Report> {
    let u = unitors.ok_or_else(|| Error::Unsupported(String::from("the triangle axiom needs both unitors")))?;
    let n = objects.len();
    if u.left.len() != n || u.right.len() != n {
        return Err(Error::dims("number of unitors", n, u.left.len().min(u.right.len())));
    }
    let mut report = Report::new();
    for i in 0..n {
        for j in 0..n {
            let (v, w) = (&objects[i], &objects[j]);
            let (dv, dw, di, mode) = (v.dim(), w.dim(), u.unit.dim(), v.mode());
            let a = associator(ctx, v, &u.unit, w, Direction::Forward)?;
            let lhs = Pipeline::new(mode, dv * di * dw)
                .then(&a)?
                .then_tensor(&[Factor::Id(dv), Factor::Map(&u.left[j])])?;
            let rhs = Pipeline::new(mode, dv * di * dw).then_tensor(&[Factor::Map(&u.right[i]), Factor::Id(dw)])?;
            report.push(CheckEntry::from_comparison(
                quad_id("triangle", &[i, j]),
                "triangle axiom",
                &lhs.compare(&rhs)?,
                &[dv, di, dw],
            ));
        }
    }
    Ok(report)
}

/// Both hexagon axioms for `c = σ_gYD` on every triple of objects.
pub fn check_hexagons(ctx: ZContext<'_>, objects: &[GydModule], pi: &Map) -> Result<Report> {
    let n = objects.len();
    let mut report = Report::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (u, v, w) = (&objects[i], &objects[j], &objects[k]);
                let (du, dv, dw, mode) = (u.dim(), v.dim(), w.dim(), u.mode());
                let total = du * dv * dw;
                let vw = tensor_reps(ctx, v, w)?;
                let uv = tensor_reps(ctx, u, v)?;

                let lhs = Pipeline::new(mode, total)
                    .then(&associator(ctx, u, v, w, Direction::Forward)?)?
                    .then(&sigma_gyd(u, &vw, pi)?)?
                    .then(&associator(ctx, v, w, u, Direction::Forward)?)?;
                let rhs = Pipeline::new(mode, total)
                    .then_tensor(&[Factor::Map(&sigma_gyd(u, v, pi)?), Factor::Id(dw)])?
                    .then(&associator(ctx, v, u, w, Direction::Forward)?)?
                    .then_tensor(&[Factor::Id(dv), Factor::Map(&sigma_gyd(u, w, pi)?)])?;
                report.push(CheckEntry::from_comparison(
                    quad_id("hexagon1", &[i, j, k]),
                    "first hexagon axiom",
                    &lhs.compare(&rhs)?,
                    &[du, dv, dw],
                ));

                let lhs = Pipeline::new(mode, total)
                    .then(&associator(ctx, u, v, w, Direction::Inverse)?)?
                    .then(&sigma_gyd(&uv, w, pi)?)?
                    .then(&associator(ctx, w, u, v, Direction::Inverse)?)?;
                let rhs = Pipeline::new(mode, total)
                    .then_tensor(&[Factor::Id(du), Factor::Map(&sigma_gyd(v, w, pi)?)])?
                    .then(&associator(ctx, u, w, v, Direction::Inverse)?)?
                    .then_tensor(&[Factor::Map(&sigma_gyd(u, w, pi)?), Factor::Id(dv)])?;
                report.push(CheckEntry::from_comparison(
                    quad_id("hexagon2", &[i, j, k]),
                    "second hexagon axiom",
                    &lhs.compare(&rhs)?,
                    &[du, dv, dw],
                ));
            }
        }
    }
    Ok(report)
}

/// Naturality of `c = σ_gYD` along module maps `f : M_a → M_b` given as
/// `(a, b, f)`: `c_{M_b,N}(f ⊗ N) = (N ⊗ f)c_{M_a,N}` and
/// `c_{N,M_b}(N ⊗ f) = (f ⊗ N)c_{N,M_a}` for every object `N`.
pub fn check_naturality(objects: &[GydModule], morphisms: &[(usize, usize, Map)], pi: &Map) -> Result<Report> {
    let mut report = Report::new();
    for (idx, (a, b, f)) in morphisms.iter().enumerate() {
        let (ma, mb) = (
            objects.get(*a).ok_or_else(|| Error::malformed("morphism source out of range"))?,
            objects.get(*b).ok_or_else(|| Error::malformed("morphism target out of range"))?,
        );
        report.extend(check_gyd_morphism(f, ma, mb)?.prefixed(&format!("map{}", idx + 1)));
        for (t, nn) in objects.iter().enumerate() {
            let (da, dn, mode) = (ma.dim(), nn.dim(), ma.mode());
            let lhs = Pipeline::new(mode, da * dn)
                .then_tensor(&[Factor::Map(f), Factor::Id(dn)])?
                .then(&sigma_gyd(mb, nn, pi)?)?;
            let rhs = Pipeline::new(mode, da * dn)
                .then(&sigma_gyd(ma, nn, pi)?)?
                .then_tensor(&[Factor::Id(dn), Factor::Map(f)])?;
            let mut cmp = lhs.compare(&rhs)?;
            if cmp.holds() {
                let lhs = Pipeline::new(mode, dn * da)
                    .then_tensor(&[Factor::Id(dn), Factor::Map(f)])?
                    .then(&sigma_gyd(nn, mb, pi)?)?;
                let rhs = Pipeline::new(mode, dn * da)
                    .then(&sigma_gyd(nn, ma, pi)?)?
                    .then_tensor(&[Factor::Map(f), Factor::Id(dn)])?;
                cmp = lhs.compare(&rhs)?;
            }
            report.push(CheckEntry::from_comparison(
                quad_id("naturality", &[idx, t]),
                "naturality of the braiding",
                &cmp,
                &[da, dn],
            ));
        }
    }
    Ok(report)
}

/// Whether `σ_gYD : M ⊗ N → N ⊗ M` is a morphism between the tensor products.
pub fn check_braiding_morphism(ctx: ZContext<'_>, m: &GydModule, n: &GydModule, pi: &Map) -> Result<Report> {
    let mn = tensor_reps(ctx, m, n)?;
    let nm = tensor_reps(ctx, n, m)?;
    check_gyd_morphism(&sigma_gyd(m, n, pi)?, &mn, &nm)
}

/// A YD module structure on the unit object: a braided character
/// `ε_A : A → I` and cocharacter `ν_C : I → C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YdCharacter {
    pub epsilon: Map,
    pub nu: Map,
}

impl YdCharacter {
    pub fn module(&self, system: Arc<BraidedSystem>) -> Result<GydModule> {
        GydModule::new(system, 1, self.epsilon.clone(), self.nu.clone())
    }
}

/// `I_{r₀}` for every `S`-invariant `r₀`, in increasing order of `r₀`.
pub fn enumerate_yd_characters(x: &ShelfCrossedModule) -> Vec<(usize, YdCharacter)> {
    x.invariant_elements()
        .into_iter()
        .map(|r0| (r0, shelf_character(x, r0).expect("invariant element")))
        .collect()
}

/// `({∗}, s ↦ ∗, ∗ ↦ r₀)`.
pub fn shelf_character(x: &ShelfCrossedModule, r0: usize) -> Result<YdCharacter> {
    if r0 >= x.r().size() || (0..x.s().size()).any(|s| x.act(r0, s) != r0) {
        return Err(Error::NotInvariant(r0));
    }
    Ok(YdCharacter {
        epsilon: Map::Set(SetFn::new(vec![0; x.s().size()], 1)?),
        nu: Map::Set(SetFn::new(vec![r0], x.r().size())?),
    })
}

/// `λ_M : I_{r₀} ⊗ M → M`, `∗ ⊗ m ↦ m`, and `ρ_M : M ⊗̃ I_{r₀} → M`,
/// `m ⊗ ∗ ↦ m ◂ π(r₀)`.
pub fn unit_maps(x: &ShelfCrossedModule, r0: usize, m: &GydModule) -> Result<(Map, Map)> {
    shelf_character(x, r0)?;
    let rho = m
        .rho()
        .as_set()
        .ok_or_else(|| Error::Unsupported(String::from("unit maps are defined on sets")))?;
    let ns = x.s().size();
    let right = SetFn::from_fn(m.dim(), m.dim(), |a| rho.apply(a * ns + x.pi(r0)))?;
    Ok((Map::identity(Mode::Set, m.dim()), Map::Set(right)))
}

/// The unit character `(ε, ν)` of a Hopf algebra as a module over its system.
pub fn hopf_unit_character(h: &FinHopfAlgebra) -> YdCharacter {
    YdCharacter {
        epsilon: Map::Linear(h.eps().clone()),
        nu: Map::Linear(h.nu().clone()),
    }
}

/// `(𝕜, ε, ν)` with `ν(1) = 1 ∈ 𝔨⁺`.
pub fn leibniz_unit_character(x: &LeibnizCrossedModule) -> YdCharacter {
    YdCharacter {
        epsilon: Map::Linear(x.g_plus().eps()),
        nu: Map::Linear(x.k_plus().nu()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braided::{build_system, ShelfVariant, SystemKind};
    use crate::crossed::adjoint;
    use crate::gyd::{GradedActionRep, ShelfRep};
    use crate::shelf::{standard_shelf, StandardShelf};

    fn d3() -> ShelfCrossedModule {
        adjoint(&standard_shelf(&StandardShelf::Dihedral(3)).unwrap())
    }

    fn adjoint_module(x: &ShelfCrossedModule) -> GydModule {
        let rep = GradedActionRep::Shelf(ShelfRep::adjoint(x));
        rep.as_gyd(Arc::new(rep.system().unwrap())).unwrap()
    }

    #[test]
    fn structures_from_the_system_are_enriching() {
        let x = d3();
        let sys = Arc::new(build_system(SystemKind::ShelfCrmod(&x, ShelfVariant::Coass)).unwrap());
        let a = EnrichingStructure::from_a(sys.clone()).unwrap();
        let c = EnrichingStructure::from_c(sys.clone()).unwrap();
        assert!(check_enriching(&a).passed());
        assert!(check_enriching(&c).passed());
        assert!(check_enriching(&tensor_enriching(&a, &c).unwrap()).passed());
        let unit = EnrichingStructure::unit(sys).unwrap();
        let ua = tensor_enriching(&unit, &a).unwrap();
        assert_eq!(ua.sigma_cm(), a.sigma_cm());
        assert_eq!(ua.sigma_ma(), a.sigma_ma());
    }

    #[test]
    fn corrupted_sigma_cm_fails() {
        let x = d3();
        let sys = Arc::new(build_system(SystemKind::ShelfCrmod(&x, ShelfVariant::Coass)).unwrap());
        let good = EnrichingStructure::from_a(sys.clone()).unwrap();
        let mut table = good.sigma_cm().as_set().unwrap().table().to_vec();
        table.swap(0, 1);
        let bad = EnrichingStructure::new(
            sys,
            good.dim(),
            Map::Set(SetFn::new(table, 9).unwrap()),
            good.sigma_ma().clone(),
        )
        .unwrap();
        let report = check_enriching(&bad);
        assert!(!report.passed());
        assert!(report.first_failure().unwrap().id.starts_with("cybe["));
    }

    #[test]
    fn z_functor_shelf_forms() {
        let x = d3();
        let m = adjoint_module(&x);
        let e = z_functor(ZContext::Shelf(&x), &m).unwrap();
        let t = e.sigma_cm().as_set().unwrap();
        for r in 0..3 {
            for a in 0..3 {
                assert_eq!(t.apply(r * 3 + a), a * 3 + a);
            }
        }
        let e = z_functor(ZContext::ShelfTilde(&x), &m).unwrap();
        let t = e.sigma_cm().as_set().unwrap();
        for r in 0..3 {
            for a in 0..3 {
                assert_eq!(t.apply(r * 3 + a), a * 3 + x.r().op(r, a));
            }
        }
    }

    #[test]
    fn tensor_gradings() {
        let x = d3();
        let m = adjoint_module(&x);
        let p = tensor_reps(ZContext::Shelf(&x), &m, &m).unwrap();
        let q = tensor_reps(ZContext::ShelfTilde(&x), &m, &m).unwrap();
        assert!(check_gyd(&p).passed());
        assert!(check_gyd(&q).passed());
        let (dp, dq) = (p.delta().as_set().unwrap(), q.delta().as_set().unwrap());
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(dp.apply(a * 3 + b) % 3, b);
                assert_eq!(dq.apply(a * 3 + b) % 3, x.r().op(a, b));
            }
        }
    }

    #[test]
    fn tilde_associator_and_pentagon() {
        let x = d3();
        let m = adjoint_module(&x);
        let a = associator(ZContext::ShelfTilde(&x), &m, &m, &m, Direction::Forward).unwrap();
        // (0, 1, 2) ↦ (0 ◁ 2, 1, 2) = (1, 1, 2)
        assert_eq!(a.as_set().unwrap().apply(5), 9 + 5);
        let inv = associator(ZContext::ShelfTilde(&x), &m, &m, &m, Direction::Inverse).unwrap();
        assert!(a.compose(&inv).unwrap().is_identity());
        let report = check_pentagon(ZContext::ShelfTilde(&x), core::slice::from_ref(&m)).unwrap();
        assert!(report.passed());
        let strict = associator(ZContext::Shelf(&x), &m, &m, &m, Direction::Forward).unwrap();
        assert!(strict.is_identity());
    }

    #[test]
    fn braiding_is_not_a_morphism() {
        let x = d3();
        let m = adjoint_module(&x);
        let pi = Map::Set(x.pi_map().clone());
        let report = check_braiding_morphism(ZContext::ShelfTilde(&x), &m, &m, &pi).unwrap();
        assert!(report.fails("morphism-coaction"));
        assert!(!report.fails("morphism-action"));
    }

    #[test]
    fn characters_and_unit_maps() {
        let x = d3();
        assert!(enumerate_yd_characters(&x).is_empty());
        let m = adjoint_module(&x);
        assert!(matches!(unit_maps(&x, 0, &m), Err(Error::NotInvariant(0))));
        let proj = adjoint(&standard_shelf(&StandardShelf::Projection(4)).unwrap());
        let chars = enumerate_yd_characters(&proj);
        assert_eq!(chars.iter().map(|(r, _)| *r).collect::<Vec<_>>(), vec![0, 1, 2, 3]);
        let sys = Arc::new(build_system(SystemKind::ShelfCrmod(&proj, ShelfVariant::Coass)).unwrap());
        for (_, c) in &chars {
            assert!(check_gyd(&c.module(sys.clone()).unwrap()).passed());
        }
        let pm = adjoint_module(&proj);
        let (l, r) = unit_maps(&proj, 2, &pm).unwrap();
        assert!(l.is_identity() && r.is_identity());
    }

    #[test]
    fn triangle_requires_unitors() {
        let x = d3();
        let m = adjoint_module(&x);
        assert!(matches!(
            check_triangle(ZContext::Shelf(&x), &[m], None),
            Err(Error::Unsupported(_))
        ));
    }
}
