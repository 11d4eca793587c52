//! Braided systems: families of objects `V_1, …, V_r` with maps
//! `σ_{i,j} : V_i ⊗ V_j → V_j ⊗ V_i` for `i ≤ j` satisfying the colored
//! Yang-Baxter equation, and braided (co)modules over them.
//!
//! Indices are zero-based in the API and one-based in report ids.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::crossed::ShelfCrossedModule;
use crate::error::{require, Error, Result};
use crate::field::FieldSpec;
use crate::group::GroupCrossedModule;
use crate::hopf::FinHopfAlgebra;
use crate::leibniz::{check_leibniz, LeibnizCrossedModule, UnitalLeibnizAlgebra};
use crate::map::{Map, Mode};
use crate::matrix::ExactMatrix;
use crate::pipeline::{Comparison, Factor, Pipeline};
use crate::report::{triple_id, CheckEntry, Report};
use crate::setfn::SetFn;
use crate::shelf::{check_shelf, sigma_sd, Shelf};
use crate::structure::{check_algebra, check_coalgebra, require_field};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidedSystem {
    mode: Mode,
    dims: Vec<usize>,
    components: BTreeMap<(usize, usize), Map>,
}

impl BraidedSystem {
    /// Requires exactly one component per pair `i ≤ j`, each of shape
    /// `V_i ⊗ V_j → V_j ⊗ V_i`.
    pub fn new(mode: Mode, dims: Vec<usize>, components: Vec<((usize, usize), Map)>) -> Result<Self> {
        let r = dims.len();
        if r == 0 {
            return Err(Error::malformed("braided system of rank 0"));
        }
        if dims.contains(&0) {
            return Err(Error::malformed("braided system with an empty object"));
        }
        let mut map = BTreeMap::new();
        for ((i, j), sigma) in components {
            if i > j || j >= r {
                return Err(Error::malformed(format!(
                    "component ({}, {}) outside 1 ≤ i ≤ j ≤ {r}",
                    i + 1,
                    j + 1
                )));
            }
            sigma.check_mode(mode)?;
            sigma.check_shape("braiding component", dims[i] * dims[j], dims[j] * dims[i])?;
            if map.insert((i, j), sigma).is_some() {
                return Err(Error::malformed(format!("duplicate component ({}, {})", i + 1, j + 1)));
            }
        }
        let expected = r * (r + 1) / 2;
        if map.len() != expected {
            return Err(Error::dims("number of braiding components", expected, map.len()));
        }
        Ok(BraidedSystem {
            mode,
            dims,
            components: map,
        })
    }

    /// A single object with one braiding.
    pub fn rank1(dim: usize, sigma: Map) -> Result<Self> {
        Self::new(sigma.mode(), alloc::vec![dim], alloc::vec![((0, 0), sigma)])
    }

    /// A rank-two system `(C, A)` with components `σ_CC`, `σ_CA`, `σ_AA`.
    pub fn rank2(dim_c: usize, dim_a: usize, cc: Map, ca: Map, aa: Map) -> Result<Self> {
        Self::new(
            cc.mode(),
            alloc::vec![dim_c, dim_a],
            alloc::vec![((0, 0), cc), ((0, 1), ca), ((1, 1), aa)],
        )
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn rank(&self) -> usize {
        self.dims.len()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, i: usize) -> usize {
        self.dims[i]
    }

    pub fn sigma(&self, i: usize, j: usize) -> &Map {
        &self.components[&(i, j)]
    }

    pub fn components(&self) -> impl Iterator<Item = ((usize, usize), &Map)> {
        self.components.iter().map(|(&k, v)| (k, v))
    }

    /// Invertibility of each component, reported as metadata.
    pub fn invertibility(&self) -> Vec<((usize, usize), bool)> {
        self.components.iter().map(|(&k, s)| (k, s.is_invertible())).collect()
    }

    /// The same system over `field`, with set maps linearized.
    pub fn linearize(&self, field: FieldSpec) -> Result<Self> {
        let mode = Mode::Linear(field);
        let components = self
            .components
            .iter()
            .map(|(&k, s)| Ok((k, s.in_mode(mode)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(mode, self.dims.clone(), components)
    }
}

/// The two sides of the colored Yang-Baxter equation on `V_i ⊗ V_j ⊗ V_k`:
/// `(σ_jk ⊗ V_i)(V_j ⊗ σ_ik)(σ_ij ⊗ V_k)` and `(V_k ⊗ σ_ij)(σ_ik ⊗ V_j)(V_i ⊗ σ_jk)`.
pub fn cybe_sides(
    mode: Mode,
    s_ij: &Map,
    s_ik: &Map,
    s_jk: &Map,
    dims: [usize; 3],
) -> Result<(Pipeline, Pipeline)> {
    let [di, dj, dk] = dims;
    let lhs = Pipeline::new(mode, di * dj * dk)
        .then_tensor(&[Factor::Map(s_ij), Factor::Id(dk)])?
        .then_tensor(&[Factor::Id(dj), Factor::Map(s_ik)])?
        .then_tensor(&[Factor::Map(s_jk), Factor::Id(di)])?;
    let rhs = Pipeline::new(mode, di * dj * dk)
        .then_tensor(&[Factor::Id(di), Factor::Map(s_jk)])?
        .then_tensor(&[Factor::Map(s_ik), Factor::Id(dj)])?
        .then_tensor(&[Factor::Id(dk), Factor::Map(s_ij)])?;
    Ok((lhs, rhs))
}

pub(crate) fn cybe_comparison(
    mode: Mode,
    s_ij: &Map,
    s_ik: &Map,
    s_jk: &Map,
    dims: [usize; 3],
) -> Result<Comparison> {
    let (lhs, rhs) = cybe_sides(mode, s_ij, s_ik, s_jk, dims)?;
    lhs.compare(&rhs)
}

pub fn check_cybe_triple(sys: &BraidedSystem, i: usize, j: usize, k: usize) -> Result<CheckEntry> {
    if !(i <= j && j <= k && k < sys.rank()) {
        return Err(Error::malformed(format!(
            "triple ({}, {}, {}) is not ordered within rank {}",
            i + 1,
            j + 1,
            k + 1,
            sys.rank()
        )));
    }
    let dims = [sys.dim(i), sys.dim(j), sys.dim(k)];
    let cmp = cybe_comparison(sys.mode, sys.sigma(i, j), sys.sigma(i, k), sys.sigma(j, k), dims)?;
    Ok(CheckEntry::from_comparison(
        triple_id("cybe", i, j, k),
        "colored Yang-Baxter equation",
        &cmp,
        &dims,
    ))
}

/// One entry per ordered triple `i ≤ j ≤ k`, each with the first failing
/// input and the number of violating basis inputs.
pub fn check_cybe(sys: &BraidedSystem) -> Report {
    let r = sys.rank();
    let mut report = Report::new();
    for i in 0..r {
        for j in i..r {
            for k in j..r {
                report.push(check_cybe_triple(sys, i, j, k).expect("ordered triple in range"));
            }
        }
    }
    report
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModuleSide {
    /// Maps `ρ_i : M ⊗ V_i → M`.
    Action,
    /// Maps `δ_i : M → M ⊗ V_i`.
    Coaction,
}

/// For actions: `ρ_j(ρ_i ⊗ V_j) = ρ_i(ρ_j ⊗ V_i)(M ⊗ σ_ij)` for `i ≤ j`.
/// For coactions: `(M ⊗ σ_ij)(δ_i ⊗ V_j)δ_j = (δ_j ⊗ V_i)δ_i` for `i ≤ j`.
pub fn check_braided_module(
    sys: &BraidedSystem,
    dim: usize,
    side: ModuleSide,
    maps: &[Map],
) -> Result<Report> {
    if maps.len() != sys.rank() {
        return Err(Error::dims("number of module maps", sys.rank(), maps.len()));
    }
    let mode = sys.mode;
    for (i, m) in maps.iter().enumerate() {
        m.check_mode(mode)?;
        match side {
            ModuleSide::Action => m.check_shape("action", dim * sys.dim(i), dim)?,
            ModuleSide::Coaction => m.check_shape("coaction", dim, dim * sys.dim(i))?,
        }
    }
    let mut report = Report::new();
    for i in 0..sys.rank() {
        for j in i..sys.rank() {
            let (di, dj) = (sys.dim(i), sys.dim(j));
            let sigma = sys.sigma(i, j);
            let (lhs, rhs, dims) = match side {
                ModuleSide::Action => {
                    let lhs = Pipeline::new(mode, dim * di * dj)
                        .then_tensor(&[Factor::Map(&maps[i]), Factor::Id(dj)])?
                        .then(&maps[j])?;
                    let rhs = Pipeline::new(mode, dim * di * dj)
                        .then_tensor(&[Factor::Id(dim), Factor::Map(sigma)])?
                        .then_tensor(&[Factor::Map(&maps[j]), Factor::Id(di)])?
                        .then(&maps[i])?;
                    (lhs, rhs, alloc::vec![dim, di, dj])
                }
                ModuleSide::Coaction => {
                    let lhs = Pipeline::new(mode, dim)
                        .then(&maps[j])?
                        .then_tensor(&[Factor::Map(&maps[i]), Factor::Id(dj)])?
                        .then_tensor(&[Factor::Id(dim), Factor::Map(sigma)])?;
                    let rhs = Pipeline::new(mode, dim)
                        .then(&maps[i])?
                        .then_tensor(&[Factor::Map(&maps[j]), Factor::Id(di)])?;
                    (lhs, rhs, alloc::vec![dim])
                }
            };
            let name = match side {
                ModuleSide::Action => "braided-action",
                ModuleSide::Coaction => "braided-coaction",
            };
            report.push(CheckEntry::from_comparison(
                format!("{name}[{},{}]", i + 1, j + 1),
                name,
                &lhs.compare(&rhs)?,
                &dims,
            ));
        }
    }
    Ok(report)
}

/// `σ_Ass(v ⊗ v') = 1 ⊗ v v'`.
pub fn sigma_ass(mu: &ExactMatrix, nu: &ExactMatrix) -> Result<ExactMatrix> {
    require_field(mu, nu)?;
    nu.kron(mu)
}

/// `σ_coAss(v ⊗ v') = ε(v) Δ(v')`.
pub fn sigma_coass(delta: &ExactMatrix, eps: &ExactMatrix) -> Result<ExactMatrix> {
    require_field(delta, eps)?;
    eps.kron(delta)
}

/// `σ_Lei(v ⊗ v') = v' ⊗ v + 1 ⊗ [v, v']` for a bracket `V ⊗ V → V` with unit
/// basis vector `unit`.
pub fn sigma_lei(bracket: &ExactMatrix, unit: usize) -> Result<ExactMatrix> {
    let d = bracket.rows();
    if bracket.cols() != d * d || unit >= d {
        return Err(Error::dims("bracket", d * d, bracket.cols()));
    }
    let f = bracket.field();
    let one = ExactMatrix::basis_vector(f, d, unit);
    ExactMatrix::flip(f, d, d).add(&one.kron(bracket)?)
}

/// The set-level counterpart of `σ_coAss` for the diagonal coproduct:
/// `(x, y) ↦ (y, y)`.
pub fn sigma_diagonal(n: usize) -> SetFn {
    SetFn::from_fn(n * n, n * n, |x| {
        let y = x % n;
        y * n + y
    })
    .expect("in range")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StructuredCarrier {
    Algebra { mu: ExactMatrix, nu: ExactMatrix },
    Coalgebra { delta: ExactMatrix, eps: ExactMatrix },
    Shelf(Shelf),
    Leibniz(UnitalLeibnizAlgebra),
}

/// The rank-one system of a structure, after validating its axioms.
pub fn structural_braiding(carrier: &StructuredCarrier) -> Result<BraidedSystem> {
    match carrier {
        StructuredCarrier::Algebra { mu, nu } => {
            require(check_algebra(mu, nu)?)?;
            BraidedSystem::rank1(mu.rows(), Map::Linear(sigma_ass(mu, nu)?))
        }
        StructuredCarrier::Coalgebra { delta, eps } => {
            require(check_coalgebra(delta, eps)?)?;
            BraidedSystem::rank1(delta.cols(), Map::Linear(sigma_coass(delta, eps)?))
        }
        StructuredCarrier::Shelf(s) => {
            require(check_shelf(s.magma()))?;
            BraidedSystem::rank1(s.size(), Map::Set(sigma_sd(s.magma())))
        }
        StructuredCarrier::Leibniz(l) => {
            require(check_leibniz(l.base()))?;
            BraidedSystem::rank1(l.dim(), Map::Linear(l.sigma_lei()))
        }
    }
}

/// Choice of `σ_RR` for the system of a shelf crossed module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ShelfVariant {
    /// `(r, r') ↦ (r', r')`.
    #[default]
    Coass,
    /// `(r, r') ↦ (r', r ◁ r')`.
    Sd,
}

#[derive(Clone, Copy, Debug)]
pub enum SystemKind<'a> {
    /// `(H, H)` with `σ_coAss`, `σ_Ass` and the adjoint mixed component.
    Hopf(&'a FinHopfAlgebra),
    /// `(𝕜K, 𝕜G)` with `σ_CA(k ⊗ g) = g ⊗ k · g`.
    GroupCrmod(&'a GroupCrossedModule, FieldSpec),
    /// `(R, S)` in sets with `σ_SS = σ_SD`, `σ_RS(r, s) = (s, r · s)`.
    ShelfCrmod(&'a ShelfCrossedModule, ShelfVariant),
    /// `(𝔨⁺, 𝔤⁺)` with `σ_coAss`, `σ_Lei` and `σ_CA(k ⊗ g) = g₍₁₎ ⊗ k · g₍₂₎`.
    LeibnizCrmod(&'a LeibnizCrossedModule),
}

/// Rank-two systems `(C, A)`: index 0 is `C`, index 1 is `A`.
pub fn build_system(kind: SystemKind<'_>) -> Result<BraidedSystem> {
    match kind {
        SystemKind::Hopf(h) => h.system(),
        SystemKind::GroupCrmod(x, field) => {
            let (nk, ng) = (x.k().size(), x.g().size());
            let g = x.g();
            let cc = sigma_diagonal(nk);
            let aa = SetFn::from_fn(ng * ng, ng * ng, |p| g.identity() * ng + g.mul(p / ng, p % ng))?;
            let ca = SetFn::from_fn(nk * ng, ng * nk, |p| {
                let (k, h) = (p / ng, p % ng);
                h * nk + x.act(k, h)
            })?;
            let set = BraidedSystem::rank2(nk, ng, cc.into(), ca.into(), aa.into())?;
            set.linearize(field)
        }
        SystemKind::ShelfCrmod(x, variant) => {
            let (nr, ns) = (x.r().size(), x.s().size());
            let cc = match variant {
                ShelfVariant::Coass => sigma_diagonal(nr),
                ShelfVariant::Sd => sigma_sd(x.r().magma()),
            };
            let aa = sigma_sd(x.s().magma());
            let ca = SetFn::from_fn(nr * ns, ns * nr, |p| {
                let (r, s) = (p / ns, p % ns);
                s * nr + x.act(r, s)
            })?;
            BraidedSystem::rank2(nr, ns, cc.into(), ca.into(), aa.into())
        }
        SystemKind::LeibnizCrmod(x) => x.system(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crossed::adjoint;
    use crate::shelf::{standard_shelf, Magma, StandardShelf};
    use proptest::prelude::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn group_algebra_z2() -> (ExactMatrix, ExactMatrix) {
        // basis e, g
        let mu = ExactMatrix::from_ints(Q, 2, 4, &[1, 0, 0, 1, 0, 1, 1, 0]).unwrap();
        let nu = ExactMatrix::from_ints(Q, 2, 1, &[1, 0]).unwrap();
        (mu, nu)
    }

    #[test]
    fn sigma_ass_on_z2() {
        let (mu, nu) = group_algebra_z2();
        let s = sigma_ass(&mu, &nu).unwrap();
        // g ⊗ g ↦ e ⊗ e, e ⊗ g ↦ e ⊗ g
        assert!(s.get(0, 3).is_one());
        assert!(s.get(1, 1).is_one());
        assert!(s.get(1, 2).is_one());
        let sys = structural_braiding(&StructuredCarrier::Algebra { mu, nu }).unwrap();
        assert!(check_cybe(&sys).passed());
    }

    #[test]
    fn shelf_crossed_module_system_rank_two() {
        let d3 = standard_shelf(&StandardShelf::Dihedral(3)).unwrap();
        let x = adjoint(&d3);
        let sys = build_system(SystemKind::ShelfCrmod(&x, ShelfVariant::Coass)).unwrap();
        let report = check_cybe(&sys);
        assert_eq!(report.entries.len(), 4);
        assert!(report.passed());
        let sys = build_system(SystemKind::ShelfCrmod(&x, ShelfVariant::Sd)).unwrap();
        assert!(check_cybe(&sys).passed());
    }

    #[test]
    fn shape_errors() {
        let bad = BraidedSystem::rank1(2, Map::Set(SetFn::identity(3)));
        assert!(bad.is_err());
        let missing = BraidedSystem::new(Mode::Set, alloc::vec![2, 2], alloc::vec![((0, 0), Map::Set(SetFn::identity(4)))]);
        assert!(missing.is_err());
    }

    #[test]
    fn triple_must_be_ordered() {
        let sys = BraidedSystem::rank1(2, Map::Set(SetFn::flip(2, 2))).unwrap();
        assert!(check_cybe_triple(&sys, 0, 0, 0).unwrap().pass);
        assert!(check_cybe_triple(&sys, 0, 0, 1).is_err());
    }

    /// A unital algebra on `e, x, y` with `e` the unit and the four products
    /// of `x, y` given by `coeffs`.
    fn unital_algebra(coeffs: &[i64]) -> (ExactMatrix, ExactMatrix) {
        let mut mu = ExactMatrix::zeros(Q, 3, 9);
        for a in 0..3 {
            mu.set(a, a, Q.one()).unwrap();
            mu.set(a, 3 * a, Q.one()).unwrap();
        }
        for (p, (a, b)) in [(1, 1), (1, 2), (2, 1), (2, 2)].into_iter().enumerate() {
            for r in 0..3 {
                mu.set(r, 3 * a + b, Q.from_i64(coeffs[3 * p + r])).unwrap();
            }
        }
        (mu, ExactMatrix::basis_vector(Q, 3, 0))
    }

    proptest! {
        #[test]
        fn associativity_iff_ass_braiding(coeffs in proptest::collection::vec(-1i64..2, 12)) {
            let (mu, nu) = unital_algebra(&coeffs);
            let sys = BraidedSystem::rank1(3, Map::Linear(sigma_ass(&mu, &nu).unwrap())).unwrap();
            prop_assert_eq!(check_cybe(&sys).passed(), check_algebra(&mu, &nu).unwrap().passed());
        }

        #[test]
        fn coassociativity_iff_coass_braiding(coeffs in proptest::collection::vec(-1i64..2, 12)) {
            let (mu, nu) = unital_algebra(&coeffs);
            let (delta, eps) = (mu.transpose(), nu.transpose());
            let sys = BraidedSystem::rank1(3, Map::Linear(sigma_coass(&delta, &eps).unwrap())).unwrap();
            prop_assert_eq!(check_cybe(&sys).passed(), check_coalgebra(&delta, &eps).unwrap().passed());
        }

        #[test]
        fn shelf_law_iff_sd_braiding(entries in proptest::collection::vec(0usize..3, 9)) {
            let rows: Vec<Vec<usize>> = entries.chunks(3).map(<[usize]>::to_vec).collect();
            let m = Magma::from_rows(&rows).unwrap();
            let sys = BraidedSystem::rank1(3, Map::Set(sigma_sd(&m))).unwrap();
            prop_assert_eq!(check_cybe(&sys).passed(), check_shelf(&m).passed());
        }
    }
}
