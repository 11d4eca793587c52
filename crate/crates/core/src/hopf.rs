//! Finite-dimensional Hopf algebras given by structure matrices, group
//! algebras and their duals, YD characters and the adjoint braidings.

use alloc::vec::Vec;

use crate::braided::{check_cybe, sigma_ass, sigma_coass, BraidedSystem};
use crate::error::{require, Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::group::FiniteGroup;
use crate::map::{Map, Mode};
use crate::matrix::ExactMatrix;
use crate::pipeline::{Factor, Pipeline};
use crate::report::{CheckEntry, Report};
use crate::structure::{check_algebra, check_coalgebra};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinHopfAlgebra {
    mu: ExactMatrix,
    nu: ExactMatrix,
    delta: ExactMatrix,
    eps: ExactMatrix,
    s: ExactMatrix,
}

impl FinHopfAlgebra {
    /// Shape-checks the structure maps and validates every Hopf axiom.
    pub fn new(mu: ExactMatrix, nu: ExactMatrix, delta: ExactMatrix, eps: ExactMatrix, s: ExactMatrix) -> Result<Self> {
        let h = Self::unchecked(mu, nu, delta, eps, s)?;
        require(check_hopf(&h))?;
        Ok(h)
    }

    /// Shape checks only.
    pub fn unchecked(mu: ExactMatrix, nu: ExactMatrix, delta: ExactMatrix, eps: ExactMatrix, s: ExactMatrix) -> Result<Self> {
        let d = mu.rows();
        let f = mu.field();
        if [&nu, &delta, &eps, &s].iter().any(|m| m.field() != f) {
            return Err(Error::FieldMismatch);
        }
        let shapes = [
            ("multiplication", &mu, d, d * d),
            ("unit", &nu, d, 1),
            ("comultiplication", &delta, d * d, d),
            ("counit", &eps, 1, d),
            ("antipode", &s, d, d),
        ];
        for (what, m, r, c) in shapes {
            if (m.rows(), m.cols()) != (r, c) {
                return Err(Error::malformed(alloc::format!(
                    "{what} has shape {}x{}, expected {r}x{c}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        if d == 0 {
            return Err(Error::malformed("zero-dimensional Hopf algebra"));
        }
        Ok(FinHopfAlgebra { mu, nu, delta, eps, s })
    }

    pub fn field(&self) -> FieldSpec {
        self.mu.field()
    }

    pub fn dim(&self) -> usize {
        self.mu.rows()
    }

    pub fn mu(&self) -> &ExactMatrix {
        &self.mu
    }

    pub fn nu(&self) -> &ExactMatrix {
        &self.nu
    }

    pub fn delta(&self) -> &ExactMatrix {
        &self.delta
    }

    pub fn eps(&self) -> &ExactMatrix {
        &self.eps
    }

    pub fn antipode(&self) -> &ExactMatrix {
        &self.s
    }

    fn mode(&self) -> Mode {
        Mode::Linear(self.field())
    }

    fn maps(&self) -> [Map; 5] {
        [&self.mu, &self.nu, &self.delta, &self.eps, &self.s].map(|m| Map::Linear(m.clone()))
    }

    /// `σ_CA(h ⊗ h') = h'₍₂₎ ⊗ S(h'₍₁₎) h h'₍₃₎`.
    pub fn sigma_ca(&self) -> Result<ExactMatrix> {
        let d = self.dim();
        let [mu, _, delta, _, s] = self.maps();
        let c = Map::flip(self.mode(), d, d);
        let p = Pipeline::new(self.mode(), d * d)
            .then_tensor(&[Factor::Id(d), Factor::Map(&delta)])?
            .then_tensor(&[Factor::Id(d), Factor::Map(&delta), Factor::Id(d)])?
            .then_tensor(&[Factor::Map(&c), Factor::Id(d), Factor::Id(d)])?
            .then_tensor(&[Factor::Map(&s), Factor::Map(&c), Factor::Id(d)])?
            .then_tensor(&[Factor::Map(&c), Factor::Id(d), Factor::Id(d)])?
            .then_tensor(&[Factor::Id(d), Factor::Map(&mu), Factor::Id(d)])?
            .then_tensor(&[Factor::Id(d), Factor::Map(&mu)])?;
        Ok(p.materialize().as_linear().expect("linear").clone())
    }

    /// The rank-two system `(H, H)` with `σ_coAss`, `σ_Ass` and the mixed
    /// component [`Self::sigma_ca`].
    pub fn system(&self) -> Result<BraidedSystem> {
        let d = self.dim();
        let cc = sigma_coass(&self.delta, &self.eps)?;
        let aa = sigma_ass(&self.mu, &self.nu)?;
        BraidedSystem::rank2(d, d, cc.into(), self.sigma_ca()?.into(), aa.into())
    }
}

/// Algebra and coalgebra axioms, bialgebra compatibility and the antipode law.
pub fn check_hopf(h: &FinHopfAlgebra) -> Report {
    let inner = || -> Result<Report> {
        let (d, mode) = (h.dim(), h.mode());
        let [mu, _, delta, eps, s] = h.maps();
        let mut report = check_algebra(&h.mu, &h.nu)?;
        report.extend(check_coalgebra(&h.delta, &h.eps)?);

        let c = Map::flip(mode, d, d);
        let lhs = Pipeline::new(mode, d * d).then(&mu)?.then(&delta)?;
        let rhs = Pipeline::new(mode, d * d)
            .then_tensor(&[Factor::Map(&delta), Factor::Map(&delta)])?
            .then_tensor(&[Factor::Id(d), Factor::Map(&c), Factor::Id(d)])?
            .then_tensor(&[Factor::Map(&mu), Factor::Map(&mu)])?;
        let mut cmp = lhs.compare(&rhs)?;
        if cmp.holds() {
            let lhs = Pipeline::new(mode, d * d).then(&mu)?.then(&eps)?;
            let rhs = Pipeline::new(mode, d * d).then_tensor(&[Factor::Map(&eps), Factor::Map(&eps)])?;
            cmp = lhs.compare(&rhs)?;
        }
        let unit_side = h.delta.compose(&h.nu)? == h.nu.kron(&h.nu)? && h.eps.compose(&h.nu)?.is_identity();
        if cmp.holds() && !unit_side {
            cmp.violations = 1;
            cmp.first = Some(0);
        }
        report.push(CheckEntry::from_comparison(
            "bialgebra",
            "Δμ = (μ ⊗ μ)(H ⊗ c ⊗ H)(Δ ⊗ Δ), εμ = ε ⊗ ε, Δν = ν ⊗ ν, εν = 1",
            &cmp,
            &[d, d],
        ));

        let unit_counit = Map::Linear(h.nu.compose(&h.eps)?);
        let target = Pipeline::new(mode, d).then(&unit_counit)?;
        let left = Pipeline::new(mode, d)
            .then(&delta)?
            .then_tensor(&[Factor::Map(&s), Factor::Id(d)])?
            .then(&mu)?;
        let right = Pipeline::new(mode, d)
            .then(&delta)?
            .then_tensor(&[Factor::Id(d), Factor::Map(&s)])?
            .then(&mu)?;
        let mut cmp = left.compare(&target)?;
        if cmp.holds() {
            cmp = right.compare(&target)?;
        }
        report.push(CheckEntry::from_comparison(
            "antipode",
            "μ(S ⊗ H)Δ = νε = μ(H ⊗ S)Δ",
            &cmp,
            &[d],
        ));
        Ok(report)
    };
    inner().expect("shapes validated at construction")
}

/// `𝕜G` with `Δ(g) = g ⊗ g`, `ε(g) = 1`, `S(g) = g⁻¹`.
pub fn group_algebra(g: &FiniteGroup, field: FieldSpec) -> FinHopfAlgebra {
    let n = g.size();
    let one = field.one();
    let mut mu = ExactMatrix::zeros(field, n, n * n);
    let mut delta = ExactMatrix::zeros(field, n * n, n);
    let mut s = ExactMatrix::zeros(field, n, n);
    for a in 0..n {
        for b in 0..n {
            mu.accumulate(g.mul(a, b), a * n + b, &one);
        }
        delta.accumulate(a * n + a, a, &one);
        s.accumulate(g.inv(a), a, &one);
    }
    let nu = ExactMatrix::basis_vector(field, n, g.identity());
    let eps = ExactMatrix::from_fn(field, 1, n, |_, _| one.clone());
    FinHopfAlgebra::unchecked(mu, nu, delta, eps, s).expect("well-shaped")
}

/// `𝕜^G` on the basis `∂_k` of delta functions.
pub fn dual_group_algebra(g: &FiniteGroup, field: FieldSpec) -> FinHopfAlgebra {
    let n = g.size();
    let one = field.one();
    let mut mu = ExactMatrix::zeros(field, n, n * n);
    let mut delta = ExactMatrix::zeros(field, n * n, n);
    let mut s = ExactMatrix::zeros(field, n, n);
    for a in 0..n {
        mu.accumulate(a, a * n + a, &one);
        for b in 0..n {
            delta.accumulate(a * n + b, g.mul(a, b), &one);
        }
        s.accumulate(g.inv(a), a, &one);
    }
    let nu = ExactMatrix::from_fn(field, n, 1, |_, _| one.clone());
    let eps = ExactMatrix::basis_vector(field, n, g.identity()).transpose();
    FinHopfAlgebra::unchecked(mu, nu, delta, eps, s).expect("well-shaped")
}

/// An algebra character `ζ : H → 𝕜` and a group-like `η : 𝕜 → H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfCharacterPair {
    zeta: ExactMatrix,
    eta: ExactMatrix,
}

impl HopfCharacterPair {
    /// Validates `ζμ = ζ ⊗ ζ`, `ζν = 1`, `Δη = η ⊗ η`, `εη = 1`.
    pub fn new(h: &FinHopfAlgebra, zeta: ExactMatrix, eta: ExactMatrix) -> Result<Self> {
        let (f, d) = (h.field(), h.dim());
        if zeta.field() != f || eta.field() != f {
            return Err(Error::FieldMismatch);
        }
        if (zeta.rows(), zeta.cols()) != (1, d) {
            return Err(Error::dims("character length", d, zeta.cols()));
        }
        if (eta.rows(), eta.cols()) != (d, 1) {
            return Err(Error::dims("cocharacter length", d, eta.rows()));
        }
        let mut report = Report::new();
        let mult = zeta.compose(h.mu())?.compare_columns(&zeta.kron(&zeta)?)?;
        let unit = zeta.compose(h.nu())?.is_identity();
        report.push(CheckEntry::from_comparison("character", "ζμ = ζ ⊗ ζ", &mult, &[d, d]));
        report.push(if unit {
            CheckEntry::passed("character-unit", "ζν = 1")
        } else {
            CheckEntry::failed("character-unit", "ζν = 1", alloc::vec![0], 1)
        });
        let grouplike = h.delta().compose(&eta)? == eta.kron(&eta)?;
        let counit = h.eps().compose(&eta)?.is_identity();
        report.push(if grouplike && counit {
            CheckEntry::passed("grouplike", "Δη = η ⊗ η, εη = 1")
        } else {
            CheckEntry::failed("grouplike", "Δη = η ⊗ η, εη = 1", alloc::vec![0], 1)
        });
        require(report)?;
        Ok(HopfCharacterPair { zeta, eta })
    }

    /// `(ε, ν)`.
    pub fn counit_unit(h: &FinHopfAlgebra) -> Self {
        Self::new(h, h.eps().clone(), h.nu().clone()).expect("Hopf axioms hold")
    }

    /// A pair on a group algebra: `ζ(g) = values[g]`, `η = g₀`.
    pub fn on_group_algebra(h: &FinHopfAlgebra, values: Vec<Scalar>, grouplike: usize) -> Result<Self> {
        let f = h.field();
        let values = values.into_iter().map(|v| f.normalize(v)).collect::<Result<Vec<_>>>()?;
        let zeta = ExactMatrix::from_rows(f, alloc::vec![values])?;
        if grouplike >= h.dim() {
            return Err(Error::malformed("group-like index out of range"));
        }
        Self::new(h, zeta, ExactMatrix::basis_vector(f, h.dim(), grouplike))
    }

    pub fn zeta(&self) -> &ExactMatrix {
        &self.zeta
    }

    pub fn eta(&self) -> &ExactMatrix {
        &self.eta
    }
}

/// Three entries: the strict compatibility `μ²(S ⊗ ηζ ⊗ H)Δ² = ηζ`, and the
/// compatibility of the unit character module tensored with `H`, pre-composed
/// with `σ_Ass` and post-composed with `σ_coAss`.
pub fn check_yd_character(h: &FinHopfAlgebra, pair: &HopfCharacterPair) -> Result<Report> {
    let (d, mode) = (h.dim(), h.mode());
    let [mu, _, delta, _, s] = h.maps();
    let eta_zeta = pair.eta.compose(&pair.zeta)?;
    let ez = Map::Linear(eta_zeta.clone());
    let mut report = Report::new();

    let strict = Pipeline::new(mode, d)
        .then(&delta)?
        .then_tensor(&[Factor::Map(&delta), Factor::Id(d)])?
        .then_tensor(&[Factor::Map(&s), Factor::Map(&ez), Factor::Id(d)])?
        .then_tensor(&[Factor::Map(&mu), Factor::Id(d)])?
        .then(&mu)?;
    let target = Pipeline::new(mode, d).then(&ez)?;
    report.push(CheckEntry::from_comparison(
        "strict",
        "μ²(S ⊗ ηζ ⊗ H)Δ² = ηζ",
        &strict.compare(&target)?,
        &[d],
    ));

    let through = pair
        .zeta
        .kron(&ExactMatrix::identity(h.field(), d))?
        .compose(&h.sigma_ca()?)?
        .compose(&pair.eta.kron(&ExactMatrix::identity(h.field(), d))?)?;
    let idh = ExactMatrix::identity(h.field(), d);
    let x = eta_zeta.kron(&idh)?;
    let y = through.kron(&idh)?;
    let s_ass = sigma_ass(&h.mu, &h.nu)?;
    let s_coass = sigma_coass(&h.delta, &h.eps)?;
    report.push(CheckEntry::from_comparison(
        "pre-composed",
        "(ηζ ⊗ H)σ_Ass = (ζ σ_CA η ⊗ H)σ_Ass",
        &x.compose(&s_ass)?.compare_columns(&y.compose(&s_ass)?)?,
        &[d, d],
    ));
    report.push(CheckEntry::from_comparison(
        "post-composed",
        "σ_coAss(ηζ ⊗ H) = σ_coAss(ζ σ_CA η ⊗ H)",
        &s_coass.compose(&x)?.compare_columns(&s_coass.compose(&y)?)?,
        &[d, d],
    ));
    Ok(report)
}

#[derive(Clone, Copy, Debug)]
pub enum AdjointKind<'a> {
    /// `h ⊗ h' ↦ h'₍₁₎ ⊗ S(h'₍₂₎) h h'₍₃₎`.
    Woronowicz,
    /// `h ⊗ h' ↦ h'₍₂₎ ⊗ h S(h'₍₁₎) h'₍₃₎`.
    WoronowiczPrime,
    /// `h ⊗ h' ↦ ζ(h'₍₃₎) h'₍₁₎ ⊗ S(h'₍₂₎) h h'₍₄₎`.
    Hennings(&'a HopfCharacterPair),
    /// `h ⊗ h' ↦ h'₍₂₎ ⊗ h S(h'₍₁₎) η h'₍₃₎`.
    HenningsPrime(&'a HopfCharacterPair),
}

/// The braiding on `H ⊗ H` of the given kind. The pair must satisfy the
/// strict or both weakened character conditions, and the result is checked
/// against the Yang-Baxter equation before it is returned.
pub fn adjoint_braiding(h: &FinHopfAlgebra, kind: AdjointKind<'_>) -> Result<ExactMatrix> {
    let (d, mode) = (h.dim(), h.mode());
    let [mu, _, delta, _, s] = h.maps();
    let c = Map::flip(mode, d, d);
    if let AdjointKind::Hennings(pair) | AdjointKind::HenningsPrime(pair) = kind {
        let report = check_yd_character(h, pair)?;
        let strict = !report.fails("strict");
        if !strict && (report.fails("pre-composed") || report.fails("post-composed")) {
            return Err(Error::law(report));
        }
    }
    let delta2 = |p: Pipeline| -> Result<Pipeline> {
        p.then_tensor(&[Factor::Id(d), Factor::Map(&delta)])?
            .then_tensor(&[Factor::Id(d), Factor::Map(&delta), Factor::Id(d)])
    };
    let mu2 = |p: Pipeline| -> Result<Pipeline> {
        p.then_tensor(&[Factor::Id(d), Factor::Map(&mu), Factor::Id(d)])?
            .then_tensor(&[Factor::Id(d), Factor::Map(&mu)])
    };
    let first = |p: Pipeline| -> Result<Pipeline> {
        p.then_tensor(&[Factor::Map(&c), Factor::Map(&s), Factor::Id(d)])?
            .then_tensor(&[Factor::Id(d), Factor::Map(&c), Factor::Id(d)])
    };
    let prime = |p: Pipeline| -> Result<Pipeline> {
        p.then_tensor(&[Factor::Id(d), Factor::Map(&c), Factor::Id(d)])?
            .then_tensor(&[Factor::Map(&c), Factor::Map(&s), Factor::Id(d)])
    };
    let start = Pipeline::new(mode, d * d);
    let p = match kind {
        AdjointKind::Woronowicz => mu2(first(delta2(start)?)?)?,
        AdjointKind::WoronowiczPrime => mu2(prime(delta2(start)?)?)?,
        AdjointKind::Hennings(pair) => {
            let zeta_side = Map::Linear(
                pair.zeta
                    .kron(&ExactMatrix::identity(h.field(), d))?
                    .compose(&h.delta)?,
            );
            let p = delta2(start)?.then_tensor(&[Factor::Id(d * d * d), Factor::Map(&zeta_side)])?;
            mu2(first(p)?)?
        }
        AdjointKind::HenningsPrime(pair) => {
            let eta_side = Map::Linear(h.mu.compose(&pair.eta.kron(&ExactMatrix::identity(h.field(), d))?)?);
            let p = prime(delta2(start)?)?.then_tensor(&[Factor::Id(d * d * d), Factor::Map(&eta_side)])?;
            mu2(p)?
        }
    };
    let sigma = p.materialize().as_linear().expect("linear").clone();
    let sys = BraidedSystem::rank1(d, Map::Linear(sigma.clone()))?;
    require(check_cybe(&sys))?;
    Ok(sigma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::ExactMatrix;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn group_algebras_are_hopf() {
        for (_, g) in FiniteGroup::small_groups().into_iter().take(8) {
            assert!(check_hopf(&group_algebra(&g, Q)).passed());
            assert!(check_hopf(&dual_group_algebra(&g, Q)).passed());
        }
        let f7 = FieldSpec::prime(7).unwrap();
        assert!(check_hopf(&group_algebra(&FiniteGroup::cyclic(3), f7)).passed());
    }

    #[test]
    fn antipode_of_z3_squares_generator() {
        let h = group_algebra(&FiniteGroup::cyclic(3), Q);
        assert!(h.antipode().get(2, 1).is_one());
        assert!(h.antipode().get(0, 0).is_one());
    }

    #[test]
    fn dual_of_z2_coproduct() {
        let h = dual_group_algebra(&FiniteGroup::cyclic(2), Q);
        let col: Vec<_> = h.delta().column_sparse(0).into_iter().map(|(r, _)| r).collect();
        assert_eq!(col, alloc::vec![0, 3]);
    }

    #[test]
    fn broken_antipode_is_reported() {
        let h = group_algebra(&FiniteGroup::cyclic(3), Q);
        let err = FinHopfAlgebra::new(
            h.mu().clone(),
            h.nu().clone(),
            h.delta().clone(),
            h.eps().clone(),
            ExactMatrix::identity(Q, 3),
        )
        .unwrap_err();
        match err {
            Error::LawViolation(r) => assert!(r.fails("antipode")),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn hopf_system_satisfies_cybe() {
        let h = group_algebra(&FiniteGroup::symmetric(3), Q);
        assert!(check_cybe(&h.system().unwrap()).passed());
        let h = dual_group_algebra(&FiniteGroup::cyclic(3), Q);
        assert!(check_cybe(&h.system().unwrap()).passed());
    }

    #[test]
    fn woronowicz_on_z2_is_flip() {
        let h = group_algebra(&FiniteGroup::cyclic(2), Q);
        let s = adjoint_braiding(&h, AdjointKind::Woronowicz).unwrap();
        assert_eq!(s, ExactMatrix::flip(Q, 2, 2));
    }

    #[test]
    fn nontrivial_grouplike_pair_on_z2() {
        let h = group_algebra(&FiniteGroup::cyclic(2), Q);
        let pair = HopfCharacterPair::on_group_algebra(&h, alloc::vec![Q.one(), Q.one()], 1).unwrap();
        let report = check_yd_character(&h, &pair).unwrap();
        assert!(!report.fails("pre-composed"));
        assert!(!report.fails("post-composed"));
    }

    #[test]
    fn non_multiplicative_character_rejected() {
        let h = group_algebra(&FiniteGroup::cyclic(2), Q);
        let err = HopfCharacterPair::on_group_algebra(&h, alloc::vec![Q.one(), Q.from_i64(2)], 0);
        assert!(matches!(err, Err(Error::LawViolation(_))));
    }
}
