//! Shelf crossed modules `(R, S, π, ·)` and their standard constructions.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{require, Error, Result};
use crate::group::GroupCrossedModule;
use crate::report::{CheckEntry, Report};
use crate::setfn::SetFn;
use crate::shelf::{
    automorphism_group, check_rack, check_shelf_action, check_shelf_morphism, Automorphisms, Magma,
    Rack, Shelf, ShelfAction, StandardShelf,
};

/// `R` and `S` shelves, `π : R → S`, and an action `r · s` of `S` on `R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShelfCrossedModule {
    r: Shelf,
    s: Shelf,
    pi: SetFn,
    action: ShelfAction,
}

impl ShelfCrossedModule {
    /// Shape-checked constructor; `action[r][s] = r · s`.
    pub fn new(r: Shelf, s: Shelf, pi: Vec<usize>, action: &[Vec<usize>]) -> Result<Self> {
        let pi = SetFn::new(pi, s.size())?;
        if pi.dom() != r.size() {
            return Err(Error::dims("crossed module map", r.size(), pi.dom()));
        }
        if action.len() != r.size() {
            return Err(Error::dims("action table rows", r.size(), action.len()));
        }
        let action = ShelfAction::new(s.clone(), action)?;
        Ok(ShelfCrossedModule { r, s, pi, action })
    }

    pub fn checked(r: Shelf, s: Shelf, pi: Vec<usize>, action: &[Vec<usize>], rack_mode: bool) -> Result<Self> {
        let x = Self::new(r, s, pi, action)?;
        require(check_shelf_crossed_module(&x, rack_mode))?;
        Ok(x)
    }

    pub fn r(&self) -> &Shelf {
        &self.r
    }

    pub fn s(&self) -> &Shelf {
        &self.s
    }

    pub fn pi(&self, r: usize) -> usize {
        self.pi.apply(r)
    }

    pub fn pi_map(&self) -> &SetFn {
        &self.pi
    }

    /// `r · s`.
    pub fn act(&self, r: usize, s: usize) -> usize {
        self.action.act(r, s)
    }

    pub fn action(&self) -> &ShelfAction {
        &self.action
    }

    /// Elements `r₀` with `r₀ · s = r₀` for every `s`.
    pub fn invariant_elements(&self) -> Vec<usize> {
        (0..self.r.size())
            .filter(|&r| (0..self.s.size()).all(|s| self.act(r, s) == r))
            .collect()
    }

    pub fn is_rack_module(&self) -> bool {
        check_shelf_crossed_module(self, true).passed()
    }
}

pub fn check_shelf_crossed_module(x: &ShelfCrossedModule, rack_mode: bool) -> Report {
    let (r, s) = (&x.r, &x.s);
    let mut report = Report::new();

    report.extend(
        check_shelf_morphism(&x.pi, r, s)
            .expect("shapes validated at construction")
            .prefixed("pi"),
    );
    report.extend(check_shelf_action(&x.action));

    let mut bad = Vec::new();
    for a in 0..r.size() {
        for b in 0..r.size() {
            for t in 0..s.size() {
                if x.act(r.op(a, b), t) != r.op(x.act(a, t), x.act(b, t)) {
                    bad.push(vec![a, b, t]);
                }
            }
        }
    }
    report.push(CheckEntry::from_violations(
        "action-by-shelf-morphisms",
        "(r ◁ r') · s = (r · s) ◁ (r' · s)",
        &bad,
    ));

    let mut bad = Vec::new();
    for a in 0..r.size() {
        for b in 0..r.size() {
            if x.act(a, x.pi(b)) != r.op(a, b) {
                bad.push(vec![a, b]);
            }
        }
    }
    report.push(CheckEntry::from_violations(
        "induced-operation",
        "r · π(r') = r ◁ r'",
        &bad,
    ));

    let mut bad = Vec::new();
    for a in 0..r.size() {
        for t in 0..s.size() {
            if x.pi(x.act(a, t)) != s.op(x.pi(a), t) {
                bad.push(vec![a, t]);
            }
        }
    }
    report.push(CheckEntry::from_violations(
        "pi-equivariance",
        "π(r · s) = π(r) ◁ s",
        &bad,
    ));

    if rack_mode {
        report.extend(check_rack(r).0.prefixed("r"));
        report.extend(check_rack(s).0.prefixed("s"));
        let bad: Vec<Vec<usize>> = (0..s.size())
            .filter(|&t| !SetFn::from_fn(r.size(), r.size(), |a| x.act(a, t)).expect("in range").is_bijective())
            .map(|t| vec![t])
            .collect();
        report.push(CheckEntry::from_violations(
            "action-bijective",
            "r ↦ r · s is bijective",
            &bad,
        ));
    }
    report
}

/// An `S`-set `R` with an equivariant map `π : R → S`, `π(r · s) = π(r) ◁ s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AugmentedShelf {
    pub s: Shelf,
    pub action: ShelfAction,
    pub pi: SetFn,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StandardCrossedModule {
    /// `(S, S, Id, ◁)`.
    Adjoint(Shelf),
    /// `(Conj K, Conj G, π, ·)` from a group crossed module.
    FromGroup(GroupCrossedModule),
    /// `(R, Conj Aut R, r ↦ t_r, evaluation)` for a rack `R`.
    AutAugmented(Rack),
    /// `R` with the operation `r ◁ r' = r · π(r')` induced from an augmented shelf.
    Induced(AugmentedShelf),
}

pub fn standard_crossed_module(kind: &StandardCrossedModule) -> Result<ShelfCrossedModule> {
    match kind {
        StandardCrossedModule::Adjoint(s) => Ok(adjoint(s)),
        StandardCrossedModule::FromGroup(x) => from_group(x),
        StandardCrossedModule::AutAugmented(r) => Ok(aut_augmented(r, 8)?.0),
        StandardCrossedModule::Induced(a) => induced(a),
    }
}

pub fn adjoint(s: &Shelf) -> ShelfCrossedModule {
    ShelfCrossedModule::new(s.clone(), s.clone(), (0..s.size()).collect(), &s.rows())
        .expect("well-shaped")
}

pub fn from_group(x: &GroupCrossedModule) -> Result<ShelfCrossedModule> {
    let r = crate::shelf::standard_shelf(&StandardShelf::Conjugation(x.k().clone()))?;
    let s = crate::shelf::standard_shelf(&StandardShelf::Conjugation(x.g().clone()))?;
    ShelfCrossedModule::new(r, s, x.pi_table().to_vec(), &x.action_rows())
}

/// Returns the crossed module together with the automorphism enumeration,
/// whose group indexes the elements of `S`.
pub fn aut_augmented(rack: &Rack, limit: usize) -> Result<(ShelfCrossedModule, Automorphisms)> {
    let r = rack.shelf();
    let aut = automorphism_group(r, limit)?;
    let s = crate::shelf::standard_shelf(&StandardShelf::Conjugation(aut.group.clone()))?;
    let pi = (0..r.size())
        .map(|b| {
            let t: Vec<usize> = (0..r.size()).map(|a| r.op(a, b)).collect();
            aut.index_of(&t).expect("translations of a rack are automorphisms")
        })
        .collect();
    let action: Vec<Vec<usize>> = (0..r.size())
        .map(|a| aut.perms.iter().map(|p| p[a]).collect())
        .collect();
    Ok((ShelfCrossedModule::new(r.clone(), s, pi, &action)?, aut))
}

pub fn induced(a: &AugmentedShelf) -> Result<ShelfCrossedModule> {
    let n = a.action.set_size();
    if a.pi.dom() != n || a.pi.cod() != a.s.size() {
        return Err(Error::dims("augmentation map", n, a.pi.dom()));
    }
    require(check_shelf_action(&a.action))?;
    let magma = Magma::from_fn(n, |x, y| a.action.act(x, a.pi.apply(y)))?;
    let r = Shelf::try_from(magma)?;
    ShelfCrossedModule::new(r, a.s.clone(), a.pi.table().to_vec(), &a.action.rows())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::shelf::standard_shelf;

    fn d3() -> Shelf {
        standard_shelf(&StandardShelf::Dihedral(3)).unwrap()
    }

    #[test]
    fn adjoint_dihedral_is_a_rack_module() {
        let x = adjoint(&d3());
        assert!(check_shelf_crossed_module(&x, true).passed());
        assert!(x.invariant_elements().is_empty());
    }

    #[test]
    fn corrupted_map_breaks_equivariance() {
        let s = d3();
        let x = ShelfCrossedModule::new(s.clone(), s.clone(), vec![1, 0, 2], &s.rows()).unwrap();
        let report = check_shelf_crossed_module(&x, false);
        assert!(report.fails("pi-equivariance"));
    }

    #[test]
    fn group_crossed_modules_give_rack_modules() {
        for (name, g) in FiniteGroup::small_groups() {
            let x = from_group(&GroupCrossedModule::identity(&g)).unwrap();
            assert!(check_shelf_crossed_module(&x, true).passed(), "{name}");
        }
    }

    #[test]
    fn aut_augmented_recovers_operation() {
        let rack: Rack = d3().try_into().unwrap();
        let (x, aut) = aut_augmented(&rack, 8).unwrap();
        assert_eq!(aut.group.size(), 6);
        assert!(check_shelf_crossed_module(&x, true).passed());
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(x.act(a, x.pi(b)), rack.shelf().op(a, b));
            }
        }
    }

    #[test]
    fn induced_from_group_action() {
        // Z/3 acting on itself by translation, augmented over the trivial-action
        // projection shelf on one point.
        let s = standard_shelf(&StandardShelf::Projection(1)).unwrap();
        let action = ShelfAction::new(s.clone(), &[vec![0], vec![1], vec![2]]).unwrap();
        let pi = SetFn::new(vec![0, 0, 0], 1).unwrap();
        let x = induced(&AugmentedShelf { s, action, pi }).unwrap();
        assert!(check_shelf_crossed_module(&x, false).passed());
        assert!(x.r().rows().iter().enumerate().all(|(a, row)| row.iter().all(|&v| v == a)));
    }

    #[test]
    fn projection_shelf_invariants() {
        let p = standard_shelf(&StandardShelf::Projection(4)).unwrap();
        assert_eq!(adjoint(&p).invariant_elements().len(), 4);
        let c3 = standard_shelf(&StandardShelf::CyclicMod(3)).unwrap();
        assert!(adjoint(&c3).invariant_elements().is_empty());
        let conj = standard_shelf(&StandardShelf::Conjugation(FiniteGroup::symmetric(3))).unwrap();
        assert_eq!(adjoint(&conj).invariant_elements(), vec![0]);
    }
}
